"""
обработчик команды evolve: один прогон из начального состояния каталога,
CSV траектории, дампы состояний, график и моменты t_N, t_D в stdout
"""

import argparse
import logging
from pathlib import Path

from config.configurations import load_config
from dynamics import Trajectory, birth_times, couplings, evolve, parse_model
from entanglement import CSV_HEADER
from handlers.common import EXIT_OK, ScenarioConfig, guarded, load_scenario
from states import resolve_state
from utils.output import dump_states, ensure_dir, format_number, write_csv
from utils.plotting import plot_csv

logger = logging.getLogger(__name__)

POPULATION_COLUMNS = [f"p{k}" for k in range(1, 10)]
TRAJECTORY_HEADER = CSV_HEADER + POPULATION_COLUMNS


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("evolve", help="прогон динамики из начального состояния")
    parser.add_argument("--config", help="файл сценария key=value")
    parser.add_argument("--state", dest="initial_state", help="начальное состояние, например horodecki:α=3.6")
    parser.add_argument("--model", help="модель связи: independent, ideal[:omega=Ω], geometric:R=<R/λ>, custom:...")
    parser.add_argument("--tend", dest="t_end", type=float, help="длительность в единицах 1/γ")
    parser.add_argument("--dt", type=float, help="шаг RK4")
    parser.add_argument("--sample-every", dest="sample_every", type=int, help="шагов между отсчётами")
    parser.add_argument("--outputs", help="что писать: csv,states,plot")
    parser.add_argument("--out", dest="out_path", help="директория результатов")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    keys = ("initial_state", "model", "t_end", "dt", "sample_every", "outputs", "out_path")
    return cmd_evolve_from(args.config, {key: getattr(args, key) for key in keys})


@guarded
def cmd_evolve_from(path: str | None, overrides: dict) -> int:
    return cmd_evolve(load_scenario(path, overrides))


def trajectory_rows(traj: Trajectory, digits: int) -> list[list[str]]:
    """строки CSV траектории: столбцы отчёта и населённости p1..p9"""
    traj.attach_reports()
    rows = []
    for t, rho, report in zip(traj.times, traj.states, traj.reports):
        populations = [format_number(rho.population(k), digits) for k in range(1, 10)]
        rows.append(report.csv_row(t, digits) + populations)
    return rows


def print_birth_times(t_n: float | None, t_d: float | None) -> None:
    print(f"tN_gamma={'none' if t_n is None else format(t_n, '.6g')}")
    print(f"tD_gamma={'none' if t_d is None else format(t_d, '.6g')}")


@guarded
def cmd_evolve(cfg: ScenarioConfig) -> int:
    """
    прогон сценария

    Args:
        cfg: конфигурация прогона

    Returns:
        int: код возврата (0, 1 - конфигурация, 2 - интегрирование, 3 - ввод/вывод)
    """
    digits = load_config().output.csv_digits
    rho0 = resolve_state(cfg.initial_state)
    c = couplings(parse_model(cfg.model))
    logger.info("evolve: состояние %s, модель %s, tend = %s", cfg.initial_state, cfg.model, cfg.t_end)

    traj = evolve(rho0, c, cfg.t_end, cfg.dt, cfg.sample_every)
    rows = trajectory_rows(traj, digits)
    events = birth_times(traj, c, cfg.dt)

    out = ensure_dir(cfg.out_path)
    if "csv" in cfg.outputs or "plot" in cfg.outputs:
        csv_path = write_csv(out / "trajectory.csv", TRAJECTORY_HEADER, rows)
        if "plot" in cfg.outputs:
            plot_csv(csv_path, out / "trajectory.svg", ["N", "NR", "Nred"], title=cfg.initial_state)
    if "states" in cfg.outputs:
        count = dump_states(Path(out) / "states", traj.times, traj.states)
        logger.info("сохранено состояний: %s", count)

    print_birth_times(events.t_n, events.t_d)
    return EXIT_OK
