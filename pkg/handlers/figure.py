"""
обработчик команды figure: ряды для трёх графиков задержанного рождения
дистиллируемой запутанности (F; G и H; N, N_red и N_R) при R = 0.2λ
"""

import argparse
import logging

from config.configurations import load_config
from dynamics import CouplingKind, CouplingModel, birth_times, couplings, evolve
from handlers.common import EXIT_OK, guarded
from handlers.evolve import print_birth_times
from states import horodecki_alpha
from utils.output import ensure_dir, format_number, write_csv
from utils.plotting import plot_csv

logger = logging.getLogger(__name__)

DEFAULT_ALPHA = 3.6
DEFAULT_R_OVER_LAMBDA = 0.2
DEFAULT_T_END = 3.0

# столбец CSV -> поле EntanglementReport
REPORT_FIELDS = {
    "F": "factor_f",
    "G": "factor_g",
    "H": "factor_h",
    "N": "negativity",
    "Nred": "reduction_negativity",
    "NR": "realign_negativity",
}

FIGURES = {
    "fig1": (["F"], "множитель F"),
    "fig2": (["G", "H"], "множители G и H"),
    "fig3": (["N", "Nred", "NR"], "N, N_red и N_R"),
}


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("figure", help="ряды и график для fig1, fig2 или fig3")
    parser.add_argument("which", choices=sorted(FIGURES))
    parser.add_argument("--alpha", type=float, default=DEFAULT_ALPHA)
    parser.add_argument("--r", dest="r_over_lambda", type=float, default=DEFAULT_R_OVER_LAMBDA, help="R/λ")
    parser.add_argument("--tend", dest="t_end", type=float, default=DEFAULT_T_END)
    parser.add_argument("--dt", type=float)
    parser.add_argument("--sample-every", dest="sample_every", type=int)
    parser.add_argument("--out", dest="out_path")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    return cmd_figure(
        args.which,
        alpha=args.alpha,
        r_over_lambda=args.r_over_lambda,
        t_end=args.t_end,
        dt=args.dt,
        sample_every=args.sample_every,
        out_path=args.out_path,
    )


@guarded
def cmd_figure(
    which: str,
    alpha: float = DEFAULT_ALPHA,
    r_over_lambda: float = DEFAULT_R_OVER_LAMBDA,
    t_end: float = DEFAULT_T_END,
    dt: float | None = None,
    sample_every: int | None = None,
    out_path: str | None = None,
) -> int:
    """
    строит CSV и SVG для одного из графиков

    Args:
        which: fig1, fig2 или fig3
        alpha: параметр начального состояния ρ_α
        r_over_lambda: расстояние между атомами
        t_end: длительность в единицах 1/γ
        dt: шаг RK4
        sample_every: шагов между отсчётами
        out_path: директория результатов

    Returns:
        int: код возврата
    """
    settings = load_config()
    series, title = FIGURES[which]
    c = couplings(CouplingModel(CouplingKind.GEOMETRIC, r_over_lambda=r_over_lambda))
    logger.info("%s: α = %s, R/λ = %s", which, alpha, r_over_lambda)

    traj = evolve(horodecki_alpha(alpha), c, t_end, dt, sample_every).attach_reports()
    digits = settings.output.csv_digits
    rows = [
        [format_number(t, digits)] + [format_number(getattr(report, REPORT_FIELDS[name]), digits) for name in series]
        for t, report in zip(traj.times, traj.reports)
    ]

    out = ensure_dir(out_path or settings.output.out_dir)
    csv_path = write_csv(out / f"{which}.csv", ["t"] + series, rows)
    plot_csv(csv_path, out / f"{which}.svg", series, title=f"{title}: α = {alpha:g}, R = {r_over_lambda:g}λ")

    events = birth_times(traj, c, dt)
    print_birth_times(events.t_n, events.t_d)
    return EXIT_OK
