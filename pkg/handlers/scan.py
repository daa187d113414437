"""
обработчик команды scan: t_N и t_D на сетке (α, R/λ)
"""

import argparse
import logging

from config.configurations import ConfigError, load_config
from handlers.common import EXIT_OK, guarded, parse_grid
from states import ALPHA_MAX, ALPHA_MIN
from utils.output import ensure_dir, format_number, write_csv
from workers import SCAN_HEADER, ScanCell, ScanPool, ScanRow

logger = logging.getLogger(__name__)

DEFAULT_T_END = 3.0


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("scan", help="сетка (α, R/λ) -> t_N, t_D")
    parser.add_argument("--alpha", default="3.6", help="значения α: 3.6, 3.2,3.6 или 3.1:4.0:10")
    parser.add_argument("--r", dest="r_values", default="0.2", help="значения R/λ в том же формате")
    parser.add_argument("--tend", dest="t_end", type=float, default=DEFAULT_T_END)
    parser.add_argument("--dt", type=float)
    parser.add_argument("--sample-every", dest="sample_every", type=int)
    parser.add_argument("--workers", type=int)
    parser.add_argument("--out", dest="out_path")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    return cmd_scan_from(args)


@guarded
def cmd_scan_from(args: argparse.Namespace) -> int:
    return cmd_scan(
        parse_grid(args.alpha),
        parse_grid(args.r_values),
        t_end=args.t_end,
        dt=args.dt,
        sample_every=args.sample_every,
        workers=args.workers,
        out_path=args.out_path,
    )


def scan_row(row: ScanRow, digits: int) -> list[str]:
    numbers = [row.alpha, row.r_over_lambda, row.t_n, row.t_d, row.peak_n, row.peak_nred, row.final_n]
    return [format_number(v, digits) for v in numbers] + [row.status]


@guarded
def cmd_scan(
    alphas: list[float],
    r_values: list[float],
    t_end: float = DEFAULT_T_END,
    dt: float | None = None,
    sample_every: int | None = None,
    workers: int | None = None,
    out_path: str | None = None,
) -> int:
    """
    считает сетку и пишет scan.csv, по строке на точку в порядке (α, R)

    Args:
        alphas: значения α в (3, 4]
        r_values: значения R/λ > 0
        t_end: длительность прогона
        dt: шаг RK4
        sample_every: шагов между отсчётами
        workers: число процессов (по умолчанию из конфигурации)
        out_path: директория результатов

    Returns:
        int: код возврата
    """
    settings = load_config()
    bad_alpha = [a for a in alphas if not ALPHA_MIN < a <= ALPHA_MAX]
    bad_r = [r for r in r_values if r <= 0]
    if bad_alpha or bad_r:
        raise ConfigError(f"значения вне области: α {bad_alpha}, R/λ {bad_r}")
    if t_end <= 0:
        raise ConfigError(f"tend = {t_end} должно быть положительным")

    cells = [
        ScanCell(
            alpha=alpha,
            r_over_lambda=r,
            t_end=t_end,
            dt=settings.integration.dt if dt is None else dt,
            sample_every=settings.integration.sample_every if sample_every is None else sample_every,
        )
        for alpha in alphas
        for r in r_values
    ]
    pool = ScanPool(workers or settings.runtime.workers, settings.runtime.torch_threads)
    rows = pool.run(cells)

    failed = sum(row.status != "ok" for row in rows)
    if failed:
        logger.warning("ячеек с ошибкой: %s из %s", failed, len(rows))
    out = ensure_dir(out_path or settings.output.out_dir)
    digits = settings.output.csv_digits
    path = write_csv(out / "scan.csv", SCAN_HEADER, (scan_row(row, digits) for row in rows))
    print(f"scan_csv={path}")
    return EXIT_OK
