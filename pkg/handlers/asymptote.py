"""
обработчик команды asymptote: асимптотическое состояние при R -> 0 для
начального состояния каталога и его запутанность
"""

import argparse
import logging

from asymptotics import (
    asymptotic_negativity_diagonal,
    asymptotic_params,
    build_asymptotic_state,
    reduction_negativity_closed_form,
    stationarity_residual,
)
from dynamics import CouplingKind, CouplingModel, couplings
from dynamics.couplings import DEFAULT_IDEAL_SHIFT
from entanglement import analyze
from handlers.common import EXIT_OK, guarded
from states import resolve_state

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("asymptote", help="асимптотическое состояние при R -> 0")
    parser.add_argument("state", help="начальное состояние, например horodecki:α=3.9")
    parser.add_argument("--omega", type=float, default=DEFAULT_IDEAL_SHIFT, help="сдвиг Ω для проверки стационарности")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    return cmd_asymptote(args.state, args.omega)


def _fmt(value) -> str:
    if isinstance(value, complex):
        return f"{value.real:.12g}{value.imag:+.12g}j"
    return f"{value:.12g}"


@guarded
def cmd_asymptote(initial_state: str, shift: float = DEFAULT_IDEAL_SHIFT) -> int:
    """
    печатает x, y, z, w, v, t, отрицательность, отрицательность редукции и вердикт

    Args:
        initial_state: имя состояния в каталоге
        shift: сдвиг Ω, с которым проверяется стационарность

    Returns:
        int: код возврата
    """
    params = asymptotic_params(resolve_state(initial_state))
    report = analyze(build_asymptotic_state(params))
    residual = stationarity_residual(params, couplings(CouplingModel(CouplingKind.IDEAL_SMALL_R, shift=shift)))

    for name in ("x", "y", "z", "w", "v", "t"):
        print(f"{name}={_fmt(getattr(params, name))}")
    print(f"N={_fmt(report.negativity)}")
    if params.is_diagonal_class:
        print(f"N_closed_form={_fmt(asymptotic_negativity_diagonal(params.x, params.y))}")
        print(f"Nred_closed_form={_fmt(reduction_negativity_closed_form(params.x, params.y))}")
    else:
        logger.warning("z, w, v не равны нулю: стационарность гарантирована только для диагонального класса")
    print(f"Nred={_fmt(report.reduction_negativity)}")
    print(f"isPPT={str(report.is_ppt).lower()}")
    print(f"distillable={str(report.distillable_by_reduction).lower()}")
    print(f"stationarity_residual={residual:.3e}")
    return EXIT_OK
