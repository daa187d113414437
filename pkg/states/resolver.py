"""
разбор имён состояний из командной строки:
"psi0", "pplus", "pminus", "mixed", "horodecki:α=3.6", "diag:p1,...,p9", "basis:k"
"""

import logging

from qstate import DensityMatrix
from states.catalog import (
    UnknownStateError,
    basis_state,
    diagonal_state,
    horodecki_alpha,
    maximally_mixed,
    p_minus,
    p_plus,
    psi0,
)

logger = logging.getLogger(__name__)

FIXED_STATES = {
    "psi0": psi0,
    "pplus": p_plus,
    "pminus": p_minus,
    "mixed": maximally_mixed,
}


def _parse_alpha(argument: str) -> float:
    # принимаем "α=3.6", "alpha=3.6" и просто "3.6"
    _, _, value = argument.rpartition("=")
    return float(value)


def resolve_state(name: str) -> DensityMatrix:
    """
    находит состояние каталога по имени

    Args:
        name: имя состояния в формате командной строки

    Returns:
        DensityMatrix: соответствующее состояние

    Raises:
        UnknownStateError: если имя не разобрано
        StateCatalogError: если параметры состояния недопустимы
    """
    key, _, argument = name.strip().partition(":")
    key = key.lower()
    logger.debug("разбор состояния %s", name)

    if key in FIXED_STATES and not argument:
        return FIXED_STATES[key]()
    try:
        if key == "horodecki":
            return horodecki_alpha(_parse_alpha(argument))
        if key == "diag":
            return diagonal_state([float(v) for v in argument.split(",")])
        if key == "basis":
            return basis_state(int(argument))
    except ValueError as e:
        raise UnknownStateError(f"не удалось разобрать параметры состояния {name!r}: {e}") from e
    raise UnknownStateError(f"неизвестное состояние {name!r}")
