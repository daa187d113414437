"""
Пакет каталога начальных состояний пары атомов
"""

from states.catalog import (
    ALPHA_MAX,
    ALPHA_MIN,
    AlphaOutOfRangeError,
    BadProbabilityVectorError,
    StateCatalogError,
    UnknownStateError,
    basis_state,
    diagonal_state,
    horodecki_alpha,
    horodecki_alpha_exact,
    horodecki_alpha_unchecked,
    maximally_mixed,
    p_minus,
    p_plus,
    product_state,
    psi0,
    random_state,
)
from states.resolver import resolve_state
