"""
Пакет асимптотических состояний в режиме сильной корреляции (R -> 0)
"""

from asymptotics.stationary import (
    AsymptoticParams,
    AsymptoticsError,
    NotAStateError,
    OutOfDomainError,
    asymptotic_negativity_diagonal,
    asymptotic_params,
    asymptotic_params_exact,
    build_asymptotic_state,
    reduction_matrix_closed_form,
    reduction_negativity_closed_form,
    stationarity_residual,
)
