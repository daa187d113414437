"""
Пакет модели двухкутритного (3x3) состояния и его структурных преобразований
"""

from qstate.density import (
    DensityMatrix,
    InvalidStateError,
    StateDiagnostics,
    StateViolation,
    Subsystem,
    ensure_valid,
    fidelity_with_pure,
    partial_trace,
    partial_transpose,
    realign,
    validate,
)
from qstate.serialization import dump_state, load_state
