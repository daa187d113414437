"""
Пакет динамики пары трёхуровневых атомов в общем вакууме
"""

from dynamics.couplings import (
    BadCouplingsError,
    BadGeometryError,
    CouplingKind,
    CouplingModel,
    CouplingParams,
    DynamicsError,
    GEOMETRIES,
    ModelSpecError,
    axial_coefficients,
    couplings,
    damping_matrix,
    geometric_coefficients,
    parse_model,
)
from dynamics.generator import MasterEquation, hamiltonian, liouvillian, superoperator, transition_operator
from dynamics.integrator import StepTooLargeError, Trajectory, evolve, propagate, rk4_propagator
from dynamics.events import BirthTimes, RefinementStallError, birth_times, detect_sign_change, factor_h
