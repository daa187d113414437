"""
модуль с критериями сепарабельности:
частичное транспонирование (отрицательность), перестановка (realignment)
и критерий редукции, нарушение которого гарантирует дистиллируемость
"""

import logging

from matkit import CMatrix, hermitian_eigenvalues, identity, kron, trace_norm
from qstate import DensityMatrix, Subsystem, ensure_valid, partial_trace, partial_transpose, realign

logger = logging.getLogger(__name__)

# всё, что меньше, считаем шумом собственного решателя
CLAMP_TOL = 1e-12


def min_pt_eigenvalue(rho: DensityMatrix, on: Subsystem = Subsystem.B) -> float:
    """минимальное собственное значение ρ^PT"""
    return float(hermitian_eigenvalues(partial_transpose(rho, on))[0])


def negativity(rho: DensityMatrix, on: Subsystem = Subsystem.B) -> float:
    """
    отрицательность N(ρ) = (||ρ^PT||_tr - 1) / 2

    считается как модуль суммы отрицательных собственных значений ρ^PT

    Args:
        rho: матрица плотности
        on: транспонируемая подсистема (на результат не влияет)

    Returns:
        float: N(ρ) >= 0
    """
    eigenvalues = hermitian_eigenvalues(partial_transpose(rho, on))
    value = float(-eigenvalues.clamp(max=0.0).sum())
    return value if value > CLAMP_TOL else 0.0


def realignment_negativity(rho: DensityMatrix) -> float:
    """N_R(ρ) = max(0, (||R(ρ)||_tr - 1) / 2)"""
    value = (trace_norm(realign(rho)) - 1.0) / 2.0
    return max(0.0, value)


def reduction_matrices(rho: DensityMatrix) -> tuple[CMatrix, CMatrix]:
    """
    матрицы критерия редукции

    Args:
        rho: матрица плотности

    Returns:
        tuple: (ρ_A ⊗ I - ρ, I ⊗ ρ_B - ρ), обе эрмитовы со следом dim - 1
    """
    ensure_valid(rho)
    rho_a = partial_trace(rho, Subsystem.A)
    rho_b = partial_trace(rho, Subsystem.B)
    left = kron(rho_a, identity(rho.dim_b)) - rho.mat
    right = kron(identity(rho.dim_a), rho_b) - rho.mat
    return left, right


def reduction_negativity_sides(rho: DensityMatrix) -> tuple[float, float]:
    """
    отрицательность редукции для каждой из двух матриц критерия

    Returns:
        tuple: (N_red по стороне A, N_red по стороне B)
    """
    left, right = reduction_matrices(rho)
    sides = []
    for mat in (left, right):
        lowest = float(hermitian_eigenvalues(mat)[0])
        sides.append(-lowest if -lowest > CLAMP_TOL else 0.0)
    return sides[0], sides[1]


def reduction_negativity(rho: DensityMatrix) -> float:
    """
    N_red(ρ) = max(0, -λ_min), минимум по спектрам обеих матриц редукции

    положительное значение означает, что состояние дистиллируемо

    Args:
        rho: матрица плотности

    Returns:
        float: N_red >= 0
    """
    return max(reduction_negativity_sides(rho))

