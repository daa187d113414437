"""
модуль со скалярными множителями, по смене знака которых находятся
моменты t_N (ρ^PT перестаёт быть положительной) и t_D (нарушается критерий редукции)

формулы верны для состояний с нулевым шаблоном, который сохраняет эволюция ρ_α
без перекрёстной связи: кроме диагонали ненулевые только ρ_15, ρ_19, ρ_59, ρ_37, ρ_68
и сопряжённые к ним; индексы всюду с единицы
"""

import logging
from dataclasses import dataclass

import torch

from matkit import determinant, leading_principal_minors
from qstate import DensityMatrix, ensure_valid, partial_transpose
from entanglement.criteria import reduction_matrices

logger = logging.getLogger(__name__)

PATTERN_COHERENCES = ((1, 5), (1, 9), (5, 9), (3, 7), (6, 8))

# порядки миноров матрицы редукции, которые могут сменить знак
MINOR_ORDERS = (5, 6, 7, 8)


class PatternViolationError(Exception):
    """масса вне нулевого шаблона слишком велика для факторизаций"""


def _pattern_mask(dim: int = 9) -> torch.Tensor:
    mask = torch.eye(dim, dtype=torch.bool)
    for k, l in PATTERN_COHERENCES:
        mask[k - 1, l - 1] = True
        mask[l - 1, k - 1] = True
    return mask


def pattern_mass(rho: DensityMatrix) -> float:
    """норма Фробениуса элементов вне шаблона"""
    off = rho.mat.masked_fill(_pattern_mask(rho.dim), 0)
    return float(torch.linalg.matrix_norm(off))


def pt_factor_F(rho: DensityMatrix) -> float:
    """
    последний множитель определителя ρ^PT:
    F = ρ11 ρ55 ρ99 - ρ55 |ρ37|^2 - ρ11 |ρ86|^2

    Args:
        rho: состояние с шаблоном эволюции ρ_α

    Returns:
        float: F, его смена знака с + на - отмечает t_N
    """
    ensure_valid(rho)
    p = rho.population
    e = rho.element
    return p(1) * p(5) * p(9) - p(5) * abs(e(3, 7)) ** 2 - p(1) * abs(e(8, 6)) ** 2


def reduction_diagonal(rho: DensityMatrix) -> list[float]:
    """
    диагональ r_kk матрицы ρ_A ⊗ I - ρ:
    r_kk = (сумма ρ_ll по блоку атома A, в который входит k) - ρ_kk

    Returns:
        list[float]: [r_11, ..., r_99]
    """
    pops = [rho.population(k) for k in range(1, rho.dim + 1)]
    r = []
    for k in range(rho.dim):
        block = k // rho.dim_b
        block_sum = sum(pops[block * rho.dim_b:(block + 1) * rho.dim_b])
        r.append(block_sum - pops[k])
    return r


def reduction_factors_GH(rho: DensityMatrix) -> tuple[float, float]:
    """
    множители миноров матрицы редукции:
    G = r33 r77 - |ρ37|^2,  H = r66 r88 - |ρ68|^2

    Args:
        rho: состояние с шаблоном эволюции ρ_α

    Returns:
        tuple: (G, H), смена знака H отмечает t_D
    """
    ensure_valid(rho)
    r = reduction_diagonal(rho)
    g = r[2] * r[6] - abs(rho.element(3, 7)) ** 2
    h = r[5] * r[7] - abs(rho.element(6, 8)) ** 2
    return g, h


@dataclass
class FactorizationCheck:
    """
    сравнение прямых определителей с их факторизованными формами

    Attributes:
        det_direct: определитель ρ^PT, посчитанный напрямую (9x9)
        det_factored: произведение четырёх множителей
        det_factors: сами множители, последний из них - F
        minors_direct: миноры m5..m8 матрицы редукции напрямую
        minors_factored: те же миноры по факторизованным формулам
        reduction_pair: q15 = r11 r55 - |ρ15|^2, общий множитель миноров
        pattern_mass: масса элементов вне шаблона
    """

    det_direct: float
    det_factored: float
    det_factors: list[float]
    minors_direct: list[float]
    minors_factored: list[float]
    reduction_pair: float
    pattern_mass: float

    @property
    def det_discrepancy(self) -> float:
        return abs(self.det_direct - self.det_factored)

    @property
    def minors_discrepancy(self) -> float:
        return max(abs(a - b) for a, b in zip(self.minors_direct, self.minors_factored))


def pt_minors_and_det(rho: DensityMatrix, pattern_tol: float = 1e-8, fatal_tol: float = 1e-4) -> FactorizationCheck:
    """
    определитель ρ^PT и миноры m5..m8 матрицы редукции двумя способами

    Args:
        rho: состояние с шаблоном эволюции ρ_α
        pattern_tol: масса вне шаблона, выше которой пишем предупреждение
        fatal_tol: масса вне шаблона, выше которой факторизации не применимы

    Returns:
        FactorizationCheck: прямые и факторизованные значения

    Raises:
        PatternViolationError: если масса вне шаблона больше fatal_tol
    """
    ensure_valid(rho)
    mass = pattern_mass(rho)
    if mass > fatal_tol:
        raise PatternViolationError(f"масса вне шаблона {mass:.3e} больше {fatal_tol:.1e}")
    if mass > pattern_tol:
        logger.warning("масса вне шаблона %.3e, факторизации приближённые", mass)

    p = rho.population
    e = rho.element
    det_factors = [
        p(2) * p(4) - abs(e(1, 5)) ** 2,
        p(3) * p(7) - abs(e(1, 9)) ** 2,
        p(6) * p(8) - abs(e(5, 9)) ** 2,
        pt_factor_F(rho),
    ]
    det_factored = det_factors[0] * det_factors[1] * det_factors[2] * det_factors[3]
    det_direct = determinant(partial_transpose(rho)).real

    r = reduction_diagonal(rho)
    q15 = r[0] * r[4] - abs(e(1, 5)) ** 2
    g, h = reduction_factors_GH(rho)
    minors_factored = [
        r[1] * r[2] * r[3] * q15,
        r[1] * r[2] * r[3] * r[5] * q15,
        r[1] * r[3] * r[5] * q15 * g,
        r[1] * r[3] * q15 * g * h,
    ]
    left, _ = reduction_matrices(rho)
    minors_direct = leading_principal_minors(left, MINOR_ORDERS[-1])[MINOR_ORDERS[0] - 1:]

    return FactorizationCheck(
        det_direct=det_direct,
        det_factored=det_factored,
        det_factors=det_factors,
        minors_direct=minors_direct,
        minors_factored=minors_factored,
        reduction_pair=q15,
        pattern_mass=mass,
    )
