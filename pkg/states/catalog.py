"""
каталог начальных состояний: семейство ρ_α со связанной запутанностью,
его составляющие Ψ0, P+, P-, диагональные (сепарабельные) и базисные состояния
"""

import logging
from fractions import Fraction

import torch

from matkit import DTYPE, kron
from qstate import DensityMatrix

logger = logging.getLogger(__name__)

DIM = 3

# окно α, в котором ρ_α PPT и при этом запутано
ALPHA_MIN = 3.0
ALPHA_MAX = 4.0

# составные индексы (с единицы) проекторов, входящих в P+ и P-
P_PLUS_INDICES = (2, 6, 7)  # |1_A 2_B>, |2_A 3_B>, |3_A 1_B>
P_MINUS_INDICES = (4, 8, 3)  # |2_A 1_B>, |3_A 2_B>, |1_A 3_B>
PSI0_INDICES = (1, 5, 9)


class StateCatalogError(Exception):
    """базовое исключение каталога состояний"""


class AlphaOutOfRangeError(StateCatalogError):
    """α вне окна (3, 4]"""


class BadProbabilityVectorError(StateCatalogError):
    """вектор вероятностей отрицателен или не нормирован"""


class UnknownStateError(StateCatalogError):
    """имя состояния не найдено в каталоге"""


def _diag(values: list[float]) -> DensityMatrix:
    return DensityMatrix(torch.diag(torch.tensor(values, dtype=DTYPE)))


def psi0() -> DensityMatrix:
    """проектор на максимально запутанный вектор (1/√3) Σ |j_A>⊗|j_B>"""
    mat = torch.zeros((DIM * DIM, DIM * DIM), dtype=DTYPE)
    for k in PSI0_INDICES:
        for l in PSI0_INDICES:
            mat[k - 1, l - 1] = 1.0 / 3.0
    return DensityMatrix(mat)


def _uniform_over(indices: tuple[int, ...]) -> DensityMatrix:
    values = [0.0] * (DIM * DIM)
    for k in indices:
        values[k - 1] = 1.0 / len(indices)
    return _diag(values)


def p_plus() -> DensityMatrix:
    return _uniform_over(P_PLUS_INDICES)


def p_minus() -> DensityMatrix:
    return _uniform_over(P_MINUS_INDICES)


def horodecki_alpha_unchecked(alpha: float) -> DensityMatrix:
    """
    ρ_α = (2/7)|Ψ0><Ψ0| + (α/7) P+ + ((5 - α)/7) P- без проверки окна α

    при α вне [0, 5] результат не является состоянием, для сканов вне (3, 4]
    проверка остаётся на вызывающей стороне
    """
    mat = (2.0 / 7.0) * psi0().mat + (alpha / 7.0) * p_plus().mat + ((5.0 - alpha) / 7.0) * p_minus().mat
    return DensityMatrix(mat)


def horodecki_alpha(alpha: float) -> DensityMatrix:
    """
    состояние семейства ρ_α в окне связанной запутанности

    Args:
        alpha: параметр смеси, 3 < α <= 4

    Returns:
        DensityMatrix: ρ_α

    Raises:
        AlphaOutOfRangeError: если α вне (3, 4]
    """
    if not ALPHA_MIN < alpha <= ALPHA_MAX:
        raise AlphaOutOfRangeError(f"α = {alpha} вне окна ({ALPHA_MIN}, {ALPHA_MAX}]")
    return horodecki_alpha_unchecked(alpha)


def horodecki_alpha_exact(alpha: Fraction) -> list[list[Fraction]]:
    """
    ρ_α в рациональной арифметике (элементы - Fraction)

    Args:
        alpha: рациональный параметр α

    Returns:
        list[list[Fraction]]: 9x9 матрица, индексация с нуля
    """
    n = DIM * DIM
    rows = [[Fraction(0)] * n for _ in range(n)]
    for k in PSI0_INDICES:
        for l in PSI0_INDICES:
            rows[k - 1][l - 1] = Fraction(2, 21)
    for k in P_PLUS_INDICES:
        rows[k - 1][k - 1] = alpha / 21
    for k in P_MINUS_INDICES:
        rows[k - 1][k - 1] = (5 - alpha) / 21
    return rows


def diagonal_state(p: list[float]) -> DensityMatrix:
    """
    диагональная (сепарабельная) матрица плотности

    Args:
        p: девять неотрицательных вероятностей с суммой 1

    Returns:
        DensityMatrix: diag(p)

    Raises:
        BadProbabilityVectorError: если вектор не является распределением
    """
    if len(p) != DIM * DIM:
        raise BadProbabilityVectorError(f"ожидалось {DIM * DIM} вероятностей, получено {len(p)}")
    if any(v < 0 for v in p):
        raise BadProbabilityVectorError("вероятности должны быть неотрицательными")
    if abs(sum(p) - 1.0) > 1e-12:
        raise BadProbabilityVectorError(f"сумма вероятностей {sum(p)} != 1")
    return _diag([float(v) for v in p])


def basis_state(k: int) -> DensityMatrix:
    """проектор на базисный вектор номер k (1..9); k = 9 - основное состояние |3_A 3_B>"""
    if not 1 <= k <= DIM * DIM:
        raise UnknownStateError(f"базисного состояния {k} нет, допустимо 1..{DIM * DIM}")
    values = [0.0] * (DIM * DIM)
    values[k - 1] = 1.0
    return _diag(values)


def maximally_mixed() -> DensityMatrix:
    return _diag([1.0 / (DIM * DIM)] * (DIM * DIM))


def product_state(sigma_a: torch.Tensor, sigma_b: torch.Tensor) -> DensityMatrix:
    """σ_A ⊗ σ_B"""
    return DensityMatrix(kron(sigma_a.to(DTYPE), sigma_b.to(DTYPE)))


def random_state(seed: int, rank: int = DIM * DIM) -> DensityMatrix:
    """
    случайное состояние заданного ранга (конструкция Жинибра G G† / tr)

    Args:
        seed: зерно генератора
        rank: ранг состояния

    Returns:
        DensityMatrix: случайная матрица плотности
    """
    generator = torch.Generator().manual_seed(seed)
    n = DIM * DIM
    real = torch.randn((n, rank), generator=generator, dtype=torch.float64)
    imag = torch.randn((n, rank), generator=generator, dtype=torch.float64)
    g = torch.complex(real, imag)
    mat = g @ g.conj().T
    mat = mat / torch.trace(mat)
    return DensityMatrix((mat + mat.conj().T) / 2)
