"""
модуль с явными формулами для асимптотического состояния при R -> 0

асимптотическое состояние определяется шестью числами (x, y, z, w, v, t),
которые линейно выражаются через элементы начального состояния; для
диагональных начальных состояний (и для всего семейства ρ_α) z = w = v = 0,
и отрицательность и матрица редукции известны в замкнутом виде
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import torch

from matkit import CMatrix, DTYPE
from qstate import DensityMatrix, InvalidStateError, ensure_valid
from dynamics import CouplingParams, liouvillian

logger = logging.getLogger(__name__)

PARAM_TOL = 1e-12


class AsymptoticsError(Exception):
    """базовое исключение пакета asymptotics"""


class NotAStateError(AsymptoticsError):
    """набор параметров не даёт положительную матрицу плотности"""


class OutOfDomainError(AsymptoticsError):
    """x, y вне области x, y >= 0, x + y <= 1/2"""


@dataclass
class AsymptoticParams:
    """
    параметры асимптотического состояния

    для рациональной проверки поля могут быть Fraction

    Attributes:
        x: вес антисимметричного состояния на переходе 1-3
        y: вес антисимметричного состояния на переходе 2-3
        z: когерентность между двумя антисимметричными состояниями
        w: когерентность антисимметричного (1-3) и основного состояний
        v: когерентность антисимметричного (2-3) и основного состояний
        t: населённость основного состояния, t = 1 - 2x - 2y
    """

    x: float
    y: float
    z: complex
    w: complex
    v: complex
    t: float

    def __post_init__(self):
        if abs(self.t - (1 - 2 * self.x - 2 * self.y)) > PARAM_TOL:
            raise AsymptoticsError(f"t = {self.t} не равно 1 - 2x - 2y = {1 - 2 * self.x - 2 * self.y}")
        if self.x < -PARAM_TOL or self.y < -PARAM_TOL:
            raise AsymptoticsError(f"x = {self.x}, y = {self.y} должны быть неотрицательными")

    @classmethod
    def diagonal(cls, x: float, y: float) -> "AsymptoticParams":
        """параметры диагонального класса: z = w = v = 0"""
        return cls(x=x, y=y, z=0j, w=0j, v=0j, t=1 - 2 * x - 2 * y)

    @property
    def is_diagonal_class(self) -> bool:
        return max(abs(self.z), abs(self.w), abs(self.v)) <= PARAM_TOL


def _from_elements(e: Callable[[int, int], complex], re: Callable[[complex], float]) -> AsymptoticParams:
    x = (e(2, 2) + 2 * e(3, 3) + e(4, 4) + 2 * e(7, 7) - 2 * re(e(2, 4)) - 4 * re(e(3, 7))) / 8
    y = (e(2, 2) + e(4, 4) + 2 * e(6, 6) + 2 * e(8, 8) - 2 * re(e(2, 4)) - 4 * re(e(6, 8))) / 8
    z = (e(3, 6) - e(3, 8) - e(7, 6) + e(7, 8)) / 4
    w = (e(2, 6) + e(2, 8) + 2 * e(3, 9) - e(4, 6) - e(4, 8) - 2 * e(7, 9)) / 4
    v = (-e(2, 3) - e(2, 7) + e(4, 3) + e(4, 7) + 2 * e(6, 9) - 2 * e(8, 9)) / 4
    x, y = re(x), re(y)
    return AsymptoticParams(x=x, y=y, z=z, w=w, v=v, t=1 - 2 * x - 2 * y)


def asymptotic_params(rho0: DensityMatrix) -> AsymptoticParams:
    """
    параметры асимптотического состояния для начального состояния ρ0

    Args:
        rho0: начальное состояние

    Returns:
        AsymptoticParams: (x, y, z, w, v, t)

    Raises:
        InvalidStateError: если ρ0 не является состоянием
    """
    ensure_valid(rho0)
    return _from_elements(rho0.element, lambda value: complex(value).real)


def asymptotic_params_exact(entries: list[list[Fraction]]) -> AsymptoticParams:
    """
    те же формулы в рациональной арифметике для вещественной матрицы из Fraction

    Args:
        entries: матрица 9x9, индексация с нуля

    Returns:
        AsymptoticParams: параметры с полями Fraction
    """
    return _from_elements(lambda k, l: entries[k - 1][l - 1], lambda value: value)


def build_asymptotic_state(p: AsymptoticParams) -> DensityMatrix:
    """
    собирает асимптотическую матрицу плотности из параметров

    Args:
        p: параметры

    Returns:
        DensityMatrix: асимптотическое состояние

    Raises:
        NotAStateError: если собранная матрица не является состоянием
    """
    x, y, t = complex(p.x), complex(p.y), complex(p.t)
    z, w, v = complex(p.z), complex(p.w), complex(p.v)
    cz, cw, cv = z.conjugate(), w.conjugate(), v.conjugate()
    # строки и столбцы 3, 6, 7, 8, 9 (остальные нулевые)
    rows = {
        3: {3: x, 6: z, 7: -x, 8: -z, 9: w},
        6: {3: cz, 6: y, 7: -cz, 8: -y, 9: v},
        7: {3: -x, 6: -z, 7: x, 8: z, 9: -w},
        8: {3: -cz, 6: -y, 7: cz, 8: y, 9: -v},
        9: {3: cw, 6: cv, 7: -cw, 8: -cv, 9: t},
    }
    mat = torch.zeros((9, 9), dtype=DTYPE)
    for k, row in rows.items():
        for l, value in row.items():
            mat[k - 1, l - 1] = value
    rho = DensityMatrix(mat)
    try:
        return ensure_valid(rho)
    except InvalidStateError as e:
        raise NotAStateError(f"параметры {p} не дают состояния: {e}") from e


def _check_domain(x: float, y: float) -> None:
    if x < 0 or y < 0 or x + y > 0.5 + PARAM_TOL:
        raise OutOfDomainError(f"(x, y) = ({x}, {y}) вне области x, y >= 0, x + y <= 1/2")


def asymptotic_negativity_diagonal(x: float, y: float) -> float:
    """
    отрицательность асимптотического состояния диагонального класса:
    N = (1/2) [sqrt(4(x^2 + y^2) + t^2) - t], t = 1 - 2x - 2y

    Raises:
        OutOfDomainError: если (x, y) вне области
    """
    _check_domain(x, y)
    t = 1 - 2 * x - 2 * y
    return 0.5 * (math.sqrt(4 * (x * x + y * y) + t * t) - t)


def reduction_matrix_closed_form(x: float, y: float) -> CMatrix:
    """
    матрица ρ_A ⊗ I - ρ_as для диагонального класса

    диагональ (x, x, 0, y, y, 0, a, b, c) с a = 1 - 2x - y, b = 1 - x - 2y, c = x + y
    и внедиагональные x в позициях (3, 7), y в позициях (6, 8)

    Raises:
        OutOfDomainError: если (x, y) вне области
    """
    _check_domain(x, y)
    a, b, c = 1 - 2 * x - y, 1 - x - 2 * y, x + y
    mat = torch.diag(torch.tensor([x, x, 0.0, y, y, 0.0, a, b, c], dtype=DTYPE))
    mat[2, 6] = mat[6, 2] = x
    mat[5, 7] = mat[7, 5] = y
    return mat


def reduction_negativity_closed_form(x: float, y: float) -> float:
    """
    отрицательность редукции из блоков [[0, x], [x, a]] и [[0, y], [y, b]],
    минимальное собственное значение блока (a - sqrt(a^2 + 4x^2)) / 2
    """
    _check_domain(x, y)
    a, b = 1 - 2 * x - y, 1 - x - 2 * y
    lowest = min((a - math.sqrt(a * a + 4 * x * x)) / 2, (b - math.sqrt(b * b + 4 * y * y)) / 2)
    return max(0.0, -lowest)


def stationarity_residual(p: AsymptoticParams, c: CouplingParams) -> float:
    """
    ||L(ρ_as)||_F - насколько собранное состояние стационарно для коэффициентов c

    Args:
        p: параметры асимптотического состояния
        c: коэффициенты связи

    Returns:
        float: норма Фробениуса производной
    """
    derivative = liouvillian(build_asymptotic_state(p), c)
    return float(torch.linalg.matrix_norm(derivative))
