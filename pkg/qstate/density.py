"""
модуль описывает матрицу плотности пары атомов и преобразования над ней:
частичный след, частичное транспонирование и перестановку (realignment)

базис канонический: составной индекс k = dim_b * (i - 1) + j для |i_A> ⊗ |j_B>,
в комментариях и методах element() индексы с единицы: k = 3(i - 1) + j
"""

import logging
from dataclasses import dataclass, field
from enum import Enum

import torch

from matkit import CMatrix, as_cmatrix, hermitian_eigenvalues, hermiticity_residual

logger = logging.getLogger(__name__)


class InvalidStateError(Exception):
    """матрица не является допустимой матрицей плотности"""


class Subsystem(Enum):
    """подсистема пары атомов"""

    A = "A"
    B = "B"


class StateViolation(Enum):
    """какие свойства матрицы плотности нарушены"""

    NOT_HERMITIAN = "not_hermitian"
    TRACE_DEVIATION = "trace_deviation"
    NEGATIVE_EIGENVALUE = "negative_eigenvalue"


@dataclass
class StateDiagnostics:
    """результат проверки матрицы плотности

    при нарушении хотя бы одного свойства:
    is_valid устанавливается в False, violations содержит список нарушений

    остальные поля заполняются всегда, чтобы их можно было логировать
    """

    is_valid: bool
    hermitian_residual: float
    trace_deviation: float
    min_eigenvalue: float
    violations: list[StateViolation] = field(default_factory=list)


@dataclass(frozen=True)
class DensityMatrix:
    """
    матрица плотности двудольной системы

    Attributes:
        mat: квадратная комплексная матрица размера (dim_a * dim_b)^2
        dim_a: размерность подсистемы A
        dim_b: размерность подсистемы B
    """

    mat: CMatrix
    dim_a: int = 3
    dim_b: int = 3

    def __post_init__(self):
        mat = as_cmatrix(self.mat)
        n = self.dim_a * self.dim_b
        if tuple(mat.shape) != (n, n):
            raise InvalidStateError(f"ожидалась матрица {n}x{n}, получено {tuple(mat.shape)}")
        object.__setattr__(self, "mat", mat)

    @property
    def dim(self) -> int:
        return self.dim_a * self.dim_b

    def element(self, k: int, l: int) -> complex:
        """элемент ρ_kl, индексы с единицы"""
        return complex(self.mat[k - 1, l - 1])

    def population(self, k: int) -> float:
        return self.element(k, k).real

    def hermitized(self) -> "DensityMatrix":
        """(ρ + ρ†) / 2"""
        return DensityMatrix((self.mat + self.mat.conj().T) / 2, self.dim_a, self.dim_b)

    def tensor(self) -> torch.Tensor:
        """представление с четырьмя индексами [i, j, i', j']"""
        return self.mat.reshape(self.dim_a, self.dim_b, self.dim_a, self.dim_b)


def validate(rho: DensityMatrix, tol: float = 1e-10, trace_tol: float = 1e-9, psd_tol: float = 1e-8) -> StateDiagnostics:
    """
    проверяет эрмитовость, след и положительность, никогда не бросает исключений

    Args:
        rho: проверяемая матрица
        tol: относительный допуск на эрмитовость
        trace_tol: допуск на |tr ρ - 1|
        psd_tol: минимальное собственное значение должно быть >= -psd_tol

    Returns:
        StateDiagnostics: результат проверки
    """
    violations = []
    residual = hermiticity_residual(rho.mat)
    if residual > tol * (1.0 + float(rho.mat.abs().max())):
        violations.append(StateViolation.NOT_HERMITIAN)

    trace_dev = abs(complex(torch.trace(rho.mat)) - 1.0)
    if trace_dev > trace_tol:
        violations.append(StateViolation.TRACE_DEVIATION)

    # спектр считаем по эрмитовой части, иначе диагностика не дошла бы до конца
    hermitian_part = (rho.mat + rho.mat.conj().T) / 2
    min_eig = float(hermitian_eigenvalues(hermitian_part)[0])
    if min_eig < -psd_tol:
        violations.append(StateViolation.NEGATIVE_EIGENVALUE)

    return StateDiagnostics(
        is_valid=not violations,
        hermitian_residual=residual,
        trace_deviation=trace_dev,
        min_eigenvalue=min_eig,
        violations=violations,
    )


def ensure_valid(rho: DensityMatrix, **tolerances) -> DensityMatrix:
    """
    бросает InvalidStateError, если матрица не проходит validate

    Args:
        rho: проверяемая матрица
        **tolerances: переопределения допусков validate

    Returns:
        DensityMatrix: тот же объект, для цепочек вызовов
    """
    diagnostics = validate(rho, **tolerances)
    if not diagnostics.is_valid:
        names = ", ".join(v.value for v in diagnostics.violations)
        logger.debug("состояние не прошло проверку: %s", diagnostics)
        raise InvalidStateError(f"недопустимое состояние: {names}")
    return rho


def partial_trace(rho: DensityMatrix, keep: Subsystem) -> CMatrix:
    """
    редуцированное состояние одной из подсистем

    Args:
        rho: матрица плотности
        keep: какую подсистему оставить

    Returns:
        CMatrix: ρ_A = tr_B ρ или ρ_B = tr_A ρ
    """
    ensure_valid(rho)
    t = rho.tensor()
    if keep is Subsystem.A:
        return torch.einsum("ijkj->ik", t)
    return torch.einsum("ijil->jl", t)


def partial_transpose(rho: DensityMatrix, on: Subsystem = Subsystem.B) -> CMatrix:
    """
    частичное транспонирование: (i,j|ρ^PT_B|i',j') = (i,j'|ρ|i',j)

    это только перестановка элементов, так что повторное применение возвращает ρ точно

    Args:
        rho: матрица плотности
        on: какую подсистему транспонировать (по умолчанию B)

    Returns:
        CMatrix: частично транспонированная матрица
    """
    ensure_valid(rho)
    return _permute_pt(rho.mat, rho.dim_a, rho.dim_b, on)


def _permute_pt(mat: CMatrix, dim_a: int, dim_b: int, on: Subsystem) -> CMatrix:
    t = mat.reshape(dim_a, dim_b, dim_a, dim_b)
    t = t.permute(0, 3, 2, 1) if on is Subsystem.B else t.permute(2, 1, 0, 3)
    return t.reshape(dim_a * dim_b, dim_a * dim_b).contiguous()


def realign(rho: DensityMatrix) -> CMatrix:
    """
    перестановка индексов <m|⊗<μ| R(ρ) |n>⊗|ν> = <m|⊗<n| ρ |μ>⊗|ν>

    Args:
        rho: матрица плотности

    Returns:
        CMatrix: матрица R(ρ) размера dim_a^2 x dim_b^2
    """
    ensure_valid(rho)
    # tensor()[m, n, μ, ν] = <m n|ρ|μ ν>, строки R нумеруются парой (m, μ)
    r = rho.tensor().permute(0, 2, 1, 3)
    return r.reshape(rho.dim_a * rho.dim_a, rho.dim_b * rho.dim_b).contiguous()


def fidelity_with_pure(rho: DensityMatrix, k: int) -> float:
    """верность <k|ρ|k> с базисным вектором номер k (с единицы)"""
    return rho.population(k)
