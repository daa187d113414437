"""
модуль с ядром линейной алгебры поверх torch
все матрицы хранятся как torch.Tensor с dtype complex128
"""

import logging
import torch

logger = logging.getLogger(__name__)

CMatrix = torch.Tensor

DTYPE = torch.complex128

# мнимый остаток определителя эрмитовой подматрицы, который ещё считаем шумом
MINOR_IMAG_TOL = 1e-10


class MatKitError(Exception):
    """базовое исключение пакета matkit"""


class NonSquareError(MatKitError):
    """матрица не квадратная"""


class NotHermitianError(MatKitError):
    """невязка эрмитовости превышает допуск"""


def as_cmatrix(data) -> CMatrix:
    """
    приводит вход (вложенный список, numpy массив или тензор) к комплексной матрице

    Args:
        data: элементы матрицы

    Returns:
        CMatrix: двумерный тензор complex128
    """
    mat = torch.as_tensor(data).to(DTYPE)
    if mat.dim() != 2:
        raise MatKitError(f"ожидалась двумерная матрица, получено измерений: {mat.dim()}")
    return mat


def identity(n: int) -> CMatrix:
    return torch.eye(n, dtype=DTYPE)


def matrix_unit(n: int, j: int, k: int) -> CMatrix:
    """
    матричная единица E_jk = |j><k| (индексы с 1)

    Args:
        n: размерность
        j: номер строки
        k: номер столбца

    Returns:
        CMatrix: матрица с единственной единицей в позиции (j, k)
    """
    mat = torch.zeros((n, n), dtype=DTYPE)
    mat[j - 1, k - 1] = 1.0
    return mat


def _require_square(a: CMatrix) -> None:
    if a.dim() != 2 or a.shape[0] != a.shape[1]:
        raise NonSquareError(f"ожидалась квадратная матрица, получено {tuple(a.shape)}")


def hermiticity_residual(a: CMatrix) -> float:
    """
    максимальный модуль разности A - A^dagger

    Args:
        a: квадратная матрица

    Returns:
        float: max |A_ij - conj(A_ji)|
    """
    _require_square(a)
    return float((a - a.conj().T).abs().max())


def hermitian_eigenvalues(a: CMatrix, tol: float = 1e-10) -> torch.Tensor:
    """
    собственные значения эрмитовой матрицы по возрастанию

    Args:
        a: эрмитова матрица
        tol: относительный допуск на эрмитовость

    Returns:
        torch.Tensor: вещественные собственные значения (float64), по возрастанию

    Raises:
        NonSquareError: если матрица не квадратная
        NotHermitianError: если невязка эрмитовости больше tol * (1 + max|A|)
    """
    _require_square(a)
    residual = hermiticity_residual(a)
    scale = 1.0 + float(a.abs().max())
    if residual > tol * scale:
        raise NotHermitianError(f"невязка эрмитовости {residual:.3e} больше допуска {tol * scale:.3e}")
    # eigvalsh читает только нижний треугольник, поэтому симметризуем заранее
    return torch.linalg.eigvalsh((a + a.conj().T) / 2)


def singular_values(a: CMatrix) -> torch.Tensor:
    """
    сингулярные значения по убыванию

    Args:
        a: произвольная прямоугольная матрица

    Returns:
        torch.Tensor: неотрицательные сингулярные значения (float64)
    """
    return torch.linalg.svdvals(a).clamp(min=0.0)


def trace_norm(a: CMatrix) -> float:
    """следовая норма: сумма сингулярных значений"""
    return float(singular_values(a).sum())


def kron(a: CMatrix, b: CMatrix) -> CMatrix:
    """кронекерово произведение, размерности перемножаются"""
    return torch.kron(a, b)


def determinant(a: CMatrix) -> complex:
    """
    определитель через LU с частичным выбором ведущего элемента

    Args:
        a: квадратная матрица

    Returns:
        complex: определитель
    """
    _require_square(a)
    return complex(torch.linalg.det(a))


def leading_principal_minors(a: CMatrix, up_to: int | None = None) -> list[float]:
    """
    ведущие главные миноры m_1 ... m_up_to эрмитовой матрицы

    каждый минор считается независимо, мнимый остаток отбрасывается

    Args:
        a: квадратная эрмитова матрица
        up_to: до какого порядка считать (по умолчанию все)

    Returns:
        list[float]: [m_1, ..., m_up_to]

    Raises:
        NonSquareError: если матрица не квадратная
    """
    _require_square(a)
    n = a.shape[0]
    up_to = n if up_to is None else up_to
    if not 1 <= up_to <= n:
        raise MatKitError(f"порядок минора {up_to} вне диапазона 1..{n}")

    minors = []
    for k in range(1, up_to + 1):
        value = determinant(a[:k, :k])
        scale = max(1.0, float(a[:k, :k].abs().max()) ** k)
        if abs(value.imag) > MINOR_IMAG_TOL * scale:
            logger.warning("минор порядка %s имеет мнимую часть %.3e", k, value.imag)
        minors.append(value.real)
    return minors

