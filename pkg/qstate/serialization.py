"""
текстовый формат матрицы плотности:
первая строка "dim_a dim_b", далее по строке "k l re im" на каждый ненулевой элемент
(индексы с единицы)
"""

import logging
from pathlib import Path

import torch

from matkit import DTYPE
from qstate.density import DensityMatrix, InvalidStateError

logger = logging.getLogger(__name__)


def dump_state(rho: DensityMatrix, path: str | Path) -> None:
    """
    записывает матрицу плотности в текстовый файл

    Args:
        rho: матрица плотности
        path: путь к файлу
    """
    lines = [f"{rho.dim_a} {rho.dim_b}"]
    nonzero = torch.nonzero(rho.mat, as_tuple=False).tolist()
    for k, l in nonzero:
        value = complex(rho.mat[k, l])
        lines.append(f"{k + 1} {l + 1} {value.real!r} {value.imag!r}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_state(path: str | Path) -> DensityMatrix:
    """
    читает матрицу плотности, записанную dump_state

    Args:
        path: путь к файлу

    Returns:
        DensityMatrix: прочитанная матрица (без проверки положительности)

    Raises:
        InvalidStateError: если файл не соответствует формату
    """
    rows = Path(path).read_text(encoding="utf-8").split("\n")
    rows = [row for row in rows if row.strip()]
    try:
        dim_a, dim_b = (int(v) for v in rows[0].split())
        n = dim_a * dim_b
        mat = torch.zeros((n, n), dtype=DTYPE)
        for row in rows[1:]:
            k, l, re, im = row.split()
            mat[int(k) - 1, int(l) - 1] = complex(float(re), float(im))
    except (IndexError, ValueError) as e:
        raise InvalidStateError(f"файл состояния {path} повреждён: {e}") from e
    logger.debug("прочитано состояние %sx%s из %s", dim_a, dim_b, path)
    return DensityMatrix(mat, dim_a, dim_b)
