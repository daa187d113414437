"""
модуль для записи результатов: директории, CSV и дампы состояний
"""

import csv
import logging
from pathlib import Path
from typing import Iterable, Sequence

from qstate import DensityMatrix, dump_state

logger = logging.getLogger(__name__)


def ensure_dir(path: str | Path) -> Path:
    """
    создаёт директорию для результатов, если её ещё нет

    Args:
        path: путь к директории

    Returns:
        Path: тот же путь
    """
    directory = Path(path)
    directory.mkdir(parents=True, exist_ok=True)
    return directory


def format_number(value: float | None, digits: int = 12) -> str:
    """число с заданным числом значащих цифр, None - пустая ячейка"""
    if value is None:
        return ""
    return f"{value:.{digits}g}"


def write_csv(path: str | Path, header: Sequence[str], rows: Iterable[Sequence[str]]) -> Path:
    """
    пишет CSV: строка заголовка, разделитель запятая, десятичная точка

    Args:
        path: путь к файлу
        header: имена столбцов
        rows: строки, уже отформатированные в текст

    Returns:
        Path: путь к записанному файлу
    """
    target = Path(path)
    with open(target, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        count = 0
        for row in rows:
            writer.writerow(row)
            count += 1
    logger.info("записан CSV %s (%s строк)", target, count)
    return target


def read_csv_columns(path: str | Path) -> dict[str, list[str]]:
    """
    читает CSV в словарь столбцов (значения остаются строками)

    Args:
        path: путь к файлу

    Returns:
        dict: имя столбца -> значения по строкам
    """
    with open(path, encoding="utf-8", newline="") as f:
        reader = csv.reader(f)
        header = next(reader)
        columns: dict[str, list[str]] = {name: [] for name in header}
        for row in reader:
            for name, value in zip(header, row):
                columns[name].append(value)
    return columns


def dump_states(directory: str | Path, times: Sequence[float], states: Sequence[DensityMatrix]) -> int:
    """
    сохраняет все отсчёты траектории в текстовом формате состояний

    Args:
        directory: директория для файлов state_NNNNN.txt
        times: моменты времени (пишутся в index.csv)
        states: состояния

    Returns:
        int: число записанных файлов
    """
    target = ensure_dir(directory)
    index_rows = []
    for n, (t, rho) in enumerate(zip(times, states)):
        name = f"state_{n:05d}.txt"
        dump_state(rho, target / name)
        index_rows.append([name, format_number(t)])
    write_csv(target / "index.csv", ["file", "t"], index_rows)
    return len(index_rows)
