"""
модуль построения линейных графиков SVG по уже записанным CSV

графики строятся только из CSV, поэтому повторная генерация даёт тот же файл
"""

import logging
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from utils.output import read_csv_columns  # noqa: E402

logger = logging.getLogger(__name__)

# фиксированная соль идентификаторов SVG и отсутствие даты делают вывод воспроизводимым
matplotlib.rcParams["svg.hashsalt"] = "vatom-entanglement"


def plot_csv(
    csv_path: str | Path,
    svg_path: str | Path,
    series: Sequence[str],
    title: str = "",
    x_column: str = "t",
    x_label: str = "γt",
) -> Path:
    """
    строит линейный график выбранных столбцов CSV

    Args:
        csv_path: исходный CSV
        svg_path: куда сохранить SVG
        series: имена столбцов для линий
        title: заголовок графика
        x_column: столбец оси абсцисс
        x_label: подпись оси абсцисс

    Returns:
        Path: путь к SVG
    """
    columns = read_csv_columns(csv_path)
    xs = [float(v) for v in columns[x_column]]

    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    for name in series:
        ys = [float(v) if v else float("nan") for v in columns[name]]
        ax.plot(xs, ys, label=name)
    ax.axhline(0.0, color="grey", linewidth=0.5)
    ax.set_xlabel(x_label)
    if title:
        ax.set_title(title)
    ax.grid(True, linewidth=0.3)
    ax.legend()

    target = Path(svg_path)
    fig.savefig(target, format="svg", bbox_inches="tight", metadata={"Date": None})
    plt.close(fig)
    logger.info("записан график %s", target)
    return target
