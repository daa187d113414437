"""
модуль для расчёта ячеек сканирования параметров (α, R/λ) в отдельных процессах
каждая ячейка - независимая траектория, строки собираются в порядке сетки
"""

import logging
import multiprocessing
import time
from dataclasses import dataclass

import torch

from dynamics import CouplingKind, CouplingModel, birth_times, couplings, evolve
from states import horodecki_alpha

logger = logging.getLogger(__name__)

SCAN_HEADER = ["alpha", "R_over_lambda", "tN", "tD", "peakN", "peakNred", "finalN", "status"]


@dataclass
class ScanCell:
    """
    одна точка сетки сканирования

    Attributes:
        alpha: параметр начального состояния ρ_α
        r_over_lambda: расстояние между атомами
        t_end: длительность прогона (1/γ)
        dt: шаг RK4
        sample_every: через сколько шагов сохранять отсчёт
    """

    alpha: float
    r_over_lambda: float
    t_end: float
    dt: float
    sample_every: int


@dataclass
class ScanRow:
    """
    результат ячейки; при ошибке status = "error", числовые поля пустые

    Attributes:
        alpha: параметр начального состояния
        r_over_lambda: расстояние между атомами
        t_n: момент перехода в NPPT или None
        t_d: момент нарушения критерия редукции или None
        peak_n: наибольшая отрицательность за прогон
        peak_nred: наибольшая отрицательность редукции за прогон
        final_n: отрицательность в конце прогона
        status: "ok" или "error"
    """

    alpha: float
    r_over_lambda: float
    t_n: float | None = None
    t_d: float | None = None
    peak_n: float | None = None
    peak_nred: float | None = None
    final_n: float | None = None
    status: str = "ok"


def run_cell(cell: ScanCell) -> ScanRow:
    """
    считает одну ячейку, ошибки не пробрасываются, а записываются в строку

    Args:
        cell: параметры ячейки

    Returns:
        ScanRow: результат
    """
    start_time = time.time()
    try:
        c = couplings(CouplingModel(CouplingKind.GEOMETRIC, r_over_lambda=cell.r_over_lambda))
        traj = evolve(horodecki_alpha(cell.alpha), c, cell.t_end, cell.dt, cell.sample_every)
        traj.attach_reports()
        events = birth_times(traj, c, cell.dt)
        row = ScanRow(
            alpha=cell.alpha,
            r_over_lambda=cell.r_over_lambda,
            t_n=events.t_n,
            t_d=events.t_d,
            peak_n=max(r.negativity for r in traj.reports),
            peak_nred=max(r.reduction_negativity for r in traj.reports),
            final_n=traj.reports[-1].negativity,
        )
    except Exception as e:
        logger.warning("ячейка α = %s, R/λ = %s завершилась ошибкой: %s", cell.alpha, cell.r_over_lambda, e)
        return ScanRow(alpha=cell.alpha, r_over_lambda=cell.r_over_lambda, status="error")
    logger.info(
        "ячейка α = %s, R/λ = %s посчитана за %.2fs", cell.alpha, cell.r_over_lambda, time.time() - start_time
    )
    return row


def _init_worker(torch_threads: int) -> None:
    # процессы пула не должны делить ядра между собой ещё и внутри torch
    torch.set_num_threads(torch_threads)


class ScanPool:
    """
    пул процессов для сканирования

    при workers = 1 всё считается в текущем процессе, без multiprocessing
    """

    def __init__(self, workers: int = 1, torch_threads: int = 1):
        """
        инициализация пула

        Args:
            workers: число процессов
            torch_threads: число потоков torch в каждом процессе
        """
        self.workers = workers
        self.torch_threads = torch_threads

    def run(self, cells: list[ScanCell]) -> list[ScanRow]:
        """
        считает все ячейки и возвращает строки в порядке cells

        Args:
            cells: ячейки сетки

        Returns:
            list[ScanRow]: результаты в том же порядке
        """
        logger.info("сканирование: %s ячеек, процессов: %s", len(cells), self.workers)
        if self.workers == 1 or len(cells) < 2:
            return [run_cell(cell) for cell in cells]
        context = multiprocessing.get_context("spawn")
        with context.Pool(
            processes=min(self.workers, len(cells)),
            initializer=_init_worker,
            initargs=(self.torch_threads,),
        ) as pool:
            # map сохраняет порядок входа, так что вывод не зависит от расписания
            return pool.map(run_cell, cells)
