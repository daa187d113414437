"""
модуль собирает все меры и критерии для одного состояния в один отчёт
"""

import logging
from dataclasses import dataclass, field

from config.configurations import load_config
from matkit import leading_principal_minors
from qstate import DensityMatrix, Subsystem, ensure_valid
from entanglement.criteria import (
    min_pt_eigenvalue,
    negativity,
    realignment_negativity,
    reduction_matrices,
    reduction_negativity,
)
from entanglement.factors import MINOR_ORDERS, pt_factor_F, reduction_factors_GH

logger = logging.getLogger(__name__)

CSV_HEADER = ["t", "N", "NR", "Nred", "isPPT", "distillable", "F", "G", "H", "m5", "m6", "m7", "m8"]


@dataclass
class EntanglementReport:
    """
    отчёт о запутанности одного состояния

    флаг distillable_by_reduction выставляется только по критерию редукции:
    NPPT состояние без нарушения редукции может оказаться недистиллируемым

    Attributes:
        negativity: N по частичному транспонированию
        realign_negativity: N_R по перестановке
        reduction_negativity: N_red, худшая из двух сторон
        is_ppt: ρ^PT не имеет отрицательных собственных значений (с порогом)
        distillable_by_reduction: нарушен критерий редукции
        factor_f: множитель F определителя ρ^PT
        factor_g: множитель G миноров матрицы редукции
        factor_h: множитель H миноров матрицы редукции
        min_pt_eigenvalue: минимальное собственное значение ρ^PT
        minors: ведущие главные миноры m5..m8 матрицы ρ_A ⊗ I - ρ
    """

    negativity: float
    realign_negativity: float
    reduction_negativity: float
    is_ppt: bool
    distillable_by_reduction: bool
    factor_f: float
    factor_g: float
    factor_h: float
    min_pt_eigenvalue: float
    minors: list[float] = field(default_factory=list)

    def csv_row(self, t: float, digits: int = 12) -> list[str]:
        """
        строка CSV в порядке CSV_HEADER

        Args:
            t: момент времени (в 1/γ)
            digits: число значащих цифр

        Returns:
            list[str]: значения столбцов
        """
        fmt = f"{{:.{digits}g}}"
        numbers = [t, self.negativity, self.realign_negativity, self.reduction_negativity]
        flags = [str(self.is_ppt).lower(), str(self.distillable_by_reduction).lower()]
        tail = [self.factor_f, self.factor_g, self.factor_h, *self.minors]
        return [fmt.format(v) for v in numbers] + flags + [fmt.format(v) for v in tail]


def analyze(rho: DensityMatrix, pt_side: Subsystem = Subsystem.B, sign_tol: float | None = None) -> EntanglementReport:
    """
    считает все поля отчёта для одного состояния

    Args:
        rho: матрица плотности
        pt_side: какую подсистему транспонировать
        sign_tol: порог флагов PPT и дистиллируемости (по умолчанию из конфигурации)

    Returns:
        EntanglementReport: заполненный отчёт

    Raises:
        InvalidStateError: если ρ не является состоянием
    """
    ensure_valid(rho)
    if sign_tol is None:
        sign_tol = load_config().tolerances.sign_flag

    lowest = min_pt_eigenvalue(rho, pt_side)
    n_red = reduction_negativity(rho)
    g, h = reduction_factors_GH(rho)
    left, _ = reduction_matrices(rho)
    minors = leading_principal_minors(left, MINOR_ORDERS[-1])[MINOR_ORDERS[0] - 1:]

    report = EntanglementReport(
        negativity=negativity(rho, pt_side),
        realign_negativity=realignment_negativity(rho),
        reduction_negativity=n_red,
        is_ppt=lowest >= -sign_tol,
        distillable_by_reduction=n_red > sign_tol,
        factor_f=pt_factor_F(rho),
        factor_g=g,
        factor_h=h,
        min_pt_eigenvalue=lowest,
        minors=minors,
    )
    logger.debug("отчёт: %s", report)
    return report
