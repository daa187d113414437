"""
модуль поиска момента смены знака скалярной функции вдоль траектории

отрезок со сменой знака уточняется делением пополам, при этом каждое
промежуточное состояние заново интегрируется от левого отсчёта
"""

import logging
from dataclasses import dataclass
from typing import Callable

from config.configurations import load_config
from qstate import DensityMatrix
from entanglement import pt_factor_F, reduction_factors_GH
from dynamics.couplings import CouplingParams, DynamicsError
from dynamics.integrator import Trajectory, propagate

logger = logging.getLogger(__name__)

Functional = Callable[[DensityMatrix], float]


class RefinementStallError(DynamicsError):
    """деление пополам не достигло нужной точности"""


def factor_h(rho: DensityMatrix) -> float:
    """множитель H = r66 r88 - |ρ68|^2, смена его знака отмечает t_D"""
    return reduction_factors_GH(rho)[1]


def _sign(value: float) -> int:
    return (value > 0) - (value < 0)


def detect_sign_change(
    traj: Trajectory,
    functional: Functional,
    refine: CouplingParams,
    dt: float | None = None,
    tol: float | None = None,
    max_bisections: int | None = None,
) -> float | None:
    """
    самый ранний момент смены знака functional вдоль траектории

    предполагается, что между соседними отсчётами знак меняется не больше одного раза

    Args:
        traj: траектория
        functional: скалярная функция состояния
        refine: коэффициенты связи, с которыми строилась траектория
        dt: шаг коротких интегрирований (по умолчанию из конфигурации)
        tol: точность по времени (по умолчанию из конфигурации)
        max_bisections: предел числа делений

    Returns:
        float | None: момент смены знака или None, если знак не меняется

    Raises:
        RefinementStallError: если точность не достигнута за max_bisections шагов
    """
    settings = load_config().integration
    tol = settings.event_tolerance if tol is None else tol
    max_bisections = settings.max_bisections if max_bisections is None else max_bisections

    values = traj.series(functional)
    # k - последний отсчёт с ненулевым значением, точные нули его не сбрасывают
    k = None
    for j, value in enumerate(values):
        if _sign(value) == 0:
            continue
        if k is None or _sign(value) == _sign(values[k]):
            k = j
            continue
        t_left = traj.times[k]
        logger.debug("смена знака на отрезке [%.6g, %.6g]", t_left, traj.times[j])
        lo, hi = 0.0, traj.times[j] - t_left
        left_sign = _sign(values[k])
        for _ in range(max_bisections):
            if hi - lo <= tol:
                return t_left + (lo + hi) / 2
            mid = (lo + hi) / 2
            value = functional(propagate(traj.states[k], refine, mid, dt))
            if value == 0.0:
                return t_left + mid
            if _sign(value) == left_sign:
                lo = mid
            else:
                hi = mid
        if hi - lo <= tol:
            return t_left + (lo + hi) / 2
        raise RefinementStallError(f"после {max_bisections} делений отрезок {hi - lo:.3e} больше {tol:.1e}")
    return None


@dataclass
class BirthTimes:
    """
    моменты рождения запутанности

    Attributes:
        t_n: смена знака F (состояние становится NPPT)
        t_d: смена знака H (нарушается критерий редукции)
    """

    t_n: float | None
    t_d: float | None


def birth_times(traj: Trajectory, c: CouplingParams, dt: float | None = None) -> BirthTimes:
    """t_N и t_D для траектории"""
    t_n = detect_sign_change(traj, pt_factor_F, c, dt)
    t_d = detect_sign_change(traj, factor_h, c, dt)
    logger.info("t_N γ = %s, t_D γ = %s", t_n, t_d)
    if t_n is not None and t_d is not None and t_d < t_n:
        logger.warning("t_D = %.6g раньше t_N = %.6g", t_d, t_n)
    return BirthTimes(t_n=t_n, t_d=t_d)
