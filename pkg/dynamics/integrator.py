"""
модуль интегрирования основного кинетического уравнения классическим RK4
с фиксированным шагом

уравнение линейное, поэтому шаг RK4 - это умножение vec(ρ) на многочлен
Тейлора четвёртой степени от dt * L, который считается один раз на прогон
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable

import torch

from config.configurations import load_config
from matkit import DTYPE
from qstate import DensityMatrix, ensure_valid, validate
from entanglement import EntanglementReport, analyze
from dynamics.couplings import CouplingParams, DynamicsError
from dynamics.generator import DIM, superoperator

logger = logging.getLogger(__name__)


class StepTooLargeError(DynamicsError):
    """отсчёт траектории не прошёл проверку, обычно из-за слишком большого шага"""

    def __init__(self, time: float, message: str):
        super().__init__(f"t = {time:.6g}: {message}")
        self.time = time


@dataclass
class Trajectory:
    """
    упорядоченная по времени последовательность состояний

    Attributes:
        times: моменты времени в единицах 1/γ, строго возрастают
        states: состояния в эти моменты
        reports: отчёты о запутанности (заполняются по запросу)
    """

    times: list[float]
    states: list[DensityMatrix]
    reports: list[EntanglementReport] | None = None

    def __post_init__(self):
        if len(self.times) != len(self.states):
            raise DynamicsError("число моментов времени не совпадает с числом состояний")
        if any(b <= a for a, b in zip(self.times, self.times[1:])):
            raise DynamicsError("моменты времени траектории должны строго возрастать")

    def __len__(self) -> int:
        return len(self.times)

    def attach_reports(self) -> "Trajectory":
        """считает отчёт о запутанности для каждого отсчёта"""
        if self.reports is None:
            logger.info("анализ запутанности для %s отсчётов", len(self))
            self.reports = [analyze(rho) for rho in self.states]
        return self

    def series(self, functional: Callable[[DensityMatrix], float]) -> list[float]:
        return [functional(rho) for rho in self.states]


def rk4_propagator(generator: torch.Tensor, h: float) -> torch.Tensor:
    """
    матрица одного шага RK4 для линейного уравнения dv/dt = L v

    Args:
        generator: матрица L
        h: шаг

    Returns:
        torch.Tensor: I + hL + (hL)^2/2 + (hL)^3/6 + (hL)^4/24
    """
    hl = h * generator
    step = torch.eye(generator.shape[0], dtype=DTYPE)
    term = step
    for order in range(1, 5):
        term = term @ hl / order
        step = step + term
    return step


def _to_state(vec: torch.Tensor) -> DensityMatrix:
    return DensityMatrix(vec.reshape(DIM, DIM)).hermitized()


def _checked(rho: DensityMatrix, time: float) -> DensityMatrix:
    tol = load_config().tolerances
    diagnostics = validate(rho, tol=tol.hermitian, trace_tol=tol.trace, psd_tol=tol.psd)
    if not diagnostics.is_valid:
        logger.error("отсчёт t = %.6g не прошёл проверку: %s", time, diagnostics)
        names = ", ".join(v.value for v in diagnostics.violations)
        raise StepTooLargeError(time, f"нарушено: {names}")
    return rho


def evolve(
    rho0: DensityMatrix,
    c: CouplingParams,
    t_end: float,
    dt: float | None = None,
    sample_every: int | None = None,
) -> Trajectory:
    """
    интегрирует уравнение от ρ0 до t_end

    шаг подгоняется так, чтобы t_end делилось нацело; каждый отсчёт
    эрмитизуется и проверяется (след, эрмитовость, положительность)

    Args:
        rho0: начальное состояние
        c: коэффициенты связи
        t_end: конечный момент в единицах 1/γ
        dt: шаг RK4 (по умолчанию из конфигурации)
        sample_every: через сколько шагов сохранять отсчёт (по умолчанию из конфигурации)

    Returns:
        Trajectory: отсчёты, включая t = 0 и t = t_end

    Raises:
        InvalidStateError: если ρ0 не является состоянием
        StepTooLargeError: если отсчёт не прошёл проверку
    """
    settings = load_config().integration
    dt = settings.dt if dt is None else dt
    sample_every = settings.sample_every if sample_every is None else sample_every
    if t_end <= 0 or dt <= 0 or sample_every < 1:
        raise DynamicsError(f"недопустимые параметры: t_end={t_end}, dt={dt}, sample_every={sample_every}")
    ensure_valid(rho0)

    n_steps = max(1, round(t_end / dt))
    h = t_end / n_steps
    if abs(h - dt) > 1e-12 * dt:
        logger.debug("шаг подогнан: %.6g -> %.6g", dt, h)
    logger.info("интегрирование до t = %g, шаг %.3g, %s шагов", t_end, h, n_steps)

    step = rk4_propagator(superoperator(c), h)
    vec = rho0.mat.reshape(-1)
    times, states = [0.0], [_checked(rho0.hermitized(), 0.0)]
    for n in range(1, n_steps + 1):
        vec = step @ vec
        if n % sample_every == 0 or n == n_steps:
            t = n * h
            rho = _checked(_to_state(vec), t)
            vec = rho.mat.reshape(-1)
            times.append(t)
            states.append(rho)
    logger.info("интегрирование завершено, отсчётов: %s", len(times))
    return Trajectory(times=times, states=states)


def propagate(rho: DensityMatrix, c: CouplingParams, duration: float, dt: float | None = None) -> DensityMatrix:
    """
    короткое интегрирование на время duration без сохранения отсчётов

    Args:
        rho: начальное состояние
        c: коэффициенты связи
        duration: время интегрирования (>= 0)
        dt: наибольший допустимый шаг

    Returns:
        DensityMatrix: эрмитизованное состояние в момент duration
    """
    if duration <= 0:
        return rho
    dt = load_config().integration.dt if dt is None else dt
    n_steps = max(1, math.ceil(duration / dt - 1e-9))
    step = rk4_propagator(superoperator(c), duration / n_steps)
    vec = rho.mat.reshape(-1)
    for _ in range(n_steps):
        vec = step @ vec
    return _to_state(vec)
