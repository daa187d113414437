"""
модуль с коэффициентами связи двух атомов через общий вакуум:
коллективное затухание Γ_k3, диполь-дипольные сдвиги Ω_k3 и перекрёстные Γ_vc, Ω_vc

модели:
    independent - атомы не связаны
    ideal       - предел R -> 0 для затухания (Γ_k3 = γ), сдвиг Ω задаётся конечным
    geometric   - параллельные диполи, перпендикулярные оси атомов, Γ_vc = Ω_vc = 0
    axial       - параллельные диполи вдоль оси атомов, Γ_vc = Ω_vc = 0
    custom      - коэффициенты заданы явно
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum

import torch

logger = logging.getLogger(__name__)

DEFAULT_IDEAL_SHIFT = 5.0

# отрицательный остаток спектра матрицы затухания, который ещё считаем нулём
PSD_TOL = 1e-12


class DynamicsError(Exception):
    """базовое исключение пакета dynamics"""


class BadGeometryError(DynamicsError):
    """расстояние между атомами должно быть положительным"""


class BadCouplingsError(DynamicsError):
    """набор коэффициентов не задаёт вполне положительную динамику"""


class ModelSpecError(DynamicsError):
    """строка модели связи не разобрана"""


class CouplingKind(Enum):
    """тип модели коэффициентов связи"""

    INDEPENDENT = "independent"
    IDEAL_SMALL_R = "ideal"
    GEOMETRIC = "geometric"
    GEOMETRIC_AXIAL = "axial"
    CUSTOM = "custom"


GEOMETRIES = (CouplingKind.GEOMETRIC, CouplingKind.GEOMETRIC_AXIAL)


@dataclass(frozen=True)
class CouplingParams:
    """
    коэффициенты основного кинетического уравнения (в единицах γ, если γ = 1)

    Attributes:
        gamma: скорость спонтанного распада одного атома (γ13 = γ23 = γ)
        damping_13: коллективное затухание Γ13
        damping_23: коллективное затухание Γ23
        damping_vc: перекрёстное затухание Γvc
        shift_13: диполь-дипольный сдвиг Ω13
        shift_23: диполь-дипольный сдвиг Ω23
        shift_vc: перекрёстный сдвиг Ωvc
        omega0: частота перехода, только метаданные (уравнение во вращающейся системе)
    """

    gamma: float = 1.0
    damping_13: float = 0.0
    damping_23: float = 0.0
    damping_vc: float = 0.0
    shift_13: float = 0.0
    shift_23: float = 0.0
    shift_vc: float = 0.0
    omega0: float = 0.0

    def __post_init__(self):
        if self.gamma <= 0:
            raise BadCouplingsError(f"γ = {self.gamma} должна быть положительной")
        for name in ("damping_13", "damping_23", "damping_vc"):
            if abs(getattr(self, name)) > self.gamma:
                raise BadCouplingsError(f"|{name}| = {abs(getattr(self, name))} больше γ = {self.gamma}")
        lowest = float(torch.linalg.eigvalsh(damping_matrix(self))[0])
        if lowest < -PSD_TOL * self.gamma:
            raise BadCouplingsError(f"матрица затухания не положительна: λ_min = {lowest:.3e}")

    @property
    def has_cross_coupling(self) -> bool:
        return self.damping_vc != 0.0 or self.shift_vc != 0.0


def damping_matrix(c: CouplingParams) -> torch.Tensor:
    """
    матрица затухания по операторам скачка (σ31^A, σ32^A, σ31^B, σ32^B)

    её положительность - условие полной положительности генератора

    Args:
        c: коэффициенты связи

    Returns:
        torch.Tensor: вещественная симметричная матрица 4x4
    """
    g, g13, g23, gvc = c.gamma, c.damping_13, c.damping_23, c.damping_vc
    return torch.tensor(
        [
            [g, 0.0, g13, gvc],
            [0.0, g, gvc, g23],
            [g13, gvc, g, 0.0],
            [gvc, g23, 0.0, g],
        ],
        dtype=torch.float64,
    )


@dataclass(frozen=True)
class CouplingModel:
    """
    модель, по которой строятся коэффициенты связи

    Attributes:
        kind: тип модели
        r_over_lambda: расстояние между атомами в длинах волн (для geometric и axial)
        shift: конечный сдвиг Ω для модели ideal
        custom: явно заданные коэффициенты (для custom)
    """

    kind: CouplingKind
    r_over_lambda: float | None = None
    shift: float = DEFAULT_IDEAL_SHIFT
    custom: CouplingParams | None = None

    def __post_init__(self):
        if self.kind in GEOMETRIES and (self.r_over_lambda is None or self.r_over_lambda <= 0):
            raise BadGeometryError(f"R/λ = {self.r_over_lambda} должно быть положительным")
        if self.kind is CouplingKind.CUSTOM and self.custom is None:
            raise ModelSpecError("для модели custom нужны явные коэффициенты")

    def label(self) -> str:
        if self.kind in GEOMETRIES:
            return f"{self.kind.value}:R={self.r_over_lambda:g}"
        if self.kind is CouplingKind.IDEAL_SMALL_R:
            return f"ideal:omega={self.shift:g}"
        return self.kind.value


def geometric_coefficients(r_over_lambda: float, gamma: float = 1.0) -> tuple[float, float]:
    """
    Γ и Ω для параллельных диполей, перпендикулярных оси атомов, a = 2πR/λ:
    Γ = (3γ/2) [sin a / a + cos a / a^2 - sin a / a^3]
    Ω = (3γ/4) [-cos a / a + sin a / a^2 + cos a / a^3]

    Args:
        r_over_lambda: R/λ > 0
        gamma: скорость распада одного атома

    Returns:
        tuple: (Γ, Ω)
    """
    if r_over_lambda <= 0:
        raise BadGeometryError(f"R/λ = {r_over_lambda} должно быть положительным")
    a = 2.0 * math.pi * r_over_lambda
    sin_a, cos_a = math.sin(a), math.cos(a)
    damping = 1.5 * gamma * (sin_a / a + cos_a / a**2 - sin_a / a**3)
    shift = 0.75 * gamma * (-cos_a / a + sin_a / a**2 + cos_a / a**3)
    return damping, shift


def axial_coefficients(r_over_lambda: float, gamma: float = 1.0) -> tuple[float, float]:
    """
    Γ и Ω для параллельных диполей, направленных вдоль оси атомов, a = 2πR/λ:
    Γ = 3γ [sin a / a^3 - cos a / a^2]
    Ω = -(3γ/2) [sin a / a^2 + cos a / a^3]
    """
    if r_over_lambda <= 0:
        raise BadGeometryError(f"R/λ = {r_over_lambda} должно быть положительным")
    a = 2.0 * math.pi * r_over_lambda
    sin_a, cos_a = math.sin(a), math.cos(a)
    damping = 3.0 * gamma * (sin_a / a**3 - cos_a / a**2)
    shift = -1.5 * gamma * (sin_a / a**2 + cos_a / a**3)
    return damping, shift


def _rescaled(params: CouplingParams, gamma: float) -> CouplingParams:
    # явные коэффициенты заданы в единицах своей γ
    scale = gamma / params.gamma
    return CouplingParams(
        gamma=gamma,
        damping_13=params.damping_13 * scale,
        damping_23=params.damping_23 * scale,
        damping_vc=params.damping_vc * scale,
        shift_13=params.shift_13 * scale,
        shift_23=params.shift_23 * scale,
        shift_vc=params.shift_vc * scale,
        omega0=params.omega0,
    )


def couplings(model: CouplingModel, gamma: float | None = None) -> CouplingParams:
    """
    коэффициенты связи для заданной модели

    Args:
        model: модель связи
        gamma: скорость распада одного атома; для custom все коэффициенты
            пересчитываются пропорционально, по умолчанию γ = 1 (custom - без изменений)

    Returns:
        CouplingParams: коэффициенты

    Raises:
        BadGeometryError: если R <= 0
        BadCouplingsError: если коэффициенты нарушают полную положительность
    """
    if model.kind is CouplingKind.CUSTOM:
        return model.custom if gamma is None else _rescaled(model.custom, gamma)
    gamma = 1.0 if gamma is None else gamma
    if model.kind is CouplingKind.INDEPENDENT:
        return CouplingParams(gamma=gamma)
    if model.kind is CouplingKind.IDEAL_SMALL_R:
        return CouplingParams(
            gamma=gamma,
            damping_13=gamma,
            damping_23=gamma,
            shift_13=model.shift,
            shift_23=model.shift,
        )
    coefficients = geometric_coefficients if model.kind is CouplingKind.GEOMETRIC else axial_coefficients
    damping, shift = coefficients(model.r_over_lambda, gamma)
    logger.debug("%s R/λ = %s: Γ = %.6f, Ω = %.6f", model.kind.value, model.r_over_lambda, damping, shift)
    return CouplingParams(
        gamma=gamma,
        damping_13=damping,
        damping_23=damping,
        shift_13=shift,
        shift_23=shift,
    )


CUSTOM_KEYS = {
    "g13": "damping_13",
    "g23": "damping_23",
    "gvc": "damping_vc",
    "o13": "shift_13",
    "o23": "shift_23",
    "ovc": "shift_vc",
    "gamma": "gamma",
}


def _key_values(argument: str) -> dict[str, float]:
    pairs = {}
    for chunk in filter(None, argument.split(",")):
        key, sep, value = chunk.partition("=")
        if not sep:
            raise ModelSpecError(f"ожидалось key=value, получено {chunk!r}")
        pairs[key.strip().lower()] = float(value)
    return pairs


def parse_model(spec: str) -> CouplingModel:
    """
    разбирает строку модели из командной строки:
    "independent", "ideal", "ideal:omega=5", "geometric:R=0.2", "axial:R=0.2",
    "custom:G13=0.9,G23=0.9,Gvc=0,O13=1,O23=1,Ovc=0"

    Args:
        spec: строка модели

    Returns:
        CouplingModel: модель связи

    Raises:
        ModelSpecError: если строка не разобрана
        BadGeometryError: если R <= 0
    """
    name, _, argument = spec.strip().partition(":")
    try:
        kind = CouplingKind(name.lower())
    except ValueError as e:
        raise ModelSpecError(f"неизвестная модель связи {name!r}") from e
    try:
        if kind is CouplingKind.INDEPENDENT:
            return CouplingModel(kind)
        if kind is CouplingKind.IDEAL_SMALL_R:
            values = _key_values(argument)
            return CouplingModel(kind, shift=values.get("omega", DEFAULT_IDEAL_SHIFT))
        if kind in GEOMETRIES:
            values = _key_values(argument) if "=" in argument else {"r": float(argument)}
            if "r" not in values:
                raise ModelSpecError(f"для модели {kind.value} нужно R=<R/λ>")
            return CouplingModel(kind, r_over_lambda=values["r"])
        values = _key_values(argument)
        unknown = set(values) - set(CUSTOM_KEYS)
        if unknown:
            raise ModelSpecError(f"неизвестные коэффициенты: {sorted(unknown)}")
        params = CouplingParams(**{CUSTOM_KEYS[k]: v for k, v in values.items()})
        return CouplingModel(kind, custom=params)
    except ValueError as e:
        raise ModelSpecError(f"не удалось разобрать модель {spec!r}: {e}") from e
