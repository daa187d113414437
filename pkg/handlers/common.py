"""
общие части обработчиков команд: конфигурация сценария, разбор диапазонов
и перевод исключений в коды возврата
"""

import functools
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

from dotenv import dotenv_values

from config.configurations import ConfigError, load_config
from asymptotics import AsymptoticsError
from dynamics import (
    BadCouplingsError,
    BadGeometryError,
    DynamicsError,
    ModelSpecError,
    RefinementStallError,
    StepTooLargeError,
)
from entanglement import PatternViolationError
from matkit import MatKitError
from qstate import InvalidStateError
from states import StateCatalogError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_INTEGRATION = 2
EXIT_IO = 3

OUTPUT_KINDS = {"csv", "states", "plot"}

# ключи файла сценария -> имена полей ScenarioConfig
SCENARIO_KEYS = {
    "state": "initial_state",
    "model": "model",
    "tend": "t_end",
    "dt": "dt",
    "sample_every": "sample_every",
    "outputs": "outputs",
    "out": "out_path",
}


@dataclass
class ScenarioConfig:
    """
    параметры одного прогона

    Attributes:
        initial_state: имя начального состояния в каталоге
        model: строка модели связи
        t_end: длительность в единицах 1/γ
        dt: шаг RK4
        sample_every: через сколько шагов сохранять отсчёт
        outputs: что писать: csv, states, plot
        out_path: директория результатов
    """

    initial_state: str
    model: str
    t_end: float
    dt: float
    sample_every: int
    outputs: set[str] = field(default_factory=lambda: {"csv"})
    out_path: str = "results"

    def __post_init__(self):
        if self.t_end <= 0 or self.dt <= 0:
            raise ConfigError(f"tend = {self.t_end} и dt = {self.dt} должны быть положительными")
        if self.sample_every < 1:
            raise ConfigError("sample_every должен быть >= 1")
        unknown = self.outputs - OUTPUT_KINDS
        if unknown:
            raise ConfigError(f"неизвестные виды вывода: {sorted(unknown)}")


def load_scenario(path: str | None, overrides: dict) -> ScenarioConfig:
    """
    собирает ScenarioConfig из файла key=value и флагов (флаги важнее)

    Args:
        path: путь к файлу сценария или None
        overrides: значения флагов, None означает "не задан"

    Returns:
        ScenarioConfig: конфигурация прогона

    Raises:
        ConfigError: если файл не найден или значения некорректны
    """
    settings = load_config()
    values: dict = {
        "model": "independent",
        "dt": settings.integration.dt,
        "sample_every": settings.integration.sample_every,
        "outputs": "csv",
        "out_path": settings.output.out_dir,
    }
    if path is not None:
        if not Path(path).is_file():
            raise ConfigError(f"файл сценария {path} не найден")
        for key, value in dotenv_values(path).items():
            if key.lower() not in SCENARIO_KEYS:
                raise ConfigError(f"неизвестный ключ сценария {key!r}")
            values[SCENARIO_KEYS[key.lower()]] = value
        logger.info("сценарий загружен из %s", path)
    values.update({k: v for k, v in overrides.items() if v is not None})

    if "initial_state" not in values or "t_end" not in values:
        raise ConfigError("нужно задать начальное состояние (state) и длительность (tend)")
    outputs = values["outputs"]
    if isinstance(outputs, str):
        outputs = {item.strip() for item in outputs.split(",") if item.strip()}
    try:
        return ScenarioConfig(
            initial_state=str(values["initial_state"]),
            model=str(values["model"]),
            t_end=float(values["t_end"]),
            dt=float(values["dt"]),
            sample_every=int(values["sample_every"]),
            outputs=set(outputs),
            out_path=str(values["out_path"]),
        )
    except ValueError as e:
        raise ConfigError(f"некорректное значение в сценарии: {e}") from e


def parse_grid(text: str) -> list[float]:
    """
    разбирает значения сетки: "3.6", "3.2,3.6,4.0" или диапазон "start:stop:count"

    Args:
        text: описание сетки

    Returns:
        list[float]: значения по возрастанию порядка задания

    Raises:
        ConfigError: если описание не разобрано
    """
    try:
        if ":" in text:
            start, stop, count = text.split(":")
            n = int(count)
            if n < 1:
                raise ValueError("число точек должно быть >= 1")
            if n == 1:
                return [float(start)]
            step = (float(stop) - float(start)) / (n - 1)
            return [float(start) + i * step for i in range(n)]
        return [float(v) for v in text.split(",")]
    except ValueError as e:
        raise ConfigError(f"не удалось разобрать сетку {text!r}: {e}") from e


def exit_code_for(error: Exception) -> int:
    """код возврата для исключения"""
    if isinstance(error, (ConfigError, StateCatalogError, BadGeometryError, BadCouplingsError, ModelSpecError)):
        return EXIT_CONFIG
    if isinstance(error, (InvalidStateError, StepTooLargeError, RefinementStallError, PatternViolationError)):
        return EXIT_INTEGRATION
    if isinstance(error, (DynamicsError, AsymptoticsError, MatKitError)):
        return EXIT_INTEGRATION
    if isinstance(error, OSError):
        return EXIT_IO
    raise error


def guarded(handler: Callable[..., int]) -> Callable[..., int]:
    """
    декоратор обработчика: известные исключения превращаются в коды возврата
    """

    @functools.wraps(handler)
    def wrapper(*args, **kwargs) -> int:
        try:
            return handler(*args, **kwargs)
        except Exception as e:
            code = exit_code_for(e)
            logger.error("%s завершилась с ошибкой (код %s): %s", handler.__name__, code, e)
            return code

    return wrapper
