"""
Данный модуль содержит конфигурацию симулятора
(переопределения лежат в .env файле, значения по умолчанию указаны ниже)
"""

from functools import lru_cache
import os
import logging
from dataclasses import dataclass
from dotenv import load_dotenv

logger = logging.getLogger(__name__)


class ConfigError(Exception):
    """
    Искючение которое возникает при ошибках конфигурации
    """


@dataclass
class Integration:
    """
    Параметры интегратора

    Attributes:
        dt: шаг RK4 в единицах 1/γ
        sample_every: через сколько шагов сохраняется отсчёт траектории
        event_tolerance: точность уточнения момента смены знака (в 1/γ)
        max_bisections: предел числа делений отрезка при уточнении
    """

    dt: float
    sample_every: int
    event_tolerance: float
    max_bisections: int

    def __post_init__(self):
        if self.dt <= 0:
            raise ConfigError("шаг интегрирования должен быть положительным")
        if self.sample_every < 1:
            raise ConfigError("sample_every должен быть >= 1")
        if self.event_tolerance <= 0:
            raise ConfigError("точность поиска событий должна быть положительной")
        if self.max_bisections < 1:
            raise ConfigError("max_bisections должен быть >= 1")


@dataclass
class Tolerances:
    """
    Численные пороги проверок

    Attributes:
        hermitian: допуск на эрмитовость (относительный)
        trace: допуск на отклонение следа от 1
        psd: насколько отрицательным может быть минимальное собственное значение
        sign_flag: порог флагов PPT / дистиллируемости
        pattern: допустимая масса вне нулевого шаблона эволюции
        pattern_fatal: масса вне шаблона, при которой факторизации неприменимы
    """

    hermitian: float
    trace: float
    psd: float
    sign_flag: float
    pattern: float
    pattern_fatal: float

    def __post_init__(self):
        for name, value in vars(self).items():
            if value <= 0:
                raise ConfigError(f"допуск {name} должен быть положительным")


@dataclass
class Output:
    """
    Настройки вывода

    Attributes:
        out_dir: директория для CSV, дампов состояний и графиков
        csv_digits: число значащих цифр в CSV
    """

    out_dir: str
    csv_digits: int


@dataclass
class Runtime:
    """
    Параметры окружения

    Attributes:
        workers: число процессов для сканирования параметров
        log_level: уровень логирования
        torch_threads: число потоков torch внутри одного процесса
    """

    workers: int
    log_level: str
    torch_threads: int

    def __post_init__(self):
        if self.workers < 1:
            raise ConfigError("workers должен быть >= 1")
        if self.torch_threads < 1:
            raise ConfigError("torch_threads должен быть >= 1")


@dataclass
class Config:
    """
    Основной класс конфигурации приложения

    Attributes:
        integration: параметры интегратора
        tolerances: численные пороги
        output: настройки вывода
        runtime: параметры окружения
    """

    integration: Integration
    tolerances: Tolerances
    output: Output
    runtime: Runtime


@lru_cache(maxsize=1)
def load_config() -> Config:
    """
    Загружает конфигурацию из .env файла

    Returns:
        Config: объект конфигурации приложения

    Raises:
        ConfigError: если значение в окружении не проходит проверку
    """
    if load_dotenv():
        logger.info("загружаем конфигурацию из .env файла")
    try:
        config: Config = Config(
            integration=Integration(
                dt=float(os.getenv("SIM_DT", "1e-3")),
                sample_every=int(os.getenv("SIM_SAMPLE_EVERY", "10")),
                event_tolerance=float(os.getenv("SIM_EVENT_TOL", "1e-4")),
                max_bisections=int(os.getenv("SIM_MAX_BISECTIONS", "60")),
            ),
            tolerances=Tolerances(
                hermitian=float(os.getenv("SIM_TOL_HERMITIAN", "1e-10")),
                trace=float(os.getenv("SIM_TOL_TRACE", "1e-9")),
                psd=float(os.getenv("SIM_TOL_PSD", "1e-8")),
                sign_flag=float(os.getenv("SIM_TOL_SIGN", "1e-10")),
                pattern=float(os.getenv("SIM_TOL_PATTERN", "1e-8")),
                pattern_fatal=float(os.getenv("SIM_TOL_PATTERN_FATAL", "1e-4")),
            ),
            output=Output(
                out_dir=os.getenv("SIM_OUT_DIR", "results"),
                csv_digits=int(os.getenv("SIM_CSV_DIGITS", "12")),
            ),
            runtime=Runtime(
                workers=int(os.getenv("SIM_WORKERS", "1")),
                log_level=os.getenv("SIM_LOG_LEVEL", "INFO"),
                torch_threads=int(os.getenv("SIM_TORCH_THREADS", "1")),
            ),
        )
    except ValueError as e:
        logger.error("ошибка конфигурации: %s", str(e))
        raise ConfigError(f"некорректное значение в окружении: {e}") from e
    except ConfigError as e:
        logger.error("ошибка конфигурации: %s", str(e))
        raise
    logger.info("конфигурация загружена успешно")
    logger.debug("шаг интегрирования: %s, отсчёт каждые %s шагов", config.integration.dt, config.integration.sample_every)
    logger.debug("директория результатов: %s", config.output.out_dir)
    logger.debug("процессов для сканирования: %s", config.runtime.workers)
    return config
