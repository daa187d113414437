"""
Пакет обработчиков команд: каждый модуль регистрирует свою подкоманду
"""

import argparse
import sys

from handlers import asymptote, couplings_info, evolve, figure, scan
from handlers.common import EXIT_CONFIG

COMMANDS = (evolve, figure, asymptote, scan, couplings_info)


class CliParser(argparse.ArgumentParser):
    """парсер, у которого ошибка разбора аргументов - это ошибка конфигурации (код 1)"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = CliParser(prog="simulate", description="динамика запутанности двух трёхуровневых атомов")
    parser.add_argument("-v", "--verbose", action="store_true", help="подробный лог (DEBUG)")
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=CliParser)
    for command in COMMANDS:
        command.register(subparsers)
    return parser
