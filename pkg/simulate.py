import logging
import sys

import torch

from config.configurations import ConfigError, load_config
from handlers import build_parser
from handlers.common import EXIT_CONFIG


logging.basicConfig(
    level=logging.INFO, format="%(asctime)s - %(name)s - %(levelname)s - %(message)s"
)

logger = logging.getLogger(__name__)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)

    try:
        config = load_config()
    except ConfigError as e:
        logger.error("симулятор не запущен: %s", e)
        return EXIT_CONFIG

    logging.getLogger().setLevel(logging.DEBUG if args.verbose else config.runtime.log_level.upper())
    torch.set_num_threads(config.runtime.torch_threads)

    logger.info("запуск команды %s", args.command)
    code = args.handler(args)
    logger.info("команда %s завершена с кодом %s", args.command, code)
    return code


if __name__ == "__main__":
    sys.exit(main())
