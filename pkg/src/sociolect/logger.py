import sys

from loguru import logger
from sociolect.config import config as conf


def init_logger(**context):
    "Set up a new logger"
    logger.remove()
    logger.add(
        sys.stderr,
        level=conf.log_level,
        colorize=True,
        format="{time} | {level} | {extra} | {message}",
        backtrace=True,
        diagnose=True,
    )
    if conf.export_logs:
        logger.add(
            conf.log_file_location,
            level=conf.log_level,
            format="{time} | {level} | {extra} | {message}",
            rotation="10 MB",
        )
    logger.configure(extra=context or {"source": "Sociolect"})
    return logger


logger = init_logger()
