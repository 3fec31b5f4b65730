import logging
import os
from logging.handlers import RotatingFileHandler

from .config import settings

LOG_DIR = settings.LOG_DIR or os.path.join(os.path.dirname(os.path.dirname(__file__)), "logs")
os.makedirs(LOG_DIR, exist_ok=True)

LOG_FILE_PATH = os.path.join(LOG_DIR, f"{settings.APP_NAME}.log")

LOGGING_LEVEL = logging.getLevelName(settings.LOG_LEVEL)
LOGGING_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

logging.basicConfig(level=LOGGING_LEVEL, format=LOGGING_FORMAT)

file_handler = RotatingFileHandler(
    LOG_FILE_PATH, maxBytes=settings.LOG_FILE_MAX_BYTES, backupCount=settings.LOG_FILE_BACKUPS
)
file_handler.setLevel(LOGGING_LEVEL)
file_handler.setFormatter(logging.Formatter(LOGGING_FORMAT))

logging.getLogger("").addHandler(file_handler)


def set_verbosity(verbose: bool = False, quiet: bool = False) -> None:
    """Adjust the root logger and the file handler for one CLI run.

    ``verbose`` selects DEBUG, ``quiet`` selects WARNING; neither restores ``LOG_LEVEL``.
    """
    level = logging.DEBUG if verbose else logging.WARNING if quiet else LOGGING_LEVEL
    logging.getLogger("").setLevel(level)
    file_handler.setLevel(level)
