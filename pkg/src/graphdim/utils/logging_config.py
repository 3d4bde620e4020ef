import os
import sys
from pathlib import Path

from loguru import logger

LOG_DIR_ENV = "GRAPHDIM_LOG_DIR"
LOG_FILE_NAME = "graphdim.log"


def setup_logging(level: str = "WARNING", log_dir: str | Path | None = None) -> Path | None:
    """
    Configure Loguru for the CLI.

    - Console logs on stderr (stdout carries command output)
    - Optional file logs (DEBUG+) with rotation and retention

    Returns the log file path when a file sink was installed.
    """

    logger.remove()

    logger.add(
        sys.stderr,
        level=level.upper(),
        format="<green>{time:YYYY-MM-DD HH:mm:ss}</green> | "
               "<level>{level}</level> | "
               "<cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> - "
               "<level>{message}</level>",
    )

    directory = log_dir or os.getenv(LOG_DIR_ENV)
    if not directory:
        return None

    path = Path(directory)
    path.mkdir(parents=True, exist_ok=True)
    log_file = path / LOG_FILE_NAME

    # File logger
    logger.add(
        log_file,
        level="DEBUG",
        rotation="5 MB",
        retention="7 days",
        compression="zip",
        format="{time:YYYY-MM-DD HH:mm:ss} | {level} | {name}:{function}:{line} | {message}",
    )
    return log_file
