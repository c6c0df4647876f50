import logging
import os
import sys
from typing import Optional

from dotenv import load_dotenv

LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


def setup_logging(name: str = None, log_file: Optional[str] = None, level=logging.WARNING):
    """
    Configures a logger that writes to stderr and, when log_file is given, to a file.
    If name is None, configures the root logger.
    """
    logger = logging.getLogger(name)
    logger.setLevel(level)

    # Avoid adding handlers multiple times if setup_logging is called repeatedly
    if logger.handlers:
        for handler in logger.handlers:
            handler.setLevel(level)
        return logger

    # stdout may carry CSV/JSON output
    c_handler = logging.StreamHandler(sys.stderr)
    c_handler.setLevel(level)
    c_handler.setFormatter(logging.Formatter('%(asctime)s - %(levelname)s - %(message)s', datefmt='%H:%M:%S'))
    logger.addHandler(c_handler)

    if log_file:
        f_handler = logging.FileHandler(log_file)
        f_handler.setLevel(level)
        f_handler.setFormatter(logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s'))
        logger.addHandler(f_handler)

    return logger


def load_environment() -> dict:
    """Defaults from the environment (and a .env file in the working directory)."""
    load_dotenv()
    level = os.getenv("THOMPSON_LOG_LEVEL", "WARNING").upper()
    if level not in LEVELS:
        level = "WARNING"
    return {
        "jobs": int(os.getenv("THOMPSON_JOBS", "1")),
        "seed": int(os.getenv("THOMPSON_SEED", "0")),
        "convention": os.getenv("THOMPSON_CROSSING_CONVENTION", "lr-over"),
        "log_level": level,
        "log_file": os.getenv("THOMPSON_LOG_FILE") or None,
    }
