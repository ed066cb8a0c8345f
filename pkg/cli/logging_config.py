"""
Centralized logging configuration for the command line and the library
"""
import logging
import sys
from pathlib import Path
from typing import Optional


# Define log format with module name
LOG_FORMAT = "%(asctime)s | %(levelname)-8s | %(name)-40s | %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def setup_logging(log_level: str = "WARNING", log_file: Optional[str] = None) -> logging.Logger:
    """
    Configure logging for the application

    Diagnostics go to stderr; stdout carries command output only.

    Args:
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_file: Optional log file path. If None, logs only to stderr
    """
    formatter = logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT)
    level = getattr(logging, log_level.upper(), logging.WARNING)

    root_logger = logging.getLogger()
    root_logger.setLevel(level)

    # Remove existing handlers
    root_logger.handlers.clear()

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level)
    console_handler.setFormatter(formatter)
    root_logger.addHandler(console_handler)

    if log_file:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(log_file)
        file_handler.setLevel(level)
        file_handler.setFormatter(formatter)
        root_logger.addHandler(file_handler)

    # Reduce noise from verbose libraries
    logging.getLogger("hypothesis").setLevel(logging.WARNING)
    logging.getLogger("numpy").setLevel(logging.WARNING)

    return root_logger


def get_logger(name: str) -> logging.Logger:
    """
    Get a logger instance with the specified name

    Args:
        name: Logger name (typically __name__ from the calling module)

    Returns:
        Configured logger instance

    Usage:
        logger = get_logger(__name__)
        logger.info("Certified at M=3 via ALL_H_POSITIVE")
    """
    return logging.getLogger(name)
