"""
Logger Utility
Root logger setup shared by the CLI, the runners and the behave environment
"""
import logging
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Optional

import colorlog

from core.constants.application_constants import ApplicationConstants

LOG_COLORS = {
    'DEBUG': 'cyan',
    'INFO': 'green',
    'WARNING': 'yellow',
    'ERROR': 'red',
    'CRITICAL': 'bold_red',
}


def setup_logging(level: Optional[str] = None, log_file: Optional[str] = None,
                  file_enabled: Optional[bool] = None) -> logging.Logger:
    """
    Configure the root logger: coloured console output on stderr plus an optional
    rotating log file. Calling it again replaces the previous handlers.

    Args:
        level: Log level name; defaults to logging.level from config
        log_file: Log file path; defaults to logging.file_path from config
        file_enabled: Force the file handler on/off; defaults to logging.file_enabled

    Returns:
        The configured root logger
    """
    level_name = (level or ApplicationConstants.LOG_LEVEL).upper()
    root = logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)
    root.setLevel(level_name)

    if ApplicationConstants.CONSOLE_LOGGING_ENABLED:
        console_handler = colorlog.StreamHandler(sys.stderr)
        console_handler.setFormatter(colorlog.ColoredFormatter(
            "%(log_color)s" + ApplicationConstants.LOG_FORMAT,
            datefmt=ApplicationConstants.LOG_DATE_FORMAT,
            log_colors=LOG_COLORS,
        ))
        root.addHandler(console_handler)

    use_file = ApplicationConstants.FILE_LOGGING_ENABLED if file_enabled is None else file_enabled
    if use_file:
        path = Path(log_file or ApplicationConstants.LOG_FILE_PATH)
        path.parent.mkdir(parents=True, exist_ok=True)
        file_handler = RotatingFileHandler(
            path,
            maxBytes=ApplicationConstants.get_log_max_bytes(),
            backupCount=ApplicationConstants.LOG_BACKUP_COUNT,
            encoding='utf-8',
        )
        file_handler.setFormatter(logging.Formatter(
            ApplicationConstants.LOG_FORMAT, datefmt=ApplicationConstants.LOG_DATE_FORMAT))
        root.addHandler(file_handler)

    return root
