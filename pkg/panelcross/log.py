"""Logger setup for the `panelcross` logger hierarchy."""
import logging
import logging.handlers
import sys
from typing import Any, Dict, Optional

from .config import get_config

LOG_FORMAT = '%(asctime)s %(levelname)s: %(message)s'
FILE_FORMAT = '%(asctime)s [%(levelname)s] %(name)s: %(message)s'


def setup_logging(config: Optional[Dict[str, Any]] = None,
                  level: Optional[str] = None) -> logging.Logger:
    """Configure the package logger from the `logging` config section.

    The console handler writes to stderr so stdout stays usable for pipes.
    A rotating file handler is added when `logging.file` is set.
    """
    cfg = (config or get_config())['logging']
    logger = logging.getLogger('panelcross')
    logger.setLevel(getattr(logging, (level or cfg['level']).upper()))

    if logger.handlers:
        logger.handlers.clear()

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(logging.Formatter(LOG_FORMAT))
    logger.addHandler(console_handler)

    if cfg.get('file'):
        file_handler = logging.handlers.RotatingFileHandler(
            cfg['file'],
            maxBytes=cfg['max_bytes'],
            backupCount=cfg['backup_count'],
            encoding='utf-8',
        )
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(logging.Formatter(FILE_FORMAT))
        logger.addHandler(file_handler)

    logger.propagate = False
    return logger
