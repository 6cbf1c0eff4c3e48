"""Logging for the WignerKit library and python api.

Messages go to stderr (standard output carries the emitted tables), everything down to debug goes to a rotating
record file, and tracebacks of unhandled errors go to their own file; only the root process attaches handlers.
"""

# type annotations
from __future__ import annotations
from typing import Optional

# standard libraries
import logging
import logging.handlers
import os
import sys

# internal libraries
from .error import TRACEBACK
from .parallel import is_root
from ..resources import CONFIG

# define library (public) interface
__all__ = ['force_debug', ]

# default constants
CONSOLE = CONFIG['core']['logger']['console']
ERROR = CONFIG['core']['logger']['error']
RECORD = CONFIG['core']['logger']['record']
TRACE = CONFIG['core']['logger']['trace']
LOGFILE = CONFIG['core']['logger']['logfile']
EXCFILE = CONFIG['core']['logger']['excfile']
ROTATE = CONFIG['core']['logger']['rotate']
BACKUPS = CONFIG['core']['logger']['backups']
DATEFMT = '%Y-%m-%d %H:%M:%S'

HOME = os.path.expanduser(CONFIG['core']['logger']['home'])

def bounded(handler: logging.Handler, low: int, high: int, fmt: str, datefmt: Optional[str] = None) -> logging.Handler:
    """Restrict the handler to levels within [low, high]."""
    handler.setLevel(low)
    handler.addFilter(lambda record: low <= record.levelno <= high)
    handler.setFormatter(logging.Formatter(fmt, datefmt))
    return handler

def rotating(name: str) -> logging.Handler:
    return logging.handlers.RotatingFileHandler(os.path.join(HOME, name), maxBytes=ROTATE, backupCount=BACKUPS, delay=True)

logging.addLevelName(TRACEBACK, 'TRACEBACK')

logger = logging.getLogger('wignerkit')
logger.addHandler(logging.NullHandler())
logger.setLevel(logging.INFO)

if is_root():
    try:
        os.makedirs(HOME, exist_ok=True)
        logger.addHandler(bounded(rotating(LOGFILE), logging.DEBUG, logging.CRITICAL, RECORD, DATEFMT))
        logger.addHandler(bounded(rotating(EXCFILE), TRACEBACK, TRACEBACK, TRACE, DATEFMT))
    except OSError:
        pass
    logger.addHandler(bounded(logging.StreamHandler(sys.stderr), logging.INFO, logging.INFO, CONSOLE))
    logger.addHandler(bounded(logging.StreamHandler(sys.stderr), logging.WARNING, logging.CRITICAL, ERROR))
    logger.debug('WignerKit -- started')

def force_debug(state: bool = True) -> None:
    """Switch the library logger to the debug level (or back to info)."""
    logger.setLevel(logging.DEBUG if state else logging.INFO)
    logger.debug('Force -- Debug logging!')
