"""Errors raised by WignerKit, and their reporting."""

# type annotations
from __future__ import annotations
from typing import Any, Callable

# standard libraries
import logging
import sys
import traceback
from functools import wraps

# internal libraries
from .tools import is_interactive

logger = logging.getLogger('wignerkit')

# define library (public) interface
__all__ = ['DomainError', 'LibraryError', 'NumericalError', 'ParallelError', 'SelftestError', 'StreamError',
           'TRACEBACK', 'error', 'handle_exception', ]

# level above critical; reaches the traceback file only
TRACEBACK = logging.CRITICAL + 1

class DomainError(ValueError):
    """An input lies outside the domain of an operation (a speed outside [0, 1], a bad grid or format)."""

class NumericalError(ArithmeticError):
    """A numerical procedure did not converge, or disagrees with its closed form beyond tolerance."""

class SelftestError(Exception):
    """One or more self-test suites failed."""

class LibraryError(Exception):
    """Failure of a library or support routine outside the numerics, such as writing a table."""

class ParallelError(Exception):
    """Inconsistent process layout or distributed results."""

class StreamError(Exception):
    """Missing or malformed arguments while processing the argument stream."""

def handle_exception(exception: BaseException, patch: str = '') -> None:
    """Log a summary of the exception on stderr and its traceback to the traceback file."""
    summary = f'{type(exception).__name__}: {exception}'
    logger.error(f'{patch}\n{summary}' if patch else summary)
    trace = ''.join(traceback.format_exception(type(exception), exception, exception.__traceback__))
    logger.log(TRACEBACK, f'Unhandled {summary}\n\n{trace}')

def error(patch: str = '') -> Callable[[Callable[..., Any]], Callable[..., Any]]:
    """Decorator factory for api functions which log rather than raise; exits with status one
    outside of an interactive session."""
    def decorator(function: Callable[..., Any]) -> Callable[..., Any]:
        @wraps(function)
        def wrapper(**kwargs):
            try:
                return function(**kwargs)
            except Exception as exception:
                handle_exception(exception, patch)
                if not is_interactive(): sys.exit(1)
                return None
        return wrapper
    return decorator
