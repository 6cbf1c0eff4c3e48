"""Support for custom types, boilerplate, and monkey patching for Application and Interface classes."""

# type annotations
from __future__ import annotations
from typing import TYPE_CHECKING, Any, Callable, Dict, Iterable, Type

# standard libraries
import logging

# internal libraries
from ..core.error import (DomainError, LibraryError, NumericalError, ParallelError,
                          SelftestError, StreamError, handle_exception)
from ..core.parallel import squash
from ..resources import CONFIG

# external libraries
from cmdkit import app
from cmdkit.app import Application, exit_status
from cmdkit.cli import ArgumentError

# static analysis
if TYPE_CHECKING:
    DictApp = Dict[str, Type[Application]]
    Handler = Callable[[Exception], int]

# deal w/ runtime import
else:
    DictApp = None
    Handler = None

logger = logging.getLogger(__name__)

# define library (public) interface
__all__ = ['Dispatch', 'patched_error', 'patched_exceptions', ]

# define configuration constants (internal)
INTERNAL = CONFIG['core']['custom']['internal']
DOMAIN = CONFIG['core']['custom']['domain']

# exit status of each handled exception; most specific first
STATUSES: dict[Type[Exception], int] = {
        DomainError: DOMAIN,
        NumericalError: INTERNAL,
        SelftestError: INTERNAL,
        LibraryError: INTERNAL,
        ParallelError: INTERNAL,
        StreamError: INTERNAL,
        Exception: INTERNAL,
        }

# inject logger back into cmdkit library
Application.log_critical = logger.critical
Application.log_exception = logger.exception

# inject root limited version and help options
setattr(Application, 'handle_help', squash(Application.handle_help))
setattr(Application, 'handle_version', squash(Application.handle_version))
setattr(Application, 'handle_usage', squash(Application.handle_usage))

# inject redefinition of usage message as a success
setattr(app, 'exit_status', exit_status._replace(usage = 0))

class Dispatch(dict):
    """Exception dispatcher resolving handlers along the method resolution order of the exception type."""

    def resolve(self, key: Any) -> Any:
        for kind in getattr(key, '__mro__', (key, )):
            if dict.__contains__(self, kind):
                return kind
        return None

    def __contains__(self, key: Any) -> bool:
        return self.resolve(key) is not None

    def __missing__(self, key: Any) -> Handler:
        kind = self.resolve(key)
        if kind is None: raise KeyError(key)
        return dict.__getitem__(self, kind)

# Create custom error handeling interfaces (monkey patch Application)
def patched_error(patch: str) -> Callable[..., None]:
    """Factory to override simple raise w/ formatted message."""
    def wrapper(message: str) -> None:
        raise ArgumentError('\n'.join((patch, message)))
    logger.debug(f'core -- Providing an ArgumentError w/ message wrapper.')
    return wrapper

def patched_exceptions(patch: str, errors: Iterable[Type[Exception]] = STATUSES) -> Dispatch:
    """Create dictionary based dispatcher for exception handeling."""
    logger.debug(f'core -- Providing an dictionary of logger patched handlers.')
    return Dispatch({error: patched_logging(patch, STATUSES.get(error, INTERNAL)) for error in errors})

def patched_logging(patch: str, status: int = INTERNAL) -> Handler:
    """Factory for patching custom exeption handlers."""
    def wrapper(exception: Exception) -> int:
        handle_exception(exception, patch)
        return status
    logger.debug(f'core -- Providing a wrapper for patched exception handler.')
    return wrapper
