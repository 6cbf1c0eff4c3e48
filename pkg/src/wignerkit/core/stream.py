"""Argument stream of the python interface.

Keyword arguments of an api call are packed under the route of their command, layered over the packaged
defaults, unpacked, passed in turn through the crates (which validate, adapt, and log), and finally pruned
of arguments the library does not take before reaching the decorated function.
"""

# type annotations
from __future__ import annotations
from typing import Any, Callable, Dict, Iterable, Mapping, NamedTuple, Sequence, TypeVar, cast

# standard libraries
import logging
from functools import wraps

# internal libraries
from .configure import get_defaults
from .error import StreamError
from .tools import lookup

F = TypeVar('F', bound=Callable[..., Any])
Crate = Callable[..., Dict[str, Any]]

logger = logging.getLogger(__name__)

# define public interface
__all__ = ['Instructions', 'mail', ]

# define default constants
MSG_KEY = 'Likely malformed or missing arguments in or crates on the stream!'

class Instructions(NamedTuple):
    """How the stream of one api function is processed.

    Packages are the accepted arguments, looked up in the defaults under the route; priority arguments
    skip the defaults and pass straight through; crates run in order; drops are removed and mapping
    renames arguments before the call.
    """
    packages: Iterable[str] = ()
    route: Sequence[str] = ()
    priority: Iterable[str] = ()
    crates: Sequence[Crate] = ()
    drops: Iterable[str] = ()
    mapping: Mapping[str, str] = {}

    def pack(self, stream: Mapping[str, Any]) -> tuple[dict[str, Any], dict[str, Any]]:
        """Split provided arguments into packages (nested under the route) and priority holds; unset (None) are ignored."""
        packed = {key: stream[key] for key in self.packages if stream.get(key) is not None}
        holds = {key: stream[key] for key in self.priority if stream.get(key) is not None}
        for leg in reversed(self.route):
            packed = {leg: packed}
        return packed, holds

    def unpack(self, layered: Mapping[str, Any], holds: Mapping[str, Any]) -> dict[str, Any]:
        """Read the command's arguments back off the route and rejoin the holds."""
        branch = lookup(self.route, layered)
        if branch is None:
            raise StreamError(f'No defaults found along the route {".".join(self.route)}!')
        return {**dict(branch), **holds}

    def prune(self, stream: dict[str, Any]) -> dict[str, Any]:
        """Remove dropped arguments and rename mapped ones."""
        drops = set(self.drops)
        pruned = {key: value for key, value in stream.items() if key not in drops}
        for old, new in self.mapping.items():
            if old in pruned:
                pruned[new] = pruned.pop(old)
        return pruned

def mail(instructions: Instructions) -> Callable[[F], F]:
    """Decorator factory applying the stream (pack, layer, unpack, crates, prune) before the call."""
    def decorator(function: F) -> F:
        @wraps(function)
        def wrapper(**provided):
            logger.debug(f'Stream -- Provided: {list(provided)}')
            packed, holds = instructions.pack(provided)
            stream = instructions.unpack(get_defaults(local=packed), holds)
            try:
                for crate in instructions.crates:
                    stream = crate(**stream)
            except KeyError as error:
                raise StreamError(MSG_KEY) from error
            stream = instructions.prune(stream)
            logger.debug(f'Stream -- Returned: {list(stream)}')
            return function(**stream)
        return cast(F, wrapper)
    return decorator
