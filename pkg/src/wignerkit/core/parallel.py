"""Process layout of a run (serial, or under an MPI launcher) and decorators placing work onto it."""

# type annotations
from __future__ import annotations
from typing import Any, Callable, Optional, TypeVar, cast
from types import ModuleType

# system libraries
import logging
import os
from dataclasses import dataclass
from functools import lru_cache, wraps
from importlib.util import find_spec

# internal libraries
from .error import ParallelError
from ..resources import CONFIG

# external libraries
import psutil # type: ignore

F = TypeVar('F', bound=Callable[..., Any])

logger = logging.getLogger(__name__)

# define library (public) interface
__all__ = ['Index', 'collect', 'force_parallel', 'get_rank', 'get_size', 'is_parallel', 'is_root',
           'is_serial', 'is_supported', 'safe', 'single', 'squash', ]

# default constants
LAUNCHERS = CONFIG['core']['parallel']['commands']
MPIDIST = CONFIG['core']['parallel']['distribution']
ROOT = CONFIG['core']['parallel']['root']
SIZE = CONFIG['core']['parallel']['size']

# assumed layout when set (-P/--parallel); detected from the launcher otherwise
_forced: Optional[bool] = None

@dataclass(frozen=True)
class Index:
    """Contiguous block of tasks [low, high] owned by one process."""
    low: int
    high: int
    tasks: int

    @property
    def width(self) -> int:
        return self.high - self.low + 1

    @property
    def range(self) -> range:
        return range(self.low, self.high + 1)

    @classmethod
    def from_simple(cls, tasks: int = 1, *, rank: Optional[int] = None, size: Optional[int] = None) -> Index:
        """Even split of the tasks in rank order; the first (tasks mod size) processes take one more.

        Rank and size default to those of the running process; blocks may be empty when there are
        fewer tasks than processes.
        """
        rank = get_rank() if rank is None else rank
        size = get_size() if size is None else size
        if not 0 <= rank < size:
            raise ParallelError(f'Rank {rank} is not a member of a communicator of size {size}!')
        base, extra = divmod(tasks, size)
        low = rank * base + min(rank, extra)
        width = base + 1 if rank < extra else base
        return cls(low=low, high=low + width - 1, tasks=tasks)

def force_parallel(state: bool = True) -> None:
    """Assume a parallel (or serial) layout rather than detecting it."""
    global _forced
    _forced = state
    logger.debug(f'Force -- Assuming a {"parallel" if state else "serial"} layout!')

def is_supported() -> bool:
    """The python MPI interface is installed."""
    return find_spec(MPIDIST) is not None

def is_parallel() -> bool:
    """Launched by an MPI launcher, judged by the parent process, unless forced."""
    if _forced is not None: return _forced
    try:
        return psutil.Process(os.getppid()).name() in LAUNCHERS
    except psutil.Error:
        return False

def is_serial() -> bool:
    return not is_parallel()

@lru_cache(maxsize=None)
def mpi() -> ModuleType:
    """Python MPI interface, imported on first use; raises if unavailable."""
    if not is_supported():
        raise ParallelError(f'Parallel layout requires the {MPIDIST} library, which is not installed!')
    from mpi4py import MPI # type: ignore
    if MPI.COMM_WORLD.Get_rank() == ROOT:
        logger.debug(f'Parallel -- Loaded {MPIDIST} with {MPI.COMM_WORLD.Get_size()} processes.')
    return MPI

def get_rank() -> int:
    return mpi().COMM_WORLD.Get_rank() if is_parallel() else ROOT

def get_size() -> int:
    return mpi().COMM_WORLD.Get_size() if is_parallel() else SIZE

def is_root() -> bool:
    """The running process is the root process; always true when serial."""
    return get_rank() == ROOT

def collect(function: F) -> F:
    """Run on every process and gather the results onto root in rank order.

    Other processes receive None; a serial call returns a list of its one result.
    """
    @wraps(function)
    def wrapper(*args, **kwargs):
        if is_serial(): return [function(*args, **kwargs), ]
        result = function(*args, **kwargs)
        logger.debug(f'Collect -- Gathering the results of <{function.__name__}> onto root.')
        return mpi().COMM_WORLD.gather(result, root=ROOT)
    return cast(F, wrapper)

def safe(function: F) -> F:
    """Mark a function that does the same (sensible) thing on every process; calls straight through."""
    @wraps(function)
    def wrapper(*args, **kwargs):
        return function(*args, **kwargs)
    return cast(F, wrapper)

def squash(function: F) -> F:
    """Run on the root process only; other processes get None."""
    @wraps(function)
    def wrapper(*args, **kwargs):
        if not is_root(): return None
        return function(*args, **kwargs)
    return cast(F, wrapper)

def single(function: F) -> F:
    """Run on the root process and broadcast its result (or failure) to every process."""
    @wraps(function)
    def wrapper(*args, **kwargs):
        if is_serial(): return function(*args, **kwargs)
        result: Any = None
        if is_root():
            try:
                result = function(*args, **kwargs)
            except Exception as error:
                result = error
        logger.debug(f'Single -- Sharing the result of <{function.__name__}> from root.')
        result = mpi().COMM_WORLD.bcast(result, root=ROOT)
        if isinstance(result, Exception): raise result
        return result
    return cast(F, wrapper)
