"""Progress bars for the long running operations; drawn on stderr by the root process only."""

# type annotations
from __future__ import annotations
from typing import Any, Callable, ContextManager, Optional

# standard libraries
import sys
import threading
import time
from contextlib import nullcontext
from importlib.util import find_spec

# internal libraries
from .parallel import is_parallel
from ..resources import CONFIG

Bar = Callable[..., ContextManager[Callable[..., None]]]

# define public interface
__all__ = ['SimpleBar', 'get_bar', 'null_bar', ]

# define default constants
BLANK = CONFIG['core']['progress']['blank']
FILLED = CONFIG['core']['progress']['filled']
PREFIX = CONFIG['core']['progress']['prefix']
WIDTH = CONFIG['core']['progress']['width']
CYCLE = CONFIG['core']['progress']['cycle']
TERMINAL = CONFIG['core']['progress']['terminal']
FPS = CONFIG['core']['progress']['fps']

def null_bar(*_: Any, **__: Any) -> ContextManager[Callable[..., None]]:
    """A bar that draws nothing; its tick does nothing."""
    return nullcontext(lambda *_: None)

class SimpleBar:
    """Threaded progress bar; entering returns the tick, which counts one finished task."""

    def __init__(self, total: Optional[int] = None, *, fps: float = FPS):
        self.total = max(int(total), 1) if total is not None else None
        self.delay = 1.0 / fps
        self.count = 0
        self.begun = 0.0
        self.stopped = threading.Event()
        self.thread = threading.Thread(target=self.animate, name='progress', daemon=True)

    def __enter__(self) -> Callable[..., None]:
        self.begun = time.monotonic()
        self.thread.start()
        return self.tick

    def __exit__(self, *_: Any) -> None:
        self.stopped.set()
        self.thread.join()
        self.draw(final=True)

    def tick(self, *_: Any) -> None:
        self.count += 1

    def animate(self) -> None:
        while not self.stopped.wait(self.delay):
            self.draw()

    def line(self, final: bool = False) -> str:
        elapsed = time.monotonic() - self.begun
        rate = self.count / elapsed if elapsed > 1.0 else 0.0
        if self.total is None:
            filled = WIDTH if final else int((elapsed % CYCLE) / CYCLE * WIDTH)
            count = f'{self.count}'
        else:
            filled = min(WIDTH, self.count * WIDTH // self.total)
            count = f'{self.count}/{self.total} [{100 * self.count / self.total:.0f}%]'
        bar = FILLED * filled + BLANK * (WIDTH - filled)
        return f'{PREFIX}|{bar}| {count} in {elapsed:.1f}s ({rate:.2f}/s)'

    def draw(self, final: bool = False) -> None:
        print(self.line(final).ljust(TERMINAL), end='\n' if final else '\r', file=sys.stderr, flush=True)

def get_bar(*, null: bool = False) -> Bar:
    """Best available progress bar; alive-progress when installed and serial, the simple bar otherwise."""
    if null: return null_bar
    if is_parallel() or find_spec('alive_progress') is None: return SimpleBar
    from alive_progress import alive_bar, config_handler # type: ignore
    config_handler.set_global(theme='smooth', unknown='horizontal')
    return alive_bar
