"""Custom argparse actions, and the listing of command defaults (-O/--options)."""

# type annotations
from __future__ import annotations

# standard libraries
import argparse

# internal libraries
from .configure import get_defaults
from .logging import force_debug
from .parallel import force_parallel
from ..resources import CONFIG, MAPPING

# define library (public) interface
__all__ = ['DebugLogging', 'ForceParallel', 'return_options', ]

# define configuration constants (internal)
MIN_DEF = CONFIG['core']['options']['mindef']
PAD_DEF = CONFIG['core']['options']['paddef']

class DebugLogging(argparse.Action):
    """Switch to debug logging as soon as the flag is parsed."""
    def __call__(self, parser, namespace, values, option_string=None):
        setattr(namespace, self.dest, True)
        force_debug()

class ForceParallel(argparse.Action):
    """Assume a parallel layout as soon as the flag is parsed."""
    def __call__(self, parser, namespace, values, option_string=None):
        setattr(namespace, self.dest, True)
        force_parallel()

def return_options(command: str) -> None:
    """Print the library defaults of wignerkit <command>, marking those shared from the general section."""
    options = dict(get_defaults()[command])
    shared = MAPPING.get(command, {})
    width = max([len(name) for name in options] + [MIN_DEF, ]) + PAD_DEF
    show = lambda value: '--' if value == '' else value
    mark = lambda name: f'    [{".".join(shared[name])}]' if name in shared else ''
    lines = [f'{name: <{width}} {show(value)}{mark(name)}' for name, value in sorted(options.items())]
    print('\n'.join([
        f'The following library defaults are provided for wignerkit {command}',
        f'(bracketed are shared by every command through the general section of the packaged defaults):',
        f'',
        f'{"Options": <{width}} Default Values',
        f'{"-------": <{width}} --------------',
        *lines,
        ]))
