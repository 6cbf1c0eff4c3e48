"""Sweep the entanglement analysis over a grid of speeds."""

# type annotations
from __future__ import annotations
from typing import Any, Optional

# standard libraries
import logging
import sys

# internal libraries
from ..core.parallel import is_root, safe, single
from ..core.progress import get_bar
from ..core.stream import Instructions, mail
from ..library.sweep_grid import SweepConfig, calc_sweep, write_sweep
from ..resources import CONFIG
from ..support.table import OutputManager
from ..support.types import Records

logger = logging.getLogger(__name__)

# define public interface
__all__ = ['sweep', ]

# define configuration constants (internal)
SWITCH = CONFIG['sweep']['switch']

def adapt_arguments(**args: Any) -> dict[str, Any]:
    """Process arguments to implement behaviors; will throw if some defaults missing."""
    args['config'] = SweepConfig.from_ranges(v1range=args['v1range'], v2range=args['v2range'], grid=args['grid'],
                                             out=args['out'], format=args['format'], precision=args['precision'])
    logger.debug(f'api -- Built and validated the sweep configuration.')
    return args

def attach_context(**args: Any) -> dict[str, Any]:
    """Provide a progress bar if appropriate."""
    large = args['config'].points >= SWITCH
    args['context'] = get_bar(null=not (large and sys.stderr.isatty()))
    return args

def log_messages(**args: Any) -> dict[str, Any]:
    """Log screen messages to logger; will throw if some defaults missing."""
    config = args['config']
    verify = ' (verified against the first principles pipeline)' if args['verify'] else ''
    message = '\n'.join([
        f'Sweeping the entanglement analysis over the following grid:',
        f'  v1            = [{config.v1_min}, {config.v1_max}]',
        f'  v2            = [{config.v2_min}, {config.v2_max}]',
        f'  points        = {config.grid_n} x {config.grid_n}',
        f'  output        = {OutputManager(config.output_path).where}',
        f'',
        f'Evaluating the grid{verify} ...',
        ])
    logger.info(message)
    return args

# default constants for handling the argument stream
PACKAGES = {'v1range', 'v2range', 'grid', 'verify', 'out', 'format', 'precision', 'result'}
ROUTE = ('sweep', )
PRIORITY = {'cmdline'}
CRATES = (adapt_arguments, attach_context, log_messages)
DROPS = {'v1range', 'v2range', 'grid', 'out', 'format', 'precision'}
MAPPING: dict[str, str] = {}
INSTRUCTIONS = Instructions(packages=PACKAGES, route=ROUTE, priority=PRIORITY, crates=CRATES, drops=DROPS, mapping=MAPPING)

@single
@mail(INSTRUCTIONS)
def process_arguments(**arguments: Any) -> dict[str, Any]:
    """Composition of behaviors intended prior to dispatching to library."""
    return arguments

@safe
def sweep(**arguments: Any) -> Optional[Records]:
    """Python application interface for sweeping the analysis over a rectangular grid of speeds.

    This method evaluates the Wigner angle and the entanglement measures at every point of a grid over
    (v1, v2), in row-major order with v1 outer and v2 inner. Both axes include their endpoints, and a speed
    of exactly one is taken as the light-speed limit. Under MPI the rows are shared across processes and
    the root process alone assembles and writes the table, which is identical to that of a serial run.

    Keyword Arguments:
        v1range (list):     Pair [min, max] of particle speeds (within [0, 1]).
        v2range (list):     Pair [min, max] of observer speeds (within [0, 1]).
        grid (int):         Number of points along each axis (at least two).
        verify (bool):      Cross check every point against the first principles pipeline.
        out (str):          Path of the output file; standard output when empty.
        format (str):       Output format, either csv or json.
        precision (int):    Significant digits of the written values (within [1, 17]).
        result (bool):      Return the analysis records (root process only).
    """
    args = process_arguments(**arguments)
    result = args.pop('result')
    cmdline = args.pop('cmdline', False)
    config = args.pop('config')
    context = args.pop('context') if is_root() else get_bar(null=True)

    with context(config.points) as progress:
        records = calc_sweep(config=config, verify=args['verify'], tick=progress)

    if records is not None and (config.output_path or cmdline):
        write_sweep(records=records, config=config)
    if not result: return None
    return records
