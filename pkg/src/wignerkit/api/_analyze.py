"""Analyze the entanglement of a single pair of speeds."""

# type annotations
from __future__ import annotations
from typing import Any, Optional

# standard libraries
import logging

# internal libraries
from ..core.parallel import safe, single, squash
from ..core.progress import get_bar
from ..core.stream import Instructions, mail
from ..resources import CONFIG
from ..support.kinematics import Velocity
from ..support.measures import AnalysisRecord, analyze as analyze_pair
from ..support.table import OutputManager, render, validate_output

logger = logging.getLogger(__name__)

# define public interface
__all__ = ['analyze', ]

# define configuration constants (internal)
HEADER = CONFIG['analyze']['header']

def adapt_arguments(**args: Any) -> dict[str, Any]:
    """Process arguments to implement behaviors; will throw if some defaults missing."""
    args['v1'] = Velocity(args['v1'])
    args['v2'] = Velocity(args['v2'])
    validate_output(format=args['format'], precision=args['precision'])
    logger.debug(f'api -- Validated the speeds and output options.')
    return args

def attach_context(**args: Any) -> dict[str, Any]:
    """A single point never shows progress."""
    args['context'] = get_bar(null=True)
    return args

def log_messages(**args: Any) -> dict[str, Any]:
    """Log screen messages to logger; will throw if some defaults missing."""
    verify = ' (verified against the first principles pipeline)' if args['verify'] else ''
    message = '\n'.join([
        f'Analyzing the boosted state with the following:',
        f'  v1            = {args["v1"].beta}',
        f'  v2            = {args["v2"].beta}',
        f'  output        = {OutputManager(args["out"]).where}',
        f'',
        f'Computing the Wigner angle and entanglement measures{verify} ...',
        ])
    logger.info(message)
    return args

# default constants for handling the argument stream
PACKAGES = {'v1', 'v2', 'verify', 'out', 'format', 'precision', 'result'}
ROUTE = ('analyze', )
PRIORITY = {'cmdline'}
CRATES = (adapt_arguments, log_messages, attach_context)
DROPS: set[str] = set()
MAPPING: dict[str, str] = {}
INSTRUCTIONS = Instructions(packages=PACKAGES, route=ROUTE, priority=PRIORITY, crates=CRATES, drops=DROPS, mapping=MAPPING)

@single
@mail(INSTRUCTIONS)
def process_arguments(**arguments: Any) -> dict[str, Any]:
    """Composition of behaviors intended prior to dispatching to library."""
    return arguments

@squash
def write_record(*, record: AnalysisRecord, out: str, format: str, precision: int) -> None:
    """Write the record as a one row table."""
    with OutputManager(out) as output:
        output.write(render([record.row()], HEADER, format=format, precision=precision))

@safe
def analyze(**arguments: Any) -> Optional[AnalysisRecord]:
    """Python application interface for analyzing the entanglement seen by a boosted observer.

    This method computes, for a spin-1/2 particle in an equal superposition of two opposite velocities
    (speed v1), the Wigner rotation seen by an observer boosted perpendicular to the motion (speed v2), and
    from it the entropy of the velocity state, the relative entropy of entanglement, the maximal CHSH value,
    and the concurrence. Speeds are in units of c; a speed of exactly one is taken as the light-speed limit.

    Keyword Arguments:
        v1 (float):         Speed of the particle in its average rest frame (within [0, 1]).
        v2 (float):         Speed of the boosted observer (within [0, 1]).
        verify (bool):      Cross check the closed forms against the first principles pipeline.
        out (str):          Path of the output file; standard output when empty.
        format (str):       Output format, either csv or json.
        precision (int):    Significant digits of the written values (within [1, 17]).
        result (bool):      Return the analysis record.

    Notes:
        Data is written to the output file when one is given, and printed when called from the command line.
    """
    args = process_arguments(**arguments)
    result = args.pop('result')
    cmdline = args.pop('cmdline', False)
    out = args.pop('out')
    fmt, precision = args.pop('format'), args.pop('precision')

    with args.pop('context')() as progress:
        record = analyze_pair(args['v1'], args['v2'], verify=args['verify'])
        progress()

    if out or cmdline: write_record(record=record, out=out, format=fmt, precision=precision)
    if not result: return None
    return record
