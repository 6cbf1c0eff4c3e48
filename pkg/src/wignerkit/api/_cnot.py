"""Tabulate the fidelity of the boosted state with its light-speed (cnot) limit."""

# type annotations
from __future__ import annotations
from typing import Any, Optional

# standard libraries
import logging

# internal libraries
from ..core.error import DomainError
from ..core.parallel import safe, single
from ..core.progress import get_bar
from ..core.stream import Instructions, mail
from ..library.cnot_limit import calc_fidelities, write_fidelities
from ..support.kinematics import Velocity
from ..support.table import OutputManager, validate_output
from ..support.types import Fidelities

logger = logging.getLogger(__name__)

# define public interface
__all__ = ['cnot', ]

def adapt_arguments(**args: Any) -> dict[str, Any]:
    """Process arguments to implement behaviors; will throw if some defaults missing."""
    tlist = args['tlist']
    if isinstance(tlist, (int, float)):
        tlist = [tlist, ]
    if not tlist:
        raise DomainError('At least one value of t is required!')
    args['tlist'] = [Velocity(t).beta for t in tlist]
    validate_output(format=args['format'], precision=args['precision'])
    logger.debug(f'api -- Validated the path of speeds and output options.')
    return args

def attach_context(**args: Any) -> dict[str, Any]:
    args['context'] = get_bar(null=True)
    return args

def log_messages(**args: Any) -> dict[str, Any]:
    """Log screen messages to logger; will throw if some defaults missing."""
    tlist = args['tlist']
    tmsgs = f'[{",".join(str(t) for t in tlist[:5])}{", ..." if len(tlist) > 5 else ""}]'
    message = '\n'.join([
        f'Tabulating the fidelity with the light-speed limit state along v1 = v2 = t:',
        f'  points        = {len(tlist)}',
        f'  t             = {tmsgs}',
        f'  output        = {OutputManager(args["out"]).where}',
        f'',
        f'Computing the fidelities ...',
        ])
    logger.info(message)
    return args

# default constants for handling the argument stream
PACKAGES = {'tlist', 'out', 'format', 'precision', 'result'}
ROUTE = ('cnot', )
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

@safe
def cnot(**arguments: Any) -> Optional[Fidelities]:
    """Python application interface for the light-speed (cnot) limit of the boosted state.

    This method evaluates, for each t, the fidelity of the state seen at v1 = v2 = t with the state reached
    in the limit of both speeds equal to the speed of light, in which the Wigner rotation acts as a
    controlled-not of the spin on the velocity. The fidelity rises from one half at rest to one at t = 1.

    Keyword Arguments:
        tlist (list):       Speeds t (within [0, 1]) at which to evaluate the fidelity.
        out (str):          Path of the output file; standard output when empty.
        format (str):       Output format, either csv or json.
        precision (int):    Significant digits of the written values (within [1, 17]).
        result (bool):      Return the (t, omega, fidelity) rows.
    """
    args = process_arguments(**arguments)
    result = args.pop('result')
    cmdline = args.pop('cmdline', False)
    out = args.pop('out')
    fmt, precision = args.pop('format'), args.pop('precision')

    with args.pop('context')() as progress:
        table = calc_fidelities(tlist=args['tlist'], tick=progress)

    if out or cmdline: write_fidelities(table=table, out=out, format=fmt, precision=precision)
    if not result: return None
    return table
