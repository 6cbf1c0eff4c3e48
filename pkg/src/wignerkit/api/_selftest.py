"""Run the property suites of the kinematics, states, measures, and quantum core."""

# type annotations
from __future__ import annotations
from typing import Any, Optional

# standard libraries
import logging
import sys

# internal libraries
from ..core.parallel import safe, single
from ..core.progress import get_bar
from ..core.stream import Instructions, mail
from ..library.selftest import SUITES, SuiteResult, assert_passed, run_suites, write_report
from ..support.table import OutputManager, validate_output

logger = logging.getLogger(__name__)

# define public interface
__all__ = ['selftest', ]

def adapt_arguments(**args: Any) -> dict[str, Any]:
    """Process arguments to implement behaviors; will throw if some defaults missing."""
    names = args.get('suites')
    if isinstance(names, str):
        names = [names, ]
    args['names'] = list(SUITES) if not names else list(names)
    validate_output(format=args['format'], precision=args['precision'])
    return args

def attach_context(**args: Any) -> dict[str, Any]:
    """Provide a progress bar if appropriate."""
    args['context'] = get_bar(null=not sys.stderr.isatty())
    return args

def log_messages(**args: Any) -> dict[str, Any]:
    """Log screen messages to logger; will throw if some defaults missing."""
    names = args['names']
    message = '\n'.join([
        f'Running the self-test suites:',
        f'  suites        = {len(names)}',
        f'  output        = {OutputManager(args["out"]).where}',
        f'',
        f'Checking the invariants ...',
        ])
    logger.info(message)
    return args

# default constants for handling the argument stream
PACKAGES = {'suites', 'out', 'format', 'precision', 'result'}
ROUTE = ('selftest', )
PRIORITY = {'cmdline'}
CRATES = (adapt_arguments, attach_context, log_messages)
DROPS = {'suites', }
MAPPING: dict[str, str] = {}
INSTRUCTIONS = Instructions(packages=PACKAGES, route=ROUTE, priority=PRIORITY, crates=CRATES, drops=DROPS, mapping=MAPPING)

@single
@mail(INSTRUCTIONS)
def process_arguments(**arguments: Any) -> dict[str, Any]:
    """Composition of behaviors intended prior to dispatching to library."""
    return arguments

@safe
def selftest(**arguments: Any) -> Optional[list[SuiteResult]]:
    """Python application interface for running the self-test suites.

    This method runs every (or the named) property suite, writes a report with the worst observed error of
    each suite, its tolerance, and the input at which it occurred, and raises a SelftestError naming each
    failed suite once the report is written.

    Keyword Arguments:
        suites (list):      Names of the suites to run; all when not given.
        out (str):          Path of the output file; standard output when empty.
        format (str):       Output format, either csv or json.
        precision (int):    Significant digits of the written values (within [1, 17]).
        result (bool):      Return the suite results.
    """
    args = process_arguments(**arguments)
    result = args.pop('result')
    cmdline = args.pop('cmdline', False)
    out = args.pop('out')
    fmt, precision = args.pop('format'), args.pop('precision')
    names = args.pop('names')

    with args.pop('context')(len(names)) as progress:
        results = run_suites(names=names, tick=progress)

    if out or cmdline: write_report(results=results, out=out, format=fmt, precision=precision)
    assert_passed(results)
    if not result: return None
    return results
