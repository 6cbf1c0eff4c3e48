"""Sweep the analysis over a grid of speeds and write the surface as a table."""

# type annotations
from __future__ import annotations

# standard libraries
import logging

# internal libraries
from ..api import sweep
from ..core.configure import get_defaults
from ..core.custom import patched_error, patched_exceptions
from ..core.options import return_options
from ..core.parse import ListFloat
from ..support.table import FORMATS

# external libraries
from cmdkit.app import Application
from cmdkit.cli import Interface

logger = logging.getLogger(__name__)

DEF = get_defaults().sweep

PROGRAM = f'wignerkit sweep'

USAGE = f"""\
usage: {PROGRAM} [<opt>...] [<flg>...]
{__doc__}\
"""

HELP = f"""\
{USAGE}

options:
-n, --grid       INT   Number of points along each axis (at least two); defaults to {DEF.grid}.
-X, --v1-range   LIST  Range MIN,MAX of particle speeds (within [0, 1]); defaults to {DEF.v1range}.
-Y, --v2-range   LIST  Range MIN,MAX of observer speeds (within [0, 1]); defaults to {DEF.v2range}.
-o, --out        PATH  Write the table to a file; defaults to standard output.
-f, --format     STR   Output format ({' | '.join(FORMATS)}); defaults to {DEF.format}.
-p, --precision  INT   Significant digits of written values (within [1, 17]); defaults to {DEF.precision}.

flags:
-C, --verify           Cross check every point against the first principles pipeline (slower).
-O, --options          Show the available options (i.e., defaults and mappings) and exit.
-h, --help             Show this message and exit.

notes:  Rows are written in row-major order, v1 outer and v2 inner, with both endpoints of each range.
        Under mpirun the rows are shared across processes; the table is identical to a serial run.
"""

# default constants
STR_FAILED = 'Unable to sweep the grid of speeds!'

class SweepApp(Application):
    """Application class for sweep command."""

    interface = Interface(PROGRAM, USAGE, HELP)
    setattr(interface, 'error', patched_error(STR_FAILED))
    exceptions = patched_exceptions(STR_FAILED)

    ALLOW_NOARGS: bool = True

    interface.add_argument('-n', '--grid', type=int)
    interface.add_argument('-X', '--v1-range', dest='v1range', type=ListFloat)
    interface.add_argument('-Y', '--v2-range', dest='v2range', type=ListFloat)
    interface.add_argument('-o', '--out')
    interface.add_argument('-f', '--format', choices=FORMATS)
    interface.add_argument('-p', '--precision', type=int)
    interface.add_argument('-C', '--verify', action='store_true')
    interface.add_argument('-O', '--options', action='store_true')

    def run(self) -> None:
        """Buisness logic for sweeping from command line."""

        if getattr(self, 'options'):
            return_options('sweep')
            return

        options = {'grid', 'v1range', 'v2range', 'out', 'format', 'precision'}
        local = {key: getattr(self, key) for key in options}
        if getattr(self, 'verify'): local['verify'] = True
        logger.debug(f'cli -- Returned: {local}')
        sweep(**local, cmdline=True)
