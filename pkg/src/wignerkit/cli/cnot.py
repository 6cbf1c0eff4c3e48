"""Tabulate the fidelity of the boosted state with its light-speed (cnot) limit."""

# type annotations
from __future__ import annotations

# standard libraries
import logging

# internal libraries
from ..api import cnot
from ..core.configure import get_defaults
from ..core.custom import patched_error, patched_exceptions
from ..core.options import return_options
from ..core.parse import ListFloat
from ..support.table import FORMATS

# external libraries
from cmdkit.app import Application
from cmdkit.cli import Interface

logger = logging.getLogger(__name__)

DEF = get_defaults().cnot

PROGRAM = f'wignerkit cnot-limit'

USAGE = f"""\
usage: {PROGRAM} [<opt>...] [<flg>...]
{__doc__}\
"""

HELP = f"""\
{USAGE}

options:
-t, --t-list     LIST  Speeds t (within [0, 1]) with v1 = v2 = t; defaults to {DEF.tlist}.
-o, --out        PATH  Write the table to a file; defaults to standard output.
-f, --format     STR   Output format ({' | '.join(FORMATS)}); defaults to {DEF.format}.
-p, --precision  INT   Significant digits of written values (within [1, 17]); defaults to {DEF.precision}.

flags:
-O, --options          Show the available options (i.e., defaults and mappings) and exit.
-h, --help             Show this message and exit.

notes:  Columns are t, omega (radians), and the fidelity with the state reached when both speeds equal
        the speed of light; the fidelity rises from one half at t = 0 to one at t = 1.
"""

# default constants
STR_FAILED = 'Unable to tabulate the cnot limit!'

class CnotApp(Application):
    """Application class for cnot-limit command."""

    interface = Interface(PROGRAM, USAGE, HELP)
    setattr(interface, 'error', patched_error(STR_FAILED))
    exceptions = patched_exceptions(STR_FAILED)

    ALLOW_NOARGS: bool = True

    interface.add_argument('-t', '--t-list', dest='tlist', type=ListFloat)
    interface.add_argument('-o', '--out')
    interface.add_argument('-f', '--format', choices=FORMATS)
    interface.add_argument('-p', '--precision', type=int)
    interface.add_argument('-O', '--options', action='store_true')

    def run(self) -> None:
        """Buisness logic for tabulating the cnot limit from command line."""

        if getattr(self, 'options'):
            return_options('cnot')
            return

        options = {'tlist', 'out', 'format', 'precision'}
        local = {key: getattr(self, key) for key in options}
        logger.debug(f'cli -- Returned: {local}')
        cnot(**local, cmdline=True)
