"""Analyze the entanglement seen by a boosted observer for a single pair of speeds."""

# type annotations
from __future__ import annotations

# standard libraries
import logging

# internal libraries
from ..api import analyze
from ..core.configure import get_defaults
from ..core.custom import patched_error, patched_exceptions
from ..core.options import return_options
from ..support.table import FORMATS

# external libraries
from cmdkit.app import Application
from cmdkit.cli import Interface

logger = logging.getLogger(__name__)

DEF = get_defaults().analyze

PROGRAM = f'wignerkit analyze'

USAGE = f"""\
usage: {PROGRAM} [<opt>...] [<flg>...]
{__doc__}\
"""

HELP = f"""\
{USAGE}

options:
-x, --v1         REAL  Speed of the particle, in units of c (within [0, 1]); defaults to {DEF.v1}.
-y, --v2         REAL  Speed of the boosted observer, in units of c (within [0, 1]); defaults to {DEF.v2}.
-o, --out        PATH  Write the record to a file; defaults to standard output.
-f, --format     STR   Output format ({' | '.join(FORMATS)}); defaults to {DEF.format}.
-p, --precision  INT   Significant digits of written values (within [1, 17]); defaults to {DEF.precision}.

flags:
-N, --noverify         Skip the cross check against the first principles pipeline.
-O, --options          Show the available options (i.e., defaults and mappings) and exit.
-h, --help             Show this message and exit.

notes:  A speed of exactly one is taken as the light-speed limit. Columns are v1, v2, omega (radians),
        cos2w, S (entropy of the velocity state), E (relative entropy of entanglement), B (maximal CHSH
        value), and C (concurrence).
"""

# default constants
STR_FAILED = 'Unable to analyze the boosted state!'

class AnalyzeApp(Application):
    """Application class for analyze command."""

    interface = Interface(PROGRAM, USAGE, HELP)
    setattr(interface, 'error', patched_error(STR_FAILED))
    exceptions = patched_exceptions(STR_FAILED)

    ALLOW_NOARGS: bool = True

    interface.add_argument('-x', '--v1', type=float)
    interface.add_argument('-y', '--v2', type=float)
    interface.add_argument('-o', '--out')
    interface.add_argument('-f', '--format', choices=FORMATS)
    interface.add_argument('-p', '--precision', type=int)
    interface.add_argument('-N', '--noverify', action='store_true')
    interface.add_argument('-O', '--options', action='store_true')

    def run(self) -> None:
        """Buisness logic for analyzing from command line."""

        if getattr(self, 'options'):
            return_options('analyze')
            return

        options = {'v1', 'v2', 'out', 'format', 'precision'}
        local = {key: getattr(self, key) for key in options}
        if getattr(self, 'noverify'): local['verify'] = False
        logger.debug(f'cli -- Returned: {local}')
        analyze(**local, cmdline=True)
