"""Run the property suites and report the worst observed error of each."""

# type annotations
from __future__ import annotations

# standard libraries
import logging

# internal libraries
from ..api import selftest
from ..core.configure import get_defaults
from ..core.custom import patched_error, patched_exceptions
from ..core.options import return_options
from ..library.selftest import SUITES
from ..support.table import FORMATS

# external libraries
from cmdkit.app import Application
from cmdkit.cli import Interface

logger = logging.getLogger(__name__)

DEF = get_defaults().selftest

PROGRAM = f'wignerkit selftest'

USAGE = f"""\
usage: {PROGRAM} [<suite>...] [<opt>...] [<flg>...]
{__doc__}\
"""

HELP = f"""\
{USAGE}

arguments:
SUITE            STR   Names of the suites to run; defaults to all.

options:
-o, --out        PATH  Write the report to a file; defaults to standard output.
-f, --format     STR   Output format ({' | '.join(FORMATS)}); defaults to {DEF.format}.
-p, --precision  INT   Significant digits of written values (within [1, 17]); defaults to {DEF.precision}.

flags:
-L, --list             List the available suites and exit.
-O, --options          Show the available options (i.e., defaults and mappings) and exit.
-h, --help             Show this message and exit.

notes:  Exits with status 1 if any suite fails, naming the suite and the input at which the
        worst error occurred.
"""

# default constants
STR_FAILED = 'Self-test failed!'

class SelftestApp(Application):
    """Application class for selftest command."""

    interface = Interface(PROGRAM, USAGE, HELP)
    setattr(interface, 'error', patched_error(STR_FAILED))
    exceptions = patched_exceptions(STR_FAILED)

    ALLOW_NOARGS: bool = True

    interface.add_argument('suites', nargs='*')
    interface.add_argument('-o', '--out')
    interface.add_argument('-f', '--format', choices=FORMATS)
    interface.add_argument('-p', '--precision', type=int)
    interface.add_argument('-L', '--list', dest='listing', action='store_true')
    interface.add_argument('-O', '--options', action='store_true')

    def run(self) -> None:
        """Buisness logic for running the suites from command line."""

        if getattr(self, 'options'):
            return_options('selftest')
            return

        if getattr(self, 'listing'):
            print('\n'.join(SUITES))
            return

        options = {'suites', 'out', 'format', 'precision'}
        local = {key: getattr(self, key) for key in options}
        logger.debug(f'cli -- Returned: {local}')
        selftest(**local, cmdline=True)
