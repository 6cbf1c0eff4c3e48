"""Support for custom actions and other options from the python interface."""

from .core.logging import force_debug
from .core.options import return_options
from .core.parallel import force_parallel
