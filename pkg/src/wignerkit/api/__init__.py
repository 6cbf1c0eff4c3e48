"""Package initialization for WignerKit python interface."""

# public interfaces
from ._analyze import analyze
from ._cnot import cnot
from ._selftest import selftest
from ._sweep import sweep
