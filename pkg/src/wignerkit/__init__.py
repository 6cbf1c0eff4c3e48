"""Package initialization for WignerKit."""

# expose python interface
from . import api as wigner
