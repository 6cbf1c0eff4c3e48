"""Safe versions (log and exit rather than raise) of the wignerkit api."""

# internal libraries
from .core.error import error
from . import api as wigner

# define public interface
__all__ = ['analyze', 'cnot', 'selftest', 'sweep', ]

analyze = error('Unable to analyze the boosted state!')(wigner.analyze)
cnot = error('Unable to tabulate the cnot limit!')(wigner.cnot)
selftest = error('Self-test failed!')(wigner.selftest)
sweep = error('Unable to sweep the grid of speeds!')(wigner.sweep)
