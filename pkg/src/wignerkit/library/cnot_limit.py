"""Fidelity of the boosted state with its light-speed (cnot) limit along equal speeds."""

# type annotations
from __future__ import annotations
from typing import Optional, Sequence

# standard libraries
import logging

# internal libraries
from ..core.error import DomainError
from ..core.parallel import safe, squash
from ..resources import CONFIG
from ..support.kinematics import Velocity, wigner_angle
from ..support.states import cnot_limit_check
from ..support.table import OutputManager, render
from ..support.types import Fidelities, Tick

logger = logging.getLogger(__name__)

# define library (public) interface
__all__ = ['calc_fidelities', 'write_fidelities', ]

# define configuration constants (internal)
HEADER = CONFIG['cnot']['header']

@safe
def calc_fidelities(*, tlist: Sequence[float], tick: Optional[Tick] = None) -> Fidelities:
    """Fidelity at v1 = v2 = t for each t; returns (t, omega, fidelity) rows."""
    if not tlist:
        raise DomainError('At least one value of t is required!')
    speeds = [Velocity(t) for t in tlist]
    table = []
    for v in speeds:
        table.append((v.beta, wigner_angle(v, v).omega, cnot_limit_check(v, v)))
        if tick is not None: tick()
    return table

@squash
def write_fidelities(*, table: Fidelities, out: str, format: str, precision: int) -> None:
    """Write the fidelity table."""
    text = render((dict(zip(HEADER, row)) for row in table), HEADER, format=format, precision=precision)
    with OutputManager(out) as output:
        output.write(text)
