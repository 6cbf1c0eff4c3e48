"""Velocity and spin states of a single particle, before and after the Wigner rotation of a boosted observer.

The velocity-spin basis is ordered as

    |+v1>|up>, |+v1>|down>, |-v1>|up>, |-v1>|down>

and the rotation of the spin, conditioned on the sign of the velocity, is R(+w) for |+v1> and R(-w) for
|-v1> with R(w) = [[cos w, i sin w], [i sin w, cos w]]; i.e. exp(i w sigma_x), whose first column is the
image of |up> seen by the boosted observer.
"""

# type annotations
from __future__ import annotations
from typing import Optional, Union

# standard libraries
import logging
import math

# internal libraries
from ..core.error import DomainError
from ..resources import CONFIG
from .kinematics import Speed, WignerAngle, as_velocity, wigner_angle
from .quantum import ComplexMatrix, DensityMatrix, PureState, kron, partial_trace, von_neumann_entropy

# external libraries
import numpy

logger = logging.getLogger(__name__)

# define public interface
__all__ = ['EffectiveTwoQubitState', 'ModeEmbeddedState', 'VelocitySpinState',
           'boost', 'cnot_limit_check', 'cnot_state', 'effective_two_qubit', 'fidelity', 'initial_state',
           'mode_embedding', 'mode_entropy', 'spin_density_matrix', 'velocity_density_closed_form',
           'velocity_density_matrix', 'wigner_unitary', ]

# define configuration constants (internal)
VACUUM = CONFIG['support']['states']['vacuum']
SUPPORT = CONFIG['support']['states']['support']

HALF = math.sqrt(0.5)

# image of each velocity-spin amplitude in the two mode basis (index 3*m1 + m2; vac, up, down)
EMBEDDING = (3, 6, 1, 2)
SECTOR = frozenset(EMBEDDING)

# occupation basis |00>, |01>, |10>, |11>; |+v1> -> |10> and |-v1> -> |01>
OCCUPATION = (2, 1)

class VelocitySpinState(PureState):
    """Pure state over velocity (+v1, -v1) and spin (up, down), tagged with the observer frame."""

    def __init__(self, amplitudes: Union[numpy.ndarray, list], v1: Speed, frame: Optional[Speed] = None):
        super().__init__(amplitudes, (2, 2))
        self.v1 = as_velocity(v1)
        self.frame = None if frame is None else as_velocity(frame)

    def __repr__(self) -> str:
        return f'VelocitySpinState(v1={self.v1.beta}, frame={self.frame}, amplitudes={self.amplitudes.tolist()})'

    @property
    def is_boosted(self) -> bool:
        return self.frame is not None

class ModeEmbeddedState(PureState):
    """Single particle shared by the (+v1, -v1) modes, each mode being empty or holding spin up or down."""

    def __init__(self, amplitudes: Union[numpy.ndarray, list]):
        super().__init__(amplitudes, (3, 3))
        outside = max((abs(a) for index, a in enumerate(self.amplitudes) if index not in SECTOR), default=0.0)
        if outside > VACUUM:
            raise DomainError(f'Embedded state leaves the one particle sector (amplitude {outside:.3e})!')

class EffectiveTwoQubitState(DensityMatrix):
    """Occupation number reading of the velocity modes; supported on the |01>, |10> block."""

    def __init__(self, data: Union[numpy.ndarray, list], *, check: bool = False):
        super().__init__(data, (2, 2), check=check)
        block = numpy.zeros((4, 4), dtype=bool)
        block[numpy.ix_((1, 2), (1, 2))] = True
        outside = numpy.max(numpy.abs(self.data[~block]), initial=0.0)
        if outside > SUPPORT:
            raise DomainError(f'Two qubit state has support outside the occupation block ({outside:.3e})!')

def initial_state(v1: Speed) -> VelocitySpinState:
    """Spin up particle in an equal superposition of opposite velocities, seen in its average rest frame."""
    v1 = as_velocity(v1)
    return VelocitySpinState([HALF, 0.0, HALF, 0.0], v1)

def spin_rotation(angle: WignerAngle, sign: int) -> ComplexMatrix:
    c, s = angle.cos_omega, sign * angle.sin_omega
    return ComplexMatrix([[c, 1j * s], [1j * s, c]])

def wigner_unitary(v1: Speed, v2: Speed) -> ComplexMatrix:
    """Spin rotation controlled by the sign of the velocity, acting on the velocity-spin space."""
    angle = wigner_angle(v1, v2)
    plus = ComplexMatrix([[1, 0], [0, 0]])
    minus = ComplexMatrix([[0, 0], [0, 1]])
    upper, lower = kron(plus, spin_rotation(angle, +1)), kron(minus, spin_rotation(angle, -1))
    return ComplexMatrix(upper.data + lower.data, upper.dims)

def boost(state: VelocitySpinState, v2: Speed) -> VelocitySpinState:
    """The state as seen by an observer boosted perpendicular to the particle motion at speed v2."""
    v2 = as_velocity(v2)
    if state.is_boosted:
        raise DomainError(f'State is already seen from a frame boosted at {state.frame.beta}!')
    unitary = wigner_unitary(state.v1, v2)
    return VelocitySpinState(unitary.data @ state.amplitudes, state.v1, frame=v2)

def velocity_density_matrix(state: VelocitySpinState) -> DensityMatrix:
    """Reduced state of the velocity modes (spin traced out)."""
    return partial_trace(state.projector(), keep=0)

def spin_density_matrix(state: VelocitySpinState) -> DensityMatrix:
    """Reduced state of the spin (velocity traced out)."""
    return partial_trace(state.projector(), keep=1)

def velocity_density_closed_form(angle: WignerAngle) -> DensityMatrix:
    c = angle.cos_two_omega
    return DensityMatrix([[0.5, 0.5 * c], [0.5 * c, 0.5]], (2, ), check=False)

def mode_embedding(state: VelocitySpinState) -> ModeEmbeddedState:
    """Relabel the state as occupations of the +v1 and -v1 modes."""
    amplitudes = numpy.zeros(9, dtype=numpy.complex128)
    amplitudes[list(EMBEDDING)] = state.amplitudes
    return ModeEmbeddedState(amplitudes)

def mode_entropy(state: ModeEmbeddedState, keep: int = 0) -> float:
    """Entropy (bits) of one mode of the embedded state."""
    return von_neumann_entropy(partial_trace(state.projector(), keep=keep))

def effective_two_qubit(rho_v: DensityMatrix) -> EffectiveTwoQubitState:
    """Embed a velocity density matrix into the two qubit occupation basis."""
    if rho_v.dim_row != 2:
        raise DomainError(f'Expected a two dimensional velocity density matrix, not {rho_v.dim_row}!')
    data = numpy.zeros((4, 4), dtype=numpy.complex128)
    data[numpy.ix_(OCCUPATION, OCCUPATION)] = rho_v.data
    return EffectiveTwoQubitState(data)

def cnot_state() -> PureState:
    """The light-speed image of the initial state; spin flipped conditioned on velocity."""
    return PureState([0.5, 0.5j, 0.5, -0.5j], (2, 2))

def fidelity(a: PureState, b: PureState) -> float:
    """Squared overlap of two pure states."""
    if a.amplitudes.shape != b.amplitudes.shape:
        raise DomainError(f'States of sizes {a.amplitudes.size} and {b.amplitudes.size} cannot overlap!')
    return min(1.0, max(0.0, abs(numpy.vdot(a.amplitudes, b.amplitudes))**2))

def cnot_limit_check(v1: Speed, v2: Speed) -> float:
    """Fidelity of the boosted state with its light-speed (cnot) limit."""
    return fidelity(cnot_state(), boost(initial_state(v1), v2))
