"""Entanglement quantifiers of the boosted particle; relative entropy, Horodecki CHSH value, and concurrence."""

# type annotations
from __future__ import annotations
from typing import Any

# standard libraries
import logging
import math
from dataclasses import dataclass

# internal libraries
from ..core.error import DomainError, NumericalError
from ..resources import CONFIG
from .kinematics import Speed, Velocity, WignerAngle, as_velocity, wigner_angle
from .quantum import DensityMatrix, PAULIS, PureState, expectation, hermitian_eigenvalues, kron, von_neumann_entropy
from .states import (EffectiveTwoQubitState, boost, effective_two_qubit, initial_state,
                     velocity_density_matrix)

# external libraries
import numpy
from scipy.special import entr

logger = logging.getLogger(__name__)

# define public interface
__all__ = ['AnalysisRecord', 'CorrelationMatrix', 'analyze', 'bell_chsh_max', 'bell_closed_form',
           'bell_velocity_spin', 'binary_entropy', 'concurrence_pure', 'correlation_matrix',
           'entanglement_of_formation', 'relative_entropy_closed_form', 'relative_entropy_of_entanglement', ]

# define configuration constants (internal)
DIAGONAL = CONFIG['support']['measures']['diagonal']
AGREEMENT = CONFIG['support']['measures']['agreement']
HEADER = CONFIG['analyze']['header']
SLACK = CONFIG['support']['quantum']['density']

@dataclass(frozen=True)
class CorrelationMatrix:
    """Pauli correlations t_ij = tr(rho sigma_i x sigma_j) of a two qubit state; i, j in (x, y, z)."""
    t: numpy.ndarray

    def __post_init__(self) -> None:
        t = numpy.array(self.t, dtype=float)
        if t.shape != (3, 3):
            raise DomainError(f'Correlation matrix must be 3x3, not of shape {t.shape}!')
        if numpy.any(numpy.abs(t) > 1.0 + SLACK):
            raise DomainError('Correlation matrix entries must lie within [-1, 1]!')
        object.__setattr__(self, 't', numpy.clip(t, -1.0, 1.0))

@dataclass(frozen=True)
class AnalysisRecord:
    """Everything computed for one pair of speeds."""
    v1: Velocity
    v2: Velocity
    omega: float
    cos_two_omega: float
    eigs: tuple[float, float]
    entropy_S: float
    entanglement_E: float
    bell_B: float
    concurrence_C: float

    def row(self) -> dict[str, float]:
        """Flat scalar columns of the record, in output order."""
        values = (self.v1.beta, self.v2.beta, self.omega, self.cos_two_omega,
                  self.entropy_S, self.entanglement_E, self.bell_B, self.concurrence_C)
        return dict(zip(HEADER, values))

def binary_entropy(p: float) -> float:
    """Shannon entropy in bits of a two outcome distribution (p, 1 - p)."""
    if not 0.0 <= p <= 1.0:
        raise DomainError(f'Probability {p} lies outside [0, 1]!')
    return min(1.0, float((entr(p) + entr(1.0 - p)) / math.log(2.0)))

def relative_entropy_closed_form(cos_two_omega: float) -> float:
    """Relative entropy of entanglement of the rotated velocity state, written with the binary entropy."""
    c = cos_two_omega
    if not 0.0 <= c <= 1.0:
        raise DomainError(f'Coherence {c} lies outside [0, 1]!')
    return 1.0 - binary_entropy((1.0 + c) / 2.0)

def relative_entropy_of_entanglement(rho_v: DensityMatrix) -> float:
    """One less the entropy of a velocity density matrix with equal populations."""
    if rho_v.dim_row != 2:
        raise DomainError(f'Expected a two dimensional velocity density matrix, not {rho_v.dim_row}!')
    populations = numpy.diag(rho_v.data).real
    if numpy.any(numpy.abs(populations - 0.5) > DIAGONAL):
        raise DomainError(f'Populations {populations.tolist()} are not one half; closed form does not apply!')
    return 1.0 - von_neumann_entropy(rho_v)

def correlation_matrix(rho: DensityMatrix) -> CorrelationMatrix:
    """Correlation matrix of a two qubit density matrix."""
    if rho.dim_row != 4:
        raise DomainError(f'Expected a two qubit (4x4) density matrix, not {rho.dim_row}x{rho.dim_col}!')
    t = [[expectation(rho, kron(a, b)).real for b in PAULIS] for a in PAULIS]
    return CorrelationMatrix(numpy.array(t))

def bell_chsh_max(rho: DensityMatrix) -> float:
    """Maximal CHSH value from the two largest eigenvalues of t^T t (Horodecki criterion)."""
    t = correlation_matrix(rho).t
    m = hermitian_eigenvalues(t.T @ t)
    return 2.0 * math.sqrt(max(0.0, m[-1] + m[-2]))

def bell_closed_form(cos_two_omega: float) -> float:
    return 2.0 * math.sqrt(1.0 + cos_two_omega**2)

def bell_velocity_spin(state: PureState) -> float:
    """CHSH value of the pure velocity-spin state itself; not the occupation mode reading used in records."""
    return bell_chsh_max(state.projector())

def concurrence_pure(state: PureState) -> float:
    """Concurrence 2|a0 a3 - a1 a2| of a pure state of two qubits."""
    if state.dims != (2, 2):
        raise DomainError(f'Concurrence requires a two qubit state, not factors {state.dims}!')
    a = state.amplitudes
    return min(1.0, float(2.0 * abs(a[0] * a[3] - a[1] * a[2])))

def entanglement_of_formation(concurrence: float) -> float:
    """Entanglement of formation (bits) of a pure two qubit state of given concurrence."""
    if not 0.0 <= concurrence <= 1.0 + SLACK:
        raise DomainError(f'Concurrence {concurrence} lies outside [0, 1]!')
    root = math.sqrt(max(0.0, 1.0 - concurrence**2))
    return binary_entropy((1.0 + root) / 2.0)

def closed_form(v1: Velocity, v2: Velocity, angle: WignerAngle) -> AnalysisRecord:
    """Record driven by the Wigner angle alone; exact at the light-speed limits."""
    c = angle.cos_two_omega
    entropy = binary_entropy((1.0 + c) / 2.0)
    return AnalysisRecord(v1=v1, v2=v2, omega=angle.omega, cos_two_omega=c,
                          eigs=((1.0 - c) / 2.0, (1.0 + c) / 2.0),
                          entropy_S=entropy, entanglement_E=1.0 - entropy,
                          bell_B=bell_closed_form(c), concurrence_C=angle.sin_two_omega)

def pipeline(v1: Velocity, v2: Velocity) -> dict[str, Any]:
    """Quantities computed from first principles: boost, partial trace, eigensolve, Horodecki criterion."""
    state = boost(initial_state(v1), v2)
    rho_v = velocity_density_matrix(state)
    lower, upper = hermitian_eigenvalues(rho_v)
    entropy = von_neumann_entropy(rho_v)
    return {
            'cos_two_omega': 2.0 * rho_v.data[0, 1].real,
            'eigs': (lower, upper),
            'entropy_S': entropy,
            'entanglement_E': relative_entropy_of_entanglement(rho_v),
            'bell_B': bell_chsh_max(effective_two_qubit(rho_v)),
            'concurrence_C': concurrence_pure(state),
            }

def analyze(v1: Speed, v2: Speed, *, verify: bool = True) -> AnalysisRecord:
    """Full analysis for a pair of speeds.

    The reported values follow from the Wigner angle in closed form; with verify, the first principles
    pipeline is run as well and any quantity differing by more than the configured agreement raises a
    NumericalError naming the quantity and the input.
    """
    v1, v2 = as_velocity(v1), as_velocity(v2)
    record = closed_form(v1, v2, wigner_angle(v1, v2))
    if not verify:
        return record

    for name, value in pipeline(v1, v2).items():
        expected = getattr(record, name)
        error = float(numpy.max(numpy.abs(numpy.subtract(value, expected))))
        if error > AGREEMENT:
            raise NumericalError(f'Pipeline disagrees with closed form for {name} at (v1={v1.beta}, v2={v2.beta}); '
                                 f'error {error:.3e}!')
    logger.debug(f'measures -- Verified analysis at (v1={v1.beta}, v2={v2.beta}).')
    return record
