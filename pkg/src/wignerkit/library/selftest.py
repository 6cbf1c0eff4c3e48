"""Property checks of the kinematics, states, measures, and the quantum core, run as named suites."""

# type annotations
from __future__ import annotations
from typing import Callable, Iterator, Optional

# standard libraries
import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

# internal libraries
from ..core.error import DomainError, SelftestError
from ..core.parallel import safe, squash
from ..resources import CONFIG
from ..support.kinematics import gamma, rapidity, wigner_angle
from ..support.measures import (analyze, bell_chsh_max, concurrence_pure, entanglement_of_formation,
                                relative_entropy_closed_form)
from ..support.quantum import ComplexMatrix, DensityMatrix, hermitian_eigh, kron, partial_trace, von_neumann_entropy
from ..support.states import (boost, cnot_limit_check, effective_two_qubit, initial_state, mode_embedding,
                              mode_entropy, spin_density_matrix, velocity_density_closed_form,
                              velocity_density_matrix)
from ..support.table import OutputManager, render
from ..support.types import Tick

# external libraries
import numpy
from scipy.stats import unitary_group

logger = logging.getLogger(__name__)

# define library (public) interface
__all__ = ['SuiteResult', 'SUITES', 'run_suites', 'assert_passed', 'write_report', ]

# define configuration constants (internal)
HEADER = CONFIG['selftest']['header']
KINEMATICS = CONFIG['selftest']['kinematics']
STATES = CONFIG['selftest']['states']
THRESHOLDS = CONFIG['selftest']['thresholds']
SAMPLES = CONFIG['selftest']['samples']
SEED = CONFIG['selftest']['seed']
VMAX = CONFIG['selftest']['vmax']
TLIST = CONFIG['selftest']['tlist']
TOLERANCE = CONFIG['selftest']['tolerance']

# shapes of the random density matrices
FACTORS = ((2, 2), (2, 3), (3, 2), (3, 3), (2, 2, 2))

@dataclass(frozen=True)
class SuiteResult:
    """Outcome of one suite; observed is the worst error (or, for margins, the smallest margin)."""
    suite: str
    observed: float
    tolerance: float
    worst: str
    passed: bool

    def row(self) -> dict:
        return dict(zip(HEADER, (self.suite, self.observed, self.tolerance, self.worst, self.passed)))

Suite = Callable[[], SuiteResult]
SUITES: dict[str, Suite] = {}

def suite(name: str, tolerance: str, *, margin: bool = False) -> Callable[[Callable[[], Iterator[tuple[float, str]]]], Suite]:
    """Register a generator of (error, input) pairs as a named suite.

    An error suite passes when the largest error is within tolerance; a margin suite passes when the
    smallest value strictly exceeds the tolerance. A non-finite value ranks worst and fails the suite.
    """
    limit = TOLERANCE[tolerance]
    worst_case = -math.inf if margin else math.inf
    def rank(case: tuple[float, str]) -> float:
        return case[0] if math.isfinite(case[0]) else worst_case
    def decorator(cases: Callable[[], Iterator[tuple[float, str]]]) -> Suite:
        def wrapper() -> SuiteResult:
            pick = min if margin else max
            observed, worst = pick(cases(), key=rank)
            passed = math.isfinite(observed) and (observed > limit if margin else observed <= limit)
            return SuiteResult(name, float(observed), limit, worst, bool(passed))
        wrapper.__name__ = cases.__name__
        wrapper.__doc__ = cases.__doc__
        SUITES[name] = wrapper
        return wrapper
    return decorator

def axis(n: int, high: float = 1.0) -> list[float]:
    return [float(v) for v in numpy.linspace(0.0, high, n)]

def where(v1: float, v2: float) -> str:
    return f'v1={v1:.6g} v2={v2:.6g}'

def increases(values: numpy.ndarray) -> tuple[float, tuple[int, int]]:
    """Largest step up along either axis of a grid of values, with its location."""
    rise = numpy.zeros_like(values)
    rise[1:, :] = numpy.maximum(rise[1:, :], numpy.diff(values, axis=0))
    rise[:, 1:] = numpy.maximum(rise[:, 1:], numpy.diff(values, axis=1))
    i, j = numpy.unravel_index(numpy.argmax(rise), rise.shape)
    return float(rise[i, j]), (int(i), int(j))

@lru_cache(maxsize=None)
def angle_grid() -> tuple[list[float], numpy.ndarray, numpy.ndarray]:
    speeds = axis(KINEMATICS, VMAX)
    sin = numpy.empty((KINEMATICS, KINEMATICS))
    cos = numpy.empty((KINEMATICS, KINEMATICS))
    for (i, v1), (j, v2) in product(enumerate(speeds), repeat=2):
        angle = wigner_angle(v1, v2)
        sin[i, j], cos[i, j] = angle.sin_omega, angle.cos_two_omega
    return speeds, sin, cos

@lru_cache(maxsize=None)
def state_grid() -> list[dict]:
    """Boosted states and their reductions on a grid reaching the light-speed limit."""
    samples = []
    for v1, v2 in product(axis(STATES), repeat=2):
        state = boost(initial_state(v1), v2)
        samples.append({'v1': v1, 'v2': v2, 'angle': wigner_angle(v1, v2), 'state': state,
                        'rho_v': velocity_density_matrix(state), 'rho_s': spin_density_matrix(state)})
    return samples

@suite('kinematics.identity', 'kinematic')
def check_identity() -> Iterator[tuple[float, str]]:
    """cos 2w = 1 - 2 sin^2 w."""
    speeds, sin, cos = angle_grid()
    for i, j in product(range(len(speeds)), repeat=2):
        yield abs(cos[i, j] - (1.0 - 2.0 * sin[i, j]**2)), where(speeds[i], speeds[j])

@suite('kinematics.symmetry', 'exact')
def check_symmetry() -> Iterator[tuple[float, str]]:
    speeds, sin, cos = angle_grid()
    for i, j in product(range(len(speeds)), repeat=2):
        yield max(abs(sin[i, j] - sin[j, i]), abs(cos[i, j] - cos[j, i])), where(speeds[i], speeds[j])

@suite('kinematics.monotonicity', 'monotone')
def check_monotonicity() -> Iterator[tuple[float, str]]:
    """cos 2w never increases with either speed."""
    speeds, _, cos = angle_grid()
    rise, (i, j) = increases(cos)
    yield rise, where(speeds[i], speeds[j])

@suite('kinematics.bounds', 'exact')
def check_bounds() -> Iterator[tuple[float, str]]:
    speeds, sin, cos = angle_grid()
    for i, j in product(range(len(speeds)), repeat=2):
        excess = max(0.0, -cos[i, j], cos[i, j] - 1.0, -sin[i, j], sin[i, j] - math.sqrt(0.5))
        yield excess, where(speeds[i], speeds[j])

@suite('kinematics.rest', 'exact')
def check_rest() -> Iterator[tuple[float, str]]:
    """No rotation when either frame is at rest."""
    for v in axis(KINEMATICS, VMAX):
        yield abs(wigner_angle(0.0, v).sin_omega), where(0.0, v)
        yield abs(wigner_angle(v, 0.0).sin_omega), where(v, 0.0)

@suite('kinematics.rapidity', 'kinematic')
def check_rapidity() -> Iterator[tuple[float, str]]:
    """gamma = cosh(rapidity)."""
    for v in axis(KINEMATICS, 0.99):
        yield abs(gamma(v) - math.cosh(rapidity(v))), f'v={v:.6g}'

@suite('states.norm', 'state')
def check_norm() -> Iterator[tuple[float, str]]:
    for sample in state_grid():
        yield abs(sample['state'].norm - 1.0), where(sample['v1'], sample['v2'])

@suite('states.closed_form', 'state')
def check_closed_form() -> Iterator[tuple[float, str]]:
    """Velocity density matrix against its closed form in the Wigner angle."""
    for sample in state_grid():
        expected = velocity_density_closed_form(sample['angle'])
        yield float(numpy.max(numpy.abs(sample['rho_v'].data - expected.data))), where(sample['v1'], sample['v2'])

@suite('states.eigenvalues', 'state')
def check_eigenvalues() -> Iterator[tuple[float, str]]:
    """Eigenvalues of the velocity density matrix are (1 -+ cos 2w) / 2."""
    for sample in state_grid():
        c = sample['angle'].cos_two_omega
        values, _ = hermitian_eigh(sample['rho_v'])
        expected = numpy.array([(1.0 - c) / 2.0, (1.0 + c) / 2.0])
        yield float(numpy.max(numpy.abs(values - expected))), where(sample['v1'], sample['v2'])

@suite('states.schmidt', 'entropy')
def check_schmidt() -> Iterator[tuple[float, str]]:
    """Both halves of a pure state carry the same entropy."""
    for sample in state_grid():
        gap = abs(von_neumann_entropy(sample['rho_v']) - von_neumann_entropy(sample['rho_s']))
        yield gap, where(sample['v1'], sample['v2'])

@suite('states.mode_entropy', 'entropy')
def check_mode_entropy() -> Iterator[tuple[float, str]]:
    """A single particle shared by two modes leaves one bit in each, for any boost."""
    for sample in state_grid():
        yield abs(mode_entropy(mode_embedding(sample['state'])) - 1.0), where(sample['v1'], sample['v2'])

@suite('measures.bell', 'entropy')
def check_bell() -> Iterator[tuple[float, str]]:
    """Horodecki value of the effective two qubit state against 2 sqrt(1 + cos^2 2w)."""
    for sample in state_grid():
        c = sample['angle'].cos_two_omega
        observed = bell_chsh_max(effective_two_qubit(sample['rho_v']))
        yield abs(observed - 2.0 * math.sqrt(1.0 + c**2)), where(sample['v1'], sample['v2'])

@suite('measures.relative_entropy', 'state')
def check_relative_entropy() -> Iterator[tuple[float, str]]:
    """Binary entropy form against one less the eigensolved entropy of the closed form matrix."""
    for sample in state_grid():
        angle = sample['angle']
        direct = 1.0 - von_neumann_entropy(velocity_density_closed_form(angle))
        yield abs(relative_entropy_closed_form(angle.cos_two_omega) - direct), where(sample['v1'], sample['v2'])

@suite('measures.formation', 'entropy')
def check_formation() -> Iterator[tuple[float, str]]:
    """Relative entropy and entanglement of formation of the pure state add to one bit."""
    for sample in state_grid():
        formation = entanglement_of_formation(concurrence_pure(sample['state']))
        relative = relative_entropy_closed_form(sample['angle'].cos_two_omega)
        yield abs(relative + formation - 1.0), where(sample['v1'], sample['v2'])

@suite('measures.monotonicity', 'monotone')
def check_measure_monotonicity() -> Iterator[tuple[float, str]]:
    """Entanglement and Bell value never increase with either speed."""
    speeds = axis(STATES)
    records = [[analyze(v1, v2, verify=False) for v2 in speeds] for v1 in speeds]
    for name in ('entanglement_E', 'bell_B'):
        values = numpy.array([[getattr(record, name) for record in row] for row in records])
        rise, (i, j) = increases(values)
        yield rise, f'{name} at {where(speeds[i], speeds[j])}'

@suite('measures.bell_margin', 'margin', margin=True)
def check_bell_margin() -> Iterator[tuple[float, str]]:
    """Bell inequality violated everywhere below the light-speed limit."""
    for v1, v2 in product(axis(THRESHOLDS, VMAX), repeat=2):
        yield analyze(v1, v2, verify=False).bell_B - 2.0, where(v1, v2)

@suite('measures.entanglement_margin', 'margin', margin=True)
def check_entanglement_margin() -> Iterator[tuple[float, str]]:
    """Entanglement remains below the light-speed limit."""
    for v1, v2 in product(axis(THRESHOLDS, VMAX), repeat=2):
        yield analyze(v1, v2, verify=False).entanglement_E, where(v1, v2)

@suite('cnot.limits', 'state')
def check_cnot_limits() -> Iterator[tuple[float, str]]:
    yield abs(cnot_limit_check(0.0, 0.0) - 0.5), where(0.0, 0.0)
    yield abs(cnot_limit_check(1.0, 1.0) - 1.0), where(1.0, 1.0)

@suite('cnot.closed_form', 'state')
def check_cnot_closed_form() -> Iterator[tuple[float, str]]:
    """Fidelity equals (1 + sin 2w) / 2."""
    for sample in state_grid():
        observed = cnot_limit_check(sample['v1'], sample['v2'])
        yield abs(observed - (1.0 + sample['angle'].sin_two_omega) / 2.0), where(sample['v1'], sample['v2'])

@suite('cnot.monotonicity', 'monotone')
def check_cnot_monotonicity() -> Iterator[tuple[float, str]]:
    """Fidelity along v1 = v2 = t never decreases."""
    fidelities = [cnot_limit_check(t, t) for t in TLIST]
    for t, before, after in zip(TLIST[1:], fidelities, fidelities[1:]):
        yield max(0.0, before - after), f't={t:.6g}'

def random_density(rng: numpy.random.Generator, dims: tuple[int, ...]) -> DensityMatrix:
    n = math.prod(dims)
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    rho = a @ a.conj().T
    return DensityMatrix(rho / numpy.trace(rho).real, dims, check=False)

def random_hermitian(rng: numpy.random.Generator, n: int) -> numpy.ndarray:
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return 0.5 * (a + a.conj().T)

def characteristic_roots(h: numpy.ndarray) -> numpy.ndarray:
    """Eigenvalues of a 2x2 or 3x3 matrix as roots of its characteristic polynomial."""
    trace, det = numpy.trace(h), numpy.linalg.det(h)
    if h.shape[0] == 2:
        coefficients = [1.0, -trace, det]
    else:
        coefficients = [1.0, -trace, 0.5 * (trace**2 - numpy.trace(h @ h)), -det]
    return numpy.sort(numpy.roots(coefficients).real)

@suite('quantum.partial_trace', 'entropy')
def check_partial_trace() -> Iterator[tuple[float, str]]:
    """Partial traces keep unit trace and hermiticity."""
    rng = numpy.random.default_rng(SEED)
    for case in range(SAMPLES):
        dims = FACTORS[case % len(FACTORS)]
        rho = random_density(rng, dims)
        for keep in range(len(dims)):
            reduced = partial_trace(rho, keep).data
            error = max(abs(numpy.trace(reduced) - 1.0), numpy.max(numpy.abs(reduced - reduced.conj().T)))
            yield float(error), f'case={case} dims={dims} keep={keep}'

@suite('quantum.eigensolver', 'entropy')
def check_eigensolver() -> Iterator[tuple[float, str]]:
    """Eigenvalues sum to the trace and the eigenvectors reconstruct the matrix."""
    rng = numpy.random.default_rng(SEED + 1)
    for case in range(SAMPLES):
        n = 2 + case % 4
        h = random_hermitian(rng, n)
        values, vectors = hermitian_eigh(h)
        rebuilt = vectors @ numpy.diag(values) @ vectors.conj().T
        error = max(abs(numpy.sum(values) - numpy.trace(h).real), numpy.max(numpy.abs(rebuilt - h)))
        yield float(error), f'case={case} n={n}'

@suite('quantum.roots', 'roots')
def check_roots() -> Iterator[tuple[float, str]]:
    rng = numpy.random.default_rng(SEED + 2)
    for case in range(SAMPLES):
        n = 2 + case % 2
        h = random_hermitian(rng, n)
        values, _ = hermitian_eigh(h)
        yield float(numpy.max(numpy.abs(values - characteristic_roots(h)))), f'case={case} n={n}'

@suite('quantum.unitary_invariance', 'entropy')
def check_unitary_invariance() -> Iterator[tuple[float, str]]:
    rng = numpy.random.default_rng(SEED + 3)
    for case in range(SAMPLES):
        dims = FACTORS[case % len(FACTORS)]
        rho = random_density(rng, dims)
        u = unitary_group.rvs(rho.dim_row, random_state=rng)
        rotated = DensityMatrix(u @ rho.data @ u.conj().T, dims, check=False)
        yield abs(von_neumann_entropy(rho) - von_neumann_entropy(rotated)), f'case={case} dims={dims}'

@suite('quantum.kron_associativity', 'exact')
def check_kron_associativity() -> Iterator[tuple[float, str]]:
    rng = numpy.random.default_rng(SEED + 4)
    for case in range(SAMPLES // 10):
        a, b, c = (ComplexMatrix(rng.integers(-5, 6, size=(2, 2))) for _ in range(3))
        left, right = kron(kron(a, b), c), kron(a, kron(b, c))
        yield float(numpy.max(numpy.abs(left.data - right.data))), f'case={case}'

@safe
def run_suites(*, names: Optional[list[str]] = None, tick: Optional[Tick] = None) -> list[SuiteResult]:
    """Run the named suites (all by default) in registration order."""
    names = list(SUITES) if names is None else names
    unknown = [name for name in names if name not in SUITES]
    if unknown:
        raise DomainError(f'Unknown suites {unknown}; expected any of {list(SUITES)}!')
    results = []
    for name in names:
        result = SUITES[name]()
        logger.debug(f'selftest -- {name} observed {result.observed:.3e} (passed={result.passed}).')
        results.append(result)
        if tick is not None: tick()
    return results

def assert_passed(results: list[SuiteResult]) -> None:
    """Raise naming every failed suite with its worst case input."""
    failed = [result for result in results if not result.passed]
    if failed:
        details = '; '.join(f'{r.suite} observed {r.observed:.3e} (tolerance {r.tolerance:.1e}) at {r.worst}' for r in failed)
        raise SelftestError(f'{len(failed)} of {len(results)} suites failed: {details}!')

@squash
def write_report(*, results: list[SuiteResult], out: str, format: str, precision: int) -> None:
    text = render((result.row() for result in results), HEADER, format=format, precision=precision)
    with OutputManager(out) as output:
        output.write(text)
