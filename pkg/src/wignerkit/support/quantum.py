"""Dense complex linear algebra on labeled tensor product spaces; partial traces and a Jacobi eigensolver."""

# type annotations
from __future__ import annotations
from typing import Optional, Union

# standard libraries
import logging
import math

# internal libraries
from ..core.error import DomainError, NumericalError
from ..resources import CONFIG

# external libraries
import numpy
from scipy.special import entr

logger = logging.getLogger(__name__)

# define public interface
__all__ = ['ComplexMatrix', 'DensityMatrix', 'PureState',
           'SIGMA_X', 'SIGMA_Y', 'SIGMA_Z', 'PAULIS',
           'expectation', 'hermitian_eigenvalues', 'hermitian_eigh', 'kron', 'partial_trace',
           'von_neumann_entropy', ]

# define configuration constants (internal)
HERMITIAN = CONFIG['support']['quantum']['hermitian']
DENSITY = CONFIG['support']['quantum']['density']
NEGATIVE = CONFIG['support']['quantum']['negative']
NORM = CONFIG['support']['quantum']['norm']
THRESHOLD = CONFIG['support']['quantum']['threshold']
SWEEPS = CONFIG['support']['quantum']['sweeps']
NEGLIGIBLE = CONFIG['support']['quantum']['negligible']

# smallest normal double; rotations below it lose precision in the phase
TINY = float(numpy.finfo(numpy.float64).tiny)

Dims = Optional[tuple[int, ...]]

class ComplexMatrix:
    """Row-major dense complex matrix with an optional tensor product structure (factor dimensions)."""

    def __init__(self, data: Union[numpy.ndarray, list], dims: Dims = None):
        self.data = numpy.array(data, dtype=numpy.complex128)
        if self.data.ndim != 2:
            raise DomainError(f'Matrix must be two dimensional, not of shape {self.data.shape}!')
        self.dims = None if dims is None else tuple(int(d) for d in dims)
        if self.dims is not None:
            if not self.is_square or math.prod(self.dims) != self.dim_row:
                raise DomainError(f'Factor dimensions {self.dims} do not match matrix shape {self.data.shape}!')

    def __repr__(self) -> str:
        return f'{type(self).__name__}(dims={self.dims}, data={self.data.tolist()})'

    @property
    def dim_row(self) -> int:
        return self.data.shape[0]

    @property
    def dim_col(self) -> int:
        return self.data.shape[1]

    @property
    def entries(self) -> numpy.ndarray:
        return self.data.ravel()

    @property
    def is_square(self) -> bool:
        return self.dim_row == self.dim_col

    @property
    def labels(self) -> Dims:
        """Factor dimensions, a square matrix without structure being a single factor."""
        if self.dims is not None: return self.dims
        return (self.dim_row, ) if self.is_square else None

    @property
    def H(self) -> numpy.ndarray:
        return self.data.conj().T

class DensityMatrix(ComplexMatrix):
    """Hermitian, unit trace, positive semidefinite matrix; positivity is checked on request."""

    def __init__(self, data: Union[numpy.ndarray, list], dims: Dims = None, *, check: bool = True):
        super().__init__(data, dims)
        if not self.is_square:
            raise DomainError(f'Density matrix must be square, not of shape {self.data.shape}!')
        deviation = numpy.max(numpy.abs(self.data - self.H), initial=0.0)
        if deviation > DENSITY:
            raise DomainError(f'Density matrix is not hermitian (deviation {deviation:.3e})!')
        trace = numpy.trace(self.data)
        if abs(trace - 1.0) > DENSITY:
            raise DomainError(f'Density matrix trace is {trace.real:.15g}, not one!')
        if check:
            lowest = hermitian_eigenvalues(self.data)[0]
            if lowest < -NEGATIVE:
                raise DomainError(f'Density matrix has a negative eigenvalue {lowest:.3e}!')

class PureState:
    """Unit norm amplitude vector with its tensor product structure (factor dimensions)."""

    def __init__(self, amplitudes: Union[numpy.ndarray, list], dims: Dims = None):
        self.amplitudes = numpy.array(amplitudes, dtype=numpy.complex128).ravel()
        self.dims = (self.amplitudes.size, ) if dims is None else tuple(int(d) for d in dims)
        if math.prod(self.dims) != self.amplitudes.size:
            raise DomainError(f'Factor dimensions {self.dims} do not match {self.amplitudes.size} amplitudes!')
        if abs(self.norm - 1.0) > NORM:
            raise DomainError(f'State squared norm is {self.norm:.15g}, not one!')

    def __repr__(self) -> str:
        return f'PureState(dims={self.dims}, amplitudes={self.amplitudes.tolist()})'

    @property
    def norm(self) -> float:
        return float(numpy.vdot(self.amplitudes, self.amplitudes).real)

    def projector(self) -> DensityMatrix:
        return DensityMatrix(numpy.outer(self.amplitudes, self.amplitudes.conj()), self.dims, check=False)

# standard single qubit observables
SIGMA_X = ComplexMatrix([[0, 1], [1, 0]])
SIGMA_Y = ComplexMatrix([[0, -1j], [1j, 0]])
SIGMA_Z = ComplexMatrix([[1, 0], [0, -1]])
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)

def as_array(m: Union[ComplexMatrix, numpy.ndarray, list]) -> numpy.ndarray:
    return m.data if isinstance(m, ComplexMatrix) else numpy.asarray(m, dtype=numpy.complex128)

def kron(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    """Tensor product; factor dimensions concatenate when both operands are square."""
    dims = None if a.labels is None or b.labels is None else a.labels + b.labels
    return ComplexMatrix(numpy.kron(a.data, b.data), dims)

def expectation(rho: ComplexMatrix, observable: ComplexMatrix) -> complex:
    """Trace of the product of a state and an observable."""
    return complex(numpy.trace(rho.data @ observable.data))

def partial_trace(rho: DensityMatrix, keep: int) -> DensityMatrix:
    """Reduced density matrix on a single kept factor, tracing out all the others."""
    if rho.dims is None or len(rho.dims) < 2:
        raise DomainError('Partial trace requires a density matrix with at least two labeled factors!')
    if not 0 <= keep < len(rho.dims):
        raise DomainError(f'Factor {keep} is out of range for factor dimensions {rho.dims}!')

    tensor = rho.data.reshape(rho.dims + rho.dims)
    for factor in reversed(range(len(rho.dims))):
        if factor == keep:
            continue
        remaining = tensor.ndim // 2
        tensor = numpy.trace(tensor, axis1=factor, axis2=factor + remaining)

    return DensityMatrix(tensor, (rho.dims[keep], ), check=False)

def off_diagonal(a: numpy.ndarray) -> float:
    """Frobenius norm of the strictly off-diagonal part; NaN propagates."""
    return float(numpy.sqrt(2.0 * numpy.sum(numpy.abs(numpy.triu(a, 1))**2)))

def rotate(a: numpy.ndarray, v: numpy.ndarray, p: int, q: int) -> None:
    """Annihilate the (p, q) element of a hermitian matrix with a complex Jacobi rotation, in place.

    Elements negligible against the diagonal gap (or below the smallest normal float) are zeroed
    without rotating.
    """
    b = a[p, q]
    magnitude = abs(b)
    gap = a[q, q].real - a[p, p].real
    if magnitude < TINY or magnitude < abs(gap) * NEGLIGIBLE:
        a[p, q] = a[q, p] = 0.0
        return
    phase = numpy.exp(-1j * numpy.angle(b))
    theta = 0.5 * math.atan2(2.0 * magnitude, gap)
    c, s = math.cos(theta), math.sin(theta)
    g = numpy.array([[c, s], [-s * phase, c * phase]], dtype=numpy.complex128)
    index = [p, q]
    a[:, index] = a[:, index] @ g
    a[index, :] = g.conj().T @ a[index, :]
    v[:, index] = v[:, index] @ g
    a[p, q] = a[q, p] = 0.0
    a[p, p], a[q, q] = a[p, p].real, a[q, q].real

def hermitian_eigh(m: Union[ComplexMatrix, numpy.ndarray, list]) -> tuple[numpy.ndarray, numpy.ndarray]:
    """Eigenvalues (ascending) and eigenvectors (columns) of a hermitian matrix by cyclic Jacobi sweeps.

    Sweeps over the upper triangle continue until the off-diagonal Frobenius norm falls below the
    configured threshold (relative to the matrix norm when that exceeds one); failing that within the
    configured number of sweeps, or meeting a non-finite entry, raises a NumericalError.
    """
    data = as_array(m)
    if data.ndim != 2 or data.shape[0] != data.shape[1]:
        raise DomainError(f'Eigensolver requires a square matrix, not of shape {data.shape}!')
    if not numpy.all(numpy.isfinite(data)):
        raise DomainError('Eigensolver requires a matrix of finite entries!')
    deviation = numpy.max(numpy.abs(data - data.conj().T), initial=0.0)
    if deviation > HERMITIAN:
        raise DomainError(f'Eigensolver requires a hermitian matrix (deviation {deviation:.3e})!')

    n = data.shape[0]
    a = 0.5 * (data + data.conj().T)
    v = numpy.eye(n, dtype=numpy.complex128)
    limit = THRESHOLD * max(1.0, float(numpy.linalg.norm(a)))

    sweep = 0
    while True:
        if not (numpy.all(numpy.isfinite(a)) and numpy.all(numpy.isfinite(v))):
            raise NumericalError(f'Jacobi eigensolver met a non-finite entry in sweep {sweep} of a {n}x{n} matrix!')
        if off_diagonal(a) < limit:
            break
        if sweep == SWEEPS:
            raise NumericalError(f'Jacobi eigensolver did not converge within {SWEEPS} sweeps!')
        for p in range(n - 1):
            for q in range(p + 1, n):
                rotate(a, v, p, q)
        sweep += 1

    values = numpy.diag(a).real
    order = numpy.argsort(values, kind='stable')
    logger.debug(f'quantum -- Jacobi converged for a {n}x{n} matrix after {sweep} sweeps.')
    return values[order], v[:, order]

def hermitian_eigenvalues(m: Union[ComplexMatrix, numpy.ndarray, list]) -> numpy.ndarray:
    """Real eigenvalues of a hermitian matrix, sorted ascending."""
    values, _ = hermitian_eigh(m)
    return values

def von_neumann_entropy(rho: DensityMatrix) -> float:
    """Entropy in bits, with the convention 0 log 0 = 0 and slightly negative eigenvalues clamped to zero."""
    values = hermitian_eigenvalues(rho)
    if numpy.any(values < -NEGATIVE):
        raise DomainError(f'Entropy requires a positive semidefinite matrix (eigenvalue {values[0]:.3e})!')
    entropy = float(numpy.sum(entr(numpy.clip(values, 0.0, None))) / math.log(2.0))
    if not math.isfinite(entropy):
        raise NumericalError(f'Entropy is not finite for eigenvalues {values.tolist()}!')
    return min(max(0.0, entropy), math.log2(rho.dim_row))
