"""Evaluate the analysis over a rectangular grid of speeds, serially or distributed by rows."""

# type annotations
from __future__ import annotations
from typing import Optional, Sequence

# standard libraries
import logging
from dataclasses import dataclass

# internal libraries
from ..core.error import DomainError, ParallelError
from ..core.parallel import Index, collect, safe, squash
from ..resources import CONFIG
from ..support.kinematics import Velocity
from ..support.measures import AnalysisRecord, analyze
from ..support.table import OutputManager, render, validate_output
from ..support.types import Records, Tick

# external libraries
import numpy

logger = logging.getLogger(__name__)

# define library (public) interface
__all__ = ['SweepConfig', 'assemble', 'calc_rows', 'calc_sweep', 'write_sweep', ]

# define configuration constants (internal)
HEADER = CONFIG['sweep']['header']

Part = list[tuple[int, list[AnalysisRecord]]]

@dataclass(frozen=True)
class SweepConfig:
    """Axes, resolution, and output options of a sweep."""
    v1_min: float = 0.0
    v1_max: float = 1.0
    v2_min: float = 0.0
    v2_max: float = 1.0
    grid_n: int = 101
    output_path: str = ''
    format: str = 'csv'
    precision: int = 12

    def __post_init__(self) -> None:
        bounds = {'v1': (self.v1_min, self.v1_max), 'v2': (self.v2_min, self.v2_max)}
        for axis, (low, high) in bounds.items():
            low, high = Velocity(low).beta, Velocity(high).beta
            if low > high:
                raise DomainError(f'Range of {axis} is empty; minimum {low} exceeds maximum {high}!')
        if isinstance(self.grid_n, bool) or not isinstance(self.grid_n, (int, numpy.integer)) or self.grid_n < 2:
            raise DomainError(f'Grid resolution {self.grid_n!r} must be an integer of at least two!')
        validate_output(format=self.format, precision=self.precision)

    @classmethod
    def from_ranges(cls, *, v1range: Sequence[float], v2range: Sequence[float], grid: int,
                    out: str = '', format: str = 'csv', precision: int = 12) -> SweepConfig:
        """Build from (min, max) pairs as given on the command line."""
        for axis, pair in (('v1', v1range), ('v2', v2range)):
            if len(pair) != 2:
                raise DomainError(f'Range of {axis} must be a MIN,MAX pair, not {list(pair)}!')
        (v1_min, v1_max), (v2_min, v2_max) = v1range, v2range
        return cls(v1_min=v1_min, v1_max=v1_max, v2_min=v2_min, v2_max=v2_max, grid_n=grid,
                   output_path=out, format=format, precision=precision)

    @property
    def points(self) -> int:
        return self.grid_n * self.grid_n

    def axes(self) -> tuple[numpy.ndarray, numpy.ndarray]:
        """Sample points of each axis, endpoints included."""
        v1 = numpy.clip(numpy.linspace(self.v1_min, self.v1_max, self.grid_n), self.v1_min, self.v1_max)
        v2 = numpy.clip(numpy.linspace(self.v2_min, self.v2_max, self.grid_n), self.v2_min, self.v2_max)
        return v1, v2

@safe
def calc_rows(*, config: SweepConfig, index: Index, verify: bool = True, tick: Optional[Tick] = None) -> Part:
    """Analyze the rows (fixed v1) of the grid assigned by the index."""
    v1s, v2s = config.axes()
    part: Part = []
    for row in index.range:
        records = []
        for v2 in v2s:
            records.append(analyze(float(v1s[row]), float(v2), verify=verify))
            if tick is not None: tick()
        part.append((row, records))
    return part

@collect
def calc_distributed(*, config: SweepConfig, verify: bool = True, tick: Optional[Tick] = None) -> Part:
    """Analyze this process's share of the rows."""
    index = Index.from_simple(config.grid_n)
    logger.debug(f'sweep -- Evaluating rows {index.low} through {index.high}.')
    return calc_rows(config=config, index=index, verify=verify, tick=tick)

def assemble(parts: Sequence[Part], grid_n: int) -> Records:
    """Join the distributed parts in row-major order (v1 outer, v2 inner)."""
    rows = sorted((row for part in parts for row in part), key=lambda item: item[0])
    if [index for index, _ in rows] != list(range(grid_n)):
        raise ParallelError('Distributed sweep returned an incomplete or duplicated set of rows!')
    return [record for _, records in rows for record in records]

def calc_sweep(*, config: SweepConfig, verify: bool = True, tick: Optional[Tick] = None) -> Optional[Records]:
    """Evaluate the full grid; the assembled records are available on the root process only."""
    parts = calc_distributed(config=config, verify=verify, tick=tick)
    if parts is None:
        return None
    return assemble(parts, config.grid_n)

@squash
def write_sweep(*, records: Records, config: SweepConfig) -> None:
    """Write the sweep records as a single table."""
    text = render((record.row() for record in records), HEADER, format=config.format, precision=config.precision)
    with OutputManager(config.output_path) as output:
        output.write(text)
