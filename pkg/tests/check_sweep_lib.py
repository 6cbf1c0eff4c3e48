"""Testing the library implementation of the grid sweep."""

# type annotations
from __future__ import annotations

# external libraries
import numpy
import pytest

# internal libraries
from wignerkit.core.error import DomainError, ParallelError
from wignerkit.core.parallel import Index
from wignerkit.library.sweep_grid import SweepConfig, assemble, calc_rows, calc_sweep
from wignerkit.library.cnot_limit import calc_fidelities

@pytest.mark.lib
@pytest.mark.parametrize('options', [
    {'v1_min': 0.5, 'v1_max': 0.4},
    {'v2_min': -0.1},
    {'v2_max': 1.1},
    {'grid_n': 1},
    {'grid_n': 2.5},
    {'precision': 0},
    {'precision': 18},
    {'format': 'xml'},
    ], ids=['empty-range', 'negative', 'superluminal', 'one-point', 'fractional', 'no-digits', 'many-digits', 'format'])
def check_config_domain(options):
    """Verify invalid sweep configurations are refused."""
    with pytest.raises(DomainError):
        SweepConfig(**options)

@pytest.mark.lib
def check_config_ranges():
    """Verify the configuration built from command line pairs."""
    config = SweepConfig.from_ranges(v1range=[0.2, 0.4], v2range=[0.0, 1.0], grid=3)
    v1, v2 = config.axes()
    assert numpy.allclose(v1, [0.2, 0.3, 0.4], atol=1e-15)
    assert v2[0] == 0.0 and v2[-1] == 1.0
    assert config.points == 9
    with pytest.raises(DomainError):
        SweepConfig.from_ranges(v1range=[0.2], v2range=[0.0, 1.0], grid=3)

@pytest.mark.lib
def check_sweep_corners():
    """Verify the corners of the unit square."""
    records = calc_sweep(config=SweepConfig(grid_n=2))
    values = [(r.v1.beta, r.v2.beta, r.cos_two_omega, r.entanglement_E) for r in records]
    assert values == [(0.0, 0.0, 1.0, 1.0), (0.0, 1.0, 1.0, 1.0), (1.0, 0.0, 1.0, 1.0), (1.0, 1.0, 0.0, 0.0)]

@pytest.mark.lib
def check_sweep_rest_row():
    """Verify the particle at rest stays maximally entangled."""
    records = calc_sweep(config=SweepConfig(grid_n=11), verify=True)
    assert len(records) == 121
    assert all(r.entanglement_E == 1.0 for r in records[:11])
    assert [(r.v1.beta, r.v2.beta) for r in records[:2]] == [(0.0, 0.0), (0.0, 0.1)]

@pytest.mark.lib
@pytest.mark.parametrize('size', [1, 2, 3, 7])
def check_distributed_assembly(size):
    """Verify rows evaluated across simulated ranks assemble into the serial table."""
    config = SweepConfig(grid_n=5)
    serial = calc_sweep(config=config)
    parts = [calc_rows(config=config, index=Index.from_simple(config.grid_n, rank=rank, size=size))
             for rank in range(size)]
    assert assemble(list(reversed(parts)), config.grid_n) == serial

@pytest.mark.lib
def check_assembly_incomplete():
    """Verify a missing or repeated row is reported."""
    config = SweepConfig(grid_n=4)
    parts = [calc_rows(config=config, index=Index.from_simple(4, rank=rank, size=2)) for rank in range(2)]
    with pytest.raises(ParallelError):
        assemble(parts[:1], 4)
    with pytest.raises(ParallelError):
        assemble(parts + parts[:1], 4)
    with pytest.raises(ParallelError):
        Index.from_simple(4, rank=2, size=2)

@pytest.mark.lib
def check_fidelities():
    """Verify the fidelity table rises from one half to one."""
    table = calc_fidelities(tlist=[0.0, 0.5, 0.9, 0.99, 1.0])
    t, omega, fidelity = zip(*table)
    assert t == (0.0, 0.5, 0.9, 0.99, 1.0)
    assert fidelity[0] == pytest.approx(0.5, abs=1e-12)
    assert fidelity[-1] == pytest.approx(1.0, abs=1e-12)
    assert all(b >= a for a, b in zip(fidelity, fidelity[1:]))
    assert omega[0] == 0.0
    with pytest.raises(DomainError):
        calc_fidelities(tlist=[0.5, 1.5])
    with pytest.raises(DomainError):
        calc_fidelities(tlist=[])

@pytest.mark.lib
@pytest.mark.parametrize('tasks, size, blocks', [
    (7, 3, [(0, 2), (3, 4), (5, 6)]),
    (4, 4, [(0, 0), (1, 1), (2, 2), (3, 3)]),
    (2, 3, [(0, 0), (1, 1), (2, 1)]),
    ], ids=['uneven', 'even', 'sparse'])
def check_index_blocks(tasks, size, blocks):
    """Verify the tasks are split into contiguous blocks in rank order."""
    indices = [Index.from_simple(tasks, rank=rank, size=size) for rank in range(size)]
    assert [(index.low, index.high) for index in indices] == blocks
    assert sum(index.width for index in indices) == tasks
    assert [task for index in indices for task in index.range] == list(range(tasks))
