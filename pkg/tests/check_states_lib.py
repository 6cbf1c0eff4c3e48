"""Testing the library implementation of the boosted single particle states."""

# type annotations
from __future__ import annotations

# standard libraries
import math

# external libraries
import numpy
import pytest
from hypothesis import given, settings, strategies

# internal libraries
from wignerkit.core.error import DomainError
from wignerkit.support import quantum, states
from wignerkit.support.kinematics import wigner_angle
from wignerkit.support.quantum import DensityMatrix, PureState, von_neumann_entropy
from wignerkit.support.states import (EMBEDDING, EffectiveTwoQubitState, ModeEmbeddedState, boost, cnot_limit_check,
                                      cnot_state, effective_two_qubit, fidelity, initial_state, mode_embedding,
                                      mode_entropy, spin_density_matrix, velocity_density_closed_form,
                                      velocity_density_matrix, wigner_unitary)

# define property testing strategies
speeds = strategies.floats(min_value=0.0, max_value=1.0)

# speed with a lorentz factor of two
ROOT3 = math.sqrt(3.0) / 2.0
HALF = math.sqrt(0.5)

@pytest.mark.lib
def check_initial_state():
    """Verify the equal superposition of opposite velocities with spin up."""
    state = initial_state(0.5)
    assert numpy.allclose(state.amplitudes, [HALF, 0.0, HALF, 0.0], atol=0.0)
    assert state.dims == (2, 2)
    assert not state.is_boosted
    assert initial_state(0.0).v1.is_rest

@pytest.mark.lib
def check_boost_amplitudes():
    """Verify the boosted amplitudes at gamma factors of two."""
    state = boost(initial_state(ROOT3), ROOT3)
    expected = [0.6708203932, 0.2236067977j, 0.6708203932, -0.2236067977j]
    assert numpy.allclose(state.amplitudes, expected, atol=1e-9)
    assert state.is_boosted and state.frame.beta == ROOT3
    with pytest.raises(DomainError):
        boost(state, 0.5)

@pytest.mark.lib
def check_density_matrices():
    """Verify the reduced velocity state and its closed form."""
    state = boost(initial_state(ROOT3), ROOT3)
    rho_v = velocity_density_matrix(state)
    assert numpy.allclose(rho_v.data, [[0.5, 0.4], [0.4, 0.5]], atol=1e-12)
    closed = velocity_density_closed_form(wigner_angle(ROOT3, ROOT3))
    assert numpy.allclose(rho_v.data, closed.data, atol=1e-12)
    light = velocity_density_matrix(boost(initial_state(1.0), 1.0))
    assert numpy.allclose(light.data, numpy.eye(2) / 2.0, atol=1e-15)

@pytest.mark.lib
@settings(deadline=None)
@given(v1=speeds, v2=speeds)
def check_boost_properties(v1, v2):
    """Verify unitarity, the closed form, and equal entropies of both halves."""
    unitary = wigner_unitary(v1, v2).data
    assert numpy.allclose(unitary @ unitary.conj().T, numpy.eye(4), atol=1e-12)
    state = boost(initial_state(v1), v2)
    assert abs(state.norm - 1.0) <= 1e-12
    rho_v = velocity_density_matrix(state)
    closed = velocity_density_closed_form(wigner_angle(v1, v2))
    assert numpy.max(numpy.abs(rho_v.data - closed.data)) <= 1e-12
    entropy_v = von_neumann_entropy(rho_v)
    entropy_s = von_neumann_entropy(spin_density_matrix(state))
    assert entropy_v == pytest.approx(entropy_s, abs=1e-10)

@pytest.mark.lib
@settings(deadline=None)
@given(v1=speeds, v2=speeds)
def check_mode_entropy(v1, v2):
    """Verify each occupation mode carries one bit whatever the boost."""
    embedded = mode_embedding(boost(initial_state(v1), v2))
    assert embedded.dims == (3, 3)
    assert mode_entropy(embedded, keep=0) == pytest.approx(1.0, abs=1e-10)
    assert mode_entropy(embedded, keep=1) == pytest.approx(1.0, abs=1e-10)

@pytest.mark.lib
def check_mode_embedding():
    """Verify the amplitudes are placed on the one particle sector."""
    state = boost(initial_state(0.5), 0.5)
    embedded = mode_embedding(state)
    assert numpy.array_equal(embedded.amplitudes[list(EMBEDDING)], state.amplitudes)
    assert numpy.count_nonzero(embedded.amplitudes) == 4
    vacuum = numpy.zeros(9)
    vacuum[0] = 1.0
    with pytest.raises(DomainError):
        ModeEmbeddedState(vacuum)

@pytest.mark.lib
def check_effective_two_qubit():
    """Verify the velocity state is placed on the |01>, |10> block."""
    rho_v = DensityMatrix([[0.5, 0.4], [0.4, 0.5]])
    effective = effective_two_qubit(rho_v)
    assert effective.dims == (2, 2)
    assert effective.data[2, 2] == 0.5 and effective.data[1, 1] == 0.5
    assert effective.data[2, 1] == 0.4 and effective.data[1, 2] == 0.4
    assert numpy.count_nonzero(effective.data) == 4
    with pytest.raises(DomainError):
        EffectiveTwoQubitState(numpy.eye(4) / 4.0)
    with pytest.raises(DomainError):
        effective_two_qubit(DensityMatrix(numpy.eye(4) / 4.0))

@pytest.mark.lib
def check_cnot_limit():
    """Verify the fidelity with the light-speed limit state."""
    assert cnot_limit_check(1.0, 1.0) == pytest.approx(1.0, abs=1e-12)
    assert cnot_limit_check(0.0, 0.0) == pytest.approx(0.5, abs=1e-12)
    assert cnot_limit_check(ROOT3, ROOT3) == pytest.approx(0.8, abs=1e-12)
    target = cnot_state()
    assert numpy.allclose(target.amplitudes, [0.5, 0.5j, 0.5, -0.5j], atol=0.0)
    overlap = abs(numpy.vdot(target.amplitudes, initial_state(0.0).amplitudes))**2
    assert fidelity(target, initial_state(0.0)) == pytest.approx(overlap, abs=1e-15)
    with pytest.raises(DomainError):
        fidelity(target, PureState([1.0, 0.0]))

@pytest.mark.lib
@settings(deadline=None)
@given(v1=speeds, v2=speeds)
def check_cnot_closed_form(v1, v2):
    """Verify the fidelity equals (1 + sin 2w) / 2."""
    angle = wigner_angle(v1, v2)
    assert cnot_limit_check(v1, v2) == pytest.approx((1.0 + angle.sin_two_omega) / 2.0, abs=1e-12)

@pytest.mark.lib
@pytest.mark.parametrize('module', [quantum, states], ids=['quantum', 'states'])
def check_public_interface(module):
    """Verify every exported name exists exactly once."""
    assert all(hasattr(module, name) for name in module.__all__)
    assert len(set(module.__all__)) == len(module.__all__)
