"""Testing the library implementation of the relativistic kinematics."""

# type annotations
from __future__ import annotations
from typing import NamedTuple

# standard libraries
import math
from fractions import Fraction

# external libraries
import pytest
from hypothesis import given, strategies

# internal libraries
from wignerkit.core.error import DomainError
from wignerkit.support.kinematics import (Velocity, gamma, rapidity, velocity_from_gamma,
                                          velocity_from_rapidity, wigner_angle)

# define property testing strategies
speeds = strategies.floats(min_value=0.0, max_value=1.0)

# speed with a lorentz factor of two
ROOT3 = math.sqrt(3.0) / 2.0

class Case(NamedTuple):
    """Useful tuple of test cases definition."""
    v1: float
    v2: float
    sin2: float
    cos2w: float

@pytest.fixture(params=[
    Case(0.0, 0.0, 0.0, 1.0),
    Case(0.0, 0.5, 0.0, 1.0),
    Case(0.7, 0.0, 0.0, 1.0),
    Case(ROOT3, ROOT3, 0.1, 0.8),
    Case(0.6, 0.8, float((1 - Fraction(35, 37)) / 2), float(Fraction(35, 37))),
    Case(1.0, 0.6, 0.1, 0.8),
    Case(0.6, 1.0, 0.1, 0.8),
    Case(0.0, 1.0, 0.0, 1.0),
    Case(1.0, 1.0, 0.5, 0.0),
    ], ids=['rest', 'v1-rest', 'v2-rest', 'gamma-2', 'rational', 'v1-light', 'v2-light', 'rest-light', 'light'])
def data(request):
    """Parameterized spot values of the wigner angle."""
    return request.param

@pytest.mark.lib
def check_wigner_angle(data):
    """Verify the angle against values derived by hand."""
    angle = wigner_angle(data.v1, data.v2)
    assert angle.sin_omega**2 == pytest.approx(data.sin2, abs=1e-12)
    assert angle.cos_two_omega == pytest.approx(data.cos2w, abs=1e-12)
    assert 0.0 <= angle.omega <= math.pi / 4.0

@pytest.mark.lib
def check_light_limit_exact():
    """Verify that both speeds at the limit give the analytic values exactly."""
    angle = wigner_angle(1.0, 1.0)
    assert angle.cos_two_omega == 0.0
    assert angle.sin_omega == math.sqrt(0.5)
    assert angle.sin_two_omega == 1.0
    assert math.isinf(angle.gamma1) and math.isinf(angle.gamma2)

@pytest.mark.lib
def check_gamma():
    """Verify the lorentz factor at reference speeds."""
    assert gamma(0.0) == 1.0
    assert gamma(0.6) == pytest.approx(1.25, abs=1e-15)
    assert gamma(ROOT3) == pytest.approx(2.0, abs=1e-12)
    assert math.isinf(gamma(1.0))
    assert gamma(Velocity(0.6)) == gamma(0.6)

@pytest.mark.lib
def check_rapidity():
    """Verify the rapidity and the inverse helpers."""
    assert rapidity(0.6) == pytest.approx(0.6931471806, abs=1e-10)
    assert rapidity(math.tanh(1.0)) == pytest.approx(1.0, abs=1e-12)
    assert velocity_from_rapidity(1.0).beta == pytest.approx(math.tanh(1.0), abs=1e-15)
    assert velocity_from_gamma(2.0).beta == pytest.approx(ROOT3, abs=1e-12)
    assert velocity_from_gamma(math.inf).is_light
    assert velocity_from_gamma(1.0).is_rest
    with pytest.raises(DomainError):
        rapidity(1.0)
    with pytest.raises(DomainError):
        velocity_from_gamma(0.5)
    with pytest.raises(DomainError):
        velocity_from_rapidity(-1.0)

@pytest.mark.lib
@pytest.mark.parametrize('beta', [-0.1, 1.0000001, 2.0, math.nan, math.inf, -math.inf, 'fast', None])
def check_velocity_domain(beta):
    """Verify that speeds outside [0, 1] or not finite are refused."""
    with pytest.raises(DomainError):
        Velocity(beta)
    with pytest.raises(DomainError):
        wigner_angle(beta, 0.5)

@pytest.mark.lib
@given(v1=speeds, v2=speeds)
def check_symmetry(v1, v2):
    """Verify the angle is symmetric in the two speeds."""
    forward, reverse = wigner_angle(v1, v2), wigner_angle(v2, v1)
    assert forward.sin_omega == reverse.sin_omega
    assert forward.cos_two_omega == reverse.cos_two_omega
    assert (forward.gamma1, forward.gamma2) == (reverse.gamma2, reverse.gamma1)

@pytest.mark.lib
@given(v1=speeds, v2=speeds)
def check_identity(v1, v2):
    """Verify cos 2w = 1 - 2 sin^2 w and the ranges of both."""
    angle = wigner_angle(v1, v2)
    assert abs(angle.cos_two_omega - (1.0 - 2.0 * angle.sin_omega**2)) <= 1e-12
    assert 0.0 <= angle.cos_two_omega <= 1.0
    assert 0.0 <= angle.sin_omega <= math.sqrt(0.5)
    assert abs(angle.sin_two_omega**2 + angle.cos_two_omega**2 - 1.0) <= 1e-12

@pytest.mark.lib
@given(v1=speeds, v2=speeds, v3=speeds)
def check_monotone(v1, v2, v3):
    """Verify cos 2w does not increase with the speed of the particle."""
    low, high = sorted((v1, v2))
    assert wigner_angle(high, v3).cos_two_omega <= wigner_angle(low, v3).cos_two_omega + 1e-12
