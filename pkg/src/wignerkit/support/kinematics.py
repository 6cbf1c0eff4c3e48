"""Relativistic kinematics of two perpendicular boosts; gamma factors, rapidities, and the Wigner angle."""

# type annotations
from __future__ import annotations
from typing import Union

# standard libraries
import logging
import math
from dataclasses import dataclass

# internal libraries
from ..core.error import DomainError

logger = logging.getLogger(__name__)

# define public interface
__all__ = ['Velocity', 'WignerAngle', 'as_velocity', 'gamma', 'rapidity', 'wigner_angle',
           'velocity_from_gamma', 'velocity_from_rapidity', ]

@dataclass(frozen=True)
class Velocity:
    """Dimensionless speed (v/c) in [0, 1]; the value 1 flags the light-speed limit."""
    beta: float

    def __post_init__(self) -> None:
        try:
            beta = float(self.beta)
        except (TypeError, ValueError) as error:
            raise DomainError(f'Speed {self.beta!r} is not a real number!') from error
        if not math.isfinite(beta):
            raise DomainError(f'Speed {beta} is not finite!')
        if not 0.0 <= beta <= 1.0:
            raise DomainError(f'Speed {beta} lies outside [0, 1] (units of c)!')
        object.__setattr__(self, 'beta', beta)

    @property
    def is_light(self) -> bool:
        return self.beta == 1.0

    @property
    def is_rest(self) -> bool:
        return self.beta == 0.0

Speed = Union[Velocity, float]

@dataclass(frozen=True)
class WignerAngle:
    """Rotation of the spin seen by the boosted observer, with the quantities derived from it."""
    gamma1: float
    gamma2: float
    sin_omega: float
    cos_two_omega: float

    @property
    def cos_omega(self) -> float:
        return math.sqrt((1.0 + self.cos_two_omega) / 2.0)

    @property
    def omega(self) -> float:
        """Angle in radians, within [0, pi/4]."""
        return math.atan2(self.sin_omega, self.cos_omega)

    @property
    def sin_two_omega(self) -> float:
        """sqrt(1 - cos(2w)^2), evaluated as 2 sin(w) cos(w)."""
        return min(1.0, 2.0 * self.sin_omega * self.cos_omega)

def as_velocity(v: Speed) -> Velocity:
    """Coerce a plain speed into a validated Velocity."""
    return v if isinstance(v, Velocity) else Velocity(v)

def gamma(v: Speed) -> float:
    """Lorentz factor; infinite at the light-speed limit."""
    beta = as_velocity(v).beta
    if beta == 1.0:
        return math.inf
    return 1.0 / math.sqrt((1.0 - beta) * (1.0 + beta))

def gamma_less_one(v: Velocity) -> float:
    """Lorentz factor less one, written as beta^2 gamma^2 / (gamma + 1) to avoid cancellation at low speeds."""
    g = gamma(v)
    return v.beta**2 * g**2 / (g + 1.0)

def rapidity(v: Speed) -> float:
    """Rapidity atanh(beta); undefined at the light-speed limit."""
    v = as_velocity(v)
    if v.is_light:
        raise DomainError('Rapidity is infinite at the speed of light!')
    return math.atanh(v.beta)

def velocity_from_rapidity(eta: float) -> Velocity:
    """Speed reached by a boost of the given (non-negative) rapidity."""
    if not math.isfinite(eta) or eta < 0.0:
        raise DomainError(f'Rapidity {eta} must be finite and non-negative!')
    return Velocity(math.tanh(eta))

def velocity_from_gamma(g: float) -> Velocity:
    """Speed corresponding to a Lorentz factor; an infinite factor maps to the light-speed limit."""
    if math.isnan(g) or g < 1.0:
        raise DomainError(f'Lorentz factor {g} must be at least one!')
    if math.isinf(g):
        return Velocity(1.0)
    return Velocity(min(1.0, math.sqrt((g - 1.0) * (g + 1.0)) / g))

def wigner_angle(v1: Speed, v2: Speed) -> WignerAngle:
    """Wigner rotation for a particle moving at v1 seen by an observer boosted perpendicular at v2.

    With gamma factors g1 and g2 the rotation obeys

        sin(w)^2 = (g1 - 1)(g2 - 1) / (2 (1 + g1 g2))
        cos(2w)  = (g1 + g2) / (1 + g1 g2)

    and the light-speed limits are taken analytically: a single unit speed gives cos(2w) = 1/g_other,
    both give cos(2w) = 0 with sin(w) = cos(w) = 1/sqrt(2). The result is symmetric in (v1, v2).
    """
    v1, v2 = as_velocity(v1), as_velocity(v2)
    g1, g2 = gamma(v1), gamma(v2)

    if v1.is_light and v2.is_light:
        return WignerAngle(gamma1=g1, gamma2=g2, sin_omega=math.sqrt(0.5), cos_two_omega=0.0)

    if v1.is_light or v2.is_light:
        other = g2 if v1.is_light else g1
        cos_two_omega = 1.0 / other
        sin_omega = math.sqrt((1.0 - cos_two_omega) / 2.0)
        return WignerAngle(gamma1=g1, gamma2=g2, sin_omega=sin_omega, cos_two_omega=cos_two_omega)

    product = 1.0 + g1 * g2
    sin_omega = math.sqrt(gamma_less_one(v1) * gamma_less_one(v2) / (2.0 * product))
    cos_two_omega = min(1.0, (g1 + g2) / product)
    return WignerAngle(gamma1=g1, gamma2=g2, sin_omega=min(sin_omega, math.sqrt(0.5)), cos_two_omega=cos_two_omega)
