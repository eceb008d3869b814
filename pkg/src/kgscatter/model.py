"""Potential shape, dispersion relations, and energy-regime classification.

Natural units hbar = c = 1 throughout.  The potential is

    V(x) = -a            for x < x0
         = +a            for x0 <= x <= x1
         = a tanh(b x)   for x > x1

with x0 < x1 < 0, so the asymptotic levels are -a on the left and +a on the
right.  An incident wave of energy E > m sees the left wavenumber
r = sqrt((E+a)^2 - m^2) and the right wavenumber 2 b mu; the sign of mu
follows the group velocity (positive for E > a, negative for E < a), and mu
turns purely imaginary when (E-a)^2 < m^2 (decaying transmitted wave).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

from .errors import ThresholdSingular

# Threshold exclusion band, in units of m.
DEFAULT_EPS_FACTOR = 1e-6


@dataclass(frozen=True)
class PotentialParams:
    """Height a, smoothness b, mass m, and step positions x0 < x1 < 0."""

    a: float
    b: float
    m: float
    x0: float
    x1: float

    def __post_init__(self) -> None:
        # a = 0 (no potential at all) is allowed so the zero-potential
        # degenerate checks can run; the paper's setup always has a > 0.
        if self.a < 0:
            raise ValueError(f"potential height a={self.a} must be >= 0")
        if self.b <= 0:
            raise ValueError(f"smoothness b={self.b} must be > 0")
        if self.m <= 0:
            raise ValueError(f"mass m={self.m} must be > 0")
        if not (self.x0 < self.x1 < 0):
            raise ValueError(f"need x0 < x1 < 0, got x0={self.x0}, x1={self.x1}")

    def threshold_band(self) -> float:
        return DEFAULT_EPS_FACTOR * self.m


@dataclass(frozen=True)
class DispersionSet:
    """Wavenumbers and hypergeometric exponents at one energy.

    r and nu are real and positive for every E > m.  mu is real with the
    sign of E - a when (E-a)^2 > m^2, otherwise +i |mu|.  q is the principal
    square root of (E-a)^2 - m^2; both +q and -q exponentials enter the
    middle region, so only the branch of mu carries physics.
    """

    E: float
    r: float
    q: complex
    nu: float
    mu: complex
    lam: complex


class EnergyRegime(Enum):
    SUPERRADIANT = "superradiant"
    EVANESCENT = "evanescent"
    PROPAGATING = "propagating"
    NEAR_THRESHOLD = "near_threshold"


def potential_value(p: PotentialParams, x: float) -> float:
    """V(x); the jumps at x0 and x1 follow the half-open convention above."""
    if x < p.x0:
        return -p.a
    if x <= p.x1:
        return p.a
    return p.a * math.tanh(p.b * x)


def dispersion(p: PotentialParams, E: float, eps: float | None = None) -> DispersionSet:
    """Wavenumbers r, q and exponents nu, mu, lambda at energy E.

    Raises ThresholdSingular for E <= m or |(E-a)^2 - m^2| < eps, where the
    transmitted channel opens/closes and the matching degenerates.
    """
    if eps is None:
        eps = p.threshold_band()
    if E <= p.m:
        raise ThresholdSingular(f"E={E} at or below the mass threshold m={p.m}")
    disc = (E - p.a) ** 2 - p.m**2
    if abs(disc) < eps:
        raise ThresholdSingular(f"E={E} within {eps} of the transmission threshold")
    two_b = 2.0 * p.b
    r = math.sqrt((E + p.a) ** 2 - p.m**2)
    nu = r / two_b
    if disc > 0:
        mu = complex(math.copysign(math.sqrt(disc), E - p.a) / two_b)
    else:
        mu = 1j * math.sqrt(-disc) / two_b
    q = cmath.sqrt(complex(disc))
    lam = (p.b + cmath.sqrt(complex(p.b**2 - 4.0 * p.a**2))) / two_b
    return DispersionSet(E=E, r=r, q=q, nu=nu, mu=mu, lam=lam)


def classify_regime(p: PotentialParams, E: float, eps: float | None = None) -> EnergyRegime:
    """Label E as superradiant, evanescent, propagating, or near a threshold.

    Boundaries are m, a - m, and a + m; anything within eps of one of them
    (and anything at or below m, outside the scattering window) maps to
    NEAR_THRESHOLD.  For a <= 2m the superradiant band is empty.
    """
    if eps is None:
        eps = p.threshold_band()
    if E <= 0:
        raise ValueError(f"energy E={E} must be positive")
    for edge in (p.m, p.a - p.m, p.a + p.m):
        if abs(E - edge) <= eps:
            return EnergyRegime.NEAR_THRESHOLD
    if E < p.m:
        return EnergyRegime.NEAR_THRESHOLD
    if E < p.a - p.m:
        return EnergyRegime.SUPERRADIANT
    if E <= p.a + p.m:
        return EnergyRegime.EVANESCENT
    return EnergyRegime.PROPAGATING
