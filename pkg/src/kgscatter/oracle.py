"""Independent numerical verifiers for the hypergeometric solver.

Two routes that never touch 2F1:

* ode_scatter:        classical fixed-step RK4 on phi'' = -[(E-V)^2 - m^2] phi,
                      integrated right-to-left from a pure transmitted wave
                      (no shooting needed: the right side has one outgoing
                      solution), then projected onto e^{+-irx} in region I.
* staircase_scatter:  the tanh tail chopped into constant-V segments, composed
                      with exact 2x2 (phi, phi') propagation matrices.

Both report R and T with the same current normalization as the solver.
Restricted to the real-mu regimes (superradiant, propagating); backward
integration is exponentially unstable in the evanescent band.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

from .errors import StepTooCoarse
from .model import DispersionSet, PotentialParams, dispersion


class OracleMethod(Enum):
    ODE_BACKWARD = "ode_backward"
    STAIRCASE = "staircase"


@dataclass(frozen=True)
class OracleResult:
    R: float
    T: float
    method: OracleMethod
    resolution: float


def _require_real_mu(disp: DispersionSet) -> float:
    if disp.mu.imag != 0.0:
        raise ValueError(
            f"oracle requires a propagating transmitted wave; mu={disp.mu} at E={disp.E}"
        )
    return disp.mu.real


def _project_region_I(
    disp: DispersionSet, phi: complex, dphi: complex, x: float
) -> tuple[complex, complex]:
    """Amplitudes (b1, c1) of e^{-irx}, e^{irx} from (phi, phi') at x."""
    r = disp.r
    c1 = 0.5 * (phi + dphi / (1j * r)) * cmath.exp(-1j * r * x)
    b1 = 0.5 * (phi - dphi / (1j * r)) * cmath.exp(1j * r * x)
    return b1, c1


def _rk4_piece(p, E, v_of_x, x_from, x_to, step, phi, dphi):
    """Integrate one smooth piece of the potential with classical RK4."""
    span = x_to - x_from
    n = max(1, math.ceil(abs(span) / step))
    h = span / n

    def f(x, u, v):
        return v, -(((E - v_of_x(x)) ** 2 - p.m**2)) * u

    x = x_from
    for _ in range(n):
        k1u, k1v = f(x, phi, dphi)
        k2u, k2v = f(x + 0.5 * h, phi + 0.5 * h * k1u, dphi + 0.5 * h * k1v)
        k3u, k3v = f(x + 0.5 * h, phi + 0.5 * h * k2u, dphi + 0.5 * h * k2v)
        k4u, k4v = f(x + h, phi + h * k3u, dphi + h * k3v)
        phi += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u)
        dphi += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v)
        x += h
    return phi, dphi


def ode_scatter(
    p: PotentialParams,
    E: float,
    x_left: float | None = None,
    x_right: float | None = None,
    step: float = 1e-3,
) -> OracleResult:
    """Backward RK4 from a unit transmitted wave at x_right down to x_left.

    The integration is split at the potential jumps x1 and x0 so each RK4
    piece sees a smooth potential (tanh on [x1, x_right], constants below).
    Raises StepTooCoarse when the unitarity residual exceeds 1e-4.
    """
    if x_left is None:
        x_left = p.x0 - 2.0
    if x_right is None:
        x_right = 10.0 / p.b + 1.0
    if not (x_left < p.x0):
        raise ValueError(f"x_left={x_left} must lie left of x0={p.x0}")
    if not (x_right > 10.0 / p.b):
        raise ValueError(f"x_right={x_right} must exceed 10/b={10.0 / p.b}")
    disp = dispersion(p, E)
    mu = _require_real_mu(disp)
    k_right = 2.0 * p.b * mu

    phi = cmath.exp(1j * k_right * x_right)
    dphi = 1j * k_right * phi
    tanh_tail = lambda x: p.a * math.tanh(p.b * x)
    phi, dphi = _rk4_piece(p, E, tanh_tail, x_right, p.x1, step, phi, dphi)
    phi, dphi = _rk4_piece(p, E, lambda x: p.a, p.x1, p.x0, step, phi, dphi)
    phi, dphi = _rk4_piece(p, E, lambda x: -p.a, p.x0, x_left, step, phi, dphi)

    b1, c1 = _project_region_I(disp, phi, dphi, x_left)
    inc_flux = abs(c1) ** 2
    R = abs(b1) ** 2 / inc_flux
    T = (k_right / disp.r) / inc_flux
    if abs(R + T - 1.0) > 1e-4:
        raise StepTooCoarse(
            f"unitarity residual {abs(R + T - 1.0):.3e} at step {step}; refine the step"
        )
    return OracleResult(R=R, T=T, method=OracleMethod.ODE_BACKWARD, resolution=step)


def _propagate_left(k: complex, d: float, phi: complex, dphi: complex) -> tuple[complex, complex]:
    """Map (phi, phi') at the right edge of a constant-k segment of width d
    to the left edge; exact for phi'' = -k^2 phi."""
    kd = k * d
    if abs(kd) < 1e-8:
        # series-safe small-argument limit of cos(kd), sin(kd)/k
        c = 1.0 - kd * kd / 2.0
        s_over_k = d * (1.0 - kd * kd / 6.0)
    else:
        c = cmath.cos(kd)
        s_over_k = cmath.sin(kd) / k
    return c * phi - s_over_k * dphi, k * k * s_over_k * phi + c * dphi


def staircase_scatter(
    p: PotentialParams,
    E: float,
    n_segments: int = 4000,
    x_tail: float | None = None,
) -> OracleResult:
    """Transfer-matrix R and T with the tanh tail discretized on [x1, x_tail].

    Each of the n_segments holds the midpoint potential value; the constant
    regions II and I are handled exactly.  Beyond x_tail the potential is
    taken as +a (|tanh(b x_tail) - 1| < 1e-8 at the default 10/b + 1).
    """
    if x_tail is None:
        x_tail = 10.0 / p.b + 1.0
    disp = dispersion(p, E)
    mu = _require_real_mu(disp)
    k_right = 2.0 * p.b * mu

    phi = cmath.exp(1j * k_right * x_tail)
    dphi = 1j * k_right * phi
    d = (x_tail - p.x1) / n_segments
    for j in range(n_segments - 1, -1, -1):
        x_mid = p.x1 + (j + 0.5) * d
        v = p.a * math.tanh(p.b * x_mid)
        k = cmath.sqrt(complex((E - v) ** 2 - p.m**2))
        phi, dphi = _propagate_left(k, d, phi, dphi)
        if not (math.isfinite(phi.real) and math.isfinite(phi.imag)):
            raise OverflowError(f"staircase overflow at segment {j} (E={E})")

    q = cmath.sqrt(complex((E - p.a) ** 2 - p.m**2))
    phi, dphi = _propagate_left(q, p.x1 - p.x0, phi, dphi)

    b1, c1 = _project_region_I(disp, phi, dphi, p.x0)
    inc_flux = abs(c1) ** 2
    R = abs(b1) ** 2 / inc_flux
    T = (k_right / disp.r) / inc_flux
    return OracleResult(R=R, T=T, method=OracleMethod.STAIRCASE, resolution=float(n_segments))
