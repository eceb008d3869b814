"""Shared test utilities: closed-form checks independent of the solver."""

import cmath

from kgscatter.model import PotentialParams, dispersion
from kgscatter.oracle import _project_region_I, _propagate_left


def analytic_sign_steps(p: PotentialParams, E: float) -> tuple[float, float]:
    """R, T for the b -> inf limit: tanh replaced by sign(x).

    Four constant levels (-a | +a | -a | +a) with interfaces at x0, x1, 0,
    composed from exact 2x2 propagation matrices.  Independent of both the
    hypergeometric pipeline and the staircase discretization.
    """
    disp = dispersion(p, E)
    k_right = 2.0 * p.b * disp.mu.real
    phi, dphi = 1.0 + 0.0j, 1j * k_right  # e^{i k x} at x = 0
    r = cmath.sqrt(complex((E + p.a) ** 2 - p.m**2))
    q = cmath.sqrt(complex((E - p.a) ** 2 - p.m**2))
    phi, dphi = _propagate_left(r, -p.x1, phi, dphi)  # (x1, 0) at V = -a
    phi, dphi = _propagate_left(q, p.x1 - p.x0, phi, dphi)  # (x0, x1) at V = +a
    b1, c1 = _project_region_I(disp, phi, dphi, p.x0)
    inc_flux = abs(c1) ** 2
    return abs(b1) ** 2 / inc_flux, (k_right / disp.r) / inc_flux
