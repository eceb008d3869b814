"""Gauss hypergeometric function 2F1 for complex parameters, plus log-gamma.

The scattering wavefunctions are built from 2F1(a, b; c; z) with complex
parameters and argument z = -e^{2bx} (or its reciprocal), so z lives on the
negative real axis in [-1, 0) and beyond -1.  Evaluation zones:

* |z| <= 0.5              direct Maclaurin series
* 0.5 < |z| <= 1, Re z<0  Pfaff transform w = z/(z-1), then the series;
                          z = -1 (the x = 0 matching point) maps to w = 1/2
* 0.5 < |z| <  1, Re z>=0 direct series (never produced by the solver, but
                          still absolutely convergent)
* |z| > 1                 inversion to argument 1/z through gamma-function
                          prefactors, then the zones above

The direct series at z = -1 converges only conditionally for the solver's
parameter sets, so the matching point always goes through the Pfaff route.
All fractional powers are principal branch.
"""

from __future__ import annotations

import cmath
import math

from .errors import ConnectionDegenerate, GammaPole, ParameterPole, SeriesNoConvergence

SERIES_TOL = 1e-16
SERIES_CAP = 20_000
POLE_TOL = 1e-12
DEGENERATE_TOL = 1e-8

_LN_SQRT_2PI = 0.9189385332046727418

# Lanczos coefficients, g = 7, 9 terms.
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def _near_nonpositive_integer(w: complex, tol: float) -> bool:
    n = round(w.real)
    return n <= 0 and abs(w - n) <= tol


def _near_integer(w: complex, tol: float) -> bool:
    return abs(w - round(w.real)) <= tol


def lngamma(z: complex) -> complex:
    """Principal-branch log Gamma via Lanczos, reflection for Re z < 0.5.

    Raises GammaPole within 1e-12 of a non-positive integer.
    """
    z = complex(z)
    if _near_nonpositive_integer(z, POLE_TOL):
        raise GammaPole(f"lngamma pole at z={z}")
    if z.real < 0.5:
        # Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return math.log(math.pi) - cmath.log(cmath.sin(math.pi * z)) - lngamma(1.0 - z)
    zz = z - 1.0
    series = complex(_LANCZOS[0])
    for i in range(1, len(_LANCZOS)):
        series += _LANCZOS[i] / (zz + i)
    t = zz + 7.5
    return _LN_SQRT_2PI + (zz + 0.5) * cmath.log(t) - t + cmath.log(series)


def _series(a: complex, b: complex, c: complex, z: complex) -> complex:
    """Maclaurin series; terminates on two consecutive negligible terms."""
    total = 1.0 + 0.0j
    term = 1.0 + 0.0j
    small_run = 0
    for n in range(SERIES_CAP):
        term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * z
        total += term
        if abs(term) < SERIES_TOL * abs(total):
            small_run += 1
            if small_run >= 2 or term == 0:
                return total
        else:
            small_run = 0
    raise SeriesNoConvergence(
        f"2F1 series did not converge in {SERIES_CAP} terms at z={z}"
    )


def _pfaff(a: complex, b: complex, c: complex, z: complex) -> complex:
    # 2F1(a,b;c;z) = (1-z)^-a 2F1(a, c-b; c; z/(z-1))
    w = z / (z - 1.0)
    return (1.0 - z) ** (-a) * _series(a, c - b, c, w)


def _gamma_ratio(num1: complex, num2: complex, den1: complex, den2: complex) -> complex:
    """exp(ln G(num1) + ln G(num2) - ln G(den1) - ln G(den2)); 0 on denominator poles."""
    try:
        den = lngamma(den1) + lngamma(den2)
    except GammaPole:
        return 0.0j
    return cmath.exp(lngamma(num1) + lngamma(num2) - den)


def _connection(a: complex, b: complex, c: complex, z: complex) -> complex:
    """Inversion z -> 1/z:

    2F1(a,b;c;z) = G(c)G(b-a)/(G(b)G(c-a)) (-z)^-a 2F1(a, 1-c+a; 1-b+a; 1/z)
                 + G(c)G(a-b)/(G(a)G(c-b)) (-z)^-b 2F1(b, 1-c+b; 1-a+b; 1/z)

    Valid only when b - a is not an integer (gamma prefactors blow up).
    """
    if _near_integer(b - a, DEGENERATE_TOL):
        raise ConnectionDegenerate(
            f"b-a={b - a} within {DEGENERATE_TOL} of an integer; inversion degenerate"
        )
    zr = 1.0 / z
    neg_z = -z
    term_a = (
        _gamma_ratio(c, b - a, b, c - a)
        * neg_z ** (-a)
        * hyp2f1(a, 1.0 - c + a, 1.0 - b + a, zr)
    )
    term_b = (
        _gamma_ratio(c, a - b, a, c - b)
        * neg_z ** (-b)
        * hyp2f1(b, 1.0 - c + b, 1.0 - a + b, zr)
    )
    return term_a + term_b


def hyp2f1(a: complex, b: complex, c: complex, z: complex) -> complex:
    """2F1(a, b; c; z) for complex parameters, dispatched by |z| zone."""
    a, b, c, z = complex(a), complex(b), complex(c), complex(z)
    if _near_nonpositive_integer(c, POLE_TOL):
        raise ParameterPole(f"2F1 parameter c={c} at a non-positive integer")
    az = abs(z)
    if az <= 0.5:
        out = _series(a, b, c, z)
    elif az <= 1.0:
        out = _pfaff(a, b, c, z) if z.real < 0.0 else _series(a, b, c, z)
    else:
        out = _connection(a, b, c, z)
    if not (math.isfinite(out.real) and math.isfinite(out.imag)):
        raise OverflowError(f"2F1 overflow at a={a}, b={b}, c={c}, z={z}")
    return out


def hyp2f1_dz(a: complex, b: complex, c: complex, z: complex) -> complex:
    """d/dz 2F1(a,b;c;z) = (ab/c) 2F1(a+1, b+1; c+1; z)."""
    a, b, c, z = complex(a), complex(b), complex(c), complex(z)
    if _near_nonpositive_integer(c, POLE_TOL):
        raise ParameterPole(f"2F1 parameter c={c} at a non-positive integer")
    return a * b / c * hyp2f1(a + 1.0, b + 1.0, c + 1.0, z)
