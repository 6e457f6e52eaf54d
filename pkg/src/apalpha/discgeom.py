"""Geometry of the unit disc.

Mobius involutions and their derivatives, principal-branch powers of the
conformal derivative, Carleson boxes (plain and stretched) as radial-angular
rectangles, and the elementary comparability estimate for |1 - conj(a) z|.

Points are plain complex numbers; all functions broadcast over numpy arrays
of them.  Boxes are described by their anchor w alone.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "mobius",
    "mobius_derivs",
    "deriv_power",
    "box_bounds",
    "box_contains",
    "max_estimate",
]


def mobius(a, z):
    """Mobius involution (a - z) / (1 - conj(a) z).

    Swaps a and 0 and is its own inverse; the denominator cannot vanish
    for |a| < 1, |z| <= 1.
    """
    a = np.asarray(a, dtype=complex)
    z = np.asarray(z, dtype=complex)
    out = (a - z) / (1.0 - np.conj(a) * z)
    return out if out.ndim else complex(out)


def mobius_derivs(a, z):
    """First and second derivative of the involution at z.

    first  = -(1-|a|^2) / (1 - conj(a) z)^2
    second = -2 conj(a) (1-|a|^2) / (1 - conj(a) z)^3

    Pointwise, |first| (1-|z|^2) = 1 - |mobius(a, z)|^2.
    """
    a = np.asarray(a, dtype=complex)
    z = np.asarray(z, dtype=complex)
    den = 1.0 - np.conj(a) * z
    one_minus = 1.0 - np.abs(a) ** 2
    first = -one_minus / den**2
    second = -2.0 * np.conj(a) * one_minus / den**3
    if first.ndim == 0:
        return complex(first), complex(second)
    return first, second


def deriv_power(a, z, s: float):
    """Principal-branch power of the conformal derivative.

    Returns (1-|a|^2)^s * exp(i pi s) * (1 - conj(a) z)^(-2s), using the
    principal logarithm of (1 - conj(a) z); that quantity has positive real
    part on the closed disc so no branch cut is crossed.  The modulus equals
    |mobius'(a, .)|^s exactly, and s = 1 reproduces the first derivative.
    """
    a = np.asarray(a, dtype=complex)
    z = np.asarray(z, dtype=complex)
    log_den = np.log(1.0 - np.conj(a) * z)
    log_one_minus = np.log(1.0 - np.abs(a) ** 2)
    out = np.exp(s * (log_one_minus + 1j * np.pi) - 2.0 * s * log_den)
    return out if out.ndim else complex(out)


def box_bounds(w, stretched: bool = False):
    """Polar rectangle (r_lo, angular half-width, center angle) of the box at w.

    The box at anchor w is { 1-|z| <= kappa (1-|w|), |arg(z conj(w))| < 2 pi (1-|w|) }
    with kappa = 1 (plain) or 2 (stretched).  The angular half-width is clipped
    at pi: for 1-|w| >= 1/2 the angular condition is vacuous and the box
    degenerates to a full annulus (accepted as written; callers that care
    flag it).  Radial lower edge is clipped at 0.
    """
    w = complex(w)
    t = 1.0 - abs(w)
    if not 0.0 < t <= 1.0:
        raise ValueError(f"box anchor must satisfy 0 < 1-|w| <= 1, got w={w}")
    kappa = 2.0 if stretched else 1.0
    r_lo = max(0.0, 1.0 - kappa * t)
    half_width = min(np.pi, 2.0 * np.pi * t)
    center = np.angle(w) if w != 0 else 0.0
    return r_lo, half_width, center


def box_contains(w, z, stretched: bool = False):
    """Membership test of z in the (stretched) box anchored at w.

    Radial condition with <=, angular with <, matching the defining
    inequalities; angles are compared after normalization to (-pi, pi].
    For 1-|w| >= 1/2 the angular condition covers the whole circle and the
    box is a full annulus.
    """
    w = complex(w)
    t = 1.0 - abs(w)
    if not 0.0 < t <= 1.0:
        raise ValueError(f"box anchor must satisfy 0 < 1-|w| <= 1, got w={w}")
    kappa = 2.0 if stretched else 1.0
    z = np.asarray(z, dtype=complex)
    radial = (1.0 - np.abs(z)) <= kappa * t
    if t >= 0.5:
        angular = np.ones(z.shape, dtype=bool)
    else:
        dtheta = np.angle(z * np.exp(-1j * np.angle(w)))
        angular = np.abs(dtheta) < 2.0 * np.pi * t
    out = radial & angular
    return out if out.ndim else bool(out)


def max_estimate(a, z):
    """max(1-|a|, 1-|z|, |arg(conj(a) z)|), comparable to |1 - conj(a) z|.

    The ratio |1 - conj(a) z| / max_estimate(a, z) stays inside a fixed
    interval independent of the inputs; the scan test records the interval.
    """
    a = np.asarray(a, dtype=complex)
    z = np.asarray(z, dtype=complex)
    arg = np.abs(np.angle(np.conj(a) * z))
    # arg(conj(a) z) for a = 0 or z = 0 is taken as 0 (numpy already does this).
    out = np.maximum(np.maximum(1.0 - np.abs(a), 1.0 - np.abs(z)), arg)
    return out if out.ndim else float(out)
