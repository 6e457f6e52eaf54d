"""Real special functions used by every closed form in the package.

Everything is evaluated in log space where overflow is a risk: all the
norm formulas are ratios of Gamma values whose arguments can reach a few
hundred.  The Gamma/log-Gamma kernels are the C library ones exposed by
``math`` (double precision, relative error well below 1e-13 on the ranges
used here); the generalized binomial is an iterated product so that its
sign pattern is exact for negative upper arguments.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = [
    "gamma",
    "log_gamma",
    "beta",
    "gen_binomial",
    "besov_coeff",
    "incomplete_beta_zero",
]


def gamma(x: float) -> float:
    """Gamma function for real x, rejecting the poles at 0, -1, -2, ...

    Raises ValueError on a pole and OverflowError when the result does not
    fit in a double (x larger than about 171.6).
    """
    if x <= 0 and float(x).is_integer():
        raise ValueError(f"gamma pole at non-positive integer x={x}")
    return math.gamma(x)


def log_gamma(x: float) -> float:
    """log Gamma(x) for x > 0."""
    if x <= 0:
        raise ValueError(f"log_gamma requires x > 0, got {x}")
    return math.lgamma(x)


def beta(x: float, y: float) -> float:
    """Euler Beta function B(x, y) = Gamma(x)Gamma(y)/Gamma(x+y), via log-Gamma.

    Both arguments must be positive; B diverges as either one tends to 0+,
    which is exactly the membership-threshold boundary the callers probe.
    """
    if x <= 0 or y <= 0:
        raise ValueError(f"beta requires positive arguments, got ({x}, {y})")
    return math.exp(math.lgamma(x) + math.lgamma(y) - math.lgamma(x + y))


def gen_binomial(s: float, j: int) -> float:
    """Generalized binomial coefficient binom(s, j) = s(s-1)...(s-j+1)/j!.

    Computed as an iterated product (not via Gamma) so the alternating sign
    for non-integer s < j comes out exactly.
    """
    if j < 0:
        raise ValueError(f"gen_binomial requires j >= 0, got {j}")
    out = 1.0
    for k in range(j):
        out *= (s - k) / (k + 1)
    return out


def besov_coeff(alpha: float, n: int) -> float:
    """Coefficient weight Gamma(n+alpha) / (Gamma(alpha) n!), in log space."""
    if alpha <= 0:
        raise ValueError(f"besov_coeff requires alpha > 0, got {alpha}")
    if n < 0:
        raise ValueError(f"besov_coeff requires n >= 0, got {n}")
    return math.exp(math.lgamma(n + alpha) - math.lgamma(alpha) - math.lgamma(n + 1.0))


def incomplete_beta_zero(y, alpha: float):
    """Incomplete Beta integral with vanishing second parameter.

    Returns ``int_0^y u^(alpha-1) / (1-u) du`` for 0 <= y < 1 and alpha > 0.
    This is the primitive behind the radial norm weights: it diverges like
    -log(1-y) as y -> 1.  Vectorized over y.

    Two absolutely convergent expansions are stitched at y = 1/2: the power
    series sum_k y^(alpha+k)/(alpha+k) for small y, and an expansion of
    u^(alpha-1) around u = 1 (term ratio <= 1/2) beyond it.
    """
    if alpha <= 0:
        raise ValueError(f"incomplete_beta_zero requires alpha > 0, got {alpha}")
    y = np.asarray(y, dtype=float)
    if np.any((y < 0) | (y >= 1)):
        raise ValueError("incomplete_beta_zero requires 0 <= y < 1")
    out = np.empty_like(y)

    lo = y <= 0.5
    if np.any(lo):
        ylo = y[lo]
        acc = np.zeros_like(ylo)
        term = ylo**alpha
        for k in range(200):
            acc += term / (alpha + k)
            term *= ylo
            if np.all(term < 1e-17 * (alpha + k + 1)):
                break
        out[lo] = acc

    hi = ~lo
    if np.any(hi):
        yhi = y[hi]
        # Phi(1/2) by the small-y series (scalar).
        phi_half = float(incomplete_beta_zero(0.5, alpha))
        v = 1.0 - yhi  # in (0, 1/2]
        # u^(alpha-1) = sum_m c_m (1-u)^m with c_m = prod_{i<=m} (i-alpha)/i.
        acc = np.log(0.5 / v)  # m = 0 term
        c = 1.0
        half_pow = 0.5
        v_pow = v.copy()
        for m in range(1, 400):
            c *= (m - alpha) / m
            acc += c * (half_pow - v_pow) / m
            half_pow *= 0.5
            v_pow *= v
            if abs(c) * half_pow / m < 1e-17:
                break
        out[hi] = phi_half + acc

    return out if out.ndim else float(out)
