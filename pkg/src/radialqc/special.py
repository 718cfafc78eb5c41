"""Special functions of plane quasiconformal theory.

The complete elliptic integral is evaluated through the arithmetic-geometric
mean, the Grötzsch ring modulus ``mu`` as a ratio of two AGMs, and its inverse
by monotone bisection. All functions broadcast over numpy arrays and return
Python floats for scalar input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from radialqc.errors import DomainError

__all__ = [
    "NamedConstants",
    "CONSTANTS",
    "T0",
    "artanh",
    "artanh_sech",
    "arcosh",
    "agm",
    "ell_K",
    "mu",
    "mu_inv",
    "phi",
    "phi_complement",
    "minorant_p",
    "c1",
    "c3",
    "lambda_bound",
    "c_qc",
    "low_accuracy",
]

HALF_PI = 0.5 * math.pi

# mu(r) is still computed near the endpoints, but inverse values there are not trusted to 1e-10
LOW_ACCURACY_MARGIN = 1e-8


def _out(value):
    value = np.asarray(value, dtype=float)
    return float(value) if value.ndim == 0 else value


def _check_K(K):
    K = np.asarray(K, dtype=float)
    if np.any(~np.isfinite(K)) or np.any(K < 1.0):
        raise DomainError("maximal dilatation K must satisfy K >= 1")
    return K


def _check_open_unit(r, name="r"):
    r = np.asarray(r, dtype=float)
    if np.any(~(r > 0.0)) or np.any(~(r < 1.0)):
        raise DomainError(f"{name} must lie in the open interval (0, 1)")
    return r


def artanh(x):
    """Inverse hyperbolic tangent, ``log((1 + x)/(1 - x)) / 2``."""
    x = np.asarray(x, dtype=float)
    return _out(0.5 * (np.log1p(x) - np.log1p(-x)))


def arcosh(x):
    """Inverse hyperbolic cosine on [1, inf), ``log(x + sqrt(x^2 - 1))``."""
    x = np.asarray(x, dtype=float)
    if np.any(~(x >= 1.0)):
        raise DomainError("arcosh is defined on [1, inf)")
    # log x + log(1 + sqrt(1 - x^-2)) avoids overflowing x^2
    return _out(np.log(x) + np.log1p(np.sqrt((1.0 - 1.0 / x) * (1.0 + 1.0 / x))))


def artanh_sech(u):
    """``arth(1/ch(u)) = log(coth(u/2))`` for u > 0, accurate at both ends of (0, inf)."""
    u = np.asarray(u, dtype=float)
    return _out(np.log1p(2.0 / np.expm1(u)))


def agm(a, b, rtol: float = 1e-15, max_iter: int = 64):
    """Arithmetic-geometric mean of nonnegative a and b."""
    a, b = (arr.copy() for arr in np.broadcast_arrays(np.asarray(a, float), np.asarray(b, float)))
    for _ in range(max_iter):
        if np.all(np.abs(a - b) <= rtol * np.abs(a)):
            break
        a, b = 0.5 * (a + b), np.sqrt(a * b)
    return _out(0.5 * (a + b))


def _complement(r):
    return np.sqrt((1.0 - r) * (1.0 + r))


def ell_K(r):
    """Legendre's complete elliptic integral of the first kind, as a function of the modulus."""
    r = np.asarray(r, dtype=float)
    if np.any(~(r >= 0.0)) or np.any(~(r < 1.0)):
        raise DomainError("ell_K requires 0 <= r < 1")
    return _out(HALF_PI / np.asarray(agm(1.0, _complement(r))))


def mu(r):
    """Grötzsch modulus ``(pi/2) K(r') / K(r)``, a decreasing bijection (0,1) -> (0,inf)."""
    r = _check_open_unit(r)
    # K(r') = pi / (2 agm(1, r)), so the ratio needs no elliptic integral near r' -> 1
    return _out(HALF_PI * np.asarray(agm(1.0, _complement(r))) / np.asarray(agm(1.0, r)))


def _dmu_dr(r):
    k = HALF_PI / np.asarray(agm(1.0, _complement(r)))
    return -(math.pi**2) / (4.0 * r * (1.0 - r * r) * k * k)


def mu_inv(y, width: float = 1e-14, max_iter: int = 200):
    """Inverse of ``mu``: the r in (0, 1) with ``mu(r) == y``.

    Bisection on (0, 1) stops once the bracket is narrower than ``width`` (or
    after ``max_iter`` halvings); one Newton step is then taken if it stays
    inside the final bracket.
    """
    y = np.asarray(y, dtype=float)
    if np.any(~(y > 0.0)) or np.any(~np.isfinite(y)):
        raise DomainError("mu_inv requires a finite positive argument")
    lo = np.zeros_like(y)
    hi = np.ones_like(y)
    for _ in range(max_iter):
        if np.all(hi - lo < width):
            break
        mid = 0.5 * (lo + hi)
        too_small = np.asarray(mu(mid)) > y
        lo = np.where(too_small, mid, lo)
        hi = np.where(too_small, hi, mid)
    r = 0.5 * (lo + hi)
    if np.all((r > 0.0) & (r < 1.0)):
        with np.errstate(all="ignore"):
            step = (np.asarray(mu(r)) - y) / _dmu_dr(r)
        cand = r - step
        ok = np.isfinite(cand) & (cand >= lo) & (cand <= hi)
        r = np.where(ok, cand, r)
    return _out(_refine_small(r, y))


# below this the bisection bracket no longer resolves r to relative precision
_SMALL_R = 1e-4


def _refine_small(r, y):
    """Newton in log r for tiny inverses, started from ``mu(r) ~ log(4/r)``."""
    small = (r < _SMALL_R) & (4.0 * np.exp(-y) > 0.0)
    if not np.any(small):
        return r
    ys = y[small] if y.ndim else y
    s = math.log(4.0) - ys
    for _ in range(4):
        t = np.exp(s)
        s = s - (np.asarray(mu(t)) - ys) / (t * _dmu_dr(t))
    out = np.array(r, dtype=float)
    out[small] = np.exp(s)
    return out


def phi(K, r):
    """Distortion function ``mu^-1(mu(r)/K)`` of the quasiconformal Schwarz lemma."""
    K = _check_K(K)
    r = _check_open_unit(r)
    return mu_inv(np.asarray(mu(r)) / K)


def phi_complement(K, r):
    """``sqrt(1 - phi_K(r)^2)``, computed directly so it keeps its digits when phi_K(r) rounds to 1.

    Uses ``mu(s) mu(s') = pi^2/4``: the complement is ``mu^-1(K pi^2 / (4 mu(r)))``.
    """
    K = _check_K(K)
    r = _check_open_unit(r)
    return mu_inv(K * math.pi**2 / (4.0 * np.asarray(mu(r))))


def low_accuracy(r) -> np.ndarray:
    r = np.asarray(r, dtype=float)
    return (r < LOW_ACCURACY_MARGIN) | (r > 1.0 - LOW_ACCURACY_MARGIN)


def minorant_p(K, r):
    """Explicit minorant of the distortion function, ``1 / ch(arch(1/r) / K)``."""
    K = _check_K(K)
    r = _check_open_unit(r)
    return _out(1.0 / np.cosh(np.asarray(arcosh(1.0 / r)) / K))


@dataclass(frozen=True)
class NamedConstants:
    t0: float
    m1: float
    m2: float


T0 = (math.e - 1.0) / (math.e + 1.0)

CONSTANTS = NamedConstants(
    t0=T0,
    m1=(1.0 + math.log(T0)) / (T0**2 * (1.0 - math.log(T0))),
    m2=2.0 * T0 * math.log(T0) / (T0**2 - 1.0),
)


def c3(K):
    """Constant ``2 arth(p(t0))`` of the hyperbolic growth bound for the minorant; c3(1) = 1."""
    K = _check_K(K)
    return _out(2.0 * np.asarray(artanh_sech(np.asarray(arcosh(1.0 / T0)) / K)))


def c1(K):
    """Threshold ``(1/K)^(K/(K-1))``; tends to 1/e as K -> 1+ but is undefined at K = 1."""
    K = np.asarray(K, dtype=float)
    if np.any(~(K > 1.0)):
        raise DomainError("c1 requires K > 1")
    return _out((1.0 / K) ** (K / (K - 1.0)))


def lambda_bound(K):
    """``exp(pi (K - 1/K))``, the explicit majorant used in place of the Grötzsch constant."""
    K = _check_K(K)
    return _out(np.exp(math.pi * (K - 1.0 / K)))


def c_qc(K):
    """``2^(K-1) K^K exp(4K(K+1) sqrt(K-1))``."""
    K = _check_K(K)
    return _out(2.0 ** (K - 1.0) * K**K * np.exp(4.0 * K * (K + 1.0) * np.sqrt(K - 1.0)))
