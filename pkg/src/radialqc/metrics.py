"""Distances on punctured space: p-angular distance, hyperbolic distance from the
origin of the unit ball, the distance-ratio metric, and the radial quotient Q."""

from __future__ import annotations

import numpy as np

from radialqc.errors import DomainError, PreconditionError
from radialqc.geometry import RadialExponents, _norm, _require_nonzero, _scalar, as_points, radial_map

__all__ = ["p_angular", "rho0", "j_metric", "q_ratio"]


def p_angular(x, y, p: float):
    """``||x|^(p-1) x - |y|^(p-1) y|`` for nonzero x, y.

    ``p`` may be an array with one exponent per point of a batch.
    """
    p = np.expand_dims(np.asarray(p, dtype=float), -1)
    x = as_points(x)
    y = as_points(y)
    rx = _norm(x, keepdims=True)
    ry = _norm(y, keepdims=True)
    _require_nonzero(rx)
    _require_nonzero(ry)
    return _scalar(_norm(rx ** (p - 1.0) * x - ry ** (p - 1.0) * y))


def rho0(r):
    """Hyperbolic distance in the unit ball from 0 to a point at radius r."""
    r = np.asarray(r, dtype=float)
    if np.any(~(r >= 0.0)) or np.any(~(r < 1.0)):
        raise DomainError("rho0 requires 0 <= r < 1")
    return _scalar(np.log1p(r) - np.log1p(-r))


def j_metric(x, y):
    """Distance-ratio metric of R^n minus the origin, where the boundary distance is |z|."""
    x = as_points(x)
    y = as_points(y)
    rx = _norm(x)
    ry = _norm(y)
    _require_nonzero(rx)
    _require_nonzero(ry)
    return _scalar(np.log1p(_norm(x - y) / np.minimum(rx, ry)))


def q_ratio(x, y, e: RadialExponents):
    """``|A(x) - A(y)| / |A(x) - A(z)|`` with z the radial projection of y onto the ray of x.

    The caller orders the pair so that ``|x| <= |y|``; the quotient is not symmetric.
    """
    if not e.sharp_regime:
        raise DomainError(f"q_ratio requires 0 < a <= 1 <= b, got {e}")
    x = as_points(x)
    y = as_points(y)
    rx = _norm(x)
    ry = _norm(y)
    _require_nonzero(rx)
    if np.any(rx > ry):
        raise PreconditionError("q_ratio requires |x| <= |y|; swap the arguments")
    if np.any(np.all(x == y, axis=-1)):
        raise DomainError("q_ratio is undefined for coincident points")
    num = _norm(radial_map(x, e) - radial_map(y, e))
    # x and z lie on one ray, so the denominator is a difference of two powers of
    # the radius; writing it with expm1 keeps its digits when the exponents are small
    a = np.asarray(e.a, dtype=float)
    b = np.asarray(e.b, dtype=float)
    d = _norm(x - y)
    rz = rx + d
    ex = np.where(rx < 1.0, a, b)
    ez = np.where(rz < 1.0, a, b)
    lrx = np.log(rx)
    step = np.log1p(d / rx)
    delta = np.where(ex == ez, ex * step, ez * (lrx + step) - ex * lrx)
    den = np.exp(ex * lrx) * np.abs(np.expm1(delta))
    return _scalar(num / den)
