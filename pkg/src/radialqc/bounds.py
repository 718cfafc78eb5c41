"""Upper bounds for the p-angular distance and for image distances under radial maps.

The four classical comparators are labelled by letter: ``M`` (Maligranda),
``D`` (Dragomir), ``B`` (Byström) and ``K``, the bound obtained by comparing
with the radial map ``A_{p,1/p}`` along the ray of the point of smaller norm.
"""

from __future__ import annotations

from dataclasses import dataclass

import math

import numpy as np

from radialqc.errors import DomainError
from radialqc.geometry import RadialExponents, _norm, _require_nonzero, _scalar, as_points, radial_map, radial_projection
from radialqc.metrics import j_metric, rho0
from radialqc.special import _check_K, c3, c_qc, lambda_bound

__all__ = [
    "BOUND_SYMBOLS",
    "TIE_TOL",
    "BoundSet",
    "bound_M",
    "bound_M_tabulated",
    "bound_D",
    "bound_B",
    "bound_K",
    "all_bounds",
    "sharp_constant",
    "bound_2j",
    "bound_2k",
    "bound_2kk",
    "j_quasi_bound",
    "hyp_growth_bound",
    "distortion_rhs",
    "eta_bound_plane",
    "eta_bound_nd",
]

BOUND_SYMBOLS = ("M", "D", "B", "K")
TIE_TOL = 1e-12


def _pair(x, y):
    x = as_points(x)
    y = as_points(y)
    if x.shape[-1] != y.shape[-1]:
        raise DomainError(f"dimension mismatch: {x.shape[-1]} vs {y.shape[-1]}")
    return x, y, _norm(x), _norm(y), _norm(x - y)


def _need_unit_interval(p: float, what: str):
    if not 0.0 < p < 1.0:
        raise DomainError(f"{what} requires p in (0, 1), got {p!r}")


def sharp_constant(a):
    """``2 / (3^a - 1)``: the best constant comparing image distance with radial image distance."""
    return 2.0 / np.expm1(np.asarray(a, dtype=float) * math.log(3.0))


def bound_M(x, y, p: float):
    """Maligranda's bound. For p < 0 it reads ``(2 - p)|x - y| max(|x|^p, |y|^p) / max(|x|, |y|)``."""
    x, y, rx, ry, d = _pair(x, y)
    m = np.maximum(rx, ry)
    if p > 1.0:
        return _scalar(p * m ** (p - 1.0) * d)
    _require_nonzero(rx)
    _require_nonzero(ry)
    if p < 0.0:
        return _scalar((2.0 - p) * d * np.maximum(rx**p, ry**p) / m)
    return _scalar((2.0 - p) * d / m ** (1.0 - p))


def bound_M_tabulated(x, y, p: float):
    """``(2 - p)|x - y| / max(|x|,|y|)^(1-p)`` for every p <= 1.

    This is the expression behind the published comparison tables for
    p = -0.6. For p < 0 it is not an upper bound of the p-angular distance
    (take one point close to the origin), so it is kept apart from bound_M and
    used only to reproduce those tables.
    """
    if p > 1.0:
        return bound_M(x, y, p)
    x, y, rx, ry, d = _pair(x, y)
    _require_nonzero(rx)
    _require_nonzero(ry)
    return _scalar((2.0 - p) * d / np.maximum(rx, ry) ** (1.0 - p))


def bound_D(x, y, p: float):
    """Dragomir's refinement, all three exponent ranges."""
    x, y, rx, ry, d = _pair(x, y)
    _require_nonzero(rx)
    _require_nonzero(ry)
    lo = np.minimum(rx, ry)
    if p > 1.0:
        out = d * np.maximum(rx, ry) ** (p - 1.0) + np.abs(rx ** (p - 1.0) - ry ** (p - 1.0)) * lo
    elif p >= 0.0:
        weight = np.minimum(rx**p / ry ** (1.0 - p), ry**p / rx ** (1.0 - p))
        out = d / lo ** (1.0 - p) + np.abs(rx ** (1.0 - p) - ry ** (1.0 - p)) * weight
    else:
        denom = np.maximum(rx ** (-p) * ry ** (1.0 - p), ry ** (-p) * rx ** (1.0 - p))
        out = d / lo ** (1.0 - p) + np.abs(rx ** (1.0 - p) - ry ** (1.0 - p)) / denom
    return _scalar(out)


def bound_B(x, y, p: float):
    """Byström's bound ``2^(1-p) |x - y|^p``; equality at y = -x."""
    _need_unit_interval(p, "bound_B")
    _, _, _, _, d = _pair(x, y)
    return _scalar(2.0 ** (1.0 - p) * d**p)


def bound_K(x, y, p: float):
    """``2/(3^p - 1) |A(u) - A(z)|`` with ``A = A_{p,1/p}``, u the point of smaller norm
    and z its radial projection towards the other point.

    The pair is swapped internally when ``|x| > |y|``.
    """
    _need_unit_interval(p, "bound_K")
    x, y, rx, ry, _ = _pair(x, y)
    _require_nonzero(rx)
    _require_nonzero(ry)
    if np.any(np.all(x == y, axis=-1)):
        raise DomainError("bound_K is undefined for coincident points")
    swap = (rx > ry)[..., None]
    first = np.where(swap, y, x)
    second = np.where(swap, x, y)
    e = RadialExponents(p, 1.0 / p)
    z = radial_projection(first, second)
    return _scalar(sharp_constant(p) * _norm(radial_map(first, e) - radial_map(z, e)))


@dataclass(frozen=True)
class BoundSet:
    """The four bounds for one pair; B and K are None when undefined."""

    M: float
    D: float
    B: float | None = None
    K: float | None = None

    def defined(self) -> dict[str, float]:
        return {s: v for s in BOUND_SYMBOLS if (v := getattr(self, s)) is not None}

    @property
    def minimal(self) -> frozenset[str]:
        """Symbols attaining the minimum, ties within TIE_TOL included."""
        vals = self.defined()
        best = min(vals.values())
        return frozenset(s for s, v in vals.items() if v - best <= TIE_TOL)


def all_bounds(x, y, p: float) -> BoundSet:
    x = as_points(x)
    y = as_points(y)
    if x.ndim != 1 or y.ndim != 1:
        raise DomainError("all_bounds takes a single pair of vectors")
    b = k = None
    if 0.0 < p < 1.0:
        b = bound_B(x, y, p)
        if not np.array_equal(x, y):
            k = bound_K(x, y, p)
    return BoundSet(M=bound_M(x, y, p), D=bound_D(x, y, p), B=b, K=k)


def _ratio(x, y):
    x, y, rx, ry, d = _pair(x, y)
    _require_nonzero(rx)
    _require_nonzero(ry)
    return x, rx, ry, d / (rx * ry)


def _inside_ball(*radii):
    for r in radii:
        if np.any(r >= 1.0):
            raise DomainError("points must lie in the open unit ball")


def bound_2j(x, y, K: float, check_domain: bool = True):
    """``2^(1-1/K) (|x - y| / (|x||y|))^(1/K)`` for x, y outside the open unit ball.

    ``check_domain=False`` evaluates the expression for any nonzero pair, which
    the comparison tables need (one of their sample points has norm below 1).
    """
    K = _check_K(K)
    _, rx, ry, q = _ratio(x, y)
    if check_domain and (np.any(rx < 1.0) or np.any(ry < 1.0)):
        raise DomainError("bound_2j requires |x| >= 1 and |y| >= 1")
    return _scalar(2.0 ** (1.0 - 1.0 / K) * q ** (1.0 / K))


def _qc_exponents(K: float, n: int):
    if n < 2:
        raise DomainError("dimension must be at least 2")
    alpha = K ** (1.0 / (1.0 - n))
    return alpha, 1.0 / alpha


def bound_2k(x, y, K: float, n: int | None = None):
    """``c(K) / |x|^(b-a) max(q^a, q^b)`` with ``q = |x - y|/(|x||y|)``, ``a = K^(1/(1-n)) = 1/b``."""
    K = _check_K(K)
    x, rx, ry, q = _ratio(x, y)
    _inside_ball(rx, ry)
    alpha, beta = _qc_exponents(K, x.shape[-1] if n is None else n)
    return _scalar(c_qc(K) / rx ** (beta - alpha) * np.maximum(q**alpha, q**beta))


def bound_2kk(x, y, K: float):
    """``exp(pi(K - 1/K)) / |x|^(K-1/K) max(q^(1/K), q^K)`` for planar x, y in the unit disk."""
    K = _check_K(K)
    x, rx, ry, q = _ratio(x, y)
    if x.shape[-1] != 2:
        raise DomainError("bound_2kk is planar")
    _inside_ball(rx, ry)
    return _scalar(lambda_bound(K) / rx ** (K - 1.0 / K) * np.maximum(q ** (1.0 / K), q**K))


def j_quasi_bound(x, y, K: float):
    """``2^(1-1/K) max(j, j^(1/K))`` for x, y in the punctured unit ball."""
    K = _check_K(K)
    x, y, rx, ry, _ = _pair(x, y)
    _inside_ball(rx, ry)
    j = np.asarray(j_metric(x, y))
    return _scalar(2.0 ** (1.0 - 1.0 / K) * np.maximum(j, j ** (1.0 / K)))


def hyp_growth_bound(z, K: float):
    """``K max(rho(0,|z|), rho(0,|z|)^(1/K))`` bounding ``rho(0, A_{1/K,K}(z))``."""
    K = _check_K(K)
    r = _norm(as_points(z))
    _require_nonzero(r)
    _inside_ball(r)
    h = np.asarray(rho0(r))
    return _scalar(K * np.maximum(h, h ** (1.0 / K)))


def distortion_rhs(r, K: float):
    """``c3(K) max(rho(0,r), rho(0,r)^(1/K))``, bounding ``2 arth(p(r))``."""
    r = np.asarray(r, dtype=float)
    if np.any(~(r > 0.0)) or np.any(~(r < 1.0)):
        raise DomainError("distortion_rhs requires 0 < r < 1")
    K = _check_K(K)
    h = np.asarray(rho0(r))
    return _scalar(c3(K) * np.maximum(h, h ** (1.0 / K)))


def _outside_ball(rx, ry):
    if np.any(rx <= 1.0) or np.any(ry <= 1.0):
        raise DomainError("points must lie outside the closed unit ball")


def eta_bound_plane(x, y, K: float):
    """``exp(pi(K - 1/K)) |x|^(K-1/K) max(|x-y|^(1/K), |x-y|^K)`` for planar |x|, |y| > 1."""
    K = _check_K(K)
    x, y, rx, ry, d = _pair(x, y)
    if x.shape[-1] != 2:
        raise DomainError("eta_bound_plane is planar")
    _outside_ball(rx, ry)
    return _scalar(lambda_bound(K) * rx ** (K - 1.0 / K) * np.maximum(d ** (1.0 / K), d**K))


def eta_bound_nd(x, y, K: float, n: int | None = None):
    """``c(K) |x|^(b-a) max(|x-y|^a, |x-y|^b)`` for |x|, |y| > 1, ``a = K^(1/(1-n)) = 1/b``."""
    K = _check_K(K)
    x, y, rx, ry, d = _pair(x, y)
    _outside_ball(rx, ry)
    alpha, beta = _qc_exponents(K, x.shape[-1] if n is None else n)
    return _scalar(c_qc(K) * rx ** (beta - alpha) * np.maximum(d**alpha, d**beta))


def corollary_exponents(K: float, n: int) -> dict[str, float]:
    """p_angular exponents of the left-hand sides of the exterior/interior lemmas."""
    alpha, beta = _qc_exponents(K, n)
    return {"2j": -1.0 / K, "2k": -beta, "2kk": -K, "2ii": K, "2iii": beta, "alpha": alpha}

