"""The check registry.

Each check is a function ``(n, sampler, tol) -> list[Evaluation]``. Grid checks
lay out ``n`` points along the swept parameter for every fixed value of the
outer parameters, two-dimensional grids use ``ceil(sqrt(n))**2`` points, and
random checks draw ``n`` samples. Excesses are normalised so that a positive
value is a violation.
"""

from __future__ import annotations

import math
from typing import Callable

import numpy as np

from radialqc.bounds import (
    bound_2j,
    bound_2k,
    bound_2kk,
    bound_B,
    bound_D,
    bound_K,
    bound_M,
    corollary_exponents,
    distortion_rhs,
    eta_bound_nd,
    eta_bound_plane,
    hyp_growth_bound,
    j_quasi_bound,
    sharp_constant,
)
from radialqc.geometry import RadialExponents, inversion, radial_map, radial_projection
from radialqc.metrics import j_metric, p_angular, q_ratio, rho0
from radialqc.special import CONSTANTS, T0, arcosh, artanh_sech, c3, low_accuracy, minorant_p, phi, phi_complement
from radialqc.verify.report import CheckSpec, Evaluation
from radialqc.verify.sampling import Sampler

REGISTRY: dict[str, CheckSpec] = {}

MONO_SLACK = 1e-12
LIMIT_OFFSET = 1e-8
LIMIT_TOL = 1e-6

# fixed evaluation points for the one-parameter families
T_VALUES = (0.01, 0.1, 0.3, T0, 0.7, 0.9, 0.99)
P_VALUES = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9)
DIST_K = (1.1, 1.5, 2.0, 5.0, 10.0)


def check(name: str, kind: str, claim: str, domain: str, tolerance: float):
    def register(func: Callable) -> Callable:
        if name in REGISTRY:
            raise ValueError(f"duplicate check name {name!r}")
        REGISTRY[name] = CheckSpec(name, kind, claim, domain, tolerance, func)
        return func

    return register


# -- helpers -----------------------------------------------------------------


def side(n: int) -> int:
    return max(1, math.isqrt(n - 1) + 1) if n > 1 else 1


def lingrid(lo: float, hi: float, n: int) -> np.ndarray:
    return np.linspace(lo, hi, n) if n > 1 else np.array([lo])


def geomgrid(lo: float, hi: float, n: int) -> np.ndarray:
    return np.geomspace(lo, hi, n) if n > 1 else np.array([lo])


def opengrid(lo: float, hi: float, n: int) -> np.ndarray:
    """Cell midpoints, so neither endpoint of (lo, hi) is hit."""
    return lo + (hi - lo) * (np.arange(n) + 0.5) / n


def mesh(u: np.ndarray, v: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    uu, vv = np.meshgrid(u, v, indexing="ij")
    return uu.ravel(), vv.ravel()


def _bcast(params: dict, shape) -> dict:
    return {k: np.broadcast_to(np.asarray(v, dtype=float), shape) for k, v in params.items()}


def leq(lhs, rhs, tol: float, relative: bool = True, strict: bool = False, flags=(), **params) -> Evaluation:
    """Evaluation of ``lhs <= rhs`` (``lhs < rhs`` when strict)."""
    lhs = np.asarray(lhs, dtype=float)
    rhs = np.asarray(rhs, dtype=float)
    scale = np.maximum(1.0, np.abs(rhs)) if relative else 1.0
    with np.errstate(invalid="ignore"):
        excess = (lhs - rhs) / scale - tol
    if strict:
        # equality must count as a violation of a strict inequality
        excess = np.nextafter(excess, np.inf)
    excess = np.asarray(excess, dtype=float)
    return Evaluation(excess, _bcast(params, excess.shape), tuple(flags))


def near(actual, expected, tol: float, relative: bool = False, **params) -> Evaluation:
    actual = np.asarray(actual, dtype=float)
    expected = np.asarray(expected, dtype=float)
    scale = np.maximum(1.0, np.abs(expected)) if relative else 1.0
    excess = np.asarray(np.abs(actual - expected) / scale - tol, dtype=float)
    return Evaluation(excess, _bcast(params, excess.shape))


def monotone(values, increasing: bool, tol: float = MONO_SLACK, **params) -> Evaluation:
    """Strict monotonicity along the last axis, comparing consecutive values.

    ``params`` are broadcast to the shape of ``values``; the witness is the
    later point of the offending pair.
    """
    v = np.asarray(values, dtype=float)
    diff = v[..., 1:] - v[..., :-1]
    if increasing:
        diff = -diff
    scale = np.maximum(1.0, np.abs(v[..., 1:]))
    excess = np.nextafter(diff / scale - tol, np.inf)
    full = _bcast(params, v.shape)
    return Evaluation(excess, {k: p[..., 1:] for k, p in full.items()})


def pairs_ordered(x: np.ndarray, y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    swap = (np.linalg.norm(x, axis=1) > np.linalg.norm(y, axis=1))[:, None]
    return np.where(swap, y, x), np.where(swap, x, y)


def coords(prefix: str, pts: np.ndarray) -> dict:
    return {f"{prefix}{i}": pts[:, i] for i in range(pts.shape[1])}


def mixed_box(s: Sampler, key: str, n: int, dim: int, half_widths=(3.0, 1.0)) -> np.ndarray:
    """Uniform points in a box chosen per sample from ``[-w, w]^dim`` for w in half_widths."""
    w = s.choice(key + ".w", n, half_widths)
    return s.box(key, n, dim, -1.0, 1.0) * w[:, None]


def rho_pow(h: np.ndarray, K) -> np.ndarray:
    return np.maximum(h, h ** (1.0 / np.asarray(K)))


def two_artanh_root(t: np.ndarray, K) -> np.ndarray:
    """``2 artanh(t^(1/K))`` without losing the gap ``1 - t^(1/K)``."""
    with np.errstate(divide="ignore"):
        lt = np.log(t) / K
    gap = -np.expm1(lt)
    with np.errstate(divide="ignore"):
        return np.log(2.0 - gap) - np.log(gap)


def exp_f(r, K):
    u = np.asarray(arcosh(1.0 / r)) / K
    return r * np.asarray(artanh_sech(u)) * np.sinh(u)


def lemma_2ll_f(t, K):
    L = np.log(1.0 / t)
    return (K - L) / (np.exp(2.0 * np.log(t) / K) * (K + L))


def lemma_2ll_g(K):
    lt0 = math.log(T0)
    return np.exp(lt0 / K) * (-2.0 * lt0) / (K * -np.expm1(2.0 * lt0 / K))


# -- Lemma (2C) ---------------------------------------------------------------


def _f2c(x):
    return (1.0 + x) * np.log1p(x) / x


def _g2c(x):
    return x / np.log1p(x)


@check("lemma-2c-f", "monotonicity", "(1+x)log(1+x)/x is strictly increasing on (0,inf) with limit 1 at 0",
       "geometric grid x in [1e-6, 1e6]; limit at x = 1e-8", MONO_SLACK)
def _(n, s, tol):
    x = geomgrid(1e-6, 1e6, n)
    f = _f2c(x)
    return [
        monotone(f, True, tol, x=x),
        leq(1.0, f, 0.0, relative=False, strict=True, x=x),
        near(_f2c(LIMIT_OFFSET), 1.0, LIMIT_TOL, x=LIMIT_OFFSET),
    ]


@check("lemma-2c-g", "monotonicity", "x/log(1+x) is strictly increasing on (0,inf) with limit 1 at 0",
       "geometric grid x in [1e-6, 1e6]; limit at x = 1e-8", MONO_SLACK)
def _(n, s, tol):
    x = geomgrid(1e-6, 1e6, n)
    g = _g2c(x)
    return [
        monotone(g, True, tol, x=x),
        leq(1.0, g, 0.0, relative=False, strict=True, x=x),
        near(_g2c(LIMIT_OFFSET), 1.0, LIMIT_TOL, x=LIMIT_OFFSET),
    ]


@check("lemma-2c-h", "monotonicity", "K(1 - t^(2/K)) is increasing in K >= 1 for fixed t in (0,1)",
       "t in fixed list, geometric grid K in [1, 1e3]", MONO_SLACK)
def _(n, s, tol):
    t = np.array(T_VALUES)[:, None]
    K = geomgrid(1.0, 1e3, n)[None, :]
    h = K * -np.expm1(2.0 * np.log(t) / K)
    return [monotone(h, True, tol, t=t, K=K)]


# -- Corollary (2e) -----------------------------------------------------------


@check("cor-2e-f", "monotonicity", "a -> (1+ax)^(1/a) is decreasing on (1,inf) for x in (0,1)",
       "x in fixed list, geometric grid a in [1+1e-6, 100]", MONO_SLACK)
def _(n, s, tol):
    x = np.array(T_VALUES)[:, None]
    a = geomgrid(1.0 + 1e-6, 100.0, n)[None, :]
    return [monotone(np.exp(np.log1p(a * x) / a), False, tol, x=x, a=a)]


@check("cor-2e-g", "monotonicity", "a -> log(1+x^a)^(1/a) is increasing on (1,inf) for x in (0,1)",
       "x in fixed list, geometric grid a in [1+1e-6, 100]", MONO_SLACK)
def _(n, s, tol):
    x = np.array(T_VALUES)[:, None]
    a = geomgrid(1.0 + 1e-6, 100.0, n)[None, :]
    return [monotone(np.exp(np.log(np.log1p(np.exp(a * np.log(x)))) / a), True, tol, x=x, a=a)]


@check("cor-2e-log", "inequality", "log(1+x^a) <= max(log(1+x), log(1+x)^a) for x >= 0, a in [0,1]",
       "uniform a in [0,1], x uniform in [0,2] or [0,100]", 1e-12)
def _(n, s, tol):
    a = s.uniform("a", n)
    x = s.uniform("x", n) * s.choice("xw", n, (2.0, 100.0))
    L = np.log1p(x)
    return [leq(np.log1p(x**a), np.maximum(L, L**a), tol, x=x, a=a)]


# -- Lemma (2e0) --------------------------------------------------------------


@check("lemma-2e0-f", "monotonicity", "r artanh(1/ch u) sh u with u = arch(1/r)/K is strictly decreasing in K",
       "r in fixed list, geometric grid K in [1+1e-6, 50]", MONO_SLACK)
def _(n, s, tol):
    r = np.array(T_VALUES)[:, None]
    K = geomgrid(1.0 + 1e-6, 50.0, n)[None, :]
    return [monotone(exp_f(r, K), False, tol, r=r, K=K)]


@check("lemma-2e0-g", "monotonicity", "K r artanh(1/ch u) sh u with u = arch(1/r)/K is strictly increasing in K",
       "r in fixed list, geometric grid K in [1+1e-6, 50]", MONO_SLACK)
def _(n, s, tol):
    r = np.array(T_VALUES)[:, None]
    K = geomgrid(1.0 + 1e-6, 50.0, n)[None, :]
    return [monotone(K * exp_f(r, K), True, tol, r=r, K=K)]


@check("lemma-2e0-limit", "limit", "both functions of K tend to sqrt(1-r^2) artanh(r) as K -> 1+",
       "grid r in [0.01, 0.99], K = 1 + 1e-8", LIMIT_TOL)
def _(n, s, tol):
    r = lingrid(0.01, 0.99, n)
    K = 1.0 + LIMIT_OFFSET
    target = np.sqrt((1.0 - r) * (1.0 + r)) * 0.5 * (np.log1p(r) - np.log1p(-r))
    f = exp_f(r, K)
    return [near(f, target, tol, r=r), near(K * f, target, tol, r=r)]


# -- Lemma (2ll) --------------------------------------------------------------


@check("lemma-2ll-f", "monotonicity",
       "(K - log(1/t))/(t^(2/K)(K + log(1/t))) is increasing in K; at t0 its range is (m1, 1), m1 ~ 0.6027",
       "t in fixed list, geometric grid K in [1, 1e4]; limits at K = 1+1e-8 and K = 1e8", MONO_SLACK)
def _(n, s, tol):
    t = np.array(T_VALUES)[:, None]
    K = geomgrid(1.0, 1e4, n)[None, :]
    f0 = lemma_2ll_f(T0, K[0])
    m1 = CONSTANTS.m1
    return [
        monotone(lemma_2ll_f(t, K), True, tol, t=t, K=K),
        leq(f0, 1.0, 0.0, relative=False, strict=True, K=K[0]),
        leq(m1, f0, MONO_SLACK, relative=False, K=K[0]),
        near(lemma_2ll_f(T0, 1.0 + LIMIT_OFFSET), m1, LIMIT_TOL, K=1.0 + LIMIT_OFFSET),
        near(lemma_2ll_f(T0, 1.0 / LIMIT_OFFSET), 1.0, LIMIT_TOL, K=1.0 / LIMIT_OFFSET),
        near(m1, 0.6027, 5e-4),
    ]


@check("lemma-2ll-g", "monotonicity",
       "t0^(1/K) log(1/t0^2)/(K(1 - t0^(2/K))) is increasing in K with range (m2, 1), m2 ~ 0.9072",
       "geometric grid K in [1, 1e4]; limits at K = 1+1e-8 and K = 1e8", MONO_SLACK)
def _(n, s, tol):
    K = geomgrid(1.0, 1e4, n)
    g = lemma_2ll_g(K)
    m2 = CONSTANTS.m2
    return [
        monotone(g, True, tol, K=K),
        leq(g, 1.0, 0.0, relative=False, strict=True, K=K),
        leq(m2, g, MONO_SLACK, relative=False, K=K),
        near(lemma_2ll_g(1.0 + LIMIT_OFFSET), m2, LIMIT_TOL, K=1.0 + LIMIT_OFFSET),
        near(lemma_2ll_g(1.0 / LIMIT_OFFSET), 1.0, LIMIT_TOL, K=1.0 / LIMIT_OFFSET),
        near(m2, 0.9072, 5e-4),
    ]


# -- inequalities (1c), (1a), (1ccc) ------------------------------------------


@check("ineq-1c", "inequality", "2 artanh(t^(1/K)) <= 2K artanh(t) for K >= 1 and t in [t0, 1)",
       "grid t in [t0, 1-1e-6] x K in [1, 50]", 1e-12)
def _(n, s, tol):
    m = side(n)
    t, K = mesh(lingrid(T0, 1.0 - 1e-6, m), lingrid(1.0, 50.0, m))
    rhs = K * (np.log1p(t) - np.log1p(-t))
    return [leq(two_artanh_root(t, K), rhs, tol, t=t, K=K)]


@check("ineq-1a", "inequality", "2 artanh(t^(1/K)) <= K (2 artanh t)^(1/K) for K >= 1 and t in (0, t0]",
       "grid t geometric in [1e-12, t0] x K in [1, 50]", 1e-12)
def _(n, s, tol):
    m = side(n)
    t, K = mesh(geomgrid(1e-12, T0, m), lingrid(1.0, 50.0, m))
    rhs = K * (np.log1p(t) - np.log1p(-t)) ** (1.0 / K)
    return [leq(two_artanh_root(t, K), rhs, tol, t=t, K=K)]


@check("ineq-1ccc", "inequality", "2 artanh(t^(1/K)) <= K max(2 artanh t, (2 artanh t)^(1/K)) for K >= 1, t in [0, 1)",
       "grid t in [0, 1-1e-6] x K in [1, 50]", 1e-12)
def _(n, s, tol):
    m = side(n)
    t, K = mesh(lingrid(0.0, 1.0 - 1e-6, m), lingrid(1.0, 50.0, m))
    h = np.log1p(t) - np.log1p(-t)
    return [leq(two_artanh_root(t, K), K * rho_pow(h, K), tol, t=t, K=K)]


# -- hyperbolic growth --------------------------------------------------------


@check("thm-1dd", "inequality", "rho(0, A_{1/K,K}(z)) <= K max(rho(0,|z|), rho(0,|z|)^(1/K)) in the unit disk",
       "grid K in [1, 10] x |z| in (0, 1) midpoints, random planar directions", 1e-12)
def _(n, s, tol):
    m = side(n)
    K, r = mesh(lingrid(1.0, 10.0, m), opengrid(0.0, 1.0, m))
    z = s.directions("dir", K.size, 2) * r[:, None]
    img = radial_map(z, RadialExponents(1.0 / K, K))
    lhs = rho0(np.linalg.norm(img, axis=1))
    return [leq(lhs, hyp_growth_bound(z, K), tol, K=K, r=r)]


def _remark_f(K):
    return 1.0 - two_artanh_root(T0, K) / K**0.9


@check("thm-1dd-remark", "inequality",
       "with K^(9/10) in place of K the growth bound fails at |z| = t0 near K = 1.005, where f'(K) ~ -0.004",
       "central difference of 1 - 2 artanh(t0^(1/K))/K^0.9 at K = 1.005, step 1e-6", 1e-3)
def _(n, s, tol):
    K, h = 1.005, 1e-6
    fprime = (_remark_f(K + h) - _remark_f(K - h)) / (2.0 * h)
    return [
        leq(fprime, 0.0, 0.0, relative=False, strict=True, K=K, fprime=fprime),
        leq(_remark_f(K), 0.0, 0.0, relative=False, strict=True, K=K, fprime=fprime),
        near(fprime, -0.004, tol, K=K, fprime=fprime),
    ]


def _unimodal_F(r, K):
    h = np.log1p(r) - np.log1p(-r)
    return 2.0 * np.asarray(artanh_sech(np.asarray(arcosh(1.0 / r)) / K)) / np.maximum(h, h ** (1.0 / K))


@check("lemma-1d-unimodal", "unimodality",
       "2 artanh(p(r)) / max(rho(0,r), rho(0,r)^(1/K)) increases on (0,t0) and decreases on (t0,1) for K > 1",
       "K in {1.1, 1.5, 2, 5, 10, 50}, midpoint grid r in (0,1) plus t0", MONO_SLACK)
def _(n, s, tol):
    r = np.unique(np.append(opengrid(0.0, 1.0, n), T0))
    k0 = int(np.searchsorted(r, T0))
    out = []
    for K in (1.1, 1.5, 2.0, 5.0, 10.0, 50.0):
        F = _unimodal_F(r, K)
        out.append(monotone(F[: k0 + 1], True, tol, r=r[: k0 + 1], K=K))
        out.append(monotone(F[k0:], False, tol, r=r[k0:], K=K))
        peak = r[int(np.argmax(F))]
        spacing = 1.0 / n
        out.append(near(peak, T0, spacing, r=peak, K=K))
    return out


@check("thm-1ddd", "inequality", "2 artanh(p(r)) <= c3(K) max(rho(0,r), rho(0,r)^(1/K)), with c3(K) -> 1 as K -> 1",
       "grid K in [1, 10] x r in (0,1) midpoints; limit at K = 1+1e-8", 1e-12)
def _(n, s, tol):
    m = side(n)
    K, r = mesh(lingrid(1.0, 10.0, m), opengrid(0.0, 1.0, m))
    lhs = 2.0 * np.asarray(artanh_sech(np.asarray(arcosh(1.0 / r)) / K))
    return [
        leq(lhs, distortion_rhs(r, K), tol, K=K, r=r),
        near(c3(1.0 + LIMIT_OFFSET), 1.0, LIMIT_TOL, K=1.0 + LIMIT_OFFSET),
        near(c3(1.0), 1.0, 1e-12, K=1.0),
    ]


@check("phi-schwarz-growth", "inequality", "rho(0, phi_K(r)) > K rho(0, r) for K > 1",
       "K in {1.1, 1.5, 2, 5, 10}, midpoint grid r in (0,1)", 0.0)
def _(n, s, tol):
    K, r = mesh(np.array(DIST_K), opengrid(0.0, 1.0, n))
    ph = np.asarray(phi(K, r))
    comp = np.asarray(phi_complement(K, r))
    # (1 + s)/(1 - s) = (1 + s)^2 / (1 - s^2)
    lhs = 2.0 * (np.log1p(ph) - np.log(comp))
    flags = ("low-accuracy",) if np.any(low_accuracy(r)) else ()
    return [leq(K * rho0(r), lhs, tol, strict=True, flags=flags, K=K, r=r)]


@check("phi-minorant", "inequality", "1/ch(arch(1/r)/K) <= phi_K(r)",
       "K in {1.1, 1.5, 2, 5, 10}, midpoint grid r in (0,1)", 1e-12)
def _(n, s, tol):
    K, r = mesh(np.array(DIST_K), opengrid(0.0, 1.0, n))
    ph = np.asarray(phi(K, r))
    flags = ("low-accuracy",) if np.any(low_accuracy(ph)) else ()
    return [leq(minorant_p(K, r), ph, tol, relative=False, flags=flags, K=K, r=r)]


# -- distance-ratio metric ----------------------------------------------------


@check("ineq-2i", "inequality",
       "log(1 + |A(x)-A(y)|/min|A|) <= 2^(1-1/K) max(log(t)^(1/K), log t), t = 1 + |x-y|/min(|x|,|y|), A = A_{1/K,K}",
       "uniform x, y in the punctured unit ball of R^3, K uniform in [1, 10]", 1e-12)
def _(n, s, tol):
    x = s.shell("x", n, 3, 0.0, 1.0)
    y = s.shell("y", n, 3, 0.0, 1.0)
    K = s.uniform("K", n, 1.0, 10.0)
    e = RadialExponents(1.0 / K, K)
    ax, ay = radial_map(x, e), radial_map(y, e)
    mins = np.minimum(np.linalg.norm(x, axis=1), np.linalg.norm(y, axis=1))
    mina = np.minimum(np.linalg.norm(ax, axis=1), np.linalg.norm(ay, axis=1))
    lhs = np.log1p(np.linalg.norm(ax - ay, axis=1) / mina)
    lt = np.log1p(np.linalg.norm(x - y, axis=1) / mins)
    return [leq(lhs, 2.0 ** (1.0 - 1.0 / K) * rho_pow(lt, K), tol, K=K, **coords("x", x), **coords("y", y))]


@check("cor-jandmyf", "inequality", "j(A_{1/K,K}(x), A_{1/K,K}(y)) <= 2^(1-1/K) max(j(x,y), j(x,y)^(1/K))",
       "uniform x, y in the punctured unit ball of R^3, K in {1, 1.5, 2, 5}", 1e-12)
def _(n, s, tol):
    x = s.shell("x", n, 3, 0.0, 1.0)
    y = s.shell("y", n, 3, 0.0, 1.0)
    K = s.choice("K", n, (1.0, 1.5, 2.0, 5.0))
    e = RadialExponents(1.0 / K, K)
    lhs = j_metric(radial_map(x, e), radial_map(y, e))
    return [leq(lhs, j_quasi_bound(x, y, K), tol, K=K, **coords("x", x), **coords("y", y))]


# -- inversion and the radial projection ---------------------------------------


@check("lemma-sandwich", "inequality",
       "for an inversion h and z the radial projection, |h(x)-h(z)| <= |h(x)-h(y)| <= 3|h(x)-h(z)|, equality on the right at y = -x",
       "uniform planar x, y in [-3,3]^2 ordered |x| <= |y|, inversion radius uniform in [0.5, 2]", 1e-12)
def _(n, s, tol):
    x, y = pairs_ordered(s.box("x", n, 2, -3.0, 3.0), s.box("y", n, 2, -3.0, 3.0))
    rad = s.uniform("radius", n, 0.5, 2.0)
    zero = np.zeros_like(x)
    hx = inversion(x, zero, rad)
    hy = inversion(y, zero, rad)
    hz = inversion(radial_projection(x, y), zero, rad)
    dxy = np.linalg.norm(hx - hy, axis=1)
    dxz = np.linalg.norm(hx - hz, axis=1)
    hm = inversion(-x, zero, rad)
    hzm = inversion(radial_projection(x, -x), zero, rad)
    dm = np.linalg.norm(hx - hm, axis=1)
    dzm = np.linalg.norm(hx - hzm, axis=1)
    params = dict(radius=rad, **coords("x", x), **coords("y", y))
    return [
        leq(dxz, dxy, tol, **params),
        leq(dxy, 3.0 * dxz, tol, **params),
        near(dm, 3.0 * dzm, tol, relative=True, radius=rad, **coords("x", x)),
    ]


# -- exterior and interior estimates -------------------------------------------


def _exterior(s: Sampler, key: str, n: int, dim: int) -> np.ndarray:
    # radii in (1, 10]: the lemmas need points outside the closed unit ball
    r = 10.0 - 9.0 * s.uniform(key + ".radius", n)
    return s.directions(key + ".dir", n, dim) * r[:, None]


def _interior(s: Sampler, key: str, n: int, dim: int) -> np.ndarray:
    r = 1.0 - s.uniform(key + ".radius", n)
    return s.directions(key + ".dir", n, dim) * r[:, None] * (1.0 - 1e-12)


@check("lemma-2ii", "inequality",
       "||x|^(K-1)x - |y|^(K-1)y| <= exp(pi(K-1/K)) |x|^(K-1/K) max(|x-y|^(1/K), |x-y|^K) for planar |x|, |y| > 1",
       "radius uniform in (1, 10], uniform directions, K uniform in [1, 5]", 1e-12)
def _(n, s, tol):
    x, y = _exterior(s, "x", n, 2), _exterior(s, "y", n, 2)
    K = s.uniform("K", n, 1.0, 5.0)
    return [leq(p_angular(x, y, K), eta_bound_plane(x, y, K), tol, K=K, **coords("x", x), **coords("y", y))]


@check("lemma-2iii", "inequality",
       "||x|^(b-1)x - |y|^(b-1)y| <= c(K) |x|^(b-a) max(|x-y|^a, |x-y|^b) for |x|, |y| > 1 in R^3, a = 1/b = K^(-1/2)",
       "radius uniform in (1, 10], uniform directions in R^3, K uniform in [1, 5]", 1e-12)
def _(n, s, tol):
    x, y = _exterior(s, "x", n, 3), _exterior(s, "y", n, 3)
    K = s.uniform("K", n, 1.0, 5.0)
    beta = corollary_exponents(K, 3)["2iii"]
    return [leq(p_angular(x, y, beta), eta_bound_nd(x, y, K), tol, K=K, **coords("x", x), **coords("y", y))]


@check("cor-2j", "inequality",
       "the p-angular distance with p = -1/K is at most 2^(1-1/K) (|x-y|/(|x||y|))^(1/K) for |x|, |y| >= 1",
       "radius uniform in (1, 10], uniform directions in R^3, K uniform in [1, 10]", 1e-12)
def _(n, s, tol):
    x, y = _exterior(s, "x", n, 3), _exterior(s, "y", n, 3)
    K = s.uniform("K", n, 1.0, 10.0)
    lhs = p_angular(x, y, corollary_exponents(K, 3)["2j"])
    return [leq(lhs, bound_2j(x, y, K), tol, K=K, **coords("x", x), **coords("y", y))]


@check("cor-2k", "inequality",
       "the p-angular distance with p = -b is at most c(K)/|x|^(b-a) max(q^a, q^b), q = |x-y|/(|x||y|), in the unit ball of R^3",
       "radius uniform in (0, 1), uniform directions in R^3, K uniform in [1, 5]", 1e-12)
def _(n, s, tol):
    x, y = _interior(s, "x", n, 3), _interior(s, "y", n, 3)
    K = s.uniform("K", n, 1.0, 5.0)
    lhs = p_angular(x, y, corollary_exponents(K, 3)["2k"])
    return [leq(lhs, bound_2k(x, y, K), tol, K=K, **coords("x", x), **coords("y", y))]


@check("cor-2kk", "inequality",
       "the p-angular distance with p = -K is at most exp(pi(K-1/K))/|x|^(K-1/K) max(q^(1/K), q^K) in the unit disk",
       "radius uniform in (0, 1), uniform planar directions, K uniform in [1, 5]", 1e-12)
def _(n, s, tol):
    x, y = _interior(s, "x", n, 2), _interior(s, "y", n, 2)
    K = s.uniform("K", n, 1.0, 5.0)
    lhs = p_angular(x, y, corollary_exponents(K, 2)["2kk"])
    return [leq(lhs, bound_2kk(x, y, K), tol, K=K, **coords("x", x), **coords("y", y))]


# -- the sharp constant --------------------------------------------------------


def _lemma_le(p, a, s):
    pa = np.exp(a * np.log(p))
    sin2 = np.sin(0.5 * s) ** 2
    # both radicands written as squares plus a nonnegative term to avoid cancellation
    num = np.sqrt(np.expm1(a * np.log(p)) ** 2 + 4.0 * pa * sin2)
    X = np.sqrt((p - 1.0) ** 2 + 4.0 * p * sin2)
    return num / np.expm1(a * np.log1p(X)), (1.0 + pa) / np.expm1(a * np.log(2.0 + p))


@check("lemma-le", "inequality",
       "sqrt(1 + p^2a - 2p^a cos s)/((1+X)^a - 1) <= (1+p^a)/((2+p)^a - 1), X = sqrt(1 + p^2 - 2p cos s), equality at s = pi",
       "p log-uniform in [1, 100], a uniform in (1e-3, 1], s uniform in [0, 2 pi]", 1e-10)
def _(n, s, tol):
    p = np.exp(s.uniform("p", n, 0.0, math.log(100.0)))
    a = 1.0 - s.uniform("a", n, 0.0, 1.0 - 1e-3)
    ang = s.uniform("s", n, 0.0, 2.0 * math.pi)
    lhs, rhs = _lemma_le(p, a, ang)
    lpi, rpi = _lemma_le(p, a, math.pi)
    return [leq(lhs, rhs, tol, p=p, a=a, s=ang), near(lpi, rpi, tol, relative=True, p=p, a=a)]


@check("lemma-ve", "inequality", "(1+p^d)/((2+p)^d - 1) <= 2/(3^d - 1) for p >= 1, d in (0,1], equality at p = 1",
       "d in fixed list, geometric grid p in [1, 1e3] starting at p = 1", 0.0)
def _(n, s, tol):
    d = np.array([0.01, 0.05, 0.1, 0.25, 0.5, 0.75, 0.9, 0.99])[:, None]
    p = geomgrid(1.0, 1e3, n)[None, :]
    lhs = (1.0 + p**d) / np.expm1(d * np.log(2.0 + p))
    rhs = 2.0 / np.expm1(d * np.log(3.0))
    return [leq(lhs, rhs, tol, relative=False, p=p, d=d)]


def _kal_sample(s: Sampler, n: int):
    a = 1.0 - s.uniform("a", n, 0.0, 0.95)
    b = s.uniform("b", n, 1.0, 5.0)
    return a, b


@check("thm-kal-bound", "inequality",
       "Q(x,y) <= 2/(3^a - 1) for 0 < a <= 1 <= b and |x| <= |y|; Q <= 1 when 1 <= |x|",
       "planar x, y uniform in [-3,3]^2 or [-1,1]^2 ordered by norm, a ~ U(0.05,1], b ~ U[1,5]", 1e-9)
def _(n, s, tol):
    x, y = pairs_ordered(mixed_box(s, "x", n, 2), mixed_box(s, "y", n, 2))
    a, b = _kal_sample(s, n)
    q = q_ratio(x, y, RadialExponents(a, b))
    outer = np.linalg.norm(x, axis=1) >= 1.0
    params = dict(a=a, b=b, q=q, **coords("x", x), **coords("y", y))
    return [
        leq(q, sharp_constant(a), tol, relative=False, **params),
        leq(q[outer], 1.0, 1e-12, relative=False, **{k: v[outer] for k, v in params.items()}),
    ]


@check("thm-kal-sup", "equality-case", "Q(x,-x) = 2/(3^a - 1) when |x| < 1/3, so the constant is attained",
       "planar directions, |x| uniform in (0, 1/3), a ~ U(0.05,1], b ~ U[1,5]", 1e-12)
def _(n, s, tol):
    r = (1.0 - s.uniform("radius", n)) / 3.0 * (1.0 - 1e-12)
    x = s.directions("dir", n, 2) * r[:, None]
    a, b = _kal_sample(s, n)
    q = q_ratio(x, -x, RadialExponents(a, b))
    C = sharp_constant(a)
    return [near(q, C, tol, a=a, b=b, ratio=q / C, **coords("x", x)), leq(q / C, 1.0, tol, relative=False, ratio=q / C)]


# -- the bound quartet ---------------------------------------------------------


@check("thm-mymaj-chain", "inequality",
       "alpha_p(x,y) <= |A_{p,1/p}(x) - A_{p,1/p}(y)| <= 2/(3^p - 1) |A_{p,1/p}(x) - A_{p,1/p}(z)|",
       "planar x, y uniform in [-3,3]^2 or [-1,1]^2, p in {0.1, ..., 0.9}", 1e-9)
def _(n, s, tol):
    x, y = mixed_box(s, "x", n, 2), mixed_box(s, "y", n, 2)
    p = s.choice("p", n, P_VALUES)
    img = np.linalg.norm(radial_map(x, RadialExponents(p, 1.0 / p)) - radial_map(y, RadialExponents(p, 1.0 / p)), axis=1)
    alpha = p_angular(x, y, p)
    kb = np.empty(n)
    for pv in P_VALUES:
        m = p == pv
        if np.any(m):
            kb[m] = bound_K(x[m], y[m], pv)
    params = dict(p=p, **coords("x", x), **coords("y", y))
    return [leq(alpha, img, tol, **params), leq(img, kb, tol, **params)]


def _slack(value, bound, tol):
    return value - bound - tol * (1.0 + np.abs(bound))


@check("bounds-validity", "inequality",
       "alpha_p is at most each defined bound of the quartet (M and D for any p, B and K for p in (0,1))",
       "planar x, y uniform in [-3,3]^2 or [-1,1]^2, p in {0.1, ..., 0.9} or {-2, -0.6, 1.5, 3}", 1e-9)
def _(n, s, tol):
    x, y = mixed_box(s, "x", n, 2), mixed_box(s, "y", n, 2)
    outside = s.choice("pset", n, (0.0, 1.0)) > 0.5
    p = np.where(outside, s.choice("pout", n, (-2.0, -0.6, 1.5, 3.0)), s.choice("pin", n, P_VALUES))
    alpha = p_angular(x, y, p)
    out = []
    for pv in np.unique(p):
        m = p == pv
        xs, ys, al = x[m], y[m], alpha[m]
        funcs = [bound_M, bound_D] + ([bound_B, bound_K] if 0.0 < pv < 1.0 else [])
        for f in funcs:
            excess = _slack(al, np.asarray(f(xs, ys, pv)), tol)
            out.append(Evaluation(excess, dict(p=np.full(al.shape, pv), **coords("x", xs), **coords("y", ys))))
    return out


# -- metric and geometric identities -------------------------------------------


@check("alpha-triangle", "inequality", "the p-angular distance satisfies the triangle inequality",
       "x, y, z uniform in [-3,3]^3, p in {-1, 0, 0.5, 1, 2}", 1e-12)
def _(n, s, tol):
    x, y, z = (s.box(k, n, 3, -3.0, 3.0) for k in ("x", "y", "z"))
    p = s.choice("p", n, (-1.0, 0.0, 0.5, 1.0, 2.0))
    lhs = p_angular(x, z, p)
    return [leq(lhs, p_angular(x, y, p) + p_angular(y, z, p), tol, p=p, **coords("x", x), **coords("y", y))]


@check("alpha0-angle", "equality-case", "alpha_0(x,y) = 2 sin(w/2) with w the angle between x and y",
       "x, y uniform in [-3,3]^2", 1e-12)
def _(n, s, tol):
    x, y = s.box("x", n, 2, -3.0, 3.0), s.box("y", n, 2, -3.0, 3.0)
    w = np.abs(np.arctan2(x[:, 0] * y[:, 1] - x[:, 1] * y[:, 0], np.sum(x * y, axis=1)))
    return [near(p_angular(x, y, 0.0), 2.0 * np.sin(0.5 * w), tol, **coords("x", x), **coords("y", y))]


@check("j-triangle", "inequality", "the distance-ratio metric of the punctured space satisfies the triangle inequality",
       "x, y, z uniform in [-3,3]^3", 1e-12)
def _(n, s, tol):
    x, y, z = (s.box(k, n, 3, -3.0, 3.0) for k in ("x", "y", "z"))
    return [leq(j_metric(x, z), j_metric(x, y) + j_metric(y, z), tol, **coords("x", x), **coords("y", y))]


@check("radial-composition", "equality-case", "A_{a,b}(A_{c,d}(x)) = A_{ac,bd}(x)",
       "x uniform in [-3,3]^3, exponents uniform in [0.2, 3]", 1e-12)
def _(n, s, tol):
    x = s.box("x", n, 3, -3.0, 3.0)
    a, b, c, d = (s.uniform(k, n, 0.2, 3.0) for k in "abcd")
    lhs = radial_map(radial_map(x, RadialExponents(c, d)), RadialExponents(a, b))
    rhs = radial_map(x, RadialExponents(a * c, b * d))
    err = np.linalg.norm(lhs - rhs, axis=1) / np.maximum(1.0, np.linalg.norm(rhs, axis=1))
    return [Evaluation(err - tol, dict(a=a, b=b, c=c, d=d, **coords("x", x)))]


@check("inversion-identity", "equality-case",
       "inversion is an involution and |h(x)-h(y)| = r^2 |x-y| / (|x-c||y-c|)",
       "x, y, c uniform in [-3,3]^3, radius uniform in [0.5, 2]", 1e-12)
def _(n, s, tol):
    x, y, c = (s.box(k, n, 3, -3.0, 3.0) for k in ("x", "y", "c"))
    rad = s.uniform("radius", n, 0.5, 2.0)
    hx, hy = inversion(x, c, rad), inversion(y, c, rad)
    back = inversion(hx, c, rad)
    inv_err = np.linalg.norm(back - x, axis=1) / np.maximum(1.0, np.linalg.norm(x, axis=1))
    dist = rad**2 * np.linalg.norm(x - y, axis=1) / (np.linalg.norm(x - c, axis=1) * np.linalg.norm(y - c, axis=1))
    params = dict(radius=rad, **coords("x", x), **coords("c", c))
    return [Evaluation(inv_err - tol, params), near(np.linalg.norm(hx - hy, axis=1), dist, tol, relative=True, **params)]
