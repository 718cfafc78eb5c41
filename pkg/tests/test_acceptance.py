"""Acceptance suite: one test per criterion, tolerances fixed by the build contract."""

import math

import numpy as np
import pytest
from scipy.integrate import quad

from radialqc.bounds import all_bounds, bound_B, bound_D, bound_K, bound_M, sharp_constant
from radialqc.geometry import RadialExponents, radial_map
from radialqc.metrics import p_angular, q_ratio
from radialqc.special import CONSTANTS, T0, ell_K, minorant_p, mu, mu_inv, phi
from radialqc.tables import compare_table, load_tables
from radialqc.verify import REGISTRY, run_all, run_check, scan_min_regions
from radialqc.verify.sampling import Sampler

criterion = pytest.mark.criterion


def _header_failures(table_id, headers=None, tol=None):
    rep = compare_table(table_id)
    bad = []
    for r in rep.rows:
        for h in headers or r.row.headers:
            t = r.tolerance if tol is None else tol
            if abs(r.recomputed[h] - r.row.printed[h]) > t:
                bad.append(f"table {table_id} row {r.row.k} {h}: printed {r.row.printed[h]} recomputed {r.recomputed[h]:.6f}")
    return bad


@criterion(1, "table values reproduce under their printed headers")
def test_per_header_reproduction():
    tables = load_tables()
    spots = [
        (1, 1, {"B": 3.0496, "M": 3.6030}, 5e-5),
        (4, 2, {"B": 1.00, "D": 0.53, "K": 5.18, "M": 0.52}, 5e-3),
        (3, 3, {"D": 5.21, "K": 34.64, "M": 2.77, "B": 2.53}, 5e-3),
        (6, 2, {"2j": 1.46, "M": 1.83, "D": 3.95}, 5e-3),
    ]
    for tid, k, vals, tol in spots:
        rec = compare_table(tid, tables).rows[k - 1].recomputed
        for h, v in vals.items():
            assert abs(rec[h] - v) <= tol + 1e-12, (tid, k, h)
    bad = []
    for tid in (3, 4, 5, 6, 7):
        bad += _header_failures(tid, tol=5e-3 + 1e-12)
    bad += _header_failures(1, ("B", "M"), 5e-5 + 1e-12)
    bad += _header_failures(2, ("K", "M"), 5e-3 + 1e-12)
    assert not bad, "\n".join(bad)


@criterion(2, "the first two tables match as multisets and the column exchange is identified")
def test_multiset_reproduction():
    t1, t2 = compare_table(1), compare_table(2)
    assert t1.exchanges == [("D", "K")]
    assert t2.exchanges == [("B", "D")]
    bad = [
        f"table {rep.table_id} row {r.row.k}: printed {sorted(r.row.printed.values())} "
        f"recomputed {sorted(round(v, 6) for v in r.recomputed.values())}"
        for rep in (t1, t2)
        for r in rep.rows
        if not r.multiset_match
    ]
    assert not bad, "\n".join(bad)


@criterion(3, "the caption's symbol is the smallest recomputed bound on every row of the first four tables")
def test_caption_claims():
    bad = []
    for tid in (1, 2, 3, 4):
        for r in compare_table(tid).rows:
            if not r.claim_holds:
                bad.append(f"table {tid} row {r.row.k}: caption {r.row.claim}, recomputed minimum {sorted(r.recomputed_minimal)}")
    assert not bad, "\n".join(bad)


@criterion(4, "the sharp constant is attained at antipodal pairs and never exceeded")
def test_sharp_constant():
    s = Sampler(2024, "acceptance-sharpness")
    n = 1000
    r = (1.0 - s.uniform("radius", n)) / 3.0 * (1.0 - 1e-12)
    x = s.directions("dir", n, 2) * r[:, None]
    a = 1.0 - s.uniform("a", n)
    b = s.uniform("b", n, 1.0, 5.0)
    q = q_ratio(x, -x, RadialExponents(a, b))
    assert np.max(np.abs(q - sharp_constant(a))) < 1e-12
    rep = run_check("thm-kal-bound", 100_000, 2024)
    assert rep.passed, rep


@criterion(5, "every defined bound dominates the p-angular distance; equality and chain cases")
def test_bound_validity():
    s = Sampler(5, "acceptance-validity")
    n = 100_000
    x = s.box("x", n, 2, -3.0, 3.0)
    y = s.box("y", n, 2, -3.0, 3.0)
    for p in (0.1, 0.3, 0.5, 0.7, 0.9):
        alpha = p_angular(x, y, p)
        best = np.min(np.stack([bound_M(x, y, p), bound_D(x, y, p), bound_B(x, y, p), bound_K(x, y, p)]), axis=0)
        assert np.all(alpha <= best * (1.0 + 1e-9)), p
        assert np.max(np.abs(p_angular(x, -x, p) - bound_B(x, -x, p))) <= 1e-12
        e = RadialExponents(p, 1.0 / p)
        img = np.linalg.norm(radial_map(x, e) - radial_map(y, e), axis=1)
        assert np.all(alpha <= img * (1.0 + 1e-9))
        assert np.all(img <= bound_K(x, y, p) + 1e-9)


def _quad_K(r):
    return quad(lambda t: 1.0 / math.sqrt(1.0 - (r * math.sin(t)) ** 2), 0.0, math.pi / 2, epsabs=1e-12, epsrel=1e-12)[0]


@criterion(6, "special functions against closed forms and an independent quadrature")
def test_special_functions():
    assert abs(ell_K(0.0) - math.pi / 2) <= 1e-12
    assert abs(mu(1 / math.sqrt(2)) - math.pi / 2) <= 1e-12
    grid = np.linspace(0.0, 0.98, 50)
    assert max(abs(ell_K(r) - _quad_K(r)) for r in grid) <= 1e-8
    r = np.linspace(0.01, 0.99, 50)
    assert np.max(np.abs(phi(2, r) - 2 * np.sqrt(r) / (1 + r))) <= 1e-8
    assert np.max(np.abs(mu_inv(mu(r)) - r)) <= 1e-10
    for K in (1.1, 1.5, 2.0, 5.0, 10.0):
        assert np.all(minorant_p(K, r) <= phi(K, r))


@criterion(7, "every registered check passes at 10^4 samples")
def test_check_registry():
    reports = run_all(10_000, 7)
    assert len(reports) == len(REGISTRY) >= 22
    required = [
        "lemma-2c-f", "lemma-2c-g", "lemma-2c-h", "cor-2e-f", "cor-2e-g", "cor-2e-log", "lemma-2e0-f",
        "lemma-2e0-g", "lemma-2e0-limit", "lemma-2ll-f", "lemma-2ll-g", "ineq-1c", "ineq-1a", "ineq-1ccc",
        "thm-1dd", "thm-1dd-remark", "lemma-1d-unimodal", "thm-1ddd", "ineq-2i", "cor-jandmyf",
        "lemma-sandwich", "lemma-le", "lemma-ve", "lemma-2ii", "lemma-2iii", "cor-2j", "cor-2k", "cor-2kk",
        "thm-kal-bound", "thm-kal-sup", "thm-mymaj-chain",
    ]
    assert set(required) <= set(REGISTRY)
    failed = [r.to_record() for r in reports if not r.passed]
    assert not failed, failed
    assert abs(CONSTANTS.m1 - 0.6027) <= 5e-4 and abs(CONSTANTS.m2 - 0.9072) <= 5e-4


@criterion(8, "the weakened exponent fails: negative derivative near -0.004")
def test_weakened_exponent():
    def f(K):
        return 1.0 - 2.0 * math.atanh(T0 ** (1.0 / K)) / K**0.9

    h = 1e-6
    fprime = (f(1.005 + h) - f(1.005 - h)) / (2 * h)
    assert fprime < 0
    assert abs(fprime + 0.004) <= 1e-3


@criterion(9, "each of the four bounds is minimal somewhere in the sampled box")
def test_region_scan():
    res = scan_min_regions(0.5, (-3.0, 3.0), 100_000, 0)
    assert all(res.counts[s] > 0 for s in ("M", "D", "B", "K")), res.counts
    assert sum(res.counts.values()) == 100_000
    for sym, (x, y) in res.witnesses.items():
        bs = all_bounds(np.array(x), np.array(y), 0.5)
        assert getattr(bs, sym) - min(bs.defined().values()) <= 1e-12
