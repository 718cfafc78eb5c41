import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad

from radialqc.errors import DomainError
from radialqc.special import (
    CONSTANTS,
    T0,
    agm,
    arcosh,
    artanh,
    artanh_sech,
    c1,
    c3,
    c_qc,
    ell_K,
    lambda_bound,
    minorant_p,
    mu,
    mu_inv,
    phi,
    phi_complement,
)

# reference values computed with mpmath at 30 digits
MPMATH = {
    "ell_K(1/sqrt2)": 1.8540746773013719,
    "ell_K(0.5)": 1.6857503548125960,
    "mu(0.5)": 2.0094593770052852,
    "mu(0.1)": 3.6863692375528519,
    "mu(0.9)": 1.1396666442344295,
    "mu_inv(2.156516)": 0.43923106342792852,
    "phi(3,0.3)": 0.97528788203531288,
    "phi(1.5,0.8)": 0.96347296950691582,
    "phi(10,0.2)": 0.99999946948956651,
    "p(2,t0)": 0.79506009762065011,
    "p(10,0.9)": 0.99890986755166833,
    "c3(2)": 2.1700770038967755,
    "c3(5)": 3.9356274117926245,
    "c1(4)": 0.15749013123685915,
    "lambda(1.5)": 13.708195669102426,
    "c_qc(2)": 211912977038.74778,
    "c_qc(1.21)": 195.96142122979285,
    "m1": 0.60270213378069666,
    "m2": 0.90718108744792983,
}


def quad_K(r):
    val, _ = quad(lambda t: 1.0 / math.sqrt(1.0 - (r * math.sin(t)) ** 2), 0.0, math.pi / 2, epsabs=1e-12, epsrel=1e-12)
    return val


def test_elementary_inverses():
    assert artanh(0.5) == pytest.approx(math.atanh(0.5), rel=1e-15)
    assert arcosh(3.0) == pytest.approx(math.acosh(3.0), rel=1e-15)
    assert arcosh(1e300) == pytest.approx(math.acosh(1e300), rel=1e-15)
    with pytest.raises(DomainError):
        arcosh(0.5)


@pytest.mark.parametrize("u", [1e-8, 1e-3, 0.5, 2.0, 30.0, 700.0])
def test_artanh_sech_matches_definition(u):
    import mpmath as mp

    mp.mp.dps = 40
    expected = float(mp.atanh(1 / mp.cosh(u)))
    assert artanh_sech(u) == pytest.approx(expected, rel=1e-13)


def test_agm():
    assert agm(1.0, 1.0) == 1.0
    # Gauss's constant
    assert 1.0 / agm(1.0, math.sqrt(2.0)) == pytest.approx(0.8346268416740731, rel=1e-15)


def test_ell_K_special_values():
    assert ell_K(0.0) == pytest.approx(math.pi / 2, abs=1e-12)
    assert ell_K(1 / math.sqrt(2)) == pytest.approx(MPMATH["ell_K(1/sqrt2)"], abs=1e-12)
    assert ell_K(0.5) == pytest.approx(MPMATH["ell_K(0.5)"], abs=1e-12)
    with pytest.raises(DomainError):
        ell_K(1.0)


def test_ell_K_against_quadrature():
    for r in np.linspace(0.0, 0.99, 50):
        assert ell_K(r) == pytest.approx(quad_K(r), abs=1e-8)


def test_mu_values():
    assert mu(1 / math.sqrt(2)) == pytest.approx(math.pi / 2, abs=1e-12)
    for r, key in ((0.5, "mu(0.5)"), (0.1, "mu(0.1)"), (0.9, "mu(0.9)")):
        assert mu(r) == pytest.approx(MPMATH[key], rel=1e-13)
    with pytest.raises(DomainError):
        mu(0.0)


def test_mu_complement_product():
    r = np.linspace(0.01, 0.99, 99)
    assert np.allclose(mu(r) * mu(np.sqrt(1 - r * r)), math.pi**2 / 4, rtol=1e-13)


def test_mu_inv_values():
    assert mu_inv(math.pi / 2) == pytest.approx(1 / math.sqrt(2), abs=1e-12)
    assert mu_inv(2.156516) == pytest.approx(MPMATH["mu_inv(2.156516)"], abs=1e-12)
    with pytest.raises(DomainError):
        mu_inv(0.0)


def test_mu_inv_round_trip():
    r = np.linspace(0.001, 0.999, 200)
    assert np.max(np.abs(mu_inv(mu(r)) - r)) < 1e-10


def test_mu_inv_small_results_keep_relative_precision():
    # mu(r) = log(4/r) + O(r^2) for small r
    for y in (12.0, 20.0, 50.0):
        r = mu_inv(y)
        assert mu(r) == pytest.approx(y, rel=1e-14)
    assert mu_inv(20.0) == pytest.approx(8.2446144897542312e-09, rel=1e-12)


@settings(max_examples=100, deadline=None)
@given(st.floats(0.002, 0.998))
def test_mu_inv_inverts(r):
    assert abs(mu_inv(mu(r)) - r) < 1e-10


def test_mu_decreasing():
    r = np.linspace(0.001, 0.999, 500)
    assert np.all(np.diff(mu(r)) < 0)


def test_phi_landen():
    r = np.linspace(0.01, 0.99, 50)
    assert np.max(np.abs(phi(2, r) - 2 * np.sqrt(r) / (1 + r))) < 1e-8
    assert phi(2, 0.5) == pytest.approx(0.942809, abs=1e-6)
    assert phi(2, 0.25) == pytest.approx(0.8, abs=1e-8)


def test_phi_values():
    assert phi(3, 0.3) == pytest.approx(MPMATH["phi(3,0.3)"], abs=1e-12)
    assert phi(1.5, 0.8) == pytest.approx(MPMATH["phi(1.5,0.8)"], abs=1e-12)
    assert phi(10, 0.2) == pytest.approx(MPMATH["phi(10,0.2)"], abs=1e-12)
    assert phi(1, 0.37) == pytest.approx(0.37, abs=1e-12)
    with pytest.raises(DomainError):
        phi(0.5, 0.3)


def test_phi_complement():
    r = np.linspace(0.05, 0.95, 19)
    assert np.allclose(phi_complement(2, r) ** 2 + phi(2, r) ** 2, 1.0, atol=1e-12)
    # where phi rounds to 1 the complement is still resolved
    c = phi_complement(10, 0.9999)
    assert 0 < c < 1e-20
    assert mu(c) == pytest.approx(10 * math.pi**2 / (4 * mu(0.9999)), rel=1e-13)


def test_minorant_below_phi():
    r = np.linspace(0.01, 0.99, 50)
    for K in (1.1, 1.5, 2.0, 5.0, 10.0):
        assert np.all(minorant_p(K, r) <= phi(K, r) + 1e-12)


def test_minorant_values():
    assert minorant_p(2, T0) == pytest.approx(MPMATH["p(2,t0)"], abs=1e-12)
    assert minorant_p(10, 0.9) == pytest.approx(MPMATH["p(10,0.9)"], abs=1e-12)
    assert minorant_p(1, 0.4) == pytest.approx(0.4, abs=1e-15)


def test_constants():
    assert CONSTANTS.t0 == pytest.approx((math.e - 1) / (math.e + 1), rel=1e-15)
    assert 2 * artanh(T0) == pytest.approx(1.0, abs=1e-12)
    assert CONSTANTS.m1 == pytest.approx(MPMATH["m1"], rel=1e-14)
    assert CONSTANTS.m2 == pytest.approx(MPMATH["m2"], rel=1e-14)
    assert abs(CONSTANTS.m1 - 0.6027) < 5e-4 and abs(CONSTANTS.m2 - 0.9072) < 5e-4


def test_c3():
    assert c3(1.0) == pytest.approx(1.0, abs=1e-12)
    assert c3(1 + 1e-8) == pytest.approx(1.0, abs=1e-6)
    assert c3(2) == pytest.approx(MPMATH["c3(2)"], rel=1e-13)
    assert c3(5) == pytest.approx(MPMATH["c3(5)"], rel=1e-13)


def test_c1():
    assert c1(4) == pytest.approx(MPMATH["c1(4)"], rel=1e-14)
    assert c1(1 + 1e-9) == pytest.approx(1 / math.e, abs=1e-6)
    with pytest.raises(DomainError):
        c1(1.0)


def test_lambda_and_c_qc():
    assert lambda_bound(1.0) == 1.0
    assert lambda_bound(1.5) == pytest.approx(MPMATH["lambda(1.5)"], rel=1e-14)
    assert c_qc(1.0) == 1.0
    assert c_qc(2) == pytest.approx(MPMATH["c_qc(2)"], rel=1e-13)
    assert c_qc(1.21) == pytest.approx(MPMATH["c_qc(1.21)"], rel=1e-13)
    with pytest.raises(DomainError):
        c_qc(0.9)
