from __future__ import annotations

import copy
from fractions import Fraction as F

import mpmath
import pytest

import direct
from yamabe_cert.beta import IntegralIndex, integral_exact
from yamabe_cert.exact import PiScaled, RatFunc, UniPoly
from yamabe_cert.feasibility import certify_intersection, certify_lemma_poly, roots, window
from yamabe_cert.oracle import (
    HPValue,
    OracleDisagreement,
    crosscheck,
    eval_hp,
    hp_endpoints,
    hp_point_data,
    quad_moment,
    threshold,
)
from yamabe_cert.spectral import SpectralParams, delta

TOL = mpmath.mpf(10) ** -25


def test_eval_rational():
    v = eval_hp(F(17548, 91))
    assert v.error_bound < TOL
    with mpmath.workdps(60):
        assert abs(v.value - mpmath.mpf(17548) / 91) < TOL
    assert v.contains(F(17548, 91))


def test_eval_pi_scaled():
    v = eval_hp(PiScaled(F(1, 32), 1))
    with mpmath.workdps(60):
        assert abs(v.value - mpmath.pi / 32) < TOL
    assert str(mpmath.nstr(v.value, 10)) == "0.09817477042"


def test_eval_endpoint_and_ratfunc():
    x, _ = roots(SpectralParams(3, 1), 12)
    v = eval_hp(x, 12)
    assert abs(float(v) + 0.001380) < 1e-6 and v.sign() == -1
    r = eval_hp(delta(SpectralParams(3, 1)), 12)
    assert r.contains(F(17548, 91))
    with pytest.raises(ZeroDivisionError):
        eval_hp(RatFunc(1, UniPoly([-2, 1])), 2)


def test_independent_point_data_matches_exact():
    for omega, k, n in [(3, 1, 12), (8, 3, 40), (15, 7, 200)]:
        for ival, exact in zip(hp_point_data(omega, k, n), (direct.nu(omega, k, n), direct.d(omega, k, n), direct.u(omega, k, n), direct.delta(omega, k, n))):
            q = mpmath.iv.mpf(exact.numerator) / exact.denominator
            assert ival.a <= q.b and q.a <= ival.b


def test_hp_endpoints_enclose_rational_bounds():
    x, y = roots(SpectralParams(6, 2), 30)
    hx, hy = hp_endpoints(6, 2, 30)
    lo, hi = x.bounds(120)
    assert float(hx.a) <= float(hi) and float(lo) <= float(hx.b)


def test_quad_moment_leading_term_and_scaling():
    # beta = 3 keeps the exponent constraint satisfied at n = 8
    checks = [quad_moment(0, 3, 8, F(1, 1000) / 2**i, F(1, 10), precision=40) for i in range(3)]
    for c in checks:
        assert abs(c.relative_discrepancy) < mpmath.mpf(10) ** -15
        assert c.value.error_bound >= 0
    power = 0 + 8 - mpmath.mpf(3 * 6) / 2
    ratio = checks[1].leading.value / checks[0].leading.value
    assert abs(ratio - mpmath.mpf(2) ** (-power)) < mpmath.mpf(10) ** -30
    # remainder shrinks like eps^((n-2)beta - alpha - n) relative to the leading term
    shrink = checks[1].relative_discrepancy / checks[0].relative_discrepancy
    assert abs(shrink - mpmath.mpf(2) ** -10) < 1e-3
    i_exact = integral_exact(IntegralIndex(9, 7))
    assert abs(checks[0].leading.value / checks[0].eps**power - i_exact.to_mpf()) < 1e-30


def test_quad_moment_rejects_boundary():
    with pytest.raises(ValueError):
        quad_moment(10, 3, 8, F(1, 1000), F(1, 10))  # (n-2)(beta-1)-n = 4 <= alpha
    with pytest.raises(ValueError):
        quad_moment(4, 3, 8, F(1, 1000), F(1, 10))
    with pytest.raises(ValueError):
        quad_moment(0, 2, 8, F(1, 1000), F(1, 10))


def test_quadrature_refinement_stable():
    a = quad_moment(1, 3, 8, F(1, 500), F(1, 10), precision=30)
    b = quad_moment(1, 3, 8, F(1, 500), F(1, 10), precision=45)
    assert abs(a.value.value - b.value.value) <= a.value.error_bound + b.value.error_bound + mpmath.mpf(10) ** -28


def test_threshold_values():
    t = threshold(3, 1)
    with mpmath.workdps(60):
        assert abs(t.value - 6 * (2 * mpmath.pi**2) ** (mpmath.mpf(2) / 3)) < TOL
        t4 = threshold(4, 2)
        assert abs(t4.value - 12 * mpmath.sqrt(8 * mpmath.pi**2 / 3) * mpmath.sqrt(2)) < TOL
    assert abs(float(t) - 43.8232327) < 1e-6
    assert threshold(7, 1).value == threshold(7).value
    with pytest.raises(ValueError):
        threshold(2, 1)
    with pytest.raises(ValueError):
        threshold(5, 0)


def test_crosscheck_agrees():
    assert crosscheck(certify_lemma_poly(3)).agree
    res = crosscheck(window(4, 14, 2))
    assert res.agree and res.checked == 4
    res = crosscheck(certify_intersection(7), 60)
    assert res.agree and res.checked > 500


def test_crosscheck_detects_corruption():
    rep = certify_lemma_poly(5)
    bad = copy.deepcopy(rep)
    bad.certificates[2].sign = 1  # claim U_k > 0
    with pytest.raises(OracleDisagreement):
        crosscheck(bad)
    res = crosscheck(bad, strict=False)
    assert not res.agree

    win = window(4, 14, 2)
    wc = copy.deepcopy(win.witness_cert)
    wc.witness["c"] = "1"
    with pytest.raises(OracleDisagreement):
        crosscheck([wc])


def test_hpvalue_sign_undecided():
    v = HPValue(mpmath.mpf(0), 30, mpmath.mpf("1e-40"))
    assert v.sign() is None
