from __future__ import annotations

from fractions import Fraction as F

import mpmath
import pytest

from direct import integral as direct_integral
from yamabe_cert.beta import (
    DivergentIntegralError,
    IntegralIndex,
    LogarithmicIntegralError,
    UnreachableError,
    integral_exact,
    leading_constant_check,
    reduce_to_base,
    sphere_volume,
    verify_recurrences,
)
from yamabe_cert.exact import PiScaled
from yamabe_cert.oracle import eval_hp, quad_integral


@pytest.mark.parametrize(
    "a,b,expected",
    [(4, 5, PiScaled(F(1, 6), 0)), (4, 3, PiScaled(F(1, 12), 0)), (4, 2, PiScaled(F(1, 32), 1))],
)
def test_integral_examples(a, b, expected):
    assert integral_exact(IntegralIndex(a, b)) == expected


def test_integral_matches_gamma_oracle():
    for a in range(1, 25):
        for b in range(0, 2 * a - 1):
            q, e = direct_integral(a, b)
            assert integral_exact(IntegralIndex(a, b)) == PiScaled(q, e)


@pytest.mark.parametrize("a,b", [(4, 2), (6, 7), (9, 3), (12, 20)])
def test_integral_matches_quadrature(a, b):
    exact = eval_hp(integral_exact(IntegralIndex(a, b)), precision=40)
    numeric = quad_integral(a, b, precision=40)
    assert abs(exact.value - numeric.value) <= exact.error_bound + numeric.error_bound + mpmath.mpf(10) ** -35


def test_divergent_indices():
    with pytest.raises(LogarithmicIntegralError) as err:
        integral_exact(IntegralIndex(4, 7))
    assert err.value.index == (4, 7) or tuple(err.value.index) == (4, 7)
    with pytest.raises(DivergentIntegralError):
        integral_exact(IntegralIndex(4, 9))
    assert not isinstance(DivergentIntegralError(4, 9), LogarithmicIntegralError)


def test_recurrences_small_and_full():
    rep = verify_recurrences(8)
    assert rep.passed and rep.counterexample is None
    full = verify_recurrences(30)
    assert full.passed and full.checked > 2000


def test_reduce_examples():
    assert reduce_to_base(IntegralIndex(4, 5), IntegralIndex(4, 3)) == 2
    idx = IntegralIndex(7, 4)
    assert reduce_to_base(idx, idx) == 1
    with pytest.raises(UnreachableError):
        reduce_to_base(IntegralIndex(4, 4), IntegralIndex(4, 3))


def test_reduce_agrees_with_closed_form():
    base = IntegralIndex(10, 9)
    for a, b in [(12, 13), (11, 5), (14, 1), (10, 17)]:
        r = reduce_to_base(IntegralIndex(a, b), base)
        assert integral_exact(IntegralIndex(a, b)) == integral_exact(base) * r


def test_sphere_volumes():
    assert sphere_volume(1) == PiScaled(F(2), 1)
    assert sphere_volume(2) == PiScaled(F(4), 1)
    assert sphere_volume(3) == PiScaled(F(2), 2)
    assert sphere_volume(4) == PiScaled(F(8, 3), 2)


@pytest.mark.parametrize("n", [3, 4, 7, 20, 40])
def test_leading_constant_sphere_variant(n):
    rep = leading_constant_check(n, 60)
    assert abs(rep.sphere_residual) < mpmath.mpf(10) ** -25


def test_leading_constant_values_at_four():
    rep = leading_constant_check(4, 40)
    assert abs(rep.sphere_lhs - mpmath.mpf("5.92384")) < 1e-4
    assert abs(rep.printed_lhs - mpmath.mpf("4.25535")) < 1e-4


def test_leading_constant_precision_guard():
    with pytest.raises(ValueError):
        leading_constant_check(4, 5)
