from __future__ import annotations

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from yamabe_cert.exact import (
    MixedPiPowerError,
    PartialFractionError,
    PiScaled,
    PoleError,
    RatFunc,
    UniPoly,
    partial_fractions,
    poly_derivative,
    poly_gcd,
    poly_shift,
    ratfunc_normalize,
)

N = UniPoly.x("n")

big_ints = st.integers(min_value=-(10**40), max_value=10**40)
small_ints = st.integers(min_value=-50, max_value=50)
polys = st.lists(small_ints, min_size=0, max_size=6).map(UniPoly)
big_polys = st.lists(big_ints, min_size=1, max_size=5).map(UniPoly)


def test_derivative_examples():
    assert poly_derivative(N**2) == 2 * N
    assert poly_derivative(UniPoly([56, 18, 23, 2])) == UniPoly([18, 46, 6])
    assert poly_derivative(UniPoly([7])).is_zero()


def test_shift_examples():
    assert poly_shift(N**2, 0) == UniPoly([0, 0, 1])
    shifted = poly_shift(UniPoly([-2, 5, -3]), 3)
    assert shifted == UniPoly([-14, -13, -3])
    assert str(shifted) == "-3*t^2 - 13*t - 14"
    for t in range(3):
        assert shifted(t) == UniPoly([-2, 5, -3])(t + 3)
    assert poly_shift(N - 2, 2) == UniPoly([0, 1])


def test_normalize_examples():
    assert ratfunc_normalize(N**2 - 4, N - 2) == RatFunc(N + 2)
    r = ratfunc_normalize(2 * N + 4, UniPoly([2]))
    assert r.is_polynomial and r.num == N + 2 and r.den == UniPoly([1])


def test_pole_raises():
    with pytest.raises(PoleError):
        RatFunc(1, N - 2)(2)
    with pytest.raises(ZeroDivisionError):
        RatFunc(N) / RatFunc(UniPoly())


def test_partial_fraction_examples():
    pf = partial_fractions(RatFunc(N**3 + 1, N - 2), [N - 2])
    assert pf.poly == N**2 + 2 * N + 4
    assert pf.residue(N - 2) == 9
    pf = partial_fractions(RatFunc(1, (N - 2) * (N - 3)), [N - 2, N - 3])
    assert pf.residue(N - 3) == 1 and pf.residue(N - 2) == -1 and pf.poly.is_zero()


def test_partial_fraction_errors():
    with pytest.raises(PartialFractionError):
        partial_fractions(RatFunc(1, N**2 + 1), [N**2 + 1])
    with pytest.raises(PartialFractionError):
        partial_fractions(RatFunc(1, (N - 1) * (N - 2)), [N - 1])


def test_partial_fractions_agree_with_sympy():
    sympy = pytest.importorskip("sympy")
    n = sympy.Symbol("n")
    f = RatFunc(3 * N**4 - 2 * N + 7, (N - 1) ** 2 * (N + 3))
    pf = partial_fractions(f, [N - 1, N - 1, N + 3])
    expected = sympy.apart((3 * n**4 - 2 * n + 7) / ((n - 1) ** 2 * (n + 3)), n)
    ours = sum(
        (sympy.Rational(c.numerator, c.denominator) / (n - 1 if fac == N - 1 else n + 3) ** k for fac, k, c in pf.residues),
        sympy.Integer(0),
    ) + sum(sympy.Rational(c.numerator, c.denominator) * n**i for i, c in enumerate(pf.poly.coeffs))
    assert sympy.simplify(ours - expected) == 0


@settings(max_examples=100, deadline=None)
@given(polys, st.lists(st.integers(-6, 6), min_size=1, max_size=4))
def test_partial_fraction_roundtrip(num, roots):
    den = UniPoly([1])
    for r in roots:
        den = den * (N - r)
    f = RatFunc(num, den)
    factors = [N - r for r in roots]
    assert partial_fractions(f, factors).recombine() == f


@settings(max_examples=200, deadline=None)
@given(big_polys, big_polys, big_polys)
def test_ring_axioms_big_coefficients(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == UniPoly()


@settings(max_examples=100, deadline=None)
@given(big_polys, big_polys.filter(lambda p: not p.is_zero()))
def test_division_identity(a, b):
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@settings(max_examples=100, deadline=None)
@given(polys, st.integers(-30, 30), st.integers(-30, 30))
def test_shift_evaluates_consistently(p, n0, t):
    assert poly_shift(p, n0)(t) == p(t + n0)


@settings(max_examples=100, deadline=None)
@given(polys, polys.filter(lambda p: not p.is_zero()), polys.filter(lambda p: not p.is_zero()))
def test_ratfunc_field_and_normalization(a, b, c):
    f = RatFunc(a, b)
    g = RatFunc(c, b * c + 1) if not (b * c + 1).is_zero() else RatFunc(c)
    assert RatFunc(f.num, f.den) == f  # idempotent
    assert f.den.lc == 1
    assert poly_gcd(f.num, f.den).degree <= 0 or f.num.is_zero()
    assert (f + g) - g == f
    if not g.num.is_zero():
        assert (f * g) / g == f
    assert RatFunc(a * c, b * c) == f


def test_json_roundtrip():
    p = UniPoly([F(1, 3), -(10**30), 7])
    assert UniPoly.from_json(p.to_json()) == p
    f = RatFunc(p, N**2 + 1)
    assert RatFunc.from_json(f.to_json()) == f


def test_pi_scaled():
    a = PiScaled(F(1, 32), 1)
    assert a + a == PiScaled(F(1, 16), 1)
    assert (a * PiScaled(F(2), 1)) == PiScaled(F(1, 16), 2)
    assert a.ratio(PiScaled(F(1, 64), 1)) == 2
    with pytest.raises(MixedPiPowerError):
        a + PiScaled(F(1), 0)
