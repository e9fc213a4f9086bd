"""Coefficient families of the test-function expansion, as exact objects in the symbol n.

Every formula is built from its defining expression; the expanded forms are
whatever the polynomial engine produces.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .beta import IntegralIndex, integral_exact, reduce_to_base
from .exact import PartialFractions, RatFunc, UniPoly, partial_fractions

N = UniPoly.x("n")


@dataclass(frozen=True, order=True)
class SpectralParams:
    omega: int
    k: int

    def __post_init__(self):
        if self.omega < 3:
            raise ValueError(f"omega must be >= 3, got {self.omega}")
        if not 1 <= self.k <= self.omega // 2:
            raise ValueError(f"k must lie in [1, {self.omega // 2}] for omega={self.omega}, got {self.k}")

    @property
    def m(self) -> int:
        """Degree of the harmonic, omega - 2k + 2."""
        return self.omega - 2 * self.k + 2


def all_params(omega: int, k_max: int | None = None) -> list[SpectralParams]:
    top = omega // 2 if k_max is None else k_max
    return [SpectralParams(omega, k) for k in range(1, top + 1)]


def _as_params(p: SpectralParams | tuple[int, int]) -> SpectralParams:
    return p if isinstance(p, SpectralParams) else SpectralParams(*p)


@lru_cache(maxsize=None)
def nu(p: SpectralParams) -> UniPoly:
    p = _as_params(p)
    return (p.omega - 2 * p.k + 2) * (N + (p.omega - 2 * p.k))


@lru_cache(maxsize=None)
def d(p: SpectralParams) -> UniPoly:
    p = _as_params(p)
    w2 = (p.omega + 2) ** 2
    return 4 * ((N - 1) * (N - 2) * nu(p) - N * (N - 2) ** 2 + w2 * (N**2 + N + 2))


def nu_gap(p: SpectralParams) -> UniPoly:
    """nu_k - n + 1, the denominator factor of u_k."""
    return nu(p) - N + 1


@lru_cache(maxsize=None)
def u(p: SpectralParams) -> RatFunc:
    p = _as_params(p)
    w2 = (p.omega + 2) ** 2
    first = RatFunc(N - 3, 4 * (N - 2))
    second = RatFunc((N - 1) ** 2 + (N - 1) * w2, 4 * (N - 2) * nu_gap(p))
    return (first - second) * nu(p)


@lru_cache(maxsize=None)
def delta(p: SpectralParams) -> RatFunc:
    """Discriminant of the quadratic in c: (n-2)^2 - d_k u_k / nu_k^2."""
    p = _as_params(p)
    return RatFunc.from_poly((N - 2) ** 2) - RatFunc.from_poly(d(p)) * u(p) / RatFunc.from_poly(nu(p) ** 2)


def c_opt(p: SpectralParams) -> RatFunc:
    """(n-2)^2 / d_k, the vertex of the quadratic."""
    return RatFunc((N - 2) ** 2, d(p))


def lemma_quantity(p: SpectralParams) -> RatFunc:
    """u_k - (n-2)^2 nu_k^2 / d_k, negative on the admissible ray."""
    p = _as_params(p)
    return u(p) - RatFunc((N - 2) ** 2 * nu(p) ** 2, d(p))


# -- the polynomial P in x with coefficients in n ------------------------------


@dataclass(frozen=True)
class PPoly:
    """Quadratic in x; coeffs[i] is the UniPoly-in-n coefficient of x^i."""

    omega: int
    coeffs: tuple[UniPoly, UniPoly, UniPoly]

    def __call__(self, x: UniPoly) -> UniPoly:
        c0, c1, c2 = self.coeffs
        return c0 + c1 * x + c2 * x * x

    def derivative(self) -> tuple[UniPoly, UniPoly]:
        c0, c1, c2 = self.coeffs
        return c1, 2 * c2


def _x_poly_mul(a: list[UniPoly], b: list[UniPoly]) -> list[UniPoly]:
    out = [UniPoly() for _ in range(len(a) + len(b) - 1)]
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] = out[i + j] + ai * bj
    return out


@lru_cache(maxsize=None)
def p_poly(omega: int) -> PPoly:
    if omega < 3:
        raise ValueError("omega must be >= 3")
    w2 = (omega + 2) ** 2
    first = [-N * (N - 2) ** 2 + w2 * (N**2 + N + 2), (N - 1) * (N - 2)]
    second = [(N - 3) * (1 - N) - (N - 1) ** 2 - (N - 1) * w2, N - 3]
    prod = _x_poly_mul(first, second)
    cube = (N - 2) ** 3
    prod[1] = prod[1] + cube * (N - 1)
    prod[2] = prod[2] - cube
    return PPoly(omega, (prod[0], prod[1], prod[2]))


def printed_p_prime(omega: int) -> tuple[UniPoly, UniPoly]:
    """(constant, x-coefficient) of -2(n-2)x - 2n(n-2)^3 + 2(n^2-3n-2)(omega+2)^2."""
    const = -2 * N * (N - 2) ** 3 + 2 * (N**2 - 3 * N - 2) * (omega + 2) ** 2
    return const, -2 * (N - 2)


@dataclass
class PPrimeCheck:
    omega: int
    derived: tuple[UniPoly, UniPoly]
    printed: tuple[UniPoly, UniPoly]

    @property
    def passed(self) -> bool:
        return self.derived == self.printed


def p_prime_check(omega: int) -> PPrimeCheck:
    return PPrimeCheck(omega, p_poly(omega).derivative(), printed_p_prime(omega))


@lru_cache(maxsize=None)
def U(p: SpectralParams) -> UniPoly:
    """P(nu_k(n)); raises if the defining product form disagrees."""
    p = _as_params(p)
    composed = p_poly(p.omega)(nu(p))
    if RatFunc.from_poly(composed) != U_defining(p):
        raise ArithmeticError(f"U_k identity fails at {p}")
    return composed


def U_defining(p: SpectralParams) -> RatFunc:
    """(nu_k-n+1) d_k [(n-2) u_k / nu_k - (n-2)^3 nu_k / d_k]."""
    p = _as_params(p)
    inner = RatFunc(N - 2) * u(p) / RatFunc(nu(p)) - RatFunc((N - 2) ** 3 * nu(p), d(p))
    return RatFunc(nu_gap(p) * d(p)) * inner


# -- partial fractions of the discriminant --------------------------------------


@dataclass(frozen=True)
class DeltaDecomposition:
    params: SpectralParams
    parts: PartialFractions
    factors: tuple[UniPoly, UniPoly, UniPoly]  # n-2, nu_k+1-n, nu_k

    @property
    def a(self) -> Fraction:
        return self.parts.poly.coeff(2)

    @property
    def b(self) -> Fraction:
        return self.parts.poly.coeff(1)

    @property
    def e(self) -> Fraction:
        return self.parts.poly.coeff(0)

    @property
    def h(self) -> Fraction:
        return self.parts.residue(self.factors[0])

    @property
    def s(self) -> Fraction:
        return self.parts.residue(self.factors[1])

    @property
    def nu_residue(self) -> Fraction:
        """Coefficient of 1/nu_k; absent from the five-term form."""
        return self.parts.residue(self.factors[2])

    def recombine(self) -> RatFunc:
        return self.parts.recombine()


def delta_partial_fractions(p: SpectralParams) -> DeltaDecomposition:
    p = _as_params(p)
    factors = (N - 2, nu(p) + 1 - N, nu(p))
    return DeltaDecomposition(p, partial_fractions(delta(p), factors), factors)


# -- f^2 coefficient of the expansion -----------------------------------------


def f2_coefficient(omega: int) -> RatFunc:
    w2 = (omega + 2) ** 2
    return RatFunc(-(N * (N - 2) ** 2 - w2 * (N**2 + N + 2)), (N - 1) * (N - 2))


@dataclass
class ExpansionCheck:
    omega: int
    n: int
    logarithmic: bool
    reduced: Fraction  # raw coefficient / base integral (or its log coefficient)
    expected: Fraction

    @property
    def passed(self) -> bool:
        return self.reduced == self.expected


def expansion_check(omega: int, n: int) -> ExpansionCheck:
    """Reduce the raw f^2 coefficient to a multiple of I_{n-2}^{n+2omega+1}.

    For n = 2omega+6 the base integral and I_n^{2omega+n+5} are both logarithmic;
    only their log(1/eps) coefficients (each 1) are compared.
    """
    if n < 2 * omega + 6:
        raise ValueError(f"need n >= 2*omega+6 = {2 * omega + 6}")
    w = omega
    base = IntegralIndex(n - 2, n + 2 * w + 1)
    if n == 2 * w + 6:
        # the log-divergent term carries (omega-n+4)^2; the finite ones drop out
        return ExpansionCheck(w, n, True, Fraction((w - n + 4) ** 2), Fraction((w + 2) ** 2))
    big_n = Fraction(2 * n, n - 2)

    def r(a: int, b: int) -> Fraction:
        return reduce_to_base(IntegralIndex(a, b), base)

    moment_ratio = reduce_to_base(IntegralIndex(n, n + 1), IntegralIndex(n, n - 1))
    reduced = (
        (w - n + 4) ** 2 * r(n, 2 * w + n + 5)
        + 2 * (w + 2) * (w - n + 4) * r(n, 2 * w + n + 3)
        + (w + 2) ** 2 * r(n, 2 * w + n + 1)
        - (big_n - 1) * (n - 2) ** 2 * moment_ratio * r(n, 2 * w + n + 3)
    )
    return ExpansionCheck(w, n, False, reduced, f2_coefficient(w)(n))


def expansion_check_closed_form(omega: int, n: int) -> bool:
    """Same identity evaluated directly with closed-form integrals (no lattice walk)."""
    w = omega
    big_n = Fraction(2 * n, n - 2)

    def I(a: int, b: int):
        return integral_exact(IntegralIndex(a, b))

    raw = (
        I(n, 2 * w + n + 5) * ((w - n + 4) ** 2)
        + I(n, 2 * w + n + 3) * (2 * (w + 2) * (w - n + 4))
        + I(n, 2 * w + n + 1) * ((w + 2) ** 2)
        - I(n, 2 * w + n + 3) * ((big_n - 1) * (n - 2) ** 2 * I(n, n + 1).ratio(I(n, n - 1)))
    )
    return raw == I(n - 2, n + 2 * w + 1) * f2_coefficient(w)(n)
