"""Exact arithmetic: rationals, univariate polynomials, rational functions, pi-scaled values.

Rationals are :class:`fractions.Fraction` (arbitrary precision, always reduced).
Polynomials are immutable and live in a single formal symbol, ``n`` by default.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
Number = Union[int, Fraction]


class PoleError(ZeroDivisionError):
    """Evaluation of a rational function at a root of its denominator."""


class MixedPiPowerError(ValueError):
    """Addition of two pi-scaled values carrying different powers of pi."""


class PartialFractionError(ValueError):
    pass


def as_rational(x: Number | str) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class UniPoly:
    """Univariate polynomial over the rationals, coefficients indexed by degree."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable[Number | str] = (), var: str = "n"):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self.var = var

    @classmethod
    def x(cls, var: str = "n") -> UniPoly:
        return cls((0, 1), var)

    @classmethod
    def const(cls, c: Number, var: str = "n") -> UniPoly:
        return cls((c,), var)

    @classmethod
    def from_roots(cls, roots: Iterable[Number], var: str = "n") -> UniPoly:
        p = cls((1,), var)
        for r in roots:
            p = p * cls((-as_rational(r), 1), var)
        return p

    # -- basic queries ------------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = UniPoly((other,), self.var)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- ring operations ----------------------------------------------------
    def _coerce(self, other) -> UniPoly:
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly((other,), self.var)
        return NotImplemented

    def __add__(self, other) -> UniPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        m = max(len(self.coeffs), len(other.coeffs))
        return UniPoly((self.coeff(i) + other.coeff(i) for i in range(m)), self.var)

    __radd__ = __add__

    def __neg__(self) -> UniPoly:
        return UniPoly((-c for c in self.coeffs), self.var)

    def __sub__(self, other) -> UniPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> UniPoly:
        return (-self) + other

    def __mul__(self, other) -> UniPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return UniPoly((), self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> UniPoly:
        if e < 0:
            raise ValueError("negative exponent")
        result = UniPoly((1,), self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other) -> tuple[UniPoly, UniPoly]:
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        if self.degree < dq:
            return UniPoly((), self.var), self
        quot = [Fraction(0)] * (self.degree - dq + 1)
        inv = 1 / other.lc
        for i in range(self.degree - dq, -1, -1):
            q = rem[i + dq] * inv
            quot[i] = q
            if q:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= q * b
        return UniPoly(quot, self.var), UniPoly(rem[:dq], self.var)

    def __floordiv__(self, other) -> UniPoly:
        return divmod(self, other)[0]

    def __mod__(self, other) -> UniPoly:
        return divmod(self, other)[1]

    def monic(self) -> UniPoly:
        if self.is_zero():
            return self
        return self * (1 / self.lc)

    def scale(self, c: Number) -> UniPoly:
        return self * as_rational(c)

    def derivative(self) -> UniPoly:
        return UniPoly((i * c for i, c in enumerate(self.coeffs) if i), self.var)

    def compose(self, inner: UniPoly) -> UniPoly:
        acc = UniPoly((), inner.var)
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def shift(self, n0: Number, var: str = "t") -> UniPoly:
        """Return p(n0 + t) as a polynomial in t (Horner-style Taylor shift)."""
        n0 = as_rational(n0)
        cs = list(self.coeffs)
        m = len(cs)
        for i in range(m):
            for j in range(m - 2, i - 1, -1):
                cs[j] += n0 * cs[j + 1]
        return UniPoly(cs, var)

    def with_var(self, var: str) -> UniPoly:
        return UniPoly(self.coeffs, var)

    def content_primitive(self) -> tuple[Fraction, UniPoly]:
        """Split into a positive rational content and an integer primitive part."""
        if self.is_zero():
            return Fraction(1), self
        from math import gcd, lcm

        den = 1
        for c in self.coeffs:
            den = lcm(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        return Fraction(g, den), UniPoly((Fraction(v, g) for v in ints), self.var)

    # -- display ------------------------------------------------------------
    def __repr__(self) -> str:
        return f"UniPoly({self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mono = self.var if i == 1 else f"{self.var}^{i}"
                body = mono if a == 1 else f"{a}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str], var: str = "n") -> UniPoly:
        return cls((Fraction(c) for c in data), var)


def poly_derivative(p: UniPoly) -> UniPoly:
    return p.derivative()


def poly_shift(p: UniPoly, n0: Number) -> UniPoly:
    return p.shift(n0)


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd (zero if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


class RatFunc:
    """Canonical quotient num/den: coprime, monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: UniPoly | Number, den: UniPoly | Number = 1, *, _canonical: bool = False):
        var = num.var if isinstance(num, UniPoly) else den.var if isinstance(den, UniPoly) else "n"
        if not isinstance(num, UniPoly):
            num = UniPoly.const(num, var)
        if not isinstance(den, UniPoly):
            den = UniPoly.const(den, var)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not _canonical:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num // g
                den = den // g
            lc = den.lc
            num = num * (1 / lc)
            den = den * (1 / lc)
            if num.is_zero():
                den = UniPoly.const(1, den.var)
        self.num = num
        self.den = den

    @classmethod
    def from_poly(cls, p: UniPoly) -> RatFunc:
        return cls(p, UniPoly.const(1, p.var), _canonical=True)

    def _coerce(self, other) -> RatFunc:
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, UniPoly):
            return RatFunc.from_poly(other)
        if isinstance(other, (int, Fraction)):
            return RatFunc.from_poly(UniPoly.const(other, self.num.var))
        return NotImplemented

    def __add__(self, other) -> RatFunc:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> RatFunc:
        return RatFunc(-self.num, self.den, _canonical=True)

    def __sub__(self, other) -> RatFunc:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> RatFunc:
        return (-self) + other

    def __mul__(self, other) -> RatFunc:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> RatFunc:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> RatFunc:
        return self._coerce(other) / self

    def __pow__(self, e: int) -> RatFunc:
        if e < 0:
            return RatFunc(self.den ** (-e), self.num ** (-e))
        return RatFunc(self.num**e, self.den**e, _canonical=True)

    def __eq__(self, other: object) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __call__(self, x: Number) -> Fraction:
        x = as_rational(x)
        dv = self.den(x)
        if dv == 0:
            raise PoleError(f"pole of {self} at {x}")
        return self.num(x) / dv

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __repr__(self) -> str:
        return f"RatFunc({self})"

    def __str__(self) -> str:
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def to_json(self) -> dict[str, list[str]]:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: dict, var: str = "n") -> RatFunc:
        return cls(UniPoly.from_json(data["num"], var), UniPoly.from_json(data["den"], var))


def ratfunc_normalize(num: UniPoly, den: UniPoly) -> RatFunc:
    return RatFunc(num, den)


@dataclass(frozen=True)
class PartialFractions:
    """f = poly + sum(coeff / factor**power) over the supplied linear factors."""

    poly: UniPoly
    residues: tuple[tuple[UniPoly, int, Fraction], ...]

    def recombine(self) -> RatFunc:
        total = RatFunc.from_poly(self.poly)
        for factor, power, c in self.residues:
            total = total + RatFunc(UniPoly.const(c, factor.var), factor**power)
        return total

    def residue(self, factor: UniPoly, power: int = 1) -> Fraction:
        for fct, pw, c in self.residues:
            if pw == power and fct == factor:
                return c
        return Fraction(0)


def _series_quotient(num: UniPoly, den: UniPoly, terms: int) -> list[Fraction]:
    """First `terms` Taylor coefficients of num/den at 0; den(0) must be nonzero."""
    d0 = den.coeff(0)
    out: list[Fraction] = []
    for i in range(terms):
        acc = num.coeff(i)
        for j in range(1, i + 1):
            acc -= den.coeff(j) * out[i - j]
        out.append(acc / d0)
    return out


def partial_fractions(f: RatFunc, factors: Sequence[UniPoly]) -> PartialFractions:
    """Decompose f over linear factors; repeated entries in `factors` mean multiplicity.

    Residues are reported against each factor exactly as supplied, so a
    non-monic factor such as ``2n + 4`` gets the coefficient of ``c/(2n + 4)``.
    """
    var = f.num.var
    grouped: dict[UniPoly, tuple[UniPoly, int]] = {}
    for fac in factors:
        if fac.degree != 1:
            raise PartialFractionError(f"factor {fac} is not linear")
        key = fac.monic()
        prev = grouped.get(key)
        grouped[key] = (prev[0] if prev else fac, (prev[1] if prev else 0) + 1)

    product = UniPoly.const(1, var)
    for key, (_, mult) in grouped.items():
        product = product * key**mult
    if not (product % f.den).is_zero():
        raise PartialFractionError(f"denominator {f.den} does not divide the product of the factors")

    poly, rem = divmod(f.num, f.den)
    residues: list[tuple[UniPoly, int, Fraction]] = []
    # Work over the full product so multiplicities line up with the supplied list.
    scaled = rem * (product // f.den)
    for key, (given, mult) in grouped.items():
        root = -key.coeff(0)
        cofactor = product // key**mult
        taylor = _series_quotient(scaled.shift(root), cofactor.shift(root), mult)
        # coefficient of (n - root)^(-j) is taylor[mult - j]
        for j in range(1, mult + 1):
            c = taylor[mult - j]
            if c:
                residues.append((given, j, c * given.lc**j))
    residues.sort(key=lambda r: (-r[0].monic().coeff(0), r[1]))
    return PartialFractions(poly, tuple(residues))


@dataclass(frozen=True)
class PiScaled:
    """Exact value q * pi**e."""

    q: Fraction
    e: int = 0

    def __post_init__(self):
        object.__setattr__(self, "q", as_rational(self.q))
        if self.e < 0:
            raise ValueError("pi power must be nonnegative")
        if self.q == 0 and self.e != 0:
            object.__setattr__(self, "e", 0)

    def __add__(self, other: PiScaled) -> PiScaled:
        if not isinstance(other, PiScaled):
            return NotImplemented
        if self.q == 0:
            return other
        if other.q == 0:
            return self
        if self.e != other.e:
            raise MixedPiPowerError(f"cannot add pi^{self.e} and pi^{other.e} terms")
        return PiScaled(self.q + other.q, self.e)

    def __neg__(self) -> PiScaled:
        return PiScaled(-self.q, self.e)

    def __sub__(self, other: PiScaled) -> PiScaled:
        return self + (-other)

    def __mul__(self, other) -> PiScaled:
        if isinstance(other, PiScaled):
            return PiScaled(self.q * other.q, self.e + other.e)
        if isinstance(other, (int, Fraction)):
            return PiScaled(self.q * other, self.e)
        return NotImplemented

    __rmul__ = __mul__

    def ratio(self, other: PiScaled) -> Fraction:
        """self / other as a rational; both must carry the same pi power."""
        if self.e != other.e and self.q != 0:
            raise MixedPiPowerError(f"ratio of pi^{self.e} and pi^{other.e} is not rational")
        return self.q / other.q

    def __str__(self) -> str:
        if self.e == 0 or self.q == 0:
            return str(self.q)
        pi = "pi" if self.e == 1 else f"pi^{self.e}"
        return pi if self.q == 1 else f"{self.q}*{pi}"

    def to_mpf(self):
        import mpmath

        return mpmath.mpf(self.q.numerator) / self.q.denominator * mpmath.pi**self.e
