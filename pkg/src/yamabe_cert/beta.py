"""Radial beta integrals I_a^b = int_0^oo t^b (1+t^2)^(-a) dt and sphere volumes.

Values come from the half-integer Gamma closed form
``I_a^b = Gamma((b+1)/2) Gamma((2a-b-1)/2) / (2 Gamma(a))``; the three
integration-by-parts recurrences are checked against it, never used to compute it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .exact import PiScaled


class DivergentIntegralError(ValueError):
    def __init__(self, a: int, b: int, msg: str | None = None):
        self.index = (a, b)
        super().__init__(msg or f"I_{a}^{b} diverges (2a-b-1 = {2 * a - b - 1} < 0)")


class LogarithmicIntegralError(DivergentIntegralError):
    """The boundary case 2a - b - 1 = 0, where I_a^b(eps) grows like log(1/eps)."""

    def __init__(self, a: int, b: int):
        super().__init__(a, b, f"I_{a}^{b} is logarithmic (2a-b-1 = 0)")


class UnreachableError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class IntegralIndex:
    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 0:
            raise ValueError(f"invalid integral index (a={self.a}, b={self.b})")

    @property
    def excess(self) -> int:
        return 2 * self.a - self.b - 1

    @property
    def convergent(self) -> bool:
        return self.excess > 0

    @property
    def logarithmic(self) -> bool:
        return self.excess == 0

    def check(self) -> None:
        if self.excess == 0:
            raise LogarithmicIntegralError(self.a, self.b)
        if self.excess < 0:
            raise DivergentIntegralError(self.a, self.b)

    def __str__(self) -> str:
        return f"I_{self.a}^{self.b}"


def _gamma_half(twice: int) -> tuple[Fraction, int]:
    """Gamma(twice/2) as (q, s) meaning q * sqrt(pi)**s, for twice >= 1."""
    if twice < 1:
        raise ValueError("Gamma argument must be positive")
    if twice % 2 == 0:
        return Fraction(factorial(twice // 2 - 1)), 0
    m = twice // 2  # Gamma(m + 1/2) = (2m)! / (4^m m!) sqrt(pi)
    return Fraction(factorial(2 * m), 4**m * factorial(m)), 1


@lru_cache(maxsize=None)
def _integral(a: int, b: int) -> PiScaled:
    g1, s1 = _gamma_half(b + 1)
    g2, s2 = _gamma_half(2 * a - b - 1)
    # both half-integers (b even) or both integers (b odd): sqrt(pi) powers pair up
    return PiScaled(g1 * g2 / (2 * factorial(a - 1)), (s1 + s2) // 2)


def integral_exact(idx: IntegralIndex | tuple[int, int]) -> PiScaled:
    if not isinstance(idx, IntegralIndex):
        idx = IntegralIndex(*idx)
    idx.check()
    return _integral(idx.a, idx.b)


def sphere_volume(m: int) -> PiScaled:
    """Volume of the unit sphere S^m in R^(m+1)."""
    if m < 1:
        raise ValueError(f"sphere dimension must be >= 1, got {m}")
    g, s = _gamma_half(m + 1)
    if s == 0:
        # m odd: 2 pi^((m+1)/2) / ((m-1)/2)!
        return PiScaled(2 / g, (m + 1) // 2)
    # m even: the sqrt(pi) in Gamma cancels against pi^(1/2)
    return PiScaled(2 / g, m // 2)


# -- recurrences ---------------------------------------------------------------


def _recurrence_terms(a: int, b: int):
    """The three right-hand sides (label, multiplier, index) of the recurrences for I_a^b."""
    return (
        ("same-a", Fraction(b - 1, 2 * a - b - 1), (a, b - 2)),
        ("lower-a-b", Fraction(b - 1, 2 * a - 2), (a - 1, b - 2)),
        ("lower-a", Fraction(2 * a - b - 3, 2 * a - 2), (a - 1, b)),
    )


@dataclass
class RecurrenceReport:
    a_max: int
    checked: int = 0
    skipped: list[tuple[str, int, int]] = field(default_factory=list)
    counterexample: tuple[str, int, int] | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None and self.checked > 0


def verify_recurrences(a_max: int) -> RecurrenceReport:
    if a_max < 3:
        raise ValueError("a_max must be >= 3")
    report = RecurrenceReport(a_max)
    for a in range(2, a_max + 1):
        for b in range(2, 2 * a - 1):
            lhs = _integral(a, b)
            for label, mult, (a2, b2) in _recurrence_terms(a, b):
                if 2 * a2 - b2 - 1 <= 0:
                    report.skipped.append((label, a, b))
                    continue
                report.checked += 1
                if lhs != _integral(a2, b2) * mult:
                    report.counterexample = (label, a, b)
                    return report
    return report


def _edges(a: int, b: int):
    """Recurrences rooted at convergent (a, b), as (multiplier, target) pairs."""
    if a < 2:
        return
    if b >= 2:
        yield Fraction(b - 1, 2 * a - b - 1), (a, b - 2)
        yield Fraction(b - 1, 2 * a - 2), (a - 1, b - 2)
    yield Fraction(2 * a - b - 3, 2 * a - 2), (a - 1, b)


def _neighbours(a: int, b: int):
    """Lattice moves out of (a, b) with I_(a,b) = m * I_target."""
    for mult, (a2, b2) in _edges(a, b):
        if mult != 0 and 2 * a2 - b2 - 1 > 0:
            yield (a2, b2), mult
    # inverse moves: (a, b) is the target of a recurrence rooted at a neighbour
    for a0, b0 in ((a, b + 2), (a + 1, b + 2), (a + 1, b)):
        if 2 * a0 - b0 - 1 <= 0:
            continue
        for mult, tgt in _edges(a0, b0):
            if tgt == (a, b) and mult != 0:
                yield (a0, b0), 1 / mult


@lru_cache(maxsize=4096)
def _reduce(src: tuple[int, int], dst: tuple[int, int]) -> Fraction:
    a_hi = max(src[0], dst[0]) + 2
    b_hi = max(src[1], dst[1]) + 4
    seen = {src: Fraction(1)}
    queue = deque([src])
    while queue:
        node = queue.popleft()
        if node == dst:
            return seen[node]
        for nxt, mult in _neighbours(*node):
            if nxt in seen or nxt[0] > a_hi or nxt[1] > b_hi:
                continue
            seen[nxt] = seen[node] * mult
            queue.append(nxt)
    raise UnreachableError(f"I_{dst[0]}^{dst[1]} not reachable from I_{src[0]}^{src[1]}")


def reduce_to_base(idx: IntegralIndex, base: IntegralIndex) -> Fraction:
    """Rational r with I_idx = r * I_base, found by walking the recurrence lattice."""
    idx.check()
    base.check()
    if (idx.b - base.b) % 2:
        raise UnreachableError(f"{idx} / {base} is not rational (pi powers differ)")
    return _reduce((idx.a, idx.b), (base.a, base.b))


# -- leading constant ------------------------------------------------------------


@dataclass
class LeadingConstantReport:
    n: int
    precision: int
    printed_lhs: object
    printed_rhs: object
    printed_residual: object
    sphere_lhs: object
    sphere_rhs: object
    sphere_residual: object


def leading_constant_check(n: int, precision: int = 60) -> LeadingConstantReport:
    """Evaluate both forms of the leading-constant identity; neither is assumed to hold.

    printed: 4(n-2) I_n^{n+1} / (I_n^{n-2})^{(n-2)/n} = n
    sphere:  4(n-2) I_n^{n+1} w_{n-1}^{2/n} = n (I_n^{n-1})^{(n-2)/n} w_n^{2/n}
    Residuals are LHS/RHS - 1.
    """
    import mpmath

    if n < 3:
        raise ValueError("n must be >= 3")
    if precision < 10:
        raise ValueError("precision must be at least 10 digits")
    with mpmath.workdps(precision + 10):
        I_top = integral_exact(IntegralIndex(n, n + 1)).to_mpf()
        I_mid = integral_exact(IntegralIndex(n, n - 1)).to_mpf()
        I_low = integral_exact(IntegralIndex(n, n - 2)).to_mpf()
        p = mpmath.mpf(n - 2) / n
        two_n = mpmath.mpf(2) / n
        printed_lhs = 4 * (n - 2) * I_top / I_low**p
        printed_rhs = mpmath.mpf(n)
        sphere_lhs = 4 * (n - 2) * I_top * sphere_volume(n - 1).to_mpf() ** two_n
        sphere_rhs = n * I_mid**p * sphere_volume(n).to_mpf() ** two_n
        return LeadingConstantReport(
            n=n,
            precision=precision,
            printed_lhs=printed_lhs,
            printed_rhs=printed_rhs,
            printed_residual=printed_lhs / printed_rhs - 1,
            sphere_lhs=sphere_lhs,
            sphere_rhs=sphere_rhs,
            sphere_residual=sphere_lhs / sphere_rhs - 1,
        )
