"""High-precision numeric cross-checks.

The oracle re-derives quantities from their defining formulas in mpmath interval
arithmetic. It can only flag disagreement with the exact path; nothing it
returns is ever used as evidence for a certificate.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import mpmath
from mpmath import iv

from .exact import PiScaled, RatFunc, UniPoly
from .report import LemmaReport
from .sign import SignCert

DEFAULT_PRECISION = 60


def default_precision() -> int:
    env = os.environ.get("YC_PRECISION")
    return int(env) if env else DEFAULT_PRECISION


class OracleDisagreement(AssertionError):
    pass


@dataclass(frozen=True)
class HPValue:
    value: mpmath.mpf
    precision: int
    error_bound: mpmath.mpf

    @classmethod
    def from_interval(cls, x, precision: int) -> HPValue:
        with mpmath.workdps(precision + 20):
            lo, hi = mpmath.mpf(x.a), mpmath.mpf(x.b)
            mid = (lo + hi) / 2
            return cls(+mid, precision, (hi - lo) / 2)

    @property
    def lo(self):
        return self.value - self.error_bound

    @property
    def hi(self):
        return self.value + self.error_bound

    def sign(self) -> int | None:
        """+1/-1 when the enclosure excludes zero, else None."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        return None

    def contains(self, x: Fraction | int) -> bool:
        x = Fraction(x)
        with mpmath.workdps(self.precision + 20):
            v = mpmath.mpf(x.numerator) / x.denominator
            return self.lo <= v <= self.hi

    def __float__(self) -> float:
        return float(self.value)


def _to_mpf(x) -> mpmath.mpf:
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    return mpmath.mpf(x)


def _bits(precision: int) -> int:
    return int(precision * 3.33) + 24


def _ivq(x: Fraction | int):
    x = Fraction(x)
    return iv.mpf(x.numerator) / iv.mpf(x.denominator)


def _iv_poly(p: UniPoly, x):
    acc = iv.mpf(0)
    for c in reversed(p.coeffs):
        acc = acc * x + _ivq(c)
    return acc


def eval_hp(expr: Any, n: int | Fraction | None = None, precision: int | None = None) -> HPValue:
    """Enclose the real value of an exact object (at n, for polynomial-like objects)."""
    from .feasibility import AlgEndpoint

    precision = precision or default_precision()
    old = iv.prec
    iv.prec = _bits(precision)
    try:
        if isinstance(expr, (int, Fraction)):
            val = _ivq(expr)
        elif isinstance(expr, PiScaled):
            val = _ivq(expr.q) * iv.pi**expr.e
        elif isinstance(expr, UniPoly):
            val = _iv_poly(expr, _ivq(n))
        elif isinstance(expr, RatFunc):
            den = _iv_poly(expr.den, _ivq(n))
            if den.a <= 0 <= den.b:
                raise ZeroDivisionError(f"pole of {expr} at n={n}")
            val = _iv_poly(expr.num, _ivq(n)) / den
        elif isinstance(expr, AlgEndpoint):
            val = _ivq(expr.center) + expr.side * _ivq(expr.coeff) * iv.sqrt(_ivq(expr.radicand))
        else:
            raise TypeError(f"cannot evaluate {type(expr).__name__}")
        return HPValue.from_interval(val, precision)
    finally:
        iv.prec = old


# -- independent evaluation of the spectral data ---------------------------------


def hp_point_data(omega: int, k: int, n: int | Fraction):
    """(nu, d, u, Delta) as intervals, straight from the defining formulas."""
    nn = _ivq(n)
    w2 = iv.mpf((omega + 2) ** 2)
    nu = (omega - 2 * k + 2) * (nn + (omega - 2 * k))
    d = 4 * ((nn - 1) * (nn - 2) * nu - nn * (nn - 2) ** 2 + w2 * (nn * nn + nn + 2))
    u = ((nn - 3) / (4 * (nn - 2)) - ((nn - 1) ** 2 + (nn - 1) * w2) / (4 * (nn - 2) * (nu - nn + 1))) * nu
    delta = (nn - 2) ** 2 - d * u / nu**2
    return nu, d, u, delta


def hp_endpoints(omega: int, k: int, n: int):
    nu, d, u, delta = hp_point_data(omega, k, n)
    nn = _ivq(n)
    root = iv.sqrt(delta)
    return ((nn - 2) ** 2 - (nn - 2) * root) / d, ((nn - 2) ** 2 + (nn - 2) * root) / d


def _iv_sign(x) -> int | None:
    if x.a > 0:
        return 1
    if x.b < 0:
        return -1
    return None


# -- quadrature of the radial moment ------------------------------------------------


@dataclass
class MomentCheck:
    alpha: int
    beta: int
    n: int
    eps: Any
    delta: Any
    value: HPValue
    leading: HPValue
    relative_discrepancy: Any


def quad_moment(alpha: int, beta: int, n: int, eps, delta, precision: int | None = None) -> MomentCheck:
    """int_0^delta r^(alpha+n-1) (eps/(r^2+eps^2))^(beta(n-2)/2) dr against its leading term.

    The leading term is eps^(alpha+n-beta(n-2)/2) * I_a^b with a = (n-2)beta/2 and
    b = alpha+n-1. Quadrature runs in t = r/eps on [0, delta/eps].
    """
    precision = precision or default_precision()
    if alpha < 0 or alpha >= (n - 2) * (beta - 1) - n:
        raise ValueError(f"need 0 <= alpha < (n-2)(beta-1)-n = {(n - 2) * (beta - 1) - n}, got alpha={alpha}")
    if beta < 2 or n < 3:
        raise ValueError("need beta >= 2 and n >= 3")
    with mpmath.workdps(precision + 10):
        eps = _to_mpf(eps)
        delta = _to_mpf(delta)
        if not 0 < eps < delta:
            raise ValueError("need 0 < eps < delta")
        a = mpmath.mpf((n - 2) * beta) / 2
        b = alpha + n - 1
        power = alpha + n - a
        T = delta / eps
        cuts = [mpmath.mpf(0)]
        x = mpmath.mpf(1)
        while x < T:
            cuts.append(x)
            x *= 4
        cuts.append(T)
        integral, err = mpmath.quad(lambda t: t**b / (1 + t * t) ** a, cuts, error=True)
        value = eps**power * integral
        beta_fn = mpmath.beta(mpmath.mpf(b + 1) / 2, a - mpmath.mpf(b + 1) / 2) / 2
        leading = eps**power * beta_fn
        guard = mpmath.mpf(10) ** (-precision)
        return MomentCheck(
            alpha,
            beta,
            n,
            eps,
            delta,
            HPValue(value, precision, abs(eps**power * err) + abs(value) * guard),
            HPValue(leading, precision, abs(leading) * guard),
            (value - leading) / leading,
        )


def quad_integral(a: int, b: int, precision: int | None = None) -> HPValue:
    """I_a^b by quadrature of sin^b(th) cos^(2a-b-2)(th) on [0, pi/2] (t = tan th)."""
    precision = precision or default_precision()
    with mpmath.workdps(precision + 15):
        val, err = mpmath.quad(lambda th: mpmath.sin(th) ** b * mpmath.cos(th) ** (2 * a - b - 2), [0, mpmath.pi / 4, mpmath.pi / 2], error=True)
        return HPValue(+val, precision, abs(err) + abs(val) * mpmath.mpf(10) ** (-precision - 5))


def threshold(n: int, m: int = 1, precision: int | None = None) -> HPValue:
    """n(n-1) w_n^(2/n) m^(2/n), w_n the volume of the unit n-sphere."""
    from .beta import sphere_volume

    if n < 3:
        raise ValueError("n must be >= 3")
    if m < 1:
        raise ValueError("orbit cardinality m must be >= 1")
    precision = precision or default_precision()
    old = iv.prec
    iv.prec = _bits(precision)
    try:
        vol = sphere_volume(n)
        w = _ivq(vol.q) * iv.pi**vol.e
        expo = iv.mpf(2) / n
        val = n * (n - 1) * w**expo * iv.mpf(m) ** expo
        return HPValue.from_interval(val, precision)
    finally:
        iv.prec = old


# -- cross-checking certificates ---------------------------------------------------


@dataclass
class CrosscheckResult:
    checked: int = 0
    unresolved: int = 0
    disagreements: list[str] = field(default_factory=list)

    @property
    def agree(self) -> bool:
        return not self.disagreements


_RAY_SAMPLES = (0, 1, 2, 5, 10, 37, 100, 1000, 10**4, 10**6, 10**9)


def _ray_value(claim: str, omega: int, k: int, n: int):
    nu, d, u, delta = hp_point_data(omega, k, n)
    nn = _ivq(n)
    if claim == "d_k > 0":
        return d
    if claim == "nu_k - n + 1 > 0":
        return nu - nn + 1
    if claim == "U_k < 0":
        return (nu - nn + 1) * d * ((nn - 2) * u / nu - (nn - 2) ** 3 * nu / d)
    if claim == "Delta_k > 0":
        return delta
    raise KeyError(claim)


def _check_cert(cert: SignCert, res: CrosscheckResult) -> None:
    kind = cert.witness.get("kind")
    dom = cert.domain
    where = f"{cert.claim} @ {dom}"

    def expect(val, sign: int | None, label: str) -> None:
        res.checked += 1
        got = _iv_sign(val)
        if got is None:
            if sign not in (0, None):
                res.unresolved += 1
            return
        if sign is None or got != sign:
            res.disagreements.append(f"{where}: {label} numerically {got}, certified {sign}")

    if kind == "ray":
        omega, k, n0 = int(dom["omega"]), int(dom["k"]), int(Fraction(dom["n_range"][0]))
        for off in _RAY_SAMPLES:
            expect(_ray_value(cert.claim, omega, k, n0 + off), cert.sign, f"n={n0 + off}")
    elif kind == "tail-pair":
        omega, n0 = int(dom["omega"]), int(Fraction(dom["n_range"][0]))
        k, j = (int(x) for x in dom["pair"])
        for off in _RAY_SAMPLES:
            n = n0 + off
            xk, yk = hp_endpoints(omega, k, n)
            xj, yj = hp_endpoints(omega, j, n)
            s = 1 if cert.sign == 1 else None
            expect(yj - xk, s, f"y_j - x_k at n={n}")
            expect(yk - xj, s, f"y_k - x_j at n={n}")
    elif kind in ("window-witnesses", "quadratic"):
        omega, k_max = int(dom["omega"]), int(dom["k_max"])
        if kind == "quadratic":
            pts = [(int(dom["n_range"][0]), cert.witness["c"])]
        else:
            pts = cert.witness["points"]
        s = 1 if cert.sign == -1 else None
        for n, c in pts:
            cc = _ivq(Fraction(c))
            for k in range(1, k_max + 1):
                x, y = hp_endpoints(omega, k, int(n))
                expect(cc - x, s, f"c - x_{k} at n={n}")
                expect(y - cc, s, f"y_{k} - c at n={n}")
    elif kind == "separation":
        omega, n = int(dom["omega"]), int(dom["n"])
        k, j = (int(x) for x in dom["pair"])
        x, _ = hp_endpoints(omega, k, n)
        _, y = hp_endpoints(omega, j, n)
        expect(x - y, cert.sign if cert.sign else None, f"x_{k} - y_{j}")
    elif cert.method == "squaring-trace":
        w = cert.witness
        A, B, C, uu, vv = (_ivq(Fraction(w[key])) for key in ("A", "B", "C", "u", "v"))
        expect(A + B * iv.sqrt(uu) + C * iv.sqrt(vv), cert.sign, "A + B sqrt(u) + C sqrt(v)")
    elif "poly" in cert.witness:
        p = UniPoly.from_json(cert.witness["poly"])
        n0 = Fraction(cert.witness["n0"])
        for off in _RAY_SAMPLES:
            expect(_iv_poly(p, _ivq(n0 + off)), cert.sign, f"n={n0 + off}")
    else:
        res.unresolved += 1


def crosscheck(report: Any, precision: int | None = None, *, strict: bool = True) -> CrosscheckResult:
    """Re-evaluate every certified sign numerically; raise on disagreement when strict."""
    precision = precision or default_precision()
    if isinstance(report, LemmaReport):
        certs = report.certificates
    elif hasattr(report, "endpoints"):  # a single CWindow
        certs = [c for c in (report.witness_cert, report.separation_cert) if c is not None]
    else:
        certs = list(report)
    res = CrosscheckResult()
    old = iv.prec
    iv.prec = _bits(precision)
    try:
        for cert in certs:
            _check_cert(cert, res)
    finally:
        iv.prec = old
    if strict and res.disagreements:
        raise OracleDisagreement("; ".join(res.disagreements[:5]))
    return res
