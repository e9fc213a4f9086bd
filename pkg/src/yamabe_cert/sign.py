"""Exact sign determination with replayable certificates.

A certificate carries enough witness data for :func:`replay` to re-check the
claimed sign using only rational arithmetic.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Any, Iterable

from .exact import Number, RatFunc, UniPoly, as_rational

DESCARTES = "descartes-shift"
STURM = "sturm"
SQUARING = "squaring-trace"
POINTWISE = "pointwise-exhaustive"
COMPOSITE = "composite"


def sgn(x) -> int:
    return (x > 0) - (x < 0)


@dataclass
class SignCert:
    """A sign claim plus the data needed to re-check it.

    ``sign`` is +1/-1 (or 0 for an exact zero of a square-root expression);
    ``None`` means the method was inconclusive for this claim.
    """

    claim: str
    domain: dict[str, Any]
    method: str
    sign: int | None
    witness: dict[str, Any]
    verified: bool = False
    wall_time_ms: float = 0.0
    children: list[SignCert] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.sign is not None and self.verified

    def to_json(self) -> dict[str, Any]:
        out = {
            "claim": self.claim,
            "domain": self.domain,
            "method": self.method,
            "sign": self.sign,
            "witness": self.witness,
            "verified": self.verified,
            "wall_time_ms": self.wall_time_ms,
        }
        if self.children:
            out["children"] = [c.to_json() for c in self.children]
        return out

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> SignCert:
        return cls(
            claim=data["claim"],
            domain=data["domain"],
            method=data["method"],
            sign=data["sign"],
            witness=data["witness"],
            verified=data.get("verified", False),
            wall_time_ms=data.get("wall_time_ms", 0.0),
            children=[cls.from_json(c) for c in data.get("children", [])],
        )


class _Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.ms = round((time.perf_counter() - self.t0) * 1000.0, 3)


# -- polynomial signs on a ray -----------------------------------------------------


def _uniform_sign(coeffs: Iterable[Fraction]) -> int:
    """+1/-1 if all nonzero coefficients share a sign and the constant term is nonzero."""
    cs = list(coeffs)
    if not cs or cs[0] == 0:
        return 0
    s = sgn(cs[0])
    return s if all(sgn(c) in (0, s) for c in cs) else 0


def sturm_sequence(p: UniPoly) -> tuple[list[UniPoly], list[UniPoly]]:
    """Sturm chain p0=p, p1=p', p_{i+1} = -(p_{i-1} mod p_i), with the quotients used."""
    seq = [p, p.derivative()]
    quots: list[UniPoly] = []
    while not seq[-1].is_zero():
        q, r = divmod(seq[-2], seq[-1])
        quots.append(q)
        if r.is_zero():
            break
        seq.append(-r)
    if seq[-1].is_zero():
        seq.pop()
    return seq, quots


def _variations(values: Iterable) -> int:
    signs = [sgn(v) for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _variations_at_infinity(seq: list[UniPoly]) -> int:
    return _variations(q.lc for q in seq)


def sturm_sign_on_ray(p: UniPoly, n0: Number, claim: str = "", domain: dict | None = None) -> SignCert:
    n0 = as_rational(n0)
    with _Timer() as tm:
        seq, quots = sturm_sequence(p)
        v0 = _variations(q(n0) for q in seq)
        vinf = _variations_at_infinity(seq)
        p0 = p(n0)
        roots = v0 - vinf
        sign = sgn(p0) if (roots == 0 and p0 != 0) else None
    witness = {
        "poly": p.to_json(),
        "n0": str(n0),
        "sequence": [q.to_json() for q in seq],
        "quotients": [q.to_json() for q in quots],
        "variations_at_n0": v0,
        "variations_at_inf": vinf,
        "distinct_roots_above_n0": roots,
    }
    cert = SignCert(claim or f"sign of {p} on n >= {n0}", domain or {"n_range": [str(n0), None]}, STURM, sign, witness, wall_time_ms=tm.ms)
    cert.verified = sign is not None and replay(cert)
    return cert


def poly_sign_on_ray(p: UniPoly, n0: Number, claim: str = "", domain: dict | None = None) -> SignCert:
    """Certify that p keeps one strict sign on the real ray [n0, oo).

    Tries the coefficient signs of p(n0 + t) first and falls back to a Sturm
    chain on [n0, oo). An inconclusive result has ``sign is None``.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no strict sign")
    n0 = as_rational(n0)
    with _Timer() as tm:
        shifted = p.shift(n0)
        s = _uniform_sign(shifted.coeffs)
    if s:
        witness = {"poly": p.to_json(), "n0": str(n0), "shifted": shifted.to_json()}
        cert = SignCert(claim or f"sign of {p} on n >= {n0}", domain or {"n_range": [str(n0), None]}, DESCARTES, s, witness, wall_time_ms=tm.ms)
        cert.verified = replay(cert)
        return cert
    return sturm_sign_on_ray(p, n0, claim, domain)


class PoleOnRayError(ValueError):
    pass


def ratfunc_sign_on_ray(f: RatFunc, n0: Number, claim: str = "", domain: dict | None = None) -> SignCert:
    n0 = as_rational(n0)
    dom = domain or {"n_range": [str(n0), None]}
    den_cert = poly_sign_on_ray(f.den, n0, "denominator", dom)
    if den_cert.sign is None:
        raise PoleOnRayError(f"denominator {f.den} may vanish on n >= {n0}")
    if f.num.is_zero():
        raise ValueError("zero rational function has no strict sign")
    num_cert = poly_sign_on_ray(f.num, n0, "numerator", dom)
    sign = None if num_cert.sign is None else num_cert.sign * den_cert.sign
    cert = SignCert(
        claim or f"sign of {f} on n >= {n0}",
        dom,
        COMPOSITE,
        sign,
        {"ratfunc": f.to_json(), "n0": str(n0)},
        wall_time_ms=round(num_cert.wall_time_ms + den_cert.wall_time_ms, 3),
        children=[num_cert, den_cert],
    )
    cert.verified = sign is not None and replay(cert)
    return cert


def pointwise_sign(p: UniPoly | RatFunc, points: Iterable[Number], claim: str = "", domain: dict | None = None) -> SignCert:
    pts = [as_rational(x) for x in points]
    with _Timer() as tm:
        signs = {sgn(p(x)) for x in pts}
    sign = signs.pop() if len(signs) == 1 and 0 not in signs else None
    expr = p.to_json()
    witness = {"expr": expr, "points": [str(x) for x in pts]}
    cert = SignCert(claim or "pointwise sign", domain or {"points": len(pts)}, POINTWISE, sign, witness, wall_time_ms=tm.ms)
    cert.verified = sign is not None and replay(cert)
    return cert


# -- A + B sqrt(u) + C sqrt(v) -------------------------------------------------------


def _sign_two(alpha: Fraction, beta: Fraction, w: Fraction, steps: list) -> int:
    """Exact sign of alpha + beta*sqrt(w), w >= 0."""
    sb = sgn(beta) if w > 0 else 0
    sa = sgn(alpha)
    if sb == 0 or sa == 0 or sa == sb:
        s = sa if sb == 0 else sb if sa == 0 else sa
        steps.append({"op": "same-sign", "alpha": str(alpha), "beta": str(beta), "w": str(w), "sign": s})
        return s
    diff = alpha * alpha - beta * beta * w
    s = sa if diff > 0 else sb if diff < 0 else 0
    steps.append({"op": "square", "alpha": str(alpha), "beta": str(beta), "w": str(w), "alpha2_minus_beta2w": str(diff), "sign": s})
    return s


def sqrtsum_sign(A: Fraction, B: Fraction, u: Fraction, C: Fraction, v: Fraction, steps: list | None = None) -> int:
    steps = [] if steps is None else steps
    if u < 0 or v < 0:
        raise ValueError("radicands must be nonnegative")
    sl = _sign_two(A, B, u, steps)
    sr = sgn(C) if v > 0 else 0
    if sr == 0 or sl == 0 or sl == sr:
        s = sl if sr == 0 else sr if sl == 0 else sl
        steps.append({"op": "combine", "left": sl, "right": sr, "sign": s})
        return s
    # |A + B sqrt u| vs |C sqrt v|: sign of (A^2 + B^2 u - C^2 v) + 2AB sqrt(u)
    d = _sign_two(A * A + B * B * u - C * C * v, 2 * A * B, u, steps)
    s = sl if d > 0 else sr if d < 0 else 0
    steps.append({"op": "combine-squared", "left": sl, "right": sr, "magnitude": d, "sign": s})
    return s


def sqrtsum_sign_at(A: Number, B: Number, C: Number, u: Number, v: Number, claim: str = "", domain: dict | None = None) -> tuple[int, SignCert]:
    """Exact sign of A + B*sqrt(u) + C*sqrt(v); zero is detected symbolically."""
    A, B, C, u, v = (as_rational(x) for x in (A, B, C, u, v))
    steps: list = []
    with _Timer() as tm:
        s = sqrtsum_sign(A, B, u, C, v, steps)
    witness = {"A": str(A), "B": str(B), "C": str(C), "u": str(u), "v": str(v), "steps": steps}
    cert = SignCert(claim or "sign of A + B sqrt(u) + C sqrt(v)", domain or {}, SQUARING, s, witness, wall_time_ms=tm.ms)
    cert.verified = replay(cert)
    return s, cert


def sqrt_bounds(q: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    """Rationals lo <= sqrt(q) <= hi with hi - lo <= 2**-bits / q.denominator."""
    if q < 0:
        raise ValueError("negative radicand")
    num, den = q.numerator, q.denominator
    scale = 1 << bits
    s = isqrt(num * den * scale * scale)
    lo = Fraction(s, den * scale)
    if s * s == num * den * scale * scale:
        return lo, lo
    return lo, Fraction(s + 1, den * scale)


# -- replay ---------------------------------------------------------------------------


def _replay_descartes(w: dict, sign: int | None) -> bool:
    p = UniPoly.from_json(w["poly"])
    t = UniPoly.from_json(w["shifted"], "t")
    n0 = Fraction(w["n0"])
    if t.degree != p.degree:
        return False
    # a polynomial of degree d is pinned by d+1 values
    if any(t(Fraction(i)) != p(n0 + i) for i in range(p.degree + 1)):
        return False
    return sign is not None and _uniform_sign(t.coeffs) == sign


def _replay_sturm(w: dict, sign: int | None) -> bool:
    if sign is None:
        return False
    p = UniPoly.from_json(w["poly"])
    seq = [UniPoly.from_json(q) for q in w["sequence"]]
    quots = [UniPoly.from_json(q) for q in w["quotients"]]
    n0 = Fraction(w["n0"])
    if not seq or seq[0] != p:
        return False
    if p.degree >= 1 and (len(seq) < 2 or seq[1] != p.derivative()):
        return False
    for i in range(1, len(seq) - 1):
        if seq[i + 1].degree >= seq[i].degree:
            return False
        if seq[i - 1] != quots[i - 1] * seq[i] - seq[i + 1]:
            return False
    if len(seq) >= 2:
        # chain must end where the last element divides its predecessor
        if len(quots) < len(seq) - 1 or seq[-2] != quots[len(seq) - 2] * seq[-1]:
            return False
    p0 = p(n0)
    if p0 == 0:
        return False
    v0 = _variations(q(n0) for q in seq)
    vinf = _variations_at_infinity(seq)
    return v0 == vinf and sgn(p0) == sign


def _replay_pointwise(w: dict, sign: int | None) -> bool:
    if sign is None:
        return False
    expr = w["expr"]
    f = RatFunc.from_json(expr) if isinstance(expr, dict) else UniPoly.from_json(expr)
    try:
        return all(sgn(f(Fraction(x))) == sign for x in w["points"])
    except ZeroDivisionError:
        return False


def _replay_squaring(w: dict, sign: int | None) -> bool:
    A, B, C, u, v = (Fraction(w[k]) for k in ("A", "B", "C", "u", "v"))
    steps: list = []
    return sign is not None and sqrtsum_sign(A, B, u, C, v, steps) == sign and steps == w["steps"]


def _replay_ratfunc(cert: SignCert) -> bool:
    if cert.sign is None or len(cert.children) != 2:
        return False
    f = RatFunc.from_json(cert.witness["ratfunc"])
    num_c, den_c = cert.children
    n0 = cert.witness["n0"]
    if num_c.witness.get("poly") != f.num.to_json() or den_c.witness.get("poly") != f.den.to_json():
        return False
    if num_c.witness.get("n0") != n0 or den_c.witness.get("n0") != n0:
        return False
    if not (replay(num_c) and replay(den_c)):
        return False
    return num_c.sign * den_c.sign == cert.sign


def replay(cert: SignCert) -> bool:
    """Re-check a certificate from its witness alone."""
    try:
        if cert.method == DESCARTES:
            return _replay_descartes(cert.witness, cert.sign)
        if cert.method == STURM:
            return _replay_sturm(cert.witness, cert.sign)
        if cert.method == POINTWISE and "expr" in cert.witness:
            return _replay_pointwise(cert.witness, cert.sign)
        if cert.method == SQUARING:
            return _replay_squaring(cert.witness, cert.sign)
        if cert.method == COMPOSITE and "ratfunc" in cert.witness:
            return _replay_ratfunc(cert)
    except (KeyError, ValueError, TypeError, IndexError, ZeroDivisionError):
        return False
    return False


def ray_poly(cert: SignCert) -> UniPoly | RatFunc | None:
    """The expression a ray certificate speaks about, for binding checks."""
    w = cert.witness
    if "poly" in w:
        return UniPoly.from_json(w["poly"])
    if "ratfunc" in w:
        return RatFunc.from_json(w["ratfunc"])
    return None


__all__ = [
    "SignCert",
    "poly_sign_on_ray",
    "ratfunc_sign_on_ray",
    "sturm_sign_on_ray",
    "pointwise_sign",
    "sqrtsum_sign_at",
    "sqrtsum_sign",
    "sqrt_bounds",
    "replay",
    "sgn",
]
