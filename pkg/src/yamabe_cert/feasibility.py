"""Root intervals of the quadratics in c, their intersection, and the lemma certificates.

For fixed (omega, n) the admissible constants c form the window
``max_k x_k < c < min_k y_k``. Everything decided here is exact: endpoints are
compared through :func:`sqrtsum_sign`, and a chosen witness is re-checked by
plain rational evaluation of every quadratic.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any

from .exact import RatFunc, UniPoly
from .report import CERTIFIED, FALSIFIED, INCONCLUSIVE, LemmaReport
from .sign import (
    COMPOSITE,
    POINTWISE,
    SQUARING,
    SignCert,
    poly_sign_on_ray,
    ratfunc_sign_on_ray,
    replay,
    sgn,
    sqrt_bounds,
    sqrtsum_sign,
    sqrtsum_sign_at,
)
from .spectral import N, SpectralParams, U, all_params, d, delta, delta_partial_fractions, nu, nu_gap, u

WITNESS_MAX_DEN = 10**6


class DiscriminantError(ArithmeticError):
    pass


def min_dimension(omega: int) -> int:
    return 2 * omega + 6


def resolve_k_max(omega: int, q: int | None = None) -> int:
    top = omega // 2
    if q is None:
        return top
    if q < 1:
        raise ValueError("q must be >= 1")
    return min(q, top)


@lru_cache(maxsize=65536)
def point_data(p: SpectralParams, n: int) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """(nu_k, d_k, u_k, Delta_k) at an integer n, each an exact rational."""
    nu_v = nu(p)(Fraction(n))
    d_v = d(p)(Fraction(n))
    u_v = u(p)(n)
    delta_v = (n - 2) ** 2 - d_v * u_v / (nu_v * nu_v)
    return nu_v, d_v, u_v, delta_v


def quadratic_value(p: SpectralParams, n: int, c: Fraction) -> Fraction:
    """d_k/(2(n-2)) c^2 - (n-2) c + (n-2) u_k / (2 nu_k^2)."""
    nu_v, d_v, u_v, _ = point_data(p, n)
    return d_v / (2 * (n - 2)) * c * c - (n - 2) * c + (n - 2) * u_v / (2 * nu_v * nu_v)


# -- endpoints ------------------------------------------------------------------------


@dataclass(frozen=True)
class AlgEndpoint:
    """center + side * coeff * sqrt(radicand), with side -1 for x_k and +1 for y_k."""

    params: SpectralParams
    n: int
    side: int
    center: Fraction
    coeff: Fraction
    radicand: Fraction

    @property
    def label(self) -> str:
        return f"{'x' if self.side < 0 else 'y'}_{self.params.k}"

    def bounds(self, bits: int) -> tuple[Fraction, Fraction]:
        lo, hi = sqrt_bounds(self.radicand, bits)
        a, b = self.center + self.side * self.coeff * lo, self.center + self.side * self.coeff * hi
        return (a, b) if a <= b else (b, a)

    def minus(self, other: AlgEndpoint) -> tuple[Fraction, Fraction, Fraction, Fraction, Fraction]:
        """(A, B, C, u, v) with self - other = A + B sqrt(u) + C sqrt(v)."""
        return (
            self.center - other.center,
            self.side * self.coeff,
            -other.side * other.coeff,
            self.radicand,
            other.radicand,
        )

    def compare(self, other: AlgEndpoint) -> int:
        A, B, C, uu, vv = self.minus(other)
        if self.radicand == other.radicand and self.params == other.params:
            # same radical: fold into one term
            return sqrtsum_sign(A, B + C, uu, Fraction(0), Fraction(0))
        return sqrtsum_sign(A, B, uu, C, vv)

    def to_json(self) -> dict[str, Any]:
        return {
            "k": self.params.k,
            "side": self.label[0],
            "center": str(self.center),
            "coeff": str(self.coeff),
            "radicand": str(self.radicand),
        }


def roots(p: SpectralParams, n: int) -> tuple[AlgEndpoint, AlgEndpoint]:
    if n < min_dimension(p.omega):
        raise ValueError(f"n={n} below 2*omega+6={min_dimension(p.omega)}")
    _, d_v, _, delta_v = point_data(p, n)
    if delta_v <= 0 or d_v <= 0:
        raise DiscriminantError(f"Delta_{p.k}({n}) = {delta_v} for omega={p.omega}; no real root interval")
    center = Fraction((n - 2) ** 2) / d_v
    coeff = Fraction(n - 2) / d_v
    return (
        AlgEndpoint(p, n, -1, center, coeff, delta_v),
        AlgEndpoint(p, n, +1, center, coeff, delta_v),
    )


# -- windows --------------------------------------------------------------------------


@dataclass
class CWindow:
    omega: int
    n: int
    k_max: int
    endpoints: list[tuple[AlgEndpoint, AlgEndpoint]]
    lower_k: int  # k attaining max x_k
    upper_k: int  # k attaining min y_k
    witness: Fraction | None = None
    separating: tuple[int, int] | None = None  # (k, j) with x_k >= y_j
    separation_cert: SignCert | None = None
    witness_cert: SignCert | None = None

    @property
    def nonempty(self) -> bool:
        return self.separating is None


def _simplest_between(lo: Fraction, hi: Fraction | None) -> Fraction:
    """Rational with the smallest denominator strictly inside (lo, hi); hi=None is +oo."""
    fl = math.floor(lo)
    if hi is None or fl + 1 < hi:
        return Fraction(fl + 1)
    # fl <= lo < hi <= fl + 1: write x = fl + 1/y and recurse on y
    upper = None if lo == fl else 1 / (lo - fl)
    return fl + 1 / _simplest_between(1 / (hi - fl), upper)


def window(omega: int, n: int, k_max: int | None = None, *, with_witness: bool = True) -> CWindow:
    k_max = resolve_k_max(omega, k_max)
    ends = [roots(p, n) for p in all_params(omega, k_max)]
    lo_i = 0
    hi_i = 0
    for i in range(1, len(ends)):
        if ends[i][0].compare(ends[lo_i][0]) > 0:
            lo_i = i
        if ends[i][1].compare(ends[hi_i][1]) < 0:
            hi_i = i
    x, y = ends[lo_i][0], ends[hi_i][1]
    win = CWindow(omega, n, k_max, ends, lo_i + 1, hi_i + 1)
    A, B, C, uu, vv = x.minus(y)
    s, cert = sqrtsum_sign_at(A, B, C, uu, vv, claim="x_k - y_j", domain={"omega": omega, "n": n, "pair": [lo_i + 1, hi_i + 1]})
    if s >= 0:
        win.separating = (lo_i + 1, hi_i + 1)
        cert.claim = "x_k - y_j >= 0 (empty window)"
        cert.witness["kind"] = "separation"
        win.separation_cert = cert
        return win
    if with_witness:
        win.witness = choose_witness(win)
        win.witness_cert = witness_verify(omega, n, win.witness, k_max)
        if not win.witness_cert.ok:
            raise ArithmeticError(f"witness {win.witness} failed at omega={omega}, n={n}")
    return win


def choose_witness(win: CWindow) -> Fraction:
    x = win.endpoints[win.lower_k - 1][0]
    y = win.endpoints[win.upper_k - 1][1]
    bits = 64
    while True:
        _, x_hi = x.bounds(bits)
        y_lo, _ = y.bounds(bits)
        if x_hi < y_lo:
            break
        bits *= 2
    mid = x.center if win.lower_k == win.upper_k else (x_hi + y_lo) / 2
    cand = mid.limit_denominator(WITNESS_MAX_DEN)
    if x_hi < cand < y_lo and _quadratics_negative(win.omega, win.n, cand, win.k_max):
        return cand
    cand = _simplest_between(x_hi, y_lo)
    if not _quadratics_negative(win.omega, win.n, cand, win.k_max):
        raise ArithmeticError("rational witness inside certified bounds failed verification")
    return cand


def _quadratics_negative(omega: int, n: int, c: Fraction, k_max: int) -> bool:
    return all(quadratic_value(p, n, c) < 0 for p in all_params(omega, k_max))


def witness_verify(omega: int, n: int, c: Fraction, k_max: int | None = None) -> SignCert:
    """Square-root-free check that every quadratic in c is strictly negative at c."""
    k_max = resolve_k_max(omega, k_max)
    c = Fraction(c)
    t0 = time.perf_counter()
    values = [quadratic_value(p, n, c) for p in all_params(omega, k_max)]
    sign = -1 if all(v < 0 for v in values) else None
    cert = SignCert(
        "quadratic_k(c) < 0 for all k <= k_max",
        {"omega": omega, "k_max": k_max, "n_range": [n, n]},
        POINTWISE,
        sign,
        {"kind": "quadratic", "c": str(c), "values": [str(v) for v in values]},
        wall_time_ms=round((time.perf_counter() - t0) * 1000, 3),
    )
    cert.verified = sign is not None and replay_certificate(cert)
    return cert


# -- certificates on the ray n >= 2 omega + 6 ---------------------------------------

_RAY_CLAIMS = {
    "d_k > 0": (lambda p: d(p), 1),
    "nu_k - n + 1 > 0": (lambda p: nu_gap(p), 1),
    "U_k < 0": (lambda p: U(p), -1),
    "Delta_k > 0": (lambda p: delta(p), 1),
}


def _ray_cert(claim: str, p: SpectralParams, n0: int) -> SignCert:
    build, _ = _RAY_CLAIMS[claim]
    expr = build(p)
    dom = {"omega": p.omega, "k": p.k, "n_range": [n0, None]}
    if isinstance(expr, RatFunc):
        cert = ratfunc_sign_on_ray(expr, n0, claim, dom)
    else:
        cert = poly_sign_on_ray(expr, n0, claim, dom)
    cert.witness["kind"] = "ray"
    cert.verified = cert.sign is not None and replay_certificate(cert)
    return cert


def certify_lemma_poly(omega: int, k_max: int | None = None, n0: int | None = None) -> LemmaReport:
    """d_k > 0, nu_k - n + 1 > 0 and U_k < 0 on n >= 2omega+6, for every k.

    Together (with n > 2, nu_k > 0) they give u_k - (n-2)^2 nu_k^2 / d_k < 0,
    because U_k = (nu_k - n + 1) d_k (n-2)/nu_k * (that quantity).
    """
    k_max = resolve_k_max(omega, k_max)
    n0 = min_dimension(omega) if n0 is None else n0
    t0 = time.perf_counter()
    report = LemmaReport("lemma-poly", {"omega": omega, "k_max": k_max, "n0": n0})
    for p in all_params(omega, k_max):
        for claim in ("d_k > 0", "nu_k - n + 1 > 0", "U_k < 0"):
            cert = _ray_cert(claim, p, n0)
            report.certificates.append(cert)
            expected = _RAY_CLAIMS[claim][1]
            if cert.sign is None:
                if cert.witness.get("distinct_roots_above_n0", 0) > 0:
                    report.demote(FALSIFIED)
                    report.falsified = report.falsified or (omega, n0)
                else:
                    report.demote(INCONCLUSIVE, f"omega={omega} k={p.k}: {claim}")
            elif cert.sign != expected:
                report.demote(FALSIFIED)
                report.falsified = report.falsified or (omega, n0)
    if report.verdict == CERTIFIED:
        report.notes.append(
            f"omega={omega}: d_k>0, nu_k-n+1>0, U_k<0 on n>={n0} for k<={k_max} "
            "imply u_k - (n-2)^2 nu_k^2/d_k < 0 and hence Delta_k > 0"
        )
    report.wall_time_ms = round((time.perf_counter() - t0) * 1000, 3)
    return report


# -- tail: rational minorants of sqrt(Delta_k) -----------------------------------------


@dataclass(frozen=True)
class Minorant:
    """L(n) = rho * n + sigma with 0 < L <= sqrt(Delta_k) on the tail."""

    params: SpectralParams
    rho: Fraction
    sigma: Fraction

    def poly(self) -> UniPoly:
        return UniPoly((self.sigma, self.rho))


def _minorant_certs(p: SpectralParams, L: Minorant, n_tail: int) -> list[SignCert]:
    dom = {"omega": p.omega, "k": p.k, "n_range": [n_tail, None]}
    lp = L.poly()
    pos = poly_sign_on_ray(lp, n_tail, "L_k > 0", dict(dom))
    gap = ratfunc_sign_on_ray(delta(p) - RatFunc.from_poly(lp * lp), n_tail, "Delta_k - L_k^2 > 0", dict(dom))
    return [pos, gap]


def _floor_scaled(x: Fraction, den: int) -> Fraction:
    return Fraction(math.floor(x * den), den)


def find_minorant(p: SpectralParams, n_tail: int) -> tuple[Minorant, list[SignCert]] | None:
    """Search L = rho n + sigma with rho just below sqrt(a_k) and sigma near b_k / (2 rho)."""
    dec = delta_partial_fractions(p)
    a, b = dec.a, dec.b
    for den in (10**6, 10**12):
        rho = Fraction(math.isqrt(math.floor(a * den * den)), den)  # <= sqrt(a)
        if rho <= 0:
            continue
        base_sigma = _floor_scaled(b / (2 * rho), den)
        for slack in (Fraction(0), Fraction(1, 16), Fraction(1, 4), Fraction(1), Fraction(4), Fraction(16), Fraction(64)):
            L = Minorant(p, rho, base_sigma - slack)
            if L.poly()(n_tail) <= 0:
                continue
            certs = _minorant_certs(p, L, n_tail)
            if all(c.sign == 1 and c.verified for c in certs):
                return L, certs
    return None


def pair_expression(pk: SpectralParams, pj: SpectralParams, Lk: Minorant, Lj: Minorant) -> UniPoly:
    """(n-2)(d_j - d_k) + d_k L_j + d_j L_k; positive implies x_j < y_k."""
    dk, dj = d(pk), d(pj)
    return (N - 2) * (dj - dk) + dk * Lj.poly() + dj * Lk.poly()


def tail_pair_cert(pk: SpectralParams, pj: SpectralParams, Lk: Minorant, Lj: Minorant, n_tail: int, minorant_certs: dict[int, list[SignCert]]) -> SignCert:
    dom = {"omega": pk.omega, "pair": [pk.k, pj.k], "n_range": [n_tail, None]}
    order = poly_sign_on_ray(d(pk) - d(pj), n_tail, "d_k - d_j > 0", dict(dom))
    cross = poly_sign_on_ray(pair_expression(pk, pj, Lk, Lj), n_tail, "(n-2)(d_j-d_k) + d_k L_j + d_j L_k > 0", dict(dom))
    children = minorant_certs[pk.k] + minorant_certs[pj.k] + [order, cross]
    ok = all(c.sign == 1 and c.verified for c in children)
    cert = SignCert(
        "x_k < y_j and x_j < y_k",
        dom,
        COMPOSITE,
        1 if ok else None,
        {
            "kind": "tail-pair",
            "L_k": [str(Lk.rho), str(Lk.sigma)],
            "L_j": [str(Lj.rho), str(Lj.sigma)],
        },
        wall_time_ms=round(sum(c.wall_time_ms for c in children), 3),
        children=children,
    )
    cert.verified = ok and replay_certificate(cert)
    return cert


def certify_tail(omega: int, n_tail: int, k_max: int | None = None) -> LemmaReport:
    k_max = resolve_k_max(omega, k_max)
    t0 = time.perf_counter()
    report = LemmaReport("tail", {"omega": omega, "k_max": k_max, "n_tail": n_tail})
    params = all_params(omega, k_max)
    for p in params:
        cert = _ray_cert("Delta_k > 0", p, n_tail)
        report.certificates.append(cert)
        if not cert.ok or cert.sign != 1:
            report.demote(INCONCLUSIVE, f"omega={omega} k={p.k}: Delta_k > 0 on n >= {n_tail}")
    if len(params) > 1:
        minorants: dict[int, Minorant] = {}
        m_certs: dict[int, list[SignCert]] = {}
        for p in params:
            found = find_minorant(p, n_tail)
            if found is None:
                report.demote(INCONCLUSIVE, f"omega={omega} k={p.k}: no rational minorant of sqrt(Delta_k) on n >= {n_tail}")
                continue
            minorants[p.k], m_certs[p.k] = found
        for i, pk in enumerate(params):
            for pj in params[i + 1 :]:
                if pk.k not in minorants or pj.k not in minorants:
                    continue
                cert = tail_pair_cert(pk, pj, minorants[pk.k], minorants[pj.k], n_tail, m_certs)
                report.certificates.append(cert)
                if not cert.ok:
                    report.demote(INCONCLUSIVE, f"omega={omega} pair=({pk.k},{pj.k}): minorant inequality not certified on n >= {n_tail}")
    report.wall_time_ms = round((time.perf_counter() - t0) * 1000, 3)
    return report


def certify_exhaustive(omega: int, n_lo: int, n_hi: int, k_max: int | None = None) -> LemmaReport:
    k_max = resolve_k_max(omega, k_max)
    t0 = time.perf_counter()
    report = LemmaReport("exhaustive", {"omega": omega, "k_max": k_max, "n_range": [n_lo, n_hi]})
    points: list[tuple[int, Fraction]] = []
    for n in range(n_lo, n_hi + 1):
        win = window(omega, n, k_max)
        if not win.nonempty:
            report.certificates.append(win.separation_cert)
            report.demote(FALSIFIED)
            report.falsified = (omega, n)
            break
        points.append((n, win.witness))
    if points:
        cert = SignCert(
            "window nonempty: quadratic_k(c_n) < 0 for all k <= k_max",
            {"omega": omega, "k_max": k_max, "n_range": [points[0][0], points[-1][0]]},
            POINTWISE,
            -1,
            {"kind": "window-witnesses", "points": [[n, str(c)] for n, c in points]},
            wall_time_ms=round((time.perf_counter() - t0) * 1000, 3),
        )
        cert.verified = replay_certificate(cert)
        report.certificates.insert(0, cert)
        report.witnesses[omega] = points
    report.wall_time_ms = round((time.perf_counter() - t0) * 1000, 3)
    return report


def certify_intersection(omega: int, n_tail: int = 200, n_max_exhaustive: int = 200, k_max: int | None = None) -> LemmaReport:
    """Window nonempty for every integer n >= 2omega+6.

    Integers up to n_max_exhaustive each get an explicit rational witness; the
    ray n >= n_tail is covered by minorant certificates. A gap between the two
    ranges is filled exhaustively.
    """
    lo = min_dimension(omega)
    if n_max_exhaustive < lo:
        raise ValueError(f"n_max_exhaustive must be >= 2*omega+6 = {lo}")
    if n_tail < n_max_exhaustive:
        raise ValueError("n_tail must be >= n_max_exhaustive")
    k_max = resolve_k_max(omega, k_max)
    report = LemmaReport("intersection", {"omega": omega, "k_max": k_max, "n_tail": n_tail, "n_max_exhaustive": n_max_exhaustive})
    report.merge(certify_exhaustive(omega, lo, max(n_max_exhaustive, n_tail - 1), k_max))
    if report.verdict != FALSIFIED:
        report.merge(certify_tail(omega, n_tail, k_max))
    return report


# -- falsification scan ---------------------------------------------------------------


@dataclass
class FalsifyResult:
    omega: int
    n_start: int
    n_end: int
    k_max: int
    first_empty: int | None = None
    separating: tuple[int, int] | None = None
    cert: SignCert | None = None
    scanned: int = 0
    endpoints: list[dict] = field(default_factory=list)


def falsify_scan(omega: int, n_start: int, n_end: int, k_max: int | None = None) -> FalsifyResult:
    k_max = resolve_k_max(omega, k_max)
    if n_start < min_dimension(omega):
        raise ValueError(f"n_start must be >= 2*omega+6 = {min_dimension(omega)}")
    if n_end < n_start:
        raise ValueError("empty n range")
    res = FalsifyResult(omega, n_start, n_end, k_max)
    for n in range(n_start, n_end + 1):
        res.scanned += 1
        win = window(omega, n, k_max, with_witness=False)
        if not win.nonempty:
            res.first_empty = n
            res.separating = win.separating
            res.cert = win.separation_cert
            res.endpoints = [e.to_json() for pair in win.endpoints for e in pair]
            break
    return res


# -- replay with claim binding ---------------------------------------------------------


def _bind_ray(cert: SignCert) -> bool:
    build, expected_sign = _RAY_CLAIMS[cert.claim]
    dom = cert.domain
    p = SpectralParams(int(dom["omega"]), int(dom["k"]))
    expr = build(p)
    n0 = Fraction(dom["n_range"][0])
    if cert.sign != expected_sign or Fraction(cert.witness["n0"]) != n0:
        return False
    if isinstance(expr, RatFunc):
        return cert.witness.get("ratfunc") == expr.to_json()
    return cert.witness.get("poly") == expr.to_json()


def _bind_tail_pair(cert: SignCert) -> bool:
    dom = cert.domain
    omega = int(dom["omega"])
    k, j = (int(x) for x in dom["pair"])
    n0 = Fraction(dom["n_range"][0])
    pk, pj = SpectralParams(omega, k), SpectralParams(omega, j)
    Lk = Minorant(pk, *(Fraction(x) for x in cert.witness["L_k"]))
    Lj = Minorant(pj, *(Fraction(x) for x in cert.witness["L_j"]))
    expected = [
        ("L_k > 0", Lk.poly()),
        ("Delta_k - L_k^2 > 0", delta(pk) - RatFunc.from_poly(Lk.poly() ** 2)),
        ("L_k > 0", Lj.poly()),
        ("Delta_k - L_k^2 > 0", delta(pj) - RatFunc.from_poly(Lj.poly() ** 2)),
        ("d_k - d_j > 0", d(pk) - d(pj)),
        ("(n-2)(d_j-d_k) + d_k L_j + d_j L_k > 0", pair_expression(pk, pj, Lk, Lj)),
    ]
    if len(cert.children) != len(expected) or cert.sign != 1:
        return False
    for child, (claim, expr) in zip(cert.children, expected):
        if child.claim != claim or child.sign != 1 or Fraction(child.witness["n0"]) != n0:
            return False
        key = "ratfunc" if isinstance(expr, RatFunc) else "poly"
        if child.witness.get(key) != expr.to_json():
            return False
        if not replay(child):
            return False
    return True


def _bind_quadratic(cert: SignCert) -> bool:
    dom = cert.domain
    omega, k_max = int(dom["omega"]), int(dom["k_max"])
    n = int(dom["n_range"][0])
    c = Fraction(cert.witness["c"])
    values = [quadratic_value(p, n, c) for p in all_params(omega, k_max)]
    return cert.sign == -1 and all(v < 0 for v in values)


def _bind_window_witnesses(cert: SignCert) -> bool:
    dom = cert.domain
    omega, k_max = int(dom["omega"]), int(dom["k_max"])
    lo, hi = (int(x) for x in dom["n_range"])
    pts = cert.witness["points"]
    if [int(n) for n, _ in pts] != list(range(lo, hi + 1)):
        return False
    return cert.sign == -1 and all(_quadratics_negative(omega, int(n), Fraction(c), k_max) for n, c in pts)


def _bind_separation(cert: SignCert) -> bool:
    dom = cert.domain
    omega, n = int(dom["omega"]), int(dom["n"])
    k, j = (int(x) for x in dom["pair"])
    x = roots(SpectralParams(omega, k), n)[0]
    y = roots(SpectralParams(omega, j), n)[1]
    A, B, C, uu, vv = x.minus(y)
    w = cert.witness
    if [Fraction(w[key]) for key in ("A", "B", "C", "u", "v")] != [A, B, C, uu, vv]:
        return False
    return cert.sign is not None and cert.sign >= 0 and replay(cert)


def replay_certificate(cert: SignCert) -> bool:
    """Replay a certificate and check it speaks about the expression its claim names."""
    try:
        kind = cert.witness.get("kind")
        if kind == "ray":
            return _bind_ray(cert) and replay(cert)
        if kind == "tail-pair":
            return _bind_tail_pair(cert)
        if kind == "quadratic":
            return _bind_quadratic(cert)
        if kind == "window-witnesses":
            return _bind_window_witnesses(cert)
        if kind == "separation":
            return _bind_separation(cert)
        return replay(cert)
    except (KeyError, ValueError, TypeError, IndexError, ArithmeticError):
        return False


def replay_report(report: LemmaReport) -> list[str]:
    """Claims whose certificates fail to replay (empty list means all good)."""
    bad = []
    for cert in report.certificates:
        if not replay_certificate(cert):
            bad.append(f"{cert.claim} @ {cert.domain}")
    return bad


__all__ = [
    "AlgEndpoint",
    "CWindow",
    "DiscriminantError",
    "FalsifyResult",
    "Minorant",
    "certify_exhaustive",
    "certify_intersection",
    "certify_lemma_poly",
    "certify_tail",
    "choose_witness",
    "falsify_scan",
    "find_minorant",
    "min_dimension",
    "point_data",
    "quadratic_value",
    "replay_certificate",
    "replay_report",
    "resolve_k_max",
    "roots",
    "sgn",
    "window",
    "witness_verify",
]
