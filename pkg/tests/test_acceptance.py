"""Acceptance criteria, one test each; every test prints a single PASS/FAIL line."""

from __future__ import annotations

import time
from fractions import Fraction as F

import mpmath
import pytest

import direct
from yamabe_cert.beta import leading_constant_check, verify_recurrences
from yamabe_cert.cli import RunConfig, cmd_certify, cmd_sweep_corollary
from yamabe_cert.feasibility import certify_lemma_poly, falsify_scan, replay_certificate, replay_report, window, witness_verify
from yamabe_cert.oracle import crosscheck
from yamabe_cert.report import CERTIFIED
from yamabe_cert.spectral import SpectralParams, all_params, d, delta, expansion_check, p_prime_check, u

RUNTIME_BUDGET_S = 600
ORACLE_DIGITS = 60
SPHERE_RESIDUAL_TOL = mpmath.mpf(10) ** -25


def _line(capsys, number: int, title: str, ok: bool, detail: str = "") -> None:
    with capsys.disabled():
        print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}" + (f" ({detail})" if detail else ""))


@pytest.fixture(scope="module")
def sweep():
    t0 = time.perf_counter()
    report = cmd_certify(RunConfig(3, 15, n_exhaustive_max=200, n_tail=200, precision=ORACLE_DIGITS, threads=8))
    return report, time.perf_counter() - t0


def test_criterion_1_window_sweep(sweep, capsys):
    report, elapsed = sweep
    ok = report.verdict == CERTIFIED and elapsed < RUNTIME_BUDGET_S
    for omega in range(3, 16):
        ns = [n for n, _ in report.witnesses.get(omega, [])]
        ok &= ns == list(range(2 * omega + 6, 201))
        ok &= all(witness_verify(omega, n, c).ok for n, c in report.witnesses[omega][:: 17])
        pairs = {tuple(c.domain["pair"]) for c in report.certificates if c.witness.get("kind") == "tail-pair" and c.domain["omega"] == omega}
        ks = [p.k for p in all_params(omega)]
        ok &= pairs == {(k, j) for k in ks for j in ks if k < j}
    ok &= replay_report(report) == []
    _line(capsys, 1, "certify omega 3..15 is CERTIFIED with witnesses to 200 and replaying tail pairs", ok, f"{elapsed:.1f}s")
    assert ok


def test_criterion_2_lemma_poly(capsys):
    ok = True
    for omega in range(3, 16):
        rep = certify_lemma_poly(omega)
        ok &= rep.verdict == CERTIFIED and len(rep.certificates) == 3 * (omega // 2)
        ok &= all(c.ok and replay_certificate(c) for c in rep.certificates)
    _line(capsys, 2, "d_k > 0, nu_k-n+1 > 0, U_k < 0 on the ray for omega 3..15", ok)
    assert ok


def test_criterion_3_falsify_sixteen(capsys):
    res = falsify_scan(16, 38, 2000)
    ok = res.first_empty is not None and res.first_empty >= 38 and res.separating is not None
    ok &= res.cert is not None and res.cert.sign is not None and res.cert.sign >= 0 and replay_certificate(res.cert)
    if ok:
        ok &= window(16, res.first_empty - 1).nonempty
    _line(capsys, 3, "omega=16 has an empty window", ok, f"first n={res.first_empty}, pair x_{res.separating[0]} >= y_{res.separating[1]}" if ok else "")
    assert ok


def test_criterion_4_recurrences(capsys):
    rep = verify_recurrences(30)
    _line(capsys, 4, "integral recurrences exact for a <= 30", rep.passed, f"{rep.checked} relations")
    assert rep.passed


def test_criterion_5_expansion_identity(capsys):
    bad = [(w, n) for w in range(3, 16) for n in range(2 * w + 7, 61) if not expansion_check(w, n).passed]
    _line(capsys, 5, "f^2 coefficient identity for omega 3..15, n up to 60", not bad, f"failures {bad[:5]}" if bad else "")
    assert not bad


def test_criterion_6_p_prime(capsys):
    bad = [w for w in range(3, 16) if not p_prime_check(w).passed]
    _line(capsys, 6, "derivative of P matches the printed form coefficientwise", not bad)
    assert not bad


def test_criterion_7_spot_values(capsys):
    p = SpectralParams(3, 1)
    ok = u(p)(12) == F(-351, 70) == direct.u(3, 1, 12)
    ok &= d(p)(12) == 28160 == direct.d(3, 1, 12)
    ok &= delta(p)(12) == F(17548, 91) == direct.delta(3, 1, 12)
    win = window(3, 12)
    ok &= win.witness == F(5, 1408) and witness_verify(3, 12, F(5, 1408)).ok
    _line(capsys, 7, "spot values u_1, d_1, Delta_1 and witness 5/1408 at omega=3, n=12", ok)
    assert ok


def test_criterion_8_corollary(capsys):
    rep = cmd_sweep_corollary()
    records = {r["n"]: r for r in rep.config["records"]}
    ok = rep.verdict == CERTIFIED and sorted(records) == list(range(3, 38))
    for n, r in records.items():
        ok &= r["certified"] == r["omega_in_scope"] == list(range(3, (n - 6) // 2 + 1))
        ok &= bool(r["deferred"])
        ok &= all(w <= 15 for w in r["omega_in_scope"])
    _line(capsys, 8, "corollary sweep n=3..37 with certified windows and deferral records", ok)
    assert ok


def test_criterion_9_oracle(sweep, capsys):
    report, _ = sweep
    res = crosscheck(report, ORACLE_DIGITS, strict=False)
    worst = max(abs(leading_constant_check(n, ORACLE_DIGITS).sphere_residual) for n in range(3, 41))
    printed = [float(leading_constant_check(n, ORACLE_DIGITS).printed_residual) for n in (3, 4, 10, 40)]
    ok = res.agree and worst < SPHERE_RESIDUAL_TOL
    _line(
        capsys,
        9,
        "60-digit cross-check agrees; sphere-constant residual below 1e-25",
        ok,
        f"{res.checked} signs, {len(res.disagreements)} disagreements, worst residual {mpmath.nstr(worst, 3)}, "
        f"printed-form residuals (logged) {[f'{r:.3g}' for r in printed]}",
    )
    assert ok
