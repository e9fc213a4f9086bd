"""Command-line front end: sweeps, falsification scans, window queries and replay.

Exit codes: 0 certified, 1 falsified, 2 inconclusive, 3 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from pathlib import Path

from .beta import leading_constant_check, verify_recurrences
from .feasibility import (
    certify_intersection,
    certify_lemma_poly,
    falsify_scan,
    min_dimension,
    replay_report,
    resolve_k_max,
    window,
    witness_verify,
)
from .oracle import DEFAULT_PRECISION, OracleDisagreement, crosscheck, eval_hp, threshold
from .report import CERTIFIED, FALSIFIED, INCONCLUSIVE, LemmaReport, write_report
from .spectral import expansion_check, p_prime_check

EXIT_CERTIFIED = 0
EXIT_FALSIFIED = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 3

EXIT_CODES = {CERTIFIED: EXIT_CERTIFIED, FALSIFIED: EXIT_FALSIFIED, INCONCLUSIVE: EXIT_INCONCLUSIVE}

OMEGA_MAX_CERTIFIED = 15
COROLLARY_DIMENSIONS = (3, 37)


class UsageError(ValueError):
    pass


def parse_range(text: str) -> tuple[int, int]:
    """'3..15' -> (3, 15); '7' -> (7, 7)."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            a, b = int(lo), int(hi)
        else:
            a = b = int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected A..B or a single integer") from None
    if b < a:
        raise UsageError(f"empty range {text!r}")
    return a, b


def resolve_precision(flag: int | None) -> int:
    env = os.environ.get("YC_PRECISION")
    if env:
        try:
            prec = int(env)
        except ValueError:
            raise UsageError(f"YC_PRECISION must be an integer, got {env!r}") from None
    elif flag is not None:
        prec = flag
    else:
        prec = DEFAULT_PRECISION
    if prec < 30:
        raise UsageError(f"precision must be >= 30 digits, got {prec}")
    return prec


@dataclass(frozen=True)
class RunConfig:
    omega_lo: int
    omega_hi: int
    n_exhaustive_max: int = 200
    n_tail: int = 200
    q: int | None = None
    precision: int = DEFAULT_PRECISION
    fmt: str = "json"
    threads: int = 1

    def __post_init__(self):
        if self.omega_lo <= 2:
            raise UsageError("omega <= 2 is out of scope for this tool")
        if self.omega_hi < self.omega_lo:
            raise UsageError("empty omega range")
        if self.n_exhaustive_max < min_dimension(self.omega_lo):
            raise UsageError(f"--n-max must be >= 2*omega+6 = {min_dimension(self.omega_lo)}")
        if self.n_tail < self.n_exhaustive_max:
            raise UsageError("--n-tail must be >= --n-max")
        if self.precision < 30:
            raise UsageError("precision must be >= 30 digits")
        if self.q is not None and self.q < 1:
            raise UsageError("--q must be >= 1")
        if self.threads < 1:
            raise UsageError("--threads must be >= 1")
        if self.fmt not in ("json", "md", "both"):
            raise UsageError("--format must be json, md or both")

    def echo(self) -> dict:
        """Configuration recorded in reports; the thread count is left out on purpose."""
        out = asdict(self)
        del out["threads"]
        del out["fmt"]
        return out


# -- certify --------------------------------------------------------------------


def _certify_one(omega: int, cfg: RunConfig) -> LemmaReport:
    k_max = resolve_k_max(omega, cfg.q)
    n_max = max(cfg.n_exhaustive_max, min_dimension(omega))
    n_tail = max(cfg.n_tail, n_max)
    rep = LemmaReport("certify", {"omega": omega, "k_max": k_max})
    rep.merge(certify_lemma_poly(omega, k_max))
    rep.merge(certify_intersection(omega, n_tail=n_tail, n_max_exhaustive=n_max, k_max=k_max))
    return rep


def cmd_certify(cfg: RunConfig) -> LemmaReport:
    omegas = list(range(cfg.omega_lo, cfg.omega_hi + 1))
    t0 = time.perf_counter()
    if cfg.threads > 1 and len(omegas) > 1:
        with ProcessPoolExecutor(max_workers=min(cfg.threads, len(omegas))) as pool:
            parts = list(pool.map(_certify_one, omegas, [cfg] * len(omegas)))
    else:
        parts = [_certify_one(w, cfg) for w in omegas]
    report = LemmaReport("certify", cfg.echo())
    for part in parts:  # pool.map keeps input order, so the reduction is deterministic
        report.merge(part)
    failed = [c for c in report.certificates if not c.ok]
    for cert in failed:
        if report.verdict == CERTIFIED:
            report.demote(INCONCLUSIVE, f"certificate does not replay: {cert.claim} @ {cert.domain}")
    try:
        res = crosscheck(report, cfg.precision)
        report.notes.append(f"numeric cross-check at {cfg.precision} digits: {res.checked} signs, 0 disagreements")
    except OracleDisagreement as exc:
        report.demote(INCONCLUSIVE, f"numeric cross-check disagreement: {exc}")
    report.wall_time_ms = round((time.perf_counter() - t0) * 1000, 3)
    return report


# -- corollary sweep ------------------------------------------------------------------


def cmd_sweep_corollary(n_lo: int = COROLLARY_DIMENSIONS[0], n_hi: int = COROLLARY_DIMENSIONS[1]) -> LemmaReport:
    t0 = time.perf_counter()
    report = LemmaReport("corollary", {"n_range": [n_lo, n_hi]})
    records = []
    for n in range(n_lo, n_hi + 1):
        top = (n - 6) // 2
        in_scope = list(range(3, top + 1))
        rec = {"n": n, "omega_in_scope": in_scope, "certified": [], "deferred": []}
        rec["deferred"].append("omega <= 2: deferred (outside this tool)")
        rec["deferred"].append(f"omega > {max(top, 2)}: deferred (n < 2 omega + 6)")
        if not in_scope:
            rec["deferred"][0] = "no omega in scope: dimension deferred entirely"
        if top > OMEGA_MAX_CERTIFIED:
            report.demote(INCONCLUSIVE, f"n={n}: omega range exceeds {OMEGA_MAX_CERTIFIED}")
        for omega in in_scope:
            win = window(omega, n)
            if not win.nonempty:
                report.certificates.append(win.separation_cert)
                report.demote(FALSIFIED)
                report.falsified = report.falsified or (omega, n)
                continue
            cert = win.witness_cert
            report.certificates.append(cert)
            report.witnesses.setdefault(omega, []).append((n, win.witness))
            if cert.ok:
                rec["certified"].append(omega)
            else:
                report.demote(INCONCLUSIVE, f"n={n} omega={omega}: witness does not replay")
        records.append(rec)
        report.notes.append(
            f"n={n}: omega in scope {in_scope[0] if in_scope else '-'}..{in_scope[-1] if in_scope else '-'}, "
            f"certified {len(rec['certified'])}/{len(in_scope)}; " + "; ".join(rec["deferred"])
        )
    report.config["records"] = records
    report.config["max_omega_in_scope"] = max(0, (n_hi - 6) // 2)
    report.wall_time_ms = round((time.perf_counter() - t0) * 1000, 3)
    return report


# -- identity checks -----------------------------------------------------------------


def cmd_identities(a_max: int, omega_lo: int, omega_hi: int, n_hi: int, precision: int) -> tuple[bool, list[str]]:
    lines = []
    ok = True
    rec = verify_recurrences(a_max)
    ok &= rec.passed
    lines.append(f"recurrences a<={a_max}: {'PASS' if rec.passed else 'FAIL'} ({rec.checked} checked, {rec.skipped} skipped)")
    for omega in range(omega_lo, omega_hi + 1):
        pc = p_prime_check(omega)
        ok &= pc.passed
        bad = [n for n in range(2 * omega + 7, n_hi + 1) if not expansion_check(omega, n).passed]
        ok &= not bad
        lines.append(f"omega={omega}: P' {'PASS' if pc.passed else 'FAIL'}; expansion n={2 * omega + 7}..{n_hi} {'PASS' if not bad else f'FAIL at {bad}'}")
    for n in (3, 4, 10, 40):
        lc = leading_constant_check(n, precision)
        lines.append(f"leading constant n={n}: sphere residual {float(lc.sphere_residual):.3e}, printed residual {float(lc.printed_residual):.3e} (logged only)")
    return ok, lines


# -- argument handling -------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--precision", type=int, default=None, help="oracle digits (>= 30); YC_PRECISION overrides")
    p.add_argument("--format", dest="fmt", choices=("json", "md", "both"), default="json")
    p.add_argument("--out", type=Path, default=None, help="directory for report files")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="yamabe-cert", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("certify", help="certify the c-window for a range of omega")
    p.add_argument("--omega", required=True, help="A..B or a single value")
    p.add_argument("--n-max", type=int, default=200, help="largest n given an explicit witness")
    p.add_argument("--n-tail", type=int, default=None, help="start of the minorant tail (default: --n-max)")
    p.add_argument("--q", type=int, default=None, help="number of active components (default: floor(omega/2))")
    p.add_argument("--threads", type=int, default=1)
    _add_common(p)

    p = sub.add_parser("falsify", help="scan for the first n with an empty window")
    p.add_argument("--omega", type=int, required=True)
    p.add_argument("--n", default=None, help="A..B (default 2*omega+6..2000)")
    p.add_argument("--q", type=int, default=None)
    _add_common(p)

    p = sub.add_parser("window", help="print the c-window at one (omega, n)")
    p.add_argument("--omega", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--precision", type=int, default=None)

    p = sub.add_parser("corollary", help="sweep dimensions 3..37")
    _add_common(p)

    p = sub.add_parser("identities", help="integral recurrences, expansion coefficient and P' checks")
    p.add_argument("--a-max", type=int, default=30)
    p.add_argument("--omega", default="3..15")
    p.add_argument("--n-max", type=int, default=60)
    p.add_argument("--precision", type=int, default=None)

    p = sub.add_parser("threshold", help="n(n-1) w_n^(2/n) m^(2/n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--precision", type=int, default=None)

    p = sub.add_parser("verify", help="replay every certificate in a JSON report")
    p.add_argument("file", type=Path)
    return parser


def _emit(report: LemmaReport, args, stem: str) -> None:
    if args.out is not None:
        for path in write_report(report, args.out, args.fmt, stem):
            print(f"wrote {path}")


def _run(args) -> int:
    if args.command == "certify":
        lo, hi = parse_range(args.omega)
        cfg = RunConfig(
            lo,
            hi,
            n_exhaustive_max=args.n_max,
            n_tail=args.n_max if args.n_tail is None else args.n_tail,
            q=args.q,
            precision=resolve_precision(args.precision),
            fmt=args.fmt,
            threads=args.threads,
        )
        report = cmd_certify(cfg)
        _emit(report, args, "certify")
        for omega, pts in sorted(report.witnesses.items()):
            print(f"omega={omega}: {len(pts)} witnesses for n={pts[0][0]}..{pts[-1][0]}")
        for item in report.inconclusive:
            print(f"inconclusive: {item}")
        print(f"verdict: {report.verdict_label}")
        return EXIT_CODES[report.verdict]

    if args.command == "falsify":
        precision = resolve_precision(args.precision)
        if args.omega <= 2:
            raise UsageError("omega <= 2 is out of scope for this tool")
        lo, hi = parse_range(args.n) if args.n else (min_dimension(args.omega), 2000)
        if lo < min_dimension(args.omega):
            raise UsageError(f"n range must start at >= 2*omega+6 = {min_dimension(args.omega)}")
        res = falsify_scan(args.omega, lo, hi, resolve_k_max(args.omega, args.q))
        report = LemmaReport("falsify", {"omega": args.omega, "n_range": [lo, hi], "k_max": res.k_max})
        if res.first_empty is None:
            report.verdict = CERTIFIED
            report.notes.append(f"no empty window for n={lo}..{hi} ({res.scanned} values scanned)")
            print(f"omega={args.omega}: none found for n={lo}..{hi}")
            _emit(report, args, "falsify")
            return EXIT_CERTIFIED
        k, j = res.separating
        report.certificates.append(res.cert)
        report.verdict = FALSIFIED
        report.falsified = (args.omega, res.first_empty)
        report.config["separating_pair"] = [k, j]
        win = window(args.omega, res.first_empty, res.k_max, with_witness=False)
        x = eval_hp(win.endpoints[k - 1][0], res.first_empty, precision)
        y = eval_hp(win.endpoints[j - 1][1], res.first_empty, precision)
        print(f"omega={args.omega}: first empty window at n={res.first_empty}")
        print(f"separating pair: x_{k} = {mp_str(x.value)} >= y_{j} = {mp_str(y.value)}")
        _emit(report, args, "falsify")
        return EXIT_FALSIFIED

    if args.command == "window":
        precision = resolve_precision(args.precision)
        if args.omega <= 2:
            raise UsageError("omega <= 2 is out of scope for this tool")
        if args.n < min_dimension(args.omega):
            raise UsageError(f"n must be >= 2*omega+6 = {min_dimension(args.omega)}")
        win = window(args.omega, args.n, resolve_k_max(args.omega, args.q))
        for k, (x, y) in enumerate(win.endpoints, start=1):
            print(f"k={k}: x = {mp_str(eval_hp(x, args.n, precision).value)}, y = {mp_str(eval_hp(y, args.n, precision).value)}")
        if win.nonempty:
            print(f"window nonempty (binding x_{win.lower_k}, y_{win.upper_k}); witness c = {win.witness}")
            return EXIT_CERTIFIED
        print(f"window empty: x_{win.separating[0]} >= y_{win.separating[1]}")
        return EXIT_FALSIFIED

    if args.command == "corollary":
        resolve_precision(args.precision)
        report = cmd_sweep_corollary()
        _emit(report, args, "corollary")
        for note in report.notes:
            print(note)
        print(f"verdict: {report.verdict_label}")
        return EXIT_CODES[report.verdict]

    if args.command == "identities":
        lo, hi = parse_range(args.omega)
        if lo <= 2:
            raise UsageError("omega <= 2 is out of scope for this tool")
        ok, lines = cmd_identities(args.a_max, lo, hi, args.n_max, resolve_precision(args.precision))
        print("\n".join(lines))
        return EXIT_CERTIFIED if ok else EXIT_FALSIFIED

    if args.command == "threshold":
        if args.n < 3 or args.m < 1:
            raise UsageError("need n >= 3 and m >= 1")
        val = threshold(args.n, args.m, resolve_precision(args.precision))
        print(mp_str(val.value, 30))
        return EXIT_CERTIFIED

    if args.command == "verify":
        try:
            report = LemmaReport.load(args.file)
        except (OSError, ValueError, KeyError) as exc:
            raise UsageError(f"cannot read report {args.file}: {exc}") from None
        bad = replay_report(report)
        for item in bad:
            print(f"does not replay: {item}")
        print(f"{len(report.certificates) - len(bad)}/{len(report.certificates)} certificates replay; recorded verdict {report.verdict_label}")
        if bad:
            return EXIT_INCONCLUSIVE
        return EXIT_CODES[report.verdict]

    raise UsageError(f"unknown command {args.command}")


def mp_str(x, digits: int = 20) -> str:
    import mpmath

    return mpmath.nstr(x, digits)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else 0
    try:
        return _run(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
