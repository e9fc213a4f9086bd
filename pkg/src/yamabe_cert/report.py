"""Certificate bundles and their JSON / Markdown serializations."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

from .sign import SignCert

SCHEMA_VERSION = 1

CERTIFIED = "CERTIFIED"
FALSIFIED = "FALSIFIED"
INCONCLUSIVE = "INCONCLUSIVE"

_RANK = {CERTIFIED: 0, INCONCLUSIVE: 1, FALSIFIED: 2}


@dataclass
class LemmaReport:
    """Certified claims for a range of omega, plus the rational witnesses found."""

    kind: str
    config: dict[str, Any]
    certificates: list[SignCert] = field(default_factory=list)
    witnesses: dict[int, list[tuple[int, Fraction]]] = field(default_factory=dict)
    verdict: str = CERTIFIED
    falsified: tuple[int, int] | None = None
    inconclusive: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    wall_time_ms: float = 0.0

    def demote(self, verdict: str, item: str | None = None) -> None:
        if _RANK[verdict] > _RANK[self.verdict]:
            self.verdict = verdict
        if verdict == INCONCLUSIVE and item:
            self.inconclusive.append(item)

    def merge(self, other: LemmaReport) -> None:
        self.certificates.extend(other.certificates)
        for w, pts in other.witnesses.items():
            self.witnesses.setdefault(w, []).extend(pts)
        self.inconclusive.extend(other.inconclusive)
        self.notes.extend(other.notes)
        if _RANK[other.verdict] > _RANK[self.verdict]:
            self.verdict = other.verdict
        if other.falsified and (self.falsified is None or other.falsified < self.falsified):
            self.falsified = other.falsified
        self.wall_time_ms = round(self.wall_time_ms + other.wall_time_ms, 3)

    @property
    def verdict_label(self) -> str:
        if self.verdict == FALSIFIED and self.falsified:
            return f"FALSIFIED(omega={self.falsified[0]}, n={self.falsified[1]})"
        if self.verdict == INCONCLUSIVE:
            return f"INCONCLUSIVE({len(self.inconclusive)} items)"
        return self.verdict

    # -- JSON ---------------------------------------------------------------------
    def to_json(self, *, timing: bool = True) -> dict[str, Any]:
        certs = [c.to_json() for c in self.certificates]
        if not timing:
            certs = [_strip_timing(c) for c in certs]
        out = {
            "schema": SCHEMA_VERSION,
            "kind": self.kind,
            "config": self.config,
            "certificates": certs,
            "witnesses": {str(w): [[n, str(c)] for n, c in pts] for w, pts in sorted(self.witnesses.items())},
            "verdict": self.verdict,
            "falsified": list(self.falsified) if self.falsified else None,
            "inconclusive": self.inconclusive,
            "notes": self.notes,
        }
        if timing:
            out["wall_time_ms"] = self.wall_time_ms
        return out

    def dumps(self, *, timing: bool = True) -> str:
        return json.dumps(self.to_json(timing=timing), indent=1, sort_keys=True)

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> LemmaReport:
        if data.get("schema") != SCHEMA_VERSION:
            raise ValueError(f"unsupported report schema {data.get('schema')!r}")
        return cls(
            kind=data["kind"],
            config=data["config"],
            certificates=[SignCert.from_json(c) for c in data["certificates"]],
            witnesses={int(w): [(int(n), Fraction(c)) for n, c in pts] for w, pts in data.get("witnesses", {}).items()},
            verdict=data["verdict"],
            falsified=tuple(data["falsified"]) if data.get("falsified") else None,
            inconclusive=list(data.get("inconclusive", [])),
            notes=list(data.get("notes", [])),
            wall_time_ms=data.get("wall_time_ms", 0.0),
        )

    @classmethod
    def load(cls, path: str | Path) -> LemmaReport:
        return cls.from_json(json.loads(Path(path).read_text(encoding="utf-8")))

    # -- Markdown -----------------------------------------------------------------
    def to_markdown(self) -> str:
        lines = [f"# {self.kind} report", "", f"**Verdict:** {self.verdict_label}", ""]
        lines += ["## Configuration", ""]
        for key in sorted(self.config):
            lines.append(f"- `{key}`: {self.config[key]}")
        lines.append("")
        if self.witnesses:
            lines += ["## Witness constants c", "", "| omega | n range | points | c at first n | c at last n |", "|---|---|---|---|---|"]
            for w, pts in sorted(self.witnesses.items()):
                pts = sorted(pts)
                lines.append(f"| {w} | {pts[0][0]}..{pts[-1][0]} | {len(pts)} | {pts[0][1]} | {pts[-1][1]} |")
            lines.append("")
        lines += ["## Certificates", "", "| claim | domain | method | sign | verified |", "|---|---|---|---|---|"]
        for c in self.certificates:
            dom = ", ".join(f"{k}={v}" for k, v in sorted(c.domain.items()))
            lines.append(f"| {c.claim} | {dom} | {c.method} | {c.sign} | {c.verified} |")
        lines.append("")
        if self.inconclusive:
            lines += ["## Inconclusive items", ""] + [f"- {item}" for item in self.inconclusive] + [""]
        if self.notes:
            lines += ["## Notes", ""] + [f"- {note}" for note in self.notes] + [""]
        return "\n".join(lines)


def _strip_timing(cert: dict[str, Any]) -> dict[str, Any]:
    out = {k: v for k, v in cert.items() if k != "wall_time_ms"}
    if "children" in out:
        out["children"] = [_strip_timing(c) for c in out["children"]]
    return out


def write_report(report: LemmaReport, out_dir: str | Path, fmt: str = "json", stem: str | None = None) -> list[Path]:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    stem = stem or report.kind
    written = []
    if fmt in ("json", "both"):
        path = out_dir / f"{stem}.json"
        path.write_text(report.dumps() + "\n", encoding="utf-8")
        written.append(path)
    if fmt in ("md", "both"):
        path = out_dir / f"{stem}.md"
        path.write_text(report.to_markdown(), encoding="utf-8")
        written.append(path)
    return written
