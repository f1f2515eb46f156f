"""Verification reports and their text/JSON rendering."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

__all__ = ["Report", "VERDICTS", "REPORT_SCHEMA_VERSION", "render_report"]

VERDICTS = ("pass", "fail", "prefix-verified")
REPORT_SCHEMA_VERSION = 1


@dataclass
class Report:
    axiom_id: str
    instance: str
    verdict: str
    witness: dict | None = None
    stats: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")
        if self.verdict == "fail" and not self.witness:
            raise ValueError("a failing report needs a witness")
        if self.axiom_id == "A9" and self.verdict == "pass":
            raise ValueError("A9 can only be prefix-verified in a finite model")
        self.stats.setdefault("instances", 0)
        self.stats.setdefault("elapsed", 0.0)

    @property
    def failed(self) -> bool:
        return self.verdict == "fail"

    def to_dict(self, timing: bool = False) -> dict:
        stats = dict(self.stats)
        stats["elapsed"] = round(stats["elapsed"], 6) if timing else None
        out = {
            "axiom_id": self.axiom_id,
            "instance": self.instance,
            "verdict": self.verdict,
            "stats": stats,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def _text_line(r: Report, timing: bool) -> str:
    stats = dict(r.stats)
    n = stats.pop("instances")
    elapsed = stats.pop("elapsed")
    parts = [r.axiom_id, r.verdict, f"instances={n}"]
    parts.append(f"elapsed={elapsed:.3f}s" if timing else "elapsed=-")
    parts.extend(f"{k}={stats[k]}" for k in sorted(stats))
    line = " ".join(parts)
    if r.instance:
        line += f"  # {r.instance}"
    if r.witness is not None:
        line += "  witness=" + json.dumps(r.witness, sort_keys=True, ensure_ascii=False)
    return line


def render_report(reports: list[Report], format: str = "text", timing: bool = False) -> str:
    """Render reports one line each (``text``) or as a versioned JSON document.

    Wall-clock times are printed only with ``timing=True``; otherwise the
    output is byte-for-byte reproducible.
    """
    if format == "text":
        return "".join(_text_line(r, timing) + "\n" for r in reports)
    if format == "json":
        doc = {
            "version": REPORT_SCHEMA_VERSION,
            "reports": [r.to_dict(timing) for r in reports],
        }
        return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    raise ValueError(f"unknown format {format!r}; expected 'text' or 'json'")
