"""Report records and their canonical serializations.

A suite report is a config echo, one record per check, and a summary.
The canonical text body is line-oriented ``key=value`` records sorted by
check id; values containing spaces, quotes or ``=`` are double-quoted with
backslash escapes.  Timing is real data but lives on ``#`` comment lines
so that two runs with the same config and seed produce byte-identical
bodies.  The JSON rendering contains the same timing-free body.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

PASS = "pass"
FAIL = "fail"
UNDECIDED = "undecided"
VACUOUS = "vacuous"


@dataclass
class Outcome:
    """Result of one named check inside a verification procedure."""

    check: str
    verdict: str
    witness: str = "-"
    level: Optional[int] = None

    def ok(self) -> bool:
        return self.verdict in (PASS, VACUOUS)


@dataclass
class CheckRecord:
    check: str
    ring: str
    n: int
    level: str
    verdict: str
    witness: str
    elapsed_ms: float = 0.0

    def sort_key(self):
        return (self.check, self.ring, self.level)

    def body_line(self) -> str:
        pairs = [
            ("check", self.check),
            ("ring", self.ring),
            ("n", str(self.n)),
            ("level", self.level),
            ("verdict", self.verdict),
            ("witness", self.witness),
        ]
        return " ".join(f"{k}={_quote(v)}" for k, v in pairs)


@dataclass
class SuiteReport:
    suite: str
    config: dict
    records: list[CheckRecord] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(1 for r in self.records if r.verdict in (PASS, VACUOUS))

    @property
    def failed(self) -> int:
        return sum(1 for r in self.records if r.verdict == FAIL)

    @property
    def undecided(self) -> int:
        return sum(1 for r in self.records if r.verdict == UNDECIDED)

    def exit_code(self) -> int:
        if self.failed:
            return 1
        if self.undecided:
            return 2
        return 0

    def _sorted(self) -> list[CheckRecord]:
        return sorted(self.records, key=CheckRecord.sort_key)

    def body_text(self) -> str:
        lines = [
            "suite=%s %s"
            % (
                _quote(self.suite),
                " ".join(f"{k}={_quote(str(v))}" for k, v in sorted(self.config.items())),
            )
        ]
        lines.extend(r.body_line() for r in self._sorted())
        lines.append(
            f"summary passed={self.passed} failed={self.failed} undecided={self.undecided}"
        )
        return "\n".join(lines) + "\n"

    def full_text(self) -> str:
        """Body plus timing comments; only the body is determinism-checked."""
        out = [self.body_text().rstrip("\n")]
        total = 0.0
        for r in self._sorted():
            total += r.elapsed_ms
            out.append(f"# elapsed_ms check={_quote(r.check)} ring={_quote(r.ring)} ms={r.elapsed_ms:.1f}")
        out.append(f"# elapsed_ms total ms={total:.1f}")
        return "\n".join(out) + "\n"

    def to_json(self) -> str:
        doc = {
            "suite": self.suite,
            "config": {k: str(v) for k, v in self.config.items()},
            "checks": [
                {
                    "check": r.check,
                    "ring": r.ring,
                    "n": r.n,
                    "level": r.level,
                    "verdict": r.verdict,
                    "witness": r.witness,
                }
                for r in self._sorted()
            ],
            "summary": {
                "passed": self.passed,
                "failed": self.failed,
                "undecided": self.undecided,
            },
        }
        return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def _quote(value: str) -> str:
    if value and not any(c in value for c in ' "=\t\n'):
        return value
    escaped = value.replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'


def body_lines(text: str) -> list[str]:
    """The determinism-relevant lines of a rendered report."""
    return [ln for ln in text.splitlines() if not ln.startswith("#")]
