"""Verification reports: one per (identity, input) pair."""

from __future__ import annotations

import hashlib
import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any


def digest(obj: Any) -> str:
    """Short stable hash of a JSON-serialisable input description."""
    blob = json.dumps(obj, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()[:12]


@dataclass
class Report:
    theorem: str
    digest: str
    left: Any
    right: Any
    elapsed: float = field(default=0.0, compare=False)
    label: str = ""

    @property
    def verdict(self) -> str:
        return "PASS" if self.left == self.right else "FAIL"

    @property
    def passed(self) -> bool:
        return self.verdict == "PASS"

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "theorem": self.theorem,
            "input": self.digest,
            "label": self.label,
            "left": str(self.left),
            "right": str(self.right),
            "verdict": self.verdict,
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 6)
        return out

    def line(self, timing: bool = False) -> str:
        text = f"{self.verdict} {self.theorem} {self.digest} {self.label} left={self.left} right={self.right}"
        if timing:
            text += f" elapsed={self.elapsed:.4f}s"
        return text


@contextmanager
def stopwatch():
    """Yields a list whose single element is set to the elapsed seconds on exit."""
    box = [0.0]
    start = time.perf_counter()
    try:
        yield box
    finally:
        box[0] = time.perf_counter() - start


def all_passed(reports) -> bool:
    return all(r.passed for r in reports)
