"""Per-prime output records and run configuration."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .curve import PicardCurve, PrimeClass
from .lpoly import LPolynomial

METHODS = (
    "cm_lift_split",
    "cm_lift_inert",
    "naive",
    "skipped_nonordinary",
    "skipped_bad",
)
_LPOLY_METHODS = {"cm_lift_split", "cm_lift_inert", "naive"}

CSV_HEADER = "p,class,method,a0,a1,a2,a3,a4,a5,a6"


@dataclass(frozen=True)
class PrimeRecord:
    p: int
    klass: PrimeClass
    method: str
    lpoly: LPolynomial | None

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")
        if (self.lpoly is not None) != (self.method in _LPOLY_METHODS):
            raise ValueError("lpoly must be present exactly for computing methods")

    def to_json_line(self) -> str:
        obj = {
            "p": self.p,
            "class": self.klass.value,
            "method": self.method,
            "L": None if self.lpoly is None else self.lpoly.as_strings(),
        }
        return json.dumps(obj, separators=(",", ":"), sort_keys=False)

    def to_csv_line(self) -> str:
        cells = [str(self.p), self.klass.value, self.method]
        cells += self.lpoly.as_strings() if self.lpoly is not None else [""] * 7
        return ",".join(cells)

    @classmethod
    def from_json_line(cls, line: str) -> "PrimeRecord":
        obj = json.loads(line)
        lp = None
        if obj["L"] is not None:
            lp = LPolynomial.from_strings(obj["p"], obj["L"])
        return cls(
            p=obj["p"],
            klass=PrimeClass(obj["class"]),
            method=obj["method"],
            lpoly=lp,
        )


@dataclass(frozen=True)
class RunConfig:
    curve: PicardCurve
    min_prime: int = 5
    max_prime: int = 1000
    fmt: str = "jsonl"
    jobs: int = 1
    naive_fallback: int = 0
    oracle_bound: int = 1 << 32
    backend: str | None = None
    out: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if not 5 <= self.min_prime <= self.max_prime < 1 << 40:
            raise ValueError("need 5 <= min_prime <= max_prime < 2^40")
        if self.fmt not in ("jsonl", "csv"):
            raise ValueError("format must be jsonl or csv")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")
