"""Report containers and their CSV / JSON serializations."""
import csv
from dataclasses import dataclass, field
import io
import json
import math
from pathlib import Path

from .defaults import DEFAULTS_VERSION, SCHEMA_VERSION


def _fmt(v):
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _jsonable(v):
    if isinstance(v, float) and not math.isfinite(v):
        return str(v)
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


@dataclass
class RatioReport:
    """Samples ``(point, computed, comparator, ratio)`` of one quantity.

    ``min_ratio``, ``max_ratio`` and ``geo_mean_ratio`` summarize the
    ratio column; every ratio must be positive.
    """

    quantity: str
    params: dict
    samples: list
    min_ratio: float
    max_ratio: float
    geo_mean_ratio: float

    @classmethod
    def from_samples(cls, quantity, params, samples):
        samples = [(str(p), float(c), float(k), float(r)) for p, c, k, r in samples]
        if not samples:
            raise ValueError("a ratio report needs at least one sample")
        ratios = [s[3] for s in samples]
        if not all(r > 0 for r in ratios):
            raise ValueError(f"{quantity}: non-positive ratio in samples")
        geo = math.exp(math.fsum(math.log(r) for r in ratios) / len(ratios))
        # keep min <= geo <= max exact under rounding
        lo, hi = min(ratios), max(ratios)
        return cls(quantity, dict(params), samples, lo, hi, min(max(geo, lo), hi))

    @classmethod
    def from_log_samples(cls, quantity, params, samples):
        """Build from ``(point, log_computed, log_comparator)``.

        The computed and comparator columns keep natural logarithms (flagged
        by ``params["value_scale"] = "log"``) since the values themselves
        may exceed double range; the ratio column is the plain ratio.
        """
        rows = [(p, lc, lk, math.exp(lc - lk)) for p, lc, lk in samples]
        return cls.from_samples(quantity, {**params, "value_scale": "log"}, rows)

    @property
    def band(self):
        return self.max_ratio / self.min_ratio

    def to_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["point", "computed", "comparator", "ratio"])
        for row in self.samples:
            w.writerow([_fmt(x) for x in row])
        return buf.getvalue()

    def to_dict(self):
        return {
            "schema_version": SCHEMA_VERSION,
            "defaults_version": DEFAULTS_VERSION,
            "quantity": self.quantity,
            "params": _jsonable(self.params),
            "min_ratio": self.min_ratio,
            "max_ratio": self.max_ratio,
            "geo_mean_ratio": self.geo_mean_ratio,
            "samples": [list(s) for s in _jsonable(self.samples)],
        }

    def write(self, out_dir, stem=None):
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        stem = stem or self.quantity
        (out / f"{stem}.csv").write_text(self.to_csv(), encoding="utf-8", newline="\n")
        (out / f"{stem}.json").write_text(json.dumps(self.to_dict(), indent=2) + "\n",
                                          encoding="utf-8", newline="\n")
        return out / f"{stem}.csv", out / f"{stem}.json"


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class SuiteReport:
    """Outcome of one verification suite."""

    suite: str
    header: dict
    checks: list = field(default_factory=list)
    ratios: list = field(default_factory=list)

    def check(self, name, passed, detail=""):
        self.checks.append(Check(name, bool(passed), detail))
        return bool(passed)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def to_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["check", "passed", "detail"])
        for c in self.checks:
            w.writerow([c.name, "true" if c.passed else "false", c.detail])
        return buf.getvalue()

    def to_dict(self):
        return {
            "schema_version": SCHEMA_VERSION,
            "suite": self.suite,
            "header": _jsonable(self.header),
            "passed": self.passed,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks],
            "ratios": [r.to_dict() for r in self.ratios],
        }

    def write(self, out_dir):
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / f"suite_{self.suite}.csv").write_text(self.to_csv(), encoding="utf-8", newline="\n")
        (out / f"suite_{self.suite}.json").write_text(json.dumps(self.to_dict(), indent=2) + "\n",
                                                      encoding="utf-8", newline="\n")
