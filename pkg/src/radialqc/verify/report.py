from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

KINDS = ("inequality", "monotonicity", "unimodality", "limit", "equality-case")


@dataclass
class Evaluation:
    """Signed excesses for one component of a check.

    ``excess`` already has the component's tolerance subtracted: a sample
    violates the claim exactly when its excess is positive. ``params`` maps
    parameter names to arrays aligned with ``excess``.
    """

    excess: np.ndarray
    params: dict[str, np.ndarray]
    flags: tuple[str, ...] = ()


@dataclass(frozen=True)
class CheckSpec:
    name: str
    kind: str
    claim: str
    domain: str
    tolerance: float
    func: Callable = field(repr=False, compare=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown check kind {self.kind!r}")
        if self.tolerance < 0:
            raise ValueError("tolerance must be nonnegative")


@dataclass(frozen=True)
class CheckReport:
    name: str
    kind: str
    samples: int
    violations: int
    max_violation: float
    witness: dict[str, float]
    seed: int
    flags: tuple[str, ...] = ()

    @property
    def status(self) -> str:
        return "pass" if self.violations == 0 else "fail"

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def to_record(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind,
            "status": self.status,
            "samples": self.samples,
            "violations": self.violations,
            "max_violation": self.max_violation,
            "seed": self.seed,
            "witness": self.witness,
            "flags": list(self.flags),
        }


def aggregate(spec: CheckSpec, parts: Iterable[Evaluation], samples: int, seed: int) -> CheckReport:
    violations = 0
    worst = -np.inf
    witness: dict[str, float] = {}
    flags: list[str] = []
    for part in parts:
        excess = np.asarray(part.excess, dtype=float).ravel()
        for f in part.flags:
            if f not in flags:
                flags.append(f)
        if excess.size == 0:
            continue
        # NaN means the claim could not be evaluated, which counts against it
        bad = np.isnan(excess)
        excess = np.where(bad, np.inf, excess)
        violations += int(np.count_nonzero(excess > 0))
        i = int(np.argmax(excess))
        if excess[i] > worst:
            worst = float(excess[i])
            witness = {k: float(np.ravel(v)[i]) for k, v in part.params.items()}
    return CheckReport(
        name=spec.name,
        kind=spec.kind,
        samples=samples,
        violations=violations,
        max_violation=worst,
        witness=witness,
        seed=seed,
        flags=tuple(flags),
    )


def to_jsonl(reports: Iterable[CheckReport]) -> str:
    return "".join(json.dumps(r.to_record()) + "\n" for r in reports)


def to_csv(reports: Iterable[CheckReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["name", "kind", "status", "samples", "violations", "max_violation", "seed", "witness", "flags"])
    for r in reports:
        wit = ";".join(f"{k}={v!r}" for k, v in r.witness.items())
        w.writerow([r.name, r.kind, r.status, r.samples, r.violations, repr(r.max_violation), r.seed, wit, ";".join(r.flags)])
    return buf.getvalue()
