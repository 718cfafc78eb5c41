"""Seeded numerical checks of the library's inequalities and the minimal-bound scan."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

from radialqc.verify.checks import REGISTRY
from radialqc.verify.report import CheckReport, CheckSpec, Evaluation, aggregate, to_csv, to_jsonl
from radialqc.verify.sampling import Sampler
from radialqc.verify.scan import ScanResult, scan_min_regions

__all__ = [
    "REGISTRY",
    "CheckReport",
    "CheckSpec",
    "Evaluation",
    "ScanResult",
    "check_names",
    "run_check",
    "run_all",
    "scan_min_regions",
    "to_csv",
    "to_jsonl",
]


def check_names(suite: str | None = None) -> list[str]:
    """Registered names in registration order, optionally filtered by prefix."""
    return [name for name in REGISTRY if suite is None or name.startswith(suite)]


def run_check(name: str, samples: int, seed: int) -> CheckReport:
    try:
        spec = REGISTRY[name]
    except KeyError:
        raise KeyError(f"no check named {name!r}") from None
    if samples < 1:
        raise ValueError("samples must be at least 1")
    parts = spec.func(samples, Sampler(seed, name), spec.tolerance)
    return aggregate(spec, parts, samples, seed)


def run_all(samples: int, seed: int, suite: str | None = None, workers: int | None = None) -> list[CheckReport]:
    """Run every registered check (or those whose name starts with ``suite``).

    Reports come back in registration order whatever the worker count, and each
    one depends only on (name, samples, seed).
    """
    names = check_names(suite)
    if workers is None or workers <= 1:
        return [run_check(name, samples, seed) for name in names]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda name: run_check(name, samples, seed), names))
