"""Classify random planar pairs by which of the four bounds is smallest."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from radialqc.bounds import BOUND_SYMBOLS, TIE_TOL, bound_B, bound_D, bound_K, bound_M
from radialqc.errors import DomainError
from radialqc.verify.sampling import Sampler


@dataclass(frozen=True)
class ScanResult:
    p: float
    samples: int
    counts: dict[str, int]
    # per symbol, the pair where it wins by the widest margin
    witnesses: dict[str, tuple[tuple[float, float], tuple[float, float]]]
    margins: dict[str, float]


def scan_min_regions(p: float, box=(-3.0, 3.0), samples: int = 100_000, seed: int = 0) -> ScanResult:
    """Draw pairs uniformly from ``box^2 x box^2`` and count minimal bounds.

    A pair whose smallest two bounds agree within the tie tolerance is credited
    to the first symbol in M, D, B, K order, so the counts sum to ``samples``.
    """
    if not 0.0 < p < 1.0:
        raise DomainError("the scan needs all four bounds, so p must lie in (0, 1)")
    lo, hi = float(box[0]), float(box[1])
    if not (np.isfinite(lo) and np.isfinite(hi) and hi > lo):
        raise DomainError(f"degenerate box {box!r}")
    if samples < 1:
        raise DomainError("samples must be at least 1")
    s = Sampler(seed, "scan")
    x = s.box("x", samples, 2, lo, hi)
    y = s.box("y", samples, 2, lo, hi)
    # a coincident pair has no K bound; probability zero, but keep the scan total
    same = np.all(x == y, axis=1)
    y = np.where(same[:, None], y + (hi - lo) * 1e-9, y)
    vals = np.stack([bound_M(x, y, p), bound_D(x, y, p), bound_B(x, y, p), bound_K(x, y, p)])
    order = np.sort(vals, axis=0)
    win = np.argmin(vals, axis=0)
    margin = order[1] - order[0]
    counts, witnesses, margins = {}, {}, {}
    for i, sym in enumerate(BOUND_SYMBOLS):
        mask = win == i
        counts[sym] = int(np.count_nonzero(mask))
        if counts[sym]:
            j = int(np.flatnonzero(mask)[np.argmax(margin[mask])])
            witnesses[sym] = (tuple(map(float, x[j])), tuple(map(float, y[j])))
            margins[sym] = float(margin[j])
    return ScanResult(p=p, samples=samples, counts=counts, witnesses=witnesses, margins=margins)


__all__ = ["ScanResult", "scan_min_regions", "TIE_TOL"]
