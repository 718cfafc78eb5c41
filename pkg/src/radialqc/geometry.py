"""Euclidean primitives, sphere inversions and the two-exponent radial power map.

Every function accepts a single point of shape ``(n,)`` or a batch of points of
shape ``(N, n)``; batches are processed row-wise and scalar results come back
as arrays of shape ``(N,)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from radialqc.errors import DomainError

__all__ = [
    "RadialExponents",
    "as_points",
    "norm",
    "radial_map",
    "radial_inverse",
    "inversion",
    "radial_projection",
]


@dataclass(frozen=True)
class RadialExponents:
    """Exponent pair (a, b): ``|x|^(a-1) x`` inside the unit ball, ``|x|^(b-1) x`` outside.

    Either field may be an array with one entry per point of a batch.
    """

    a: float
    b: float

    def __post_init__(self):
        for name in ("a", "b"):
            v = np.asarray(getattr(self, name), dtype=float)
            if not np.all(np.isfinite(v)) or np.any(v <= 0):
                raise DomainError(f"radial exponent {name} must be finite and positive, got {v!r}")

    @property
    def sharp_regime(self) -> bool:
        return bool(np.all((np.asarray(self.a) <= 1.0) & (np.asarray(self.b) >= 1.0)))


def as_points(v) -> np.ndarray:
    """Convert to a float array of points, rejecting NaN/inf and empty input."""
    arr = np.asarray(v, dtype=float)
    if arr.ndim == 0 or arr.ndim > 2 or arr.shape[-1] == 0:
        raise DomainError(f"expected a vector or a batch of vectors, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise DomainError("vector coordinates must be finite")
    return arr


def _norm(arr: np.ndarray, keepdims: bool = False) -> np.ndarray:
    return np.linalg.norm(arr, axis=-1, keepdims=keepdims)


def _scalar(value):
    value = np.asarray(value)
    return float(value) if value.ndim == 0 else value


def _require_nonzero(r: np.ndarray, what: str = "point"):
    if np.any(r == 0):
        raise DomainError(f"{what} must be nonzero")


def norm(v):
    """Euclidean length."""
    return _scalar(_norm(as_points(v)))


def radial_map(x, e: RadialExponents) -> np.ndarray:
    x = as_points(x)
    r = _norm(x, keepdims=True)
    _require_nonzero(r)
    # the two branches coincide on the unit sphere, so the split point is immaterial
    a = np.expand_dims(np.asarray(e.a, dtype=float), -1)
    b = np.expand_dims(np.asarray(e.b, dtype=float), -1)
    power = np.where(r < 1.0, a - 1.0, b - 1.0)
    return r**power * x


def radial_inverse(e: RadialExponents) -> RadialExponents:
    return RadialExponents(_scalar(1.0 / np.asarray(e.a, dtype=float)), _scalar(1.0 / np.asarray(e.b, dtype=float)))


def inversion(x, center, radius) -> np.ndarray:
    """Inversion in the sphere S(center, radius): ``c + r^2 (x - c) / |x - c|^2``."""
    radius = np.asarray(radius, dtype=float)
    if np.any(~(radius > 0)):
        raise DomainError(f"inversion radius must be positive, got {radius!r}")
    x = as_points(x)
    c = as_points(center)
    w = x - c
    d2 = np.sum(w * w, axis=-1, keepdims=True)
    if np.any(d2 == 0):
        raise DomainError("the center of inversion maps to the point at infinity")
    return c + np.expand_dims(radius**2, -1) * w / d2


def radial_projection(x, y) -> np.ndarray:
    """Point on the ray through x at distance ``|x| + |x - y|`` from the origin."""
    x = as_points(x)
    y = as_points(y)
    r = _norm(x, keepdims=True)
    _require_nonzero(r)
    return x * ((r + _norm(x - y, keepdims=True)) / r)
