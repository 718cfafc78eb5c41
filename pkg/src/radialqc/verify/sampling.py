"""Counter-style random streams for the verification checks.

A stream is identified by (seed, check name, stream key). Its values are
produced in fixed-size chunks, each chunk seeded from the identifying triple
plus the chunk index, so sample ``i`` depends only on (seed, name, key, i) and
never on how many workers share the work or in which order they finish.
"""

from __future__ import annotations

import hashlib

import numpy as np

CHUNK = 4096


def _word(text: str) -> int:
    return int.from_bytes(hashlib.blake2b(text.encode(), digest_size=8).digest(), "little")


def chunk_generator(seed: int, name: str, key: str, chunk: int) -> np.random.Generator:
    entropy = [seed & 0xFFFFFFFFFFFFFFFF, _word(name), _word(key), chunk]
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy)))


class Sampler:
    """Deterministic draws for one check run."""

    def __init__(self, seed: int, name: str):
        self.seed = seed
        self.name = name

    def uniform(self, key: str, n: int, low=0.0, high=1.0, dim: int | None = None) -> np.ndarray:
        width = 1 if dim is None else dim
        chunks = []
        for c in range(-(-n // CHUNK)):
            rng = chunk_generator(self.seed, self.name, key, c)
            chunks.append(rng.random((CHUNK, width)))
        u = np.concatenate(chunks)[:n] if chunks else np.empty((0, width))
        u = low + (high - low) * u
        return u[:, 0] if dim is None else u

    def choice(self, key: str, n: int, values) -> np.ndarray:
        values = np.asarray(values, dtype=float)
        idx = np.minimum((self.uniform(key, n) * len(values)).astype(int), len(values) - 1)
        return values[idx]

    def directions(self, key: str, n: int, dim: int) -> np.ndarray:
        """Uniform unit vectors, by normalising Gaussian draws built from uniform pairs."""
        u1 = self.uniform(key + ".r", n, dim=dim)
        u2 = self.uniform(key + ".t", n, dim=dim)
        g = np.sqrt(-2.0 * np.log1p(-u1)) * np.cos(2.0 * np.pi * u2)
        norms = np.linalg.norm(g, axis=1, keepdims=True)
        # a zero Gaussian vector has probability zero; replace it by a fixed axis
        g = np.where(norms > 0, g, np.eye(dim)[0])
        return g / np.where(norms > 0, norms, 1.0)

    def shell(self, key: str, n: int, dim: int, r_min: float, r_max: float) -> np.ndarray:
        """Points with radius uniform in [r_min, r_max] and uniform direction."""
        r = self.uniform(key + ".radius", n, r_min, r_max)
        return self.directions(key + ".dir", n, dim) * r[:, None]

    def box(self, key: str, n: int, dim: int, low: float, high: float) -> np.ndarray:
        return self.uniform(key, n, low, high, dim=dim)
