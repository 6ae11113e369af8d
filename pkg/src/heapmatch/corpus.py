"""Seeded corpora and pattern extraction.

All randomness comes from SplitMix64 (Steele, Lea & Flood, 2014): 64-bit
state, advanced by the constant 0x9E3779B97F4A7C15 and finalised with the
variant-13 mixer. Its output depends only on the seed, so corpora and
pattern sets are bit-identical on every platform. Changing the generator
changes every benchmark input: don't.

Random text bytes are drawn by splitting each 64-bit output into its eight
bytes, least significant first, and keeping a byte ``b`` only when
``b < 256 - 256 % sigma`` (rejection, so no modulo bias); kept bytes become
``b % sigma``.
"""

from __future__ import annotations

from dataclasses import dataclass
from os import PathLike
from pathlib import Path

import numpy as np

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class CorpusError(Exception):
    """A corpus could not be produced or read."""


def mix64(z: int) -> int:
    z = ((z ^ (z >> 30)) * _MIX1) & MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    def __init__(self, seed: int):
        if not 0 <= seed <= MASK64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
        self.state = seed

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        return mix64(self.state)

    def words(self, count: int) -> np.ndarray:
        """The next `count` outputs as a uint64 array, same sequence as `next_u64`."""
        steps = np.arange(1, count + 1, dtype=np.uint64)
        with np.errstate(over="ignore"):
            z = np.uint64(self.state) + steps * np.uint64(GOLDEN_GAMMA)
            z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)
            z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
        z ^= z >> np.uint64(31)
        self.state = (self.state + count * GOLDEN_GAMMA) & MASK64
        return z

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)``."""
        if bound < 1:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - (1 << 64) % bound
        while True:
            r = self.next_u64()
            if r < limit:
                return r % bound


def generate_random(n: int, sigma: int, seed: int) -> bytes:
    """`n` bytes drawn uniformly and independently from ``0 .. sigma-1``."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if not 2 <= sigma <= 256:
        raise ValueError(f"sigma must lie in [2, 256], got {sigma}")
    rng = SplitMix64(seed)
    limit = 256 - 256 % sigma
    chunks = []
    have = 0
    while have < n:
        want = n - have
        raw = rng.words(want * 256 // limit // 8 + 16).astype("<u8").view(np.uint8)
        kept = raw[raw < limit]
        if sigma & (sigma - 1) == 0:
            kept = kept & np.uint8(sigma - 1)
        else:
            kept = kept % np.uint8(sigma)
        chunks.append(kept[:want])
        have += min(len(kept), want)
    return np.concatenate(chunks).tobytes()


def load_text(path: str | PathLike) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise CorpusError(f"cannot read text file {str(path)!r}: {exc.strerror or exc}") from exc


def extract_offsets(n: int, m: int, count: int, seed: int) -> list[int]:
    if m < 1 or count < 1:
        raise ValueError("pattern length and count must be positive")
    if n < m:
        raise ValueError(f"cannot extract patterns of length {m} from a text of length {n}")
    rng = SplitMix64(seed)
    return [rng.below(n - m + 1) for _ in range(count)]


def extract_patterns(y: bytes, m: int, count: int, seed: int) -> list[bytes]:
    """`count` random substrings of length `m`; each occurs in `y` at least once."""
    return [bytes(y[o:o + m]) for o in extract_offsets(len(y), m, count, seed)]


@dataclass(frozen=True)
class CorpusSpec:
    kind: str = "random"
    n: int = 1 << 20
    sigma: int = 2
    seed: int = 0
    path: str | None = None

    def __post_init__(self) -> None:
        if self.kind == "random":
            if self.n < 1 or not 2 <= self.sigma <= 256:
                raise ValueError("random corpus needs n >= 1 and 2 <= sigma <= 256")
        elif self.kind == "file":
            if not self.path:
                raise ValueError("file corpus needs a path")
        else:
            raise ValueError(f"unknown corpus kind {self.kind!r}")

    def materialize(self) -> bytes:
        if self.kind == "random":
            return generate_random(self.n, self.sigma, self.seed)
        return load_text(self.path)

    def describe(self) -> str:
        if self.kind == "random":
            return f"random n={self.n} sigma={self.sigma} seed={self.seed}"
        return f"file {self.path}"
