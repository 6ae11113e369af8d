"""Parikh vectors and the brute-force abelian matcher.

Everything here favours clarity over speed: these functions are the ground
truth the fast searchers are checked against.
"""

from __future__ import annotations

from dataclasses import dataclass

ALPHABET_SIZE = 256


@dataclass(frozen=True)
class ParikhVector:
    """Per-byte occurrence counts of a byte string."""

    counts: tuple[int, ...]
    total: int

    def __post_init__(self) -> None:
        if len(self.counts) != ALPHABET_SIZE:
            raise ValueError(f"expected {ALPHABET_SIZE} counts, got {len(self.counts)}")
        if any(c < 0 for c in self.counts) or sum(self.counts) != self.total:
            raise ValueError("counts must be non-negative and sum to total")

    def __getitem__(self, byte: int) -> int:
        return self.counts[byte]

    def support(self) -> list[int]:
        """Byte values with a nonzero count, ascending."""
        return [c for c in range(ALPHABET_SIZE) if self.counts[c]]


def compute_parikh_vector(x: bytes) -> ParikhVector:
    counts = [0] * ALPHABET_SIZE
    for c in x:
        counts[c] += 1
    return ParikhVector(tuple(counts), len(x))


def verify(pv_x: ParikhVector, m: int, y: bytes, s: int) -> bool:
    """True iff ``y[s:s+m]`` is a permutation of the pattern counted by `pv_x`.

    Bails out as soon as some byte occurs in the window more often than in
    the pattern; since the window and the pattern have the same length,
    surviving the whole window means the counts are equal.
    """
    if s < 0 or s + m > len(y):
        raise IndexError(f"window [{s}, {s + m}) outside text of length {len(y)}")
    return verify_counted(pv_x, m, y, s)[0]


def verify_counted(pv_x: ParikhVector, m: int, y: bytes, s: int) -> tuple[bool, int]:
    """`verify` without the bounds check, also returning the number of text reads."""
    limit = pv_x.counts
    seen = [0] * ALPHABET_SIZE
    for i in range(s, s + m):
        c = y[i]
        seen[c] += 1
        if seen[c] > limit[c]:
            return False, i - s + 1
    return True, m


def brute_force_search(x: bytes, y: bytes) -> tuple[int, ...]:
    """All window starts of `y` that are abelian occurrences of `x`.

    An empty pattern matches nowhere.
    """
    m, n = len(x), len(y)
    if m == 0 or n < m:
        return ()
    pv_x = compute_parikh_vector(x)
    return tuple(s for s in range(n - m + 1) if verify_counted(pv_x, m, y, s)[0])


def brute_force_counted(x: bytes, y: bytes) -> tuple[tuple[int, ...], int]:
    """`brute_force_search` plus the total number of text reads it made."""
    m, n = len(x), len(y)
    if m == 0 or n < m:
        return (), 0
    pv_x = compute_parikh_vector(x)
    out = []
    reads = 0
    for s in range(n - m + 1):
        ok, r = verify_counted(pv_x, m, y, s)
        reads += r
        if ok:
            out.append(s)
    return tuple(out), reads
