"""Heap-counting fingerprints and the exact prefix/suffix abelian matchers.

A pattern of length ``m`` over ``sigma_x`` distinct bytes gives its i-th
distinct byte (in order of first occurrence) the weight ``m**i``; every other
byte weighs 0. The fingerprint of a string is the sum of its byte weights,
taken modulo ``2**WORD_BITS``. As long as ``m**sigma_x`` fits in a word, two
windows of length ``m`` share a fingerprint with the pattern exactly when they
are permutations of it, so hits need no verification. Past that bound the
searchers keep the fingerprint as a filter and verify every hit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .parikh import ALPHABET_SIZE, ParikhVector, compute_parikh_vector, verify_counted
from .report import MatchReport, empty_report

WORD_BITS = 64
WORD_MASK = (1 << WORD_BITS) - 1


@dataclass(frozen=True)
class HeapMapping:
    weights: tuple[int, ...]
    base_m: int
    sigma_x: int
    collision_possible: bool


@dataclass(frozen=True)
class MembershipMap:
    member: tuple[bool, ...]

    def __contains__(self, byte: int) -> bool:
        return self.member[byte]

    def members(self) -> list[int]:
        return [c for c in range(ALPHABET_SIZE) if self.member[c]]

    @property
    def size(self) -> int:
        return sum(self.member)


@dataclass(frozen=True)
class PatternProfile:
    pattern: bytes
    m: int
    heap: HeapMapping
    membership: MembershipMap
    delta: int
    pv: ParikhVector


def fingerprint_collision_possible(m: int, sigma_x: int, word_bits: int = WORD_BITS) -> bool:
    """Whether a window fingerprint can reach ``2**word_bits``.

    The largest fingerprint of a length-``m`` window is ``m * m**(sigma_x-1)``,
    i.e. ``m**sigma_x``. The power is built by repeated multiplication and
    checked against the word limit after every step.
    """
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")
    if not 1 <= sigma_x <= min(m, ALPHABET_SIZE):
        raise ValueError(f"sigma_x must lie in [1, {min(m, ALPHABET_SIZE)}], got {sigma_x}")
    limit = 1 << word_bits
    power = 1
    for _ in range(sigma_x):
        power *= m
        if power >= limit:
            return True
    return False


def compute_heap_mapping(x: bytes, m: int) -> HeapMapping:
    if m != len(x):
        raise ValueError(f"m={m} does not match pattern length {len(x)}")
    if m < 2:
        raise ValueError("heap mapping needs a pattern of length at least 2")
    weights = [0] * ALPHABET_SIZE
    seen = [False] * ALPHABET_SIZE
    weight = 1
    sigma_x = 0
    # First occurrence is tracked explicitly: a reduced power m**i can be 0 mod 2**64.
    for c in x:
        if not seen[c]:
            seen[c] = True
            weights[c] = weight
            weight = (weight * m) & WORD_MASK
            sigma_x += 1
    return HeapMapping(tuple(weights), m, sigma_x, fingerprint_collision_possible(m, sigma_x))


def compute_membership_map(x: bytes) -> MembershipMap:
    member = [False] * ALPHABET_SIZE
    for c in x:
        member[c] = True
    return MembershipMap(tuple(member))


def heap_value(w: bytes, mapping: HeapMapping) -> int:
    weights = mapping.weights
    return sum(weights[c] for c in w) & WORD_MASK


def build_profile(x: bytes) -> PatternProfile:
    if not x:
        raise ValueError("pattern must not be empty")
    m = len(x)
    if m == 1:
        # Lemma-style uniqueness needs m > 1; single bytes are searched directly.
        weights = [0] * ALPHABET_SIZE
        weights[x[0]] = 1
        heap = HeapMapping(tuple(weights), 1, 1, False)
    else:
        heap = compute_heap_mapping(x, m)
    return PatternProfile(
        pattern=bytes(x),
        m=m,
        heap=heap,
        membership=compute_membership_map(x),
        delta=heap_value(x, heap),
        pv=compute_parikh_vector(x),
    )


# -- shared scan loops -------------------------------------------------------
#
# The *_counted loops are the general ones: modular fingerprint comparison,
# optional verification of every hit, and exact read counters. The fast
# loops assume fingerprints never wrap, so plain integer equality is exact.


def single_byte_scan(target: int, y: bytes, instrument: bool = False) -> MatchReport:
    positions = tuple(i for i, c in enumerate(y) if c == target)
    if not instrument:
        return MatchReport(positions)
    return MatchReport(positions, inspections=len(y), candidates=len(positions), instrumented=True)


def prefix_scan_fast(y, m, weights, delta, pv=None) -> tuple[int, ...]:
    """Rolling-sum scan; with `pv` given, every hit is verified before reporting."""
    h = weights
    g = 0
    for c in y[:m]:
        g += h[c]
    out = []
    if g == delta and (pv is None or verify_counted(pv, m, y, 0)[0]):
        out.append(0)
    for s, (old, new) in enumerate(zip(y, y[m:]), 1):
        g += h[new] - h[old]
        if g == delta and (pv is None or verify_counted(pv, m, y, s)[0]):
            out.append(s)
    return tuple(out)


def prefix_scan_counted(y, m, weights, delta, pv=None) -> MatchReport:
    h = weights
    n = len(y)
    last = n - m
    reads = cands = verifs = rejects = 0
    g = 0
    for i in range(m):
        g += h[y[i]]
    reads += m
    out = []
    s = 0
    while True:
        if (g - delta) & WORD_MASK == 0:
            cands += 1
            if pv is None:
                out.append(s)
            else:
                ok, r = verify_counted(pv, m, y, s)
                reads += r
                verifs += 1
                if ok:
                    out.append(s)
                else:
                    rejects += 1
        if s == last:
            break
        g += h[y[s + m]] - h[y[s]]
        reads += 2
        s += 1
    return MatchReport(tuple(out), reads, cands, verifs, rejects, instrumented=True)


class SentinelView:
    """Read-only view of ``text + pattern`` without copying the text."""

    __slots__ = ("text", "pattern", "n")

    def __init__(self, text: bytes, pattern: bytes):
        self.text = text
        self.pattern = pattern
        self.n = len(text)

    def __len__(self) -> int:
        return self.n + len(self.pattern)

    def __getitem__(self, i: int) -> int:
        if i < self.n:
            return self.text[i]
        return self.pattern[i - self.n]


def backward_scan_fast(buf, n, m, weights, member, delta, pv=None) -> tuple[int, ...]:
    """Suffix-based scan over ``buf = text + pattern``.

    The pattern copy at the end guarantees the forward loop reaches a window
    whose fingerprint equals the pattern's, so the loop needs no bounds test.
    """
    h, b = weights, member
    neg = -delta
    last = n - m
    out = []
    s = 0
    while True:
        g = neg
        j = m - 1
        while j >= 0:
            c = buf[s + j]
            if b[c]:
                g += h[c]
                j -= 1
            else:
                g = neg
                s += j + 1
                j = m - 1
        while True:
            if g == 0:
                if s > last:
                    return tuple(out)
                if pv is None or verify_counted(pv, m, buf, s)[0]:
                    out.append(s)
            c = buf[s + m]
            if not b[c]:
                break
            g += h[c] - h[buf[s]]
            s += 1
        s += m + 1


def backward_scan_counted(buf, n, m, weights, member, delta, pv=None) -> MatchReport:
    h, b = weights, member
    neg = -delta
    last = n - m
    reads = cands = verifs = rejects = 0
    out = []
    s = 0
    while True:
        g = neg
        j = m - 1
        while j >= 0:
            c = buf[s + j]
            reads += 1
            if b[c]:
                g += h[c]
                j -= 1
            else:
                g = neg
                s += j + 1
                j = m - 1
        while True:
            if g & WORD_MASK == 0:
                if s > last:
                    return MatchReport(tuple(out), reads, cands, verifs, rejects, instrumented=True)
                cands += 1
                if pv is None:
                    out.append(s)
                else:
                    ok, r = verify_counted(pv, m, buf, s)
                    reads += r
                    verifs += 1
                    if ok:
                        out.append(s)
                    else:
                        rejects += 1
            c = buf[s + m]
            reads += 1
            if not b[c]:
                break
            g += h[c] - h[buf[s]]
            reads += 1
            s += 1
        s += m + 1


# -- public searchers ----------------------------------------------------------


def hcam_search(profile: PatternProfile, y: bytes, *, instrument: bool = False) -> MatchReport:
    """Prefix-based heap-counting search: one rolling fingerprint over the text."""
    m = profile.m
    if len(y) < m:
        return empty_report(instrument)
    if m == 1:
        return single_byte_scan(profile.pattern[0], y, instrument)
    heap = profile.heap
    if not (instrument or heap.collision_possible):
        return MatchReport(prefix_scan_fast(y, m, heap.weights, profile.delta))
    pv = profile.pv if heap.collision_possible else None
    report = prefix_scan_counted(y, m, heap.weights, profile.delta, pv)
    return report if instrument else MatchReport(report.positions)


def bhcam_search(
    profile: PatternProfile,
    y: bytes,
    *,
    instrument: bool = False,
    sentinel_copy: bool = True,
) -> MatchReport:
    """Suffix-based heap-counting search with membership-driven skips.

    With ``sentinel_copy=False`` the text is not copied; reads past its end
    are served from the pattern through a bounds-checked view instead. The
    report is identical either way.
    """
    m, n = profile.m, len(y)
    if n < m:
        return empty_report(instrument)
    if m == 1:
        return single_byte_scan(profile.pattern[0], y, instrument)
    heap = profile.heap
    member = profile.membership.member
    buf = bytes(y) + profile.pattern if sentinel_copy else SentinelView(y, profile.pattern)
    if not (instrument or heap.collision_possible) and sentinel_copy:
        return MatchReport(backward_scan_fast(buf, n, m, heap.weights, member, profile.delta))
    pv = profile.pv if heap.collision_possible else None
    report = backward_scan_counted(buf, n, m, heap.weights, member, profile.delta, pv)
    return report if instrument else MatchReport(report.positions)
