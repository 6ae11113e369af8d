"""Classic sliding-window counting matcher (WM).

Keeps per-byte counts of the current window and the number of byte values
whose window count differs from the pattern's; the window is an occurrence
exactly when that number is zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .parikh import ALPHABET_SIZE, ParikhVector, compute_parikh_vector
from .report import MatchReport, empty_report


@dataclass
class CountState:
    target: ParikhVector
    window_counts: list[int] = field(default_factory=lambda: [0] * ALPHABET_SIZE)
    mismatches: int = 0

    def __post_init__(self) -> None:
        self.mismatches = sum(
            1 for c in range(ALPHABET_SIZE) if self.window_counts[c] != self.target.counts[c]
        )

    def add(self, c: int) -> None:
        want = self.target.counts[c]
        have = self.window_counts[c]
        if have == want:
            self.mismatches += 1
        elif have + 1 == want:
            self.mismatches -= 1
        self.window_counts[c] = have + 1

    def remove(self, c: int) -> None:
        want = self.target.counts[c]
        have = self.window_counts[c]
        if have == want:
            self.mismatches += 1
        elif have - 1 == want:
            self.mismatches -= 1
        self.window_counts[c] = have - 1


def wm_search(x: bytes, y: bytes, *, instrument: bool = False) -> MatchReport:
    m, n = len(x), len(y)
    if m == 0 or n < m:
        return empty_report(instrument)
    state = CountState(compute_parikh_vector(x))
    for c in y[:m]:
        state.add(c)
    if instrument:
        return _wm_counted(state, m, y)

    # Same update rule as CountState, inlined for speed.
    want = state.target.counts
    have = state.window_counts
    e = state.mismatches
    out = [0] if e == 0 else []
    for s, (old, new) in enumerate(zip(y, y[m:]), 1):
        if old != new:
            k = have[old]
            if k == want[old]:
                e += 1
            elif k - 1 == want[old]:
                e -= 1
            have[old] = k - 1
            k = have[new]
            if k == want[new]:
                e += 1
            elif k + 1 == want[new]:
                e -= 1
            have[new] = k + 1
        if e == 0:
            out.append(s)
    return MatchReport(tuple(out))


def _wm_counted(state: CountState, m: int, y: bytes) -> MatchReport:
    reads = m
    out = [0] if state.mismatches == 0 else []
    for s in range(1, len(y) - m + 1):
        state.remove(y[s - 1])
        state.add(y[s + m - 1])
        reads += 2
        if state.mismatches == 0:
            out.append(s)
    return MatchReport(tuple(out), reads, candidates=len(out), instrumented=True)
