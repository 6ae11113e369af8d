from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class MatchReport:
    """Occurrence positions of one search, plus optional instrumentation.

    Counters are only populated when the search ran instrumented
    (``instrumented=True``); otherwise they are all zero.

    ``inspections`` counts every read of a byte from the searched buffer,
    including reads made while verifying candidates and, for the suffix
    searchers, reads that land in the sentinel copy of the pattern.
    ``candidates`` counts fingerprint hits inside the text, ``verifications``
    the number of verification calls and ``verified_rejections`` the
    candidates verification threw out.
    """

    positions: tuple[int, ...]
    inspections: int = 0
    candidates: int = 0
    verifications: int = 0
    verified_rejections: int = 0
    instrumented: bool = False

    def __len__(self) -> int:
        return len(self.positions)


def empty_report(instrument: bool = False) -> MatchReport:
    return MatchReport((), instrumented=instrument)
