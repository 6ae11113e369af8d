"""One entry point over every matcher, with optional alphabet reduction."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .baseline import wm_search
from .heap import MembershipMap, bhcam_search, build_profile, compute_membership_map, hcam_search
from .parikh import brute_force_counted, brute_force_search
from .relaxed import bhfam_search, build_byte_sum_profile, hfam_search
from .report import MatchReport, empty_report

# Tunable: thresholds for `auto`. Correctness never depends on them.
AUTO_MAX_PREFIX_SIGMA = 4
AUTO_MAX_PREFIX_M = 8


class AlgorithmId(str, enum.Enum):
    ORACLE = "oracle"
    WM = "wm"
    HCAM = "hcam"
    BHCAM = "bhcam"
    HFAM = "hfam"
    BHFAM = "bhfam"
    AUTO = "auto"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def parse(cls, name: str | AlgorithmId) -> AlgorithmId:
        if isinstance(name, cls):
            return name
        try:
            return cls(name)
        except ValueError:
            known = ", ".join(a.value for a in cls)
            raise ValueError(f"unknown algorithm {name!r} (expected one of: {known})") from None


CONCRETE_ALGORITHMS = tuple(a for a in AlgorithmId if a is not AlgorithmId.AUTO)


@dataclass(frozen=True)
class SearchRequest:
    pattern: bytes
    text: bytes
    algorithm: AlgorithmId | str = AlgorithmId.AUTO
    instrument: bool = False
    reduce_alphabet: bool = True


def reduce_text(y: bytes, membership: MembershipMap) -> bytes:
    """Replace every byte outside the pattern alphabet with one sentinel byte.

    The sentinel is the smallest byte value absent from the pattern. If the
    pattern uses all 256 values the text is returned unchanged.
    """
    member = membership.member
    sentinel = next((c for c in range(256) if not member[c]), None)
    if sentinel is None:
        return bytes(y)
    table = bytes(c if member[c] else sentinel for c in range(256))
    return bytes(y).translate(table)


def auto_select(m: int, sigma_x: int) -> AlgorithmId:
    if m < 1:
        raise ValueError("m must be positive")
    if sigma_x <= AUTO_MAX_PREFIX_SIGMA or m <= AUTO_MAX_PREFIX_M:
        return AlgorithmId.HCAM
    return AlgorithmId.BHCAM


def run_algorithm(algorithm: AlgorithmId, x: bytes, y: bytes, instrument: bool = False) -> MatchReport:
    """Run one concrete algorithm, preprocessing included."""
    if algorithm is AlgorithmId.ORACLE:
        if not instrument:
            return MatchReport(brute_force_search(x, y))
        positions, reads = brute_force_counted(x, y)
        windows = max(len(y) - len(x) + 1, 0)
        return MatchReport(positions, reads, windows, windows, windows - len(positions), True)
    if algorithm is AlgorithmId.WM:
        return wm_search(x, y, instrument=instrument)
    if algorithm is AlgorithmId.HCAM:
        return hcam_search(build_profile(x), y, instrument=instrument)
    if algorithm is AlgorithmId.BHCAM:
        return bhcam_search(build_profile(x), y, instrument=instrument)
    if algorithm is AlgorithmId.HFAM:
        return hfam_search(build_byte_sum_profile(x), y, instrument=instrument)
    if algorithm is AlgorithmId.BHFAM:
        return bhfam_search(build_byte_sum_profile(x), y, instrument=instrument)
    if algorithm is AlgorithmId.AUTO:
        membership = compute_membership_map(x)
        return run_algorithm(auto_select(len(x), membership.size), x, y, instrument)
    raise ValueError(f"unsupported algorithm {algorithm!r}")


def search(request: SearchRequest) -> MatchReport:
    algorithm = AlgorithmId.parse(request.algorithm)
    x, y = bytes(request.pattern), bytes(request.text)
    if not x or len(y) < len(x):
        return empty_report(request.instrument)
    if request.reduce_alphabet:
        y = reduce_text(y, compute_membership_map(x))
    return run_algorithm(algorithm, x, y, request.instrument)


def find(pattern: bytes, text: bytes, algorithm: AlgorithmId | str = AlgorithmId.AUTO) -> tuple[int, ...]:
    """Shorthand: positions of the abelian occurrences of `pattern` in `text`."""
    return search(SearchRequest(pattern, text, algorithm)).positions
