"""Filtering variants: the fingerprint is the plain sum of byte codes.

Byte sums are cheap but not unique (``b"ab"`` and ``b"`c"`` both sum to 195),
so every hit is confirmed with a Parikh-vector check before it is reported.
"""

from __future__ import annotations

from dataclasses import dataclass

from .heap import (
    MembershipMap,
    SentinelView,
    backward_scan_counted,
    backward_scan_fast,
    compute_membership_map,
    prefix_scan_counted,
    prefix_scan_fast,
)
from .parikh import ParikhVector, compute_parikh_vector
from .report import MatchReport, empty_report

BYTE_CODES = tuple(range(256))


@dataclass(frozen=True)
class ByteSumProfile:
    pattern: bytes
    m: int
    delta_sum: int
    membership: MembershipMap
    pv: ParikhVector


def build_byte_sum_profile(x: bytes) -> ByteSumProfile:
    if not x:
        raise ValueError("pattern must not be empty")
    return ByteSumProfile(
        pattern=bytes(x),
        m=len(x),
        delta_sum=sum(x),
        membership=compute_membership_map(x),
        pv=compute_parikh_vector(x),
    )


def hfam_search(profile: ByteSumProfile, y: bytes, *, instrument: bool = False) -> MatchReport:
    m = profile.m
    if len(y) < m:
        return empty_report(instrument)
    if instrument:
        return prefix_scan_counted(y, m, BYTE_CODES, profile.delta_sum, profile.pv)
    return MatchReport(prefix_scan_fast(y, m, BYTE_CODES, profile.delta_sum, profile.pv))


def bhfam_search(
    profile: ByteSumProfile,
    y: bytes,
    *,
    instrument: bool = False,
    sentinel_copy: bool = True,
) -> MatchReport:
    """Suffix-based byte-sum filter.

    Windows holding a byte absent from the pattern can never match, so the
    membership skips of the exact suffix search stay sound here.
    """
    m, n = profile.m, len(y)
    if n < m:
        return empty_report(instrument)
    member = profile.membership.member
    buf = bytes(y) + profile.pattern if sentinel_copy else SentinelView(y, profile.pattern)
    if instrument:
        return backward_scan_counted(buf, n, m, BYTE_CODES, member, profile.delta_sum, profile.pv)
    if not sentinel_copy:
        report = backward_scan_counted(buf, n, m, BYTE_CODES, member, profile.delta_sum, profile.pv)
        return MatchReport(report.positions)
    return MatchReport(
        backward_scan_fast(buf, n, m, BYTE_CODES, member, profile.delta_sum, profile.pv)
    )
