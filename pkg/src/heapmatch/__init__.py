"""Abelian (jumbled) pattern matching with heap-counting fingerprints."""

from .baseline import CountState, wm_search
from .corpus import CorpusSpec, SplitMix64, extract_patterns, generate_random, load_text
from .engine import AlgorithmId, SearchRequest, auto_select, find, reduce_text, search
from .heap import (
    HeapMapping,
    MembershipMap,
    PatternProfile,
    bhcam_search,
    build_profile,
    compute_heap_mapping,
    compute_membership_map,
    fingerprint_collision_possible,
    hcam_search,
    heap_value,
)
from .parikh import ParikhVector, brute_force_search, compute_parikh_vector, verify
from .relaxed import ByteSumProfile, bhfam_search, build_byte_sum_profile, hfam_search
from .report import MatchReport

__version__ = "0.1.0"
