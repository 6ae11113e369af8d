from collections import Counter
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heapmatch.parikh import (
    ParikhVector,
    brute_force_counted,
    brute_force_search,
    compute_parikh_vector,
    verify,
)

small_bytes = st.binary(max_size=40).map(lambda b: bytes(c % 4 for c in b))


def test_parikh_vector_of_abab():
    pv = compute_parikh_vector(b"abab")
    assert pv[ord("a")] == 2 and pv[ord("b")] == 2
    assert pv.total == 4
    assert pv.support() == [ord("a"), ord("b")]


def test_parikh_vector_of_empty():
    pv = compute_parikh_vector(b"")
    assert pv.total == 0
    assert not any(pv.counts)


def test_parikh_vector_of_banana_matches_tally():
    tally = Counter(b"banana")
    pv = compute_parikh_vector(b"banana")
    assert dict(tally) == {ord("a"): 3, ord("b"): 1, ord("n"): 2}
    assert all(pv[c] == tally.get(c, 0) for c in range(256))
    assert pv.total == 6


def test_parikh_vector_rejects_inconsistent_total():
    with pytest.raises(ValueError):
        ParikhVector((0,) * 256, 1)


@pytest.mark.parametrize("x, m, y, s, expected", [
    (b"ab", 2, b"ba", 0, True),
    (b"ab", 2, b"bb", 0, False),
    (b"aab", 3, b"xaba", 1, True),
    (b"aab", 3, b"xaba", 0, False),
])
def test_verify_examples(x, m, y, s, expected):
    assert verify(compute_parikh_vector(x), m, y, s) is expected


def test_verify_rejects_out_of_range_offset():
    with pytest.raises(IndexError):
        verify(compute_parikh_vector(b"ab"), 2, b"abc", 2)


@pytest.mark.parametrize("x, y, expected", [
    (b"ab", b"abba", (0, 2)),
    (b"aa", b"aaa", (0, 1)),
    (b"ab", b"cd", ()),
    (b"", b"abc", ()),
    (b"abc", b"ab", ()),
])
def test_brute_force_examples(x, y, expected):
    assert brute_force_search(x, y) == expected


def test_brute_force_matches_window_enumeration():
    y = b"abbabaabbbaab"
    for m in range(1, 6):
        for x in {bytes(p) for p in permutations(b"aabbb", m)}:
            windows = tuple(s for s in range(len(y) - m + 1) if sorted(y[s:s + m]) == sorted(x))
            assert brute_force_search(x, y) == windows


def test_brute_force_counted_agrees():
    positions, reads = brute_force_counted(b"ab", b"abba")
    assert positions == (0, 2)
    # windows "ab", "bb" (stops after the second b), "ba"
    assert reads == 2 + 2 + 2


@given(st.binary(max_size=30), st.randoms(use_true_random=False))
def test_parikh_vector_is_permutation_invariant(x, rnd):
    shuffled = bytearray(x)
    rnd.shuffle(shuffled)
    assert compute_parikh_vector(x) == compute_parikh_vector(bytes(shuffled))


@settings(max_examples=300)
@given(small_bytes, small_bytes)
def test_verify_iff_equal_parikh_vectors(x, y):
    if not x or len(y) < len(x):
        return
    pv = compute_parikh_vector(x)
    m = len(x)
    hits = brute_force_search(x, y)
    for s in range(len(y) - m + 1):
        same = compute_parikh_vector(y[s:s + m]) == pv
        assert verify(pv, m, y, s) is same
        assert (s in hits) is same
