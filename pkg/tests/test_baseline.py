import random

import pytest

from heapmatch.baseline import CountState, wm_search
from heapmatch.parikh import brute_force_search, compute_parikh_vector


@pytest.mark.parametrize("x, y, expected", [
    (b"ab", b"abba", (0, 2)),
    (b"ab", b"abab", (0, 1, 2)),
    (b"aa", b"bb", ()),
    (b"", b"ab", ()),
    (b"abc", b"ab", ()),
])
def test_wm_examples(x, y, expected):
    assert wm_search(x, y).positions == expected
    assert wm_search(x, y, instrument=True).positions == expected


def test_count_state_tracks_mismatches():
    rng = random.Random(4)
    x = bytes(rng.randrange(5) for _ in range(12))
    target = compute_parikh_vector(x)
    state = CountState(target)
    assert state.mismatches == len(target.support())
    y = bytes(rng.randrange(6) for _ in range(500))
    m = len(x)
    for c in y[:m]:
        state.add(c)
    for s in range(1, len(y) - m + 1):
        state.remove(y[s - 1])
        state.add(y[s + m - 1])
        window = compute_parikh_vector(y[s:s + m])
        recount = sum(1 for c in range(256) if window[c] != target[c])
        assert state.mismatches == recount
        assert (state.mismatches == 0) == (window == target)


def test_wm_agrees_with_oracle_and_reads_each_slide_twice():
    rng = random.Random(6)
    for _ in range(300):
        sigma = rng.choice([2, 4, 20, 96])
        y = bytes(rng.randrange(sigma) for _ in range(rng.randint(0, 500)))
        x = bytes(rng.randrange(sigma) for _ in range(rng.randint(1, 30)))
        expected = brute_force_search(x, y)
        assert wm_search(x, y).positions == expected
        r = wm_search(x, y, instrument=True)
        assert r.positions == expected
        if len(y) >= len(x):
            assert r.inspections == len(x) + 2 * (len(y) - len(x))
