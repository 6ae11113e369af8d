import math
import random

import pytest

SIGMAS = (2, 4, 8, 20, 96)


def random_instances(count, seed, max_n=4096, max_m=64):
    """Seeded (pattern, text) pairs over the alphabet sizes used throughout the suite.

    Half of the text lengths are log-uniform in [1, max_n], so short texts,
    where most boundary handling happens, are well represented; the rest are
    uniform in [1, max_n]. Half of the patterns are
    cut out of the text, so they occur at least once.
    """
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        sigma = rng.choice(SIGMAS)
        m = rng.randint(1, max_m)
        if rng.random() < 0.5:
            n = int(math.exp(rng.uniform(0, math.log(max_n))))
        else:
            n = rng.randint(1, max_n)
        y = bytes(rng.randrange(sigma) for _ in range(n))
        if n >= m and rng.random() < 0.5:
            s = rng.randrange(n - m + 1)
            x = y[s:s + m]
        else:
            x = bytes(rng.randrange(sigma) for _ in range(m))
        out.append((x, y))
    return out


def edge_instances():
    rng = random.Random(99)
    wide = bytes(rng.randrange(96) for _ in range(3000))
    return [
        (b"a", b"banana"),                       # m = 1
        (b"\x00", bytes(50)),
        (b"abcab", b"bacba"),                    # m = n
        (b"abcab", b"abcaa"),
        (b"abc", b"xyzxyzxyz"),                  # absent
        (b"aaaa", b"a" * 100),                   # all-equal text
        (b"aab", b"a" * 100),
        (bytes([1, 2]), wide),                   # non-member-dense text
        (bytes([5, 5, 7, 9, 9, 9]), wide),
        (b"ab", b"a"),                           # text shorter than pattern
        (bytes(range(256)), bytes(range(256)) * 3),
    ]


@pytest.fixture(scope="session")
def instances():
    return random_instances(1000, seed=20240601) + edge_instances()
