import numpy as np
import pytest

from heapmatch.corpus import (
    CorpusError,
    CorpusSpec,
    SplitMix64,
    extract_offsets,
    extract_patterns,
    generate_random,
    load_text,
)
from heapmatch.parikh import brute_force_search

# Published SplitMix64 outputs for seed 1234567.
REFERENCE_OUTPUTS = [6457827717110365317, 3203168211198807973, 9817491932198370423,
                     4593380528125082431, 16408922859458223821]


def test_splitmix64_reference_outputs():
    rng = SplitMix64(1234567)
    assert [rng.next_u64() for _ in range(5)] == REFERENCE_OUTPUTS


def test_vectorised_words_continue_the_scalar_stream():
    a = SplitMix64(1234567)
    a.next_u64()
    words = a.words(4)
    assert [int(w) for w in words] == REFERENCE_OUTPUTS[1:]
    assert a.next_u64() == SplitMix64(1234567).words(6)[5]


def scalar_generate(n, sigma, seed):
    """Independent scalar rendering of the byte-sampling rule."""
    rng = SplitMix64(seed)
    limit = 256 - 256 % sigma
    out = bytearray()
    while len(out) < n:
        word = rng.next_u64()
        for k in range(8):
            b = (word >> (8 * k)) & 0xFF
            if b < limit and len(out) < n:
                out.append(b % sigma)
    return bytes(out)


@pytest.mark.parametrize("n, sigma, seed", [(8, 2, 42), (1000, 96, 3), (777, 3, 0), (5000, 256, 9), (1, 7, 1)])
def test_generate_random_matches_scalar_rule(n, sigma, seed):
    assert generate_random(n, sigma, seed) == scalar_generate(n, sigma, seed)


def test_generate_random_range_and_determinism():
    y = generate_random(8, 2, 42)
    assert len(y) == 8 and set(y) <= {0, 1}
    assert generate_random(8, 2, 42) == y


def test_generate_random_is_balanced():
    n = 10 ** 6
    y = np.frombuffer(generate_random(n, 2, 2024), dtype=np.uint8)
    ones = int(y.sum())
    sd = (n * 0.25) ** 0.5
    assert abs(ones - n / 2) <= 3 * sd
    assert abs((n - ones) - n / 2) <= 3 * sd


@pytest.mark.parametrize("n, sigma", [(0, 2), (10, 1), (10, 257)])
def test_generate_random_rejects_bad_args(n, sigma):
    with pytest.raises(ValueError):
        generate_random(n, sigma, 0)


def test_load_text_is_raw(tmp_path):
    f = tmp_path / "t.bin"
    f.write_bytes(b"ab\x00cd\xffefgh")
    assert load_text(f) == b"ab\x00cd\xffefgh"
    empty = tmp_path / "e"
    empty.write_bytes(b"")
    assert load_text(empty) == b""


def test_load_text_missing_file(tmp_path):
    with pytest.raises(CorpusError, match="cannot read"):
        load_text(tmp_path / "nope")


def test_extract_whole_text():
    y = generate_random(100, 4, 1)
    assert extract_patterns(y, 100, 1, 5) == [y]


def test_extracted_patterns_occur_where_extracted():
    y = generate_random(5000, 20, 7)
    offsets = extract_offsets(len(y), 16, 50, 11)
    patterns = extract_patterns(y, 16, 50, 11)
    assert extract_patterns(y, 16, 50, 11) == patterns
    for o, x in zip(offsets, patterns):
        assert 0 <= o <= len(y) - 16
        assert o in brute_force_search(x, y)


def test_extract_rejects_short_text():
    with pytest.raises(ValueError):
        extract_patterns(b"abc", 4, 1, 0)


def test_corpus_spec(tmp_path):
    assert CorpusSpec(n=64, sigma=4, seed=3).materialize() == generate_random(64, 4, 3)
    f = tmp_path / "c"
    f.write_bytes(b"xyz")
    assert CorpusSpec(kind="file", path=str(f)).materialize() == b"xyz"
    for bad in ({"kind": "random", "sigma": 1}, {"kind": "file"}, {"kind": "zip"}):
        with pytest.raises(ValueError):
            CorpusSpec(**bad)
