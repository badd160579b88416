"""Determinism and independence of the seeded randomness layer."""

from hypothesis import given, settings
from hypothesis import strategies as st

from intramorph.seeds import SeededSource, derive_seed

seeds = st.integers(min_value=0, max_value=2**64 - 1)


def test_known_stream_is_stable():
    # golden values pin the splitmix64 implementation across refactors
    source = SeededSource(42)
    assert [source.next_u64() for _ in range(3)] == [
        13679457532755275413,
        2949826092126892291,
        5139283748462763858,
    ]


@given(seeds)
def test_same_seed_same_stream(seed):
    a = SeededSource(seed)
    b = SeededSource(seed)
    assert [a.next_u64() for _ in range(20)] == [b.next_u64() for _ in range(20)]


@given(seeds)
def test_unit_in_half_open_interval(seed):
    source = SeededSource(seed)
    for _ in range(50):
        value = source.unit()
        assert 0.0 <= value < 1.0


@given(seeds, st.integers(min_value=1, max_value=1000))
def test_below_respects_bound(seed, bound):
    source = SeededSource(seed)
    for _ in range(20):
        assert 0 <= source.below(bound) < bound


def test_below_rejects_nonpositive_bound():
    import pytest

    with pytest.raises(ValueError):
        SeededSource(1).below(0)


@given(seeds, st.integers(min_value=0, max_value=500))
@settings(max_examples=50)
def test_unit_block_matches_scalar_loop(seed, count):
    scalar = SeededSource(seed)
    vectorized = SeededSource(seed)
    expected = [scalar.unit() for _ in range(count)]
    block = vectorized.unit_block(count)
    assert list(block) == expected
    # both sources must land on the same stream position
    assert scalar.next_u64() == vectorized.next_u64()


@given(seeds)
def test_derive_is_deterministic_and_salt_sensitive(seed):
    assert derive_seed(seed, 3, 7) == derive_seed(seed, 3, 7)
    assert derive_seed(seed, 3, 7) != derive_seed(seed, 3, 8)
    assert derive_seed(seed, 3, 7) != derive_seed(seed, 4, 7)


@given(seeds)
def test_derived_streams_differ_between_iterations(seed):
    first = SeededSource(seed).derive(1)
    second = SeededSource(seed).derive(2)
    assert [first.next_u64() for _ in range(4)] != [second.next_u64() for _ in range(4)]


def test_derive_ignores_stream_position():
    consumed = SeededSource(99)
    consumed.next_u64()
    fresh = SeededSource(99)
    assert consumed.derive(5).next_u64() == fresh.derive(5).next_u64()


def test_seed_is_masked_to_64_bits():
    assert SeededSource(2**64 + 1).seed == 1


@given(seeds, st.lists(st.integers(min_value=0, max_value=9), min_size=1, max_size=5))
def test_choice_picks_members(seed, items):
    assert SeededSource(seed).choice(items) in items
