import pytest

import lucaszeck as lz


def test_lucas_terms():
    assert [lz.lucas(i) for i in range(6)] == [2, 1, 3, 4, 7, 11]
    assert lz.term(lz.RecurrenceSpec.fibonacci(), 1) == 1


def test_overflow_raises():
    with pytest.raises(OverflowError):
        lz.lucas(91)


def test_partitions_of_five():
    assert sorted(lz.enumerate_partitions(5)) == [[0, 2], [1, 3]]
    assert lz.canonical_partition(5) == [1, 3]
    assert lz.fibonacci_zeckendorf(100) == [4, 6, 11]


def test_invalid_input_is_value_error():
    with pytest.raises(ValueError):
        lz.canonical_partition(0)


def test_fixed_term_sets():
    assert lz.z_set(0, 4) == [2, 6, 9, 13]
    assert lz.q_sequence(0, 5) == [2, 6, 9, 13, 17]
    assert lz.k_set(3) == [5, 12, 16]


def test_density():
    assert lz.c_of(100) == 17
    assert lz.c_of(1000, "enum") == 171
    report = lz.beta_of(100)
    assert report["percent"] == "17.000%"
    assert lz.alpha(5) == "0.17082"


def test_golden_string():
    assert lz.golden_prefix(13) == "BABBABABBABBA"
    assert lz.b_count(5) == 3
