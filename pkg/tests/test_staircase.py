from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from adnilpotent.exact_math import catalan
from adnilpotent.staircase import (
    PartitionError,
    RootCell,
    StaircasePartition,
    corner_cells,
    count_all,
    dimension,
    enumerate_all,
    from_corners,
    full_staircase,
    ideal_roots,
    make_partition,
    parse_partition,
    shard_keys,
    zero_partition,
)

EXAMPLE = (10, 10, 9, 6, 5, 4, 4, 3, 1, 1, 1, 1, 0)


def test_make_partition_examples():
    assert make_partition([3, 1], 3).parts == (3, 1, 0)
    assert make_partition([], 5).parts == (0,) * 5
    with pytest.raises(PartitionError):
        make_partition([4, 1], 3)


@pytest.mark.parametrize("parts,n", [([1, 2], 3), ([3, 3, 3], 3), ([-1], 2), ([1, 1, 1, 1], 3)])
def test_make_partition_rejects(parts, n):
    with pytest.raises(PartitionError):
        make_partition(parts, n)


def test_parse_partition():
    assert parse_partition("10,10,9,6,5,4,4,3,1,1,1,1,0", 13).parts == EXAMPLE
    assert parse_partition("0", 1).parts == (0,)
    assert parse_partition("2, 1", 3).parts == (2, 1, 0)
    with pytest.raises(PartitionError):
        parse_partition("a,b", 3)


def test_one_indexed_access():
    p = make_partition([3, 1], 3)
    assert (p[1], p[2], p[3], p[4]) == (3, 1, 0, 0)


def test_enumerate_examples():
    assert [p.parts for p in enumerate_all(1)] == [(0,), (1,)]
    assert len(list(enumerate_all(2))) == 5
    assert len(list(enumerate_all(4))) == 42


@pytest.mark.parametrize("n", range(1, 10))
def test_enumeration_is_catalan_and_distinct(n):
    parts = [p.parts for p in enumerate_all(n)]
    assert len(parts) == len(set(parts)) == catalan(n + 1) == count_all(n)
    assert parts == sorted(parts)


@pytest.mark.parametrize("n", range(1, 8))
def test_shards_partition_the_stream(n):
    merged = sorted(p.parts for k in shard_keys(n) for p in enumerate_all(n, k))
    assert merged == sorted(p.parts for p in enumerate_all(n))


def test_ideal_roots_examples():
    p = make_partition([3, 1], 3)
    assert {c.as_pair() for c in ideal_roots(p)} == {(1, 1), (1, 2), (1, 3), (2, 1)}
    assert ideal_roots(zero_partition(3)) == frozenset()
    assert len(ideal_roots(full_staircase(3))) == 6


def test_corner_examples():
    assert {c.as_pair() for c in corner_cells(make_partition([3, 1], 3))} == {(1, 3), (2, 1)}
    assert corner_cells(zero_partition(3)) == []
    assert {c.as_pair() for c in corner_cells(make_partition([2, 2, 1], 3))} == {(2, 2), (3, 1)}


def test_dimension_examples():
    assert dimension(make_partition([3, 1], 3)) == 4
    assert dimension(zero_partition(4)) == 0
    assert dimension(make_partition(EXAMPLE, 13)) == 55


def test_root_cell_interval():
    # cell (i, j) is the root alpha_i + ... + alpha_{n-j+1}
    c = RootCell(2, 1, 3)
    assert c.interval == (2, 3)
    assert c.simple_root_coefficients() == (0, 1, 1)
    assert RootCell(1, 3, 3).simple_root_coefficients() == (1, 0, 0)


@pytest.mark.parametrize("n", range(1, 7))
def test_corners_determine_the_ideal(n):
    for p in enumerate_all(n):
        assert from_corners(corner_cells(p), n) == p


@pytest.mark.parametrize("n", range(1, 7))
def test_ideal_is_upward_closed(n):
    # adding a root to one in the ideal stays inside: cells move up or left
    for p in enumerate_all(n):
        cells = {c.as_pair() for c in ideal_roots(p)}
        for i, j in cells:
            assert i == 1 or (i - 1, j) in cells
            assert j == 1 or (i, j - 1) in cells


@given(st.integers(1, 9).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.integers(0, n), min_size=n, max_size=n))))
def test_validation_matches_definition(case):
    n, raw = case
    ok = all(raw[i] >= raw[i + 1] for i in range(n - 1)) and all(raw[i] <= n - i for i in range(n))
    if ok:
        assert isinstance(make_partition(raw, n), StaircasePartition)
    else:
        with pytest.raises(PartitionError):
            make_partition(raw, n)
