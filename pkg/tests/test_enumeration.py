import math

import pytest

from oracles import count_column_major, is_latin, naive_reduced
from parastrophe.classify import ClassKind, classify
from parastrophe.enumeration import (
    count_reduced_fast,
    enumerate_reduced,
    iter_reduced_rows,
    min_rows,
    second_rows,
    type_rank,
)
from parastrophe.errors import OrderUnsupported
from parastrophe.permutations import cycle_structure, Permutation

KNOWN = {1: 1, 2: 1, 3: 1, 4: 4, 5: 56, 6: 9408}


def streamed(n, pruning=False):
    out = []
    enumerate_reduced(n, pruning, out.append)
    return out


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_matches_naive_filter(n):
    got = sorted(tuple(map(tuple, y.rows)) for y in streamed(n))
    assert got == sorted(naive_reduced(n))


@pytest.mark.parametrize("n", [5, 6])
def test_matches_column_major_backtracking(n):
    assert enumerate_reduced(n) == count_column_major(n) == KNOWN[n]


@pytest.mark.parametrize("n", range(1, 7))
def test_fast_count_matches_stream(n):
    assert enumerate_reduced(n) == len(streamed(n)) == KNOWN[n]


def test_fast_count_per_second_row():
    for row2 in second_rows(6):
        assert count_reduced_fast(6, row2) == sum(1 for _ in iter_reduced_rows(6, row2=row2))


def test_stream_is_lex_sorted_reduced_and_latin():
    sqs = streamed(5)
    keys = [y.key() for y in sqs]
    assert keys == sorted(keys) and len(set(keys)) == 56
    assert all(y.is_reduced() and is_latin(y.rows) for y in sqs)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_pruned_stream_covers_every_representative(n):
    survivors = {y.key() for y in streamed(n, pruning=True)}
    assert enumerate_reduced(n, True) == len(survivors)
    for kind in ClassKind:
        reps = classify(n, kind, pruning=False).representatives
        assert {r.key() for r in reps} <= survivors


def test_pruned_candidate_counts():
    assert [enumerate_reduced(n, True) for n in (4, 5, 6)] == [2, 5, 322]


def test_min_rows_are_lex_minimal():
    n = 5
    for ctype, row in min_rows(n).items():
        same = [p for p in Permutation.all(n)
                if p(1) != 1 and all(p(i) != i for i in range(1, n + 1))
                and tuple(cycle_structure(p).lengths) == ctype]
        assert tuple(v - 1 for v in min(p.images for p in same)) == row
    ranks = type_rank(n)
    assert sorted(ranks.values()) == list(range(len(ranks)))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_all_squares_count(n):
    # every square is a unique isotopism-by-rows-and-columns image of a reduced one
    total = math.factorial(n) * math.factorial(n - 1) * KNOWN[n]
    assert total == {1: 1, 2: 2, 3: 12, 4: 576, 5: 161280}[n]


def test_order_limits():
    with pytest.raises(OrderUnsupported):
        enumerate_reduced(8)
    with pytest.raises(OrderUnsupported):
        enumerate_reduced(7)
    with pytest.raises(OrderUnsupported):
        classify(7, "isotopy")
    with pytest.raises(OrderUnsupported):
        enumerate_reduced(8, allow_order_7=True)
