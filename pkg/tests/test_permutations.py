import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from parastrophe.errors import DegreeMismatch, InvalidPermutation
from parastrophe.permutations import CycleStructure, Permutation, compose, cycle_structure, inverse


@st.composite
def perms(draw, n=None):
    n = n if n is not None else draw(st.integers(1, 9))
    return Permutation(draw(st.permutations(range(1, n + 1))))


@st.composite
def perm_pair(draw):
    n = draw(st.integers(1, 9))
    return draw(perms(n)), draw(perms(n))


def test_compose_examples():
    p = Permutation([2, 3, 1])
    assert compose(p, Permutation.identity(3)) == p
    assert compose(p, Permutation([2, 1, 3])) == Permutation([3, 2, 1])
    assert (p * ~p).is_identity()


def test_compose_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        compose(Permutation([1, 2]), Permutation([1, 2, 3]))


def test_inverse_examples():
    assert inverse(Permutation([3, 5, 4, 2, 1])) == Permutation([5, 4, 1, 3, 2])
    assert inverse(Permutation.identity(6)).is_identity()
    assert inverse(Permutation([2, 3, 4, 5, 1])) == Permutation([5, 1, 2, 3, 4])


def test_inverse_is_not_reversal():
    row = Permutation([3, 5, 4, 2, 1])
    assert inverse(row).images != tuple(reversed(row.images))


@pytest.mark.parametrize("images, lengths", [
    ([1, 2, 3, 4, 5], (1, 1, 1, 1, 1)),
    ([2, 3, 4, 5, 1], (5,)),
    ([2, 1, 4, 3, 5], (1, 2, 2)),
])
def test_cycle_structure_examples(images, lengths):
    assert cycle_structure(Permutation(images)).lengths == lengths


def test_text_forms():
    p = Permutation.parse("3 5 4 2 1")
    assert str(p) == "3 5 4 2 1"
    cs = cycle_structure(Permutation([2, 1, 4, 3, 5]))
    assert str(cs) == "1,2,2"
    assert CycleStructure.parse("2,1,2") == cs


@pytest.mark.parametrize("bad", [[], [1, 1], [0, 1], [2, 3]])
def test_rejects_non_permutations(bad):
    with pytest.raises(InvalidPermutation):
        Permutation(bad)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_associativity_exhaustive(n):
    ps = list(Permutation.all(n))
    for a, b, c in itertools.product(ps, repeat=3):
        assert compose(compose(a, b), c) == compose(a, compose(b, c))


@given(st.integers(1, 9).flatmap(lambda n: st.tuples(perms(n), perms(n), perms(n))))
def test_associativity_random(triple):
    a, b, c = triple
    assert (a * b) * c == a * (b * c)


@given(perms())
def test_double_inverse(p):
    assert inverse(inverse(p)) == p
    assert compose(p, inverse(p)).is_identity() and compose(inverse(p), p).is_identity()


@given(perms())
def test_cycle_structure_of_inverse(p):
    assert cycle_structure(p) == cycle_structure(inverse(p))
    assert sum(cycle_structure(p).lengths) == p.degree


@given(perm_pair())
def test_conjugation_invariance(pq):
    p, q = pq
    assert cycle_structure(q * p * inverse(q)) == cycle_structure(p)


def test_pointwise_definition():
    p, q = Permutation([3, 1, 2, 5, 4]), Permutation([2, 5, 4, 1, 3])
    r = compose(p, q)
    assert all(r(i) == p(q(i)) for i in range(1, 6))
