import itertools
import random

import pytest

from parastrophe.conjugate import ALL_TAGS, ConjugateTag, conjugate, conjugate_via_oa
from parastrophe.errors import TagError
from parastrophe.latin import LatinSquare, random_latin_square, validate
from parastrophe.permutations import Permutation

NAMES = [
    ("(1)", "[r,c,e]"),
    ("(1 2)", "[c,r,e]"),
    ("(2 3)", "[r,e,c]"),
    ("(1 3)", "[e,c,r]"),
    ("(1 2 3)", "[c,e,r]"),
    ("(1 3 2)", "[e,r,c]"),
]


@pytest.mark.parametrize("cycle, bracket", NAMES)
def test_dual_names(cycle, bracket):
    tag = ConjugateTag.parse(cycle)
    assert tag.cycle == cycle
    assert tag.bracket == bracket
    assert ConjugateTag.parse(bracket) is tag
    assert ConjugateTag.parse(bracket.strip("[]").replace(",", "").upper()) is tag


@pytest.mark.parametrize("text", ["(23)", " (2 3) ", "REC", "[R, E, C]", "(3 2)"])
def test_parse_variants(text):
    assert ConjugateTag.parse(text) is ConjugateTag.REC


@pytest.mark.parametrize("text", ["", "(1 4)", "rrc", "(1 1)", "23", "(1 2"])
def test_parse_rejects(text):
    with pytest.raises(TagError):
        ConjugateTag.parse(text)


def test_tag_group_table():
    assert len(set(ALL_TAGS)) == 6
    for a, b in itertools.product(ALL_TAGS, repeat=2):
        ab = a * b
        assert all(ab(k) == a(b(k)) for k in (1, 2, 3))
        assert (a * a.inverse()) is ConjugateTag.RCE


def test_identity_tag(a1):
    assert conjugate(a1, ConjugateTag.RCE) == a1


def test_row_inverse_worked_row(reduced5):
    z = conjugate(reduced5, ConjugateTag.parse("(2 3)"))
    assert z.row(3) == Permutation([5, 4, 1, 3, 2])


def test_row_inverse_of_a1(a1):
    want = [[1, 2, 3, 4, 5], [5, 1, 2, 3, 4], [4, 5, 1, 2, 3], [3, 4, 5, 1, 2], [2, 3, 4, 5, 1]]
    assert conjugate(a1, ConjugateTag.REC) == LatinSquare(want)
    assert conjugate_via_oa(a1, ConjugateTag.REC) == LatinSquare(want)


def test_inverse_means_permutation_inverse(reduced5):
    # reversal of [3 5 4 2 1] would give [1 2 4 5 3]
    z = conjugate(reduced5, ConjugateTag.REC)
    assert z.rows[2] == (5, 4, 1, 3, 2)
    assert z.rows[2] != (1, 2, 4, 5, 3)


def test_symmetric_square_column_inverse_is_transposed_row_inverse(a1):
    # (1 3) = (1 2)(2 3)(1 2), and A1 is its own transpose
    assert a1.transpose() == a1
    col_inv = conjugate_via_oa(a1, ConjugateTag.ECR)
    row_inv = conjugate_via_oa(a1, ConjugateTag.REC)
    assert col_inv == row_inv.transpose()
    assert col_inv != row_inv


def test_order_one_fixed_by_all():
    y = LatinSquare([[1]])
    for t in ALL_TAGS:
        assert conjugate_via_oa(y, t) == y == conjugate(y, t)


def test_transpose_via_oa(rng):
    for _ in range(100):
        y = random_latin_square(rng.randint(1, 8), rng)
        assert conjugate_via_oa(y, ConjugateTag.CRE) == y.transpose()


def test_descriptions_of_each_tag(rng):
    y = random_latin_square(6, rng)
    n = 6
    cols = [y.column(j) for j in range(1, n + 1)]
    rows = [y.row(i) for i in range(1, n + 1)]
    assert [~r for r in rows] == [conjugate(y, ConjugateTag.REC).row(i) for i in range(1, n + 1)]
    assert [~c for c in cols] == [conjugate(y, ConjugateTag.ECR).column(j) for j in range(1, n + 1)]
    assert [~c for c in cols] == [conjugate(y, ConjugateTag.ERC).row(i) for i in range(1, n + 1)]
    assert [~r for r in rows] == [conjugate(y, ConjugateTag.CER).column(j) for j in range(1, n + 1)]


@pytest.mark.parametrize("n", range(1, 9))
def test_oracle_equivalence(n):
    rng = random.Random(100 + n)
    for _ in range(50):
        y = random_latin_square(n, rng)
        for t in ALL_TAGS:
            z = conjugate(y, t)
            assert z == conjugate_via_oa(y, t)
            validate(z.rows)


def test_composition_law(rng):
    for n in range(3, 7):
        y = random_latin_square(n, rng)
        for e1, e2 in itertools.product(ALL_TAGS, repeat=2):
            assert conjugate(conjugate(y, e2), e1) == conjugate(y, e1 * e2)


def test_involutions_and_three_cycles(rng):
    y = random_latin_square(7, rng)
    for name in ("(1 2)", "(2 3)", "(1 3)"):
        t = ConjugateTag.parse(name)
        assert conjugate(conjugate(y, t), t) == y
    for name in ("(1 2 3)", "(1 3 2)"):
        t = ConjugateTag.parse(name)
        assert conjugate(conjugate(conjugate(y, t), t), t) == y


def test_three_cycles_factor_through_transpositions(rng):
    y = random_latin_square(6, rng)
    f = ConjugateTag.parse
    assert conjugate(y, f("(1 2 3)")) == conjugate(conjugate(y, f("(1 2)")), f("(1 3)"))
    assert conjugate(y, f("(1 3 2)")) == conjugate(conjugate(y, f("(1 3)")), f("(1 2)"))
