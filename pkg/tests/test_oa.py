import random

import pytest

from oracles import A1, V1
from parastrophe.conjugate import ALL_TAGS, ConjugateTag
from parastrophe.errors import O1Violation, O2Violation, O3Violation
from parastrophe.latin import LatinSquare, random_latin_square
from parastrophe.oa import OrthogonalArray, check_oa, from_oa, permute_oa_rows, to_oa


def test_to_oa_matches_displayed_v1(a1):
    assert [list(r) for r in to_oa(a1).component_rows] == V1


def test_small_arrays():
    assert to_oa(LatinSquare([[1]])).columns == ((1, 1, 1),)
    assert to_oa(LatinSquare([[1, 2], [2, 1]])).columns == ((1, 1, 1), (1, 2, 2), (2, 1, 2), (2, 2, 1))


def test_from_oa_v1(a1):
    oa = OrthogonalArray(5, tuple(zip(*V1)))
    assert from_oa(oa) == a1
    cols = list(oa.columns)
    cols[0], cols[1] = cols[1], cols[0]
    assert from_oa(OrthogonalArray(5, tuple(cols))) == a1


@pytest.mark.parametrize("n", range(1, 9))
def test_round_trip(n):
    rng = random.Random(n)
    for _ in range(20):
        y = random_latin_square(n, rng)
        assert from_oa(to_oa(y)) == y
        shuffled = list(to_oa(y).columns)
        rng.shuffle(shuffled)
        assert from_oa(OrthogonalArray(n, tuple(shuffled))) == y


def test_violations():
    good = list(to_oa(LatinSquare([[1, 2], [2, 1]])).columns)
    with pytest.raises(O1Violation):
        check_oa(OrthogonalArray(2, tuple(good[:3] + [(2, 2, 3)])))
    with pytest.raises(O2Violation):
        check_oa(OrthogonalArray(2, tuple(good[:3] + [(2, 1, 1)])))
    # rows 1 and 2 fine, but (1,1,1) and (1,2,1) share two positions
    bad = [(1, 1, 1), (1, 2, 1), (2, 1, 2), (2, 2, 2)]
    with pytest.raises(O3Violation) as exc:
        from_oa(OrthogonalArray(2, tuple(bad)))
    assert (exc.value.col1, exc.value.col2) == (1, 2)


def test_row_permutation_displays():
    y = [[1, 3, 2], [2, 1, 3], [3, 2, 1]]
    v = to_oa(LatinSquare(y))
    r, c, e = v.component_rows
    assert permute_oa_rows(v, ConjugateTag.RCE) == v
    # interchanging array rows 2 and 3
    assert permute_oa_rows(v, ConjugateTag.parse("(2 3)")).component_rows == (r, e, c)
    # interchanging array rows 1 and 2
    assert permute_oa_rows(v, ConjugateTag.parse("(1 2)")).component_rows == (c, r, e)
    assert permute_oa_rows(v, ConjugateTag.parse("(1 3)")).component_rows == (e, c, r)


def test_transpose_anchor(rng):
    for _ in range(20):
        y = random_latin_square(6, rng)
        assert from_oa(permute_oa_rows(to_oa(y), ConjugateTag.CRE)) == y.transpose()


def test_row_permutation_keeps_orthogonality_and_composes(rng):
    for n in (1, 2, 3, 5, 7):
        y = random_latin_square(n, rng)
        v = to_oa(y)
        for e1 in ALL_TAGS:
            check_oa(permute_oa_rows(v, e1))
            for e2 in ALL_TAGS:
                two_step = permute_oa_rows(permute_oa_rows(v, e2), e1)
                one_step = permute_oa_rows(v, e1 * e2)
                assert sorted(two_step.columns) == sorted(one_step.columns)
                assert from_oa(two_step) == from_oa(one_step)


def test_oa_text_format(a1):
    text = str(to_oa(a1))
    assert text.splitlines()[0] == " ".join(map(str, V1[0]))
    assert OrthogonalArray.parse(text) == to_oa(a1)
