import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from gpoly.errors import DimensionTooLarge, IndexOutOfRange, NotSymmetric
from gpoly.linalg import (RatMatrix, bareiss_det, berkowitz, charpoly, det, get_permanent_cap,
                          mask, minor, perm, permanent_cap_from_env, permpoly, ryser_permanent,
                          set_permanent_cap)
from gpoly.arith import Poly
from gpoly.identities import mask_lemma

from oracles import (leibniz_det, leibniz_perm, rand_square, rats, shifted, sym_matrices)

K2 = RatMatrix([[0, 1], [1, 0]])
K3 = RatMatrix([[0, 1, 1], [1, 0, 1], [1, 1, 0]])


def test_minor_examples():
    assert minor(RatMatrix.identity(3), {0}, {0}) == RatMatrix.identity(2)
    M = RatMatrix([[1, 2], [3, 4]])
    assert minor(M, set(), set()) == M
    # x_st = s + t with 1-based s, t; deleting the third row/column
    X = RatMatrix([[s + t for t in range(1, 4)] for s in range(1, 4)])
    assert minor(X, {2}, {2}) == RatMatrix([[2, 3], [3, 4]])


def test_minor_off_diagonal_keeps_order():
    M = RatMatrix([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert minor(M, {0}, {1}) == RatMatrix([[4, 6], [7, 9]])


def test_minor_index_out_of_range():
    with pytest.raises(IndexOutOfRange):
        minor(RatMatrix.identity(2), {2}, {0})


def test_mask_example():
    X = RatMatrix([[11, 12, 13], [12, 22, 23], [13, 23, 33]])
    got = mask(X, 0, 1)
    assert got == RatMatrix([[11, 0, 13], [0, 22, 23], [13, 23, 33]])
    assert got == mask(X, 1, 0)
    assert mask(X, 2, 2) == RatMatrix([[11, 12, 13], [12, 22, 23], [13, 23, 0]])


def test_mask_of_zero_entry_is_identity():
    X = RatMatrix([[1, 0], [0, 2]])
    assert mask(X, 0, 1) == X


def test_mask_diagonal():
    assert mask(RatMatrix.identity(2), 0, 0) == RatMatrix.diagonal([0, 1])


def test_mask_errors():
    with pytest.raises(NotSymmetric):
        mask(RatMatrix([[1, 2], [3, 4]]), 0, 1)
    with pytest.raises(IndexOutOfRange):
        mask(RatMatrix.identity(2), 0, 5)


def test_det_examples():
    assert det(RatMatrix([[2, 1], [1, 2]])) == 3 == leibniz_det([[2, 1], [1, 2]])
    assert det(RatMatrix.identity(5)) == 1
    assert det(RatMatrix([])) == 1


def test_det_needs_pivoting():
    rows = [[0, 2, 1], [0, 1, 3], [4, 0, 0]]
    assert det(RatMatrix(rows)) == leibniz_det(rows)
    assert det(RatMatrix([[0, 1], [0, 2]])) == 0


def test_perm_examples():
    assert perm(RatMatrix([[1, 1], [1, 1]])) == 2 == leibniz_perm([[1, 1], [1, 1]])
    ones = [[1] * 3 for _ in range(3)]
    assert perm(RatMatrix(ones)) == 6 == leibniz_perm(ones)
    assert perm(RatMatrix.identity(3)) == 1
    assert perm(RatMatrix([])) == 1


def test_charpoly_examples():
    assert charpoly(K2) == Poly([-1, 0, 1])
    assert [leibniz_det(shifted(K2.rows, t)) for t in (0, 1, 2)] == [-1, 0, 3]
    assert charpoly(RatMatrix.zeros(3)) == Poly([0, 0, 0, 1])
    assert charpoly(K3) == Poly([-2, -3, 0, 1])
    assert all(charpoly(K3)(t) == leibniz_det(shifted(K3.rows, t)) for t in range(4))
    assert charpoly(RatMatrix([])) == Poly([1])


def test_permpoly_examples():
    assert permpoly(K2) == Poly([1, 0, 1])
    assert permpoly(RatMatrix.zeros(2)) == Poly([0, 0, 1])
    assert permpoly(K3) == Poly([-2, 3, 0, 1])
    assert all(permpoly(K3)(t) == leibniz_perm(shifted(K3.rows, t)) for t in range(-2, 3))
    assert permpoly(RatMatrix([])) == Poly([1])


def test_integer_kernels_directly():
    assert bareiss_det([[2, 1], [1, 2]]) == 3
    assert ryser_permanent([[1, 2], [3, 4]]) == 10
    assert berkowitz([[1, 2], [3, 4]]) == [1, -5, -2]


def test_permanent_cap():
    big = RatMatrix.identity(5)
    with pytest.raises(DimensionTooLarge):
        perm(big, cap=4)
    with pytest.raises(DimensionTooLarge):
        permpoly(big, cap=4)
    old = get_permanent_cap()
    try:
        set_permanent_cap(3)
        with pytest.raises(DimensionTooLarge):
            perm(big)
    finally:
        set_permanent_cap(old)
    assert perm(big) == 1
    with pytest.raises(ValueError):
        set_permanent_cap(-1)


def test_permanent_cap_from_env(monkeypatch):
    monkeypatch.setenv("GPOLY_PERMANENT_CAP", "7")
    assert permanent_cap_from_env() == 7
    monkeypatch.delenv("GPOLY_PERMANENT_CAP")
    assert permanent_cap_from_env() == 20


def test_not_square():
    with pytest.raises(ValueError):
        RatMatrix([[1, 2]])


def test_symmetric_predicate():
    assert K3.is_symmetric()
    assert not RatMatrix([[1, 2], [3, 4]]).is_symmetric()


def square_matrices(max_n):
    return st.integers(0, max_n).flatmap(
        lambda n: st.lists(st.lists(rats, min_size=n, max_size=n), min_size=n, max_size=n))


@settings(max_examples=120)
@given(square_matrices(6))
def test_det_matches_leibniz(rows):
    assert det(RatMatrix(rows)) == leibniz_det(rows)


@settings(max_examples=80)
@given(square_matrices(6))
def test_perm_matches_leibniz(rows):
    assert perm(RatMatrix(rows)) == leibniz_perm(rows)


def test_perm_matches_leibniz_at_seven():
    rng = random.Random(11)
    for _ in range(3):
        rows = rand_square(rng, 7)
        assert perm(RatMatrix(rows)) == leibniz_perm(rows)


@settings(max_examples=60)
@given(square_matrices(5), st.lists(rats, min_size=3, max_size=3))
def test_charpoly_evaluates_to_det(rows, ts):
    p = charpoly(RatMatrix(rows))
    assert p.leading == 1 and p.degree == len(rows)
    for t in ts:
        assert p(t) == leibniz_det(shifted(rows, t))


@settings(max_examples=40)
@given(square_matrices(5), st.lists(rats, min_size=3, max_size=3))
def test_permpoly_evaluates_to_perm(rows, ts):
    p = permpoly(RatMatrix(rows))
    assert p.leading == 1 and p.degree == len(rows)
    for t in ts:
        assert p(t) == leibniz_perm(shifted(rows, t))


@settings(max_examples=80)
@given(sym_matrices(max_n=5, min_n=1), st.data())
def test_mask_lemmas(rows, data):
    X = RatMatrix(rows)
    i = data.draw(st.integers(0, X.n - 1))
    j = data.draw(st.integers(0, X.n - 1))
    for permanent in (False, True):
        assert mask_lemma(X, i, j, permanent).holds


def test_mask_lemma_requires_symmetry():
    with pytest.raises(NotSymmetric):
        mask_lemma(RatMatrix([[1, 2], [3, 4]]), 0, 1)
