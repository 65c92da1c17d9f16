import random
from fractions import Fraction

import pytest
from sympy import GF
from sympy.polys.matrices import DomainMatrix
from hypothesis import given, settings, strategies as st

from lagsec.combinatorics import InvalidArgument
from lagsec.linalg import (
    SparseIntMatrix,
    bareiss_rank,
    is_prime,
    rank,
    rank_char0,
    rank_mod_p,
)
from lagsec.plucker import build_matrix
from lagsec.templates import L2, L3, L4


def fraction_rank(rows):
    A = [[Fraction(x) for x in r] for r in rows]
    rk = 0
    ncols = len(A[0]) if A else 0
    for c in range(ncols):
        piv = next((i for i in range(rk, len(A)) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[rk], A[piv] = A[piv], A[rk]
        for i in range(len(A)):
            if i != rk and A[i][c] != 0:
                f = A[i][c] / A[rk][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[rk])]
        rk += 1
    return rk


def test_displayed_blocks_mod_p():
    assert rank_mod_p(L3, 2) == 3
    assert rank_mod_p(L4, 3) == 14
    for p in (2, 3, 5, 7, 101):
        assert rank_mod_p(L2, p) == 1


def test_displayed_blocks_char0():
    assert rank_char0(L4) == 15
    assert rank_char0(L3) == 4
    for k in (1, 5, 9):
        eye = SparseIntMatrix(k, k, [(i, i, 1) for i in range(k)])
        assert rank_char0(eye) == k


def test_dispatch():
    assert rank(L4, 0) == 15
    assert rank(L4, 2) == 10
    assert rank(L2, 3) == 1
    with pytest.raises(InvalidArgument):
        rank(L4, 4)
    with pytest.raises(InvalidArgument):
        rank_mod_p(L4, 1)


def test_is_prime():
    assert [q for q in range(30) if is_prime(q)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert is_prime(30011) and not is_prime(30013 * 3)


def test_sparse_matrix_validation():
    with pytest.raises(InvalidArgument):
        SparseIntMatrix(2, 2, [(0, 0, 1), (0, 0, 2)])
    with pytest.raises(InvalidArgument):
        SparseIntMatrix(2, 2, [(2, 0, 1)])
    M = SparseIntMatrix(2, 3, [(1, 2, 5), (0, 1, -1), (0, 0, 0)])
    assert M.entries == [(0, 1, -1), (1, 2, 5)]
    assert SparseIntMatrix.from_dense(M.to_dense()) == M


small_mats = st.integers(1, 8).flatmap(
    lambda r: st.integers(1, 8).flatmap(
        lambda c: st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c),
                           min_size=r, max_size=r)))


@settings(max_examples=200, deadline=None)
@given(small_mats)
def test_char0_matches_rational_oracle(rows):
    expected = fraction_rank(rows)
    assert rank_char0(rows) == expected
    assert rank_char0(rows, "sparse") == expected
    assert bareiss_rank([list(r) for r in rows]) == expected


@settings(max_examples=200, deadline=None)
@given(small_mats, st.sampled_from([2, 3, 5, 7]))
def test_mod_p_matches_sympy_and_bounded(rows, p):
    dm = DomainMatrix([[GF(p)(x) for x in r] for r in rows], (len(rows), len(rows[0])), GF(p))
    expected = dm.rank()
    assert rank_mod_p(rows, p) == expected
    assert rank_mod_p(rows, p, "sparse") == expected
    assert rank_mod_p(rows, p) <= rank_char0(rows)


def test_rank_permutation_invariant():
    rng = random.Random(11)
    for M in (L4, L3, build_matrix(4)):
        for _ in range(5):
            rp = list(range(M.nrows)); cp = list(range(M.ncols))
            rng.shuffle(rp); rng.shuffle(cp)
            P = M.permuted(rp, cp)
            for c in (0, 2, 3, 5):
                assert rank(P, c) == rank(M, c)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
@pytest.mark.parametrize("conv", ["plain", "signed"])
def test_multimodular_cross_check(n, conv):
    B = build_matrix(n, conv)
    assert rank_char0(B) == max(rank_mod_p(B, q) for q in (1009, 2003, 30011))
