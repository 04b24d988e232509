import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from egqldpc.binmat import (
    BinMatrix,
    RowBasis,
    circulant,
    count_four_cycles_by_columns,
    four_cycle_counts,
    four_cycles_and_girth,
    is_self_orthogonal,
    min_distance_exhaustive,
    nullspace_gf2,
    overlap_profile,
    rank_gf2,
    tanner_girth,
)
from egqldpc.construct import TOY_TYPE1, build_matrix, type1_matrix, type2_matrix
from egqldpc.geometry import build_geometry, enumerate_lines

from oracles import brute_min_distance, brute_rank, girth_by_cycles

HAMMING_74 = BinMatrix.from_dense(
    [
        [1, 0, 1, 0, 1, 0, 1],
        [0, 1, 1, 0, 0, 1, 1],
        [0, 0, 0, 1, 1, 1, 1],
    ]
)


def small_matrices(max_rows=6, max_cols=8):
    return st.tuples(st.integers(1, max_rows), st.integers(1, max_cols)).flatmap(
        lambda s: arrays(np.uint8, s, elements=st.integers(0, 1))
    )


@given(small_matrices(5, 130))
def test_dense_round_trip(dense):
    m = BinMatrix.from_dense(dense)
    assert np.array_equal(m.to_dense(), dense)
    assert np.array_equal(m.row_weights(), dense.sum(axis=1))
    assert np.array_equal(m.col_weights(), dense.sum(axis=0))
    assert m.T.T == m


def test_immutable():
    m = BinMatrix.identity(3)
    with pytest.raises(ValueError):
        m.data[0, 0] = 0


def test_circulant_examples():
    assert circulant([1, 1, 0]).to_dense().tolist() == [[1, 1, 0], [0, 1, 1], [1, 0, 1]]
    assert circulant([1, 0, 0, 0, 0]) == BinMatrix.identity(5)
    c = circulant([1, 0, 1, 1, 0, 0, 0])
    assert set(c.row_weights().tolist()) == {3}
    assert set(c.col_weights().tolist()) == {3}
    with pytest.raises(ValueError):
        circulant([])


@given(arrays(np.uint8, st.integers(1, 12), elements=st.integers(0, 1)))
def test_circulant_commutes_with_shift(v):
    n = v.size
    shift = circulant([0, 1] + [0] * (n - 2)) if n > 1 else BinMatrix.identity(1)
    c = circulant(v)
    assert c @ shift == shift @ c


def test_rank_examples():
    assert rank_gf2(BinMatrix.identity(4)) == 4
    # rows of weight 2 make the four columns sum to zero
    assert rank_gf2(TOY_TYPE1) == brute_rank(TOY_TYPE1.to_dense()) == 3
    assert rank_gf2(BinMatrix.zeros(3, 5)) == 0


def test_rank_transpose_invariance():
    rng = np.random.default_rng(7)
    for _ in range(20):
        m = BinMatrix.from_dense(rng.integers(0, 2, (10, 14)))
        assert rank_gf2(m) == rank_gf2(m.T)


@given(small_matrices())
def test_rank_matches_span_size(dense):
    assert rank_gf2(BinMatrix.from_dense(dense)) == brute_rank(dense)


@given(small_matrices(5, 9))
def test_nullspace(dense):
    m = BinMatrix.from_dense(dense)
    basis = nullspace_gf2(m)
    assert basis.rows == m.cols - rank_gf2(m)
    if basis.rows:
        assert not (m @ basis.T).to_dense().any()
        assert rank_gf2(basis) == basis.rows


def test_matmul_matches_numpy():
    rng = np.random.default_rng(3)
    a = rng.integers(0, 2, (9, 70))
    b = rng.integers(0, 2, (70, 5))
    assert np.array_equal((BinMatrix.from_dense(a) @ BinMatrix.from_dense(b)).to_dense(), (a @ b) % 2)


def test_self_orthogonal_examples():
    adapted = BinMatrix.hstack([TOY_TYPE1.T, BinMatrix.from_dense(np.ones((4, 1)))])
    assert is_self_orthogonal(adapted)
    rep = is_self_orthogonal(BinMatrix.identity(3))
    assert not rep and rep.pair == (0, 0)
    assert is_self_orthogonal(BinMatrix.zeros(4, 6))


@given(small_matrices())
def test_self_orthogonal_iff_even_weights_and_overlaps(dense):
    m = BinMatrix.from_dense(dense)
    even = all(w % 2 == 0 for w in dense.sum(axis=1))
    if m.rows >= 2:
        even &= all(v % 2 == 0 for v in overlap_profile(m).histogram)
    assert bool(is_self_orthogonal(m)) == even


def test_overlap_profile_examples():
    prof = overlap_profile(TOY_TYPE1.T)
    assert prof.histogram == {1: 6}
    assert overlap_profile(BinMatrix.identity(5)).histogram == {0: 10}


def test_overlap_profile_eg24_type2():
    g = build_geometry(4, 2)
    ht = type2_matrix(g, 1)
    assert ht.shape == (15, 15)
    prof = overlap_profile(ht)
    # oracle: count non-origin lines through both points
    lines = enumerate_lines(g, "not_origin")
    for i in range(15):
        for j in range(15):
            if i != j:
                a, b = g.field.alpha_pow(i), g.field.alpha_pow(j)
                assert prof.pair(i, j) == sum(a in L and b in L for L in lines)
        assert len(prof.partners(i, 1)) == 12
        assert len(prof.partners(i, 0)) == 2
    assert prof.histogram == {0: 15, 1: 90}


def test_four_cycles_on_adapted_eg22():
    h = build_matrix(2, 2, 1, "orth")
    counts, girth = four_cycles_and_girth(h)
    assert counts[np.triu_indices(3, 1)].tolist() == [1, 1, 1]
    assert counts.sum() == 3
    assert girth == 4


def test_single_circulant_eg24_has_girth_six_or_more():
    h1 = circulant(type1_matrix(build_geometry(4, 2), 1).to_dense()[0])
    assert four_cycle_counts(h1).sum() == 0
    assert count_four_cycles_by_columns(h1) == 0
    assert tanner_girth(h1) >= 6


def test_identity_girth_infinite():
    assert tanner_girth(BinMatrix.identity(4)) == math.inf


@settings(max_examples=60, deadline=None)
@given(small_matrices(4, 5))
def test_girth_matches_cycle_search(dense):
    assert tanner_girth(BinMatrix.from_dense(dense)) == girth_by_cycles(dense)


@given(small_matrices(7, 9))
def test_four_cycle_counters_agree(dense):
    m = BinMatrix.from_dense(dense)
    assert int(four_cycle_counts(m).sum()) == count_four_cycles_by_columns(m)


def test_min_distance_examples():
    res = min_distance_exhaustive(build_matrix(2, 2, 1, "orth"))
    assert res.exact and res.distance == 3
    assert res.codeword.tolist() == [1, 1, 1, 0, 0, 0, 0]
    assert min_distance_exhaustive(BinMatrix.identity(3)).status == "no_codeword"
    assert min_distance_exhaustive(HAMMING_74).distance == 3


@settings(max_examples=50, deadline=None)
@given(small_matrices(5, 10))
def test_min_distance_matches_brute_force(dense):
    m = BinMatrix.from_dense(dense)
    res = min_distance_exhaustive(m)
    assert res.distance == brute_min_distance(dense)
    # the subset search path must agree with the basis enumeration path
    assert min_distance_exhaustive(m, gray_max_nullity=-1).distance == res.distance


def test_min_distance_capped_search():
    h = build_matrix(2, 3, 3, "orth")
    capped = min_distance_exhaustive(h, weight_cap=2, full_enum_cols=20)
    assert capped.status == "exceeds_cap"
    found = min_distance_exhaustive(h, weight_cap=3, full_enum_cols=20)
    assert found.distance == 3
    assert not (h.mul_vec(found.codeword)).any()


@pytest.mark.parametrize("q,m,ell", [(2, 3, 3), (2, 3, 1), (2, 4, 7), (3, 2, 1), (4, 2, 1)])
def test_type2_distance_at_least_rho_plus_one(q, m, ell):
    ht = type2_matrix(build_geometry(q, m), ell)
    res = min_distance_exhaustive(ht, weight_cap=q, full_enum_cols=0)
    assert res.status in ("exceeds_cap", "no_codeword")


def test_row_basis():
    rows = [0b0011, 0b0110, 0b0101]
    basis = RowBasis(rows)
    assert basis.rank == 2
    assert 0b0101 in basis and 0 in basis
    assert 0b0001 not in basis
