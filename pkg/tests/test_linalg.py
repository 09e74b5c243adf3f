from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superjordan.linalg import (
    ExactMatrix,
    SingularMatrix,
    int_matrix_det_adjugate,
    invert_field_matrix,
    invert_fraction_matrix,
    nullspace_dim,
    rank,
    rank_by_minors,
    row_reduce_basis,
    span_contains,
)
from superjordan.ratfun import RatFun


def test_rank_examples():
    ident = [[1, 0], [0, 1]]
    assert rank(ident) == 2
    assert nullspace_dim(ident) == 0
    zero = [[0, 0], [0, 0]]
    assert rank(zero) == 0
    assert nullspace_dim(zero) == 2
    assert rank([[1, 2], [2, 4]]) == 1
    assert nullspace_dim([[1, 2], [2, 4]]) == 1
    assert rank([[1, 1], [1, 1], [0, 0]]) == 1


def test_exact_matrix_wrapper():
    m = ExactMatrix.from_rows([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]])
    assert m.rank() == 1
    assert m.nullspace_dim() == 1


@given(
    st.integers(min_value=1, max_value=4),
    st.integers(min_value=1, max_value=4),
    st.data(),
)
@settings(max_examples=80, deadline=None)
def test_rank_matches_minor_expansion(nrows, ncols, data):
    entries = data.draw(
        st.lists(
            st.lists(st.integers(min_value=-2, max_value=2), min_size=ncols, max_size=ncols),
            min_size=nrows,
            max_size=nrows,
        )
    )
    m = [[Fraction(x) for x in row] for row in entries]
    assert rank(m) == rank_by_minors(m)


def test_rank_over_ratfun():
    s = RatFun.var()
    one = RatFun.const(1)
    # rows proportional over the function field
    m = [[s, s * s], [one, s]]
    assert rank(m) == 1
    m2 = [[s, one], [one, s]]
    assert rank(m2) == 2


def test_invert_field_matrix_prefers_nonvanishing_pivots():
    s = RatFun.var()
    one = RatFun.const(1)
    zero = RatFun.const(0)
    m = [[s, one], [one, zero]]
    inv = invert_field_matrix(m)
    # m * inv == identity
    for i in range(2):
        for j in range(2):
            acc = RatFun.const(0)
            for k in range(2):
                acc = acc + m[i][k] * inv[k][j]
            assert acc == RatFun.const(1 if i == j else 0)
    with pytest.raises(SingularMatrix):
        invert_field_matrix([[s, s], [s, s]])


def test_invert_fraction_matrix():
    m = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(1)]]
    inv = invert_fraction_matrix(m)
    assert inv == [[Fraction(1), Fraction(-1)], [Fraction(-1), Fraction(2)]]


def test_row_reduce_and_membership():
    basis = row_reduce_basis([[Fraction(1), Fraction(1), Fraction(0)], [Fraction(2), Fraction(2), Fraction(0)]])
    assert len(basis) == 1
    assert span_contains(basis, [Fraction(3), Fraction(3), Fraction(0)])
    assert not span_contains(basis, [Fraction(1), Fraction(0), Fraction(0)])


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_det_adjugate_identity(data):
    n = data.draw(st.integers(min_value=1, max_value=4))
    g = data.draw(
        st.lists(
            st.lists(st.integers(min_value=-3, max_value=3), min_size=n, max_size=n),
            min_size=n,
            max_size=n,
        )
    )
    det, adj = int_matrix_det_adjugate(g)
    # g . adj = det * I
    for i in range(n):
        for j in range(n):
            acc = sum(g[i][k] * adj[k][j] for k in range(n))
            assert acc == (det if i == j else 0)
