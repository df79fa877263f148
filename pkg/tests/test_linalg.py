from fractions import Fraction

import sympy
from hypothesis import given
from hypothesis import strategies as st

from graphcx.linalg import SparseMatQ, dense_rank, in_span, nullspace, rank, rank_rows

entries = st.integers(-3, 3).map(Fraction) | st.fractions(-2, 2, max_denominator=5)


@st.composite
def matrices(draw):
    r, c = draw(st.integers(0, 7)), draw(st.integers(1, 7))
    return [[draw(entries) for _ in range(c)] for _ in range(r)]


def _sparse(m):
    cols = len(m[0]) if m else 1
    return SparseMatQ(len(m), cols, {(i, j): v for i, row in enumerate(m) for j, v in enumerate(row)})


@given(matrices())
def test_rank_matches_sympy(m):
    expected = sympy.Matrix(m).rank() if m else 0
    assert rank(_sparse(m)) == dense_rank(m) == expected
    assert rank_rows([{j: v for j, v in enumerate(row)} for row in m]) == expected


@given(matrices())
def test_nullspace(m):
    a = _sparse(m)
    ns = nullspace(a)
    assert len(ns) == a.cols - rank(a)
    for v in ns:
        for row in m:
            assert sum(x * y for x, y in zip(row, v)) == 0


@given(matrices())
def test_in_span_of_own_rows(m):
    rows = [{j: v for j, v in enumerate(row)} for row in m]
    if rows:
        combo = {}
        for k, row in enumerate(rows):
            for j, v in row.items():
                combo[j] = combo.get(j, 0) + (k + 1) * v
        assert in_span(rows, combo)


def test_matmul_and_zero():
    a = SparseMatQ(2, 2, {(0, 1): 1})
    assert a.matmul(a).is_zero()
    assert not a.is_zero()
