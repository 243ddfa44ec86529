from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cobarkit.linalg import (
    Echelon,
    SparseMatrix,
    homology_at,
    induced_map_on_homology,
    inverse,
    is_invertible,
    kernel_basis,
    rank,
    rref,
    solve,
    span_basis,
)
from oracles import dense_rank, matmul

entries = st.fractions(min_value=-3, max_value=3, max_denominator=3)


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    r = draw(st.integers(0, max_rows))
    c = draw(st.integers(0, max_cols))
    # sparse-ish: many zeros make rank deficiency common
    rows = [[draw(st.one_of(st.just(Fraction(0)), entries)) for _ in range(c)] for _ in range(r)]
    return SparseMatrix(r, c, {(i, j): v for i, row in enumerate(rows) for j, v in enumerate(row) if v}), rows


def test_small_ranks():
    assert rank(SparseMatrix.from_dense([[1, 2], [2, 4]])) == 1
    assert rank(SparseMatrix.identity(4)) == 4
    assert rank(SparseMatrix.zero(3, 2)) == 0
    assert rank(SparseMatrix(0, 3)) == 0


def test_rref_exact_fractions():
    m = SparseMatrix.from_dense([[2, 1], [1, 3]])
    r, pivots, k = rref(m)
    assert k == 2 and pivots == [0, 1]
    assert r.to_dense() == [[1, 0], [0, 1]]
    assert solve(m, {0: 1, 1: 0}) == {0: Fraction(3, 5), 1: Fraction(-1, 5)}


def test_entries_out_of_range():
    with pytest.raises(IndexError):
        SparseMatrix(2, 2, {(2, 0): 1})


def test_inverse_and_singular():
    m = SparseMatrix.from_dense([[1, 1], [0, 2]])
    assert (m @ inverse(m)) == SparseMatrix.identity(2)
    assert not is_invertible(SparseMatrix.from_dense([[1, 1], [1, 1]]))
    with pytest.raises(ValueError):
        inverse(SparseMatrix.from_dense([[1, 1], [1, 1]]))


def test_homology_of_circle_complex():
    # C_1 -> C_0 zero map with one cell each: H_0 = H_1 = 1
    d1 = SparseMatrix.zero(1, 1)
    assert homology_at(SparseMatrix.zero(1, 0), d1).dimension == 1
    assert homology_at(d1, SparseMatrix.zero(0, 1)).dimension == 1
    # an interval: two vertices, one edge
    d = SparseMatrix.from_dense([[-1], [1]])
    assert homology_at(d, SparseMatrix.zero(0, 2)).dimension == 1
    assert homology_at(SparseMatrix.zero(1, 0), d).dimension == 0


def test_induced_map_iso_on_identity():
    d_in = SparseMatrix.from_dense([[1], [1], [0]])
    d_out = SparseMatrix.zero(0, 3)
    h = homology_at(d_in, d_out)
    m = induced_map_on_homology(SparseMatrix.identity(3), h, h)
    assert is_invertible(m) and m.shape == (2, 2)


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_rank_matches_dense_oracle(mr):
    m, rows = mr
    assert rank(m) == dense_rank(rows)
    assert rank(m) == rank(m.transpose())


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_rank_nullity_and_kernel(mr):
    m, _ = mr
    ker = kernel_basis(m)
    assert len(ker) + rank(m) == m.cols
    for v in ker:
        assert m.apply(v) == {}
    assert len(span_basis(ker)) == len(ker)


@settings(max_examples=60, deadline=None)
@given(matrices(), st.lists(entries, min_size=5, max_size=5))
def test_solve_is_consistent(mr, xs):
    m, _ = mr
    x = {j: v for j, v in enumerate(xs[: m.cols]) if v}
    b = m.apply(x)
    y = solve(m, b)
    assert y is not None and m.apply(y) == b


@settings(max_examples=60, deadline=None)
@given(st.lists(st.dictionaries(st.integers(0, 5), entries.filter(bool), max_size=4), max_size=6))
def test_echelon_coordinates_reconstruct(vectors):
    e = Echelon(track=True)
    for v in vectors:
        e.add(v)
    assert e.rank == dense_rank([[v.get(i, 0) for i in range(6)] for v in vectors])
    for v in vectors:
        coords = e.coordinates(v)
        assert coords is not None
        rebuilt = {}
        for k, c in coords.items():
            for i, x in vectors[k].items():
                rebuilt[i] = rebuilt.get(i, 0) + c * x
        assert {i: x for i, x in rebuilt.items() if x} == {i: Fraction(x) for i, x in v.items() if x}


@settings(max_examples=50, deadline=None)
@given(matrices(4, 4), matrices(4, 4))
def test_matmul_matches_dense(a, b):
    (ma, ra), (mb, rb) = a, b
    if ma.cols != mb.rows or not ra or not rb:
        return
    assert (ma @ mb).to_dense() == matmul(ra, rb)


@settings(max_examples=40, deadline=None)
@given(matrices(4, 4))
def test_homology_dimension_formula(mr):
    # a two-term complex 0 -> C1 -> C0 -> 0
    m, rows = mr
    h1 = homology_at(SparseMatrix.zero(m.cols, 0), m)
    h0 = homology_at(m, SparseMatrix.zero(0, m.rows))
    r = dense_rank(rows) if rows and m.cols else 0
    assert h1.dimension == m.cols - r
    assert h0.dimension == m.rows - r
