import pytest
from hypothesis import given, settings, strategies as st

from cobarkit import coalgebra as C
from cobarkit import lie
from cobarkit import simplicial as S
from oracles import free_lie_dims_by_series, symmetric_dims_brute, witt


def test_free_lie_small_cases():
    # one odd generator u: u and [u, u] only
    assert lie.free_lie_dims([1], 4).as_list() == [1, 1, 0, 0]
    # one even generator: abelian
    assert lie.free_lie_dims([2], 4).as_list() == [0, 1, 0, 0]
    with pytest.raises(ValueError):
        lie.free_lie_dims([1], 3, by="weight")


def test_witt_formula_values():
    assert [lie.witt_dimension(2, n) for n in range(1, 6)] == [2, 1, 2, 3, 6]
    assert [lie.witt_dimension(3, n) for n in range(1, 5)] == [witt(3, n) for n in range(1, 5)]


@settings(max_examples=15, deadline=None)
@given(st.lists(st.integers(1, 3), min_size=1, max_size=2))
def test_free_lie_dims_match_series_oracle(degrees):
    assert lie.free_lie_dims(degrees, 5).as_list() == free_lie_dims_by_series(degrees, 5)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_even_generators_by_length_match_witt(k):
    got = lie.free_lie_dims([2] * k, 4, by="length").as_list()
    assert got == [witt(k, n) for n in range(1, 5)]


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=1, max_size=5))
def test_symmetric_dims_match_brute_force(dims):
    lie_dims = [0] + dims
    through = 6
    assert lie.symmetric_dims(lie_dims, through).as_list() == symmetric_dims_brute(lie_dims, through)


@pytest.mark.parametrize("degrees", [[1], [2], [2, 2], [1, 2]])
def test_pbw_through_six(degrees):
    rep = lie.pbw_check(lie.free_lie_algebra(degrees, 6), 6)
    assert rep.ok and rep.first_mismatch is None
    assert not rep.antisymmetry_violations


def test_abelian_even_generator_is_polynomial():
    rep = lie.pbw_check(lie.abelian_lie_algebra([2]), 6)
    assert rep.ok and rep.u_dims == [1, 0, 1, 0, 1, 0, 1]


def test_corrupted_bracket_is_reported():
    # zeroing a bracket gives another Lie algebra, for which PBW still holds;
    # breaking antisymmetry does not
    la = lie.free_lie_algebra([2, 2], 6)
    bad = la.with_bracket(1, 0, la.bracket(0, 1))
    rep = lie.pbw_check(bad, 6)
    assert rep.antisymmetry_violations
    assert not rep.ok and rep.first_mismatch == 4
    assert lie.pbw_check(la.with_bracket(0, 1, {}).with_bracket(1, 0, {}), 6).ok


def test_enveloping_algebra_of_free_lie_is_tensor_algebra():
    la = lie.free_lie_algebra([1, 2], 6)
    # T(V) on degrees 1 and 2 has Fibonacci dimensions
    assert lie.enveloping_dims(la, 6).as_list() == [1, 1, 2, 3, 5, 8, 13]


@pytest.mark.parametrize("name", sorted(lie.cocommutative_corpus()))
def test_lie_model_d_squared(name):
    p = lie.quillen_L(lie.cocommutative_corpus()[name])
    assert not p.check_d_squared()


def test_lie_model_requires_cocommutativity():
    c = C.normalized_chains(S.nerve(S.cyclic(2), 3))
    with pytest.raises(lie.NotCocommutative) as info:
        lie.quillen_L(c)
    assert info.value.witness == "[1|1]"


def test_lie_model_of_torus():
    p = lie.quillen_L(C.torus_coalgebra())
    assert p.is_homogeneous_in_weight()
    h = lie.lie_homology(p, 1, 4)
    # H_0 is abelian on two classes of weight 1
    assert [h.dims[(0, w)] for w in range(1, 5)] == [2, 0, 0, 0]


def test_lie_model_of_cone_is_acyclic():
    p = lie.quillen_L(lie.cone_coalgebra(3))
    h = lie.lie_homology(p, 5)
    assert h.grading == "degree" and all(v == 0 for v in h.dims.values())


def test_lie_homology_of_sphere_chains():
    p = lie.quillen_L(C.primitive_coalgebra([3]))
    h = lie.lie_homology(p, 5, grading="degree")
    # the free Lie algebra on one generator of degree 2 is one-dimensional
    assert h.degree_totals() == [0, 0, 1, 0, 0, 0]


def test_bigraded_symmetric_dims():
    # one even class of bidegree (0, 1): polynomial in the weight
    s = lie.bigraded_symmetric_dims({(0, 1): 1}, 0, 4)
    assert [s[(0, w)] for w in range(5)] == [1, 1, 1, 1, 1]
    # one odd class squares to zero
    s = lie.bigraded_symmetric_dims({(1, 2): 1}, 3, 6)
    assert s[(1, 2)] == 1 and s[(2, 4)] == 0


@pytest.mark.parametrize("name", sorted(lie.cocommutative_corpus()))
def test_cobar_vs_UL(name):
    rep = lie.cobar_vs_UL(lie.cocommutative_corpus()[name], 3, 5)
    assert rep.ok, rep.mismatches
    assert rep.exact_keys


def test_nogo_circle():
    circle = lie.cocommutative_corpus()["circle"]
    v = lie.nogo_witness(circle, S.cyclic(2))
    assert v.verdict == "impossible" and v.h0_dim == 1 and v.h0_exact
    assert v.cumulative[-1] > 2 and v.exceeds_at == 2
    v3 = lie.nogo_witness(circle, S.cyclic(3))
    assert v3.exceeds_at == 3


def test_nogo_simply_connected():
    prim = lie.cocommutative_corpus()["prim2"]
    assert lie.nogo_witness(prim, S.cyclic(2)).verdict == "impossible"
    assert lie.nogo_witness(prim, S.cyclic(1)).verdict == "possible"


def test_nogo_torus_signature():
    v = lie.nogo_witness(C.torus_coalgebra(), S.group_by_name("s3"))
    assert v.h0_dim == 2 and v.signature[:3] == [1, 2, 3]
    assert v.verdict == "impossible"
