from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cobarkit import coalgebra as C
from cobarkit import ncgroebner as nc
from cobarkit import simplicial as S
from cobarkit.cobar import h0_presentation
from oracles import isomorphic_tables

coef = st.fractions(min_value=-4, max_value=4, max_denominator=4).filter(bool)


def polys(k, max_len=3):
    return st.dictionaries(st.lists(st.integers(0, k - 1), max_size=max_len).map(tuple), coef, max_size=4)


def group_algebra(name):
    p = h0_presentation(C.normalized_chains(S.nerve(S.group_by_name(name), 3)))
    return p.algebra(8)


def test_parse_and_format():
    gens = ("x", "y")
    p = nc.parse_poly("2*x.y - 1/2*y + 3", gens)
    assert p == {(0, 1): 2, (1,): Fraction(-1, 2), (): 3}
    assert nc.parse_poly(nc.format_poly(p, gens), gens) == p
    assert nc.parse_poly("-x - -y", gens) == {(0,): -1, (1,): 1}
    for bad in ("", "x +", "2*z", "x y", "1/0*x"):
        with pytest.raises(nc.PolySyntaxError):
            nc.parse_poly(bad, gens)


@settings(max_examples=60, deadline=None)
@given(polys(2))
def test_format_parse_roundtrip(p):
    p = {w: c for w, c in p.items() if c}
    if not p:
        return
    gens = ("a", "b")
    assert nc.parse_poly(nc.format_poly(p, gens), gens) == p
    assert nc.poly_from_json(nc.poly_to_json(p, gens), gens) == p


def test_commutative_polynomial_ring():
    a = nc.groebner(("x", "y"), [{(0, 1): 1, (1, 0): -1}], 6)
    assert a.complete_flag
    rep = nc.dimension(a)
    assert rep.counts == [1, 2, 3, 4, 5, 6, 7] and not rep.finite


def test_truncated_polynomial_is_finite():
    a = nc.groebner(("x",), [{(0, 0, 0): 1}], 6)
    rep = nc.dimension(a)
    assert rep.finite and rep.total == 3 and rep.verdict == "finite(3)"


def test_overlap_resolution():
    # x.y = y.x together with x.x = 0 and y.y = 0 gives the exterior algebra-like span 1, x, y, xy
    a = nc.groebner(("x", "y"), [{(0, 1): 1, (1, 0): -1}, {(0, 0): 1}, {(1, 1): 1}], 8)
    rep = nc.dimension(a)
    assert rep.finite and rep.counts[:4] == [1, 2, 1, 0]


def test_free_algebra_counts():
    a = nc.groebner(("x", "y"), [], 5)
    assert nc.dimension(a).counts == [1, 2, 4, 8, 16, 32]


def test_bad_weights():
    with pytest.raises(ValueError):
        nc.groebner(("x",), [], 4, weights=[0])


@pytest.mark.parametrize("name,order", [("z2", 2), ("z3", 3), ("z4", 4), ("klein", 4), ("s3", 6)])
def test_group_algebras_from_nerves(name, order):
    a = group_algebra(name)
    assert a.complete_flag
    rep = nc.dimension(a)
    assert rep.finite and rep.total == order
    closure = nc.grouplike_closure(a)
    assert closure.kind == "group" and closure.size == order and closure.verified
    assert isomorphic_tables(closure.table, S.group_by_name(name).mult)


@settings(max_examples=40, deadline=None)
@given(polys(2), polys(2), polys(2))
def test_normal_form_is_a_ring_map(p, q, r):
    a = group_algebra("s3")
    # restrict to the first two generators; s3 has five
    assert a.normal_form(a.normal_form(p)) == a.normal_form(p)
    assert a.mul(a.mul(p, q), r) == a.mul(p, a.mul(q, r))
    assert a.normal_form(nc.poly_mul(p, q)) == a.mul(a.normal_form(p), a.normal_form(q))


@settings(max_examples=30, deadline=None)
@given(polys(2), polys(2))
def test_relations_reduce_to_zero(p, q):
    a = nc.groebner(("x", "y"), [{(0, 1): 1, (1, 0): -1, (): -1}], 8)  # Weyl-like xy - yx = 1
    for rel in a.relations:
        sandwich = nc.poly_mul(nc.poly_mul(p, rel), q)
        if max((len(w) for w in sandwich), default=0) <= 6:
            assert a.normal_form(sandwich) == {}


def test_relations_form_a_coideal_for_nerves():
    for g in ("z2", "z3", "s3"):
        assert not nc.coideal_violations(group_algebra(g))


def test_grouplike_detection():
    a = group_algebra("z3")
    assert nc.is_grouplike(a, {(): 1, (0,): 1})
    assert not nc.is_grouplike(a, {(): 1, (0,): 2})
    assert nc.counit(a, {(): 3, (0,): 1}) == 3


def test_free_closure_is_unbounded():
    a = nc.groebner(("x",), [], 8)
    closure = nc.grouplike_closure(a, step_bound=16)
    assert closure.kind == "unbounded" and closure.table is None


def test_map_check_on_group_algebras():
    src, dst = group_algebra("z2"), group_algebra("z4")
    # [1] -> 1 + [2] - 1: the image of the group-like 1 + x_1 is 1 + x_2
    v = nc.map_check(src, dst, [{(1,): 1}])
    assert v.well_defined and v.exact and v.injective and not v.surjective and not v.iso
    bad = nc.map_check(src, dst, [{(0,): 1}])
    assert not bad.well_defined and bad.violating_relation == 0
    with pytest.raises(ValueError):
        nc.map_check(src, dst, [])


def test_identity_is_iso():
    a = group_algebra("z3")
    v = nc.map_check(a, a, [{(i,): 1} for i in range(len(a.generators))])
    assert v.iso and v.exact
