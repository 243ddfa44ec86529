import pytest

from cobarkit import coalgebra as C
from cobarkit import ncgroebner as nc
from cobarkit import simplicial as S
from cobarkit.homology import (
    antipode_on_grouplikes,
    loop_homology,
    omega_qis_check,
    weight_graded_cobar_homology,
)
from cobarkit.lie import cocommutative_corpus


def chains(s):
    return C.normalized_chains(s)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_sphere_loop_homology(n):
    # H_*(Omega S^n) is polynomial on one class in degree n - 1
    rep = loop_homology(chains(S.minimal_sphere(n)), 6, 7)
    want = [1 if k % (n - 1) == 0 else 0 for k in range(7)]
    assert rep.dims == want and rep.all_exact


def test_point_and_nerves_in_degree_zero():
    assert loop_homology(chains(S.point()), 2, 3).dims == [1, 0, 0]
    rep = loop_homology(chains(S.nerve(S.cyclic(3), 3)), 0, 2)
    assert rep.entries[0].dimension == 3 and rep.entries[0].exact


def test_filtered_degrees_carry_stability_notes():
    rep = loop_homology(chains(S.nerve(S.cyclic(2), 3)), 2, 4)
    e = rep.entries[1]
    assert not e.exact and "L-1" in e.note
    assert rep.to_json()["bounds"] == {"N": 2, "L": 4, "Dg": 8}


def test_weight_graded_torus_and_wedge():
    t = weight_graded_cobar_homology(C.torus_coalgebra(), 2, 4)
    # H_0(Omega T^2) = Q[Z^2], graded by word length: w + 1 monomials of weight w
    assert [t.dims[(0, w)] for w in range(5)] == [1, 2, 3, 4, 5]
    assert t.degree_totals()[1:] == [0, 0]
    circle = C.primitive_coalgebra([1], ["x"])
    w = weight_graded_cobar_homology(C.wedge(circle, circle), 1, 5)
    assert [w.dims[(0, k)] for k in range(6)] == [1, 2, 4, 8, 16, 32]


def test_weight_grading_needs_zero_differential():
    with pytest.raises(ValueError):
        weight_graded_cobar_homology(cocommutative_corpus()["cone3"], 2, 4)


def test_weight_graded_dp3_matches_projective_space():
    # dp3 is a model of CP^3: H_*(Omega CP^3) = Lambda(x_1) (x) Q[y_6], with
    # y_6 of weight 8 and x_1 y_6 of weight 10
    rep = weight_graded_cobar_homology(C.divided_power_coalgebra(3), 7, 10)
    assert rep.degree_totals() == [1, 1, 0, 0, 0, 0, 1, 1]


def test_omega_qis_identity_passes():
    f = C.identity_coalgebra_map(chains(S.minimal_sphere(2)))
    v = omega_qis_check(f, 3, 4)
    assert v.overall == "pass" and v.h0_iso


def test_omega_qis_z2_to_z4_fails_in_degree_zero():
    f = C.chains_map(S.nerve_map(S.cyclic(2), S.cyclic(4), [0, 2], 3))
    assert C.is_quasi_isomorphism(f, 2).overall == "pass"
    v = omega_qis_check(f, 2, 3)
    assert v.overall == "fail" and v.h0_iso is False
    assert v.h0_dims == (2, 4) and v.h0.exact
    assert v.grouplikes == ("group(2)", "group(4)")


def test_omega_qis_laurent_is_refuted_by_units():
    f = C.chains_map(S.SimplicialMap(S.minimal_sphere(1), S.laurent_circle(), {"sigma": "a"}))
    assert C.is_quasi_isomorphism(f, 2).overall == "pass"
    v = omega_qis_check(f, 2, 3)
    assert v.overall == "fail"
    assert "no inverse" in v.h0_refutation
    assert v.to_json()["h0"]["iso"] is False


def test_omega_qis_rejects_small_cap():
    f = C.chains_map(S.identity_map(S.nerve(S.cyclic(2), 2)))
    with pytest.raises(ValueError):
        omega_qis_check(f, 2, 3)


def test_antipode():
    z3 = nc.groebner(*_presentation("z3"), 8)
    seeds = [{(): 1, (i,): 1} for i in range(2)]
    rep = antipode_on_grouplikes(z3, seeds)
    assert rep.all_invertible and not rep.missing
    for k, g in enumerate(seeds):
        assert z3.mul(g, rep.inverses[k]) == {(): 1}
    free = nc.groebner(("x",), [], 8)
    rep = antipode_on_grouplikes(free, [{(): 1, (0,): 1}])
    assert rep.missing == [0] and rep.exact


def _presentation(name):
    from cobarkit.cobar import h0_presentation

    p = h0_presentation(chains(S.nerve(S.group_by_name(name), 3)))
    return p.generators, p.relations
