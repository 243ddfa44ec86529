import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cobarkit import coalgebra as C
from cobarkit import simplicial as S
from cobarkit.cobar import Letters, check_d_squared, cobar, degree0_coproduct, h0_presentation, truncation_exact
from cobarkit.lie import cocommutative_corpus


def _mul(p, q):
    out = {}
    for u, a in p.items():
        for v, b in q.items():
            out[u + v] = out.get(u + v, 0) + a * b
    return {w: c for w, c in out.items() if c}


def _add(p, q, s=1):
    out = dict(p)
    for w, c in q.items():
        out[w] = out.get(w, 0) + s * c
    return {w: c for w, c in out.items() if c}


def test_nerve_z2_degree_zero_relation():
    c = C.normalized_chains(S.nerve(S.cyclic(2), 3))
    p = h0_presentation(c)
    assert p.generators == ("[1]",)
    assert p.relations == ({(0, 0): -1, (0,): -2},)
    a = p.algebra(8)
    # x^2 = -2x, so x^3 = 4x and (1 + x)^2 = 1
    assert a.normal_form({(0, 0, 0): Fraction(1)}) == {(0,): 4}
    assert a.mul({(): 1, (0,): 1}, {(): 1, (0,): 1}) == {(): 1}


def test_h0_needs_two_skeleton():
    c = C.normalized_chains(S.nerve(S.cyclic(2), 3))
    bad = C.DgCoalgebra({1: c.basis[1]}, {}, {}, 1, True)
    with pytest.raises(ValueError):
        h0_presentation(bad)


def test_grouplike_coproduct_descends_for_nerves():
    for g in ("z2", "z3", "s3"):
        p = h0_presentation(C.normalized_chains(S.nerve(S.group_by_name(g), 3)))
        d0 = degree0_coproduct(p)
        assert d0.is_coassociative()
        assert d0.descends(p.algebra(6))


def test_sphere_cobar_is_polynomial():
    t = cobar(C.normalized_chains(S.minimal_sphere(3)), 6, 6)
    assert [len(t.basis[n]) for n in range(7)] == [1, 0, 1, 0, 1, 0, 1]
    assert all(t.differential[n].is_zero() for n in range(1, 7))
    assert all(t.exact.values())


def test_truncation_exactness_rules():
    s2 = C.normalized_chains(S.minimal_sphere(2))
    assert truncation_exact(s2, 3, 3) and not truncation_exact(s2, 3, 2)
    assert not truncation_exact(C.torus_coalgebra(), 1, 5)
    bz = C.normalized_chains(S.nerve(S.cyclic(2), 3))
    assert not truncation_exact(bz, 0, 5)


def test_budget_skips_degrees():
    c = C.normalized_chains(S.nerve(S.cyclic(3), 3))
    t = cobar(c, 3, 4, max_basis=10)
    assert t.over_budget
    with pytest.raises(ValueError):
        cobar(c, -1, 2)


@pytest.mark.parametrize("name", sorted(cocommutative_corpus()))
def test_d_squared_on_corpus(name):
    c = cocommutative_corpus()[name]
    assert check_d_squared(cobar(c, 4, 4)).ok


@pytest.mark.parametrize("space", ["sphere2", "sphere3", "bz2", "bz3", "laurent"])
def test_d_squared_on_chains(space):
    make = {
        "sphere2": lambda: S.minimal_sphere(2),
        "sphere3": lambda: S.minimal_sphere(3),
        "bz2": lambda: S.nerve(S.cyclic(2), 3),
        "bz3": lambda: S.nerve(S.cyclic(3), 3),
        "laurent": S.laurent_circle,
    }[space]
    report = check_d_squared(cobar(C.normalized_chains(make()), 3, 3))
    assert report.ok and report.checked > 0


def test_flipped_sign_is_caught():
    c = C.normalized_chains(S.nerve(S.cyclic(2), 3))
    cop = dict(c.coproduct)
    cop["[1|1|1]"] = tuple((-k, a, b) if a == "[1]" else (k, a, b) for k, a, b in cop["[1|1|1]"])
    bad = C.DgCoalgebra(c.basis, c.differential, cop, c.degree_cap, c.truncated)
    report = check_d_squared(cobar(bad, 2, 3))
    assert not report.ok and "D^2" in report.failure


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000), st.data())
def test_d_is_a_derivation(seed, data):
    c = C.random_coalgebra(random.Random(seed))
    letters = Letters(c)
    k = len(letters.names)
    u = tuple(data.draw(st.lists(st.integers(0, k - 1), max_size=3)))
    v = tuple(data.draw(st.lists(st.integers(0, k - 1), max_size=3)))
    lhs = letters.differential(u + v)
    sign = -1 if letters.word_degree(u) % 2 else 1
    rhs = _add(_mul(letters.differential(u), {v: 1}), _mul({u: 1}, letters.differential(v)), sign)
    assert lhs == rhs


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_d_squared_on_random_coalgebras(seed):
    c = C.random_coalgebra(random.Random(seed))
    assert check_d_squared(cobar(c, 3, 3, max_basis=2000)).ok
