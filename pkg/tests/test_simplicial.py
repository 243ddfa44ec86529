import json

import pytest
from hypothesis import given, settings, strategies as st

from cobarkit import simplicial as S
from oracles import isomorphic_tables


def test_minimal_sphere_shape():
    s = S.minimal_sphere(3)
    assert s.counts() == {1: 0, 2: 0, 3: 1}
    assert s.faces["sigma"] == ("*",) * 4
    assert S.validate(s).ok
    with pytest.raises(ValueError):
        S.minimal_sphere(0)


@pytest.mark.parametrize("name,order", [("z2", 2), ("z3", 3), ("klein", 4), ("s3", 6), ("d4", 8), ("q8", 8)])
def test_groups_are_groups(name, order):
    g = S.group_by_name(name)
    assert g.order == order
    g.check()


def test_unknown_group():
    with pytest.raises(S.InputError):
        S.group_by_name("zz")


def test_nerve_faces_z3():
    s = S.nerve(S.cyclic(3), 3)
    assert s.counts() == {1: 2, 2: 4, 3: 8}
    assert s.truncated
    # d1 [1|2] multiplies to the identity, so it is degenerate
    assert s.faces["[1|2]"] == ("[2]", "*", "[1]")
    assert s.faces["[1|1]"] == ("[1]", "[2]", "[1]")
    assert S.validate(s).ok


@pytest.mark.parametrize("name", ["z2", "z4", "klein", "s3"])
def test_nerves_validate(name):
    assert S.validate(S.nerve(S.group_by_name(name), 3)).ok


def test_validation_catches_bad_identity():
    s = S.nerve(S.cyclic(3), 3)
    faces = dict(s.faces)
    faces["[1|1|1]"] = ("[1|1]", "[2|1]", "[1|2]", "[1|2]")
    bad = S.SimplicialSet(s.simplices, faces, 3, True, "bad")
    report = S.validate(bad)
    assert not report.ok and report.violations


def test_validation_catches_wrong_degree_face():
    s = S.SimplicialSet({1: ("a",), 2: ("t",)}, {"a": ("*", "*"), "t": ("t", "*", "*")}, 2)
    assert not S.validate(s).ok


def test_laurent_circle_is_valid():
    s = S.laurent_circle()
    assert S.validate(s).ok
    assert s.counts() == {1: 2, 2: 2, 3: 1}


def test_front_and_back_faces():
    s = S.nerve(S.cyclic(3), 3)
    assert s.front_face("[1|1|2]", 1) == "[1]"
    assert s.back_face("[1|1|2]", 1) == "[2]"
    assert s.front_face("[1|1|2]", 2) == "[1|1]"
    assert s.back_face("[1|2|2]", 2) == "[2|2]"


def test_nerve_map_and_validation():
    f = S.nerve_map(S.cyclic(2), S.cyclic(4), [0, 2], 3)
    assert S.validate_map(f).ok
    assert f.assignment["[1|1]"] == "[2|2]"
    with pytest.raises(ValueError):
        S.nerve_map(S.cyclic(2), S.cyclic(4), [0, 1], 3)


def test_bad_map_detected():
    f = S.identity_map(S.nerve(S.cyclic(3), 2))
    wrong = dict(f.assignment)
    wrong["[1|1]"] = "[2|2]"
    assert not S.validate_map(S.SimplicialMap(f.source, f.target, wrong)).ok


def test_collapse_and_compose():
    s = S.nerve(S.cyclic(3), 2)
    c = S.collapse_map(s)
    assert S.validate_map(c).ok
    assert S.compose(S.identity_map(s), c).assignment == c.assignment


def test_json_roundtrip(tmp_path):
    s = S.nerve(S.cyclic(3), 2)
    p = tmp_path / "s.json"
    p.write_text(json.dumps(s.to_json()))
    back = S.from_json(S.load_json(p))
    assert back.simplices == s.simplices and dict(back.faces) == dict(s.faces)
    m = S.nerve_map(S.cyclic(2), S.cyclic(4), [0, 2], 2)
    again = S.map_from_json(json.loads(json.dumps(m.to_json())))
    assert dict(again.assignment) == dict(m.assignment)


def test_json_errors(tmp_path):
    with pytest.raises(S.InputError):
        S.from_json({"faces": {}})
    with pytest.raises(S.InputError):
        S.from_json({"simplices": {"1": ["a"]}, "faces": {"a": ["*"]}})
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(S.InputError):
        S.load_json(bad)


@pytest.mark.parametrize("name", ["z4", "klein", "s3", "q8"])
def test_find_isomorphism_agrees_with_oracle(name):
    g = S.group_by_name(name)
    phi = S.find_isomorphism(g.mult, g.mult)
    assert phi is not None
    assert isomorphic_tables(g.mult, g.mult)
    assert S.find_isomorphism(S.cyclic(4).mult, S.group_by_name("klein").mult) is None
    assert not isomorphic_tables(S.cyclic(4).mult, S.group_by_name("klein").mult)


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 6), st.permutations(list(range(6))))
def test_relabelled_cyclic_groups_are_found(n, perm):
    g = S.cyclic(n)
    p = [x for x in perm if x < n]
    # move the identity label too; isomorphism must not rely on labels
    relabelled = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            relabelled[p[a]][p[b]] = p[g.mult[a][b]]
    phi = S.find_isomorphism(g.mult, relabelled)
    assert phi is not None
    assert all(phi[g.mult[a][b]] == relabelled[phi[a]][phi[b]] for a in range(n) for b in range(n))
