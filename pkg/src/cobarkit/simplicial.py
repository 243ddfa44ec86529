"""Finite reduced simplicial sets, finite groups and their nerves.

A reduced simplicial set has a single vertex. We store only the nondegenerate
simplices of positive degree and, for each of them, its faces. A face is either
the name of a nondegenerate simplex one degree down or the marker ``"*"`` for
a degenerate face. Degeneracies themselves are never materialized: normalized
chains kill them anyway.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Mapping, Sequence

DEGENERATE = "*"


class InputError(ValueError):
    """Malformed or invalid user input (simplicial sets, tables, JSON)."""


@dataclass(frozen=True)
class SimplicialSet:
    simplices: Mapping[int, tuple[str, ...]]
    faces: Mapping[str, tuple[str, ...]]
    dimension_cap: int
    # True when simplices above dimension_cap exist but were cut off
    truncated: bool = False
    name: str = ""

    @cached_property
    def degree(self) -> dict[str, int]:
        return {s: n for n, names in self.simplices.items() for s in names}

    def of_degree(self, n: int) -> tuple[str, ...]:
        return tuple(self.simplices.get(n, ()))

    def face(self, simplex: str, i: int) -> str:
        if simplex == DEGENERATE:
            return DEGENERATE
        return self.faces[simplex][i]

    def counts(self) -> dict[int, int]:
        return {n: len(self.simplices.get(n, ())) for n in range(1, self.dimension_cap + 1)}

    def front_face(self, simplex: str, p: int) -> str:
        """The face spanned by vertices 0..p (iterated last faces)."""
        s = simplex
        for n in range(self.degree[simplex], p, -1):
            if s == DEGENERATE:
                return DEGENERATE
            s = self.faces[s][n]
        return s

    def back_face(self, simplex: str, q: int) -> str:
        """The face spanned by the last q+1 vertices (iterated zeroth faces)."""
        s = simplex
        for _ in range(self.degree[simplex] - q):
            if s == DEGENERATE:
                return DEGENERATE
            s = self.faces[s][0]
        return s

    def to_json(self) -> dict:
        out = {
            "simplices": {str(n): list(names) for n, names in sorted(self.simplices.items()) if names},
            "faces": {s: list(self.faces[s]) for n in sorted(self.simplices) for s in self.simplices[n]},
            "dimension_cap": self.dimension_cap,
            "truncated": self.truncated,
        }
        if self.name:
            out["name"] = self.name
        return out


@dataclass
class ValidationReport:
    ok: bool
    violations: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def validate(s: SimplicialSet) -> ValidationReport:
    """Check reducedness, face bookkeeping and the simplicial identities.

    A degenerate face is opaque: its own faces are unknown (a degenerate
    simplex can have nondegenerate faces), so an identity d_i d_j = d_{j-1} d_i
    is only compared when neither side passes through a degenerate simplex.
    """
    problems: list[str] = []
    seen: set[str] = set()
    for n, names in sorted(s.simplices.items()):
        if n < 1:
            problems.append(f"degree {n}: only positive degrees are listed (the vertex is implicit)")
            continue
        if n > s.dimension_cap:
            problems.append(f"degree {n} exceeds dimension_cap {s.dimension_cap}")
        for name in names:
            if name == DEGENERATE:
                problems.append("'*' is reserved for degenerate faces")
            if name in seen:
                problems.append(f"{name}: duplicate simplex name")
            seen.add(name)
    for name in seen:
        if name not in s.faces:
            problems.append(f"{name}: no faces given")
    for name in s.faces:
        if name not in seen:
            problems.append(f"{name}: faces given for an unknown simplex")
    if problems:
        return ValidationReport(False, problems)

    deg = s.degree
    for n in sorted(s.simplices):
        for name in s.simplices[n]:
            fs = s.faces[name]
            if len(fs) != n + 1:
                problems.append(f"{name}: degree {n} needs {n + 1} faces, got {len(fs)}")
                continue
            for i, f in enumerate(fs):
                if f == DEGENERATE:
                    continue
                if n == 1:
                    problems.append(f"{name}: face {i} of a 1-simplex must be the basepoint '*'")
                elif deg.get(f) != n - 1:
                    problems.append(f"{name}: face {i} = {f} is not a {n - 1}-simplex")
    if problems:
        return ValidationReport(False, problems)

    for n in sorted(s.simplices):
        if n < 3:
            continue
        for name in s.simplices[n]:
            for j in range(1, n + 1):
                for i in range(j):
                    a, b = s.faces[name][j], s.faces[name][i]
                    if a == DEGENERATE or b == DEGENERATE:
                        continue
                    lhs, rhs = s.faces[a][i], s.faces[b][j - 1]
                    if lhs != rhs:
                        problems.append(
                            f"{name}: d{i} d{j} = {lhs} but d{j - 1} d{i} = {rhs}"
                        )
    return ValidationReport(not problems, problems)


def require_valid(s: SimplicialSet) -> SimplicialSet:
    report = validate(s)
    if not report.ok:
        raise InputError("invalid simplicial set: " + "; ".join(report.violations[:5]))
    return s


def point() -> SimplicialSet:
    return SimplicialSet({}, {}, 0, False, "point")


def minimal_sphere(n: int) -> SimplicialSet:
    """Delta[n] / boundary: one vertex and one nondegenerate n-simplex."""
    if n < 1:
        raise ValueError("minimal_sphere needs n >= 1")
    return SimplicialSet({n: ("sigma",)}, {"sigma": (DEGENERATE,) * (n + 1)}, n, False, f"S{n}")


def laurent_circle() -> SimplicialSet:
    """A circle with edges a, b and triangles witnessing a b = b a = 1 up to homotopy.

    It has the rational homology of S^1, but unlike the minimal circle its
    loop algebra in degree 0 is the Laurent ring, with 1 + a and 1 + b inverse.
    """
    simplices = {1: ("a", "b"), 2: ("sigma", "tau"), 3: ("rho",)}
    faces = {
        "a": (DEGENERATE, DEGENERATE),
        "b": (DEGENERATE, DEGENERATE),
        "sigma": ("b", DEGENERATE, "a"),
        "tau": ("a", DEGENERATE, "b"),
        "rho": ("tau", DEGENERATE, DEGENERATE, "sigma"),
    }
    return require_valid(SimplicialSet(simplices, faces, 3, False, "laurent_circle"))


# -- finite groups ----------------------------------------------------------

@dataclass(frozen=True)
class GroupTable:
    order: int
    mult: tuple[tuple[int, ...], ...]
    identity: int = 0
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "mult", tuple(tuple(int(x) for x in row) for row in self.mult))

    def check(self) -> "GroupTable":
        n = self.order
        if n < 1 or len(self.mult) != n or any(len(r) != n for r in self.mult):
            raise InputError(f"group table must be {n}x{n}")
        if not 0 <= self.identity < n:
            raise InputError("identity index out of range")
        m = self.mult
        for a in range(n):
            for b in range(n):
                if not 0 <= m[a][b] < n:
                    raise InputError(f"entry mult[{a}][{b}] out of range")
        e = self.identity
        for a in range(n):
            if m[e][a] != a or m[a][e] != a:
                raise InputError(f"{e} is not a two-sided identity (fails at {a})")
        for a, b, c in itertools.product(range(n), repeat=3):
            if m[m[a][b]][c] != m[a][m[b][c]]:
                raise InputError(f"not associative at ({a}, {b}, {c})")
        for a in range(n):
            if e not in m[a]:
                raise InputError(f"element {a} has no inverse")
        return self

    def mul(self, a: int, b: int) -> int:
        return self.mult[a][b]

    def inverse(self, a: int) -> int:
        return self.mult[a].index(self.identity)

    def non_identity(self) -> list[int]:
        return [g for g in range(self.order) if g != self.identity]

    def to_json(self) -> dict:
        return {"order": self.order, "mult": [list(r) for r in self.mult], "identity": self.identity}

    @classmethod
    def from_json(cls, data: Mapping) -> "GroupTable":
        try:
            g = cls(int(data["order"]), tuple(tuple(r) for r in data["mult"]), int(data.get("identity", 0)))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed group table: {exc}") from exc
        return g.check()


def _from_elements(elements: Sequence, op, identity, name: str) -> GroupTable:
    index = {x: i for i, x in enumerate(elements)}
    mult = tuple(tuple(index[op(a, b)] for b in elements) for a in elements)
    return GroupTable(len(elements), mult, index[identity], name)


def cyclic(n: int) -> GroupTable:
    if n < 1:
        raise ValueError("cyclic group order must be positive")
    return _from_elements(list(range(n)), lambda a, b: (a + b) % n, 0, f"Z{n}")


def direct_product(g: GroupTable, h: GroupTable) -> GroupTable:
    elements = [(a, b) for a in range(g.order) for b in range(h.order)]
    return _from_elements(
        elements,
        lambda x, y: (g.mul(x[0], y[0]), h.mul(x[1], y[1])),
        (g.identity, h.identity),
        f"{g.name}x{h.name}",
    )


def symmetric(n: int) -> GroupTable:
    elements = list(itertools.permutations(range(n)))
    # (p*q)(i) = p(q(i))
    return _from_elements(elements, lambda p, q: tuple(p[q[i]] for i in range(n)), tuple(range(n)), f"S{n}")


def dihedral(n: int) -> GroupTable:
    """Symmetries of the n-gon, order 2n, as pairs (rotation, reflected)."""
    elements = [(r, s) for s in (0, 1) for r in range(n)]

    def op(a, b):
        r1, s1 = a
        r2, s2 = b
        return ((r1 + (-r2 if s1 else r2)) % n, s1 ^ s2)

    return _from_elements(elements, op, (0, 0), f"D{n}")


def quaternion() -> GroupTable:
    # unit quaternions {±1, ±i, ±j, ±k} as (sign, axis) with axis 0 = real
    table = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }
    elements = [(s, a) for s in (1, -1) for a in range(4)]

    def op(x, y):
        sign, axis = table[(x[1], y[1])]
        return (x[0] * y[0] * sign, axis)

    return _from_elements(elements, op, (1, 0), "Q8")


def group_by_name(name: str) -> GroupTable:
    """Parse names like ``z3``, ``klein``, ``z2xz2``, ``s3``, ``d4``, ``q8``, ``trivial``."""
    key = name.strip().lower()
    if key in ("trivial", "1", "e"):
        return cyclic(1)
    if key in ("klein", "v4"):
        return direct_product(cyclic(2), cyclic(2))
    if key == "q8":
        return quaternion()
    if "x" in key:
        parts = key.split("x")
        g = group_by_name(parts[0])
        for p in parts[1:]:
            g = direct_product(g, group_by_name(p))
        return g
    kind, digits = key[:1], key[1:]
    if digits.isdigit():
        n = int(digits)
        if kind == "z" and n >= 1:
            return cyclic(n)
        if kind == "s" and 1 <= n <= 5:
            return symmetric(n)
        if kind == "d" and n >= 2:
            return dihedral(n)
    raise InputError(f"unknown group name {name!r}")


def find_isomorphism(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> list[int] | None:
    """A bijection phi with phi(a[x][y]) == b[phi x][phi y], by exhaustive search, or None."""
    n = len(a)
    if len(b) != n:
        return None
    phi = [-1] * n
    used = [False] * n

    def consistent(k: int) -> bool:
        for x in range(k + 1):
            for y in range(k + 1):
                z = a[x][y]
                if phi[z] >= 0 and phi[z] != b[phi[x]][phi[y]]:
                    return False
        return True

    def extend(k: int) -> bool:
        if k == n:
            return all(phi[a[x][y]] == b[phi[x]][phi[y]] for x in range(n) for y in range(n))
        for t in range(n):
            if not used[t]:
                phi[k], used[t] = t, True
                if consistent(k) and extend(k + 1):
                    return True
                phi[k], used[t] = -1, False
        return False

    return list(phi) if extend(0) else None


def check_homomorphism(g: GroupTable, h: GroupTable, images: Sequence[int]) -> None:
    if len(images) != g.order or any(not 0 <= x < h.order for x in images):
        raise InputError("homomorphism needs one target index per source element")
    for a in range(g.order):
        for b in range(g.order):
            if images[g.mul(a, b)] != h.mul(images[a], images[b]):
                raise InputError(f"not a homomorphism at ({a}, {b})")


# -- nerves -----------------------------------------------------------------

def bar_name(elements: Sequence[int]) -> str:
    return "[" + "|".join(str(g) for g in elements) + "]"


def nerve(g: GroupTable, trunc: int = 3) -> SimplicialSet:
    """Nerve of ``g`` with simplices [g1|...|gn] up to dimension ``trunc``.

    Tuples containing the identity are degenerate and not listed. The inner
    face d_i multiplies g_i g_{i+1}; when the product is the identity the face
    is degenerate.
    """
    g.check()
    if trunc < 2:
        raise ValueError("nerve truncation must be at least 2")
    others = g.non_identity()
    if not others:
        return SimplicialSet({}, {}, 0, False, "B1")
    simplices: dict[int, tuple[str, ...]] = {}
    faces: dict[str, tuple[str, ...]] = {}
    e = g.identity
    for n in range(1, trunc + 1):
        names = []
        for tup in itertools.product(others, repeat=n):
            name = bar_name(tup)
            names.append(name)
            if n == 1:
                faces[name] = (DEGENERATE, DEGENERATE)
                continue
            fs = [bar_name(tup[1:])]
            for i in range(1, n):
                prod = g.mul(tup[i - 1], tup[i])
                fs.append(DEGENERATE if prod == e else bar_name(tup[: i - 1] + (prod,) + tup[i + 1:]))
            fs.append(bar_name(tup[:-1]))
            faces[name] = tuple(fs)
        simplices[n] = tuple(names)
    return SimplicialSet(simplices, faces, trunc, True, f"B{g.name}" if g.name else "BG")


# -- maps -------------------------------------------------------------------

@dataclass(frozen=True)
class SimplicialMap:
    source: SimplicialSet
    target: SimplicialSet
    assignment: Mapping[str, str]

    def image(self, simplex: str) -> str:
        if simplex == DEGENERATE:
            return DEGENERATE
        return self.assignment[simplex]

    def to_json(self) -> dict:
        return {
            "source": self.source.to_json(),
            "target": self.target.to_json(),
            "assignment": {s: self.assignment[s] for n in sorted(self.source.simplices) for s in self.source.simplices[n]},
        }


def validate_map(f: SimplicialMap) -> ValidationReport:
    """Check degrees and commutation with faces.

    When a simplex goes to a degenerate simplex its faces are not constrained
    (they may land on nondegenerate simplices), so only simplices with a
    nondegenerate image are checked.
    """
    problems = []
    src, tgt = f.source, f.target
    for n in sorted(src.simplices):
        for s in src.simplices[n]:
            if s not in f.assignment:
                problems.append(f"{s}: no image")
                continue
            img = f.assignment[s]
            if img != DEGENERATE and tgt.degree.get(img) != n:
                problems.append(f"{s}: image {img} is not a {n}-simplex of the target")
    if problems:
        return ValidationReport(False, problems)
    for n in sorted(src.simplices):
        if n < 2:
            continue
        for s in src.simplices[n]:
            img = f.assignment[s]
            if img == DEGENERATE:
                continue
            for i in range(n + 1):
                down = src.faces[s][i]
                want = tgt.faces[img][i]
                if down == DEGENERATE:
                    if want != DEGENERATE:
                        problems.append(f"{s}: face {i} is degenerate but d{i} f({s}) = {want}")
                elif f.assignment[down] != want:
                    problems.append(f"{s}: f(d{i} {s}) = {f.assignment[down]} but d{i} f({s}) = {want}")
    return ValidationReport(not problems, problems)


def identity_map(s: SimplicialSet) -> SimplicialMap:
    return SimplicialMap(s, s, {x: x for x in s.degree})


def collapse_map(s: SimplicialSet) -> SimplicialMap:
    """The unique map to the one-point simplicial set."""
    return SimplicialMap(s, point(), {x: DEGENERATE for x in s.degree})


def nerve_map(g: GroupTable, h: GroupTable, images: Sequence[int], trunc: int = 3) -> SimplicialMap:
    """Nerve of a homomorphism: [g1|...|gn] -> [phi g1|...|phi gn]."""
    check_homomorphism(g, h, images)
    src, tgt = nerve(g, trunc), nerve(h, trunc)
    assignment = {}
    for n in src.simplices:
        for tup in itertools.product(g.non_identity(), repeat=n):
            img = [images[x] for x in tup]
            assignment[bar_name(tup)] = DEGENERATE if h.identity in img else bar_name(img)
    return SimplicialMap(src, tgt, assignment)


def compose(f: SimplicialMap, g: SimplicialMap) -> SimplicialMap:
    """g after f."""
    return SimplicialMap(f.source, g.target, {s: g.image(f.image(s)) for s in f.source.degree})


# -- JSON -------------------------------------------------------------------

def from_json(data: Mapping) -> SimplicialSet:
    """Build (and validate) a simplicial set from its JSON form."""
    if not isinstance(data, Mapping) or "simplices" not in data or "faces" not in data:
        raise InputError("simplicial set JSON needs 'simplices' and 'faces'")
    try:
        simplices = {int(k): tuple(str(x) for x in v) for k, v in data["simplices"].items()}
        faces = {str(k): tuple(str(x) for x in v) for k, v in data["faces"].items()}
    except (TypeError, ValueError, AttributeError) as exc:
        raise InputError(f"malformed simplicial set JSON: {exc}") from exc
    present = [n for n, v in simplices.items() if v]
    cap = int(data.get("dimension_cap", max(present, default=0)))
    s = SimplicialSet(
        {n: v for n, v in simplices.items() if v},
        faces,
        cap,
        bool(data.get("truncated", False)),
        str(data.get("name", "")),
    )
    return require_valid(s)


def map_from_json(data: Mapping) -> SimplicialMap:
    try:
        src = from_json(data["source"])
        tgt = from_json(data["target"])
        assignment = {str(k): str(v) for k, v in data["assignment"].items()}
    except (KeyError, TypeError, AttributeError) as exc:
        raise InputError(f"malformed map JSON: {exc}") from exc
    f = SimplicialMap(src, tgt, assignment)
    report = validate_map(f)
    if not report.ok:
        raise InputError("invalid simplicial map: " + "; ".join(report.violations[:5]))
    return f


def load_json(path: str | Path) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from exc
