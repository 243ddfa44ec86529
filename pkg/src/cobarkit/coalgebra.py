"""Connected dg coalgebras over Q and the pointed normalized chains functor.

Only the coaugmentation ideal is stored: ``basis[n]`` lists the basis of C_n for
n >= 1, C_0 = Q is implicit, and ``coproduct[x]`` holds the reduced coproduct
as triples ``(coefficient, left, right)``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .linalg import (
    Q,
    SparseMatrix,
    SubquotientBasis,
    homology_at,
    induced_map_on_homology,
    inverse,
    is_invertible,
)
from .simplicial import (
    DEGENERATE,
    InputError,
    SimplicialMap,
    SimplicialSet,
    require_valid,
    validate_map,
)

Term = tuple[Fraction, str, str]


def _collect(terms: Iterable[tuple[Fraction, str, str]]) -> tuple[Term, ...]:
    acc: dict[tuple[str, str], Fraction] = {}
    for c, a, b in terms:
        acc[(a, b)] = acc.get((a, b), 0) + c
    return tuple((c, a, b) for (a, b), c in acc.items() if c)


@dataclass(frozen=True)
class DgCoalgebra:
    basis: Mapping[int, tuple[str, ...]]
    differential: Mapping[str, Mapping[str, Fraction]]
    coproduct: Mapping[str, tuple[Term, ...]]
    degree_cap: int
    truncated: bool = False
    name: str = ""

    @cached_property
    def degree(self) -> dict[str, int]:
        return {x: n for n, names in self.basis.items() for x in names}

    @cached_property
    def names(self) -> tuple[str, ...]:
        """All basis names ordered by degree, then by listed position."""
        return tuple(x for n in sorted(self.basis) for x in self.basis[n])

    def of_degree(self, n: int) -> tuple[str, ...]:
        return tuple(self.basis.get(n, ()))

    def dim(self, n: int) -> int:
        return 1 if n == 0 else len(self.basis.get(n, ()))

    def d(self, x: str) -> dict[str, Fraction]:
        return dict(self.differential.get(x, {}))

    def delta(self, x: str) -> tuple[Term, ...]:
        return tuple(self.coproduct.get(x, ()))

    def is_simply_connected(self) -> bool:
        return not self.basis.get(1)

    def exact_through(self) -> int | None:
        """Largest n with H_n(C) certainly computed correctly (None = all)."""
        return self.degree_cap - 1 if self.truncated else None

    def boundary_matrix(self, n: int) -> SparseMatrix:
        """Matrix of d: C_n -> C_{n-1}; C_0 is the one-dimensional unit part."""
        if n <= 0:
            return SparseMatrix(0, self.dim(n) if n == 0 else 0)
        src = self.of_degree(n)
        if n == 1:
            return SparseMatrix(1, len(src))
        tgt = {y: i for i, y in enumerate(self.of_degree(n - 1))}
        entries = {}
        for j, x in enumerate(src):
            for y, c in self.d(x).items():
                entries[(tgt[y], j)] = c
        return SparseMatrix(len(tgt), len(src), entries)

    def to_json(self) -> dict:
        out = {
            "basis": {str(n): list(v) for n, v in sorted(self.basis.items()) if v},
            "differential": {x: {y: str(c) for y, c in self.differential[x].items()} for x in self.names if self.differential.get(x)},
            "coproduct": {x: [[str(c), a, b] for c, a, b in self.coproduct[x]] for x in self.names if self.coproduct.get(x)},
            "degree_cap": self.degree_cap,
            "truncated": self.truncated,
        }
        if self.name:
            out["name"] = self.name
        return out


def make_coalgebra(
    basis: Mapping[int, Sequence[str]],
    differential: Mapping[str, Mapping[str, object]] | None = None,
    coproduct: Mapping[str, Iterable[Sequence]] | None = None,
    degree_cap: int | None = None,
    truncated: bool = False,
    name: str = "",
) -> DgCoalgebra:
    """Convenience constructor accepting ints/strings as coefficients."""
    basis = {int(n): tuple(v) for n, v in basis.items() if v}
    diff = {x: {y: Q(c) for y, c in d.items() if Q(c)} for x, d in (differential or {}).items()}
    cop = {x: _collect((Q(c), a, b) for c, a, b in terms) for x, terms in (coproduct or {}).items()}
    cap = degree_cap if degree_cap is not None else max(basis, default=0)
    return DgCoalgebra(basis, {k: v for k, v in diff.items() if v}, {k: v for k, v in cop.items() if v}, cap, truncated, name)


def from_json(data: Mapping) -> DgCoalgebra:
    if not isinstance(data, Mapping) or "basis" not in data:
        raise InputError("coalgebra JSON needs a 'basis'")
    try:
        c = make_coalgebra(
            {int(n): [str(x) for x in v] for n, v in data["basis"].items()},
            data.get("differential", {}),
            {x: [(t[0], str(t[1]), str(t[2])) for t in terms] for x, terms in data.get("coproduct", {}).items()},
            data.get("degree_cap"),
            bool(data.get("truncated", False)),
            str(data.get("name", "")),
        )
    except (TypeError, ValueError, IndexError, AttributeError, ZeroDivisionError) as exc:
        raise InputError(f"malformed coalgebra JSON: {exc}") from exc
    problems = structural_problems(c)
    if problems:
        raise InputError("invalid coalgebra: " + "; ".join(problems[:5]))
    return c


# -- chains -----------------------------------------------------------------

def normalized_chains(s: SimplicialSet) -> DgCoalgebra:
    """Pointed normalized chains with the Alexander-Whitney reduced coproduct."""
    require_valid(s)
    differential: dict[str, dict[str, Fraction]] = {}
    coproduct: dict[str, tuple[Term, ...]] = {}
    for n in sorted(s.simplices):
        for sigma in s.simplices[n]:
            d: dict[str, Fraction] = {}
            for i, f in enumerate(s.faces[sigma]):
                if f != DEGENERATE and n > 1:
                    d[f] = d.get(f, 0) + (-1) ** i
            d = {k: Fraction(v) for k, v in d.items() if v}
            if d:
                differential[sigma] = d
            terms = []
            for p in range(1, n):
                front, back = s.front_face(sigma, p), s.back_face(sigma, n - p)
                if front != DEGENERATE and back != DEGENERATE:
                    terms.append((Fraction(1), front, back))
            terms = _collect(terms)
            if terms:
                coproduct[sigma] = terms
    return DgCoalgebra(dict(s.simplices), differential, coproduct, s.dimension_cap, s.truncated, s.name)


# -- axioms -----------------------------------------------------------------

@dataclass
class AxiomReport:
    ok: bool
    failures: list[str] = field(default_factory=list)

    @property
    def first_violation(self) -> str | None:
        return self.failures[0] if self.failures else None

    def __bool__(self) -> bool:
        return self.ok


def structural_problems(c: DgCoalgebra) -> list[str]:
    """Degree bookkeeping: names known, degrees consistent, connectedness."""
    deg = c.degree
    problems = []
    if len(deg) != sum(len(v) for v in c.basis.values()):
        problems.append("duplicate basis names")
    if any(n < 1 for n in c.basis):
        problems.append("basis degrees must be >= 1 (C_0 = Q is implicit)")
    for x, d in c.differential.items():
        if x not in deg:
            problems.append(f"differential of unknown element {x}")
            continue
        for y in d:
            if deg.get(y) != deg[x] - 1:
                problems.append(f"d({x}) has a term {y} of the wrong degree")
    for x, terms in c.coproduct.items():
        if x not in deg:
            problems.append(f"coproduct of unknown element {x}")
            continue
        for _, a, b in terms:
            if a not in deg or b not in deg:
                problems.append(f"coproduct of {x} mentions an unknown element")
            elif deg[a] + deg[b] != deg[x]:
                problems.append(f"coproduct term {a} (x) {b} of {x} has the wrong degree")
    return problems


def _tensor_d(c: DgCoalgebra, terms: Iterable[Term]) -> dict[tuple[str, str], Fraction]:
    # (d (x) 1 + 1 (x) d) with the Koszul sign on the right factor
    out: dict[tuple[str, str], Fraction] = {}
    deg = c.degree
    for coef, a, b in terms:
        for y, k in c.differential.get(a, {}).items():
            out[(y, b)] = out.get((y, b), 0) + coef * k
        sign = -1 if deg[a] % 2 else 1
        for y, k in c.differential.get(b, {}).items():
            out[(a, y)] = out.get((a, y), 0) + sign * coef * k
    return {k: v for k, v in out.items() if v}


def _delta_of_chain(c: DgCoalgebra, chain: Mapping[str, Fraction]) -> dict[tuple[str, str], Fraction]:
    out: dict[tuple[str, str], Fraction] = {}
    for x, k in chain.items():
        for coef, a, b in c.coproduct.get(x, ()):
            out[(a, b)] = out.get((a, b), 0) + k * coef
    return {key: v for key, v in out.items() if v}


def check_axioms(c: DgCoalgebra) -> AxiomReport:
    """d^2 = 0, reduced coassociativity and the co-Leibniz rule, degree by degree."""
    failures = structural_problems(c)
    if failures:
        return AxiomReport(False, failures)
    for n in sorted(c.basis):
        for x in c.basis[n]:
            if n == 1 and c.differential.get(x):
                failures.append(f"{x}: d of a degree-1 element must vanish (C_0 = Q)")
            dd: dict[str, Fraction] = {}
            for y, k in c.differential.get(x, {}).items():
                for z, m in c.differential.get(y, {}).items():
                    dd[z] = dd.get(z, 0) + k * m
            if any(dd.values()):
                failures.append(f"{x}: d^2 != 0")
            left: dict[tuple[str, str, str], Fraction] = {}
            right: dict[tuple[str, str, str], Fraction] = {}
            for coef, a, b in c.coproduct.get(x, ()):
                for k, a1, a2 in c.coproduct.get(a, ()):
                    left[(a1, a2, b)] = left.get((a1, a2, b), 0) + coef * k
                for k, b1, b2 in c.coproduct.get(b, ()):
                    right[(a, b1, b2)] = right.get((a, b1, b2), 0) + coef * k
            if {k: v for k, v in left.items() if v} != {k: v for k, v in right.items() if v}:
                failures.append(f"{x}: reduced coproduct is not coassociative")
            lhs = _delta_of_chain(c, c.differential.get(x, {}))
            rhs = _tensor_d(c, c.coproduct.get(x, ()))
            if lhs != rhs:
                failures.append(f"{x}: d is not a coderivation of the coproduct")
    return AxiomReport(not failures, failures)


def cocommutativity_witness(c: DgCoalgebra) -> str | None:
    """First basis element whose reduced coproduct is not fixed by the graded twist."""
    deg = c.degree
    for x in c.names:
        terms = c.coproduct.get(x, ())
        fwd = {(a, b): k for k, a, b in terms}
        twisted = {(b, a): k * (-1) ** (deg[a] * deg[b]) for k, a, b in terms}
        if fwd != twisted:
            return x
    return None


def is_cocommutative(c: DgCoalgebra) -> bool:
    return cocommutativity_witness(c) is None


# -- maps -------------------------------------------------------------------

@dataclass(frozen=True)
class DgCoalgebraMap:
    source: DgCoalgebra
    target: DgCoalgebra
    images: Mapping[str, Mapping[str, Fraction]]

    def image(self, x: str) -> dict[str, Fraction]:
        return dict(self.images.get(x, {}))

    def apply(self, chain: Mapping[str, Fraction]) -> dict[str, Fraction]:
        out: dict[str, Fraction] = {}
        for x, k in chain.items():
            for y, m in self.images.get(x, {}).items():
                out[y] = out.get(y, 0) + k * m
        return {y: v for y, v in out.items() if v}

    def matrix(self, n: int) -> SparseMatrix:
        if n == 0:
            return SparseMatrix.identity(1)
        src = self.source.of_degree(n)
        tgt = {y: i for i, y in enumerate(self.target.of_degree(n))}
        entries = {}
        for j, x in enumerate(src):
            for y, c in self.images.get(x, {}).items():
                entries[(tgt[y], j)] = c
        return SparseMatrix(len(tgt), len(src), entries)


def map_problems(f: DgCoalgebraMap) -> list[str]:
    src, tgt = f.source, f.target
    problems = []
    for x in src.names:
        for y in f.images.get(x, {}):
            if tgt.degree.get(y) != src.degree[x]:
                problems.append(f"f({x}) has a term {y} of the wrong degree")
    if problems:
        return problems
    for x in src.names:
        if f.apply(src.d(x)) != _chain_d(tgt, f.image(x)):
            problems.append(f"{x}: f does not commute with the differentials")
        lhs = _delta_of_chain(tgt, f.image(x))
        rhs: dict[tuple[str, str], Fraction] = {}
        for coef, a, b in src.coproduct.get(x, ()):
            for ya, ka in f.images.get(a, {}).items():
                for yb, kb in f.images.get(b, {}).items():
                    rhs[(ya, yb)] = rhs.get((ya, yb), 0) + coef * ka * kb
        if lhs != {k: v for k, v in rhs.items() if v}:
            problems.append(f"{x}: f does not commute with the reduced coproducts")
    return problems


def _chain_d(c: DgCoalgebra, chain: Mapping[str, Fraction]) -> dict[str, Fraction]:
    out: dict[str, Fraction] = {}
    for x, k in chain.items():
        for y, m in c.differential.get(x, {}).items():
            out[y] = out.get(y, 0) + k * m
    return {y: v for y, v in out.items() if v}


def chains_map(f: SimplicialMap) -> DgCoalgebraMap:
    report = validate_map(f)
    if not report.ok:
        raise InputError("invalid simplicial map: " + "; ".join(report.violations[:5]))
    images = {s: {t: Fraction(1)} for s, t in f.assignment.items() if t != DEGENERATE}
    g = DgCoalgebraMap(normalized_chains(f.source), normalized_chains(f.target), images)
    problems = map_problems(g)
    if problems:
        raise InputError("chains of the map are not a coalgebra map: " + "; ".join(problems[:5]))
    return g


def compose_maps(f: DgCoalgebraMap, g: DgCoalgebraMap) -> DgCoalgebraMap:
    """g after f."""
    return DgCoalgebraMap(f.source, g.target, {x: g.apply(f.image(x)) for x in f.source.names})


def identity_coalgebra_map(c: DgCoalgebra) -> DgCoalgebraMap:
    return DgCoalgebraMap(c, c, {x: {x: Fraction(1)} for x in c.names})


# -- homology ----------------------------------------------------------------

def chain_homology(c: DgCoalgebra, n: int) -> SubquotientBasis:
    return homology_at(c.boundary_matrix(n + 1), c.boundary_matrix(n))


def homology_dims(c: DgCoalgebra, through: int) -> list[int]:
    return [chain_homology(c, n).dimension for n in range(through + 1)]


@dataclass
class DegreeVerdict:
    n: int
    dim_src: int
    dim_dst: int
    iso: bool
    exact: bool


@dataclass
class QuasiIsoVerdict:
    degrees: list[DegreeVerdict]

    @property
    def failing(self) -> list[int]:
        return [d.n for d in self.degrees if d.exact and not d.iso]

    @property
    def overall(self) -> str:
        if self.failing:
            return "fail"
        if all(d.exact for d in self.degrees):
            return "pass"
        return "indeterminate"


def is_quasi_isomorphism(f: DgCoalgebraMap, through: int) -> QuasiIsoVerdict:
    """Compare H_n(f) for n <= through; degrees past a truncation are not exact."""
    out = []
    for n in range(through + 1):
        hs, ht = chain_homology(f.source, n), chain_homology(f.target, n)
        m = induced_map_on_homology(f.matrix(n), hs, ht)
        exact = all(c.exact_through() is None or n <= c.exact_through() for c in (f.source, f.target))
        out.append(DegreeVerdict(n, hs.dimension, ht.dimension, is_invertible(m), exact))
    return QuasiIsoVerdict(out)


# -- builders ----------------------------------------------------------------

def point_coalgebra() -> DgCoalgebra:
    return make_coalgebra({}, name="point")


def primitive_coalgebra(degrees: Sequence[int], names: Sequence[str] | None = None) -> DgCoalgebra:
    """Q plus primitive classes in the given degrees, zero differential."""
    names = list(names or [f"p{i}" for i in range(len(degrees))])
    basis: dict[int, list[str]] = {}
    for x, n in zip(names, degrees):
        basis.setdefault(n, []).append(x)
    return make_coalgebra(basis, name="primitive" + "".join(str(n) for n in degrees))


def divided_power_coalgebra(m: int, step: int = 2) -> DgCoalgebra:
    """Basis c_1..c_m in degrees step*k with reduced coproduct sum c_i (x) c_j, i+j=k.

    With step 2 this is the homology coalgebra of CP^m.
    """
    basis = {step * k: [f"c{k}"] for k in range(1, m + 1)}
    cop = {f"c{k}": [(1, f"c{i}", f"c{k - i}") for i in range(1, k)] for k in range(2, m + 1)}
    return make_coalgebra(basis, coproduct=cop, name=f"dp{m}")


def torus_coalgebra() -> DgCoalgebra:
    """Homology coalgebra of the 2-torus: x, y in degree 1 and z in degree 2."""
    return make_coalgebra({1: ["x", "y"], 2: ["z"]}, coproduct={"z": [(1, "x", "y"), (-1, "y", "x")]}, name="torus")


def wedge(a: DgCoalgebra, b: DgCoalgebra) -> DgCoalgebra:
    """Coproduct in connected coalgebras: the reduced parts side by side."""
    def ren(tag, x):
        return f"{tag}.{x}"

    basis: dict[int, list[str]] = {}
    diff, cop = {}, {}
    for tag, c in (("a", a), ("b", b)):
        for n in sorted(c.basis):
            basis.setdefault(n, []).extend(ren(tag, x) for x in c.basis[n])
        for x, d in c.differential.items():
            diff[ren(tag, x)] = {ren(tag, y): k for y, k in d.items()}
        for x, terms in c.coproduct.items():
            cop[ren(tag, x)] = [(k, ren(tag, p), ren(tag, q)) for k, p, q in terms]
    caps = [c.degree_cap for c in (a, b) if c.truncated]
    truncated = bool(caps)
    cap = min(caps) if caps else max(a.degree_cap, b.degree_cap)
    basis = {n: v for n, v in basis.items() if n <= cap}
    keep = {x for v in basis.values() for x in v}
    return make_coalgebra(
        basis,
        {x: d for x, d in diff.items() if x in keep},
        {x: t for x, t in cop.items() if x in keep},
        cap,
        truncated,
        f"{a.name}v{b.name}",
    )


def tensor(a: DgCoalgebra, b: DgCoalgebra) -> DgCoalgebra:
    """Tensor product coalgebra (chains on a product), reduced part only."""
    one = "1"

    def full_delta(c, x):
        if x == one:
            return [(Fraction(1), one, one)]
        return [(Fraction(1), x, one), (Fraction(1), one, x)] + list(c.coproduct.get(x, ()))

    def deg(c, x):
        return 0 if x == one else c.degree[x]

    def name(x, y):
        return f"{x}@{y}"

    pairs = [(x, one) for x in a.names] + [(one, y) for y in b.names] + [(x, y) for x in a.names for y in b.names]
    caps = [c.degree_cap for c in (a, b) if c.truncated]
    truncated = bool(caps)
    cap = min(caps) if caps else a.degree_cap + b.degree_cap
    pairs = [(x, y) for x, y in pairs if deg(a, x) + deg(b, y) <= cap]
    basis: dict[int, list[str]] = {}
    for x, y in sorted(pairs, key=lambda p: (deg(a, p[0]) + deg(b, p[1]))):
        basis.setdefault(deg(a, x) + deg(b, y), []).append(name(x, y))
    diff, cop = {}, {}
    for x, y in pairs:
        d: dict[str, Fraction] = {}
        for z, k in (a.differential.get(x, {}) if x != one else {}).items():
            d[name(z, y)] = d.get(name(z, y), 0) + k
        sign = -1 if deg(a, x) % 2 else 1
        for z, k in (b.differential.get(y, {}) if y != one else {}).items():
            d[name(x, z)] = d.get(name(x, z), 0) + sign * k
        diff[name(x, y)] = d
        terms = []
        for k1, x1, x2 in full_delta(a, x):
            for k2, y1, y2 in full_delta(b, y):
                left, right = (x1, y1), (x2, y2)
                if left == (one, one) or right == (one, one):
                    continue
                sign = -1 if (deg(a, x2) * deg(b, y1)) % 2 else 1
                terms.append((sign * k1 * k2, name(*left), name(*right)))
        cop[name(x, y)] = terms
    return make_coalgebra(basis, diff, cop, cap, truncated, f"{a.name}x{b.name}")


def change_basis(c: DgCoalgebra, matrices: Mapping[int, SparseMatrix]) -> DgCoalgebra:
    """Re-express ``c`` in a new basis e'_j = sum_i P[i, j] e_i per degree.

    The result is isomorphic to ``c``; basis names get a prime.
    """
    old_to_new: dict[int, SparseMatrix] = {}
    for n, names in c.basis.items():
        p = matrices.get(n, SparseMatrix.identity(len(names)))
        if not is_invertible(p) or p.rows != len(names):
            raise ValueError(f"degree {n}: change of basis must be invertible of size {len(names)}")
        old_to_new[n] = inverse(p)

    def new(x):
        return x + "'"

    def to_new(chain: Mapping[str, Fraction], n: int) -> dict[str, Fraction]:
        idx = {x: i for i, x in enumerate(c.basis[n])}
        v = old_to_new[n].apply({idx[x]: k for x, k in chain.items()})
        return {new(c.basis[n][i]): k for i, k in v.items()}

    diff, cop = {}, {}
    for n, names in c.basis.items():
        p = matrices.get(n, SparseMatrix.identity(len(names)))
        for j, xj in enumerate(names):
            combo = {names[i]: k for i, k in p.column(j).items()}
            d: dict[str, Fraction] = {}
            for x, k in combo.items():
                for y, m in c.differential.get(x, {}).items():
                    d[y] = d.get(y, 0) + k * m
            d = {y: v for y, v in d.items() if v}
            if d:
                diff[new(xj)] = to_new(d, n - 1)
            pairs = _delta_of_chain(c, combo)
            terms = []
            for (a, b), k in pairs.items():
                na, nb = c.degree[a], c.degree[b]
                for ya, ka in to_new({a: Fraction(1)}, na).items():
                    for yb, kb in to_new({b: Fraction(1)}, nb).items():
                        terms.append((k * ka * kb, ya, yb))
            cop[new(xj)] = terms
    basis = {n: [new(x) for x in names] for n, names in c.basis.items()}
    return make_coalgebra(basis, diff, cop, c.degree_cap, c.truncated, c.name + "'")


def random_basis_change(c: DgCoalgebra, rng: random.Random) -> DgCoalgebra:
    """Random unitriangular shear times a random diagonal rescaling."""
    mats = {}
    for n, names in c.basis.items():
        k = len(names)
        entries = {}
        for j in range(k):
            entries[(j, j)] = Fraction(rng.choice([1, -1, 2, -3]), rng.choice([1, 2, 3]))
            for i in range(j):
                if rng.random() < 0.5:
                    entries[(i, j)] = Fraction(rng.randint(-2, 2))
        mats[n] = SparseMatrix(k, k, entries)
    return change_basis(c, mats)


def corrupt_sign(c: DgCoalgebra, rng: random.Random) -> tuple[DgCoalgebra, str]:
    """Flip the sign of one coproduct term or one differential entry."""
    slots = [("delta", x, i) for x in c.names for i in range(len(c.coproduct.get(x, ())))]
    slots += [("d", x, y) for x in c.names for y in sorted(c.differential.get(x, {}))]
    if not slots:
        raise ValueError("nothing to corrupt")
    kind, x, where = rng.choice(slots)
    diff = {k: dict(v) for k, v in c.differential.items()}
    cop = {k: list(v) for k, v in c.coproduct.items()}
    if kind == "delta":
        k, a, b = cop[x][where]
        cop[x][where] = (-k, a, b)
        what = f"sign of coproduct term {a} (x) {b} of {x}"
    else:
        diff[x][where] = -diff[x][where]
        what = f"sign of d({x}) coefficient on {where}"
    bad = DgCoalgebra(c.basis, diff, {k: tuple(v) for k, v in cop.items()}, c.degree_cap, c.truncated, c.name + "~")
    return bad, what



def random_coalgebra(rng: random.Random, max_basis: int = 10) -> DgCoalgebra:
    """A small valid coalgebra: a random base, maybe combined with a second, in a random basis."""
    from .simplicial import cyclic, minimal_sphere, nerve

    def base():
        kind = rng.choice(["prim", "dp", "torus", "sphere", "nerve"])
        if kind == "prim":
            return primitive_coalgebra(sorted(rng.randint(1, 4) for _ in range(rng.randint(1, 3))))
        if kind == "dp":
            return divided_power_coalgebra(rng.randint(1, 3), rng.choice([1, 2]))
        if kind == "torus":
            return torus_coalgebra()
        if kind == "sphere":
            return normalized_chains(minimal_sphere(rng.randint(1, 4)))
        return normalized_chains(nerve(cyclic(rng.choice([2, 3])), 2))

    c = base()
    if rng.random() < 0.5:
        other = base()
        combined = wedge(c, other) if rng.random() < 0.5 else tensor(c, other)
        if sum(len(v) for v in combined.basis.values()) <= max_basis:
            c = combined
    return random_basis_change(c, rng)
