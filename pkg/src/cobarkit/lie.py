"""Graded Lie algebras inside tensor algebras, enveloping algebras and the Lie model.

Everything Lie-theoretic is realized in a tensor algebra: the bracket is the
graded commutator [a, b] = ab - (-1)^{|a||b|} ba and dimensions are exact
ranks of spans of bracket monomials. No Hall basis, no sign tables.

The Lie model of a cocommutative coalgebra C has one generator t(x) of degree
|x| - 1 per basis element x of the coaugmentation ideal and

    d t(x) = -t(dx) - 1/2 sum (-1)^{|x'|} [t(x'), t(x'')]

with the coefficient 1/2 kept literally.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Mapping, Sequence

from . import ncgroebner as nc
from .coalgebra import (
    DgCoalgebra,
    cocommutativity_witness,
    divided_power_coalgebra,
    make_coalgebra,
    point_coalgebra,
    primitive_coalgebra,
    torus_coalgebra,
    wedge,
)
from .homology import loop_homology, weight_graded_cobar_homology, weighted_sequences
from .linalg import Echelon, SparseMatrix, homology_at
from .simplicial import GroupTable

HALF = Fraction(1, 2)


class NotCocommutative(ValueError):
    def __init__(self, witness: str):
        super().__init__(f"coalgebra is not cocommutative: the reduced coproduct of {witness} "
                         "is not fixed by the graded twist (the Lie model needs a cocommutative input)")
        self.witness = witness


# -- tensor algebra helpers ---------------------------------------------------

def word_degree(w: tuple, degrees: Sequence[int]) -> int:
    return sum(degrees[i] for i in w)


def commutator(a: Mapping, b: Mapping, da: int, db: int) -> dict:
    """[a, b] for homogeneous a, b of degrees da, db."""
    sign = -1 if (da * db) % 2 else 1
    return nc.poly_add(nc.poly_mul(a, b), nc.poly_mul(b, a), -sign)


def left_normed(seq: Sequence[int], degrees: Sequence[int]) -> dict:
    """[[..[g_1, g_2], ...], g_k] in the tensor algebra."""
    p = {(seq[0],): Fraction(1)}
    d = degrees[seq[0]]
    for g in seq[1:]:
        p = commutator(p, {(g,): Fraction(1)}, d, degrees[g])
        d += degrees[g]
    return p


def derivation(p: Mapping, on_generators: Sequence[Mapping], degrees: Sequence[int]) -> dict:
    """Extend a degree -1 map on generators to words, with the Koszul sign."""
    out: dict = {}
    for w, c in p.items():
        prefix = 0
        for pos, i in enumerate(w):
            sign = -1 if prefix % 2 else 1
            img = on_generators[i]
            if img:
                left, right = w[:pos], w[pos + 1:]
                for u, k in img.items():
                    v = left + u + right
                    x = out.get(v, 0) + sign * c * k
                    if x:
                        out[v] = x
                    else:
                        out.pop(v, None)
            prefix += degrees[i]
    return out


class _Span:
    """A subspace of a tensor algebra with coordinates in a chosen basis."""

    def __init__(self):
        self.index: dict[tuple, int] = {}
        self.basis: list[dict] = []
        self._ech = Echelon(track=True)
        self._slot: dict[int, int] = {}
        self._inserted = 0

    def _vec(self, p: Mapping) -> dict:
        return {self.index.setdefault(w, len(self.index)): c for w, c in p.items()}

    def add(self, p: Mapping) -> bool:
        if not p:
            return False
        k = self._inserted
        self._inserted += 1
        if not self._ech.add(self._vec(p)):
            return False
        self._slot[k] = len(self.basis)
        self.basis.append(dict(p))
        return True

    def coordinates(self, p: Mapping) -> dict[int, Fraction] | None:
        if not p:
            return {}
        if any(w not in self.index for w in p):
            return None
        x = self._ech.coordinates(self._vec(p))
        if x is None:
            return None
        return {self._slot[k]: c for k, c in x.items()}

    def __len__(self) -> int:
        return len(self.basis)


def _degree_sequences(degrees: Sequence[int], n: int) -> list[tuple]:
    if any(d < 1 for d in degrees):
        raise ValueError("degree grading needs generators of positive degree")
    return [s for k in range(1, n + 1) for s in weighted_sequences(degrees, n, k)]


def _lie_span(sequences: Sequence[tuple], degrees: Sequence[int]) -> _Span:
    span = _Span()
    for s in sequences:
        span.add(left_normed(s, degrees))
    return span


# -- dimension tables ----------------------------------------------------------

@dataclass(frozen=True)
class GradedVectorSpaceDims:
    dims: tuple[int, ...]
    start: int = 0
    label: str = "degree"

    def __post_init__(self):
        if any(d < 0 for d in self.dims):
            raise ValueError("dimensions are nonnegative")

    def __getitem__(self, n: int) -> int:
        i = n - self.start
        return self.dims[i] if 0 <= i < len(self.dims) else 0

    def as_list(self) -> list[int]:
        return list(self.dims)

    def to_json(self) -> dict:
        return {"grading": self.label, "start": self.start, "dims": list(self.dims)}

    def to_text(self) -> str:
        head = " ".join(f"{self.start + i:>4}" for i in range(len(self.dims)))
        body = " ".join(f"{d:>4}" for d in self.dims)
        return f"{self.label:>8}: {head}\n{'dim':>8}: {body}"


def free_lie_dims(degrees: Sequence[int], through: int, by: str = "degree") -> GradedVectorSpaceDims:
    """Dimensions of the free graded Lie algebra on generators of the given degrees.

    ``by="degree"`` gives degrees 1..through (generators must have positive
    degree); ``by="length"`` gives bracket lengths 1..through.
    """
    degrees = tuple(degrees)
    out = []
    for n in range(1, through + 1):
        if by == "degree":
            seqs = _degree_sequences(degrees, n)
        elif by == "length":
            seqs = weighted_sequences([1] * len(degrees), n, n)
        else:
            raise ValueError("by must be 'degree' or 'length'")
        out.append(len(_lie_span(seqs, degrees)))
    return GradedVectorSpaceDims(tuple(out), 1, by)


def _mobius(n: int) -> int:
    result, k = 1, 2
    while k * k <= n:
        if n % k == 0:
            n //= k
            if n % k == 0:
                return 0
            result = -result
        k += 1
    return -result if n > 1 else result


def witt_dimension(generators: int, length: int) -> int:
    """Necklace count (1/n) sum_{d | n} mu(d) k^{n/d}."""
    total = sum(_mobius(d) * generators ** (length // d) for d in range(1, length + 1) if length % d == 0)
    return total // length


# -- finite graded Lie algebras and U ----------------------------------------

@dataclass(frozen=True)
class LieAlgebra:
    """A graded Lie algebra with an explicit basis and bracket table.

    ``table[(i, j)]`` is [e_i, e_j] as {k: coefficient}; missing pairs bracket
    to zero. Brackets landing above ``through`` are dropped, which is harmless
    for anything measured in degrees <= through when all degrees are positive.
    """

    names: tuple[str, ...]
    degrees: tuple[int, ...]
    table: Mapping[tuple[int, int], Mapping[int, Fraction]] = field(repr=False)
    through: int | None = None

    def bracket(self, i: int, j: int) -> dict[int, Fraction]:
        return dict(self.table.get((i, j), {}))

    def dims(self, through: int) -> list[int]:
        out = [0] * (through + 1)
        for d in self.degrees:
            if 0 <= d <= through:
                out[d] += 1
        return out

    def antisymmetry_violations(self) -> list[tuple[int, int]]:
        bad = []
        for i in range(len(self.names)):
            for j in range(i, len(self.names)):
                sign = -1 if (self.degrees[i] * self.degrees[j]) % 2 else 1
                lhs = self.bracket(i, j)
                rhs = {k: -sign * c for k, c in self.bracket(j, i).items()}
                if lhs != rhs:
                    bad.append((i, j))
        return bad

    def with_bracket(self, i: int, j: int, value: Mapping[int, object]) -> "LieAlgebra":
        table = {k: dict(v) for k, v in self.table.items()}
        table[(i, j)] = {k: Fraction(c) for k, c in value.items() if c}
        return LieAlgebra(self.names, self.degrees, table, self.through)


def free_lie_algebra(degrees: Sequence[int], through: int, names: Sequence[str] | None = None) -> LieAlgebra:
    """The free graded Lie algebra on the given generators, cut off above ``through``."""
    degrees = tuple(degrees)
    gen_names = list(names or [f"g{i}" for i in range(len(degrees))])
    basis_polys: list[dict] = []
    basis_deg: list[int] = []
    spans: dict[int, tuple[_Span, int]] = {}
    for n in range(1, through + 1):
        span = _lie_span(_degree_sequences(degrees, n), degrees)
        spans[n] = (span, len(basis_polys))
        basis_polys.extend(span.basis)
        basis_deg.extend([n] * len(span))
    labels = []
    for p, d in zip(basis_polys, basis_deg):
        w = max(p)
        labels.append(gen_names[w[0]] if len(w) == 1 else "[" + ",".join(gen_names[i] for i in w) + "]")
    table: dict = {}
    for i, (p, dp) in enumerate(zip(basis_polys, basis_deg)):
        for j, (q, dq) in enumerate(zip(basis_polys, basis_deg)):
            if dp + dq > through:
                continue
            span, offset = spans[dp + dq]
            x = span.coordinates(commutator(p, q, dp, dq))
            if x is None:
                raise AssertionError("bracket left the Lie span")
            if x:
                table[(i, j)] = {offset + k: c for k, c in x.items()}
    return LieAlgebra(tuple(labels), tuple(basis_deg), table, through)


def abelian_lie_algebra(degrees: Sequence[int], names: Sequence[str] | None = None) -> LieAlgebra:
    names = tuple(names or [f"a{i}" for i in range(len(degrees))])
    return LieAlgebra(names, tuple(degrees), {}, None)


def enveloping_algebra(lie: LieAlgebra, through: int, trace=None) -> nc.FpAlgebra:
    """U(L) presented by xy - (-1)^{|x||y|} yx - [x, y] over the basis of L in degrees <= through."""
    keep = [i for i, d in enumerate(lie.degrees) if d <= through]
    if any(lie.degrees[i] < 1 for i in keep):
        raise ValueError("enveloping_dims needs positive degrees")
    local = {i: k for k, i in enumerate(keep)}
    relations = []
    for i in keep:
        for j in keep:
            di, dj = lie.degrees[i], lie.degrees[j]
            if di + dj > through:
                continue
            sign = -1 if (di * dj) % 2 else 1
            r = {(local[i], local[j]): Fraction(1)}
            r = nc.poly_add(r, {(local[j], local[i]): Fraction(1)}, -sign)
            for k, c in lie.bracket(i, j).items():
                if k not in local:
                    if lie.degrees[k] <= through:
                        raise ValueError("bracket table refers to a missing basis element")
                    continue
                r = nc.poly_add(r, {(local[k],): c}, -1)
            if r:
                relations.append(r)
    names = [lie.names[i] for i in keep]
    weights = [lie.degrees[i] for i in keep]
    return nc.groebner(names, relations, through, weights=weights, trace=trace)


def enveloping_dims(lie: LieAlgebra, through: int) -> GradedVectorSpaceDims:
    a = enveloping_algebra(lie, through)
    return GradedVectorSpaceDims(tuple(nc.dimension(a, through).counts), 0)


def symmetric_dims(lie_dims: Sequence[int], through: int) -> GradedVectorSpaceDims:
    """Graded symmetric algebra: polynomial on even classes, exterior on odd ones.

    ``lie_dims[n]`` is the dimension in degree n (index 0 must be 0).
    """
    if lie_dims and lie_dims[0]:
        raise ValueError("degree-0 classes make the symmetric algebra infinite in degree 0")
    series = [1] + [0] * through
    for n in range(1, min(len(lie_dims), through + 1)):
        for _ in range(lie_dims[n]):
            factor = [0] * (through + 1)
            for k in range(0, through // n + 1):
                factor[k * n] = 1 if n % 2 == 0 else (1 if k <= 1 else 0)
            series = [sum(series[i] * factor[m - i] for i in range(m + 1)) for m in range(through + 1)]
    return GradedVectorSpaceDims(tuple(series), 0)


@dataclass
class PbwReport:
    s_dims: list[int]
    u_dims: list[int]
    through: int
    antisymmetry_violations: list[tuple[int, int]]

    @property
    def ok(self) -> bool:
        return self.s_dims == self.u_dims

    @property
    def first_mismatch(self) -> int | None:
        for n, (a, b) in enumerate(zip(self.s_dims, self.u_dims)):
            if a != b:
                return n
        return None

    def to_json(self) -> dict:
        return {"S": self.s_dims, "U": self.u_dims, "through": self.through, "pass": self.ok,
                "first_mismatch": self.first_mismatch}


def pbw_check(lie: LieAlgebra, through: int) -> PbwReport:
    s = symmetric_dims(lie.dims(through), through).as_list()
    u = enveloping_dims(lie, through).as_list()
    return PbwReport(s, u, through, lie.antisymmetry_violations())


# -- the Lie model of a cocommutative coalgebra --------------------------------

@dataclass(frozen=True)
class GradedLiePresentation:
    """Free graded Lie algebra on named generators with a differential.

    ``weights`` records the original coalgebra degree of each generator
    (degree + 1); with zero coalgebra differential d preserves it.
    """

    names: tuple[str, ...]
    degrees: tuple[int, ...]
    weights: tuple[int, ...]
    differential: tuple[dict, ...] = field(repr=False)
    source: DgCoalgebra | None = field(default=None, repr=False, compare=False)

    def d(self, p: Mapping) -> dict:
        return derivation(p, self.differential, self.degrees)

    def check_d_squared(self) -> list[str]:
        """d^2 is a derivation, so it vanishes iff it vanishes on generators."""
        return [self.names[i] for i, img in enumerate(self.differential) if self.d(img)]

    def is_homogeneous_in_weight(self) -> bool:
        for img in self.differential:
            ws = {sum(self.weights[i] for i in w) for w in img}
            if len(ws) > 1:
                return False
        return all(
            sum(self.weights[i] for i in w) == self.weights[k]
            for k, img in enumerate(self.differential) for w in img
        )

    def to_json(self) -> dict:
        return {
            "generators": [{"name": x, "degree": d} for x, d in zip(self.names, self.degrees)],
            "differential": {x: nc.poly_to_json(img, self.names) for x, img in zip(self.names, self.differential) if img},
        }


def quillen_L(c: DgCoalgebra) -> GradedLiePresentation:
    witness = cocommutativity_witness(c)
    if witness is not None:
        raise NotCocommutative(witness)
    names = c.names
    index = {x: i for i, x in enumerate(names)}
    degrees = tuple(c.degree[x] - 1 for x in names)
    diff = []
    for x in names:
        img: dict = {}
        for y, k in c.d(x).items():
            img = nc.poly_add(img, {(index[y],): k}, -1)
        for k, a, b in c.delta(x):
            sign = -1 if c.degree[a] % 2 else 1
            br = commutator({(index[a],): Fraction(1)}, {(index[b],): Fraction(1)}, degrees[index[a]], degrees[index[b]])
            img = nc.poly_add(img, br, -HALF * sign * k)
        diff.append(img)
    p = GradedLiePresentation(tuple(f"t{x}" for x in names), degrees, tuple(d + 1 for d in degrees), tuple(diff), c)
    bad = p.check_d_squared()
    if bad:
        raise ValueError(f"d^2 != 0 on {bad[0]}; the coalgebra axioms fail")
    return p


# -- homology of the Lie model -------------------------------------------------

@dataclass
class LieHomology:
    """dims[key] with key (n, w) under the weight grading or n under the degree grading."""

    grading: str
    dims: dict
    exact: dict
    degree_bound: int
    weight_bound: int | None = None

    def degree_totals(self) -> list[int]:
        if self.grading == "degree":
            return [self.dims.get(n, 0) for n in range(self.degree_bound + 1)]
        return [sum(v for (n, w), v in self.dims.items() if n == k) for k in range(self.degree_bound + 1)]

    def to_json(self) -> dict:
        if self.grading == "degree":
            pieces = [{"n": n, "dim": d, "exact": self.exact[n]} for n, d in sorted(self.dims.items())]
        else:
            pieces = [{"n": n, "w": w, "dim": d, "exact": self.exact[(n, w)]} for (n, w), d in sorted(self.dims.items())]
        return {"grading": self.grading, "pieces": pieces}


def choose_grading(c: DgCoalgebra) -> str:
    if not c.differential:
        return "weight"
    if c.is_simply_connected():
        return "degree"
    return "length"


def _lie_piece(p: GradedLiePresentation, grading: str, key, length_bound: int | None = None) -> _Span:
    if grading == "weight":
        n, w = key
        if n < 0 or w - n < 1:
            return _Span()
        seqs = weighted_sequences(p.weights, w, w - n)
        return _lie_span([s for s in seqs if word_degree(s, p.degrees) == n], p.degrees)
    if grading == "degree":
        return _lie_span(_degree_sequences(p.degrees, key), p.degrees) if key >= 1 else _Span()
    # word-length quotient: degree key, at most length_bound letters
    if key < 0:
        return _Span()
    seqs = []
    for k in range(1, length_bound + 1):
        seqs.extend(s for s in weighted_sequences([1] * len(p.degrees), k, k) if word_degree(s, p.degrees) == key)
    return _lie_span(seqs, p.degrees)


def _d_matrix(p: GradedLiePresentation, src: _Span, dst: _Span, length_bound: int | None) -> SparseMatrix:
    entries = {}
    for j, b in enumerate(src.basis):
        img = p.d(b)
        if length_bound is not None:
            img = {w: c for w, c in img.items() if len(w) <= length_bound}
        x = dst.coordinates(img)
        if x is None:
            raise AssertionError("the differential leaves the Lie span")
        for i, c in x.items():
            entries[(i, j)] = c
    return SparseMatrix(len(dst), len(src), entries)


def lie_homology(p: GradedLiePresentation, N: int, W: int | None = None, length_bound: int = 6,
                 grading: str | None = None) -> LieHomology:
    """H_n of the Lie model for n <= N.

    Weight grading (zero coalgebra differential) and degree grading (simply
    connected input) are exact wherever the coalgebra itself is complete. The
    word-length quotient is a fallback and never exact.
    """
    c = p.source
    grading = grading or (choose_grading(c) if c is not None else "degree")
    dims, exact = {}, {}
    if grading == "weight":
        if W is None:
            raise ValueError("weight grading needs a weight bound W")
        cap = c.degree_cap if c is not None and c.truncated else None
        for w in range(1, W + 1):
            pieces = {n: _lie_piece(p, grading, (n, w)) for n in range(-1, N + 2)}
            for n in range(0, N + 1):
                d_in = _d_matrix(p, pieces[n + 1], pieces[n], None)
                d_out = _d_matrix(p, pieces[n], pieces[n - 1], None)
                dims[(n, w)] = homology_at(d_in, d_out).dimension
                exact[(n, w)] = cap is None or w <= cap
        return LieHomology(grading, dims, exact, N, W)
    lb = length_bound if grading == "length" else None
    pieces = {n: _lie_piece(p, grading, n, lb) for n in range(-1, N + 2)}
    for n in range(0, N + 1):
        d_in = _d_matrix(p, pieces[n + 1], pieces[n], lb)
        d_out = _d_matrix(p, pieces[n], pieces[n - 1], lb)
        dims[n] = homology_at(d_in, d_out).dimension
        if grading == "degree":
            exact[n] = c is None or not c.truncated or c.degree_cap >= n + 2
        else:
            exact[n] = False
    return LieHomology(grading, dims, exact, N, None)


def bigraded_symmetric_dims(classes: Mapping[tuple[int, int], int], N: int, W: int) -> dict[tuple[int, int], int]:
    """Graded symmetric algebra on classes of bidegree (n, w), w >= 1, parity from n."""
    series = {(0, 0): 1}
    for (n, w), h in sorted(classes.items()):
        if w < 1:
            raise ValueError("classes need positive weight")
        for _ in range(h):
            factor = {}
            k = 0
            while k * w <= W and k * n <= N:
                if n % 2 == 0 or k <= 1:
                    factor[(k * n, k * w)] = 1
                k += 1
            nxt: dict = {}
            for (a, b), x in series.items():
                for (e, f), y in factor.items():
                    if a + e <= N and b + f <= W:
                        nxt[(a + e, b + f)] = nxt.get((a + e, b + f), 0) + x * y
            series = nxt
    return {(n, w): series.get((n, w), 0) for n in range(N + 1) for w in range(W + 1)}


@dataclass
class CobarVsULReport:
    grading: str
    cobar: dict
    ul: dict
    exact_keys: list

    @property
    def mismatches(self) -> list:
        return [k for k in self.exact_keys if self.cobar.get(k) != self.ul.get(k)]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        def fmt(k):
            return {"n": k[0], "w": k[1]} if isinstance(k, tuple) else {"n": k}

        return {
            "grading": self.grading,
            "pieces": [dict(fmt(k), cobar=self.cobar.get(k), UH=self.ul.get(k)) for k in self.exact_keys],
            "pass": self.ok,
            "mismatches": [fmt(k) for k in self.mismatches],
        }


def cobar_vs_UL(c: DgCoalgebra, N: int = 4, W: int = 6) -> CobarVsULReport:
    """Cobar homology against U(H(Lie model)), counted through PBW.

    Under the weight grading every piece (n, w) with n <= N and w <= W is
    compared; under the degree grading, degrees 0..N.
    """
    p = quillen_L(c)
    grading = choose_grading(c)
    if grading == "weight":
        cob = weight_graded_cobar_homology(c, N, W)
        lh = lie_homology(p, N, W)
        ul = bigraded_symmetric_dims(lh.dims, N, W)
        keys = [k for k in sorted(cob.dims) if k[1] <= cob.exact_through_weight and lh.exact.get(k, True)]
        return CobarVsULReport(grading, dict(cob.dims), ul, keys)
    if grading == "degree":
        rep = loop_homology(c, N, N + 1)
        lh = lie_homology(p, N)
        ul = symmetric_dims(lh.degree_totals(), N).as_list()
        keys = [n for n in range(N + 1) if rep.entries[n].exact and lh.exact[n]]
        return CobarVsULReport(grading, {n: rep.dims[n] for n in range(N + 1)}, dict(enumerate(ul)), keys)
    raise ValueError("no exact grading: nonzero differential and C_1 != 0")


# -- the no-go signature -------------------------------------------------------

@dataclass
class NoGoVerdict:
    verdict: str  # impossible | possible | undetermined
    group_order: int
    h0_dim: int
    h0_exact: bool
    signature: list[int]
    cumulative: list[int]
    exceeds_at: int | None
    explanation: str

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "group_order": self.group_order,
            "h0_lie_dim": self.h0_dim,
            "h0_lie_dim_exact": self.h0_exact,
            "symmetric_power_dims": self.signature,
            "cumulative": self.cumulative,
            "exceeds_at_symmetric_degree": self.exceeds_at,
            "explanation": self.explanation,
        }


def h0_lie(c: DgCoalgebra, bound: int = 4) -> tuple[int, bool]:
    """dim H_0 of the Lie model (summed over weights <= bound) and whether that is the full answer."""
    if c.is_simply_connected():
        return 0, True
    p = quillen_L(c)
    grading = choose_grading(c)
    if grading == "weight":
        lh = lie_homology(p, 0, bound)
        h = sum(v for (n, w), v in lh.dims.items() if n == 0)
        # H_0 is a Lie algebra generated in weight 1, so once a weight piece
        # vanishes every heavier one does too
        vanished = any(lh.dims[(0, w)] == 0 for w in range(1, bound + 1))
        return h, vanished and all(lh.exact.values())
    lh = lie_homology(p, 0, length_bound=bound, grading="length")
    return lh.dims[0], False


def nogo_witness(c: DgCoalgebra, group: GroupTable, bound: int = 4) -> NoGoVerdict:
    """Could dim S H_0(Lie model) equal |G|? It is 1 when H_0 = 0 and infinite otherwise."""
    quillen_L(c)
    order = group.order
    h, exact = h0_lie(c, bound)
    if h == 0:
        sig, cum = [1], [1]
        if exact and order == 1:
            return NoGoVerdict("possible", order, 0, True, sig, cum, None,
                               "H_0 of the Lie model vanishes, so its symmetric algebra is Q, of dimension 1 = |G|")
        if exact or order > 1:
            return NoGoVerdict("impossible", order, 0, exact, sig, cum, None,
                               f"the symmetric algebra on H_0 has dimension 1 or is infinite, never {order}")
        return NoGoVerdict("undetermined", order, 0, False, sig, cum, None,
                           "H_0 of the Lie model looks zero within the bound but is not certified")
    # H_0 sits in even degree 0, so S(H_0) is polynomial: dim S^k >= C(h + k - 1, k)
    sig, cum, total, k = [], [], 0, 0
    while True:
        s = comb(h + k - 1, k)
        sig.append(s)
        total += s
        cum.append(total)
        if total > order:
            break
        k += 1
    rel = "=" if exact else ">="
    return NoGoVerdict(
        "impossible", order, h, exact, sig, cum, k,
        f"dim H_0(Lie model) {rel} {h}; S(H_0) is polynomial, so dim S^k {rel} C({h}+k-1, k) and the running "
        f"total {cum[-1]} exceeds |G| = {order} at symmetric degree {k}",
    )


# -- a corpus of cocommutative coalgebras --------------------------------------

def cone_coalgebra(n: int = 3) -> DgCoalgebra:
    """x in degree n, y in degree n + 1, dy = x, both primitive (acyclic)."""
    return make_coalgebra({n: ["x"], n + 1: ["y"]}, differential={"y": {"x": 1}}, name=f"cone{n}")


def cocommutative_corpus() -> dict[str, DgCoalgebra]:
    circle = primitive_coalgebra([1], ["x"])
    return {
        "point": point_coalgebra(),
        "prim2": primitive_coalgebra([2], ["u"]),
        "prim3": primitive_coalgebra([3], ["v"]),
        "prim2+3": primitive_coalgebra([2, 3], ["u", "v"]),
        "dp2": divided_power_coalgebra(2),
        "dp3": divided_power_coalgebra(3),
        "circle": circle,
        "torus": torus_coalgebra(),
        "wedge_circles": wedge(circle, circle),
        "cone3": cone_coalgebra(3),
    }
