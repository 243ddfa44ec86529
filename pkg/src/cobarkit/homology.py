"""Homology of cobar truncations, induced maps and equivalence verdicts.

Degree 0 always goes through the finite presentation of H_0 (the degree-0 part
of the cobar construction is infinite as soon as C_1 != 0). Higher degrees use
the word-length quotient and are marked exact only where the truncation
provably loses nothing.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from . import ncgroebner as nc
from .cobar import CobarTruncation, H0Presentation, Letters, cobar, h0_presentation
from .coalgebra import DgCoalgebraMap, map_problems
from .linalg import (
    SparseMatrix,
    SubquotientBasis,
    homology_at,
    induced_map_on_homology,
    is_invertible,
    solve,
)

DEFAULT_MAX_BASIS = 4000


@dataclass
class DegreeEntry:
    n: int
    dimension: int | None
    exact: bool
    stable: bool | None = None
    note: str = ""

    def to_json(self) -> dict:
        return {"n": self.n, "dim": self.dimension, "exact": self.exact, "stable": self.stable, "note": self.note}


@dataclass
class CobarHomologyReport:
    entries: list[DegreeEntry]
    degree_bound: int
    wordlength_bound: int
    groebner_bound: int
    h0: nc.DimensionReport | None = None

    @property
    def dims(self) -> list[int | None]:
        return [e.dimension for e in self.entries]

    @property
    def all_exact(self) -> bool:
        return all(e.exact for e in self.entries)

    def to_json(self) -> dict:
        return {
            "degrees": [e.to_json() for e in self.entries],
            "bounds": {"N": self.degree_bound, "L": self.wordlength_bound, "Dg": self.groebner_bound},
        }


def truncation_homology(t: CobarTruncation, n: int) -> SubquotientBasis | None:
    if n + 1 not in t.differential or (n > 0 and n not in t.differential):
        return None
    return homology_at(t.differential[n + 1], t.matrix(n))


def h0_entry(p: H0Presentation, groebner_bound: int) -> tuple[DegreeEntry, nc.DimensionReport]:
    a = p.algebra(groebner_bound)
    rep = nc.dimension(a)
    if rep.finite:
        return DegreeEntry(0, rep.total, True, None, f"H0 by presentation: {rep.verdict}"), rep
    return DegreeEntry(0, rep.total, False, None, f"H0 by presentation: {rep.verdict}, counts {rep.counts}"), rep


def cobar_homology(
    t: CobarTruncation,
    groebner_bound: int = 8,
    stabilization: bool = True,
    max_basis: int | None = DEFAULT_MAX_BASIS,
) -> CobarHomologyReport:
    """Dimensions of H_n of the cobar construction for n = 0..N.

    Non-exact degrees are word-length filtered values; for those we also
    recompute with L - 1 and L - 2 and note whether the value moved.
    """
    c = t.source
    entries = []
    h0rep = None
    if c.is_simply_connected():
        entries.append(DegreeEntry(0, 1, True, None, "C_1 = 0: H0 = Q"))
    else:
        e, h0rep = h0_entry(h0_presentation(c), groebner_bound)
        entries.append(e)
    smaller = []
    if stabilization and not c.is_simply_connected():
        for back in (1, 2):
            if t.wordlength_bound - back >= 1:
                smaller.append(cobar(c, t.degree_bound, t.wordlength_bound - back, max_basis))
    for n in range(1, t.degree_bound + 1):
        h = truncation_homology(t, n)
        if h is None:
            entries.append(DegreeEntry(n, None, False, None, "word basis over budget; not computed"))
            continue
        if t.exact[n]:
            entries.append(DegreeEntry(n, h.dimension, True, None, ""))
            continue
        values = [h.dimension]
        for s in smaller:
            hs = truncation_homology(s, n)
            values.append(None if hs is None else hs.dimension)
        stable = len(values) == 3 and len(set(values)) == 1
        note = f"word-length filtered (L={t.wordlength_bound}); values for L, L-1, L-2: {values}"
        entries.append(DegreeEntry(n, h.dimension, False, stable, note))
    return CobarHomologyReport(entries, t.degree_bound, t.wordlength_bound, groebner_bound, h0rep)


def loop_homology(c, N: int, L: int, groebner_bound: int = 8, max_basis: int | None = DEFAULT_MAX_BASIS) -> CobarHomologyReport:
    return cobar_homology(cobar(c, N, L, max_basis), groebner_bound, max_basis=max_basis)


# -- maps ----------------------------------------------------------------------

def loop_map_matrix(f: DgCoalgebraMap, src: CobarTruncation, dst: CobarTruncation, n: int) -> SparseMatrix:
    """Omega f on degree-n words: apply f letter by letter (length preserving)."""
    ls, ld = src.letters, dst.letters
    letter_images = []
    for x in ls.names:
        letter_images.append({ld.index[y]: k for y, k in f.image(x).items()})
    rows = dst.index(n)
    entries: dict = {}
    for j, w in enumerate(src.basis[n]):
        terms = {(): Fraction(1)}
        for i in w:
            nxt = {}
            for u, a in terms.items():
                for y, b in letter_images[i].items():
                    v = u + (y,)
                    nxt[v] = nxt.get(v, 0) + a * b
            terms = {u: a for u, a in nxt.items() if a}
        for v, a in terms.items():
            r = rows[v]
            entries[(r, j)] = entries.get((r, j), 0) + a
    return SparseMatrix(len(rows), len(src.basis[n]), entries)


def h0_images(f: DgCoalgebraMap, ps: H0Presentation, pt: H0Presentation) -> list[dict]:
    idx = {x: i for i, x in enumerate(pt.generators)}
    return [{(idx[y],): k for y, k in f.image(x).items()} for x in ps.generators]


@dataclass
class HigherDegree:
    n: int
    dim_src: int | None
    dim_dst: int | None
    iso: bool | None
    exact: bool

    def to_json(self) -> dict:
        return {"n": self.n, "dim_src": self.dim_src, "dim_dst": self.dim_dst, "iso": self.iso, "exact": self.exact}


@dataclass
class OmegaQisVerdict:
    h0: nc.MapVerdict
    h0_dims: tuple[int, int]
    h0_exact: bool
    degrees: list[HigherDegree]
    bounds: dict
    grouplikes: tuple[str, str] = ("", "")
    # set when invertibility of group-likes certifies that H_0(Omega f) is not an iso
    h0_refutation: str | None = None

    @property
    def h0_iso(self) -> bool | None:
        if self.h0_refutation:
            return False
        if self.h0_exact:
            return self.h0.iso
        return None

    @property
    def overall(self) -> str:
        if self.h0_iso is False:
            return "fail"
        if any(d.exact and d.iso is False for d in self.degrees):
            return "fail"
        if self.h0_iso and all(d.exact and d.iso for d in self.degrees):
            return "pass"
        return "indeterminate"

    @property
    def indeterminate_degrees(self) -> list[int]:
        out = [] if self.h0_iso is not None else [0]
        return out + [d.n for d in self.degrees if not d.exact]

    def to_json(self) -> dict:
        return {
            "h0": {
                "well_defined": self.h0.well_defined,
                "injective": self.h0.injective,
                "surjective": self.h0.surjective,
                "iso": self.h0_iso,
                "exact": self.h0_iso is not None,
                "dim_src": self.h0_dims[0],
                "dim_dst": self.h0_dims[1],
                "dims_exact": self.h0.exact,
                "grouplikes_src": self.grouplikes[0],
                "grouplikes_dst": self.grouplikes[1],
                "refutation": self.h0_refutation,
            },
            "degrees": [d.to_json() for d in self.degrees],
            "overall": self.overall,
            "bounds": self.bounds,
        }


def invertibility_discrepancy(a_src: nc.FpAlgebra, a_dst: nc.FpAlgebra, images: Sequence[Mapping]) -> str | None:
    """A group-like 1 + x with certifiably no inverse whose image is invertible.

    Algebra isomorphisms preserve units, so such an x refutes H_0(f) being one.
    """
    seeds = [nc.poly_add(nc.one(), {(i,): Fraction(1)}) for i in range(len(a_src.generators))]
    src = antipode_on_grouplikes(a_src, seeds)
    if not src.exact:
        return None
    for k in src.missing:
        img = nc.poly_add(nc.one(), images[k])
        dst = antipode_on_grouplikes(a_dst, [img])
        if dst.all_invertible:
            inv = a_dst.format(dst.inverses[0])
            return (f"1 + {a_src.generators[k]} has no inverse in the source, "
                    f"but its image {a_dst.format(a_dst.normal_form(img))} has inverse {inv}")
    return None


def omega_qis_check(
    f: DgCoalgebraMap,
    N: int,
    L: int,
    groebner_bound: int = 8,
    max_basis: int | None = DEFAULT_MAX_BASIS,
) -> OmegaQisVerdict:
    """Is Omega f a quasi-isomorphism, as far as the bounds (N, L, D_g) can tell?"""
    problems = map_problems(f)
    if problems:
        raise ValueError("not a map of dg coalgebras: " + "; ".join(problems[:3]))
    for c in (f.source, f.target):
        if c.truncated and c.degree_cap < N + 1:
            raise ValueError(f"{c.name or 'coalgebra'}: degree_cap {c.degree_cap} < N + 1 = {N + 1}")
    ts, tt = cobar(f.source, N, L, max_basis), cobar(f.target, N, L, max_basis)

    # Omega f must commute with D on the truncations
    for n in range(1, N + 2):
        if n in ts.differential and n in tt.differential and n in ts.basis and n - 1 in ts.basis:
            lhs = tt.differential[n] @ loop_map_matrix(f, ts, tt, n)
            rhs = loop_map_matrix(f, ts, tt, n - 1) @ ts.differential[n]
            if lhs != rhs:
                raise ValueError(f"Omega f does not commute with D in degree {n}")

    ps, pt = h0_presentation(f.source), h0_presentation(f.target)
    a_s, a_t = ps.algebra(groebner_bound), pt.algebra(groebner_bound)
    mv = nc.map_check(a_s, a_t, h0_images(f, ps, pt))
    ds, dt = nc.dimension(a_s), nc.dimension(a_t)
    h0_exact = mv.exact or not mv.well_defined
    if not mv.exact and ds.finite != dt.finite and (ds.finite or dt.finite):
        # a finite-dimensional algebra is never isomorphic to an infinite one
        h0_exact = True
    if mv.exact and not mv.iso:
        h0_exact = True
    gs, gt = nc.grouplike_closure(a_s), nc.grouplike_closure(a_t)
    refutation = None
    if mv.well_defined and not (h0_exact and not mv.iso):
        refutation = invertibility_discrepancy(a_s, a_t, [a_t.normal_form(p) for p in h0_images(f, ps, pt)])

    degrees = []
    for n in range(1, N + 1):
        hs, ht = truncation_homology(ts, n), truncation_homology(tt, n)
        exact = ts.exact[n] and tt.exact[n]
        if hs is None or ht is None:
            degrees.append(HigherDegree(n, hs and hs.dimension, ht and ht.dimension, None, False))
            continue
        m = induced_map_on_homology(loop_map_matrix(f, ts, tt, n), hs, ht)
        degrees.append(HigherDegree(n, hs.dimension, ht.dimension, is_invertible(m), exact))
    bounds = {"N": N, "L": L, "Dg": groebner_bound}
    return OmegaQisVerdict(mv, (ds.total, dt.total), h0_exact, degrees, bounds, (gs.verdict, gt.verdict), refutation)


# -- antipode ------------------------------------------------------------------

@dataclass
class AntipodeReport:
    inverses: dict[int, dict] = field(default_factory=dict)
    missing: list[int] = field(default_factory=list)
    # True when a missing inverse is certain, not just absent below the bound
    exact: bool = True

    @property
    def all_invertible(self) -> bool:
        return not self.missing


def antipode_on_grouplikes(a: nc.FpAlgebra, grouplikes: Sequence[Mapping]) -> AntipodeReport:
    """Solve g y = 1 in normal-form coordinates for each group-like g, then check y g = 1.

    For an infinite-dimensional algebra the search runs over irreducible words
    of degree <= the Groebner bound. A missing inverse is certain when the
    algebra is finite-dimensional, or free: a free algebra is a graded domain,
    so its only units are the nonzero scalars.
    """
    dim = nc.dimension(a)
    words = nc.basis_words(a)
    free = a.complete_flag and not a.groebner_basis
    report = AntipodeReport(exact=dim.finite or free)
    for k, g in enumerate(grouplikes):
        g = a.normal_form(g)
        if free:
            if set(g) == {()}:
                report.inverses[k] = {(): 1 / Fraction(g[()])}
            else:
                report.missing.append(k)
            continue
        index: dict = {}
        columns = []
        for w in words:
            prod = a.mul(g, {w: Fraction(1)})
            col = {}
            for u, c in prod.items():
                col[index.setdefault(u, len(index))] = c
            columns.append(col)
        target = {index.setdefault((), len(index)): Fraction(1)}
        m = SparseMatrix.from_columns(len(index), columns)
        x = solve(m, target)
        if x is None:
            report.missing.append(k)
            continue
        y = {words[j]: c for j, c in x.items()}
        if a.mul(y, g) != nc.one():
            report.missing.append(k)
            continue
        report.inverses[k] = a.normal_form(y)
    return report


# -- weight grading --------------------------------------------------------------
#
# With zero differential, D preserves the internal weight of a word (the sum of
# the original degrees of its letters), and a piece of fixed degree n and
# weight w is spanned by the finitely many words of length w - n. Homology is
# then exact piece by piece, even when C_1 != 0.

def weighted_sequences(values: Sequence[int], total: int, length: int) -> list[tuple]:
    """Index sequences of the given length whose values sum to ``total`` (values >= 1)."""
    out: list[tuple] = []

    def extend(prefix: tuple, remaining: int, left: int):
        if left == 0:
            if remaining == 0:
                out.append(prefix)
            return
        if remaining < left:
            return
        for i, v in enumerate(values):
            if v <= remaining - (left - 1):
                extend(prefix + (i,), remaining - v, left - 1)

    extend((), total, length)
    return out


@dataclass
class WeightGradedHomology:
    dims: dict[tuple[int, int], int]
    degree_bound: int
    weight_bound: int
    exact_through_weight: int

    def degree_totals(self) -> list[int]:
        return [sum(v for (n, w), v in self.dims.items() if n == k) for k in range(self.degree_bound + 1)]

    def to_json(self) -> dict:
        return {
            "pieces": [{"n": n, "w": w, "dim": d} for (n, w), d in sorted(self.dims.items())],
            "bounds": {"N": self.degree_bound, "W": self.weight_bound},
            "exact_through_weight": self.exact_through_weight,
        }


def weight_graded_cobar_homology(c, N: int, W: int) -> WeightGradedHomology:
    if c.differential:
        raise ValueError("weight grading needs a coalgebra with zero differential")
    letters = Letters(c)
    weights = [d + 1 for d in letters.degree]

    def piece(n, w):
        if n < 0 or w - n < 0:
            return []
        if w == 0:
            return [()] if n == 0 else []
        return weighted_sequences(weights, w, w - n)

    dims = {}
    for w in range(0, W + 1):
        for n in range(0, N + 1):
            mats = []
            for m in (n + 1, n):
                src, dst = piece(m, w), piece(m - 1, w)
                rows = {u: i for i, u in enumerate(dst)}
                entries = {}
                for j, u in enumerate(src):
                    for v, k in letters.differential(u).items():
                        entries[(rows[v], j)] = k
                mats.append(SparseMatrix(len(dst), len(src), entries))
            dims[(n, w)] = homology_at(mats[0], mats[1]).dimension
    exact = W if not c.truncated else min(W, c.degree_cap)
    return WeightGradedHomology(dims, N, W, exact)
