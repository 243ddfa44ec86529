"""The cobar construction on a connected dg coalgebra, truncated.

Letters are the desuspended basis elements of the coaugmentation ideal; a
letter coming from x in C_n has degree n - 1. On a letter the differential is

    D[x] = -[dx] + sum (-1)^{|x'|} [x'][x'']

over the reduced coproduct terms x' (x) x'', and it extends to words as a
derivation: D(ab) = D(a) b + (-1)^{|a|} a D(b).

Word length never decreases under D, so words with more than L letters span a
subcomplex; a truncation keeps the quotient by it, which is an honest chain
complex. In degrees where every relevant word is short enough the quotient
computes the true homology, and those degrees are flagged exact.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Mapping

from . import ncgroebner as nc
from .coalgebra import DgCoalgebra
from .linalg import SparseMatrix

Word = tuple  # tuple of letter indices


@dataclass(frozen=True)
class CobarWord:
    letters: tuple[str, ...]
    degree: int

    def __str__(self) -> str:
        return "[" + "|".join(self.letters) + "]" if self.letters else "1"


class Letters:
    """Letter bookkeeping for the cobar construction on ``c``."""

    def __init__(self, c: DgCoalgebra):
        self.coalgebra = c
        self.names = c.names
        self.index = {x: i for i, x in enumerate(self.names)}
        self.degree = tuple(c.degree[x] - 1 for x in self.names)

    def word_degree(self, w: Word) -> int:
        return sum(self.degree[i] for i in w)

    def word(self, w: Word) -> CobarWord:
        return CobarWord(tuple(self.names[i] for i in w), self.word_degree(w))

    @cached_property
    def letter_differential(self) -> tuple[dict, ...]:
        c = self.coalgebra
        out = []
        for x in self.names:
            d: dict = {}
            for y, k in c.differential.get(x, {}).items():
                d[(self.index[y],)] = d.get((self.index[y],), 0) - k
            for k, a, b in c.coproduct.get(x, ()):
                sign = -1 if c.degree[a] % 2 else 1
                w = (self.index[a], self.index[b])
                d[w] = d.get(w, 0) + sign * k
            out.append({w: v for w, v in d.items() if v})
        return tuple(out)

    def differential(self, w: Word) -> dict:
        """D applied to a single word."""
        out: dict = {}
        prefix_degree = 0
        for pos, i in enumerate(w):
            sign = -1 if prefix_degree % 2 else 1
            left, right = w[:pos], w[pos + 1:]
            for u, k in self.letter_differential[i].items():
                v = left + u + right
                x = out.get(v, 0) + sign * k
                if x:
                    out[v] = x
                else:
                    out.pop(v, None)
            prefix_degree += self.degree[i]
        return out

    def apply(self, p: Mapping) -> dict:
        out: dict = {}
        for w, k in p.items():
            for v, m in self.differential(w).items():
                x = out.get(v, 0) + k * m
                if x:
                    out[v] = x
                else:
                    out.pop(v, None)
        return out


def _count_words(letter_degrees: list[int], n: int, max_len: int) -> int:
    # ways[d][k] = number of words of degree d and length k
    by_deg: dict[int, int] = {}
    for d in letter_degrees:
        by_deg[d] = by_deg.get(d, 0) + 1
    ways = [[0] * (max_len + 1) for _ in range(n + 1)]
    ways[0][0] = 1
    for k in range(1, max_len + 1):
        for d in range(n + 1):
            ways[d][k] = sum(cnt * ways[d - ld][k - 1] for ld, cnt in by_deg.items() if ld <= d)
    return sum(ways[n][k] for k in range(max_len + 1))


def _enumerate_words(letters: Letters, n: int, max_len: int) -> list[Word]:
    by_deg = [i for i in range(len(letters.names)) if letters.degree[i] <= n]
    out: list[Word] = []

    def extend(prefix: tuple, remaining: int, length: int):
        if length == 0:
            if remaining == 0:
                out.append(prefix)
            return
        for i in by_deg:
            d = letters.degree[i]
            if d > remaining:
                continue
            # the remaining letters have degree >= 0, so any prefix is viable
            extend(prefix + (i,), remaining - d, length - 1)

    for length in range(max_len + 1):
        extend((), n, length)
    return out


@dataclass(frozen=True)
class CobarTruncation:
    source: DgCoalgebra
    degree_bound: int
    wordlength_bound: int
    letters: Letters = field(repr=False)
    basis: Mapping[int, tuple[Word, ...]] = field(repr=False)
    # differential[n]: degree n -> degree n - 1, for n = 1 .. N + 1
    differential: Mapping[int, SparseMatrix] = field(repr=False)
    exact: Mapping[int, bool]
    over_budget: frozenset = frozenset()

    def words(self, n: int) -> list[CobarWord]:
        return [self.letters.word(w) for w in self.basis.get(n, ())]

    def index(self, n: int) -> dict[Word, int]:
        return {w: i for i, w in enumerate(self.basis.get(n, ()))}

    def matrix(self, n: int) -> SparseMatrix:
        """D from degree n to degree n - 1 (0 x dim for n = 0)."""
        if n == 0:
            return SparseMatrix(0, len(self.basis.get(0, ())))
        return self.differential[n]


def cobar(c: DgCoalgebra, N: int, L: int, max_basis: int | None = None) -> CobarTruncation:
    """Truncate the cobar construction to degrees <= N and words of <= L letters.

    Degrees whose word count exceeds ``max_basis`` are left out (and marked
    over budget) instead of being enumerated.
    """
    if N < 0 or L < 1:
        raise ValueError("need N >= 0 and L >= 1")
    letters = Letters(c)
    degs = list(letters.degree)
    basis: dict[int, tuple[Word, ...]] = {}
    over: set[int] = set()
    for n in range(N + 2):
        if max_basis is not None and _count_words(degs, n, L) > max_basis:
            over.add(n)
            continue
        basis[n] = tuple(_enumerate_words(letters, n, L))
    differential: dict[int, SparseMatrix] = {}
    for n in range(1, N + 2):
        if n in over or n - 1 in over:
            continue
        rows = {w: i for i, w in enumerate(basis[n - 1])}
        entries = {}
        for j, w in enumerate(basis[n]):
            for v, k in letters.differential(w).items():
                if len(v) <= L:
                    entries[(rows[v], j)] = k
        differential[n] = SparseMatrix(len(rows), len(basis[n]), entries)
    exact = {n: truncation_exact(c, n, L) and n not in over and n + 1 not in over for n in range(N + 1)}
    return CobarTruncation(c, N, L, letters, basis, differential, exact, frozenset(over))


def truncation_exact(c: DgCoalgebra, n: int, L: int) -> bool:
    """Does the word-length quotient compute H_n of the full cobar construction?"""
    if not c.is_simply_connected():
        return False
    if c.truncated and c.degree_cap < n + 2:
        return False
    return L >= n


@dataclass
class DSquaredReport:
    ok: bool
    checked: int
    failure: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def check_d_squared(t: CobarTruncation) -> DSquaredReport:
    """D(D(w)) = 0 for every basis word, computed without truncation."""
    checked = 0
    for n in sorted(t.basis):
        for w in t.basis[n]:
            dd = t.letters.apply(t.letters.differential(w))
            checked += 1
            if dd:
                return DSquaredReport(False, checked, f"D^2 {t.letters.word(w)} != 0")
    for n in range(2, t.degree_bound + 2):
        if n in t.differential and n - 1 in t.differential:
            if not (t.differential[n - 1] @ t.differential[n]).is_zero():
                return DSquaredReport(False, checked, f"truncated D^2 != 0 from degree {n}")
    return DSquaredReport(True, checked)


# -- degree zero ---------------------------------------------------------------

@dataclass(frozen=True)
class H0Presentation:
    generators: tuple[str, ...]
    relations: tuple[dict, ...]
    relation_sources: tuple[str, ...]

    def algebra(self, bound: int = 8, trace=None) -> nc.FpAlgebra:
        return nc.groebner(self.generators, self.relations, bound, trace=trace)

    def to_text(self) -> str:
        gens = ", ".join(self.generators) or "(none)"
        rels = [nc.format_poly(r, self.generators) for r in self.relations]
        return f"generators: [{gens}]; relations: [{', '.join(rels)}]"

    def to_json(self) -> dict:
        return {
            "generators": list(self.generators),
            "relations": [nc.poly_to_json(r, self.generators) for r in self.relations],
            "relation_sources": list(self.relation_sources),
        }


def h0_presentation(c: DgCoalgebra) -> H0Presentation:
    """Generators = degree-1 basis, relations = D of each degree-2 letter."""
    if c.truncated and c.degree_cap < 2:
        raise ValueError("degree_cap < 2 on a truncated coalgebra: H0 would look free but relations are missing")
    letters = Letters(c)
    gens = c.of_degree(1)
    local = {letters.index[x]: i for i, x in enumerate(gens)}
    for x in gens:
        if letters.letter_differential[letters.index[x]]:
            raise ValueError(f"D does not vanish on the degree-0 letter {x}")
    relations = []
    for z in c.of_degree(2):
        d = letters.letter_differential[letters.index[z]]
        rel = {tuple(local[i] for i in w): k for w, k in d.items()}
        relations.append(rel)
    return H0Presentation(tuple(gens), tuple(relations), tuple(c.of_degree(2)))


@dataclass(frozen=True)
class Degree0Coproduct:
    """x -> x (x) 1 + 1 (x) x + x (x) x on each generator, extended multiplicatively."""

    generators: tuple[str, ...]

    def of_generator(self, i: int) -> dict:
        return nc.coproduct_of_generator(i)

    def of_poly(self, p: Mapping) -> dict:
        return nc.coproduct(p)

    def descends(self, a: nc.FpAlgebra) -> bool:
        return not nc.coideal_violations(a)

    def is_coassociative(self) -> bool:
        for i in range(len(self.generators)):
            t = self.of_generator(i)
            left: dict = {}
            right: dict = {}
            for (u, v), k in t.items():
                for (u1, u2), m in nc.coproduct({u: Fraction(1)}).items():
                    left[(u1, u2, v)] = left.get((u1, u2, v), 0) + k * m
                for (v1, v2), m in nc.coproduct({v: Fraction(1)}).items():
                    right[(u, v1, v2)] = right.get((u, v1, v2), 0) + k * m
            if {k: x for k, x in left.items() if x} != {k: x for k, x in right.items() if x}:
                return False
        return True


def degree0_coproduct(p: H0Presentation) -> Degree0Coproduct:
    return Degree0Coproduct(p.generators)
