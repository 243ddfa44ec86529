"""Finitely presented associative algebras over Q with bounded Groebner bases.

A noncommutative polynomial is a dict ``{word: Fraction}`` where a word is a
tuple of generator indices and ``()`` is the unit. Monomials are compared by
weighted degree, then length, then lexicographically by generator index.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import IO, Iterable, Mapping, Sequence

from .linalg import Echelon, Q

Word = tuple
Poly = dict


class PolySyntaxError(ValueError):
    pass


# -- polynomial arithmetic ---------------------------------------------------

def poly_add(p: Mapping, q: Mapping, scale=1) -> dict:
    out = dict(p)
    for w, c in q.items():
        x = out.get(w, 0) + scale * c
        if x:
            out[w] = x
        else:
            out.pop(w, None)
    return out


def poly_mul(p: Mapping, q: Mapping) -> dict:
    out: dict = {}
    for u, a in p.items():
        for v, b in q.items():
            w = u + v
            x = out.get(w, 0) + a * b
            if x:
                out[w] = x
            else:
                out.pop(w, None)
    return out


def poly_scale(p: Mapping, k) -> dict:
    k = Q(k)
    return {w: k * c for w, c in p.items()} if k else {}


def one() -> dict:
    return {(): Fraction(1)}


def poly_key(p: Mapping) -> tuple:
    """Hashable canonical form of a polynomial."""
    return tuple(sorted(p.items()))


# -- text and JSON syntax ----------------------------------------------------

def parse_poly(text: str, generators: Sequence[str]) -> dict:
    """Parse ``"2*x.y - 1/2*y + 3"``; words are dot-separated generator names."""
    index = {g: i for i, g in enumerate(generators)}
    pieces = re.split(r"([+-])", text.replace(" ", ""))
    if not text.strip():
        raise PolySyntaxError("empty polynomial")
    out: dict = {}
    sign = 1
    expect_term = True
    for piece in pieces:
        if piece in ("+", "-"):
            sign = sign * (-1 if piece == "-" else 1) if expect_term else (-1 if piece == "-" else 1)
            expect_term = True
            continue
        if not piece:
            continue
        if not expect_term:
            raise PolySyntaxError(f"missing sign before {piece!r}")
        if "*" in piece:
            coef_txt, word_txt = piece.split("*", 1)
        elif re.fullmatch(r"\d+(/\d+)?", piece):
            coef_txt, word_txt = piece, ""
        else:
            coef_txt, word_txt = "1", piece
        try:
            coef = Fraction(coef_txt) * sign
        except (ValueError, ZeroDivisionError) as exc:
            raise PolySyntaxError(f"bad coefficient {coef_txt!r}") from exc
        if word_txt in ("", "1"):
            word: tuple = ()
        else:
            try:
                word = tuple(index[g] for g in word_txt.split("."))
            except KeyError as exc:
                raise PolySyntaxError(f"unknown generator {exc.args[0]!r}") from exc
        out = poly_add(out, {word: coef})
        sign = 1
        expect_term = False
    if expect_term:
        raise PolySyntaxError("polynomial ends with a dangling sign")
    return out


def format_poly(p: Mapping, generators: Sequence[str]) -> str:
    if not p:
        return "0"
    parts = []
    for w in sorted(p, key=lambda w: (len(w), w), reverse=True):
        c = p[w]
        word = ".".join(generators[i] for i in w)
        mag = abs(c)
        if not word:
            body = str(mag)
        elif mag == 1:
            body = word
        else:
            body = f"{mag}*{word}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first = parts[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def poly_to_json(p: Mapping, generators: Sequence[str]) -> list:
    return [[str(p[w]), [generators[i] for i in w]] for w in sorted(p, key=lambda w: (len(w), w))]


def poly_from_json(terms: Iterable, generators: Sequence[str]) -> dict:
    index = {g: i for i, g in enumerate(generators)}
    out: dict = {}
    try:
        for coef, word in terms:
            out = poly_add(out, {tuple(index[g] for g in word): Q(coef)})
    except (KeyError, TypeError, ValueError) as exc:
        raise PolySyntaxError(f"bad JSON polynomial: {exc}") from exc
    return out


# -- the algebra -------------------------------------------------------------

@dataclass(frozen=True)
class FpAlgebra:
    generators: tuple[str, ...]
    relations: tuple[dict, ...]
    groebner_bound: int
    groebner_basis: tuple[dict, ...]
    complete_flag: bool
    weights: tuple[int, ...]

    def weight(self, w: Word) -> int:
        return sum(self.weights[i] for i in w)

    def order_key(self, w: Word) -> tuple:
        return (self.weight(w), len(w), w)

    @cached_property
    def tips(self) -> dict[tuple, dict]:
        return {leading_word(g, self.weights): g for g in self.groebner_basis}

    @cached_property
    def _tip_lengths(self) -> tuple[int, ...]:
        return tuple(sorted({len(t) for t in self.tips}))

    @cached_property
    def homogeneous(self) -> bool:
        return all(len({self.weight(w) for w in r}) <= 1 for r in self.relations)

    def find_tip(self, w: Word) -> tuple[int, tuple] | None:
        tips = self.tips
        for k in self._tip_lengths:
            for i in range(len(w) - k + 1):
                if w[i:i + k] in tips:
                    return i, w[i:i + k]
        return None

    def is_irreducible(self, w: Word) -> bool:
        return self.find_tip(w) is None

    def normal_form(self, p: Mapping) -> dict:
        return _reduce(p, self.tips, self.find_tip, self.weights)

    def mul(self, p: Mapping, q: Mapping) -> dict:
        return self.normal_form(poly_mul(p, q))

    def parse(self, text: str) -> dict:
        return parse_poly(text, self.generators)

    def format(self, p: Mapping) -> str:
        return format_poly(p, self.generators)


def leading_word(p: Mapping, weights: Sequence[int]) -> tuple:
    return max(p, key=lambda w: (sum(weights[i] for i in w), len(w), w))


def _reduce(p: Mapping, tips: Mapping[tuple, dict], find_tip, weights) -> dict:
    def key(w):
        return (sum(weights[i] for i in w), len(w), w)

    p = dict(p)
    done: dict = {}
    while p:
        w = max(p, key=key)
        c = p.pop(w)
        hit = find_tip(w)
        if hit is None:
            done[w] = c
            continue
        i, t = hit
        g = tips[t]
        left, right = w[:i], w[i + len(t):]
        # g is monic with leading word t; subtract c * left*g*right (w cancels)
        for u, a in g.items():
            if u == t:
                continue
            v = left + u + right
            x = p.get(v, 0) - c * a
            if x:
                p[v] = x
            else:
                p.pop(v, None)
    return done


def _monic(p: Mapping, weights) -> dict:
    lead = leading_word(p, weights)
    inv = 1 / p[lead]
    return {w: c * inv for w, c in p.items()}


def _overlaps(u: tuple, v: tuple) -> list[int]:
    """Lengths k with suffix of u of length k equal to prefix of v (proper)."""
    return [k for k in range(1, min(len(u), len(v))) if u[-k:] == v[:k]]


class _Builder:
    def __init__(self, ngens: int, weights: Sequence[int], bound: int, trace: IO | None):
        self.weights = tuple(weights)
        self.bound = bound
        self.basis: dict[tuple, dict] = {}
        self.lengths: list[int] = []
        self.pairs: list[tuple] = []
        self.pending_above = False
        self.trace = trace
        self.ngens = ngens

    def key(self, w):
        return (sum(self.weights[i] for i in w), len(w), w)

    def find_tip(self, w):
        for k in self.lengths:
            for i in range(len(w) - k + 1):
                if w[i:i + k] in self.basis:
                    return i, w[i:i + k]
        return None

    def nf(self, p):
        return _reduce(p, self.basis, self.find_tip, self.weights)

    def log(self, **event):
        if self.trace is not None:
            self.trace.write(json.dumps(event, sort_keys=True) + "\n")

    def add(self, p):
        queue = [p]
        while queue:
            h = self.nf(queue.pop())
            if not h:
                continue
            h = _monic(h, self.weights)
            t = leading_word(h, self.weights)
            # drop elements whose tip is divisible by the new tip
            for old in [u for u in self.basis if _contains(u, t)]:
                queue.append(self.basis.pop(old))
                self.log(event="remove", tip=list(old))
            self.basis[t] = h
            self.lengths = sorted({len(u) for u in self.basis})
            self.log(event="add", tip=list(t), terms=len(h))
            for u in list(self.basis):
                for a, b in ((t, u), (u, t)) if u != t else ((t, t),):
                    for k in _overlaps(a, b):
                        w = a + b[k:]
                        self.pairs.append((self.key(w), a, b, k))

    def run(self):
        while self.pairs:
            self.pairs.sort(key=lambda x: x[0], reverse=True)
            key, a, b, k = self.pairs.pop()
            if key[0] > self.bound:
                self.pending_above = True
                self.log(event="skip", weight=key[0])
                continue
            if a not in self.basis or b not in self.basis:
                continue
            f, g = self.basis[a], self.basis[b]
            s = poly_add(poly_mul(f, {b[k:]: Fraction(1)}), poly_mul({a[:-k]: Fraction(1)}, g), -1)
            h = self.nf(s)
            self.log(event="overlap", word=list(a + b[k:]), reduces_to_zero=not h)
            if h:
                self.add(h)

    def interreduce(self):
        changed = True
        while changed:
            changed = False
            for t in list(self.basis):
                g = self.basis.pop(t)
                self.lengths = sorted({len(u) for u in self.basis})
                tail = self.nf({w: c for w, c in g.items() if w != t})
                new = poly_add(tail, {t: Fraction(1)})
                if self.find_tip(t) is not None:
                    # tip became reducible; should not happen after add()
                    changed = True
                    self.add(new)
                    continue
                self.basis[t] = new
                self.lengths = sorted({len(u) for u in self.basis})


def _contains(w: tuple, t: tuple) -> bool:
    k = len(t)
    return any(w[i:i + k] == t for i in range(len(w) - k + 1))


def groebner(
    generators: Sequence[str],
    relations: Iterable[Mapping],
    bound: int,
    weights: Sequence[int] | None = None,
    trace: IO | None = None,
) -> FpAlgebra:
    """Buchberger-style completion keeping every overlap of weighted degree <= bound.

    ``complete_flag`` is False when some overlap above the bound was skipped,
    in which case normal forms are only guaranteed canonical below the bound.
    ``trace`` receives one JSON object per line (additions, overlaps, skips).
    """
    generators = tuple(generators)
    weights = tuple(weights) if weights is not None else (1,) * len(generators)
    if len(weights) != len(generators) or any(w < 1 for w in weights):
        raise ValueError("weights must be positive, one per generator")
    rels = tuple({tuple(w): Q(c) for w, c in r.items() if Q(c)} for r in relations)
    rels = tuple(r for r in rels if r)
    b = _Builder(len(generators), weights, bound, trace)
    for r in rels:
        b.add(r)
    b.run()
    b.interreduce()
    basis = tuple(b.basis[t] for t in sorted(b.basis, key=b.key))
    return FpAlgebra(generators, rels, bound, basis, not b.pending_above, weights)


def normal_form(a: FpAlgebra, p: Mapping) -> dict:
    return a.normal_form(p)


# -- dimension ---------------------------------------------------------------

@dataclass
class DimensionReport:
    counts: list[int]
    total: int
    finite: bool

    @property
    def verdict(self) -> str:
        return f"finite({self.total})" if self.finite else f"at-least({self.total})"


def irreducible_words(a: FpAlgebra, through: int) -> list[tuple]:
    """Irreducible words of weighted degree <= through, in monomial order."""
    out = [()]
    frontier = [()]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(len(a.generators)):
                v = w + (i,)
                if a.weight(v) > through:
                    continue
                # only suffixes can contain a new tip
                if any(v[j:] in a.tips for j in range(len(v))):
                    continue
                nxt.append(v)
        out.extend(nxt)
        frontier = nxt
    return sorted(out, key=a.order_key)


def dimension(a: FpAlgebra, through: int | None = None) -> DimensionReport:
    """Irreducible-word counts per weighted degree 0..through."""
    d = a.groebner_bound if through is None else through
    counts = [0] * (d + 1)
    for w in irreducible_words(a, d):
        counts[a.weight(w)] += 1
    total = sum(counts)
    # maxw consecutive empty degrees force every heavier word to be reducible
    window = max(a.weights, default=1)
    vanished = not a.generators or any(
        all(counts[j] == 0 for j in range(k, k + window)) for k in range(1, d - window + 2)
    )
    finite = a.complete_flag and vanished
    return DimensionReport(counts, total, finite)


def basis_words(a: FpAlgebra, through: int | None = None) -> list[tuple]:
    return irreducible_words(a, a.groebner_bound if through is None else through)


# -- bialgebra structure in degree zero --------------------------------------

def coproduct_of_generator(i: int) -> dict:
    """x -> x (x) 1 + 1 (x) x + x (x) x, as {(left_word, right_word): coef}."""
    return {((i,), ()): Fraction(1), ((), (i,)): Fraction(1), ((i,), (i,)): Fraction(1)}


def tensor_mul(p: Mapping, q: Mapping) -> dict:
    out: dict = {}
    for (a1, a2), x in p.items():
        for (b1, b2), y in q.items():
            k = (a1 + b1, a2 + b2)
            v = out.get(k, 0) + x * y
            if v:
                out[k] = v
            else:
                out.pop(k, None)
    return out


def coproduct(p: Mapping) -> dict:
    """Multiplicative extension of the generator coproduct to a polynomial."""
    out: dict = {}
    for w, c in p.items():
        t = {((), ()): Fraction(c)}
        for i in w:
            t = tensor_mul(t, coproduct_of_generator(i))
        for k, v in t.items():
            x = out.get(k, 0) + v
            if x:
                out[k] = x
            else:
                out.pop(k, None)
    return out


def tensor_normal_form(a: FpAlgebra, t: Mapping) -> dict:
    """(NF (x) NF) applied to an element of A (x) A."""
    # group by left word, reduce right factors, then reduce the left factors
    by_left: dict = {}
    for (u, v), c in t.items():
        by_left.setdefault(u, {})
        by_left[u] = poly_add(by_left[u], {v: c})
    stage: dict = {}
    for u, right in by_left.items():
        for v, c in a.normal_form(right).items():
            stage.setdefault(v, {})
            stage[v] = poly_add(stage[v], {u: c})
    out: dict = {}
    for v, left in stage.items():
        for u, c in a.normal_form(left).items():
            out[(u, v)] = c
    return out


def counit(a: FpAlgebra, p: Mapping) -> Fraction:
    return a.normal_form(p).get((), Fraction(0))


def is_grouplike(a: FpAlgebra, p: Mapping) -> bool:
    g = a.normal_form(p)
    lhs = tensor_normal_form(a, coproduct(g))
    rhs = tensor_normal_form(a, {(u, v): x * y for u, x in g.items() for v, y in g.items()})
    return lhs == rhs and counit(a, g) == 1


def coideal_violations(a: FpAlgebra) -> list[int]:
    """Indices of relations r with coproduct(r) outside I (x) A + A (x) I, or counit(r) != 0."""
    bad = []
    for k, r in enumerate(a.relations):
        if tensor_normal_form(a, coproduct(r)) or r.get((), 0):
            bad.append(k)
    return bad


@dataclass
class GroupLikeClosure:
    elements: list[dict]
    table: list[list[int]] | None
    kind: str  # "group" | "monoid" | "unbounded"
    verified: bool
    inverses: dict[int, int] = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def verdict(self) -> str:
        if self.kind == "unbounded":
            return "unbounded"
        return f"{self.kind}({self.size})"


def grouplike_closure(a: FpAlgebra, seeds: Iterable[Mapping] | None = None, step_bound: int = 64) -> GroupLikeClosure:
    """Close {1} and the seeds (default: 1 + x for every generator) under multiplication.

    ``verified`` means the seeds are group-like and the relations generate a
    coideal, which makes every product of seeds group-like as well.
    """
    if seeds is None:
        seeds = [poly_add(one(), {(i,): Fraction(1)}) for i in range(len(a.generators))]
    elements: list[dict] = []
    index: dict[tuple, int] = {}

    def intern(p) -> int | None:
        k = poly_key(p)
        if k not in index:
            if len(elements) >= step_bound:
                return None
            index[k] = len(elements)
            elements.append(p)
        return index[k]

    unit = intern(a.normal_form(one()))
    seed_ids = []
    unbounded = False
    for s in seeds:
        k = intern(a.normal_form(s))
        if k is None:
            unbounded = True
        elif k not in seed_ids:
            seed_ids.append(k)
    # breadth-first over words in the seeds; this reaches the generated monoid
    # while keeping degrees growing linearly
    frontier = [unit]
    seen = {unit}
    while frontier and not unbounded:
        nxt = []
        for i in frontier:
            for s in seed_ids:
                k = intern(a.mul(elements[i], elements[s]))
                if k is None:
                    unbounded = True
                    break
                if k not in seen:
                    seen.add(k)
                    nxt.append(k)
            if unbounded:
                break
        frontier = nxt
    # products of group-likes are group-like once the relations form a coideal
    verified = not coideal_violations(a) and all(is_grouplike(a, elements[k]) for k in seed_ids)
    if unbounded:
        return GroupLikeClosure(elements, None, "unbounded", verified)
    table = [[index[poly_key(a.mul(x, y))] for y in elements] for x in elements]
    unit = index[poly_key(a.normal_form(one()))]
    inverses = {}
    for i in range(len(elements)):
        for j in range(len(elements)):
            if table[i][j] == unit and table[j][i] == unit:
                inverses[i] = j
                break
    kind = "group" if len(inverses) == len(elements) else "monoid"
    return GroupLikeClosure(elements, table, kind, verified, inverses)


# -- maps between presented algebras -----------------------------------------

@dataclass
class MapVerdict:
    well_defined: bool
    violating_relation: int | None
    surjective: bool
    injective: bool
    exact: bool  # both sides finite-dimensional and complete, so the answer is certain
    src_dims: list[int]
    dst_dims: list[int]
    matrix: list[list[Fraction]] | None = None
    bound: int = 0

    @property
    def iso(self) -> bool:
        return self.well_defined and self.surjective and self.injective


def substitute(a_dst: FpAlgebra, images: Sequence[Mapping], p: Mapping) -> dict:
    out: dict = {}
    for w, c in p.items():
        term = {(): Fraction(c)}
        for i in w:
            term = a_dst.mul(term, images[i])
        out = poly_add(out, term)
    return a_dst.normal_form(out)


def map_check(src: FpAlgebra, dst: FpAlgebra, images: Sequence[Mapping], bound: int | None = None) -> MapVerdict:
    """Is generator i -> images[i] a well-defined, injective, surjective map src -> dst?

    When both algebras are finite-dimensional with complete bases the verdict
    is exact; otherwise injectivity and surjectivity are checked on the
    irreducible words of degree <= bound on each side.
    """
    if len(images) != len(src.generators):
        raise ValueError("one image per source generator is required")
    images = [dst.normal_form(p) for p in images]
    d = min(src.groebner_bound, dst.groebner_bound) if bound is None else bound
    for k, r in enumerate(src.relations):
        if substitute(dst, images, r):
            return MapVerdict(False, k, False, False, True, [], [], None, d)
    ds, dt = dimension(src, d), dimension(dst, d)
    exact = ds.finite and dt.finite
    src_words = basis_words(src, d)
    dst_words = basis_words(dst, d)
    dst_index = {w: i for i, w in enumerate(dst_words)}
    ech = Echelon()
    columns = []
    inj = True
    outside = False
    extra: dict[tuple, int] = {}
    for w in src_words:
        img = substitute(dst, images, {w: Fraction(1)})
        vec = {}
        for u, c in img.items():
            if u not in dst_index:
                outside = True
                extra.setdefault(u, len(dst_words) + len(extra))
            vec[dst_index.get(u, extra.get(u))] = c
        columns.append(img)
        if not ech.add(vec):
            inj = False
    surj = all(ech.contains({dst_index[w]: Fraction(1)}) for w in dst_words)
    if outside and exact:
        raise AssertionError("image word outside a finite basis")
    matrix = None
    if exact:
        matrix = [[col.get(w, Fraction(0)) for col in columns] for w in dst_words]
    return MapVerdict(True, None, surj, inj, exact, ds.counts, dt.counts, matrix, d)
