"""Exact sparse linear algebra over the rationals.

Vectors are plain dicts ``{index: Fraction}`` with no stored zeros. Every
routine here is deterministic and never touches floating point.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from functools import cached_property
from typing import Iterable, Mapping, Sequence

Rational = Fraction
SparseVector = dict  # dict[int, Fraction]


def Q(value) -> Fraction:
    """Coerce ints, strings like ``"3/4"`` and Fractions to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floating point coefficients are not accepted")
    return Fraction(value)


def vec_add(u: Mapping[int, Fraction], v: Mapping[int, Fraction], scale=1) -> dict:
    out = dict(u)
    for k, c in v.items():
        x = out.get(k, 0) + scale * c
        if x:
            out[k] = x
        else:
            out.pop(k, None)
    return out


def _norm(x):
    # integral Fractions become ints so the common case stays in fast int arithmetic
    if type(x) is Fraction and x.denominator == 1:
        return x.numerator
    return x


def _inv(x):
    if x == 1 or x == -1:
        return int(x)
    return 1 / Fraction(x)


def _axpy(target: dict, v: Mapping, scale) -> None:
    # target += scale * v, in place
    for k, c in v.items():
        x = target.get(k, 0) + scale * c
        if x:
            target[k] = _norm(x)
        else:
            del target[k]


class SparseMatrix:
    """An immutable rows x cols matrix with rational entries."""

    __slots__ = ("rows", "cols", "_entries", "_columns")

    def __init__(self, rows: int, cols: int, entries: Mapping[tuple[int, int], object] | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix shape must be nonnegative")
        self.rows = rows
        self.cols = cols
        clean: dict[tuple[int, int], Fraction] = {}
        for (r, c), v in (entries or {}).items():
            if not (0 <= r < rows and 0 <= c < cols):
                raise IndexError(f"entry ({r}, {c}) outside {rows}x{cols}")
            v = Q(v)
            if v:
                clean[(r, c)] = v
        self._entries = clean
        self._columns = None

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[object]], cols: int | None = None) -> "SparseMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if rows else (cols or 0)
        return cls(nrows, ncols, {(i, j): v for i, row in enumerate(rows) for j, v in enumerate(row) if v})

    @classmethod
    def from_columns(cls, rows: int, columns: Sequence[Mapping[int, object]]) -> "SparseMatrix":
        return cls(rows, len(columns), {(r, j): v for j, col in enumerate(columns) for r, v in col.items()})

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @classmethod
    def zero(cls, rows: int, cols: int) -> "SparseMatrix":
        return cls(rows, cols)

    @property
    def entries(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._entries)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        return self._entries.get(key, Fraction(0))

    def nnz(self) -> int:
        return len(self._entries)

    def is_zero(self) -> bool:
        return not self._entries

    def column(self, j: int) -> dict[int, Fraction]:
        if self._columns is None:
            cols: list[dict[int, Fraction]] = [dict() for _ in range(self.cols)]
            for (r, c), v in self._entries.items():
                cols[c][r] = v
            self._columns = cols
        return dict(self._columns[j])

    def row_dicts(self) -> list[dict[int, Fraction]]:
        out: list[dict[int, Fraction]] = [dict() for _ in range(self.rows)]
        for (r, c), v in self._entries.items():
            out[r][c] = v
        return out

    def to_dense(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (r, c), v in self._entries.items():
            out[r][c] = v
        return out

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.cols, self.rows, {(c, r): v for (r, c), v in self._entries.items()})

    def apply(self, v: Mapping[int, Fraction]) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for j, a in v.items():
            if a:
                _axpy(out, self.column(j), a)
        return out

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        entries: dict[tuple[int, int], Fraction] = {}
        for j in range(other.cols):
            for r, v in self.apply(other.column(j)).items():
                entries[(r, j)] = v
        return SparseMatrix(self.rows, other.cols, entries)

    def __mul__(self, scalar) -> "SparseMatrix":
        s = Q(scalar)
        return SparseMatrix(self.rows, self.cols, {k: s * v for k, v in self._entries.items()})

    __rmul__ = __mul__

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        e = dict(self._entries)
        for k, v in other._entries.items():
            e[k] = e.get(k, 0) + v
        return SparseMatrix(self.rows, self.cols, e)

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self + (-1) * other

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self):
        return hash((self.rows, self.cols, frozenset(self._entries.items())))

    def __repr__(self) -> str:
        return f"SparseMatrix({self.rows}x{self.cols}, nnz={len(self._entries)})"


def rref(m: SparseMatrix) -> tuple[SparseMatrix, list[int], int]:
    """Reduced row echelon form, pivot columns and rank.

    Pivots are taken leftmost column first, lowest row index first; since the
    reduced echelon form is unique the result does not depend on the order in
    which rows are absorbed.
    """
    pivot_rows: dict[int, dict[int, Fraction]] = {}
    for row in m.row_dicts():
        row = {c: _norm(v) for c, v in row.items()}
        for col in sorted(c for c in row if c in pivot_rows):
            a = row.get(col)
            if a:
                _axpy(row, pivot_rows[col], -a)
        if not row:
            continue
        lead = min(row)
        inv = _inv(row[lead])
        row = {c: _norm(v * inv) for c, v in row.items()}
        for other in pivot_rows.values():
            a = other.get(lead)
            if a:
                _axpy(other, row, -a)
        pivot_rows[lead] = row
    pivots = sorted(pivot_rows)
    entries = {(i, c): v for i, p in enumerate(pivots) for c, v in pivot_rows[p].items()}
    return SparseMatrix(m.rows, m.cols, entries), pivots, len(pivots)


def rank(m: SparseMatrix) -> int:
    ech = Echelon()
    for row in m.row_dicts():
        ech.add(row)
    return ech.rank


def kernel_basis(m: SparseMatrix) -> list[dict[int, Fraction]]:
    """Basis of the null space, one vector per free column (in column order)."""
    r, pivots, _ = rref(m)
    rows = r.row_dicts()
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = {free: Fraction(1)}
        for i, p in enumerate(pivots):
            a = rows[i].get(free)
            if a:
                v[p] = -a
        basis.append(v)
    return basis


class Echelon:
    """Incrementally built row echelon form keyed by leading index.

    Rows are kept as primitive integer vectors (fraction free), which keeps
    the arithmetic in machine-friendly ints for the integral matrices that
    dominate here. With ``track=True`` every stored row remembers which
    integer combination of the inserted vectors produced it, so membership
    queries return coordinates.
    """

    def __init__(self, track: bool = False):
        self.track = track
        self._rows: dict[int, tuple[dict, dict | None]] = {}
        self._count = 0

    @property
    def rank(self) -> int:
        return len(self._rows)

    def _reduce(self, v: Mapping, combo: dict | None):
        # invariant: v == scale * input + sum(combo[k] * inserted[k])
        den = 1
        for c in v.values():
            if type(c) is Fraction:
                den = den * c.denominator // gcd(den, c.denominator)
        v = {k: int(c * den) for k, c in v.items() if c}
        scale = den
        while v:
            lead = min(v)
            hit = self._rows.get(lead)
            if hit is None:
                break
            row, rc = hit
            a, b = v[lead], row[lead]
            g = gcd(a, b)
            a, b = a // g, b // g
            for k in v:
                v[k] *= b
            for k, c in row.items():
                x = v.get(k, 0) - a * c
                if x:
                    v[k] = x
                else:
                    del v[k]
            scale *= b
            if combo is not None:
                for k in combo:
                    combo[k] *= b
                for k, c in rc.items():
                    x = combo.get(k, 0) - a * c
                    if x:
                        combo[k] = x
                    else:
                        del combo[k]
            g = _content(v.values(), scale)
            if combo is not None:
                g = _content(combo.values(), g)
            if g > 1:
                v = {k: c // g for k, c in v.items()}
                scale //= g
                if combo is not None:
                    combo = {k: c // g for k, c in combo.items()}
        return v, combo, scale

    def add(self, v: Mapping) -> bool:
        """Insert ``v``; return True when it was independent of earlier rows."""
        idx = self._count
        self._count += 1
        combo = {} if self.track else None
        rem, combo, scale = self._reduce(v, combo)
        if not rem:
            return False
        if combo is not None:
            combo[idx] = combo.get(idx, 0) + scale
        g = _content(rem.values(), 0)
        if combo is not None:
            g = _content(combo.values(), g)
        if g > 1:
            rem = {k: c // g for k, c in rem.items()}
            if combo is not None:
                combo = {k: c // g for k, c in combo.items()}
        self._rows[min(rem)] = (rem, combo)
        return True

    def contains(self, v: Mapping) -> bool:
        rem, _, _ = self._reduce(v, None)
        return not rem

    def coordinates(self, v: Mapping) -> dict[int, Fraction] | None:
        """Express ``v`` in terms of the inserted vectors, or None if outside the span."""
        if not self.track:
            raise RuntimeError("coordinates need track=True")
        rem, combo, scale = self._reduce(v, {})
        if rem:
            return None
        return {k: Fraction(-c, scale) for k, c in combo.items() if c}


def _content(values, g: int) -> int:
    for c in values:
        g = gcd(g, c)
        if g == 1:
            return 1
    return abs(g)


@dataclass(frozen=True)
class SubquotientBasis:
    """ker(d_out) / im(d_in) together with chosen cycle representatives."""

    ambient_dim: int
    cycle_basis: list = field(repr=False)
    boundary_basis: list = field(repr=False)
    representatives: list = field(repr=False)

    @property
    def dimension(self) -> int:
        return len(self.representatives)

    @cached_property
    def _solver(self) -> Echelon:
        ech = Echelon(track=True)
        for b in self.boundary_basis:
            ech.add(b)
        for r in self.representatives:
            ech.add(r)
        return ech

    @cached_property
    def _cycles(self) -> Echelon:
        ech = Echelon()
        for z in self.cycle_basis:
            ech.add(z)
        return ech

    def is_cycle(self, v: Mapping) -> bool:
        return self._cycles.contains(v)

    @cached_property
    def _boundaries(self) -> Echelon:
        ech = Echelon()
        for b in self.boundary_basis:
            ech.add(b)
        return ech

    def is_boundary(self, v: Mapping) -> bool:
        return self._boundaries.contains(v)

    def coordinates(self, v: Mapping) -> dict[int, Fraction]:
        """Homology class of the cycle ``v`` in the representative basis."""
        combo = self._solver.coordinates(v)
        if combo is None:
            raise ValueError("vector is not a cycle")
        nb = len(self.boundary_basis)
        return {k - nb: c for k, c in combo.items() if k >= nb}


def homology_at(d_in: SparseMatrix, d_out: SparseMatrix) -> SubquotientBasis:
    """Homology ker(d_out) / im(d_in) at the middle term of C' -> C -> C''."""
    if d_in.rows != d_out.cols:
        raise ValueError(f"incompatible shapes: d_in {d_in.shape}, d_out {d_out.shape}")
    if not (d_out @ d_in).is_zero():
        raise ValueError("d_out o d_in != 0; the differential is broken upstream")
    n = d_out.cols
    cycles = kernel_basis(d_out) if d_out.rows else [{i: Fraction(1)} for i in range(n)]
    ech = Echelon()
    boundaries = []
    for j in range(d_in.cols):
        col = d_in.column(j)
        if col and ech.add(col):
            boundaries.append(col)
    reps = [z for z in cycles if ech.add(z)]
    return SubquotientBasis(n, cycles, boundaries, reps)


def induced_map_on_homology(f: SparseMatrix, src: SubquotientBasis, dst: SubquotientBasis) -> SparseMatrix:
    """Matrix of H(f): H(src) -> H(dst) in the representative bases."""
    if f.cols != src.ambient_dim or f.rows != dst.ambient_dim:
        raise ValueError("map shape does not match the subquotients")
    for b in src.boundary_basis:
        if not dst.is_boundary(f.apply(b)):
            raise ValueError("map does not send boundaries to boundaries")
    columns = []
    for r in src.representatives:
        image = f.apply(r)
        if not dst.is_cycle(image):
            raise ValueError("map does not send cycles to cycles")
        columns.append(dst.coordinates(image))
    return SparseMatrix.from_columns(dst.dimension, columns)


def solve(m: SparseMatrix, b: Mapping[int, Fraction]) -> dict[int, Fraction] | None:
    """One solution x of m x = b, or None when the system is inconsistent."""
    ech = Echelon(track=True)
    for j in range(m.cols):
        ech.add(m.column(j))
    return ech.coordinates(b)


def inverse(m: SparseMatrix) -> SparseMatrix:
    if m.rows != m.cols:
        raise ValueError("only square matrices are invertible")
    n = m.rows
    columns = []
    for i in range(n):
        x = solve(m, {i: Fraction(1)})
        if x is None:
            raise ValueError("matrix is singular")
        columns.append(x)
    return SparseMatrix.from_columns(n, columns)


def is_invertible(m: SparseMatrix) -> bool:
    return m.rows == m.cols and rank(m) == m.rows


def span_basis(vectors: Iterable[Mapping]) -> list[dict]:
    """The vectors that are independent of their predecessors, in order."""
    ech = Echelon()
    return [dict(v) for v in vectors if ech.add(v)]
