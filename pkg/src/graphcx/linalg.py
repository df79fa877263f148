"""Exact sparse linear algebra over Q.

Rank uses fraction-free integer elimination on sparse rows with a
Markowitz-style pivot choice (sparsest row, then sparsest column in it) and
gcd normalization of every updated row.  Rational inputs are cleared of
denominators row by row first.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Hashable, Iterable, Mapping, Sequence

Number = int | Fraction


@dataclass
class SparseMatQ:
    rows: int
    cols: int
    entries: dict[tuple[int, int], Number] = field(default_factory=dict)

    def __post_init__(self):
        self.entries = {rc: v for rc, v in self.entries.items() if v != 0}
        for r, c in self.entries:
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise IndexError((r, c))

    @staticmethod
    def from_columns(columns: Sequence[Mapping[Hashable, Number]], row_index: Mapping[Hashable, int]) -> "SparseMatQ":
        ent = {}
        for c, col in enumerate(columns):
            for key, v in col.items():
                if v:
                    ent[(row_index[key], c)] = v
        return SparseMatQ(len(row_index), len(columns), ent)

    def row_dicts(self) -> list[dict[int, Number]]:
        out: list[dict[int, Number]] = [dict() for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def col_dicts(self) -> list[dict[int, Number]]:
        out: list[dict[int, Number]] = [dict() for _ in range(self.cols)]
        for (r, c), v in self.entries.items():
            out[c][r] = v
        return out

    def to_dense(self) -> list[list[Number]]:
        m = [[0] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            m[r][c] = v
        return m

    def matmul(self, other: "SparseMatQ") -> "SparseMatQ":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        by_row: dict[int, list[tuple[int, Number]]] = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, []).append((c, v))
        ent: dict[tuple[int, int], Number] = {}
        for (r, k), v in self.entries.items():
            for c, w in by_row.get(k, ()):
                ent[(r, c)] = ent.get((r, c), 0) + v * w
        return SparseMatQ(self.rows, other.cols, ent)

    def is_zero(self) -> bool:
        return not self.entries


def _integral(row: Mapping[int, Number]) -> dict[int, int]:
    den = 1
    for v in row.values():
        if isinstance(v, Fraction):
            den = den * v.denominator // gcd(den, v.denominator)
    out = {c: int(v * den) for c, v in row.items() if v}
    g = 0
    for v in out.values():
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        out = {c: v // g for c, v in out.items()}
    return out


def rank_rows(rows: Iterable[Mapping[int, Number]]) -> int:
    """Rank of the matrix whose rows are the given sparse dicts."""
    active: dict[int, dict[int, int]] = {}
    col_rows: dict[int, set[int]] = {}
    for i, r in enumerate(rows):
        ir = _integral(r)
        if ir:
            active[i] = ir
            for c in ir:
                col_rows.setdefault(c, set()).add(i)
    rank = 0
    while active:
        # sparsest row, ties by index for determinism
        pr = min(active, key=lambda i: (len(active[i]), i))
        prow = active.pop(pr)
        for c in prow:
            col_rows[c].discard(pr)
        pc = min(prow, key=lambda c: (len(col_rows[c]), c))
        pv = prow[pc]
        rank += 1
        for i in sorted(col_rows[pc]):
            row = active[i]
            a = row[pc]
            g = gcd(a, pv)
            fa, fp = pv // g, a // g
            new = {}
            for c, v in row.items():
                new[c] = v * fa
            for c, v in prow.items():
                new[c] = new.get(c, 0) - v * fp
            new = {c: v for c, v in new.items() if v}
            for c in row:
                if c not in new:
                    col_rows[c].discard(i)
            for c in new:
                if c not in row:
                    col_rows.setdefault(c, set()).add(i)
            if new:
                cont = 0
                for v in new.values():
                    cont = gcd(cont, v)
                    if cont == 1:
                        break
                if cont > 1:
                    new = {c: v // cont for c, v in new.items()}
                active[i] = new
            else:
                del active[i]
    return rank


def rank(m: SparseMatQ) -> int:
    # eliminate along the smaller dimension
    if m.rows <= m.cols:
        return rank_rows(m.row_dicts())
    return rank_rows(m.col_dicts())


def dense_rank(m: Sequence[Sequence[Number]]) -> int:
    """Plain Fraction Gaussian elimination (test oracle)."""
    a = [[Fraction(x) for x in row] for row in m]
    r = 0
    ncols = len(a[0]) if a else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r


def nullspace(m: SparseMatQ) -> list[list[Fraction]]:
    """Basis of {x : m x = 0} in reduced form (dense, for small cocycle extraction)."""
    a = [[Fraction(x) for x in row] for row in m.to_dense()]
    ncols = m.cols
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -a[i][f]
        basis.append(vec)
    return basis


def in_span(vectors: Sequence[Mapping[int, Number]], target: Mapping[int, Number]) -> bool:
    base = rank_rows(vectors)
    return rank_rows(list(vectors) + [target]) == base
