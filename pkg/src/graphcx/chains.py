"""Generic cochain-complex driver: matrices, d^2 checks, cohomology dimensions.

A complex supplies `degrees()`, `basis(d)` (sorted, hashable keys), and
`diff(x)` (sparse dict over the degree d+1 basis).  Quotient complexes also
supply `relations(d)`, vectors spanning the relation subspace of C^d; the
differential must preserve that subspace.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import partial
from typing import Hashable, Mapping, Protocol, Sequence

from .linalg import Number, SparseMatQ, rank, rank_rows
from .parallel import pmap


class Complex(Protocol):
    def degrees(self) -> list[int]: ...

    def basis(self, d: int) -> Sequence[Hashable]: ...

    def diff(self, x: Hashable) -> Mapping[Hashable, Number]: ...


class ClosureError(RuntimeError):
    pass


def _col(cx, x):
    return cx.diff(x)


def columns(cx: Complex, d: int, threads: int = 1) -> list[Mapping[Hashable, Number]]:
    return pmap(partial(_col, cx), list(cx.basis(d)), threads)


def index(keys: Sequence[Hashable]) -> dict[Hashable, int]:
    return {k: i for i, k in enumerate(keys)}


def assemble(cx: Complex, d: int, threads: int = 1) -> SparseMatQ:
    """Matrix of d: C^d -> C^{d+1}; columns = source basis, rows = target basis."""
    cols = columns(cx, d, threads)
    rows = index(cx.basis(d + 1))
    for c in cols:
        for key in c:
            if key not in rows:
                raise ClosureError(f"differential leaves the basis in degree {d + 1}: {key!r}")
    return SparseMatQ.from_columns(cols, rows)


def relation_rows(cx, d: int) -> list[dict[int, Number]]:
    rel = getattr(cx, "relations", None)
    if rel is None:
        return []
    idx = index(cx.basis(d))
    return [{idx[k]: v for k, v in r.items()} for r in rel(d)]


@dataclass(frozen=True)
class DegreeInfo:
    degree: int
    dim_basis: int
    dim_quotient: int
    rank_out: int
    dim_cohomology: int


def cohomology(cx: Complex, threads: int = 1) -> list[DegreeInfo]:
    """dim H^d = dim Q^d - rank(d_d) - rank(d_{d-1}) on the (quotient) complex."""
    degs = sorted(cx.degrees())
    lo, hi = (degs[0] - 1, degs[-1] + 1) if degs else (0, -1)
    ranks: dict[int, int] = {}
    quot: dict[int, int] = {}
    rel_rank: dict[int, int] = {}
    for d in range(lo, hi + 1):
        rr = relation_rows(cx, d)
        rel_rank[d] = rank_rows(rr) if rr else 0
        quot[d] = len(cx.basis(d)) - rel_rank[d]
    for d in range(lo, hi + 1):
        if not cx.basis(d) or not cx.basis(d + 1):
            ranks[d] = 0
            continue
        m = assemble(cx, d, threads)
        rr = relation_rows(cx, d + 1)
        if rr:
            rows = [dict() for _ in range(m.cols)]
            for (r, c), v in m.entries.items():
                rows[c][r] = v
            ranks[d] = rank_rows(rows + rr) - rel_rank[d + 1]
        else:
            ranks[d] = rank(m)
    out = []
    for d in degs:
        h = quot[d] - ranks[d] - ranks.get(d - 1, 0)
        out.append(DegreeInfo(d, len(cx.basis(d)), quot[d], ranks[d], h))
    return out


def d2_check(cx: Complex, threads: int = 1) -> list[tuple[int, Hashable]]:
    """Return (degree, offending basis element) pairs where d^2 != 0 (modulo relations)."""
    bad = []
    for d in sorted(cx.degrees()):
        if not cx.basis(d + 2):
            continue
        first = columns(cx, d, threads)
        second_src = sorted({k for c in first for k in c}, key=_sort_key)
        second = dict(zip(second_src, pmap(partial(_col, cx), second_src, threads)))
        rr = relation_rows(cx, d + 2)
        base = rank_rows(rr) if rr else 0
        idx = index(cx.basis(d + 2))
        for x, col in zip(cx.basis(d), first):
            acc: dict = {}
            for y, c in col.items():
                for z, c2 in second[y].items():
                    acc[z] = acc.get(z, 0) + c * c2
            acc = {k: v for k, v in acc.items() if v}
            if not acc:
                continue
            if rr and rank_rows(rr + [{idx[k]: v for k, v in acc.items()}]) == base:
                continue
            bad.append((d, x))
    return bad


def _sort_key(k):
    return repr(k)


def cocycle_space(cx: Complex, d: int, threads: int = 1):
    """Kernel basis of d on C^d (no quotient); small degrees only."""
    from .linalg import nullspace

    m = assemble(cx, d, threads)
    return nullspace(m)
