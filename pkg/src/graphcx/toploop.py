"""Graph-side top (defect-0) cohomology of the hairy graph complex at fixed loop order.

Defect-0 hairy graphs are trivalent.  They are grown from hairless trivalent
cores (2g-2 white vertices) by repeatedly subdividing an edge and attaching a
hair at the new vertex.  Every such graph arises this way, since removing any
hair and smoothing its white vertex gives a trivalent graph with one hair fewer.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Optional

from .canon import canonical_key, canonicalize, relabel_sign
from .complexes import d_hgc, gkey
from .enumerate import BudgetExceeded
from .graphs import DASHED, EXT, WHITE, Ambient, Graph
from .linalg import rank_rows


def _cubic_multigraphs(nv: int) -> list[tuple[tuple[int, int], ...]]:
    """Connected 3-regular multigraphs (loops allowed) on nv vertices, all labelings."""
    pairs = [(a, b) for a in range(nv) for b in range(a, nv)]
    need = 3 * nv // 2
    out = []

    def rec(start, chosen, deg):
        if len(chosen) == need:
            if all(d == 3 for d in deg):
                out.append(tuple(chosen))
            return
        for idx in range(start, len(pairs)):
            a, b = pairs[idx]
            if (a == b and deg[a] + 2 > 3) or deg[a] + 1 > 3 or deg[b] + 1 > 3:
                continue
            deg[a] += 1
            deg[b] += 1
            chosen.append((a, b))
            rec(idx, chosen, deg)
            chosen.pop()
            deg[a] -= 1
            deg[b] -= 1

    rec(0, [], [0] * nv)
    return [es for es in out if _connected(nv, es)]


def _connected(nv, es) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for a, b in es:
            for u, v in ((a, b), (b, a)):
                if u == x and v not in seen:
                    seen.add(v)
                    stack.append(v)
    return len(seen) == nv


@lru_cache(maxsize=None)
def cores(g: int) -> tuple[Graph, ...]:
    """Hairless trivalent graphs of loop order g >= 2, one per isomorphism class."""
    nv = 2 * g - 2
    seen = {}
    for es in _cubic_multigraphs(nv):
        gr = Graph((WHITE,) * nv, tuple((DASHED, a, b) for a, b in es))
        seen.setdefault(canonical_key(gr), gr)
    return tuple(Graph(*k) for k in sorted(seen))


def add_hair(gr: Graph, i: int) -> Graph:
    """Subdivide edge i by a new white vertex carrying a new hair."""
    _, s, t = gr.edges[i]
    w, x = gr.nv, gr.nv + 1
    kinds = gr.kinds + (WHITE, EXT)
    edges = gr.edges[:i] + gr.edges[i + 1:] + ((DASHED, s, w), (DASHED, w, t), (DASHED, w, x))
    return Graph(kinds, edges)


def _double_hair(gr: Graph) -> bool:
    hairs = {}
    for _, s, t in gr.edges:
        for a, b in ((s, t), (t, s)):
            if gr.kinds[a] == WHITE and gr.kinds[b] == EXT:
                hairs[a] = hairs.get(a, 0) + 1
    return any(c >= 2 for c in hairs.values())


@lru_cache(maxsize=None)
def trivalent_hairy(g: int, hairs: int, prune: bool, budget: Optional[int] = None) -> tuple[Graph, ...]:
    """Defect-0 hairy graphs of loop order g with the given hair count (up to isomorphism).

    With prune=True graphs having a white vertex with two hairs are dropped, and
    so are their descendants, which is exact when such graphs are Zero.
    """
    if hairs == 0:
        return cores(g)
    out = {}
    for gr in trivalent_hairy(g, hairs - 1, prune, budget):
        for i in range(gr.ne):
            h = add_hair(gr, i)
            if prune and _double_hair(h):
                continue
            key = canonical_key(h)
            if key not in out:
                out[key] = Graph(*key)
                if budget is not None and len(out) > budget:
                    raise BudgetExceeded(f"trivalent hairy graphs g={g} h={hairs} exceed {budget}")
    return tuple(out[k] for k in sorted(out))


def graph_side_top_dim(g: int, amb: Ambient, hairs: int, budget: Optional[int] = None) -> int:
    """dim of defect-0 cohomology of HGC at loop order g and `hairs` hairs (hairs >= 1)."""
    if hairs < 1:
        raise ValueError("hairy graphs have at least one hair")
    prune = _swap_is_zero(amb)
    basis = {}
    for gr in trivalent_hairy(g, hairs, prune, budget):
        cg, s = canonicalize(gr, amb)
        if s:
            basis[gkey(cg)] = cg
    rows = []
    index: dict = {}
    for key in sorted(basis):
        col = d_hgc(basis[key], amb)
        row = {}
        for tk, v in col.items():
            row[index.setdefault(tk, len(index))] = v
        if row:
            rows.append(row)
    return len(basis) - rank_rows(rows)


def _swap_is_zero(amb: Ambient) -> bool:
    """Whether exchanging two hairs on one white vertex reverses orientation."""
    probe = Graph((WHITE, EXT, EXT), ((DASHED, 0, 1), (DASHED, 0, 2)))
    image, sign = relabel_sign(probe, [0, 2, 1], amb)
    assert image == probe
    return sign == -1
