"""Enumeration of graph bases by inverse contraction (vertex splitting).

Every graph in a family either is a seed (nothing contractible) or contracts
along some reduction edge to a family member with one vertex fewer and the
same (k, g).  Breadth-first splitting from the seeds therefore reaches every
member.  Dedup uses the parity-independent canonical key, so orientation-Zero
graphs are kept as intermediates and only dropped when a basis is cut out.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterable, Optional

from .canon import canonical_key, canonicalize
from .graphs import DASHED, EXT, INT, SOLID, WHITE, Ambient, Graph


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Family:
    """Admissibility rules of a generating family.

    hairy: externals carry exactly one dashed edge and nothing else; only
    white-white edges are reduction edges.  max_dashless: how many externals
    may lack dashed edges (decorated plain parts); 0 means admissible.
    """

    hairy: bool = False
    max_dashless: int = 0


PLAIN = Family()
HAIRY = Family(hairy=True)


def admissible(g: Graph, fam: Family) -> bool:
    val = g.valences
    dashless = 0
    for v, kind in enumerate(g.kinds):
        s, d = val[v]
        if kind == WHITE:
            if d < 3:
                return False
        elif kind == INT:
            if s < 3 or d:
                return False
        else:
            if fam.hairy:
                if d != 1 or s:
                    return False
            elif d == 0:
                dashless += 1
                if s == 0 and g.nv > 1:
                    return False
    if fam.hairy and (g.n_int or g.n_solid):
        return False
    return dashless <= fam.max_dashless


def _chord_multigraphs(nv: int, ne: int) -> list[tuple[tuple[int, int], ...]]:
    """Connected loopless multigraphs on nv labeled vertices with ne edges (up to iso)."""
    pairs = [(a, b) for a in range(nv) for b in range(a + 1, nv)]
    out = {}
    if nv == 1:
        return [()] if ne == 0 else []
    for combo in combinations_with_replacement(pairs, ne):
        g = Graph(tuple([EXT] * nv), tuple((DASHED, a, b) for a, b in combo))
        if not g.is_connected():
            continue
        out.setdefault(canonical_key(g), combo)
    return list(out.values())


def seeds(fam: Family, k: int, g: int) -> list[Graph]:
    """Graphs with no reduction edge: externals joined by chords, plus loops.

    For the hairy family: one white with loops and hairs, or the single chord.
    """
    res: dict = {}
    if fam.hairy:
        h = k - g + 1
        if h < 1:
            return []
        if g == 0 and h == 2:
            gr = Graph((EXT, EXT), ((DASHED, 0, 1),))
            res[canonical_key(gr)] = gr
        if 2 * g + h >= 3:
            kinds = tuple([EXT] * h + [WHITE])
            w = h
            edges = tuple([(DASHED, v, w) for v in range(h)] + [(DASHED, w, w)] * g)
            gr = Graph(kinds, edges)
            res[canonical_key(gr)] = gr
        return list(res.values())
    for c in range(0, k + 1):
        dl = k - c  # dashed loops
        for s in range(0, g + 1):  # solid loops
            nv = c + dl + s - g + 1
            if nv < 1 or nv > c + 1:
                continue
            for chords in _chord_multigraphs(nv, c):
                for dloops in combinations_with_replacement(range(nv), dl):
                    for sloops in combinations_with_replacement(range(nv), s):
                        edges = [(SOLID, v, v) for v in sloops]
                        edges += [(DASHED, a, b) for a, b in chords]
                        edges += [(DASHED, v, v) for v in dloops]
                        gr = Graph(tuple([EXT] * nv), tuple(edges))
                        if gr.order != k or gr.betti != g or not admissible(gr, fam):
                            continue
                        res.setdefault(canonical_key(gr), gr)
    return list(res.values())


def _split_types(kind: int, fam: Family) -> list[tuple[int, int, int]]:
    """(kind kept at v, kind of new w, kind of new edge) with contraction back to `kind`."""
    if fam.hairy:
        return [(WHITE, WHITE, DASHED)] if kind == WHITE else []
    if kind == WHITE:
        return [(WHITE, WHITE, DASHED)]
    if kind == INT:
        return [(INT, INT, SOLID)]
    return [(EXT, WHITE, DASHED), (EXT, EXT, SOLID), (EXT, INT, SOLID)]


def splittings(gr: Graph, fam: Family) -> Iterable[Graph]:
    nv = gr.nv
    w = nv
    for v in range(nv):
        half = []  # (edge index, end)
        for idx, (_, s, t) in enumerate(gr.edges):
            if s == v:
                half.append((idx, 0))
            if t == v:
                half.append((idx, 1))
        m = len(half)
        for kv, kw, ke in _split_types(gr.kinds[v], fam):
            for mask in range(1 << m):
                edges = [list(e) for e in gr.edges]
                for bit, (idx, end) in enumerate(half):
                    if mask >> bit & 1:
                        edges[idx][1 + end] = w
                ok = True
                for e in edges:
                    if e[0] == SOLID and WHITE in (_kind_at(e[1], v, w, kv, kw, gr), _kind_at(e[2], v, w, kv, kw, gr)):
                        ok = False
                        break
                if not ok:
                    continue
                kinds = list(gr.kinds) + [kw]
                kinds[v] = kv
                edges.append([ke, v, w])
                cand = Graph(tuple(kinds), tuple(tuple(e) for e in edges))
                if admissible(cand, fam):
                    yield cand


def _kind_at(x, v, w, kv, kw, gr):
    if x == v:
        return kv
    if x == w:
        return kw
    return gr.kinds[x]


def _pack(gr: Graph) -> Graph:
    """Put a graph in its canonical unoriented labeling."""
    kinds, edges = canonical_key(gr)
    return Graph(kinds, edges)


@lru_cache(maxsize=None)
def generate(fam: Family, k: int, g: int, budget: Optional[int] = None) -> tuple[Graph, ...]:
    """All connected family members with order k and loop order g, canonically labeled."""
    level = {}
    for s in seeds(fam, k, g):
        p = _pack(s)
        level[(p.kinds, p.edges)] = p
    found = dict(level)
    while level:
        nxt = {}
        for gr in level.values():
            for cand in splittings(gr, fam):
                p = _pack(cand)
                key = (p.kinds, p.edges)
                if key not in found and key not in nxt:
                    nxt[key] = p
        found.update(nxt)
        if budget is not None and len(found) > budget:
            raise BudgetExceeded(f"more than {budget} graphs for k={k}, g={g}")
        level = nxt
    return tuple(found[key] for key in sorted(found))


# -- bases of the individual complexes ------------------------------------

COMPLEXES = ("pgc", "pgc'", "hh", "hgc")


def in_complex(gr: Graph, kind: str) -> bool:
    if kind == "pgc'":
        return True
    if kind == "pgc":
        return not gr.has_loop() and not gr.has_double()
    if kind == "hh":
        return gr.n_white == 0 and gr.n_int == 0 and not gr.has_loop() and not gr.has_double()
    if kind == "hgc":
        return True
    raise ValueError(kind)


def graph_degree(k: int, g: int, l: int, amb: Ambient) -> int:
    return k * (amb.n - amb.j - 2) + (g - 1) * (amb.j - 1) + l


@lru_cache(maxsize=None)
def basis(kind: str, amb: Ambient, k: int, g: int, budget: Optional[int] = None) -> dict[int, tuple[Graph, ...]]:
    """Nonzero canonical classes of a complex, grouped by degree."""
    fam = HAIRY if kind == "hgc" else PLAIN
    out: dict[int, list[Graph]] = {}
    for gr in generate(fam, k, g, budget):
        if not in_complex(gr, kind):
            continue
        cg, sign = canonicalize(gr, amb)
        if sign == 0:
            continue
        out.setdefault(cg.degree(amb), []).append(cg)
    return {d: tuple(sorted(v, key=lambda x: (x.kinds, x.edges))) for d, v in sorted(out.items())}
