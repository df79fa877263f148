"""Canonical labeling of dashed/solid multigraphs with orientation signs.

Partition refinement on vertex invariants, then individualization with
automorphism pruning.  The canonical form is the leaf of the search tree whose
sorted edge list is lexicographically minimal (not the global minimum over all
relabelings, but invariant under them).  The sign is the Koszul sign of the
relabeling measured on the orientation word; a class is Zero when some
automorphism reverses the orientation.
"""
from __future__ import annotations

from typing import Optional

from .graphs import DASHED, Ambient, Graph

_CACHE: dict = {}
_CACHE_LIMIT = 2_000_000


def _odd_perm_sign(positions: list[int]) -> int:
    inv = 0
    for i in range(len(positions)):
        pi = positions[i]
        for j in range(i + 1, len(positions)):
            if pi > positions[j]:
                inv += 1
    return -1 if inv & 1 else 1


def relabel_sign(g: Graph, perm: list[int], amb: Ambient) -> tuple[Graph, int]:
    """Apply a vertex relabeling and put edges in canonical (kind, min, max) order.

    Returns the new graph and the Koszul sign relating its orientation to g's.
    Parallel edges keep their relative order (stable sort).
    """
    n_odd = (amb.n - 1) & 1
    j_odd = (amb.j - 1) & 1
    flip = 1
    keyed = []
    for idx, (k, s, t) in enumerate(g.edges):
        a, b = perm[s], perm[t]
        if a > b:
            a, b = b, a
            flip *= amb.flip_sign(k)
        keyed.append(((k, a, b), idx))
    keyed.sort()
    edges = tuple(e for e, _ in keyed)
    odd_edges = []
    for new_pos, (e, idx) in enumerate(keyed):
        if (n_odd if e[0] == DASHED else j_odd):
            odd_edges.append((idx, new_pos))
    odd_edges.sort()
    sign = flip * _odd_perm_sign([p for _, p in odd_edges])
    vodd = []
    for v in range(g.nv):
        if (amb.n if g.kinds[v] == 2 else amb.j) & 1:
            vodd.append(perm[v])
    sign *= _odd_perm_sign(vodd)
    kinds = [0] * g.nv
    for v, p in enumerate(perm):
        kinds[p] = g.kinds[v]
    return Graph(tuple(kinds), edges), sign


def _local_zero(g: Graph, amb: Ambient) -> bool:
    """Loops with odd flip sign, or parallel same-kind edges of odd degree."""
    seen = set()
    for k, s, t in g.edges:
        d = amb.edge_deg(k)
        if s == t and (d + 1) % 2 == 1:
            return True
        key = (k, min(s, t), max(s, t))
        if key in seen and d % 2 == 1:
            return True
        seen.add(key)
    return False


def _refine(cells: list[list[int]], adj: list[list[tuple[int, int]]]) -> list[list[int]]:
    while True:
        cell_of = {}
        for ci, c in enumerate(cells):
            for v in c:
                cell_of[v] = ci
        new_cells = []
        for c in cells:
            if len(c) == 1:
                new_cells.append(c)
                continue
            sigs = {}
            for v in c:
                sig = tuple(sorted((k, cell_of[u]) for k, u in adj[v]))
                sigs.setdefault(sig, []).append(v)
            for sig in sorted(sigs):
                new_cells.append(sigs[sig])
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


def _encode(g: Graph, perm: list[int]) -> tuple:
    out = []
    for k, s, t in g.edges:
        a, b = perm[s], perm[t]
        out.append((k, a, b) if a <= b else (k, b, a))
    out.sort()
    return tuple(out)


def _search(g: Graph, amb: Ambient, stop_on_zero: bool = True):
    nv = g.nv
    adj: list[list[tuple[int, int]]] = [[] for _ in range(nv)]
    loops = [[0, 0] for _ in range(nv)]
    for k, s, t in g.edges:
        if s == t:
            loops[s][k] += 1
        else:
            adj[s].append((k, t))
            adj[t].append((k, s))
    val = g.valences
    inv = {}
    for v in range(nv):
        inv.setdefault((g.kinds[v], val[v], tuple(loops[v])), []).append(v)
    cells = [inv[key] for key in sorted(inv)]
    cells = _refine(cells, adj)

    best: list = [None, None, None]  # encoding, perm, sign
    autos: list[list[int]] = []
    zero = [False]

    def leaf(cells_):
        perm = [0] * nv
        for ci, c in enumerate(cells_):
            perm[c[0]] = ci
        enc = _encode(g, perm)
        if best[0] is None or enc < best[0]:
            _, sgn = relabel_sign(g, perm, amb)
            best[0], best[1], best[2] = enc, perm, sgn
        elif enc == best[0]:
            _, sgn = relabel_sign(g, perm, amb)
            if sgn != best[2]:
                zero[0] = stop_on_zero
            inv_best = [0] * nv
            for v, p in enumerate(best[1]):
                inv_best[p] = v
            # automorphism: v -> inv_best[perm[v]]
            autos.append([inv_best[perm[v]] for v in range(nv)])

    def recurse(cells_, path):
        if zero[0]:
            return
        target = None
        for ci, c in enumerate(cells_):
            if len(c) > 1 and (target is None or len(c) < len(cells_[target])):
                target = ci
        if target is None:
            leaf(cells_)
            return
        cell = cells_[target]
        explored: list[int] = []
        for v in cell:
            if zero[0]:
                return
            if explored and _same_orbit(v, explored, autos, path):
                continue
            explored.append(v)
            rest = [u for u in cell if u != v]
            nc = cells_[:target] + [[v], rest] + cells_[target + 1:]
            recurse(_refine(nc, adj), path + [v])

    recurse(cells, [])
    return best, zero[0]


def _same_orbit(v: int, explored: list[int], autos: list[list[int]], path: list[int]) -> bool:
    gens = [a for a in autos if all(a[p] == p for p in path)]
    if not gens:
        return False
    orbit = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for a in gens:
            y = a[x]
            if y not in orbit:
                orbit.add(y)
                stack.append(y)
    return any(u in orbit for u in explored)


def canonicalize(g: Graph, amb: Ambient) -> tuple[Graph, int]:
    """Return (canonical graph, sign) with sign in {+1, -1, 0}; 0 means Zero.

    For a Zero class the returned graph is only some relabeling of g.
    """
    key = (g.kinds, g.edges, amb.n & 1, amb.j & 1)
    hit = _CACHE.get(key)
    if hit is not None:
        return hit
    best, zero = _search(g, amb)
    cg, sign = relabel_sign(g, best[1], amb)
    if zero or _local_zero(g, amb):
        sign = 0
    res = (cg, sign)
    if len(_CACHE) > _CACHE_LIMIT:
        _CACHE.clear()
    _CACHE[key] = res
    return res


def canonical_key(g: Graph) -> tuple:
    """Parity-independent canonical key of the underlying unoriented graph."""
    best, _ = _search(g, _KEY_AMB, stop_on_zero=False)
    cg, _ = relabel_sign(g, best[1], _KEY_AMB)
    return (cg.kinds, cg.edges)


_KEY_AMB = Ambient(6, 4)


def brute_canonical(g: Graph, amb: Ambient) -> tuple[tuple, Optional[int]]:
    """Exhaustive oracle: minimal (kinds, edges) over all relabelings, plus Zero flag.

    Returns (min key, None) for Zero classes and (min key, +1) otherwise.
    """
    from itertools import permutations

    best = None
    for perm in permutations(range(g.nv)):
        h, _ = relabel_sign(g, list(perm), amb)
        key = (h.kinds, h.edges)
        if best is None or key < best:
            best = key
    zero = _local_zero(g, amb)
    if not zero:
        signs = set()
        for perm in permutations(range(g.nv)):
            h, s = relabel_sign(g, list(perm), amb)
            if (h.kinds, h.edges) == best:
                signs.add(s)
        zero = len(signs) > 1
    return best, (None if zero else 1)
