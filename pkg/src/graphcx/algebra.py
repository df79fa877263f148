"""The hidden-face dg algebra A_{n,j}.

Elements are rational combinations of sorted sequences of canonical connected
graphs; the empty sequence is the unit.  A single graph is normalized by
exploring its orbit under symmetry moves (reflect the piece hanging between two
vertices).  The orbit is one class whose representative is its smallest
canonical form.  The class is Zero if any member is killed by a one-term
relation, or if two paths reach the same member with opposite signs.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .canon import canonicalize
from .enumerate import PLAIN, generate
from .graphs import DASHED, EXT, INT, SOLID, WHITE, Ambient, Graph, contract_subset, generalize
from .signs import subset_contraction_sign

GKey = tuple  # (kinds, edges) of a canonical graph
Seq = tuple  # sorted tuple of GKey; () is the unit
AElem = dict  # Seq -> Fraction

UNIT: Seq = ()


def graph_of(key: GKey) -> Graph:
    return Graph(key[0], key[1])


def _key(g: Graph) -> GKey:
    return (g.kinds, g.edges)


# -- one-term relations ----------------------------------------------------------

def _components_without(g: Graph, removed: set[int]) -> list[list[int]]:
    rest = [v for v in range(g.nv) if v not in removed]
    parent = {v: v for v in rest}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for _, s, t in g.edges:
        if s in parent and t in parent:
            a, b = find(s), find(t)
            if a != b:
                parent[max(a, b)] = min(a, b)
    comps: dict[int, list[int]] = {}
    for v in rest:
        comps.setdefault(find(v), []).append(v)
    return list(comps.values())


def symmetry_sign(g: Graph, piece: Iterable[int], amb: Ambient) -> int:
    """Sign of reflecting the piece C: (-1)^{n|W(C)| + j|B(C)| + j|E_eta| + n|E_theta|}.

    The edges counted are those with at least one endpoint in C.
    """
    c = set(piece)
    exp = 0
    for v in c:
        exp += amb.n if g.kinds[v] == WHITE else amb.j
    for kind, s, t in g.edges:
        if s in c or t in c:
            exp += amb.n if kind == DASHED else amb.j
    return -1 if exp % 2 else 1


def killed(g: Graph, amb: Ambient) -> Optional[str]:
    """Name of a one-term relation that kills g, or None."""
    if g.norm_degree(amb) < 0:
        return "negative degree"
    if g.has_loop() or g.has_double():
        return "double or loop edge"
    if g.n_ext == 0 and g.nv >= 3:
        return "no external vertex"
    for v in range(g.nv):
        comps = _components_without(g, {v})
        if g.nv >= 3 and len(comps) >= 2:
            if g.kinds[v] != WHITE:
                return "rescaling"
            if any(all(g.kinds[u] == WHITE for u in c) for c in comps):
                return "rescaling"
        for c in comps:
            if g.kinds[v] == WHITE and any(g.kinds[u] != WHITE for u in c):
                continue
            if symmetry_sign(g, c, amb) == -1:
                return "symmetry"
    return None


def symmetry_moves(g: Graph, amb: Ambient):
    """Yield (reflected graph, sign) for every two-vertex symmetry relation g ~ sign * reflected."""
    for v1, v2 in combinations(range(g.nv), 2):
        for c in _components_without(g, {v1, v2}):
            if WHITE in (g.kinds[v1], g.kinds[v2]) and any(g.kinds[u] != WHITE for u in c):
                continue
            cs = set(c)
            swap = {v1: v2, v2: v1}
            edges = []
            for kind, s, t in g.edges:
                if s in cs or t in cs:
                    s, t = swap.get(s, s), swap.get(t, t)
                edges.append((kind, s, t))
            if any(kind == SOLID and WHITE in (g.kinds[s], g.kinds[t]) for kind, s, t in edges):
                continue
            yield generalize(Graph(g.kinds, tuple(edges))), symmetry_sign(g, c, amb)


# -- relation (5): two-vertex graphs identified with the unit ----------------------

def _unit_graphs() -> frozenset:
    return frozenset({
        ((EXT, WHITE), ((DASHED, 0, 1),)),
        ((WHITE, WHITE), ((DASHED, 0, 1),)),
        ((INT, INT), ((SOLID, 0, 1),)),
    })


UNIT_GRAPHS = _unit_graphs()


@lru_cache(maxsize=200_000)
def _class_of_canonical(key: GKey, amb: Ambient) -> tuple[Optional[Seq], int]:
    """Class of a canonical graph: (representative sequence, sign) or (None, 0)."""
    root = graph_of(key)
    values = {key: 1}
    queue = [root]
    while queue:
        m = queue.pop()
        vm = values[_key(m)]
        if killed(m, amb):
            return None, 0
        for h, eps in symmetry_moves(m, amb):
            ch, s = canonicalize(h, amb)
            if s == 0:
                return None, 0
            kh = _key(ch)
            val = vm * eps * s
            old = values.get(kh)
            if old is None:
                values[kh] = val
                queue.append(ch)
            elif old != val:
                return None, 0
    for k in values:
        if k in UNIT_GRAPHS:
            return UNIT, values[k]
    rep = min(values)
    return (rep,), values[rep]


def graph_class(g: Graph, amb: Ambient) -> tuple[Optional[Seq], int]:
    """g = sign * (class representative).  Returns (None, 0) when g vanishes in A."""
    if not g.is_connected():
        return None, 0
    cg, s = canonicalize(generalize(g), amb)
    if s == 0:
        return None, 0
    rep, v = _class_of_canonical(_key(cg), amb)
    if rep is None:
        return None, 0
    return rep, s * v


@lru_cache(maxsize=200_000)
def key_degree(key: GKey, amb: Ambient) -> int:
    return graph_of(key).norm_degree(amb)


def seq_degree(seq: Seq, amb: Ambient) -> int:
    return sum(key_degree(k, amb) for k in seq)


def sort_seq(keys: Sequence[GKey], amb: Ambient) -> tuple[Optional[Seq], int]:
    """Sort a sequence of class representatives with the graded-commutativity sign."""
    items = list(keys)
    sign = 1
    # insertion sort, tracking (-1)^{[a][b]} for each transposition
    for i in range(1, len(items)):
        x = items[i]
        dx = key_degree(x, amb) & 1
        k = i
        while k > 0 and items[k - 1] > x:
            if dx and key_degree(items[k - 1], amb) & 1:
                sign = -sign
            items[k] = items[k - 1]
            k -= 1
        items[k] = x
    for a, b in zip(items, items[1:]):
        if a == b and key_degree(a, amb) & 1:
            return None, 0
    seq = tuple(items)
    if seq_degree(seq, amb) > amb.n * amb.j - 1:
        return None, 0
    return seq, sign


def normalize_graphs(graphs: Sequence[Graph], amb: Ambient) -> tuple[Optional[Seq], int]:
    """Normalize a raw sequence of labeled connected graphs."""
    keys = []
    sign = 1
    for g in graphs:
        rep, s = graph_class(g, amb)
        if rep is None:
            return None, 0
        sign *= s
        keys.extend(rep)  # rep is () for the unit
    # every factor is a representative of the same degree as its graph, so
    # positions only move through the sort below
    seq, s2 = sort_seq(keys, amb)
    if seq is None:
        return None, 0
    return seq, sign * s2


def add(out: AElem, seq: Optional[Seq], coeff) -> None:
    if seq is None or not coeff:
        return
    v = out.get(seq, 0) + coeff
    if v:
        out[seq] = v
    else:
        out.pop(seq, None)


def mul(x: AElem, y: AElem, amb: Ambient) -> AElem:
    out: AElem = {}
    for a, ca in x.items():
        for b, cb in y.items():
            seq, s = sort_seq(a + b, amb)
            add(out, seq, s * ca * cb)
    return out


def degree(x: AElem, amb: Ambient) -> Optional[int]:
    degs = {seq_degree(s, amb) for s in x}
    if len(degs) > 1:
        raise ValueError("inhomogeneous element")
    return degs.pop() if degs else None


def augmentation(x: AElem) -> Fraction:
    return Fraction(x.get(UNIT, 0))


# -- differential --------------------------------------------------------------

@lru_cache(maxsize=200_000)
def _diff_key(key: GKey, amb: Ambient) -> tuple[tuple[Seq, int], ...]:
    g = graph_of(key)
    out: AElem = {}
    if g.norm_degree(amb) < 0:
        return ()
    for size in range(2, g.nv):
        for S in combinations(range(g.nv), size):
            quot, sub = contract_subset(g, S)
            if not sub.is_connected():
                continue
            seq, s = normalize_graphs((quot, sub), amb)
            if seq is None:
                continue
            add(out, seq, subset_contraction_sign(g, S, amb) * s)
    return tuple(sorted(out.items()))


def diff_graph(key: GKey, amb: Ambient) -> AElem:
    return dict(_diff_key(key, amb))


def diff_seq(seq: Seq, amb: Ambient) -> AElem:
    """Leibniz: d(G1...Gk) = sum (-1)^{[G1]+...+[G_{i-1}]} G1..dGi..Gk."""
    out: AElem = {}
    pre = 0
    for i, key in enumerate(seq):
        left, right = seq[:i], seq[i + 1:]
        sgn = -1 if pre & 1 else 1
        for mid, c in _diff_key(key, amb):
            s2, s = sort_seq(left + mid + right, amb)
            add(out, s2, sgn * s * c)
        pre += key_degree(key, amb)
    return out


def diff(x: AElem, amb: Ambient) -> AElem:
    out: AElem = {}
    for seq, c in x.items():
        for s2, c2 in diff_seq(seq, amb).items():
            add(out, s2, c * c2)
    return out


# -- bases ------------------------------------------------------------------------

@lru_cache(maxsize=None)
def generators(amb: Ambient, k: int, g: int) -> tuple[GKey, ...]:
    """Nonzero class representatives of connected graphs of order k and loop order g."""
    reps = set()
    for gr in generate(PLAIN, k, g):
        rep, s = graph_class(gr, amb)
        if rep:
            reps.add(rep[0])
    return tuple(sorted(reps))


@lru_cache(maxsize=None)
def basis(amb: Ambient, k: int, g: int) -> dict[int, tuple[Seq, ...]]:
    """Basis sequences of A(k, g) grouped by degree (k = g = 0 gives the unit)."""
    if k == 0 and g == 0:
        return {0: (UNIT,)}
    gens = []
    for kk in range(1, k + 1):
        for gg in range(0, g + 1):
            gens.extend((key, kk, gg) for key in generators(amb, kk, gg))
    gens.sort()
    out: dict[int, list[Seq]] = {}

    def rec(start, chosen, kk, gg):
        if kk == k and gg == g:
            seq, s = sort_seq(tuple(chosen), amb)
            if seq is not None:
                out.setdefault(seq_degree(seq, amb), []).append(seq)
            return
        for idx in range(start, len(gens)):
            key, a, b = gens[idx]
            if kk + a > k or gg + b > g:
                continue
            chosen.append(key)
            rec(idx, chosen, kk + a, gg + b)
            chosen.pop()

    rec(0, [], 0, 0)
    return {d: tuple(sorted(set(v))) for d, v in sorted(out.items())}


def order_betti(seq: Seq) -> tuple[int, int]:
    k = g = 0
    for key in seq:
        gr = graph_of(key)
        k += gr.order
        g += gr.betti
    return k, g


class AlgebraComplex:
    """A(k, g) as a cochain complex with basis sequences grouped by normalized degree."""

    def __init__(self, amb: Ambient, k: int, g: int):
        self.amb, self.k, self.g = amb, k, g
        self._b = basis(amb, k, g)

    def degrees(self) -> list[int]:
        return sorted(self._b)

    def basis(self, d: int):
        return list(self._b.get(d, ()))

    def diff(self, seq: Seq) -> AElem:
        return diff_seq(seq, self.amb)


def seq_to_json(seq: Seq) -> list:
    return [graph_of(k).to_json() for k in seq]


def elem_to_json(x: AElem) -> list:
    """[{"coeff": "p/q", "sequence": [<graph JSON>, ...]}, ...] in sorted key order."""
    return [{"coeff": str(Fraction(c)), "sequence": seq_to_json(s)} for s, c in sorted(x.items())]
