"""Random instances of the relations of A and the check that d preserves them.

A relation instance is a pair (lhs, rhs) of raw elements, each a list of
(labeled graph sequence, coefficient), with lhs ~ rhs in A.  The differential
is applied to the raw labeled graphs (no canonical form is taken first), and
the check is normalize(d lhs) == normalize(d rhs).
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Callable, Optional

from . import algebra as A
from .canon import relabel_sign
from .enumerate import PLAIN, generate
from .graphs import DASHED, EXT, INT, SOLID, WHITE, Ambient, Graph, contract_subset, generalize
from .signs import koszul_sign, subset_contraction_sign

Raw = list  # [(tuple[Graph, ...], coefficient)]

FAMILIES = ("truncation", "orientation", "double-loop", "no-external",
            "rescaling", "symmetry", "unit", "permutation")


# -- raw differential --------------------------------------------------------------

def raw_terms(g: Graph, amb: Ambient):
    """Nonzero normalized terms sigma(S) G/S . G_S of d(g), one per subset S."""
    if g.norm_degree(amb) < 0:
        return
    for size in range(2, g.nv):
        for S in combinations(range(g.nv), size):
            quot, sub = contract_subset(g, S)
            if not sub.is_connected():
                continue
            seq, s = A.normalize_graphs((quot, sub), amb)
            if seq is not None:
                yield seq, subset_contraction_sign(g, S, amb) * s


def raw_diff_graph(g: Graph, amb: Ambient) -> A.AElem:
    """d of one labeled graph, each term normalized; no canonical form is taken of g."""
    out: A.AElem = {}
    for seq, c in raw_terms(g, amb):
        A.add(out, seq, c)
    return out


def raw_diff(x: Raw, amb: Ambient) -> A.AElem:
    """Leibniz rule over raw sequences, then normalization."""
    out: A.AElem = {}
    for graphs, c in x:
        pre = 0
        for i, g in enumerate(graphs):
            sgn = -1 if pre & 1 else 1
            left, right = graphs[:i], graphs[i + 1:]
            for mid, c2 in raw_diff_graph(g, amb).items():
                # normalize left and right around mid, keeping the order
                ls, s_l = A.normalize_graphs(left, amb)
                rs, s_r = A.normalize_graphs(right, amb)
                if ls is None or rs is None:
                    continue
                seq, s = A.sort_seq(ls + mid + rs, amb)
                A.add(out, seq, c * sgn * c2 * s_l * s_r * s)
            pre += g.norm_degree(amb)
    return out


def normalize(x: Raw, amb: Ambient) -> A.AElem:
    out: A.AElem = {}
    for graphs, c in x:
        seq, s = A.normalize_graphs(graphs, amb)
        A.add(out, seq, c * s)
    return out


# -- random generalized graphs -------------------------------------------------------

def random_graph(rng: random.Random, nv: int, extra_edges: int) -> Optional[Graph]:
    """A random connected admissible generalized graph, or None after a failed draw.

    Blacks are typed external/internal by whether they carry a dashed edge.
    """
    white = [rng.random() < 0.4 for _ in range(nv)]
    edges = []
    order = list(range(nv))
    rng.shuffle(order)
    for i in range(1, nv):  # spanning tree
        a, b = order[i], order[rng.randrange(i)]
        edges.append(_edge(rng, white, a, b))
    for _ in range(extra_edges):
        a, b = rng.sample(range(nv), 2)
        edges.append(_edge(rng, white, a, b))
    rng.shuffle(edges)
    edges = [(k, b, a) if rng.random() < 0.5 else (k, a, b) for k, a, b in edges]
    g = generalize(Graph(tuple(WHITE if w else EXT for w in white), tuple(edges)))
    if any(g.kinds[v] == WHITE and g.valences[v][0] for v in range(nv)):
        return None
    return g


def _edge(rng, white, a, b):
    if white[a] or white[b]:
        return (DASHED, a, b)
    return (SOLID if rng.random() < 0.5 else DASHED, a, b)


def random_relabel(g: Graph, rng: random.Random, amb: Ambient) -> tuple[Graph, int]:
    """A random relabeling h of g (vertices and edges) with g = sign * h in A."""
    perm = list(range(g.nv))
    rng.shuffle(perm)
    h, s = relabel_sign(g, perm, amb)
    eperm = list(range(h.ne))
    rng.shuffle(eperm)
    edges = [h.edges[i] for i in eperm]
    src = [(i, amb.edge_deg(h.edges[i][0])) for i in range(h.ne)]
    s *= koszul_sign(src, [src[i] for i in eperm])
    flips = [rng.random() < 0.5 for _ in edges]
    out = []
    for (k, a, b), f in zip(edges, flips):
        if f and a != b:
            s *= amb.flip_sign(k)
            a, b = b, a
        out.append((k, a, b))
    return Graph(h.kinds, tuple(out)), s


# -- instance generators -------------------------------------------------------------

@dataclass(frozen=True)
class Instance:
    family: str
    lhs: tuple
    rhs: tuple


@lru_cache(maxsize=None)
def _pool(nv_lo: int, nv_hi: int) -> tuple[Graph, ...]:
    """Generalized forms of enumerated plain graphs with few vertices."""
    out = []
    for k, g in ((1, 0), (1, 1), (2, 0), (2, 1), (1, 2), (3, 0), (2, 2)):
        out.extend(generalize(x) for x in generate(PLAIN, k, g) if nv_lo <= x.nv <= nv_hi)
    return tuple(out)


def _draw(rng, amb, pred: Callable[[Graph], bool], nv_range=(3, 6), tries=20000) -> Graph:
    """Half the draws come from enumerated plain graphs (randomly relabeled), half are random."""
    pool = [g for g in _pool(*nv_range) if pred(g)]
    if pool and rng.random() < 0.5:
        g = pool[rng.randrange(len(pool))]
        return random_relabel(g, rng, amb)[0]
    for _ in range(tries):
        nv = rng.randint(*nv_range)
        g = random_graph(rng, nv, rng.randint(0, nv))
        if g is not None and pred(g):
            return g
    raise RuntimeError("no instance found")


def _clean(g: Graph) -> bool:
    return not g.has_loop() and not g.has_double()


def instance(family: str, rng: random.Random, amb: Ambient) -> Instance:
    one = Fraction(1)
    if family == "orientation":
        g = _draw(rng, amb, lambda g: g.nv >= 3 and A.graph_class(g, amb)[0] is not None)
        h, s = random_relabel(g, rng, amb)
        return Instance(family, (((h,), one),), (((g,), Fraction(s)),))
    if family == "double-loop":
        g = _draw(rng, amb, lambda g: g.norm_degree(amb) >= 0)
        k, a, b = g.edges[rng.randrange(g.ne)]
        if rng.random() < 0.5:
            extra = (k, a, b)
        else:
            v = rng.randrange(g.nv)
            extra = (DASHED if g.kinds[v] != INT else SOLID, v, v)
        h = Graph(g.kinds, g.edges + (extra,))
        return Instance(family, (((h,), one),), ())
    if family == "no-external":
        g = _draw(rng, amb, lambda g: g.n_black == 0 and g.nv >= 3)
        return Instance(family, (((g,), one),), ())
    if family == "rescaling":
        g = _draw(rng, amb, lambda g: _clean(g) and A.killed(g, amb) == "rescaling")
        return Instance(family, (((g,), one),), ())
    if family == "symmetry":
        def has_move(g):
            return _clean(g) and g.n_ext and any(True for _ in A.symmetry_moves(g, amb))
        g = _draw(rng, amb, has_move)
        moves = list(A.symmetry_moves(g, amb))
        h, s = moves[rng.randrange(len(moves))]
        return Instance(family, (((g,), one),), (((h,), Fraction(s)),))
    if family == "unit":
        unit = A.graph_of(sorted(A.UNIT_GRAPHS)[rng.randrange(len(A.UNIT_GRAPHS))])
        unit, s = random_relabel(unit, rng, amb)
        g = _draw(rng, amb, lambda g: _clean(g) and g.n_ext and g.norm_degree(amb) >= 0)
        pair = (g, unit) if rng.random() < 0.5 else (unit, g)
        return Instance(family, ((pair, Fraction(s)),), (((g,), one),))
    if family == "permutation":
        g1 = _draw(rng, amb, lambda g: _clean(g) and g.n_ext and g.norm_degree(amb) >= 0)
        g2 = _draw(rng, amb, lambda g: _clean(g) and g.n_ext and g.norm_degree(amb) >= 0)
        s = -1 if (g1.norm_degree(amb) * g2.norm_degree(amb)) & 1 else 1
        return Instance(family, (((g1, g2), one),), (((g2, g1), Fraction(s)),))
    if family == "truncation":
        # a sequence above the top degree, or a graph of negative degree
        if rng.random() < 0.5:
            g = _draw(rng, amb, lambda g: g.norm_degree(amb) < 0)
            return Instance(family, (((g,), one),), ())
        seq = []
        while sum(x.norm_degree(amb) for x in seq) <= amb.n * amb.j - 1:
            seq.append(_draw(rng, amb, lambda g: _clean(g) and g.n_ext and g.norm_degree(amb) > 0,
                             nv_range=(2, 5)))
        return Instance(family, ((tuple(seq), one),), ())
    raise ValueError(f"unknown relation family {family!r}")


@dataclass
class FamilyReport:
    family: str
    instances: int
    failures: int
    nontrivial: int  # instances where some raw term of d(lhs) or d(rhs) is nonzero


def check_family(family: str, amb: Ambient, count: int, seed: int = 0) -> FamilyReport:
    rng = random.Random(f"{family}-{amb.n}-{amb.j}-{seed}")
    fails = nontrivial = 0
    for _ in range(count):
        inst = instance(family, rng, amb)
        dl = raw_diff(list(inst.lhs), amb)
        dr = raw_diff(list(inst.rhs), amb)
        if dl or any(True for graphs, _ in inst.lhs + inst.rhs for g in graphs for _ in raw_terms(g, amb)):
            nontrivial += 1
        if dl != dr:
            fails += 1
    return FamilyReport(family, count, fails, nontrivial)
