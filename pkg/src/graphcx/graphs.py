"""Labeled plain graphs with dashed/solid edges and their gradings.

A graph is an ordered vertex list (kinds) plus an ordered edge list.  The
orientation word of a labeled graph is E(G) followed by the reversed vertex
list; every sign in the package is measured against that word.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

EXT, INT, WHITE = 0, 1, 2
SOLID, DASHED = 0, 1

KIND_NAMES = {EXT: "ext", INT: "int", WHITE: "white"}
KIND_CODES = {v: k for k, v in KIND_NAMES.items()}
EDGE_NAMES = {SOLID: "solid", DASHED: "dashed"}
EDGE_CODES = {v: k for k, v in EDGE_NAMES.items()}


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Ambient:
    """Dimensions (n, j) of the ambient and source spaces."""

    n: int
    j: int

    def __post_init__(self):
        if self.j < 2 or self.n - self.j < 2:
            raise GraphError(f"need j >= 2 and n - j >= 2, got n={self.n}, j={self.j}")

    def edge_deg(self, kind: int) -> int:
        return self.n - 1 if kind == DASHED else self.j - 1

    def vertex_deg(self, kind: int) -> int:
        return -self.n if kind == WHITE else -self.j

    def flip_sign(self, kind: int) -> int:
        """Sign picked up when the orientation of one edge is reversed."""
        return -1 if (self.edge_deg(kind) + 1) % 2 else 1

    @property
    def parity(self) -> str:
        return ("even" if self.n % 2 == 0 else "odd") + "-" + ("even" if self.j % 2 == 0 else "odd")


def is_black(kind: int) -> bool:
    return kind != WHITE


@dataclass(frozen=True)
class Graph:
    kinds: tuple[int, ...]
    edges: tuple[tuple[int, int, int], ...]  # (edge kind, src, dst)

    @staticmethod
    def make(kinds: Iterable[int], edges: Iterable[Sequence[int]]) -> "Graph":
        g = Graph(tuple(kinds), tuple(tuple(e) for e in edges))
        g.validate()
        return g

    def validate(self) -> None:
        nv = len(self.kinds)
        for k in self.kinds:
            if k not in KIND_NAMES:
                raise GraphError(f"bad vertex kind {k}")
        for e in self.edges:
            if len(e) != 3 or e[0] not in EDGE_NAMES:
                raise GraphError(f"bad edge {e}")
            _, s, t = e
            if not (0 <= s < nv and 0 <= t < nv):
                raise GraphError(f"edge {e} out of range")
            if e[0] == SOLID and (self.kinds[s] == WHITE or self.kinds[t] == WHITE):
                raise GraphError("solid edges join black vertices only")
            if e[0] == DASHED and (self.kinds[s] == INT or self.kinds[t] == INT):
                raise GraphError("internal black vertices carry no dashed edges")

    # -- counts -----------------------------------------------------------
    @property
    def nv(self) -> int:
        return len(self.kinds)

    @property
    def ne(self) -> int:
        return len(self.edges)

    @cached_property
    def n_dashed(self) -> int:
        return sum(1 for e in self.edges if e[0] == DASHED)

    @cached_property
    def n_solid(self) -> int:
        return sum(1 for e in self.edges if e[0] == SOLID)

    @cached_property
    def n_white(self) -> int:
        return sum(1 for k in self.kinds if k == WHITE)

    @cached_property
    def n_black(self) -> int:
        return self.nv - self.n_white

    @cached_property
    def n_ext(self) -> int:
        return sum(1 for k in self.kinds if k == EXT)

    @cached_property
    def n_int(self) -> int:
        return sum(1 for k in self.kinds if k == INT)

    @cached_property
    def valences(self) -> tuple[tuple[int, int], ...]:
        """Per vertex (solid half-edges, dashed half-edges); a loop counts twice."""
        val = [[0, 0] for _ in self.kinds]
        for kind, s, t in self.edges:
            val[s][kind] += 1
            val[t][kind] += 1
        return tuple((a, b) for a, b in val)

    def components(self) -> list[list[int]]:
        parent = list(range(self.nv))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for _, s, t in self.edges:
            a, b = find(s), find(t)
            if a != b:
                parent[max(a, b)] = min(a, b)
        comps: dict[int, list[int]] = {}
        for v in range(self.nv):
            comps.setdefault(find(v), []).append(v)
        return list(comps.values())

    def is_connected(self) -> bool:
        return self.nv > 0 and len(self.components()) == 1

    # -- gradings ---------------------------------------------------------
    @property
    def order(self) -> int:
        return self.n_dashed - self.n_white

    @property
    def betti(self) -> int:
        return self.ne - self.nv + len(self.components())

    @property
    def defect(self) -> int:
        return 2 * self.n_dashed - 3 * self.n_white - self.n_black

    def degree(self, amb: Ambient) -> int:
        return ((amb.n - 1) * self.n_dashed + (amb.j - 1) * self.n_solid
                - amb.n * self.n_white - amb.j * self.n_black)

    def norm_degree(self, amb: Ambient) -> int:
        shift = amb.j + 1 if self.n_black else amb.n + 1
        return self.degree(amb) + shift

    def word(self, amb: Ambient) -> list[tuple[tuple, int]]:
        """Orientation word E(G) + reversed V(G) as (symbol, degree) pairs."""
        out = [(("e", i), amb.edge_deg(e[0])) for i, e in enumerate(self.edges)]
        out += [(("v", v), amb.vertex_deg(self.kinds[v])) for v in reversed(range(self.nv))]
        return out

    # -- structure helpers -------------------------------------------------
    def has_loop(self) -> bool:
        return any(s == t for _, s, t in self.edges)

    def has_double(self) -> bool:
        seen = set()
        for kind, s, t in self.edges:
            key = (kind, min(s, t), max(s, t))
            if key in seen:
                return True
            seen.add(key)
        return False

    def is_chord(self, i: int) -> bool:
        kind, s, t = self.edges[i]
        return kind == DASHED and s != t and self.kinds[s] != WHITE and self.kinds[t] != WHITE

    def is_multiple(self, i: int) -> bool:
        """True if edge i is part of a dashed+solid pair on the same two vertices."""
        kind, s, t = self.edges[i]
        if s == t:
            return False
        pair = {s, t}
        return any(k2 != kind and {a, b} == pair for k2, a, b in self.edges)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Vertex v goes to position perm[v]; edges keep order and direction."""
        kinds = [0] * self.nv
        for v, p in enumerate(perm):
            kinds[p] = self.kinds[v]
        edges = tuple((k, perm[s], perm[t]) for k, s, t in self.edges)
        return Graph(tuple(kinds), edges)

    def to_json(self) -> dict:
        return {
            "flavor": "plain",
            "vertices": [KIND_NAMES[k] for k in self.kinds],
            "edges": [{"kind": EDGE_NAMES[k], "src": s, "dst": t} for k, s, t in self.edges],
        }

    @staticmethod
    def from_json(obj: dict) -> "Graph":
        kinds = [KIND_CODES[v] for v in obj["vertices"]]
        edges = [(EDGE_CODES[e["kind"]], int(e["src"]), int(e["dst"])) for e in obj["edges"]]
        return Graph.make(kinds, edges)


def merged_kind(g: Graph, members: Iterable[int], new_edges: Iterable[tuple[int, int, int]], at: int) -> int:
    """Kind of the vertex obtained by merging `members`.

    Black wins over white; a merged black is external if some member was
    external or it still carries a dashed edge.
    """
    members = list(members)
    if all(g.kinds[v] == WHITE for v in members):
        return WHITE
    if any(g.kinds[v] == EXT for v in members):
        return EXT
    if any(k == DASHED and at in (s, t) for k, s, t in new_edges):
        return EXT
    return INT


def keeper(g: Graph, p: int, q: int) -> tuple[int, int]:
    """Which endpoint survives a contraction: the black one, else the smaller label."""
    if g.kinds[p] == WHITE and g.kinds[q] != WHITE:
        return q, p
    if g.kinds[q] == WHITE and g.kinds[p] != WHITE:
        return p, q
    return (p, q) if p < q else (q, p)


def contract_edge(g: Graph, i: int) -> tuple[Graph, int, int]:
    """Contract edge i.  Returns (G/e, kept vertex p, removed vertex q) in G's labels.

    The removed vertex q and edge i disappear, all other labels keep their
    relative order and the merged vertex sits at p's position.
    """
    _, s, t = g.edges[i]
    if s == t:
        raise GraphError("cannot contract a loop edge")
    p, q = keeper(g, s, t)
    vmap = [v if v < q else v - 1 for v in range(g.nv)]
    vmap[q] = vmap[p]
    edges = tuple((k, vmap[a], vmap[b]) for idx, (k, a, b) in enumerate(g.edges) if idx != i)
    kinds = [g.kinds[v] for v in range(g.nv) if v != q]
    kinds[vmap[p]] = merged_kind(g, (p, q), edges, vmap[p])
    return Graph(tuple(kinds), edges), p, q


def subset_first(g: Graph, S: Iterable[int]) -> int:
    """The distinguished vertex s1 of a subset: first black in label order, else first vertex."""
    S = sorted(S)
    for v in S:
        if g.kinds[v] != WHITE:
            return v
    return S[0]


def contract_subset(g: Graph, S: Iterable[int], keep_ext: bool = False) -> tuple[Graph, Graph]:
    """Return (G/S, G_S).

    G/S merges S into the vertex s1 (kept at its position), removing edges
    inside S.  G_S is the full subgraph on S with s1 first and the other
    members in label order.  Blacks without dashed edges are internal in both,
    except that with keep_ext the merged vertex stays external whenever S
    contains an external vertex (decorated graphs).
    """
    S = sorted(set(S))
    s1 = subset_first(g, S)
    inside = set(S)
    keep_v = [v for v in range(g.nv) if v not in inside or v == s1]
    pos = {v: i for i, v in enumerate(keep_v)}
    for v in S:
        pos[v] = pos[s1]
    out_edges = tuple((k, pos[a], pos[b]) for k, a, b in g.edges if not (a in inside and b in inside))
    kinds = [g.kinds[v] for v in keep_v]
    at = pos[s1]
    kinds[at] = _reclassify(g, S, out_edges, at)
    if keep_ext and any(g.kinds[v] == EXT for v in S):
        kinds[at] = EXT
    quotient = Graph(tuple(kinds), out_edges)

    order = [s1] + [v for v in S if v != s1]
    spos = {v: i for i, v in enumerate(order)}
    sub_edges = tuple((k, spos[a], spos[b]) for k, a, b in g.edges if a in inside and b in inside)
    sub_kinds = []
    for v in order:
        kd = g.kinds[v]
        if kd != WHITE:
            has_dashed = any(k == DASHED and spos[v] in (a, b) for k, a, b in sub_edges)
            kd = EXT if has_dashed else INT
        sub_kinds.append(kd)
    return quotient, Graph(tuple(sub_kinds), sub_edges)


def _reclassify(g: Graph, S, new_edges, at) -> int:
    if all(g.kinds[v] == WHITE for v in S):
        return WHITE
    has_dashed = any(k == DASHED and at in (a, b) for k, a, b in new_edges)
    return EXT if has_dashed else INT


def generalize(g: Graph) -> Graph:
    """Re-type blacks by the generalized rule: external iff it has a dashed edge."""
    kinds = list(g.kinds)
    for v, (_, d) in enumerate(g.valences):
        if kinds[v] != WHITE:
            kinds[v] = EXT if d else INT
    return Graph(tuple(kinds), g.edges)
