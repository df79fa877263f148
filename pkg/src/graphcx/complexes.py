"""Graph complexes PGC, PGC', HGC and HH with their differentials and projections."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .canon import canonicalize
from .enumerate import PLAIN, basis, generate
from .graphs import DASHED, WHITE, Ambient, Graph, contract_edge
from .signs import edge_contraction_sign, koszul_sign

Key = tuple  # (kinds, edges) of a canonical graph


def gkey(g: Graph) -> Key:
    return (g.kinds, g.edges)


def from_key(key: Key) -> Graph:
    return Graph(key[0], key[1])


def add_term(out: dict, g: Graph, coeff, amb: Ambient, drop_degenerate: bool) -> None:
    cg, s = canonicalize(g, amb)
    if s == 0:
        return
    if drop_degenerate and (cg.has_loop() or cg.has_double()):
        return
    key = gkey(cg)
    v = out.get(key, 0) + coeff * s
    if v:
        out[key] = v
    else:
        out.pop(key, None)


def contractible(g: Graph, i: int, kind: str) -> bool:
    ek, s, t = g.edges[i]
    if s == t:
        return False
    if kind == "hgc":
        return g.kinds[s] == WHITE and g.kinds[t] == WHITE
    if g.is_chord(i):
        return False
    if kind in ("pgc", "hh"):
        if g.is_multiple(i):
            return False
        if sum(1 for e in g.edges if e[0] == ek and {e[1], e[2]} == {s, t}) > 1:
            return False
    return True


def differential(g: Graph, amb: Ambient, kind: str) -> dict[Key, int]:
    """Sum over contractible edges e of sigma(e) * canonical(G/e)."""
    out: dict[Key, int] = {}
    drop = kind in ("pgc", "hh")
    for i in range(g.ne):
        if not contractible(g, i, kind):
            continue
        ge, _, _ = contract_edge(g, i)
        add_term(out, ge, edge_contraction_sign(g, i, amb), amb, drop)
    return out


def d_pgc(g: Graph, amb: Ambient) -> dict[Key, int]:
    return differential(g, amb, "pgc")


def d_pgc_prime(g: Graph, amb: Ambient) -> dict[Key, int]:
    return differential(g, amb, "pgc'")


def d_hgc(g: Graph, amb: Ambient) -> dict[Key, int]:
    if any(k != WHITE and (g.valences[v] != (0, 1)) for v, k in enumerate(g.kinds)):
        raise ValueError("not a hairy graph")
    return differential(g, amb, "hgc")


# -- Arnold relations for HH ------------------------------------------------

def arnold_instances(g: Graph):
    """Three-term relations w_ij w_jk + w_jk w_ki + w_ki w_ij = 0 based on paths in g.

    Yields lists of three labeled graphs; the two rewritten edges are appended
    at the end of the edge list in the stated order.
    """
    for a in range(g.ne):
        for b in range(g.ne):
            if a == b:
                continue
            ka, sa, ta = g.edges[a]
            kb, sb, tb = g.edges[b]
            if ka != kb or sa == ta or sb == tb:
                continue
            shared = {sa, ta} & {sb, tb}
            if len(shared) != 1:
                continue
            jj = shared.pop()
            ii = sa if ta == jj else ta
            kk = sb if tb == jj else tb
            rest = tuple(e for idx, e in enumerate(g.edges) if idx not in (a, b))
            terms = []
            for x, y in (((ii, jj), (jj, kk)), ((jj, kk), (kk, ii)), ((kk, ii), (ii, jj))):
                terms.append(Graph(g.kinds, rest + ((ka,) + x, (ka,) + y)))
            yield terms


def _orient_sort(edges, coeff, amb: Ambient):
    """Orient every chord small -> large and sort by (kind, large, small)."""
    out = []
    for kind, s, t in edges:
        if s == t:
            return None, 0
        if s > t:
            s, t = t, s
            coeff *= amb.flip_sign(kind)
        out.append((kind, s, t))
    order = sorted(range(len(out)), key=lambda i: (out[i][0], out[i][2], out[i][1]))
    src = [(i, amb.edge_deg(out[i][0])) for i in range(len(out))]
    coeff *= koszul_sign(src, [src[i] for i in order])
    out = [out[i] for i in order]
    if len(set(out)) < len(out):
        return None, 0  # w_ij^2 = 0
    return tuple(out), coeff


def _clash(edges, rng=None):
    """Index pairs of same-kind chords sharing their larger endpoint."""
    hits = [(a, b) for a in range(len(edges)) for b in range(a + 1, len(edges))
            if edges[a][0] == edges[b][0] and edges[a][2] == edges[b][2]]
    if not hits:
        return None
    if rng is not None:
        return rng.choice(hits)
    return max(hits, key=lambda p: (edges[p[0]][2], edges[p[0]][0], p))


def arnold_reduce(g: Graph, amb: Ambient, coeff=1, rng=None) -> dict[tuple, object]:
    """Normal form of a labeled chord monomial in the standard basis.

    Returns {sorted edge tuple: coefficient}; in each kind the chords are
    written (small, large) with pairwise distinct, increasing larger ends.
    `rng` picks the clashing pair at random (used to test confluence).
    """
    if g.n_white or g.n_int:
        raise ValueError("chord graphs have external vertices only")
    out: dict[tuple, object] = {}
    stack = [(g.edges, coeff)]
    while stack:
        edges, c = stack.pop()
        edges, c = _orient_sort(edges, c, amb)
        if edges is None or not c:
            continue
        hit = _clash(edges, rng)
        if hit is None:
            v = out.get(edges, 0) + c
            if v:
                out[edges] = v
            else:
                out.pop(edges)
            continue
        p, q = hit
        kind, a, cc = edges[p]
        b = edges[q][1]
        if a > b:
            a, b = b, a
        rest = [e for i, e in enumerate(edges) if i not in (p, q)]
        # bring the pair to the end as w_ac w_bc
        src = [(i, amb.edge_deg(edges[i][0])) for i in range(len(edges))]
        tgt = [s for i, s in enumerate(src) if i not in (p, q)]
        ip, iq = (p, q) if edges[p][1] == a else (q, p)
        c *= koszul_sign(src, tgt + [src[ip], src[iq]])
        # w_ab w_bc + w_bc w_ca + w_ca w_ab = 0, and w_bc w_ca = eps w_ac w_bc
        eps = amb.flip_sign(kind) * (-1 if amb.edge_deg(kind) & 1 else 1)
        for x, y in (((a, b), (b, cc)), ((cc, a), (a, b))):
            stack.append((tuple(rest) + ((kind,) + x, (kind,) + y), -eps * c))
    return out


@lru_cache(maxsize=None)
def hh_relations(amb: Ambient, k: int, g: int) -> dict[int, tuple[tuple[tuple[Key, int], ...], ...]]:
    """Relation vectors of the HH quotient, grouped by degree, deduplicated."""
    out: dict[int, set] = {}
    for gr in generate(PLAIN, k, g):
        if gr.n_white or gr.n_int or gr.has_loop():
            continue
        for terms in arnold_instances(gr):
            vec: dict[Key, int] = {}
            for t in terms:
                add_term(vec, t, 1, amb, True)
            if not vec:
                continue
            items = tuple(sorted(vec.items()))
            # normalize overall sign for dedup
            if items[0][1] < 0:
                items = tuple((kk, -v) for kk, v in items)
            out.setdefault(gr.degree(amb), set()).add(items)
    return {d: tuple(sorted(v)) for d, v in out.items()}


# -- complexes ------------------------------------------------------------------

@dataclass(frozen=True)
class GraphComplex:
    """One of pgc, pgc', hgc, hh at fixed (n, j, k, g)."""

    kind: str
    n: int
    j: int
    k: int
    g: int
    budget: Optional[int] = None

    @property
    def amb(self) -> Ambient:
        return Ambient(self.n, self.j)

    def _basis(self) -> dict[int, tuple[Graph, ...]]:
        return basis(self.kind, self.amb, self.k, self.g, self.budget)

    def degrees(self) -> list[int]:
        return sorted(self._basis())

    def basis(self, d: int) -> list[Key]:
        return _basis_keys(self.kind, self.amb, self.k, self.g, self.budget, d)

    def diff(self, x: Key) -> dict[Key, int]:
        return differential(from_key(x), self.amb, self.kind)

    def relations(self, d: int):
        if self.kind != "hh":
            return []
        return [dict(r) for r in hh_relations(self.amb, self.k, self.g).get(d, ())]


@lru_cache(maxsize=None)
def _basis_keys(kind, amb, k, g, budget, d) -> list[Key]:
    return [gkey(x) for x in basis(kind, amb, k, g, budget).get(d, ())]


# -- projections ------------------------------------------------------------

def project(x: Key, src: str, dst: str) -> dict[Key, int]:
    """Image of a basis element under the comparison maps between complexes."""
    g = from_key(x)
    if (src, dst) == ("pgc'", "pgc"):
        keep = not g.has_loop() and not g.has_double()
    elif (src, dst) in (("pgc", "hh"), ("pgc'", "hh")):
        keep = not g.n_white and not g.n_int and not g.has_loop() and not g.has_double()
    elif (src, dst) == ("pgc'", "hgc"):
        keep = g.n_int == 0 and g.n_solid == 0 and all(
            k == WHITE or g.valences[v] == (0, 1) for v, k in enumerate(g.kinds))
    else:
        raise ValueError(f"unsupported projection {src} -> {dst}")
    return {x: 1} if keep else {}


def dashed_count(g: Graph) -> int:
    return sum(1 for e in g.edges if e[0] == DASHED)
