"""Koszul signs of graded words and the contraction signs built from them."""
from __future__ import annotations

from typing import Hashable, Sequence

from .graphs import DASHED, WHITE, Ambient, Graph, contract_edge, contract_subset, subset_first

Symbol = tuple[Hashable, int]  # (identifier, degree)


class SignError(ValueError):
    pass


def koszul_sign(source: Sequence[Symbol], target: Sequence[Symbol]) -> int:
    """Sign of transporting `source` into `target` by adjacent graded swaps.

    Only pairs of odd symbols that change relative order contribute.
    """
    if len(source) != len(target):
        raise SignError("target is not a permutation of source")
    pos = {}
    for i, sym in enumerate(target):
        if sym[0] in pos:
            raise SignError(f"duplicate symbol {sym[0]!r}")
        pos[sym[0]] = (i, sym[1])
    odd = []
    for sym in source:
        hit = pos.get(sym[0])
        if hit is None or hit[1] != sym[1]:
            raise SignError(f"symbol {sym!r} missing from target")
        if sym[1] % 2:
            odd.append(hit[0])
    inv = 0
    for a in range(len(odd)):
        for b in range(a + 1, len(odd)):
            if odd[a] > odd[b]:
                inv += 1
    return -1 if inv % 2 else 1


def bubble_sign(source: Sequence[Symbol], target: Sequence[Symbol]) -> int:
    """Same as koszul_sign, computed literally by bubble transport (test oracle)."""
    order = {s[0]: i for i, s in enumerate(target)}
    word = list(source)
    sign = 1
    changed = True
    while changed:
        changed = False
        for i in range(len(word) - 1):
            if order[word[i][0]] > order[word[i + 1][0]]:
                if word[i][1] % 2 and word[i + 1][1] % 2:
                    sign = -sign
                word[i], word[i + 1] = word[i + 1], word[i]
                changed = True
    return sign


MU = ("mu",)
IOTA = ("iota",)
IOTA1 = ("iota_s1",)


def edge_contraction_sign(g: Graph, i: int, amb: Ambient) -> int:
    """sigma(e) from the permutation definition.

    mu + E(G) + rev V(G)  ->  E(G/e) + rev V(G/e) + (mu, e oriented p->q, q),
    where q is the removed endpoint; eta accounts for the stored direction.
    """
    ge, p, q = contract_edge(g, i)
    kind, s, t = g.edges[i]
    eta = 1 if (s, t) == (p, q) else amb.flip_sign(kind)
    src = [(MU, 1)] + [(("e", k), amb.edge_deg(e[0])) for k, e in enumerate(g.edges)]
    src += [(("v", v), amb.vertex_deg(g.kinds[v])) for v in reversed(range(g.nv))]
    kept_e = [k for k in range(g.ne) if k != i]
    kept_v = [v for v in range(g.nv) if v != q]
    tgt = [(("e", k), amb.edge_deg(g.edges[k][0])) for k in kept_e]
    tgt += [(("v", v), amb.vertex_deg(g.kinds[v])) for v in reversed(kept_v)]
    tgt += [(MU, 1), (("e", i), amb.edge_deg(kind)), (("v", q), amb.vertex_deg(g.kinds[q]))]
    return eta * koszul_sign(src, tgt)


def edge_contraction_sign_closed(g: Graph, i: int, amb: Ambient) -> int:
    """sigma(e) = (-1)^{|G|+1} (-1)^{deg V(G/e)} Phi(e) tau(e) eta(e), case-split closed form.

    Assumes the standard label conventions: solid edges before dashed ones,
    blacks before whites.  Labels below are 1-based as in the printed formulas.
    """
    n, j = amb.n, amb.j
    kind, s, t = g.edges[i]
    ge, p, q = contract_edge(g, i)
    eta = 1 if (s, t) == (p, q) else amb.flip_sign(kind)
    n_solid = g.n_solid
    deg_e_quot = ge.degree(amb) - sum(amb.vertex_deg(k) for k in ge.kinds)
    deg_v_quot = sum(amb.vertex_deg(k) for k in ge.kinds)
    ii = i + 1
    if kind != DASHED:
        tau_exp = (j - 1) * (ii - 1) + (j - 1) * deg_e_quot
    else:
        tau_exp = ((n - 1) * (ii - n_solid - 1) + (j - 1) * (n - 1) * n_solid
                   + (n - 1) * deg_e_quot)
    qq = q + 1
    if g.kinds[q] != WHITE:
        phi_exp = j * (qq - 1) + j * deg_v_quot
    else:
        nb = g.n_black
        phi_exp = n * (qq - nb - 1) + j * n * nb + n * deg_v_quot
    exp = g.degree(amb) + 1 + deg_v_quot + tau_exp + phi_exp
    return eta * (-1 if exp % 2 else 1)


def tau_phi(g: Graph, i: int, amb: Ambient) -> int:
    """tau(e) * Phi(e) from the closed forms (used for the even-even remark)."""
    n, j = amb.n, amb.j
    kind = g.edges[i][0]
    ge, p, q = contract_edge(g, i)
    deg_e_quot = ge.degree(amb) - sum(amb.vertex_deg(k) for k in ge.kinds)
    deg_v_quot = sum(amb.vertex_deg(k) for k in ge.kinds)
    ii, qq, ns, nb = i + 1, q + 1, g.n_solid, g.n_black
    if kind != DASHED:
        tau_exp = (j - 1) * (ii - 1) + (j - 1) * deg_e_quot
    else:
        tau_exp = (n - 1) * (ii - ns - 1) + (j - 1) * (n - 1) * ns + (n - 1) * deg_e_quot
    if g.kinds[q] != WHITE:
        phi_exp = j * (qq - 1) + j * deg_v_quot
    else:
        phi_exp = n * (qq - nb - 1) + j * n * nb + n * deg_v_quot
    return -1 if (tau_exp + phi_exp) % 2 else 1


def shift_deg(g: Graph, amb: Ambient) -> int:
    """Degree of the auxiliary iota_{s1} symbol: j if g has a black vertex, else n."""
    return amb.j if g.n_black else amb.n


def subset_contraction_sign(g: Graph, S: Sequence[int], amb: Ambient) -> int:
    """sigma(S) for the hidden-face algebra differential.

    -(mu + E(G) + rev V(G) + iota_s1 + iota)  ->
        E(G/S) + rev V(G/S) + iota_s1 + iota + (E(G_S) + rev V(G_S minus s1) + mu).
    """
    S = sorted(set(S))
    if len(S) < 2 or any(not 0 <= v < g.nv for v in S):
        raise SignError("S must have at least two valid vertices")
    s1 = subset_first(g, S)
    inside = set(S)
    ed = [amb.edge_deg(e[0]) for e in g.edges]
    vd = [amb.vertex_deg(k) for k in g.kinds]
    sh = shift_deg(g, amb)
    src = [(MU, 1)] + [(("e", k), ed[k]) for k in range(g.ne)]
    src += [(("v", v), vd[v]) for v in reversed(range(g.nv))]
    src += [(IOTA1, sh), (IOTA, 1)]
    in_e = [k for k, (_, a, b) in enumerate(g.edges) if a in inside and b in inside]
    out_e = [k for k in range(g.ne) if k not in set(in_e)]
    quot_v = [v for v in range(g.nv) if v not in inside or v == s1]
    sub_rest = [v for v in S if v != s1]
    tgt = [(("e", k), ed[k]) for k in out_e]
    tgt += [(("v", v), vd[v]) for v in reversed(quot_v)]
    tgt += [(IOTA1, sh), (IOTA, 1)]
    tgt += [(("e", k), ed[k]) for k in in_e]
    tgt += [(("v", v), vd[v]) for v in reversed(sub_rest)]
    tgt += [(MU, 1)]
    return -koszul_sign(src, tgt)


def contraction_pieces(g: Graph, S: Sequence[int]) -> tuple[Graph, Graph]:
    return contract_subset(g, S)


# -- the two exchange identities of subset contractions ------------------------------

def _positions_after(g: Graph, S: Sequence[int]) -> dict[int, int]:
    """Label of each vertex of g in G/S (members of S go to the merged vertex)."""
    s1 = subset_first(g, S)
    keep = [v for v in range(g.nv) if v not in set(S) or v == s1]
    pos = {v: i for i, v in enumerate(keep)}
    for v in S:
        pos[v] = pos[s1]
    return pos


def disjoint_exchange(g: Graph, S: Sequence[int], T: Sequence[int], amb: Ambient) -> tuple[int, int]:
    """Both sides of s(S,G) s(T,G/S) = -(-1)^{[G_S][G_T]} s(T,G) s(S,G/T) for disjoint S, T."""
    if set(S) & set(T):
        raise SignError("S and T must be disjoint")
    q_s, g_s = contract_subset(g, S)
    q_t, g_t = contract_subset(g, T)
    ps, pt = _positions_after(g, S), _positions_after(g, T)
    lhs = subset_contraction_sign(g, S, amb) * subset_contraction_sign(q_s, [ps[v] for v in T], amb)
    e = g_s.norm_degree(amb) * g_t.norm_degree(amb)
    rhs = -(-1 if e & 1 else 1) * subset_contraction_sign(g, T, amb) * subset_contraction_sign(
        q_t, [pt[v] for v in S], amb)
    return lhs, rhs


def nested_exchange(g: Graph, S: Sequence[int], T: Sequence[int], amb: Ambient) -> tuple[int, int]:
    """Both sides of s(S,G) s(T/S,G/S) = -(-1)^{[G/T]} s(T,G) s(S,G_T) for S strictly inside T."""
    if not set(S) < set(T):
        raise SignError("S must be a proper subset of T")
    q_s, _ = contract_subset(g, S)
    q_t, g_t = contract_subset(g, T)
    ps = _positions_after(g, S)
    t1 = subset_first(g, T)
    order = [t1] + [v for v in sorted(T) if v != t1]
    in_t = {v: i for i, v in enumerate(order)}
    lhs = subset_contraction_sign(g, S, amb) * subset_contraction_sign(q_s, sorted({ps[v] for v in T}), amb)
    e = q_t.norm_degree(amb)
    rhs = -(-1 if e & 1 else 1) * subset_contraction_sign(g, T, amb) * subset_contraction_sign(
        g_t, [in_t[v] for v in S], amb)
    return lhs, rhs
