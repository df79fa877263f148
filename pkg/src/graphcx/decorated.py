"""The decorated graph complex DGC = plain graphs whose externals carry bar words.

A labeled decorated graph is a plain part P together with one basis word of Z
per external vertex, listed in label order.  Its orientation word is
E(P), D, rev V(P) with D = z_1 (x) ... (x) z_l.  Canonical form: canonical
plain part, then the lexicographically smallest decoration tuple over the
automorphism group of the plain part.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Optional

from . import algebra as A
from . import bar as Z
from .canon import _search, relabel_sign
from .enumerate import Family, admissible, generate
from .graphs import DASHED, EXT, INT, SOLID, WHITE, Ambient, Graph, contract_subset, subset_first
from .signs import koszul_sign, subset_contraction_sign

DKey = tuple  # ((kinds, edges), decorations)
DElem = dict  # DKey -> Fraction


def _add(out: DElem, key, c) -> None:
    if not c:
        return
    v = out.get(key, 0) + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


def _wdeg(w, amb: Ambient) -> int:
    return Z.word_degree(w, amb)


def _ext_positions(g: Graph) -> list[int]:
    return [v for v in range(g.nv) if g.kinds[v] == EXT]


# -- automorphisms -------------------------------------------------------------

@lru_cache(maxsize=100_000)
def automorphisms(kinds: tuple, edges: tuple) -> tuple[tuple[int, ...], ...]:
    """All vertex permutations preserving kinds and the undirected edge multiset."""
    nv = len(kinds)
    mult: dict = {}
    for k, s, t in edges:
        key = (k, min(s, t), max(s, t))
        mult[key] = mult.get(key, 0) + 1

    def m(k, a, b):
        return mult.get((k, min(a, b), max(a, b)), 0)

    sig = []
    for v in range(nv):
        sig.append((kinds[v], tuple(sorted((k, 1 if s == t else 0) for k, s, t in edges if v in (s, t)))))
    out = []
    img = [-1] * nv
    used = [False] * nv

    def rec(v):
        if v == nv:
            out.append(tuple(img))
            return
        for w in range(nv):
            if used[w] or sig[w] != sig[v]:
                continue
            ok = True
            for u in range(v + 1):
                iu = w if u == v else img[u]
                for k in (SOLID, DASHED):
                    if m(k, u, v) != m(k, iu, w):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                img[v] = w
                used[w] = True
                rec(v + 1)
                used[w] = False
                img[v] = -1

    rec(0)
    return tuple(out)


# -- canonical form ------------------------------------------------------------

def _deco_perm_sign(decos, order, amb) -> int:
    """Koszul sign of listing decorations in `order` (a permutation of their indices)."""
    src = [(i, _wdeg(w, amb)) for i, w in enumerate(decos)]
    tgt = [src[i] for i in order]
    return koszul_sign(src, tgt)


def canonicalize(plain: Graph, decos: tuple, amb: Ambient) -> tuple[Optional[DKey], int]:
    """(canonical key, sign) of a labeled decorated graph; (None, 0) if it vanishes.

    decos lists one word per external vertex of `plain` in label order.
    """
    exts = _ext_positions(plain)
    if len(exts) != len(decos):
        raise ValueError("one decoration per external vertex required")
    if plain.has_loop() or plain.has_double():
        return None, 0
    best, _ = _search(plain, amb, stop_on_zero=False)
    cp, s0 = relabel_sign(plain, best[1], amb)
    perm = best[1]
    # decorations carried to the canonical labels
    new_exts = _ext_positions(cp)
    where = {perm[v]: i for i, v in enumerate(exts)}
    order = [where[p] for p in new_exts]
    d1 = tuple(decos[i] for i in order)
    s1 = _deco_perm_sign(decos, order, amb)
    # minimize over the automorphism group of the canonical plain part
    best_t, best_s, zero = None, 0, False
    seen: dict = {}
    for aut in automorphisms(cp.kinds, cp.edges):
        _, sa = relabel_sign(cp, list(aut), amb)
        w2 = {aut[p]: i for i, p in enumerate(new_exts)}
        order2 = [w2[p] for p in new_exts]
        t = tuple(d1[i] for i in order2)
        s = sa * _deco_perm_sign(d1, order2, amb)
        old = seen.get(t)
        if old is None:
            seen[t] = s
        elif old != s:
            zero = True
            break
        if best_t is None or t < best_t:
            best_t, best_s = t, s
    if zero:
        return None, 0
    return ((cp.kinds, cp.edges), best_t), s0 * s1 * best_s


def graph_of(key: DKey) -> tuple[Graph, tuple]:
    return Graph(*key[0]), key[1]


def degree(key: DKey, amb: Ambient) -> int:
    p, decos = graph_of(key)
    return p.degree(amb) + sum(_wdeg(w, amb) for w in decos)


def order_betti(key: DKey) -> tuple[int, int]:
    p, decos = graph_of(key)
    k, g = p.order, p.betti
    for a0, letters in decos:
        for seq in (a0,) + letters:
            kk, gg = A.order_betti(seq)
            k += kk
            g += gg
    return k, g


def filtration_level(key: DKey) -> int:
    """Minus the number of plain vertices."""
    return -len(key[0][0])


def is_admissible(plain: Graph, decos: tuple) -> bool:
    """Every external needs a dashed edge or a nontrivial decoration."""
    val = plain.valences
    for v, w in zip(_ext_positions(plain), decos):
        if val[v][1] == 0 and w == Z.EMPTY_WORD:
            return False
    for v, kind in enumerate(plain.kinds):
        s, d = val[v]
        if kind == WHITE and (d < 3 or s):
            return False
        if kind == INT and (s < 3 or d):
            return False
    return True


def add_term(out: DElem, plain: Graph, decos: tuple, coeff, amb: Ambient) -> None:
    if not coeff or not is_admissible(plain, decos):
        return
    key, s = canonicalize(plain, decos, amb)
    if key is not None:
        _add(out, key, coeff * s)


def add_zterm(out: DElem, plain: Graph, zs: list, coeff, amb: Ambient) -> None:
    """Add plain (x) (z_1 (x) ... (x) z_l) with each z_i a ZElem; expands multilinearly."""
    terms = [((), Fraction(coeff))]
    for z in zs:
        nxt = []
        for t, c in terms:
            for w, cw in z.items():
                nxt.append((t + (w,), c * cw))
        terms = nxt
    for t, c in terms:
        add_term(out, plain, t, c, amb)


# -- differentials -------------------------------------------------------------

def _edge_deg(g: Graph, amb: Ambient) -> int:
    return sum(amb.edge_deg(k) for k, _, _ in g.edges)


def _vertex_deg(g: Graph, amb: Ambient) -> int:
    return sum(amb.vertex_deg(k) for k in g.kinds)


def extra_sign(plain: Graph, S, decos, a_deg: int, sub: Graph, quot: Graph, amb: Ambient) -> int:
    """Correction of the algebra sign sigma(S) for a decorated graph.

    mu and the edges of G_S move past D: (-1)^{|D|(1 + deg E(G_S))}.  The
    piece a = G_S travels from the end of the word past iota, iota_s1 and
    rev V(P/S) to the front of D: (-1)^{|a|(j + 1 + deg V(P/S))}.  (Its
    passage through the decorations themselves is the tail sign of the
    right action.)
    """
    ddeg = sum(_wdeg(w, amb) for w in decos)
    exp = ddeg * (1 + _edge_deg(sub, amb)) + a_deg * (amb.j + 1 + _vertex_deg(quot, amb))
    return -1 if exp & 1 else 1


def d_horizontal(key: DKey, amb: Ambient) -> DElem:
    return dict(_d_horizontal(key, amb))


@lru_cache(maxsize=200_000)
def _d_horizontal(key: DKey, amb: Ambient):
    plain, decos = graph_of(key)
    exts = _ext_positions(plain)
    slot = {v: i for i, v in enumerate(exts)}
    out: DElem = {}
    for size in range(2, plain.nv + 1):
        for S in combinations(range(plain.nv), size):
            quot, sub = contract_subset(plain, S, keep_ext=True)
            if not sub.is_connected():
                continue
            seq, sa = A.normalize_graphs((sub,), amb)
            if seq is None:
                continue
            sign = subset_contraction_sign(plain, S, amb) * sa
            in_s = [slot[v] for v in S if v in slot]
            if not in_s:
                if seq != A.UNIT:
                    raise ValueError("non-scalar piece contracted away from the externals")
                add_term(out, quot, decos, sign * extra_sign(plain, S, decos, 0, sub, quot, amb), amb)
                continue
            # m_S: gather the decorations of S at the merged vertex, multiply there
            s1 = subset_first(plain, S)
            keep = [v for v in range(plain.nv) if v not in S or v == s1]
            groups = []
            for v in keep:
                if v == s1:
                    groups.append(in_s)
                elif v in slot:
                    groups.append([slot[v]])
            at = keep.index(s1)
            at = sum(1 for v in keep[:at] if v in slot)
            flat = [i for grp in groups for i in grp]
            sign *= _deco_perm_sign(decos, flat, amb)
            prod = {decos[in_s[0]]: Fraction(1)}
            for i in in_s[1:]:
                prod = Z.product(prod, {decos[i]: Fraction(1)}, amb)
            # the contracted piece acts on the merged slot from the left
            a_deg = A.seq_degree(seq, amb)
            tail = sum(_wdeg(decos[i], amb) for grp in groups[at:] for i in grp)
            if a_deg * tail & 1:
                sign = -sign
            prod = Z.product({(seq, ()): Fraction(1)}, prod, amb)
            sign *= extra_sign(plain, S, decos, a_deg, sub, quot, amb)
            zs = [prod if grp is in_s else {decos[grp[0]]: Fraction(1)} for grp in groups]
            add_zterm(out, quot, zs, sign, amb)
    return tuple(sorted(out.items()))


def d_vertical(key: DKey, amb: Ambient) -> DElem:
    plain, decos = graph_of(key)
    out: DElem = {}
    base = -1 if _edge_deg(plain, amb) & 1 else 1
    pre = 0
    for i, w in enumerate(decos):
        dz = Z.diff_word(w, amb)
        if dz:
            sgn = base * (-1 if pre & 1 else 1)
            zs = [{x: Fraction(1)} for x in decos]
            zs[i] = dz
            add_zterm(out, plain, zs, sgn, amb)
        pre += _wdeg(w, amb)
    return out


def dgc_diff(key: DKey, amb: Ambient) -> DElem:
    out = dict(_d_horizontal(key, amb))
    for k2, c in d_vertical(key, amb).items():
        _add(out, k2, c)
    return out


def apply(fn, x: DElem, amb: Ambient) -> DElem:
    out: DElem = {}
    for k, c in x.items():
        for k2, c2 in fn(k, amb).items():
            _add(out, k2, c * c2)
    return out


# -- bases -----------------------------------------------------------------------

def _nontrivial_words(amb: Ambient, k: int, g: int) -> tuple:
    if k == 0 and g == 0:
        return ()
    return tuple(w for ws in Z.basis(amb, k, g).values() for w in ws)


@lru_cache(maxsize=None)
def _decoration_tuples(amb: Ambient, l: int, need: tuple, k: int, g: int) -> tuple:
    """Tuples of l words with total (k, g); positions in `need` must be nontrivial."""
    out = []

    def rec(i, kk, gg, acc):
        if i == l:
            if kk == 0 and gg == 0:
                out.append(tuple(acc))
            return
        if i not in need:
            acc.append(Z.EMPTY_WORD)
            rec(i + 1, kk, gg, acc)
            acc.pop()
        for k1 in range(1, kk + 1):
            for g1 in range(0, gg + 1):
                for w in _nontrivial_words(amb, k1, g1):
                    acc.append(w)
                    rec(i + 1, kk - k1, gg - g1, acc)
                    acc.pop()

    rec(0, k, g, [])
    return tuple(out)


@lru_cache(maxsize=None)
def plain_parts(k: int, g: int, dashless: int) -> tuple[Graph, ...]:
    """Connected plain parts of order k and loop order g with up to `dashless` dashless externals."""
    fam = Family(max_dashless=dashless)
    return tuple(p for p in generate(fam, k, g) if not p.has_loop() and not p.has_double())


@lru_cache(maxsize=None)
def basis(amb: Ambient, k: int, g: int) -> dict[int, tuple[DKey, ...]]:
    """Nonzero canonical decorated graphs of DGC(k, g) grouped by degree."""
    keys = set()
    for kp in range(0, k + 1):
        for gp in range(0, g + 1):
            kd, gd = k - kp, g - gp
            for p in plain_parts(kp, gp, kd):
                exts = _ext_positions(p)
                val = p.valences
                need = tuple(i for i, v in enumerate(exts) if val[v][1] == 0)
                if len(need) > kd:
                    continue
                for decos in _decoration_tuples(amb, len(exts), need, kd, gd):
                    if not is_admissible(p, decos):
                        continue
                    key, s = canonicalize(p, decos, amb)
                    if key is not None:
                        keys.add(key)
    out: dict[int, list] = {}
    for key in keys:
        out.setdefault(degree(key, amb), []).append(key)
    return {d: tuple(sorted(v)) for d, v in sorted(out.items())}


@dataclass(frozen=True)
class DecoratedComplex:
    """DGC(k, g); with `level` set, the d_V complex of plain parts with -level vertices."""

    n: int
    j: int
    k: int
    g: int
    level: Optional[int] = None

    @property
    def amb(self) -> Ambient:
        return Ambient(self.n, self.j)

    def _b(self):
        b = basis(self.amb, self.k, self.g)
        if self.level is None:
            return b
        return _level_basis(self.amb, self.k, self.g, self.level)

    def degrees(self) -> list[int]:
        return sorted(self._b())

    def basis(self, d: int):
        return list(self._b().get(d, ()))

    def diff(self, x):
        if self.level is None:
            return dgc_diff(x, self.amb)
        return d_vertical(x, self.amb)


@lru_cache(maxsize=None)
def _level_basis(amb, k, g, level):
    out = {}
    for d, ks in basis(amb, k, g).items():
        sel = tuple(x for x in ks if filtration_level(x) == level)
        if sel:
            out[d] = sel
    return out


def levels(amb: Ambient, k: int, g: int) -> list[int]:
    return sorted({filtration_level(x) for ks in basis(amb, k, g).values() for x in ks})


def project_to_plain(key: DKey) -> dict:
    """DGC -> PGC: keep trivially decorated graphs whose plain part is admissible."""
    plain, decos = graph_of(key)
    if any(w != Z.EMPTY_WORD for w in decos):
        return {}
    if not admissible(plain, Family()):
        return {}
    return {key[0]: 1}


def from_plain(plain: Graph, amb: Ambient) -> DElem:
    """A plain graph as a trivially decorated graph."""
    out: DElem = {}
    add_term(out, plain, tuple(Z.EMPTY_WORD for _ in _ext_positions(plain)), 1, amb)
    return out


def to_json(key: DKey) -> dict:
    plain, decos = graph_of(key)
    return {"plain": plain.to_json(), "decorations": [Z.word_to_json(w) for w in decos]}
