"""Top (defect-0) homology of 2- and 3-loop hairy graphs by invariant theory.

Oracles: spaces of polynomials modulo the IHX linear relations and the
automorphism actions, measured by exact rank.  Generating functions of the
stated polynomial rings serve as a second, closed-form oracle.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Sequence

from .linalg import nullspace, rank_rows, SparseMatQ

Poly = dict  # exponent tuple -> Fraction


# -- tiny polynomial toolkit ---------------------------------------------------

def monomials(nvars: int, deg: int) -> list[tuple[int, ...]]:
    if nvars == 1:
        return [(deg,)]
    out = []
    for a in range(deg, -1, -1):
        for rest in monomials(nvars - 1, deg - a):
            out.append((a,) + rest)
    return out


def pmul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def ppow(a: Poly, k: int, nvars: int) -> Poly:
    out: Poly = {tuple([0] * nvars): Fraction(1)}
    for _ in range(k):
        out = pmul(out, a)
    return out


def padd(a: Poly, b: Poly, scale=1) -> Poly:
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, 0) + scale * c
    return {e: c for e, c in out.items() if c}


def linear(coeffs: Sequence, nvars: int) -> Poly:
    out = {}
    for i, c in enumerate(coeffs):
        if c:
            e = [0] * nvars
            e[i] = 1
            out[tuple(e)] = Fraction(c)
    return out


def substitute(exps: Sequence[int], forms: Sequence[Poly], nvars: int) -> Poly:
    """prod_i forms[i]^exps[i]."""
    out: Poly = {tuple([0] * nvars): Fraction(1)}
    for k, f in zip(exps, forms):
        if k:
            out = pmul(out, ppow(f, k, nvars))
    return out


def series(num_shift: int, factors: Sequence[int], upto: int) -> list[int]:
    """Coefficients of t^shift / prod (1 - t^f) up to t^upto."""
    c = [0] * (upto + 1)
    if num_shift <= upto:
        c[num_shift] = 1
    for f in factors:
        for i in range(f, upto + 1):
            c[i] += c[i - f]
    return c


def _rank_of(vectors: Iterable[Poly], index: dict) -> int:
    rows = []
    for v in vectors:
        row = {index[e]: c for e, c in v.items() if c}
        if row:
            rows.append(row)
    return rank_rows(rows)


# -- two loops ---------------------------------------------------------------

def _perm_sign(p: Sequence[int]) -> int:
    s = 1
    p = list(p)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                s = -s
    return s


@lru_cache(maxsize=None)
def two_loop_dim(parity: str, degree: int) -> int:
    """dim of Q[x1,x2,x3]/(x1+x2+x3) in `degree` modulo the Aut(Theta) relations.

    x^p = sign(s)^{n+1} x_s^p for s in S3, and x^p = (-x)^p.
    parity: "odd-odd" or "even-even" (only n's parity enters).
    """
    n_odd = parity.startswith("odd")
    # reduced coordinates u1=x1, u2=x2, x3=-u1-u2
    xs = [linear([1, 0], 2), linear([0, 1], 2), linear([-1, -1], 2)]
    basis = monomials(2, degree)
    idx = {e: i for i, e in enumerate(basis)}
    rels = []
    for m in monomials(3, degree):
        base = substitute(m, xs, 2)
        for sigma in permutations(range(3)):
            chi = 1 if n_odd else _perm_sign(sigma)
            img = substitute(m, [xs[sigma[i]] for i in range(3)], 2)
            rels.append(padd(base, img, -chi))
        neg = substitute(m, [{e: -c for e, c in x.items()} for x in xs], 2)
        rels.append(padd(base, neg, -1))
    return len(basis) - _rank_of(rels, idx)


def two_loop_series(parity: str, upto: int) -> list[int]:
    """Closed form: Q[s2, s3^2] (odd-odd) or D*s3*Q[s2, s3^2] (even-even), D*s3 of degree 6."""
    shift = 0 if parity.startswith("odd") else 6
    return series(shift, (2, 6), upto)


# -- three loops ---------------------------------------------------------------

X_IHX = [(1, -1, 0, 0, 0, -1), (-1, 0, 1, 0, -1, 0), (0, 0, 0, 1, 1, 1), (0, -1, 1, 1, 0, 0)]
Z_IHX = [(1, 1, 0, 0, 1, 0), (0, 0, 1, 1, -1, 0), (1, 1, 0, 0, 0, 1), (0, 0, 1, 1, 0, -1)]
Y_OF_X = [(1, 0, 0, 0, -1, 1), (0, 1, 0, 1, 0, -1), (0, 0, 1, -1, 1, 0), (-1, -1, -1, 0, 0, 0)]


def _solve_in_quotient(target, gens, rels):
    """Coefficients c with target - sum c_a gens[a] in span(rels) (unique if gens independent mod rels)."""
    cols = [list(g) for g in gens] + [list(r) for r in rels]
    # solve sum_a c_a gens[a] + sum_b d_b rels[b] = target
    ncols = len(cols)
    mat = {}
    for ci, col in enumerate(cols):
        for ri, v in enumerate(col):
            if v:
                mat[(ri, ci)] = v
    aug = SparseMatQ(6, ncols + 1, dict(mat))
    for ri, v in enumerate(target):
        if v:
            aug.entries[(ri, ncols)] = v
    ns = nullspace(aug)
    for vec in ns:
        if vec[ncols] != 0:
            scale = -1 / vec[ncols]
            return [vec[a] * scale for a in range(len(gens))]
    raise ValueError("not solvable")


@lru_cache(maxsize=None)
def x_in_y() -> tuple[tuple[Fraction, ...], ...]:
    """Each x_i, modulo the IHX relations, as a combination of y1, y2, y3."""
    gens = Y_OF_X[:3]
    out = []
    for i in range(6):
        e = [0] * 6
        e[i] = 1
        out.append(tuple(_solve_in_quotient(e, gens, X_IHX)))
    return tuple(out)


def change_of_variables_rank() -> tuple[int, int]:
    """(rank of x-space modulo IHX, rank of the y forms modulo IHX); both must be 3."""
    r_quot = 6 - rank_rows([{i: v for i, v in enumerate(r) if v} for r in X_IHX])
    with_y = rank_rows([{i: v for i, v in enumerate(r) if v} for r in X_IHX + Y_OF_X])
    base = rank_rows([{i: v for i, v in enumerate(r) if v} for r in X_IHX])
    return r_quot, with_y - base


@lru_cache(maxsize=None)
def three_loop_dim(parity: str, degree: int) -> int:
    """dim of the g=3 top space in `degree` (= number of hairs).

    Space: y-polynomials (y4 = -y1-y2-y3) plus 4-variable z-monomials.
    Relations: S4 on y with sign^deg, D8 x Z2 on z, z-sum, and (*) linking z to x.
    """
    n_odd = parity.startswith("odd")
    eps = 1 if n_odd else -1  # (-1)^{n+1}
    ys = [linear([1, 0, 0], 3), linear([0, 1, 0], 3), linear([0, 0, 1], 3), linear([-1, -1, -1], 3)]
    xy = x_in_y()
    xs = [linear(list(c), 3) for c in xy]
    ybasis = [("y",) + e for e in monomials(3, degree)]
    zbasis = [("z",) + e for e in monomials(4, degree)]
    idx = {b: i for i, b in enumerate(ybasis + zbasis)}

    def ypoly(p: Poly) -> dict:
        return {("y",) + e: c for e, c in p.items()}

    def zmono(e, c=1) -> dict:
        return {("z",) + tuple(e): Fraction(c)}

    def vadd(a, b, s=1):
        out = dict(a)
        for k, v in b.items():
            out[k] = out.get(k, 0) + s * v
        return {k: v for k, v in out.items() if v}

    rels = []
    for m in monomials(4, degree):
        base = ypoly(substitute(m, ys, 3))
        for sigma in permutations(range(4)):
            chi = _perm_sign(sigma) ** degree
            img = ypoly(substitute(m, [ys[sigma[i]] for i in range(4)], 3))
            rels.append(vadd(img, base, -chi))
    for m in monomials(4, degree):
        p, q, r, s = m
        zm = zmono(m)
        rels.append(vadd(zm, zmono(m, eps * (-1) ** degree), -1))
        rels.append(vadd(zm, zmono((q, p, r, s), eps), -1))
        rels.append(vadd(zm, zmono((p, q, s, r), eps), -1))
        rels.append(vadd(zm, zmono((s, r, q, p)), -1))
        # (*): z1^p z2^q z3^r z4^s = x1^p (-x2)^s x4^r x5^q + eps x1^q (-x2)^s x4^r x5^p
        negx2 = {e: -c for e, c in xs[1].items()}
        t1 = substitute((p, s, r, q), [xs[0], negx2, xs[3], xs[4]], 3)
        t2 = substitute((q, s, r, p), [xs[0], negx2, xs[3], xs[4]], 3)
        rhs = ypoly(padd(t1, t2, eps))
        rels.append(vadd(zm, rhs, -1))
    for m in monomials(4, degree - 1) if degree >= 1 else []:
        v = {}
        for i in range(4):
            e = list(m)
            e[i] += 1
            v = vadd(v, zmono(e))
        rels.append(v)
    return len(idx) - _rank_of(rels, idx)


def three_loop_series(parity: str, upto: int) -> list[int]:
    """Closed form for odd-odd: Q[t2, t3^2, t4]."""
    if not parity.startswith("odd"):
        raise ValueError("closed form stated for odd-odd only at g=3 in this comparison")
    return series(0, (2, 4, 6), upto)
