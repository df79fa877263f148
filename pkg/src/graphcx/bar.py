"""The two-sided bar complex Z = A (x)_tau BA of the hidden-face algebra.

A basis word is (a0, (a1, ..., ak)) with every a_i a basis sequence of A and
the letters a1..ak different from the unit.  |word| = sum |a_i| - k.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from . import algebra as A
from .graphs import Ambient

Word = tuple  # (a0: Seq, letters: tuple[Seq, ...])
ZElem = dict  # Word -> Fraction

EMPTY_WORD: Word = (A.UNIT, ())

# Merging letters a_{i-1} a_i (i = 2..k) carries (-1)^{|a0| + nu_{i-1} + 1},
# the same rule as d_tau, which merges a0 a1 with (-1)^{|a0| + 1}.


def word_degree(w: Word, amb: Ambient) -> int:
    a0, letters = w
    return A.seq_degree(a0, amb) + sum(A.seq_degree(a, amb) - 1 for a in letters)


def _add(out: ZElem, w: Word, c) -> None:
    if not c:
        return
    v = out.get(w, 0) + c
    if v:
        out[w] = v
    else:
        out.pop(w, None)


def _nu(letters, i, amb) -> int:
    """nu_i = sum_{l=1..i} (|a_l| - 1)."""
    return sum(A.seq_degree(a, amb) - 1 for a in letters[:i])


@lru_cache(maxsize=200_000)
def _diff_word(w: Word, amb: Ambient) -> tuple[tuple[Word, Fraction], ...]:
    a0, letters = w
    d0 = A.seq_degree(a0, amb)
    out: ZElem = {}
    # d_A on a0
    for s, c in A.diff_seq(a0, amb).items():
        _add(out, (s, letters), c)
    # d_A on letters
    for i, a in enumerate(letters, start=1):
        sgn = -1 if (d0 + _nu(letters, i - 1, amb) + 1) & 1 else 1
        for s, c in A.diff_seq(a, amb).items():
            if s == A.UNIT:
                raise ValueError("differential left the augmentation ideal")
            _add(out, (a0, letters[:i - 1] + (s,) + letters[i:]), sgn * c)
    # d_BA: merge letters i and i+1 (1-based), i.e. a_{i'-1} a_{i'} with i' = i+1
    for i in range(1, len(letters)):
        sgn = -1 if (d0 + _nu(letters, i, amb) + 1) & 1 else 1
        prod, s = A.sort_seq(letters[i - 1] + letters[i], amb)
        if prod is None:
            continue
        _add(out, (a0, letters[:i - 1] + (prod,) + letters[i + 1:]), sgn * s)
    # d_tau: absorb the first letter into a0
    if letters:
        sgn = -1 if (d0 + 1) & 1 else 1
        prod, s = A.sort_seq(a0 + letters[0], amb)
        if prod is not None:
            _add(out, (prod, letters[1:]), sgn * s)
    return tuple(sorted(out.items()))


def diff_word(w: Word, amb: Ambient) -> ZElem:
    return dict(_diff_word(w, amb))


def diff(x: ZElem, amb: Ambient) -> ZElem:
    out: ZElem = {}
    for w, c in x.items():
        for w2, c2 in _diff_word(w, amb):
            _add(out, w2, c * c2)
    return out


def homotopy(x: ZElem, amb: Ambient) -> ZElem:
    """h(a0[sa1|...|sak]) = [s abar0|sa1|...|sak] with abar0 = a0 - eps(a0)."""
    out: ZElem = {}
    for (a0, letters), c in x.items():
        if a0 != A.UNIT:
            _add(out, (A.UNIT, (a0,) + letters), c)
    return out


def augmentation_projection(x: ZElem) -> ZElem:
    """pi: keep only the multiple of the empty word."""
    c = x.get(EMPTY_WORD, 0)
    return {EMPTY_WORD: c} if c else {}


# -- product ------------------------------------------------------------------

def _shuffles(l: int, m: int):
    """Positions taken by the first word's letters in each (l, m)-shuffle."""
    return combinations(range(l + m), l)


def product(x: ZElem, y: ZElem, amb: Ambient) -> ZElem:
    out: ZElem = {}
    for (a0, al), ca in x.items():
        nu_l = _nu(al, len(al), amb)
        for (b0, bl), cb in y.items():
            head, s0 = A.sort_seq(a0 + b0, amb)
            if head is None:
                continue
            sgn0 = -1 if (nu_l * A.seq_degree(b0, amb)) & 1 else 1
            l, m = len(al), len(bl)
            da = [A.seq_degree(a, amb) - 1 for a in al]
            db = [A.seq_degree(b, amb) - 1 for b in bl]
            for pos in _shuffles(l, m):
                pset = set(pos)
                merged, eps = [], 1
                ia = ib = 0
                passed_b = 0  # parity of b-letters already placed
                for p in range(l + m):
                    if p in pset:
                        if da[ia] & 1 and passed_b & 1:
                            eps = -eps
                        merged.append(al[ia])
                        ia += 1
                    else:
                        passed_b += db[ib]
                        merged.append(bl[ib])
                        ib += 1
                _add(out, (head, tuple(merged)), sgn0 * s0 * eps * ca * cb)
    return out


def unit() -> ZElem:
    return {EMPTY_WORD: Fraction(1)}


# -- bases -------------------------------------------------------------------

def _pieces(k: int, g: int):
    return [(kk, gg) for kk in range(0, k + 1) for gg in range(0, g + 1)]


@lru_cache(maxsize=None)
def _a_by_kg(amb: Ambient, k: int, g: int) -> tuple:
    out = []
    for d, seqs in A.basis(amb, k, g).items():
        out.extend(seqs)
    return tuple(out)


@lru_cache(maxsize=None)
def basis(amb: Ambient, k: int, g: int) -> dict[int, tuple[Word, ...]]:
    """Basis words of Z(k, g) grouped by degree."""
    words = set()

    def letters_of(kk, gg):
        # ordered tuples of nonunit basis sequences with total (kk, gg)
        if kk == 0 and gg == 0:
            yield ()
            return
        for k1 in range(1, kk + 1):
            for g1 in range(0, gg + 1):
                for a in _a_by_kg(amb, k1, g1):
                    for rest in letters_of(kk - k1, gg - g1):
                        yield (a,) + rest

    for k0, g0 in _pieces(k, g):
        for a0 in _a_by_kg(amb, k0, g0):
            for letters in letters_of(k - k0, g - g0):
                words.add((a0, letters))
    out: dict[int, list[Word]] = {}
    for w in words:
        out.setdefault(word_degree(w, amb), []).append(w)
    return {d: tuple(sorted(v)) for d, v in sorted(out.items())}


@lru_cache(maxsize=None)
def cumulative_basis(amb: Ambient, k: int, g: int) -> dict[int, tuple[Word, ...]]:
    """Basis of the direct sum of Z(k', g') over k' <= k, g' <= g (includes the unit word)."""
    out: dict[int, list[Word]] = {}
    for kk, gg in _pieces(k, g):
        for d, ws in basis(amb, kk, gg).items():
            out.setdefault(d, []).extend(ws)
    return {d: tuple(sorted(v)) for d, v in sorted(out.items())}


class BarComplex:
    """Z(k, g) (or the cumulative sum up to (k, g)) as a cochain complex."""

    def __init__(self, amb: Ambient, k: int, g: int, cumulative: bool = False):
        self.amb, self.k, self.g = amb, k, g
        self._b = cumulative_basis(amb, k, g) if cumulative else basis(amb, k, g)

    def degrees(self) -> list[int]:
        return sorted(self._b)

    def basis(self, d: int):
        return list(self._b.get(d, ()))

    def diff(self, w: Word) -> ZElem:
        return diff_word(w, self.amb)


def word_to_json(w: Word) -> dict:
    """{"a0": <algebra JSON>, "letters": [<algebra JSON>, ...]} for a basis word."""
    return {"a0": A.elem_to_json({w[0]: 1}), "letters": [A.elem_to_json({a: 1}) for a in w[1]]}


def is_trivial(x: ZElem) -> bool:
    return all(w == EMPTY_WORD for w in x)
