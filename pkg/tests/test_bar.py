import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from graphcx import algebra as A
from graphcx import bar as Z
from graphcx import chains
from graphcx.cli import bar_acyclicity, bar_identity_failures
from graphcx.graphs import Ambient

AMBS = (Ambient(7, 5), Ambient(6, 4), Ambient(6, 3), Ambient(7, 4))
PIECES = ((1, 0), (1, 1), (2, 0), (2, 1), (1, 2), (2, 2), (3, 0))


def _letters(amb):
    out = []
    for k, g in PIECES:
        for seqs in A.basis(amb, k, g).values():
            out.extend(s for s in seqs if s != A.UNIT and A.seq_degree(s, amb) > 0)
    return out


def _random_word(rng, amb, letters, max_len=3):
    a0 = rng.choice(letters + [A.UNIT])
    return (a0, tuple(rng.choice(letters) for _ in range(rng.randint(0, max_len))))


def _deg(x, amb):
    degs = {Z.word_degree(w, amb) for w in x}
    assert len(degs) <= 1
    return degs.pop() if degs else 0


@pytest.mark.parametrize("amb", AMBS, ids=str)
@given(seed=st.integers(0, 10**9))
def test_d_squared_on_random_words(amb, seed):
    letters = _letters(amb)
    if not letters:
        return
    w = _random_word(random.Random(seed), amb, letters)
    assert Z.diff(Z.diff({w: Fraction(1)}, amb), amb) == {}


@pytest.mark.parametrize("amb", AMBS, ids=str)
def test_d_squared_on_bases(amb):
    for k, g in ((1, 0), (2, 0), (2, 1), (3, 0), (2, 2), (3, 1)):
        assert chains.d2_check(Z.BarComplex(amb, k, g)) == []


def test_empty_bar_and_d_tau():
    amb = Ambient(7, 5)
    for a in _letters(amb):
        assert Z.diff_word((a, ()), amb) == {(s, ()): c for s, c in A.diff_seq(a, amb).items()}
        # d(1[sa]) = 1[s da] - a[]
        expect = {(A.UNIT, (s,)): -c for s, c in A.diff_seq(a, amb).items()}
        expect[(a, ())] = -1
        assert Z.diff_word((A.UNIT, (a,)), amb) == expect


@pytest.mark.parametrize("amb", AMBS, ids=str)
@given(seed=st.integers(0, 10**9))
def test_product_unit_and_two_letter_shuffle(amb, seed):
    letters = _letters(amb)
    if not letters:
        return
    rng = random.Random(seed)
    w = {_random_word(rng, amb, letters): Fraction(1)}
    assert Z.product(Z.unit(), w, amb) == w == Z.product(w, Z.unit(), amb)
    a, b = rng.choice(letters), rng.choice(letters)
    da, db = A.seq_degree(a, amb) - 1, A.seq_degree(b, amb) - 1
    got = Z.product({(A.UNIT, (a,)): 1}, {(A.UNIT, (b,)): 1}, amb)
    expect: dict = {}
    for word, c in (((A.UNIT, (a, b)), 1), ((A.UNIT, (b, a)), (-1) ** (da * db))):
        expect[word] = expect.get(word, 0) + c
    assert got == {k: v for k, v in expect.items() if v}


@pytest.mark.parametrize("amb", AMBS, ids=str)
@given(seed=st.integers(0, 10**9))
def test_leibniz_and_commutativity(amb, seed):
    letters = _letters(amb)
    if not letters:
        return
    rng = random.Random(seed)
    x = {_random_word(rng, amb, letters, 2): Fraction(1)}
    y = {_random_word(rng, amb, letters, 2): Fraction(1)}
    dx, dy = _deg(x, amb), _deg(y, amb)
    xy, yx = Z.product(x, y, amb), Z.product(y, x, amb)
    assert xy == {w: c * (-1) ** (dx * dy) for w, c in yx.items()}
    lhs = Z.diff(xy, amb)
    rhs = dict(Z.product(Z.diff(x, amb), y, amb))
    for w, c in Z.product(x, Z.diff(y, amb), amb).items():
        rhs[w] = rhs.get(w, 0) + (-1) ** dx * c
    assert lhs == {w: c for w, c in rhs.items() if c}


@pytest.mark.parametrize("amb", AMBS, ids=str)
@given(seed=st.integers(0, 10**9))
def test_homotopy(amb, seed):
    """h^2 = 0 and the graded identity h d + d h = pi - id on random words."""
    letters = _letters(amb)
    if not letters:
        return
    w = _random_word(random.Random(seed), amb, letters)
    x = {w: Fraction(1)}
    assert Z.homotopy(Z.homotopy(x, amb), amb) == {}
    acc = dict(Z.homotopy(Z.diff(x, amb), amb))
    for key, c in Z.diff(Z.homotopy(x, amb), amb).items():
        acc[key] = acc.get(key, 0) + c
    target = {w: Fraction(-1)}
    for key, c in Z.augmentation_projection(x).items():
        target[key] = target.get(key, 0) + c
    assert {k: v for k, v in acc.items() if v} == {k: v for k, v in target.items() if v}


def test_homotopy_of_unit_word_is_zero():
    assert Z.homotopy(Z.unit(), Ambient(7, 5)) == {}


@pytest.mark.parametrize("amb", AMBS, ids=str)
def test_graded_identity_on_bases_and_acyclicity(amb):
    for k, g in ((1, 0), (1, 1), (2, 0), (2, 1)):
        assert bar_identity_failures(amb, k, g, literal=False)[1] == 0
        assert bar_acyclicity(amb, k, g) == {0: 1}


def test_word_json():
    amb = Ambient(7, 5)
    a = _letters(amb)[0]
    out = Z.word_to_json((A.UNIT, (a,)))
    assert out["a0"] == [{"coeff": "1", "sequence": []}]
    assert len(out["letters"]) == 1
