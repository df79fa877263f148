import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from graphcx.graphs import Ambient, Graph, EXT, DASHED, SOLID, contract_edge
from graphcx.signs import (SignError, bubble_sign, disjoint_exchange, edge_contraction_sign,
                           edge_contraction_sign_closed, koszul_sign, nested_exchange,
                           subset_contraction_sign, tau_phi)

from helpers import PARITIES, random_labeled_graph, small_plain_graphs

words = st.lists(st.integers(0, 7), min_size=0, max_size=9)


@given(words, st.randoms(use_true_random=False))
def test_koszul_matches_bubble_transport(degs, rnd):
    src = [(i, d) for i, d in enumerate(degs)]
    tgt = src[:]
    rnd.shuffle(tgt)
    assert koszul_sign(src, tgt) == bubble_sign(src, tgt)


def test_koszul_basic_cases():
    a, b, c = ("a", 1), ("b", 1), ("c", 2)
    assert koszul_sign([a, b], [b, a]) == -1
    assert koszul_sign([a, c], [c, a]) == 1
    assert koszul_sign([a, b, c], [c, b, a]) == -1
    with pytest.raises(SignError):
        koszul_sign([a, b], [a, c])
    with pytest.raises(SignError):
        koszul_sign([a, b], [a])


@pytest.fixture(scope="module")
def small_graphs():
    return small_plain_graphs(4)


@pytest.mark.parametrize("n,j", PARITIES)
def test_closed_form_equals_permutation_definition(n, j, small_graphs):
    amb = Ambient(n, j)
    for g in small_graphs:
        for i, (_, s, t) in enumerate(g.edges):
            if s != t and not g.is_chord(i):
                assert edge_contraction_sign(g, i, amb) == edge_contraction_sign_closed(g, i, amb)


@pytest.mark.parametrize("n,j", [(6, 4), (8, 4), (8, 6)])
def test_even_even_remark(n, j, small_graphs):
    # tau Phi = (-1)^{i + |G|} and sigma = eta (-1)^{i+1}, i the 1-based edge label
    amb = Ambient(n, j)
    for g in small_graphs:
        for i, (kind, s, t) in enumerate(g.edges):
            if s == t or g.is_chord(i):
                continue
            assert tau_phi(g, i, amb) == (-1) ** (i + 1 + g.degree(amb))
            _, p, q = contract_edge(g, i)
            eta = 1 if (s, t) == (p, q) else amb.flip_sign(kind)
            assert edge_contraction_sign(g, i, amb) == eta * (-1) ** i


def test_reversing_edge_flips_by_orientation_sign():
    amb = Ambient(7, 5)
    g = Graph((EXT, EXT, EXT), ((SOLID, 0, 1), (DASHED, 1, 2), (DASHED, 0, 2)))
    h = Graph(g.kinds, ((SOLID, 1, 0),) + g.edges[1:])
    assert edge_contraction_sign(h, 0, amb) == amb.flip_sign(SOLID) * edge_contraction_sign(g, 0, amb)


@pytest.mark.parametrize("n,j", PARITIES)
@given(seed=st.integers(0, 10**9))
def test_exchange_identities(n, j, seed):
    amb = Ambient(n, j)
    rng = random.Random(seed)
    g = random_labeled_graph(rng)
    verts = list(range(g.nv))
    S = rng.sample(verts, 2)
    rest = [v for v in verts if v not in S]
    if len(rest) >= 2:
        T = rng.sample(rest, rng.randint(2, len(rest)))
        lhs, rhs = disjoint_exchange(g, S, T, amb)
        assert lhs == rhs
    T = rng.sample(verts, rng.randint(3, g.nv))
    S = rng.sample(T, rng.randint(2, len(T) - 1))
    lhs, rhs = nested_exchange(g, S, T, amb)
    assert lhs == rhs


def test_subset_sign_rejects_bad_subsets():
    amb = Ambient(7, 5)
    g = Graph((EXT, EXT), ((DASHED, 0, 1),))
    with pytest.raises(SignError):
        subset_contraction_sign(g, [0], amb)
    with pytest.raises(SignError):
        subset_contraction_sign(g, [0, 5], amb)
    with pytest.raises(SignError):
        nested_exchange(g, [0, 1], [0, 1], amb)
