import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from graphcx.graphs import Ambient
from graphcx.relations import (FAMILIES, check_family, instance, normalize, raw_diff, random_graph,
                               random_relabel)

from helpers import PARITIES


@pytest.mark.parametrize("n,j", PARITIES)
@pytest.mark.parametrize("family", FAMILIES)
def test_both_sides_normalize_alike(family, n, j):
    amb = Ambient(n, j)
    rng = random.Random(f"{family}-{n}-{j}")
    for _ in range(25):
        inst = instance(family, rng, amb)
        assert normalize(list(inst.lhs), amb) == normalize(list(inst.rhs), amb)


@pytest.mark.parametrize("n,j", PARITIES)
@pytest.mark.parametrize("family", FAMILIES)
def test_differential_preserves_relations(family, n, j):
    report = check_family(family, Ambient(n, j), 40, seed=7)
    assert report.failures == 0


@pytest.mark.parametrize("n,j", PARITIES)
def test_relations_are_exercised(n, j):
    amb = Ambient(n, j)
    for family in ("orientation", "symmetry", "permutation", "unit"):
        assert check_family(family, amb, 30, seed=3).nontrivial > 0


@pytest.mark.parametrize("n,j", PARITIES)
@given(seed=st.integers(0, 10**9))
def test_relabeling_sign(n, j, seed):
    amb = Ambient(n, j)
    rng = random.Random(seed)
    g = random_graph(rng, rng.randint(2, 5), rng.randint(0, 3))
    if g is None or not g.is_connected():
        return
    h, s = random_relabel(g, rng, amb)
    lhs = normalize([((g,), 1)], amb)
    rhs = normalize([((h,), s)], amb)
    assert lhs == rhs
    assert raw_diff([((g,), 1)], amb) == raw_diff([((h,), s)], amb)


def test_unknown_family():
    with pytest.raises(ValueError):
        instance("nope", random.Random(0), Ambient(7, 5))


def test_normalize_drops_zero_graphs():
    amb = Ambient(7, 5)
    rng = random.Random(1)
    inst = instance("double-loop", rng, amb)
    assert normalize(list(inst.lhs), amb) == {}
