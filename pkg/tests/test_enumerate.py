from itertools import combinations_with_replacement

import pytest

from graphcx.canon import canonical_key
from graphcx.enumerate import HAIRY, PLAIN, BudgetExceeded, admissible, basis, generate, graph_degree
from graphcx.graphs import DASHED, EXT, INT, SOLID, WHITE, Ambient, Graph

MAX_V = 4


def brute_force(fam, k: int, g: int) -> set:
    """Canonical keys of all connected admissible graphs with <= MAX_V vertices of order k, loop order g."""
    out = set()
    for nv in range(1, MAX_V + 1):
        ne = nv - 1 + g
        for kinds in combinations_with_replacement((EXT, INT, WHITE), nv):
            slots = []
            for a in range(nv):
                for b in range(a, nv):
                    slots.append((DASHED, a, b))
                    if WHITE not in (kinds[a], kinds[b]):
                        slots.append((SOLID, a, b))
            for edges in combinations_with_replacement(slots, ne):
                if sum(e[0] == DASHED for e in edges) - kinds.count(WHITE) != k:
                    continue
                gr = Graph(kinds, edges)
                if any(kd == INT and e[0] == DASHED and v in e[1:] for e in edges
                       for v, kd in enumerate(kinds)):
                    continue
                if gr.is_connected() and admissible(gr, fam):
                    out.add(canonical_key(gr))
    return out


@pytest.mark.parametrize("fam", [PLAIN, HAIRY], ids=["plain", "hairy"])
@pytest.mark.parametrize("k,g", [(1, 0), (1, 1), (2, 0), (2, 1), (3, 0)])
def test_generation_matches_brute_force(fam, k, g):
    got = [canonical_key(x) for x in generate(fam, k, g) if x.nv <= MAX_V]
    assert len(got) == len(set(got))
    assert set(got) == brute_force(fam, k, g)


def test_order_and_loop_order_are_respected():
    for k, g in ((1, 1), (2, 1), (2, 2), (3, 1)):
        for x in generate(PLAIN, k, g):
            assert x.order == k and x.betti == g and x.is_connected()


def test_theta_is_the_only_pgc_graph_at_order_one_loop_one():
    b = basis("pgc", Ambient(6, 4), 1, 1)
    graphs = [x for xs in b.values() for x in xs]
    assert len(graphs) == 1
    assert graphs[0] == Graph((EXT, EXT), ((SOLID, 0, 1), (DASHED, 0, 1)))


def test_order_zero_is_empty():
    assert generate(PLAIN, 0, 1) == ()


def test_budget():
    with pytest.raises(BudgetExceeded):
        generate(PLAIN, 3, 2, budget=10)


def test_degree_formula():
    amb = Ambient(7, 5)
    for kind in ("pgc'", "hgc"):
        for d, xs in basis(kind, amb, 2, 1).items():
            for x in xs:
                assert d == x.degree(amb) == graph_degree(2, 1, x.defect, amb)
