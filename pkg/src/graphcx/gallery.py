"""Small named graphs and the known top-degree cocycles built from them.

Labels and orientations are those of the canonical forms produced by
`canon.canonicalize`, so each combination can be fed to a differential as is.
Names follow the shapes: D, Db, Dc are the three 4-vertex chord graphs of order
2 and loop order 1, E adds a white vertex, F is the two-white hairy graph and C
the one with a double solid edge.
"""
from __future__ import annotations

from fractions import Fraction

from . import bar as Z
from .graphs import DASHED, EXT, INT, SOLID, WHITE, Graph

H = Fraction(1, 2)

# (k, g) = (1, 1)
THETA = Graph((EXT, EXT), ((SOLID, 0, 1), (DASHED, 0, 1)))
SOLID_LOOP_THETA = Graph((EXT, EXT), ((SOLID, 1, 1), (DASHED, 0, 1)))
HAIR_LOOP = Graph((EXT, WHITE), ((DASHED, 0, 1), (DASHED, 1, 1)))

# (k, g) = (2, 1)
DC = Graph((EXT,) * 4, ((SOLID, 0, 1), (SOLID, 2, 3), (DASHED, 0, 2), (DASHED, 1, 3)))
DB = Graph((EXT,) * 4, ((SOLID, 1, 3), (SOLID, 2, 3), (DASHED, 0, 1), (DASHED, 2, 3)))
D = Graph((EXT,) * 4, ((SOLID, 1, 3), (SOLID, 2, 3), (DASHED, 0, 3), (DASHED, 1, 2)))
E = Graph((EXT, EXT, EXT, WHITE), ((SOLID, 1, 2), (DASHED, 0, 3), (DASHED, 1, 3), (DASHED, 2, 3)))
F = Graph((EXT, EXT, WHITE, WHITE), ((DASHED, 0, 2), (DASHED, 1, 3), (DASHED, 2, 3), (DASHED, 2, 3)))
C = Graph((EXT,) * 4, ((SOLID, 2, 3), (SOLID, 2, 3), (DASHED, 0, 2), (DASHED, 1, 3)))
DEFECT_MINUS_ONE = Graph(
    (EXT, EXT, EXT, EXT, INT),
    ((SOLID, 1, 4), (SOLID, 2, 4), (SOLID, 3, 4), (DASHED, 0, 1), (DASHED, 2, 3)))
DEFECT_MINUS_ONE_B = Graph(
    (EXT, EXT, EXT, EXT, INT),
    ((SOLID, 2, 4), (SOLID, 3, 4), (SOLID, 3, 4), (DASHED, 0, 2), (DASHED, 1, 3)))


def _key(g: Graph) -> tuple:
    return (g.kinds, g.edges)


# Orientation signs: the drawn D and Dc are the negatives of the canonical ones.
def top_cocycles() -> dict[tuple[str, int, int, int, int], dict]:
    """(complex, n, j, k, g) -> the top cocycle as {canonical key: coefficient}."""
    even = {
        ("pgc", 6, 4, 1, 1): {_key(THETA): 1},
        ("hh", 6, 4, 1, 1): {_key(THETA): 1},
        ("pgc'", 6, 4, 1, 1): {_key(THETA): -1, _key(HAIR_LOOP): 1},
        ("hgc", 6, 4, 1, 1): {_key(HAIR_LOOP): 1},
    }
    odd = {
        ("hh", 7, 5, 2, 1): {_key(D): -1, _key(DC): -H},
        ("pgc", 7, 5, 2, 1): {_key(E): 1, _key(D): -1, _key(DC): -H},
        ("pgc'", 7, 5, 2, 1): {_key(F): H, _key(E): 1, _key(D): -1, _key(DC): -H},
        ("hgc", 7, 5, 2, 1): {_key(F): 1},
    }
    return {**even, **odd}


def alternative_pgc_cocycle() -> dict:
    """E + 2 Db + 1/2 Dc at (7, 5), cohomologous to the PGC entry of `top_cocycles`."""
    return {_key(E): 1, _key(DB): 2, _key(DC): -H}


def defect_minus_one_images() -> list[tuple[Graph, int, dict]]:
    """The two PGC' graphs of defect -1 at (7, 5), (2, 1) as (graph, coefficient, image).

    The images are D - 2 Db and C in the drawn orientations.
    """
    return [
        (DEFECT_MINUS_ONE, -1, {_key(D): -1, _key(DB): -2}),
        (DEFECT_MINUS_ONE_B, 1, {_key(C): 1}),
    ]


# -- decorated examples -----------------------------------------------------------

def _point(word) -> tuple:
    return (((EXT,), ()), (word,))


def decorated_top_cocycles() -> dict[tuple[int, int, int, int], dict]:
    """(n, j, k, g) -> top cocycle of the decorated complex as {decorated key: coefficient}.

    (6, 4): theta plus a point decorated by [s a], a the multiple-edge graph.
    (7, 5): the PGC cocycle plus 2 G1 + G2 with z' = [s a'], a' the ext-ext chord.
    """
    triv = Z.EMPTY_WORD
    multiple = ((_key(THETA),),)
    chord = ((((EXT, EXT), ((DASHED, 0, 1),)),),)
    sa = ((), multiple)
    sa1 = ((), chord)
    g1 = (((EXT, EXT, EXT), ((SOLID, 0, 2), (SOLID, 1, 2), (DASHED, 1, 2))), (sa1, triv, triv))
    g2 = (((EXT, EXT, EXT), ((SOLID, 0, 2), (SOLID, 1, 2), (DASHED, 0, 1))), (triv, triv, sa1))

    def plain(gr: Graph) -> tuple:
        return (_key(gr), tuple(triv for _ in range(gr.n_ext)))

    return {
        (6, 4, 1, 1): {plain(THETA): 1, _point(sa): -1},
        (7, 5, 2, 1): {plain(E): 1, plain(DB): 2, plain(DC): -H, g1: 2, g2: 1},
    }
