"""Shared oracles for the test suite."""
from __future__ import annotations

import random
from fractions import Fraction

from graphcx import chains
from graphcx.graphs import DASHED, EXT, INT, SOLID, WHITE, Graph
from graphcx.linalg import in_span

PARITIES = ((6, 4), (7, 5), (6, 3), (7, 4))


def apply_diff(cx, vec: dict) -> dict:
    out: dict = {}
    for x, c in vec.items():
        for y, c2 in cx.diff(x).items():
            out[y] = out.get(y, 0) + c * c2
    return {y: v for y, v in out.items() if v}


def class_status(cx, d: int, vec: dict) -> tuple[bool, bool]:
    """(is a cocycle, represents a nonzero class) for vec in degree d, modulo relations."""
    idx = chains.index(cx.basis(d))
    nxt = chains.index(cx.basis(d + 1))
    img = apply_diff(cx, vec)
    rel_next = chains.relation_rows(cx, d + 1)
    cocycle = not img or in_span(rel_next, {nxt[y]: v for y, v in img.items()})
    spans = chains.relation_rows(cx, d)
    for col in chains.columns(cx, d - 1):
        spans.append({idx[y]: v for y, v in col.items()})
    nonzero = not in_span(spans, {idx[x]: Fraction(v) for x, v in vec.items()})
    return cocycle, nonzero


def cohomology_table(cx) -> dict[int, int]:
    return {i.degree: i.dim_cohomology for i in chains.cohomology(cx) if i.dim_cohomology}


def random_labeled_graph(rng: random.Random, lo: int = 3, hi: int = 6) -> Graph:
    """A random graph in standard labels (blacks first, solid edges first), maybe disconnected."""
    nv = rng.randint(lo, hi)
    kinds = sorted(rng.choice([EXT, EXT, INT, WHITE]) for _ in range(nv))
    edges = []
    for _ in range(rng.randint(nv - 1, nv + 3)):
        a, b = rng.sample(range(nv), 2)
        if WHITE in (kinds[a], kinds[b]):
            if INT in (kinds[a], kinds[b]):
                continue
            k = DASHED
        elif INT in (kinds[a], kinds[b]):
            k = SOLID
        else:
            k = rng.choice([SOLID, DASHED])
        edges.append((k, a, b))
    edges.sort(key=lambda e: e[0])
    return Graph(tuple(kinds), tuple(edges))


SMALL_ORDERS = ((1, 0), (1, 1), (1, 2), (1, 3), (2, 0), (2, 1), (2, 2), (2, 3),
                (3, 0), (3, 1), (3, 2), (4, 0), (4, 1))


def small_plain_graphs(max_vertices: int = 5) -> list[Graph]:
    """Every plain graph with at most `max_vertices` vertices over SMALL_ORDERS."""
    from graphcx.enumerate import PLAIN, generate

    out = []
    for k, g in SMALL_ORDERS:
        out.extend(x for x in generate(PLAIN, k, g) if x.nv <= max_vertices)
    return out
