from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from fuzzygraph import FuzzyGraph, Membership, build_graph

from support import GRID, grid_grade


@st.composite
def fuzzy_graphs(
    draw, min_vertices: int = 1, max_vertices: int = 6, connected: bool = False
) -> FuzzyGraph:
    """Random valid fuzzy graphs with grades on the 0.01 grid."""
    n = draw(st.integers(min_vertices, max_vertices))
    names = [f"n{i:02d}" for i in range(n)]
    sigma = {
        name: Membership(draw(st.integers(1, 100)) * GRID) for name in names
    }
    edges = []
    used = set()
    if connected and n >= 2:
        for i in range(1, n):
            j = draw(st.integers(0, i - 1))
            u, v = sorted((names[j], names[i]))
            cap = min(sigma[u], sigma[v]).micro // GRID
            edges.append(
                (u, v, Membership(draw(st.integers(1, cap)) * GRID))
            )
            used.add((u, v))
    for i, u in enumerate(names):
        for v in names[i + 1 :]:
            if (u, v) in used:
                continue
            if draw(st.booleans()):
                cap = min(sigma[u], sigma[v]).micro // GRID
                edges.append(
                    (u, v, Membership(draw(st.integers(1, cap)) * GRID))
                )
    return build_graph(sigma.items(), edges)


@pytest.fixture(scope="session")
def small_graphs() -> list[FuzzyGraph]:
    """A fixed batch of seeded random connected graphs for reuse."""
    from support import random_connected_graph

    return [random_connected_graph(seed, max_vertices=6) for seed in range(40)]
