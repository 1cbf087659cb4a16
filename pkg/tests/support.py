"""Deterministic generators and tiny oracles shared across test modules."""

from __future__ import annotations

import random
from itertools import combinations

from fuzzygraph import FuzzyGraph, Membership, build_graph

GRID = 10_000  # micro-units per 0.01 step


def grid_grade(rng: random.Random, max_hundredths: int = 100) -> Membership:
    return Membership(rng.randrange(1, max_hundredths + 1) * GRID)


def random_connected_graph(seed: int, max_vertices: int = 7) -> FuzzyGraph:
    """Random connected graph with grades on the 0.01 grid.

    A random attachment tree guarantees connectivity; every remaining
    pair becomes an edge with probability 1/3.
    """
    rng = random.Random(seed)
    n = rng.randrange(2, max_vertices + 1)
    names = [f"n{i:02d}" for i in range(n)]
    sigma = {name: grid_grade(rng) for name in names}
    edges = []
    used = set()
    for i in range(1, n):
        u, v = sorted((names[rng.randrange(i)], names[i]))
        cap = min(sigma[u], sigma[v]).micro // GRID
        edges.append((u, v, Membership(rng.randrange(1, cap + 1) * GRID)))
        used.add((u, v))
    for u, v in combinations(names, 2):
        if (u, v) in used or rng.randrange(3) != 0:
            continue
        cap = min(sigma[u], sigma[v]).micro // GRID
        edges.append((u, v, Membership(rng.randrange(1, cap + 1) * GRID)))
    return build_graph(sigma.items(), edges)


def spanning_tree_totals(g: FuzzyGraph) -> list[tuple[frozenset, int]]:
    """Every spanning tree of g with its total strength in micro-units."""
    names = g.vertices()
    n = len(names)
    all_edges = list(g.edges())
    results = []
    for combo in combinations(all_edges, n - 1):
        parent = {name: name for name in names}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        acyclic = True
        for u, v, _ in combo:
            ru, rv = find(u), find(v)
            if ru == rv:
                acyclic = False
                break
            parent[rv] = ru
        if not acyclic:
            continue
        if len({find(name) for name in names}) != 1:
            continue
        total = sum(grade.micro for _, _, grade in combo)
        results.append(
            (frozenset((u, v) for u, v, _ in combo), total)
        )
    return results
