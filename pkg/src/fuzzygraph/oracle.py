"""Brute-force reference implementations.

Everything here enumerates simple paths directly from the definitions
and is intentionally naive; the fast implementations are tested against
these.  Edge classification is redone locally instead of calling the
connectivity module, so the two routes stay independent.  Inputs are
capped at MAX_VERTICES vertices.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import StrongDisconnectedError, TooLargeError
from .model import MICRO, FuzzyGraph, Membership, VertexId

MAX_VERTICES = 12


def _require_small(g: FuzzyGraph) -> None:
    if g.vertex_count > MAX_VERTICES:
        raise TooLargeError(
            f"{g.vertex_count} vertices exceeds the brute-force cap "
            f"of {MAX_VERTICES}"
        )


def _adjacency(g, allowed=None):
    adj = {name: [] for name in g.vertices()}
    for u, v, grade in g.edges():
        if allowed is not None and (u, v) not in allowed:
            continue
        adj[u].append((v, grade.micro))
        adj[v].append((u, grade.micro))
    return adj


def conn_bruteforce(g: FuzzyGraph, u: VertexId, v: VertexId) -> Membership:
    """Max over all simple u-v paths of the min grade along the path."""
    _require_small(g)
    g.sigma(u)
    g.sigma(v)
    if u == v:
        raise ValueError("strength is defined for distinct vertices")
    adj = _adjacency(g)
    best = 0
    visited = {u}

    def extend(node, floor):
        nonlocal best
        if node == v:
            best = max(best, floor)
            return
        for nbr, weight in adj[node]:
            if nbr in visited:
                continue
            visited.add(nbr)
            extend(nbr, floor if floor < weight else weight)
            visited.remove(nbr)

    extend(u, MICRO)
    return Membership(best)


def strong_edges_bruteforce(
    g: FuzzyGraph,
) -> set[tuple[VertexId, VertexId]]:
    """Edges whose grade is >= the detour strength without them."""
    _require_small(g)
    strong = set()
    for u, v, grade in g.edges():
        residual = conn_bruteforce(g.remove_edge(u, v), u, v)
        if grade >= residual:
            strong.add((u, v))
    return strong


def _min_strong_path(g, adj, u, v):
    best = None
    visited = {u}

    def extend(node, travelled):
        nonlocal best
        if node == v:
            if best is None or travelled < best:
                best = travelled
            return
        for nbr, weight in adj[node]:
            if nbr in visited:
                continue
            visited.add(nbr)
            extend(nbr, travelled + weight)
            visited.remove(nbr)

    extend(u, 0)
    return best


def ds_bruteforce(
    g: FuzzyGraph,
    u: VertexId,
    v: VertexId,
    strong_pairs: set[tuple[VertexId, VertexId]] | None = None,
) -> Fraction:
    """Min total grade over simple u-v paths made of strong edges only.

    ``strong_pairs`` lets callers reuse one classification pass; when
    omitted it is recomputed here by brute force.
    """
    _require_small(g)
    g.sigma(u)
    g.sigma(v)
    if u == v:
        raise ValueError("distance is defined for distinct vertices")
    if strong_pairs is None:
        strong_pairs = strong_edges_bruteforce(g)
    adj = _adjacency(g, allowed=strong_pairs)
    best = _min_strong_path(g, adj, u, v)
    if best is None:
        raise StrongDisconnectedError(
            f"no strong path between {u!r} and {v!r}"
        )
    return Fraction(best, MICRO)


def wi_bruteforce(g: FuzzyGraph) -> Fraction:
    _require_small(g)
    strong_pairs = strong_edges_bruteforce(g)
    adj = _adjacency(g, allowed=strong_pairs)
    names = g.vertices()
    total = Fraction(0)
    for i, u in enumerate(names):
        for v in names[i + 1 :]:
            best = _min_strong_path(g, adj, u, v)
            if best is None:
                raise StrongDisconnectedError(
                    f"no strong path between {u!r} and {v!r}"
                )
            total += (
                g.sigma(u).as_fraction()
                * g.sigma(v).as_fraction()
                * Fraction(best, MICRO)
            )
    return total


def ci_bruteforce(g: FuzzyGraph) -> Fraction:
    _require_small(g)
    names = g.vertices()
    total = Fraction(0)
    for i, u in enumerate(names):
        for v in names[i + 1 :]:
            total += (
                g.sigma(u).as_fraction()
                * g.sigma(v).as_fraction()
                * conn_bruteforce(g, u, v).as_fraction()
            )
    return total
