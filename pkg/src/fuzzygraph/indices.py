"""Wiener and connectivity indices with exact rational arithmetic.

The geodesic distance d_s(u, v) is the minimum total grade of a path
between u and v that uses only strong (alpha or beta) edges; the minimum
ranges over all such paths, not only the strongest ones.  The Wiener
index weights d_s by the endpoint grades, the connectivity index weights
the strength of connectedness the same way.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from heapq import heappop, heappush
from typing import Iterator

from .connectivity import strength_of_connectedness, strong_subgraph
from .errors import StrongDisconnectedError
from .model import MICRO, FuzzyGraph, Membership, VertexId, pair
from .structure import GraphKind, SaturatedCycleSpec, graph_kind


class DistanceMatrix:
    """Symmetric table of geodesic distances, keyed on unordered pairs."""

    __slots__ = ("_ds",)

    def __init__(self, ds: dict[tuple[VertexId, VertexId], Fraction]):
        self._ds = dict(sorted(ds.items()))

    def value(self, u: VertexId, v: VertexId) -> Fraction:
        return self._ds[pair(u, v)]

    def pairs(self) -> Iterator[tuple[tuple[VertexId, VertexId], Fraction]]:
        yield from self._ds.items()

    def __len__(self) -> int:
        return len(self._ds)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DistanceMatrix):
            return NotImplemented
        return self._ds == other._ds

    def __repr__(self) -> str:
        return f"DistanceMatrix({len(self._ds)} pairs)"


@dataclass(frozen=True)
class PairEntry:
    u: VertexId
    v: VertexId
    conn: Membership
    ds: Fraction | None


@dataclass(frozen=True)
class IndexReport:
    """Everything the CLI prints for one graph.

    ``wiener`` is None when some pair has no strong path; the
    connectivity index is always defined.
    """

    wiener: Fraction | None
    connectivity: Fraction
    pairs: tuple[PairEntry, ...]
    kind: GraphKind
    zero_sigma_vertices: tuple[VertexId, ...]


def _single_source(adj, source) -> dict[VertexId, int]:
    dist = {source: 0}
    heap = [(0, source)]
    while heap:
        d, node = heappop(heap)
        if d > dist[node]:
            continue
        for nbr, weight in adj[node]:
            nd = d + weight
            if nbr not in dist or nd < dist[nbr]:
                dist[nbr] = nd
                heappush(heap, (nd, nbr))
    return dist


def _strong_distance_table(
    g: FuzzyGraph,
) -> dict[tuple[VertexId, VertexId], Fraction | None]:
    """Geodesic distances over the strong subgraph; None when unreachable."""
    strong = strong_subgraph(g)
    names = strong.vertices()
    adj = {
        u: [(v, grade.micro) for v, grade in strong.neighbors(u)]
        for u in names
    }
    table: dict[tuple[VertexId, VertexId], Fraction | None] = {}
    for i, u in enumerate(names):
        dist = _single_source(adj, u)
        for v in names[i + 1 :]:
            micro = dist.get(v)
            table[(u, v)] = None if micro is None else Fraction(micro, MICRO)
    return table


def geodesic_distance(g: FuzzyGraph) -> DistanceMatrix:
    """All-pairs min-length distances over strong edges only.

    Raises StrongDisconnectedError if any pair of vertices has no path
    consisting solely of strong edges.
    """
    table = _strong_distance_table(g)
    for (u, v), value in table.items():
        if value is None:
            raise StrongDisconnectedError(
                f"no strong path between {u!r} and {v!r}"
            )
    return DistanceMatrix(table)


def wiener_index(g: FuzzyGraph) -> Fraction:
    """Sum of sigma(u) sigma(v) d_s(u, v) over unordered pairs."""
    ds = geodesic_distance(g)
    total = Fraction(0)
    for (u, v), value in ds.pairs():
        total += g.sigma(u).as_fraction() * g.sigma(v).as_fraction() * value
    return total

def connectivity_index(g: FuzzyGraph) -> Fraction:
    """Sum of sigma(u) sigma(v) CONN(u, v) over unordered pairs."""
    conn = strength_of_connectedness(g)
    total = Fraction(0)
    for (u, v), grade in conn.pairs():
        total += (
            g.sigma(u).as_fraction()
            * g.sigma(v).as_fraction()
            * grade.as_fraction()
        )
    return total


def theorem_star_formula(spec: SaturatedCycleSpec) -> Fraction:
    """The published closed form n((n+3)^2 - 6)/16 (kappa + eta).

    Kept verbatim for comparison purposes: direct computation refutes it
    (see the falsifier module), so never use this as a shortcut for the
    Wiener index of a saturated cycle.
    """
    coefficient = Fraction(spec.n * ((spec.n + 3) ** 2 - 6), 16)
    return coefficient * (spec.kappa.as_fraction() + spec.eta.as_fraction())


def index_report(g: FuzzyGraph) -> IndexReport:
    """Compute both indices plus the per-pair table and structure flags."""
    conn = strength_of_connectedness(g)
    ds_table = _strong_distance_table(g)
    entries = []
    wiener: Fraction | None = Fraction(0)
    connectivity = Fraction(0)
    for (u, v), grade in conn.pairs():
        weight = g.sigma(u).as_fraction() * g.sigma(v).as_fraction()
        ds = ds_table[(u, v)]
        entries.append(PairEntry(u, v, grade, ds))
        connectivity += weight * grade.as_fraction()
        if wiener is not None and ds is not None:
            wiener += weight * ds
        elif ds is None:
            wiener = None
    zero_sigma = tuple(
        name for name in g.vertices() if g.sigma(name).is_zero
    )
    return IndexReport(
        wiener=wiener,
        connectivity=connectivity,
        pairs=tuple(entries),
        kind=graph_kind(g),
        zero_sigma_vertices=zero_sigma,
    )
