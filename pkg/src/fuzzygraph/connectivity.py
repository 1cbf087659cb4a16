"""All-pairs max-min connection strength and edge classification.

The strength of connectedness between two vertices is the maximum over
all paths of the minimum edge grade along the path (widest-path
semantics).  An edge is compared against the strength the rest of the
graph achieves between its endpoints: strictly above is alpha-strong,
equal is beta-strong, strictly below is delta.  Alpha and beta edges
together are the strong edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .model import MICRO, FuzzyGraph, Membership, VertexId, pair


class EdgeClass(Enum):
    ALPHA_STRONG = "alpha"
    BETA_STRONG = "beta"
    DELTA = "delta"


@dataclass(frozen=True)
class EdgeClassification:
    """Classification of one edge together with the evidence for it.

    ``residual`` is the strength of connectedness between the endpoints
    after deleting the edge, recomputed from scratch on the smaller graph.
    """

    grade: Membership
    residual: Membership
    edge_class: EdgeClass


class StrengthMatrix:
    """Symmetric table of max-min strengths, keyed on unordered pairs.

    Entries exist for every unordered pair of distinct vertices; pairs in
    different crisp components have strength 0.
    """

    __slots__ = ("_conn",)

    def __init__(self, conn: dict[tuple[VertexId, VertexId], Membership]):
        self._conn = dict(sorted(conn.items()))

    def value(self, u: VertexId, v: VertexId) -> Membership:
        return self._conn[pair(u, v)]

    def pairs(
        self,
    ) -> Iterator[tuple[tuple[VertexId, VertexId], Membership]]:
        yield from self._conn.items()

    def __len__(self) -> int:
        return len(self._conn)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StrengthMatrix):
            return NotImplemented
        return self._conn == other._conn

    def __repr__(self) -> str:
        return f"StrengthMatrix({len(self._conn)} pairs)"


def strength_of_connectedness(g: FuzzyGraph) -> StrengthMatrix:
    """Max-min closure over all intermediate vertices (exact)."""
    names = g.vertices()
    index = {name: i for i, name in enumerate(names)}
    n = len(names)
    conn = [[0] * n for _ in range(n)]
    for u, v, grade in g.edges():
        i, j = index[u], index[v]
        conn[i][j] = conn[j][i] = grade.micro
    for k in range(n):
        row_k = conn[k]
        for i in range(n):
            if i == k:
                continue
            via = conn[i][k]
            if via == 0:
                continue
            row_i = conn[i]
            for j in range(n):
                width = via if via < row_k[j] else row_k[j]
                if width > row_i[j]:
                    row_i[j] = width
    table = {}
    for i in range(n):
        for j in range(i + 1, n):
            table[(names[i], names[j])] = Membership(conn[i][j])
    return StrengthMatrix(table)


def _edge_class(grade: Membership, residual: Membership) -> EdgeClass:
    if grade > residual:
        return EdgeClass.ALPHA_STRONG
    if grade == residual:
        return EdgeClass.BETA_STRONG
    return EdgeClass.DELTA


def classify_edge(g: FuzzyGraph, u: VertexId, v: VertexId) -> EdgeClass:
    """Classify one edge as alpha-strong, beta-strong or delta."""
    grade = g.mu(u, v)
    residual = strength_of_connectedness(g.remove_edge(u, v)).value(u, v)
    return _edge_class(grade, residual)


def classify_edges(
    g: FuzzyGraph,
) -> dict[tuple[VertexId, VertexId], EdgeClassification]:
    """Classify every edge; keys are canonical unordered pairs."""
    result = {}
    for u, v, grade in g.edges():
        residual = strength_of_connectedness(g.remove_edge(u, v)).value(u, v)
        result[(u, v)] = EdgeClassification(
            grade, residual, _edge_class(grade, residual)
        )
    return result


def strong_subgraph(g: FuzzyGraph) -> FuzzyGraph:
    """Same vertices, only the alpha-strong and beta-strong edges."""
    keep = [
        key
        for key, record in classify_edges(g).items()
        if record.edge_class is not EdgeClass.DELTA
    ]
    return g.edge_subgraph(keep)
