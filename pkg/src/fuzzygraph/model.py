"""Exact-arithmetic data model for fuzzy graphs and the .fzg text format.

Grades live on a fixed micro-unit grid (one unit is 1e-6), so comparing a
grade against a path strength is decidable exact equality, never a float
tolerance.  Aggregate quantities (index values, path lengths) are
``fractions.Fraction``.  Graphs are immutable values: every transforming
operation returns a new graph and leaves its input untouched.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import (
    DuplicateEdgeError,
    DuplicateVertexError,
    MuExceedsSigmaError,
    NoSuchEdgeError,
    ParseError,
    SelfLoopError,
    UnknownEndpointError,
    ZeroMuError,
)

MICRO = 10**6

VertexId = str

_GRADE_RE = re.compile(r"^(\d+)(?:\.(\d{1,6}))?$")
_NAME_RE = re.compile(r"^\S+$")


@dataclass(frozen=True, order=True)
class Membership:
    """A grade in [0, 1], stored as an exact count of 1e-6 units."""

    micro: int

    def __post_init__(self) -> None:
        if not isinstance(self.micro, int) or isinstance(self.micro, bool):
            raise TypeError(f"micro-unit count must be an int, got {self.micro!r}")
        if not 0 <= self.micro <= MICRO:
            raise ValueError(f"grade outside [0, 1]: {self.micro} micro-units")

    @classmethod
    def parse(cls, text: str) -> "Membership":
        """Parse a decimal literal with at most six fractional digits.

        Parsing is exact: ``parse("0.1")`` yields precisely 100000
        micro-units.  Raises ValueError for anything else.
        """
        match = _GRADE_RE.match(text)
        if match is None:
            raise ValueError(f"not a grade literal: {text!r}")
        whole, frac = match.group(1), match.group(2) or ""
        micro = int(whole) * MICRO + int(frac.ljust(6, "0") or "0")
        if micro > MICRO:
            raise ValueError(f"grade above 1: {text!r}")
        return cls(micro)

    def as_fraction(self) -> Fraction:
        return Fraction(self.micro, MICRO)

    @property
    def is_zero(self) -> bool:
        return self.micro == 0

    def __str__(self) -> str:
        whole, frac = divmod(self.micro, MICRO)
        if frac == 0:
            return str(whole)
        return f"{whole}.{f'{frac:06d}'.rstrip('0')}"


ZERO = Membership(0)
ONE = Membership(MICRO)


def format_fraction(value: Fraction) -> str:
    """Render an exact rational, never rounding.

    Terminating decimals (denominator of the form 2^a 5^b) print as the
    shortest exact decimal; anything else prints as ``p/q``.
    """
    num, den = value.numerator, value.denominator
    if den == 1:
        return str(num)
    d = den
    twos = fives = 0
    while d % 2 == 0:
        d //= 2
        twos += 1
    while d % 5 == 0:
        d //= 5
        fives += 1
    if d != 1:
        return f"{num}/{den}"
    places = max(twos, fives)
    sign = "-" if num < 0 else ""
    scaled = abs(num) * 10**places // den
    whole, frac = divmod(scaled, 10**places)
    digits = f"{frac:0{places}d}".rstrip("0")
    return f"{sign}{whole}.{digits}" if digits else f"{sign}{whole}"


def pair(u: VertexId, v: VertexId) -> tuple[VertexId, VertexId]:
    """Canonical unordered-pair key (lexicographically sorted)."""
    return (u, v) if u <= v else (v, u)


class FuzzyGraph:
    """Immutable simple graph with vertex grades sigma and edge grades mu.

    Invariants enforced at construction: vertex names are nonempty
    whitespace-free tokens, there are no self loops, every edge grade is
    strictly positive and does not exceed the minimum of its endpoint
    grades.  Vertices with sigma 0 are allowed; they can carry no edges.
    """

    __slots__ = ("_sigma", "_mu", "_adj")

    def __init__(
        self,
        sigma: Mapping[VertexId, Membership],
        mu: Mapping[tuple[VertexId, VertexId], Membership],
    ):
        clean_sigma: dict[VertexId, Membership] = {}
        for name in sorted(sigma):
            grade = sigma[name]
            if not isinstance(name, str) or _NAME_RE.match(name) is None:
                raise ValueError(f"bad vertex name: {name!r}")
            if not isinstance(grade, Membership):
                raise TypeError(f"sigma for {name!r} must be a Membership")
            clean_sigma[name] = grade
        clean_mu: dict[tuple[VertexId, VertexId], Membership] = {}
        for key in sorted(mu):
            u, v = key
            grade = mu[key]
            if u == v:
                raise SelfLoopError(f"self loop at {u!r}")
            if u not in clean_sigma:
                raise UnknownEndpointError(f"unknown vertex {u!r}")
            if v not in clean_sigma:
                raise UnknownEndpointError(f"unknown vertex {v!r}")
            if not isinstance(grade, Membership):
                raise TypeError(f"mu for {key!r} must be a Membership")
            if grade.is_zero:
                raise ZeroMuError(f"edge {u!r} {v!r} has zero grade")
            if grade > min(clean_sigma[u], clean_sigma[v]):
                raise MuExceedsSigmaError(
                    f"mu({u!r},{v!r}) = {grade} exceeds min sigma "
                    f"({min(clean_sigma[u], clean_sigma[v])})"
                )
            clean_mu[pair(u, v)] = grade
        self._sigma = clean_sigma
        self._mu = dict(sorted(clean_mu.items()))
        adj: dict[VertexId, dict[VertexId, Membership]] = {
            name: {} for name in clean_sigma
        }
        for (u, v), grade in self._mu.items():
            adj[u][v] = grade
            adj[v][u] = grade
        self._adj = {
            name: tuple(sorted(nbrs.items())) for name, nbrs in adj.items()
        }

    @property
    def vertex_count(self) -> int:
        return len(self._sigma)

    @property
    def edge_count(self) -> int:
        return len(self._mu)

    def vertices(self) -> tuple[VertexId, ...]:
        return tuple(self._sigma)

    def sigma(self, name: VertexId) -> Membership:
        try:
            return self._sigma[name]
        except KeyError:
            raise UnknownEndpointError(f"unknown vertex {name!r}") from None

    def edges(self) -> Iterator[tuple[VertexId, VertexId, Membership]]:
        """Edges in lexicographic order as (u, v, mu) with u < v."""
        for (u, v), grade in self._mu.items():
            yield u, v, grade

    def edge_pairs(self) -> tuple[tuple[VertexId, VertexId], ...]:
        return tuple(self._mu)

    def has_edge(self, u: VertexId, v: VertexId) -> bool:
        return pair(u, v) in self._mu

    def mu(self, u: VertexId, v: VertexId) -> Membership:
        try:
            return self._mu[pair(u, v)]
        except KeyError:
            raise NoSuchEdgeError(f"no edge between {u!r} and {v!r}") from None

    def neighbors(self, u: VertexId) -> tuple[tuple[VertexId, Membership], ...]:
        try:
            return self._adj[u]
        except KeyError:
            raise UnknownEndpointError(f"unknown vertex {u!r}") from None

    def remove_edge(self, u: VertexId, v: VertexId) -> "FuzzyGraph":
        """Return a copy without edge uv; this graph is unchanged."""
        key = pair(u, v)
        if key not in self._mu:
            raise NoSuchEdgeError(f"no edge between {u!r} and {v!r}")
        remaining = {k: g for k, g in self._mu.items() if k != key}
        return FuzzyGraph(self._sigma, remaining)

    def edge_subgraph(
        self, pairs: Iterable[tuple[VertexId, VertexId]]
    ) -> "FuzzyGraph":
        """Keep all vertices but only the listed edges."""
        keep = set()
        for u, v in pairs:
            key = pair(u, v)
            if key not in self._mu:
                raise NoSuchEdgeError(f"no edge between {u!r} and {v!r}")
            keep.add(key)
        return FuzzyGraph(self._sigma, {k: self._mu[k] for k in keep})

    def crisp_components(self) -> tuple[tuple[VertexId, ...], ...]:
        seen: set[VertexId] = set()
        components = []
        for start in self._sigma:
            if start in seen:
                continue
            queue = deque([start])
            seen.add(start)
            members = []
            while queue:
                node = queue.popleft()
                members.append(node)
                for nbr, _ in self._adj[node]:
                    if nbr not in seen:
                        seen.add(nbr)
                        queue.append(nbr)
            components.append(tuple(sorted(members)))
        return tuple(components)

    def is_crisp_connected(self) -> bool:
        return len(self.crisp_components()) <= 1

    def serialize(self) -> str:
        """Canonical .fzg text; parsing it back reproduces this graph."""
        lines = [f"v {name} {grade}" for name, grade in self._sigma.items()]
        lines += [f"e {u} {v} {grade}" for (u, v), grade in self._mu.items()]
        return "\n".join(lines) + "\n"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FuzzyGraph):
            return NotImplemented
        return self._sigma == other._sigma and self._mu == other._mu

    def __hash__(self) -> int:
        return hash((tuple(self._sigma.items()), tuple(self._mu.items())))

    def __repr__(self) -> str:
        return f"FuzzyGraph({self.vertex_count} vertices, {self.edge_count} edges)"


@dataclass(frozen=True)
class PathRecord:
    """A concrete path with its min-grade strength and sum-grade length."""

    vertices: tuple[VertexId, ...]
    strength: Membership
    length: Fraction


def path_record(g: FuzzyGraph, vertices: Iterable[VertexId]) -> PathRecord:
    """Validate a vertex sequence as a path in g and measure it."""
    names = tuple(vertices)
    if len(names) < 2:
        raise ValueError("a path needs at least two vertices")
    if len(set(names)) != len(names):
        raise ValueError("a path may not repeat vertices")
    grades = [g.mu(a, b) for a, b in zip(names, names[1:])]
    total = sum(grade.micro for grade in grades)
    return PathRecord(names, min(grades), Fraction(total, MICRO))


def build_graph(
    vertex_list: Iterable[tuple[VertexId, Membership]],
    edge_list: Iterable[tuple[VertexId, VertexId, Membership]],
) -> FuzzyGraph:
    """Assemble and validate a graph from vertex and edge records.

    Raises DuplicateVertexError, DuplicateEdgeError, SelfLoopError,
    UnknownEndpointError, MuExceedsSigmaError or ZeroMuError.
    """
    sigma: dict[VertexId, Membership] = {}
    for name, grade in vertex_list:
        if name in sigma:
            raise DuplicateVertexError(f"vertex {name!r} declared twice")
        sigma[name] = grade
    mu: dict[tuple[VertexId, VertexId], Membership] = {}
    for u, v, grade in edge_list:
        if u == v:
            raise SelfLoopError(f"self loop at {u!r}")
        key = pair(u, v)
        if key in mu:
            raise DuplicateEdgeError(f"edge {key[0]!r} {key[1]!r} declared twice")
        mu[key] = grade
    return FuzzyGraph(sigma, mu)


def parse_graph(text: str | bytes) -> FuzzyGraph:
    """Parse the line-oriented .fzg format.

    Blank lines and lines starting with ``#`` are ignored.  ``v name
    grade`` declares a vertex, ``e name1 name2 grade`` an edge between
    previously declared vertices.  Syntax problems raise ParseError with
    the line number; structural problems raise the build_graph errors.
    """
    if isinstance(text, (bytes, bytearray)):
        raw = bytes(text)
        try:
            text = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            line = raw[: exc.start].count(b"\n") + 1
            raise ParseError("invalid UTF-8", line) from exc
    vertices: list[tuple[VertexId, Membership]] = []
    edges: list[tuple[VertexId, VertexId, Membership]] = []
    declared: set[VertexId] = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        kind = tokens[0]
        if kind == "v":
            if len(tokens) != 3:
                raise ParseError(
                    f"expected 'v <name> <grade>', got {stripped!r}", lineno
                )
            name = tokens[1]
            try:
                grade = Membership.parse(tokens[2])
            except ValueError as exc:
                raise ParseError(str(exc), lineno) from exc
            vertices.append((name, grade))
            declared.add(name)
        elif kind == "e":
            if len(tokens) != 4:
                raise ParseError(
                    f"expected 'e <name1> <name2> <grade>', got {stripped!r}",
                    lineno,
                )
            u, v = tokens[1], tokens[2]
            for name in (u, v):
                if name not in declared:
                    raise UnknownEndpointError(
                        f"line {lineno}: edge references undeclared vertex {name!r}"
                    )
            try:
                grade = Membership.parse(tokens[3])
            except ValueError as exc:
                raise ParseError(str(exc), lineno) from exc
            edges.append((u, v, grade))
        else:
            raise ParseError(f"unknown directive {kind!r}", lineno)
    return build_graph(vertices, edges)
