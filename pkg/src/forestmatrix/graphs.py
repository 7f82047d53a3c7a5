"""Weighted multigraph and multidigraph model plus structural transforms.

Vertices are 0-based internally (the file format and CLI are 1-based; the
conversion happens only at that boundary). Parallel edge/arc instances are
first-class: they are kept distinct everywhere and only collapsed by an
explicit merge_parallel call. Weights are exact rationals and may be negative
or zero; zero-weight instances are legal and retained.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Union

from .linalg import SquareMatrix, as_rational

__all__ = [
    "GraphValidationError",
    "Edge",
    "Arc",
    "Multigraph",
    "Multidigraph",
    "AnyGraph",
    "laplacian",
    "kirchhoff",
    "merge_parallel",
    "contract",
    "reverse",
    "to_bidirected",
]


class GraphValidationError(ValueError):
    """Structurally invalid graph: self-loop or vertex out of range."""


class Edge(NamedTuple):
    u: int
    v: int
    w: Fraction


class Arc(NamedTuple):
    tail: int
    head: int
    w: Fraction


def _checked(kind: str, a: int, b: int, w, n: int):
    if not (isinstance(a, int) and isinstance(b, int)):
        raise GraphValidationError(f"{kind} endpoints must be integers, got ({a!r}, {b!r})")
    if not (0 <= a < n and 0 <= b < n):
        raise GraphValidationError(f"{kind} ({a}, {b}) out of range for n={n}")
    if a == b:
        raise GraphValidationError(f"self-loop at vertex {a} is not allowed")
    return a, b, as_rational(w)


@dataclass(frozen=True)
class Multigraph:
    """Undirected weighted multigraph on vertices 0..n-1."""

    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphValidationError(f"vertex count must be >= 0, got {self.n}")
        object.__setattr__(
            self,
            "edges",
            tuple(Edge(*_checked("edge", e[0], e[1], e[2], self.n)) for e in self.edges),
        )

    @property
    def instances(self) -> tuple[Edge, ...]:
        return self.edges


@dataclass(frozen=True)
class Multidigraph:
    """Directed weighted multidigraph on vertices 0..n-1."""

    n: int
    arcs: tuple[Arc, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphValidationError(f"vertex count must be >= 0, got {self.n}")
        object.__setattr__(
            self,
            "arcs",
            tuple(Arc(*_checked("arc", a[0], a[1], a[2], self.n)) for a in self.arcs),
        )

    @property
    def instances(self) -> tuple[Arc, ...]:
        return self.arcs


AnyGraph = Union[Multigraph, Multidigraph]


def laplacian(graph: Multigraph) -> SquareMatrix:
    """Weighted Laplacian: entry (i, j), j != i, is minus the total weight of
    the edges between i and j; the diagonal makes every row sum to zero."""
    n = graph.n
    m = [[Fraction(0)] * n for _ in range(n)]
    for u, v, w in graph.edges:
        m[u][v] -= w
        m[v][u] -= w
        m[u][u] += w
        m[v][v] += w
    return SquareMatrix(tuple(tuple(row) for row in m))


def kirchhoff(digraph: Multidigraph) -> SquareMatrix:
    """Directed Kirchhoff matrix: entry (i, j), j != i, is minus the total
    weight of the arcs j->i; diagonal (i, i) is the total weight converging
    to i. Rows sum to zero; columns need not."""
    n = digraph.n
    m = [[Fraction(0)] * n for _ in range(n)]
    for tail, head, w in digraph.arcs:
        m[head][tail] -= w
        m[head][head] += w
    return SquareMatrix(tuple(tuple(row) for row in m))


def merge_parallel(graph: AnyGraph) -> AnyGraph:
    """Collapse parallel instances into one instance per (ordered or unordered)
    vertex pair, weights summed; zero-sum pairs keep a zero-weight instance.

    Idempotent; output instances are sorted by endpoint pair for determinism.
    """
    if isinstance(graph, Multigraph):
        sums: dict[tuple[int, int], Fraction] = {}
        for u, v, w in graph.edges:
            key = (u, v) if u < v else (v, u)
            sums[key] = sums.get(key, Fraction(0)) + w
        return Multigraph(graph.n, tuple(Edge(u, v, w) for (u, v), w in sorted(sums.items())))
    sums = {}
    for tail, head, w in graph.arcs:
        key = (tail, head)
        sums[key] = sums.get(key, Fraction(0)) + w
    return Multidigraph(graph.n, tuple(Arc(t, h, w) for (t, h), w in sorted(sums.items())))


def contract(digraph: Multidigraph, vertices: Iterable[int]) -> tuple[Multidigraph, int]:
    """Identify all of `vertices` into a single vertex; return (graph, its index).

    Arcs with both endpoints inside the merged set would become self-loops and
    are dropped; arcs created parallel by the identification are kept as
    separate instances. Relabeling is deterministic: survivors keep their
    relative order and the merged vertex takes the smallest merged label's
    position, so deleting its row/column from the result's Kirchhoff matrix
    reproduces the minor of the original with all merged rows/columns deleted.
    """
    merged = sorted(set(vertices))
    if not merged:
        raise GraphValidationError("cannot contract an empty vertex set")
    for v in merged:
        if not (0 <= v < digraph.n):
            raise GraphValidationError(f"vertex {v} out of range for n={digraph.n}")
    merged_set = set(merged)
    anchor = merged[0]
    old_order = [v for v in range(digraph.n) if v == anchor or v not in merged_set]
    relabel = {old: new for new, old in enumerate(old_order)}
    arcs = []
    for tail, head, w in digraph.arcs:
        t = anchor if tail in merged_set else tail
        h = anchor if head in merged_set else head
        if t == h:
            continue
        arcs.append(Arc(relabel[t], relabel[h], w))
    return Multidigraph(digraph.n - len(merged) + 1, tuple(arcs)), relabel[anchor]


def reverse(digraph: Multidigraph) -> Multidigraph:
    """Flip every arc; an involution. Converging-forest quantities of a graph
    are the diverging-forest quantities of its reverse."""
    return Multidigraph(digraph.n, tuple(Arc(h, t, w) for t, h, w in digraph.arcs))


def to_bidirected(graph: Multigraph) -> Multidigraph:
    """Replace each edge instance by the two opposite arcs of the same weight.

    The result has the same Kirchhoff matrix as the graph's Laplacian, and its
    diverging forests correspond one-to-one to the graph's rooted forests.
    """
    arcs = []
    for u, v, w in graph.edges:
        arcs.append(Arc(u, v, w))
        arcs.append(Arc(v, u, w))
    return Multidigraph(graph.n, tuple(arcs))
