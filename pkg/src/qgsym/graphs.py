"""Metric-graph data model.

A metric graph is a finite multigraph whose edges carry positive lengths and
are identified with real intervals.  Every edge yields a reversal pair of
directed bonds; bond ``2*e`` runs from the stored tail of edge ``e`` to its
head, bond ``2*e + 1`` the other way.  Loops and parallel edges are
representable (quotient graphs need them); `make_graph(simple=True)` rejects
them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import DanglingEndpoint, NonPositiveLength, NotSimple, ZeroDegree

TAG_ORIGINAL = "original"
TAG_DUMMY = "dummy"


@dataclass(frozen=True)
class Vertex:
    id: int
    tag: str = TAG_ORIGINAL
    # for dummy vertices: id of the edge in the parent graph that was split
    provenance: Optional[int] = None


@dataclass(frozen=True)
class Edge:
    id: int
    u: int
    v: int
    length: float


@dataclass(frozen=True)
class Bond:
    """Directed copy of an edge."""

    id: int
    edge: int
    origin: int
    terminus: int
    length: float

    @property
    def reversal_id(self) -> int:
        return self.id ^ 1


@dataclass(frozen=True)
class MetricGraph:
    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        ids = [v.id for v in self.vertices]
        if ids != list(range(len(ids))):
            raise DanglingEndpoint("vertex ids must be dense 0..n-1")
        n = len(ids)
        seen = set()
        for e in self.edges:
            if not (0 <= e.u < n and 0 <= e.v < n):
                raise DanglingEndpoint(f"edge {e.id} references missing vertex")
            if not (math.isfinite(e.length) and e.length > 0):
                raise NonPositiveLength(f"edge {e.id} has length {e.length}")
            if e.id in seen:
                raise DanglingEndpoint(f"duplicate edge id {e.id}")
            seen.add(e.id)
        if sorted(seen) != list(range(len(self.edges))):
            raise DanglingEndpoint("edge ids must be dense 0..m-1")

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def bonds(self) -> tuple[Bond, ...]:
        out = []
        for e in self.edges:
            out.append(Bond(2 * e.id, e.id, e.u, e.v, e.length))
            out.append(Bond(2 * e.id + 1, e.id, e.v, e.u, e.length))
        return tuple(out)

    @cached_property
    def _degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n_vertices
        for e in self.edges:
            deg[e.u] += 1
            deg[e.v] += 1
        return tuple(deg)

    def degree(self, v: int) -> int:
        return self._degrees[v]

    def incident_edges(self, v: int) -> list[int]:
        return [e.id for e in self.edges if v in (e.u, e.v)]

    def bonds_out(self, v: int) -> list[Bond]:
        return [b for b in self.bonds if b.origin == v]

    def bonds_in(self, v: int) -> list[Bond]:
        return [b for b in self.bonds if b.terminus == v]

    @property
    def total_length(self) -> float:
        return float(sum(e.length for e in self.edges))

    def edge_lengths(self) -> np.ndarray:
        return np.array([e.length for e in self.edges], dtype=float)

    def is_loop(self, edge_id: int) -> bool:
        e = self.edges[edge_id]
        return e.u == e.v


def make_graph(
    n_vertices: int,
    edges: Iterable[tuple[int, int, float]],
    simple: bool = False,
    tags: Optional[Sequence[str]] = None,
) -> MetricGraph:
    """Build a validated metric graph from (u, v, length) triples."""
    if tags is None:
        tags = [TAG_ORIGINAL] * n_vertices
    vertices = tuple(Vertex(i, tag) for i, tag in enumerate(tags))
    edata = tuple(Edge(j, u, v, float(L)) for j, (u, v, L) in enumerate(edges))
    if simple:
        seen = set()
        for e in edata:
            if e.u == e.v:
                raise NotSimple(f"loop at vertex {e.u}")
            key = (min(e.u, e.v), max(e.u, e.v))
            if key in seen:
                raise NotSimple(f"parallel edge {key}")
            seen.add(key)
    return MetricGraph(vertices, edata)


def standard_condition(degree: int) -> tuple[np.ndarray, np.ndarray]:
    """Matrices (A, B) of the continuity + derivative-sum vertex condition.

    A carries the bidiagonal 1,-1 continuity chain with a zero last row;
    B is zero except for a last row of ones.  For degree 1 the chain is
    empty and only the derivative row remains (Neumann endpoint).
    """
    if degree < 1:
        raise ZeroDegree("vertex condition needs degree >= 1")
    A = np.zeros((degree, degree), dtype=complex)
    B = np.zeros((degree, degree), dtype=complex)
    for i in range(degree - 1):
        A[i, i] = 1.0
        A[i, i + 1] = -1.0
    B[-1, :] = 1.0
    return A, B


def subdivide_midpoints(g: MetricGraph) -> MetricGraph:
    """Insert a dummy vertex at the midpoint of every edge.

    Edge ``j`` of length L becomes edges ``2j`` (tail half) and ``2j + 1``
    (head half), each of length L/2, joined at dummy vertex ``n + j``.
    """
    n = g.n_vertices
    vertices = list(g.vertices)
    for e in g.edges:
        vertices.append(Vertex(n + e.id, TAG_DUMMY, provenance=e.id))
    edges = []
    for e in g.edges:
        d = n + e.id
        edges.append(Edge(2 * e.id, e.u, d, e.length / 2.0))
        edges.append(Edge(2 * e.id + 1, d, e.v, e.length / 2.0))
    return MetricGraph(tuple(vertices), tuple(edges))


def smooth_degree2(g: MetricGraph, vertices: Optional[Iterable[int]] = None) -> MetricGraph:
    """Eliminate degree-2 vertices, concatenating their two edges.

    By default only dummy-tagged vertices are removed, so smoothing inverts
    `subdivide_midpoints`.  Pass `vertices` to remove specific degree-2
    vertices instead.  A vertex whose two incident bonds belong to the same
    edge (a loop midpoint) is never removed; non-removable vertices are left
    intact.
    """
    if vertices is None:
        candidates = {v.id for v in g.vertices if v.tag == TAG_DUMMY}
    else:
        candidates = set(vertices)

    # mutable edge store: eid -> (u, v, length)
    edges = {e.id: (e.u, e.v, e.length) for e in g.edges}

    def incident(v):
        out = []
        for eid, (u, w, _L) in edges.items():
            if u == v:
                out.append((eid, 0))
            if w == v:
                out.append((eid, 1))
        return out

    changed = True
    removed = set()
    while changed:
        changed = False
        for v in sorted(candidates - removed):
            inc = incident(v)
            if len(inc) != 2:
                continue
            (e1, end1), (e2, end2) = inc
            if e1 == e2:
                continue  # loop midpoint stays
            u1, w1, L1 = edges[e1]
            u2, w2, L2 = edges[e2]
            a = w1 if end1 == 0 else u1
            b = w2 if end2 == 0 else u2
            del edges[e2]
            edges[e1] = (a, b, L1 + L2)
            removed.add(v)
            changed = True
            break

    keep = [v for v in g.vertices if v.id not in removed]
    remap = {v.id: i for i, v in enumerate(keep)}
    new_vertices = tuple(Vertex(i, v.tag, v.provenance) for i, v in enumerate(keep))
    new_edges = tuple(
        Edge(j, remap[u], remap[w], L)
        for j, (u, w, L) in enumerate(edges[eid] for eid in sorted(edges))
    )
    return MetricGraph(new_vertices, new_edges)
