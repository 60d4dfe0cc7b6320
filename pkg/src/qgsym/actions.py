"""Group actions on metric graphs, validation, orbits, fundamental domains.

An action is stored per generator as a vertex permutation, an edge
permutation, and per-edge orientation flags (True when the generator reverses
the parameterization of that edge).  Arbitrary group elements are obtained by
composing generator powers; the acting group is cyclic or a product of two
cyclic factors, so composition order does not matter.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .errors import CoverageGap, NotTransitive
from .graphs import TAG_DUMMY, TAG_ORIGINAL, MetricGraph, subdivide_midpoints


@dataclass(frozen=True)
class GeneratorMaps:
    vertex_perm: tuple[int, ...]
    edge_perm: tuple[int, ...]
    edge_flip: tuple[bool, ...]


def identity_maps(n_vertices: int, n_edges: int) -> GeneratorMaps:
    return GeneratorMaps(
        tuple(range(n_vertices)), tuple(range(n_edges)), (False,) * n_edges
    )


def compose_maps(first: GeneratorMaps, second: GeneratorMaps) -> GeneratorMaps:
    """Maps of 'apply first, then second'."""
    vp = tuple(second.vertex_perm[v] for v in first.vertex_perm)
    ep = tuple(second.edge_perm[e] for e in first.edge_perm)
    fl = tuple(
        first.edge_flip[e] ^ second.edge_flip[first.edge_perm[e]]
        for e in range(len(first.edge_perm))
    )
    return GeneratorMaps(vp, ep, fl)


@dataclass(frozen=True)
class GraphAction:
    """Action of a (product of) cyclic group(s) on a metric graph."""

    orders: tuple[int, ...]
    generators: tuple[GeneratorMaps, ...]
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def group_size(self) -> int:
        size = 1
        for n in self.orders:
            size *= n
        return size

    def elements(self) -> Iterator[tuple[int, ...]]:
        yield from itertools.product(*(range(n) for n in self.orders))

    @property
    def identity(self) -> tuple[int, ...]:
        return (0,) * len(self.orders)

    def maps(self, element: tuple[int, ...]) -> GeneratorMaps:
        element = tuple(e % n for e, n in zip(element, self.orders))
        if element in self._cache:
            return self._cache[element]
        nv = len(self.generators[0].vertex_perm) if self.generators else 0
        ne = len(self.generators[0].edge_perm) if self.generators else 0
        m = identity_maps(nv, ne)
        for gen, power in zip(self.generators, element):
            for _ in range(power):
                m = compose_maps(m, gen)
        self._cache[element] = m
        return m


@dataclass(frozen=True)
class ActionReport:
    valid: bool
    violations: tuple[tuple[str, str], ...]  # (axiom, witness)
    vacuous: tuple[str, ...]


def validate_action(g: MetricGraph, a: GraphAction) -> ActionReport:
    """Exhaustively check the group-action axioms on a finite graph.

    Continuity, discreteness and co-compactness hold automatically for
    finite graphs and are reported as vacuous.  Faithfulness is checked
    combinatorially: no nonidentity element may fix a vertex, fix an edge
    orientation-preservingly (fixes every interior point), or fix an edge
    with reversed orientation (fixes the midpoint).
    """
    violations: list[tuple[str, str]] = []
    nv, ne = g.n_vertices, g.n_edges

    for i, gen in enumerate(a.generators):
        if sorted(gen.vertex_perm) != list(range(nv)):
            violations.append(("bijectivity", f"generator {i} vertex map is not a permutation"))
        if sorted(gen.edge_perm) != list(range(ne)):
            violations.append(("bijectivity", f"generator {i} edge map is not a permutation"))

    if not violations:
        # generator order divides the group order
        for i, (gen, n) in enumerate(zip(a.generators, a.orders)):
            m = identity_maps(nv, ne)
            for _ in range(n):
                m = compose_maps(m, gen)
            if m != identity_maps(nv, ne):
                violations.append(("group_law", f"generator {i} to the power {n} is not the identity"))

        # structure preservation: endpoints and lengths
        for i, gen in enumerate(a.generators):
            for e in g.edges:
                img = g.edges[gen.edge_perm[e.id]]
                mapped = (gen.vertex_perm[e.u], gen.vertex_perm[e.v])
                expected = (img.v, img.u) if gen.edge_flip[e.id] else (img.u, img.v)
                if mapped != expected:
                    violations.append(
                        ("adjacency", f"generator {i}, edge {e.id}: endpoints map to {mapped}, image edge has {expected}")
                    )
                if abs(img.length - e.length) > 1e-12 * max(1.0, e.length):
                    violations.append(
                        ("length", f"generator {i}, edge {e.id}: length {e.length} maps to {img.length}")
                    )

        # faithfulness over the whole group
        for element in a.elements():
            if element == a.identity:
                continue
            m = a.maps(element)
            for v in range(nv):
                if m.vertex_perm[v] == v:
                    violations.append(("faithfulness", f"element {element} fixes vertex {v}"))
                    break
            else:
                for e in range(ne):
                    if m.edge_perm[e] == e:
                        what = "midpoint of" if m.edge_flip[e] else "every point of"
                        violations.append(("faithfulness", f"element {element} fixes {what} edge {e}"))
                        break

    return ActionReport(
        valid=not violations,
        violations=tuple(violations),
        vacuous=("continuity", "discreteness", "co-compactness"),
    )


def orbit(a: GraphAction, edge_id: int) -> list[int]:
    """The edge orbit {g.e} over all group elements, without duplicates."""
    seen: list[int] = []
    for element in a.elements():
        img = a.maps(element).edge_perm[edge_id]
        if img not in seen:
            seen.append(img)
    return seen


@dataclass(frozen=True)
class FundamentalDomain:
    seed: int
    vertices: tuple[int, ...]  # seed plus its dummy boundary vertices
    half_edges: tuple[int, ...]
    # (dummy vertex, group element whose domain copy shares it)
    boundary: tuple[tuple[int, tuple[int, ...]], ...]


def fundamental_domain(g: MetricGraph, a: GraphAction, seed: int) -> FundamentalDomain:
    """Fundamental domain of a vertex-transitive action on a subdivided graph.

    The domain is the seed original vertex, its incident half-edges, and the
    dummy vertices at their far ends.  Dummy boundary vertices are shared
    with exactly one other shifted copy; the sharing group element is
    recorded as the gluing data.
    """
    originals = [v.id for v in g.vertices if v.tag == TAG_ORIGINAL]
    if seed not in originals:
        raise NotTransitive(f"seed {seed} is not an original vertex")

    vertex_orbit = {a.maps(el).vertex_perm[seed] for el in a.elements()}
    if vertex_orbit != set(originals) or a.group_size != len(originals):
        raise NotTransitive(
            f"action is not simply transitive on original vertices "
            f"(orbit size {len(vertex_orbit)}, {len(originals)} originals, group size {a.group_size})"
        )

    half_edges = sorted(g.incident_edges(seed))
    dummies = []
    for eid in half_edges:
        e = g.edges[eid]
        other = e.v if e.u == seed else e.u
        if g.vertices[other].tag != TAG_DUMMY:
            raise CoverageGap(f"edge {eid} at seed does not end at a dummy vertex; subdivide first")
        dummies.append(other)

    # covering: the shifted copies of the half-edge set partition all edges
    covered: list[int] = []
    for el in a.elements():
        m = a.maps(el)
        covered.extend(m.edge_perm[e] for e in half_edges)
    if sorted(covered) != list(range(g.n_edges)):
        raise CoverageGap("group shifts of the domain half-edges do not tile the edge set")

    # gluing: the element whose copy owns the other half of each dummy
    boundary = []
    for d in dummies:
        inc = g.incident_edges(d)
        other_half = [e for e in inc if e not in half_edges]
        if len(inc) != 2 or len(other_half) != 1:
            raise CoverageGap(f"dummy vertex {d} is not a plain midpoint")
        e = g.edges[other_half[0]]
        w = e.v if g.vertices[e.v].tag == TAG_ORIGINAL else e.u
        el = next(el for el in a.elements() if a.maps(el).vertex_perm[seed] == w)
        boundary.append((d, el))

    return FundamentalDomain(
        seed=seed,
        vertices=(seed, *dummies),
        half_edges=tuple(half_edges),
        boundary=tuple(boundary),
    )


def lift_action_subdivided(g: MetricGraph, a: GraphAction) -> tuple[MetricGraph, GraphAction]:
    """Subdivide every edge at its midpoint and lift the action.

    Dummy vertex n + j sits on edge j; halves 2j and 2j + 1 follow the
    labeling of `subdivide_midpoints`.  A flipped edge image swaps the two
    halves and reverses each.
    """
    g_sub = subdivide_midpoints(g)
    n = g.n_vertices
    gens = []
    for gen in a.generators:
        vperm = list(gen.vertex_perm) + [n + gen.edge_perm[j] for j in range(g.n_edges)]
        eperm = [0] * (2 * g.n_edges)
        eflip = [False] * (2 * g.n_edges)
        for j in range(g.n_edges):
            img = gen.edge_perm[j]
            if gen.edge_flip[j]:
                eperm[2 * j] = 2 * img + 1
                eperm[2 * j + 1] = 2 * img
                eflip[2 * j] = True
                eflip[2 * j + 1] = True
            else:
                eperm[2 * j] = 2 * img
                eperm[2 * j + 1] = 2 * img + 1
        gens.append(GeneratorMaps(tuple(vperm), tuple(eperm), tuple(eflip)))
    return g_sub, GraphAction(a.orders, tuple(gens))
