"""Constructors for cycles, circulant graphs, Cartesian products, and the
coprime-order isomorphism between product tori and circulant graphs."""

from __future__ import annotations

import math
import warnings

from .actions import (
    GeneratorMaps,
    GraphAction,
    lift_action_subdivided,
    validate_action,
)
from .errors import (
    DuplicateJump,
    InvalidAction,
    IsomorphismCheckFailed,
    JumpOutOfRange,
    NonPositiveLength,
    NotCoprime,
)
from .graphs import MetricGraph, make_graph
from .groups import crt_index

# axioms a builder-produced action must satisfy; faithfulness is advisory
# (rotation of C_n(n/2) reverses the antipodal edges, fixing midpoints)
_STRUCTURAL = ("bijectivity", "group_law", "adjacency", "length")


def _check_structural(g: MetricGraph, a: GraphAction, what: str) -> None:
    report = validate_action(g, a)
    bad = [v for v in report.violations if v[0] in _STRUCTURAL]
    if bad:
        raise InvalidAction(f"{what}: {bad[0][1]}")


def cycle_graph(n: int, length: float) -> tuple[MetricGraph, GraphAction]:
    """Cycle on n vertices with equal edge lengths and its rotation action.

    n = 1 yields a single loop, n = 2 a digon; both are flagged with a
    warning since they are multigraphs.
    """
    if length <= 0:
        raise NonPositiveLength(f"cycle edge length {length}")
    if n < 3:
        warnings.warn(f"cycle with n={n} is a multigraph (loop/digon)", stacklevel=2)
    if n == 1:
        g = make_graph(1, [(0, 0, length)])
        action = GraphAction((1,), (GeneratorMaps((0,), (0,), (False,)),))
        return g, action
    edges = [(i, (i + 1) % n, length) for i in range(n)]
    g = make_graph(n, edges)
    vperm = tuple((i + 1) % n for i in range(n))
    if n == 2:
        # digon: the rotation swaps the two parallel edges; both are stored
        # head-to-tail around the cycle, so parameterization is preserved
        gen = GeneratorMaps(vperm, (1, 0), (False, False))
    else:
        gen = GeneratorMaps(vperm, tuple((i + 1) % n for i in range(n)), (False,) * n)
    action = GraphAction((n,), (gen,))
    _check_structural(g, action, f"cycle_graph({n})")
    return g, action


def circulant_graph(
    n: int, jumps: list[int], lengths: list[float]
) -> tuple[MetricGraph, GraphAction]:
    """Circulant graph C_n(jumps) with one length per jump class.

    Vertices 0..n-1; vertex i is joined to i + jump (mod n) for every jump.
    The antipodal jump n/2 contributes each edge once.  The rotation action
    is validated for structure preservation.
    """
    if len(jumps) != len(set(jumps)):
        raise DuplicateJump(f"jumps {jumps} contain repeats")
    if len(lengths) != len(jumps):
        raise JumpOutOfRange("need one length per jump class")
    for s in jumps:
        if not (1 <= s <= n / 2):
            raise JumpOutOfRange(f"jump {s} not in [1, {n}/2]")
    for L in lengths:
        if L <= 0:
            raise NonPositiveLength(f"jump-class length {L}")

    edges = []
    class_ranges = []  # (start edge id, count, antipodal?)
    for s, L in zip(jumps, lengths):
        count = n // 2 if 2 * s == n else n
        start = len(edges)
        for i in range(count):
            edges.append((i, (i + s) % n, float(L)))
        class_ranges.append((start, count, 2 * s == n))
    g = make_graph(n, edges)

    vperm = tuple((i + 1) % n for i in range(n))
    eperm = [0] * len(edges)
    eflip = [False] * len(edges)
    for start, count, antipodal in class_ranges:
        for i in range(count):
            j = i + 1
            if j == count:
                eperm[start + i] = start
                eflip[start + i] = antipodal
            else:
                eperm[start + i] = start + j
    action = GraphAction((n,), (GeneratorMaps(vperm, tuple(eperm), tuple(eflip)),))
    _check_structural(g, action, f"circulant_graph({n}, {jumps})")
    return g, action


def product_vertex_id(i: int, j: int, n2: int) -> int:
    return i * n2 + j


def cartesian_product(g1: MetricGraph, g2: MetricGraph) -> MetricGraph:
    """Cartesian product metric graph.

    Vertex (i, j) gets id i*n2 + j.  Edge order: first every edge of g1
    copied across each g2 vertex (the g1-direction block), then every edge
    of g2 across each g1 vertex.
    """
    n1, n2 = g1.n_vertices, g2.n_vertices
    edges = []
    for e in g1.edges:
        for j in range(n2):
            edges.append((product_vertex_id(e.u, j, n2), product_vertex_id(e.v, j, n2), e.length))
    for e in g2.edges:
        for i in range(n1):
            edges.append((product_vertex_id(i, e.u, n2), product_vertex_id(i, e.v, n2), e.length))
    return make_graph(n1 * n2, edges)


def product_action(
    g1: MetricGraph, a1: GraphAction, g2: MetricGraph, a2: GraphAction
) -> GraphAction:
    """Action of G_n1 x G_n2 on the Cartesian product, from cyclic factor actions."""
    if len(a1.orders) != 1 or len(a2.orders) != 1:
        raise InvalidAction("product_action needs single-cycle factor actions")
    n1, n2 = g1.n_vertices, g2.n_vertices
    m1, m2 = g1.n_edges, g2.n_edges
    gen1, gen2 = a1.generators[0], a2.generators[0]

    def build(which: int) -> GeneratorMaps:
        vperm = [0] * (n1 * n2)
        for i in range(n1):
            for j in range(n2):
                ii = gen1.vertex_perm[i] if which == 1 else i
                jj = gen2.vertex_perm[j] if which == 2 else j
                vperm[product_vertex_id(i, j, n2)] = product_vertex_id(ii, jj, n2)
        eperm = [0] * (m1 * n2 + m2 * n1)
        eflip = [False] * len(eperm)
        for a in range(m1):  # g1-direction block
            for j in range(n2):
                idx = a * n2 + j
                if which == 1:
                    eperm[idx] = gen1.edge_perm[a] * n2 + j
                    eflip[idx] = gen1.edge_flip[a]
                else:
                    eperm[idx] = a * n2 + gen2.vertex_perm[j]
        off = m1 * n2
        for b in range(m2):  # g2-direction block
            for i in range(n1):
                idx = off + b * n1 + i
                if which == 2:
                    eperm[idx] = off + gen2.edge_perm[b] * n1 + i
                    eflip[idx] = gen2.edge_flip[b]
                else:
                    eperm[idx] = off + b * n1 + gen1.vertex_perm[i]
        return GeneratorMaps(tuple(vperm), tuple(eperm), tuple(eflip))

    return GraphAction((a1.orders[0], a2.orders[0]), (build(1), build(2)))


def torus_action(
    n1: int, n2: int, l1_half: float, l3_half: float
) -> tuple[MetricGraph, GraphAction]:
    """Midpoint-subdivided product of two cycles with its torus action.

    Full edge lengths are 2*l1_half along the first-factor direction and
    2*l3_half along the second, so each subdivided half-edge has the
    quotient-graph lengths l1_half and l3_half.
    """
    if l1_half <= 0 or l3_half <= 0:
        raise NonPositiveLength(f"half-lengths ({l1_half}, {l3_half})")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")  # degenerate tori are intentional here
        c1, a1 = cycle_graph(n1, 2.0 * l1_half)
        c2, a2 = cycle_graph(n2, 2.0 * l3_half)
    prod = cartesian_product(c1, c2)
    act = product_action(c1, a1, c2, a2)
    g_sub, act_sub = lift_action_subdivided(prod, act)
    _check_structural(g_sub, act_sub, f"torus_action({n1}, {n2})")
    return g_sub, act_sub


def product_circulant_isomorphism(
    n1: int, n2: int, len1: float = 1.0, len2: float = 1.0
) -> tuple[list[int], MetricGraph, MetricGraph]:
    """Vertex bijection C_n1 x C_n2 product -> C_{n1 n2}(n1, n2) for coprime orders.

    Product vertex (kappa, iota) maps to circulant vertex
    (kappa*n2 + iota*n1) mod n1*n2.  The circulant's jump-n1 class carries
    the second-factor length and the jump-n2 class the first-factor length;
    the full edge check (adjacency and lengths) is run before returning.
    """
    if math.gcd(n1, n2) != 1:
        raise NotCoprime(f"gcd({n1}, {n2}) != 1")
    if n1 < 3 or n2 < 3:
        raise JumpOutOfRange("both factors need n >= 3 for well-defined jump classes")
    c1, _ = cycle_graph(n1, len1)
    c2, _ = cycle_graph(n2, len2)
    prod = cartesian_product(c1, c2)
    circ, _ = circulant_graph(n1 * n2, [n1, n2], [len2, len1])

    mapping = [crt_index(n1, n2, i // n2, i % n2) for i in range(n1 * n2)]

    def edge_multiset(g: MetricGraph, relabel=None):
        out = {}
        for e in g.edges:
            u = relabel[e.u] if relabel else e.u
            v = relabel[e.v] if relabel else e.v
            key = (min(u, v), max(u, v), round(e.length, 12))
            out[key] = out.get(key, 0) + 1
        return out

    mapped = edge_multiset(prod, mapping)
    target = edge_multiset(circ)
    if mapped != target:
        witness = next(iter(set(mapped) ^ set(target)))
        raise IsomorphismCheckFailed(f"edge mismatch under CRT map, witness {witness}")
    return mapping, prod, circ
