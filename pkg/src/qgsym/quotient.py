"""Quotient graphs of the two-cycle torus under each 1-D irrep.

Each irrep label pair (s, t) yields a 3-vertex, 4-edge quotient: a central
degree-4 vertex with the standard condition, and two degree-2 vertices with
quasi-periodic gluing phases.  The phase on the L1 pair is omega2^t and the
phase on the L3 pair is omega1^s; this assignment is forced — attaching the
phases the other way round produces the factors of the transposed torus,
which is a different metric graph.  The `swap_pairing` toggle therefore
only exchanges which phase the names tau_a / tau_b refer to; every
observable (graph, matrices, closed form, spectra) is pairing-invariant.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .builders import torus_action
from .graphs import TAG_DUMMY, TAG_ORIGINAL, MetricGraph, make_graph
from .groups import irrep_value
from .scattering import (
    QuasiPeriodic,
    SecularSystem,
    Standard,
    build_secular_system,
    standard_conditions,
)


@dataclass(frozen=True)
class QuotientSpec:
    n1: int
    n2: int
    l1: float
    l3: float
    s: int
    t: int
    swap_pairing: bool = False

    @property
    def phase_l1(self) -> complex:
        """Gluing phase on the two L1 edges (pairing-independent)."""
        return irrep_value(self.n2, self.t, 1)

    @property
    def phase_l3(self) -> complex:
        """Gluing phase on the two L3 edges (pairing-independent)."""
        return irrep_value(self.n1, self.s, 1)

    @property
    def tau_a(self) -> complex:
        """The phase named 'a': on the L1 pair, or the L3 pair when swapped."""
        return self.phase_l3 if self.swap_pairing else self.phase_l1

    @property
    def tau_b(self) -> complex:
        """The phase named 'b': on the L3 pair, or the L1 pair when swapped."""
        return self.phase_l1 if self.swap_pairing else self.phase_l3


def quotient_graph(spec: QuotientSpec) -> tuple[MetricGraph, list]:
    """The 3-vertex quotient graph and its vertex conditions.

    Vertex 0 is the original degree-4 vertex; vertex 1 glues the two L1
    edges (edges 0, 1) with the omega2^t phase, vertex 2 the two L3 edges
    (edges 2, 3) with the omega1^s phase.
    """
    g = make_graph(
        3,
        [
            (0, 1, spec.l1),
            (0, 1, spec.l1),
            (0, 2, spec.l3),
            (0, 2, spec.l3),
        ],
        tags=[TAG_ORIGINAL, TAG_DUMMY, TAG_DUMMY],
    )
    conditions = [
        Standard(0),
        QuasiPeriodic(1, spec.phase_l1, (0, 1)),
        QuasiPeriodic(2, spec.phase_l3, (2, 3)),
    ]
    return g, conditions


def quotient_condition_matrices(spec: QuotientSpec) -> dict[int, tuple[np.ndarray, np.ndarray]]:
    """(A, B) matrices per quotient vertex, in incident-edge order."""
    from .graphs import standard_condition

    out = {0: standard_condition(4)}
    for vid, tau in ((1, spec.phase_l1), (2, spec.phase_l3)):
        A = np.array([[tau, -1.0], [0.0, 0.0]], dtype=complex)
        B = np.array([[0.0, 0.0], [tau, 1.0]], dtype=complex)
        out[vid] = (A, B)
    return out


def quotient_system(spec: QuotientSpec, flipped_edges=()) -> SecularSystem:
    g, conds = quotient_graph(spec)
    return build_secular_system(g, conds, flipped_edges=flipped_edges)


def quotient_secular_closed(spec: QuotientSpec, k: complex) -> complex:
    """Closed-form secular function of the (s, t) quotient factor."""
    alpha = 0.5 * (spec.phase_l1 + 1.0 / spec.phase_l1)
    beta = 0.5 * (spec.phase_l3 + 1.0 / spec.phase_l3)
    l1, l3 = spec.l1, spec.l3
    e = lambda x: np.exp(1j * k * x)
    return complex(
        1.0
        - alpha * e(2 * l1)
        - beta * e(2 * l3)
        + alpha * e(2 * l1 + 4 * l3)
        + beta * e(4 * l1 + 2 * l3)
        - e(4 * (l1 + l3))
    )


def quotient_dispersion_real(spec: QuotientSpec, k):
    """Real dispersion form F(k) with the same zero set as the closed form.

    Satisfies Sigma(k) = -2i * exp(2ik(L1+L3)) * F(k); accepts complex k for
    analytic continuation (winding-number order checks).
    """
    alpha = (0.5 * (spec.phase_l1 + 1.0 / spec.phase_l1)).real
    beta = (0.5 * (spec.phase_l3 + 1.0 / spec.phase_l3)).real
    l1, l3 = spec.l1, spec.l3
    val = np.sin(2 * k * (l1 + l3)) - alpha * np.sin(2 * k * l3) - beta * np.sin(2 * k * l1)
    return float(val) if np.isrealobj(np.asarray(k)) else complex(val)


def all_quotient_specs(n1, n2, l1, l3, swap_pairing=False):
    return [
        QuotientSpec(n1, n2, l1, l3, s, t, swap_pairing)
        for s in range(n1)
        for t in range(n2)
    ]


def secular_product(n1: int, n2: int, l1: float, l3: float, k: complex, swap_pairing: bool = False) -> complex:
    """Product of the closed-form factors over all n1*n2 irrep labels."""
    out = 1.0 + 0.0j
    for spec in all_quotient_specs(n1, n2, l1, l3, swap_pairing):
        out *= quotient_secular_closed(spec, k)
    return out


def torus_secular_system(n1: int, n2: int, l1: float, l3: float) -> SecularSystem:
    """Full secular system of the midpoint-subdivided two-cycle torus.

    All 8*n1*n2 bonds carry standard conditions (dummy vertices are
    transparent) and the determinant factorizes exactly (constant 1) over
    the n1*n2 quotient factors.  The L1 pair of a quotient is glued by a
    second-generator shift, so the L1 half-edges lie along the second-factor
    direction: the first factor gets full length 2*l3, the second 2*l1.
    """
    g, _ = torus_action(n1, n2, l3, l1)
    return build_secular_system(g, standard_conditions(g))
