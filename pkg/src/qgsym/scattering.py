"""Bond scattering matrices and the secular determinant det(I - S D(k)).

Bonds are ordered globally by (edge id, direction flag): bond 2e runs along
edge e's stored orientation, bond 2e+1 against it.  For the two vertex
condition families in scope (standard and quasi-periodic) the scattering
matrix S is k-independent and unitary; the phase matrix D(k) is
diag(exp(i k L_b)).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Union

import numpy as np

from .errors import (
    MissingCondition,
    NonUnitPhase,
    UnsupportedCondition,
    ZeroDegree,
)
from .graphs import MetricGraph


@dataclass(frozen=True)
class Standard:
    """Continuity + derivative-sum condition at a vertex."""

    vertex: int


@dataclass(frozen=True)
class QuasiPeriodic:
    """Degree-2 pure-transmission condition f_q = tau*f_p, f_q' = -tau*f_p'.

    `edges` is the ordered pair (p, q) of the two incident edges; the wave
    leaving along q picks up tau, the wave leaving along p picks up 1/tau.
    """

    vertex: int
    tau: complex
    edges: tuple[int, int]


Condition = Union[Standard, QuasiPeriodic]


def vertex_scattering_standard(d: int) -> np.ndarray:
    """d x d vertex scattering matrix 2/d - delta (delta on back-reflection)."""
    if d < 1:
        raise ZeroDegree("vertex degree must be >= 1")
    return np.full((d, d), 2.0 / d, dtype=complex) - np.eye(d, dtype=complex)


def vertex_scattering_quasiperiodic(tau: complex) -> np.ndarray:
    """2 x 2 pure transmission with phases 1/tau and tau, zero reflection.

    Rows/columns are ordered (p-side, q-side): the amplitude leaving along p
    is 1/tau times the one arriving along q, and vice versa with tau.
    """
    tau = complex(tau)
    if abs(abs(tau) - 1.0) > 1e-12:
        raise NonUnitPhase(f"|tau| = {abs(tau)} != 1")
    return np.array([[0.0, 1.0 / tau], [tau, 0.0]], dtype=complex)


@dataclass(frozen=True)
class SecularSystem:
    """k-independent scattering matrix plus per-bond lengths."""

    S: np.ndarray
    lengths: np.ndarray  # L_b per bond, bond order (edge id, direction)
    graph: MetricGraph

    @property
    def size(self) -> int:
        return self.S.shape[0]

    def unitarity_defect(self) -> float:
        return float(np.max(np.abs(self.S @ self.S.conj().T - np.eye(self.size))))

    def phase_matrix(self, k: complex) -> np.ndarray:
        return np.diag(np.exp(1j * k * self.lengths))


def build_secular_system(
    g: MetricGraph,
    conditions: Iterable[Condition] | Mapping[int, Condition],
    flipped_edges: Iterable[int] = (),
) -> SecularSystem:
    """Assemble the bond scattering matrix from per-vertex conditions.

    `flipped_edges` reverses the orientation convention of the listed edges
    (bond 2e then runs head-to-tail); the secular determinant is invariant
    under any such re-assembly.
    """
    if isinstance(conditions, Mapping):
        cond_by_vertex = dict(conditions)
    else:
        cond_by_vertex = {c.vertex: c for c in conditions}
    for v in range(g.n_vertices):
        if v not in cond_by_vertex:
            raise MissingCondition(f"vertex {v} has no condition")

    flipped = set(flipped_edges)
    nb = 2 * g.n_edges
    # origin[b], terminus[b] under the chosen orientation convention
    origin = np.empty(nb, dtype=int)
    terminus = np.empty(nb, dtype=int)
    lengths = np.empty(nb, dtype=float)
    for e in g.edges:
        u, v = (e.v, e.u) if e.id in flipped else (e.u, e.v)
        origin[2 * e.id], terminus[2 * e.id] = u, v
        origin[2 * e.id + 1], terminus[2 * e.id + 1] = v, u
        lengths[2 * e.id] = lengths[2 * e.id + 1] = e.length

    S = np.zeros((nb, nb), dtype=complex)
    for v, cond in cond_by_vertex.items():
        bonds_out = [b for b in range(nb) if origin[b] == v]
        bonds_in = [b for b in range(nb) if terminus[b] == v]
        if isinstance(cond, Standard):
            d = len(bonds_out)
            if d == 0:
                continue  # isolated vertex carries no scattering
            for bo in bonds_out:
                for bi in bonds_in:
                    S[bo, bi] = 2.0 / d - (1.0 if bo == bi ^ 1 else 0.0)
        elif isinstance(cond, QuasiPeriodic):
            tau = complex(cond.tau)
            if abs(abs(tau) - 1.0) > 1e-12:
                raise NonUnitPhase(f"|tau| = {abs(tau)} != 1 at vertex {v}")
            ep, eq = cond.edges
            if ep == eq or g.is_loop(ep) or g.is_loop(eq):
                raise UnsupportedCondition(f"quasi-periodic vertex {v} needs two distinct non-loop edges")
            if len(bonds_in) != 2:
                raise UnsupportedCondition(f"quasi-periodic vertex {v} must have degree 2")
            in_p = next(b for b in (2 * ep, 2 * ep + 1) if terminus[b] == v)
            in_q = next(b for b in (2 * eq, 2 * eq + 1) if terminus[b] == v)
            S[in_q ^ 1, in_p] = tau
            S[in_p ^ 1, in_q] = 1.0 / tau
        else:
            raise UnsupportedCondition(f"vertex {v}: {type(cond).__name__}")

    return SecularSystem(S=S, lengths=lengths, graph=g)


def secular_det(sys: SecularSystem, k: complex) -> complex:
    """det(I - S D(k)) via dense LU with partial pivoting."""
    M = np.eye(sys.size, dtype=complex) - sys.S * np.exp(1j * k * sys.lengths)[None, :]
    return complex(np.linalg.det(M))


def standard_conditions(g: MetricGraph) -> list[Standard]:
    return [Standard(v) for v in range(g.n_vertices)]
