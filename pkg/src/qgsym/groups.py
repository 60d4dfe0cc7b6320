"""Cyclic groups, their 1-D complex irreps, and the coprime index maps.

Group elements are residues; 0 is the identity.  All exponents are reduced
mod the order before evaluating roots of unity, which keeps orthogonality
sums near machine precision even for large inputs.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import LabelOutOfRange, NotCoprime

TWO_PI = 2.0 * math.pi


def _root_of_unity(num: int, den: int) -> complex:
    """exp(2*pi*i*num/den) with num reduced mod den first."""
    return cmath.exp(1j * TWO_PI * (num % den) / den)


def irrep_value(n: int, s: int, kappa: int) -> complex:
    """Value of the s-th irrep of the order-n cyclic group at residue kappa."""
    if not 0 <= s < n:
        raise LabelOutOfRange(f"irrep label {s} not in [0, {n})")
    return _root_of_unity(s * (kappa % n), n)


def product_irrep_value(n1: int, n2: int, s: int, t: int, kappa: int, iota: int) -> complex:
    if not 0 <= s < n1:
        raise LabelOutOfRange(f"label s={s} not in [0, {n1})")
    if not 0 <= t < n2:
        raise LabelOutOfRange(f"label t={t} not in [0, {n2})")
    return irrep_value(n1, s, kappa) * irrep_value(n2, t, iota)


def irrep_sum(n1: int, n2: int, kappa: int, iota: int) -> complex:
    """Sum of all n1*n2 product irreps at (kappa, iota).

    Equals n1*n2 at the identity and vanishes elsewhere.
    """
    total = 0.0 + 0.0j
    for s in range(n1):
        for t in range(n2):
            total += product_irrep_value(n1, n2, s, t, kappa, iota)
    return total


def crt_index(n1: int, n2: int, kappa: int, iota: int) -> int:
    """Coprime-order relabeling (kappa, iota) -> kappa*n2 + iota*n1 mod n1*n2.

    Bijective on residue pairs when gcd(n1, n2) = 1; the same formula maps
    irrep label pairs (s, t) to the single-cycle label.
    """
    if math.gcd(n1, n2) != 1:
        raise NotCoprime(f"gcd({n1}, {n2}) != 1")
    return (kappa * n2 + iota * n1) % (n1 * n2)


@dataclass(frozen=True)
class CyclicGroup:
    order: int

    def elements(self) -> range:
        return range(self.order)


@dataclass(frozen=True)
class Irrep:
    """One-dimensional irrep kappa -> omega^(s*kappa) of the order-n cyclic group."""

    n: int
    s: int

    def __post_init__(self) -> None:
        if not 0 <= self.s < self.n:
            raise LabelOutOfRange(f"irrep label {self.s} not in [0, {self.n})")

    def value(self, element) -> complex:
        kappa = element[0] if isinstance(element, tuple) else element
        return irrep_value(self.n, self.s, kappa)


@dataclass(frozen=True)
class ProductIrrep:
    """Irrep (kappa, iota) -> omega1^(s*kappa) * omega2^(t*iota) of G_n1 x G_n2."""

    n1: int
    n2: int
    s: int
    t: int

    def __post_init__(self) -> None:
        if not 0 <= self.s < self.n1 or not 0 <= self.t < self.n2:
            raise LabelOutOfRange(f"labels ({self.s}, {self.t}) out of range")

    def value(self, element: tuple[int, int]) -> complex:
        kappa, iota = element
        return product_irrep_value(self.n1, self.n2, self.s, self.t, kappa, iota)
