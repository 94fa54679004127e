"""Element-order censuses in closed form, the perfect-order-classes predicate
and the divisibility laws that every census obeys.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

from .errors import DomainError
from .numtheory import divisors, euler_phi, prime_divisors
from .specs import ComplementSpec, Cyclic, FrobeniusSpec, HomocyclicKernel, QuatCyclic


@dataclass(frozen=True)
class OrderCensus:
    """Map from element order to the number of elements of that order.

    Only orders that occur are stored. ``entries`` is kept as a sorted tuple
    of pairs so the census is hashable; use ``as_dict`` or indexing to read it.
    """

    entries: tuple[tuple[int, int], ...]
    group_order: int

    def __init__(self, entries: Mapping[int, int] | tuple, group_order: int):
        items = tuple(sorted(dict(entries).items()))
        object.__setattr__(self, "entries", items)
        object.__setattr__(self, "group_order", group_order)
        d = dict(items)
        if d.get(1) != 1:
            raise DomainError("a census must have exactly one element of order 1")
        if any(c < 1 for c in d.values()):
            raise DomainError("census counts must be positive")
        if sum(d.values()) != group_order:
            raise DomainError(f"census counts sum to {sum(d.values())}, not {group_order}")
        if any(group_order % k for k in d):
            raise DomainError("an element order does not divide the group order")

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def __getitem__(self, d: int) -> int:
        return dict(self.entries)[d]

    def get(self, d: int, default: int = 0) -> int:
        return dict(self.entries).get(d, default)

    def keys(self) -> list[int]:
        return [k for k, _ in self.entries]

    def __iter__(self):
        return iter(self.entries)


def cyclic_census(n: int) -> OrderCensus:
    if n < 1:
        raise DomainError(f"cyclic order must be positive, got {n}")
    return OrderCensus({d: euler_phi(d) for d in divisors(n)}, n)


def homocyclic_census(p: int, k: int, r: int) -> OrderCensus:
    HomocyclicKernel(p, k, r)
    entries = {1: 1}
    for i in range(1, k + 1):
        entries[p**i] = p ** (r * (i - 1)) * (p**r - 1)
    return OrderCensus(entries, p ** (k * r))


def genquat_census(n: int) -> OrderCensus:
    if n < 3:
        raise DomainError(f"generalised quaternion needs n >= 3, got {n}")
    entries = {1: 1, 2: 1, 4: 2 ** (n - 1) + 2}
    for k in range(3, n):
        entries[2**k] = 2 ** (k - 1)
    return OrderCensus(entries, 2**n)


def product_census(a: OrderCensus, b: OrderCensus) -> OrderCensus:
    """Census of A x B for groups of coprime order."""
    if math.gcd(a.group_order, b.group_order) != 1:
        raise DomainError("direct factors must have coprime orders")
    entries = {}
    for x, cx in a:
        for y, cy in b:
            entries[x * y] = cx * cy
    return OrderCensus(entries, a.group_order * b.group_order)


def frobenius_census(kernel: OrderCensus, complement: OrderCensus) -> OrderCensus:
    """Census of a Frobenius group from those of its kernel and complement.

    Kernel elements keep their counts; each non-identity complement order d
    picks up a factor |K|, since every element outside the kernel is
    conjugate into the complement and the complement acts freely.
    """
    if math.gcd(kernel.group_order, complement.group_order) != 1:
        raise DomainError("kernel and complement orders must be coprime")
    entries = kernel.as_dict()
    for d, c in complement:
        if d == 1:
            continue
        assert d not in entries
        entries[d] = kernel.group_order * c
    return OrderCensus(entries, kernel.group_order * complement.group_order)


def is_poc(c: OrderCensus) -> bool:
    """Every order class size divides the group order."""
    return all(c.group_order % count == 0 for _, count in c)


@dataclass(frozen=True)
class DivisibilityReport:
    phi_ok: bool
    pm1_ok: bool


def divisibility_report(c: OrderCensus) -> DivisibilityReport:
    phi_ok = all(count % euler_phi(d) == 0 for d, count in c)
    if is_poc(c):
        pm1_ok = all(c.group_order % (p - 1) == 0 for p in prime_divisors(c.group_order)) if c.group_order > 1 else True
    else:
        pm1_ok = True
    return DivisibilityReport(phi_ok, pm1_ok)


# ---------------------------------------------------------------------------
# Censuses of complements and Frobenius groups given symbolically


@lru_cache(maxsize=None)
def complement_census(spec: ComplementSpec) -> OrderCensus:
    """Census of a complement: closed form for nilpotent shapes, otherwise by
    brute force over a matrix realization (cached)."""
    if isinstance(spec, Cyclic):
        return cyclic_census(spec.n)
    if isinstance(spec, QuatCyclic):
        return product_census(genquat_census(spec.n), cyclic_census(spec.m))
    from .groups import MatrixGroup, find_realization, order_census_bruteforce

    action = find_realization(spec)
    return order_census_bruteforce(MatrixGroup.from_action(action))


def spec_census(spec: FrobeniusSpec) -> OrderCensus:
    k = spec.kernel
    return frobenius_census(homocyclic_census(k.p, k.k, k.r), complement_census(spec.complement))
