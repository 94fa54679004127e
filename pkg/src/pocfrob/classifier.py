"""Perfect-order-class verdicts for Frobenius groups and their complements,
decided by the classification theorems where they apply and by the
three-condition reduction to the complement otherwise.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .numtheory import is_pi_number, is_pierpont_prime, prime_power_decompose, primes_up_to
from .orderclasses import complement_census, is_poc
from .specs import (
    ComplementSpec,
    Cyclic,
    FrobeniusSpec,
    Metacyclic,
    QuatCyclic,
    SL2_3,
    SL2_5,
)


class Justification(enum.Enum):
    THM_A = "ThmA"
    THM_B = "ThmB"
    THM_C = "ThmC"
    THM_D = "ThmD"
    THM_E = "ThmE"
    NILPOTENT_COMPLEMENT = "ThmNilpCompl"
    NILPOTENT_IN_FROBENIUS = "ThmNonilpCompl"
    BIPRIMARY_Q = "ThmNn2qIs35"
    CYCLIC_GROUP = "Prop21"
    TWO_GROUP = "Prop24"
    BRUTE_FORCE = "BruteForce"
    UNCLASSIFIED = "Unclassified"

    @property
    def display(self) -> str:
        return _DISPLAY[self]


_DISPLAY = {
    Justification.THM_A: "Theorem A",
    Justification.THM_B: "Theorem B",
    Justification.THM_C: "Theorem C",
    Justification.THM_D: "Theorem D",
    Justification.THM_E: "Theorem E",
    Justification.NILPOTENT_COMPLEMENT: "nilpotent complement classification",
    Justification.NILPOTENT_IN_FROBENIUS: "nilpotent complements must be cyclic",
    Justification.BIPRIMARY_Q: "biprimary complements need q in {3, 5}",
    Justification.CYCLIC_GROUP: "cyclic groups with perfect order classes",
    Justification.TWO_GROUP: "2-groups with perfect order classes",
    Justification.BRUTE_FORCE: "brute-force census",
    Justification.UNCLASSIFIED: "unclassified",
}


@dataclass(frozen=True)
class Verdict:
    poc: bool
    justification: Justification
    details: str

    def __post_init__(self):
        if not self.details:
            raise ValueError("a verdict needs a non-empty condition trace")

    def summary(self) -> str:
        return f"POC: {'yes' if self.poc else 'no'} ({self.justification.display})"


# rank-2 groups with cyclic complement: (p, |H|)
CYCLIC_RANK_TWO = ((3, 8), (5, 24), (7, 48), (17, 288))

# kernel prime, kernel rank and complement of the biprimary non-nilpotent cases
THEOREM_D_FAMILIES = (
    (5, 2, SL2_3()),
    (5, 2, Metacyclic(3, 8, 2)),
    (7, 2, Metacyclic(3, 16, 2)),
    (17, 2, Metacyclic(9, 32, 8)),
    (3, 4, Metacyclic(5, 16, 4)),
)


def theorem_a_check(spec: FrobeniusSpec) -> Verdict:
    """Reduce to the complement: (a) H is POC, (b) K homocyclic of odd
    order, (c) |H| = p^r - 1. Details name the first condition that fails."""
    h = spec.complement
    p, r = spec.kernel.p, spec.kernel.r
    a = is_poc(complement_census(h))
    if not a:
        return Verdict(False, Justification.THM_A, f"condition (a) fails: {h.text} does not have perfect order classes")
    # (b) holds by construction: the kernel type is homocyclic with p odd
    target = p**r - 1
    if h.order != target:
        return Verdict(False, Justification.THM_A, f"condition (c) fails: |H| = {h.order} != {p}^{r} - 1 = {target}")
    return Verdict(True, Justification.THM_A, f"(a) {h.text} is POC; (b) kernel homocyclic, p = {p} odd; (c) |H| = {target} = {p}^{r} - 1")


def classify_complement(spec: ComplementSpec) -> Verdict:
    """Whether the complement, as a group on its own, has perfect order classes."""
    if isinstance(spec, Cyclic):
        n = spec.n
        ok = n == 1 or (n % 2 == 0 and is_pi_number(n, (2, 3)))
        return Verdict(ok, Justification.CYCLIC_GROUP, f"C{n}: order {'is' if ok else 'is not'} trivial or an even {{2,3}}-number")
    if isinstance(spec, QuatCyclic):
        if spec.m == 1:
            return Verdict(False, Justification.TWO_GROUP, f"{spec.text} is a non-cyclic 2-group")
        pp = prime_power_decompose(spec.m) if spec.m > 1 else None
        ok = pp is not None and (spec.n, pp[0]) in ((3, 3), (4, 5))
        return Verdict(ok, Justification.NILPOTENT_COMPLEMENT, f"{spec.text} {'is' if ok else 'is not'} Q8 x C(3^k) or Q16 x C(5^k)")
    census = complement_census(spec)
    ok = is_poc(census)
    bad = [f"c_{d} = {c}" for d, c in census if census.group_order % c]
    trace = "all order classes divide |H|" if ok else "order classes not dividing |H|: " + ", ".join(bad)
    return Verdict(ok, Justification.BRUTE_FORCE, f"{spec.text}: {trace} = {census.group_order}")


def _cyclic(spec: FrobeniusSpec) -> Verdict:
    n = spec.complement.order
    p, r = spec.kernel.p, spec.kernel.r
    if r == 1:
        ok = n % 2 == 0 and is_pi_number(n, (2, 3)) and p == n + 1
        why = (
            f"rank 1, p = {p} = 1 + |H| is a Pierpont prime and |H| = {n} is an even {{2,3}}-number"
            if ok
            else f"rank 1 needs p = 1 + |H| with |H| an even {{2,3}}-number; have p = {p}, |H| = {n}"
        )
    elif r == 2:
        ok = (p, n) in CYCLIC_RANK_TWO
        why = f"rank 2 with (p, |H|) = ({p}, {n}) {'in' if ok else 'not in'} {{(3,8), (5,24), (7,48), (17,288)}}"
    else:
        ok = False
        why = f"cyclic complement with kernel rank {r} > 2"
    return Verdict(ok, Justification.THM_C, "cyclic complement: " + why)


def classify(spec: FrobeniusSpec) -> Verdict:
    """POC verdict for a Frobenius group from the classification theorems."""
    h = spec.complement
    p, r = spec.kernel.p, spec.kernel.r

    if isinstance(h, Cyclic):
        return _cyclic(spec)
    if isinstance(h, QuatCyclic):
        return Verdict(False, Justification.NILPOTENT_IN_FROBENIUS, f"{h.text} is nilpotent but not cyclic")
    if isinstance(h, SL2_5):
        ok = p == 11 and r == 2
        return Verdict(ok, Justification.THM_B, f"insoluble complement SL(2,5): kernel must be homocyclic of rank 2 over p = 11; have p = {p}, r = {r}")

    primes = h.primes
    if 2 in primes and len(primes) == 2:
        q = primes[1]
        if q not in (3, 5):
            return Verdict(False, Justification.BIPRIMARY_Q, f"non-nilpotent {{2,{q}}}-complement with q not in {{3, 5}}")
        key = h.canonical() if isinstance(h, Metacyclic) else h
        ok = (p, r, key) in THEOREM_D_FAMILIES
        note = ""
        if isinstance(h, Metacyclic):
            note = f" (presentation normalized to {key.text})"
        return Verdict(ok, Justification.THM_D, f"non-nilpotent {{2,{q}}}-complement {h.text}{note} with p = {p}, r = {r}: {'listed' if ok else 'not listed'}")
    if set(primes) == {2, 3, 5} and h.is_soluble:
        return Verdict(False, Justification.THM_E, f"soluble {{2,3,5}}-complement of order {h.order}, divisible by 30")

    a = theorem_a_check(spec)
    if not a.poc:
        return a
    return Verdict(True, Justification.UNCLASSIFIED, "no classification theorem covers this complement; reduction conditions hold: " + a.details)


def pierpont_family_params(max_order: int) -> list[tuple[int, int]]:
    """(p, k) with p an odd Pierpont prime and p^k (p - 1) <= max_order,
    ordered by that group order."""
    out = []
    for p in primes_up_to(max_order):
        if p == 2 or not is_pierpont_prime(p):
            continue
        k = 1
        while p**k * (p - 1) <= max_order:
            out.append((p, k))
            k += 1
    return sorted(out, key=lambda pk: (pk[0] ** pk[1] * (pk[0] - 1), pk))
