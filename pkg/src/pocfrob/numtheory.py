"""Elementary number theory: factorisation, totients, primitive prime
divisors and bounded solvers for the exponential Diophantine equations that
the classification of perfect-order-class Frobenius groups depends on.

Everything here is exact integer arithmetic. Factorisation and primality are
delegated to sympy; the rest is written out directly.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import sympy

from .errors import DomainError


def primes_up_to(n: int) -> tuple[int, ...]:
    """All primes p <= n, ascending."""
    return tuple(sympy.primerange(2, n + 1)) if n >= 2 else ()


@dataclass(frozen=True)
class FactoredInteger:
    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1:
                raise DomainError(f"bad factor list {self.factors}")
            last = p
            prod *= p**e
        if prod != self.value:
            raise DomainError(f"factors {self.factors} do not multiply to {self.value}")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def __iter__(self):
        return iter(self.factors)


@lru_cache(maxsize=4096)
def factorize(n: int) -> FactoredInteger:
    """Canonical factorisation of a positive integer."""
    if n < 1:
        raise DomainError(f"factorize needs n >= 1, got {n}")
    return FactoredInteger(n, tuple(sorted((int(p), int(e)) for p, e in sympy.factorint(n).items())))


def is_prime(n: int) -> bool:
    return bool(sympy.isprime(n))


def prime_divisors(n: int) -> tuple[int, ...]:
    return factorize(n).primes


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def euler_phi(n: int) -> int:
    if n < 1:
        raise DomainError(f"euler_phi needs n >= 1, got {n}")
    result = 1
    for p, e in factorize(n):
        result *= p ** (e - 1) * (p - 1)
    return result


def prime_power_decompose(n: int) -> tuple[int, int] | None:
    """Return (p, e) with p**e == n if n is a prime power other than 1."""
    if n < 2:
        raise DomainError(f"prime_power_decompose needs n >= 2, got {n}")
    f = factorize(n).factors
    if len(f) == 1:
        return f[0]
    return None


def is_pi_number(n: int, pi: Iterable[int]) -> bool:
    """True iff every prime divisor of n lies in pi (1 is a pi-number for any pi)."""
    pi = set(pi)
    for p in pi:
        if not is_prime(p):
            raise DomainError(f"{p} is not prime")
    return all(p in pi for p in prime_divisors(n)) if n > 1 else True


def is_pierpont_prime(p: int) -> bool:
    """Prime of the form 1 + 2^a 3^b."""
    return p >= 2 and is_prime(p) and (p == 2 or is_pi_number(p - 1, (2, 3)))


def multiplicative_order(a: int, n: int) -> int:
    """Order of a in (Z/n)^*."""
    if math.gcd(a, n) != 1:
        raise DomainError(f"{a} is not a unit modulo {n}")
    if n == 1:
        return 1
    order = euler_phi(n)
    for q, _ in factorize(order):
        while order % q == 0 and pow(a, order // q, n) == 1:
            order //= q
    return order


def valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


# ---------------------------------------------------------------------------
# Primitive prime divisors


@dataclass(frozen=True)
class ZsigmondyQuery:
    a: int
    b: int
    n: int
    epsilon: int

    def __post_init__(self):
        if self.epsilon not in (1, -1):
            raise DomainError("epsilon must be +1 or -1")
        if self.n < 2:
            raise DomainError(f"n must be at least 2, got {self.n}")
        if self.b < 1 or self.a <= self.b:
            raise DomainError(f"need a > b >= 1, got a={self.a}, b={self.b}")
        if math.gcd(self.a, self.b) != 1:
            raise DomainError(f"a={self.a} and b={self.b} are not coprime")

    def term(self, k: int) -> int:
        return self.a**k + self.epsilon * self.b**k


@dataclass(frozen=True)
class ZsigmondyResult:
    primitive_divisors: frozenset[int]

    @property
    def exception(self) -> bool:
        return not self.primitive_divisors


def is_zsigmondy_exception(a: int, b: int, n: int, epsilon: int) -> bool:
    """The inputs excluded by Zsigmondy's theorem."""
    if epsilon == 1:
        return (a, b, n) == (2, 1, 3)
    if (a, b, n) == (2, 1, 6):
        return True
    if n == 2:
        s = a + b
        return s & (s - 1) == 0
    return False


def zsigmondy(query: ZsigmondyQuery) -> ZsigmondyResult:
    """Primes dividing a^n + eps*b^n that divide no a^k + eps*b^k for k < n.

    An empty set signals the exception case; whether it coincides with the
    theorem's named exceptions is checked by ``is_zsigmondy_exception``.
    """
    value = query.term(query.n)
    # strip every prime shared with an earlier term; what is left carries
    # exactly the primitive primes
    rest = value
    for k in range(1, query.n):
        earlier = abs(query.term(k))
        if earlier == 0:
            continue
        g = math.gcd(rest, earlier)
        while g > 1:
            rest //= g
            g = math.gcd(rest, g)
    found = frozenset(factorize(rest).primes) if rest > 1 else frozenset()
    return ZsigmondyResult(found)


# ---------------------------------------------------------------------------
# Bounded exponential Diophantine solvers


class Family(enum.Enum):
    CONS_PP = "CONS_PP"  # p^a - q^b = 1, p, q prime, a, b > 1          -> (p, q, a, b)
    DIFF_2_3 = "DIFF_2_3"  # 2^a - 3^b = 1                               -> (a, b)
    DIFF_3_2 = "DIFF_3_2"  # 3^b - 2^a = 1                               -> (a, b)
    DIFF_23_23 = "DIFF_23_23"  # 2^x 3^y - 2^u 3^v = 1                   -> (x, y, u, v)
    DIFF_2Q = "DIFF_2Q"  # 2^x q^y - 2^u q^v = 1                         -> (x, y, u, v)
    DIFF_23_25 = "DIFF_23_25"  # 2^x 3^y - 2^u 5^v = 1                   -> (x, y, u, v)
    DIFF_25_23 = "DIFF_25_23"  # 2^u 5^v - 2^x 3^y = 1                   -> (x, y, u, v)
    SANDWICH_23 = "SANDWICH_23"  # p-1 and p+1 both {2,3}-numbers        -> (p,)
    SANDWICH_2Q = "SANDWICH_2Q"  # n^2-1 has prime divisors exactly 2, q -> (n,)
    SQUARE_235 = "SQUARE_235"  # n^2-1 has prime divisors exactly 2,3,5  -> (n,)
    DIO240 = "DIO240"  # p^r - 1 = 240 q^m, see solve_family             -> (p, r, q, m)


_NEEDS_Q = {Family.DIFF_2Q, Family.SANDWICH_2Q}


@dataclass(frozen=True)
class DiophantineFamily:
    tag: Family
    q: int | None = None

    def __post_init__(self):
        if not isinstance(self.tag, Family):
            object.__setattr__(self, "tag", Family(self.tag))
        if self.tag in _NEEDS_Q:
            if self.q is None or self.q == 2 or not is_prime(self.q):
                raise DomainError(f"{self.tag.value} needs an odd prime q, got {self.q}")
        elif self.q is not None:
            raise DomainError(f"{self.tag.value} takes no q parameter")


def smooth_numbers(primes: Iterable[int], bound: int) -> list[int]:
    """All n <= bound whose prime divisors lie in ``primes`` (1 included)."""
    out = [1]
    for p in sorted(set(primes)):
        grown = []
        for n in out:
            while n <= bound:
                grown.append(n)
                n *= p
        out = grown
    return sorted(out)


def _exponents(n: int, primes: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(valuation(n, p) for p in primes)


def _unit_differences(left: tuple[int, ...], right: tuple[int, ...], bound: int):
    """Pairs (l, r) with l - r = 1, l a left-smooth and r a right-smooth number, l <= bound."""
    rights = set(smooth_numbers(right, bound))
    for l in smooth_numbers(left, bound):
        if l - 1 in rights:
            yield l, l - 1


def _sandwiches(primes: tuple[int, ...], bound: int):
    """Integers 2 <= n <= bound with n-1 and n+1 both ``primes``-smooth."""
    smooth = smooth_numbers(primes, bound + 1)
    members = set(smooth)
    for s in smooth:
        if s + 2 in members and s + 1 <= bound:
            yield s + 1


def solve_family(family: DiophantineFamily, bound: int) -> list[tuple[int, ...]]:
    """Every solution of ``family`` whose power terms are at most ``bound``.

    Bounding the size of the power terms bounds every variable too, and
    makes the search exhaustive over a finite box: the S-smooth numbers up
    to ``bound`` are generated outright rather than sampled.
    """
    if bound < 2:
        raise DomainError(f"bound must be at least 2, got {bound}")
    tag = family.tag
    sols: set[tuple[int, ...]] = set()

    if tag is Family.CONS_PP:
        powers = {}
        for p in primes_up_to(math.isqrt(bound)):
            v, a = p * p, 2
            while v <= bound:
                powers[v] = (p, a)
                v *= p
                a += 1
        for v, (p, a) in powers.items():
            if v - 1 in powers:
                q, b = powers[v - 1]
                sols.add((p, q, a, b))

    elif tag is Family.DIFF_2_3:
        for l, r in _unit_differences((2,), (3,), bound):
            sols.add((valuation(l, 2), valuation(r, 3)))

    elif tag is Family.DIFF_3_2:
        for l, r in _unit_differences((3,), (2,), bound):
            sols.add((valuation(r, 2), valuation(l, 3)))

    elif tag is Family.DIFF_23_23:
        for l, r in _unit_differences((2, 3), (2, 3), bound):
            sols.add(_exponents(l, (2, 3)) + _exponents(r, (2, 3)))

    elif tag is Family.DIFF_2Q:
        q = family.q
        for l, r in _unit_differences((2, q), (2, q), bound):
            sols.add(_exponents(l, (2, q)) + _exponents(r, (2, q)))

    elif tag is Family.DIFF_23_25:
        for l, r in _unit_differences((2, 3), (2, 5), bound):
            sols.add(_exponents(l, (2, 3)) + _exponents(r, (2, 5)))

    elif tag is Family.DIFF_25_23:
        for l, r in _unit_differences((2, 5), (2, 3), bound):
            sols.add(_exponents(r, (2, 3)) + _exponents(l, (2, 5)))

    elif tag is Family.SANDWICH_23:
        sols.update((n,) for n in _sandwiches((2, 3), bound))

    elif tag is Family.SANDWICH_2Q:
        q = family.q
        for n in _sandwiches((2, q), bound):
            if (n * n - 1) % (2 * q) == 0:
                sols.add((n,))

    elif tag is Family.SQUARE_235:
        for n in _sandwiches((2, 3, 5), bound):
            if (n * n - 1) % 30 == 0:
                sols.add((n,))

    elif tag is Family.DIO240:
        for d in divisors(240):
            q = d + 1
            if q <= 5 or 240 % q == 0 or not is_prime(q):
                continue
            m, v = 1, 240 * q + 1
            while v <= bound:
                pp = prime_power_decompose(v)
                if pp is not None and pp[0] > 5 and pp[1] > 1:
                    sols.add((pp[0], pp[1], q, m))
                m += 1
                v = 240 * q**m + 1

    return sorted(sols)
