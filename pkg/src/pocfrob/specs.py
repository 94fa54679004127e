"""Symbolic descriptions of homocyclic kernels, Frobenius complements and
Frobenius groups, together with their text grammar.

Grammar (whitespace is ignored)::

    kernel     ::= "H(" p "," k "," r ")" | "C" p^k [ "^" r ]
    complement ::= "C" n | "Q" 2^n [ "xC" m ] | "M(" alpha "," beta "," gamma ")"
                 | "SL(2,3)" | "SL(2,5)"
    frobenius  ::= kernel ":" complement

Canonical text uses the first kernel form, writes quaternion complements
with their cyclic factor ("Q8xC1") and reduces gamma modulo alpha.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ParseError, SpecError
from .numtheory import is_prime, prime_divisors, prime_power_decompose


@dataclass(frozen=True)
class HomocyclicKernel:
    """(C_{p^k})^r for an odd prime p."""

    p: int
    k: int
    r: int

    def __post_init__(self):
        if self.p == 2 or not is_prime(self.p):
            raise SpecError(f"kernel prime must be an odd prime, got {self.p}")
        if self.k < 1 or self.r < 1:
            raise SpecError(f"kernel needs k >= 1 and r >= 1, got k={self.k}, r={self.r}")

    @property
    def exponent(self) -> int:
        return self.p**self.k

    @property
    def order(self) -> int:
        return self.p ** (self.k * self.r)

    @property
    def text(self) -> str:
        return f"H({self.p},{self.k},{self.r})"

    @property
    def label(self) -> str:
        """Short display form such as "C25^2"."""
        base = f"C{self.exponent}"
        return base if self.r == 1 else f"{base}^{self.r}"

    def __str__(self):
        return self.text


class ComplementSpec:
    """Base class for the five complement shapes."""

    order: int
    text: str

    @property
    def primes(self) -> tuple[int, ...]:
        return prime_divisors(self.order) if self.order > 1 else ()

    @property
    def is_cyclic(self) -> bool:
        return False

    @property
    def is_nilpotent(self) -> bool:
        return False

    @property
    def is_soluble(self) -> bool:
        return True

    def __str__(self):
        return self.text


@dataclass(frozen=True)
class Cyclic(ComplementSpec):
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise SpecError(f"cyclic order must be positive, got {self.n}")

    @property
    def order(self) -> int:
        return self.n

    @property
    def text(self) -> str:
        return f"C{self.n}"

    @property
    def is_cyclic(self) -> bool:
        return True

    @property
    def is_nilpotent(self) -> bool:
        return True


@dataclass(frozen=True)
class QuatCyclic(ComplementSpec):
    """Q_{2^n} x C_m."""

    n: int
    m: int = 1

    def __post_init__(self):
        if self.n < 3:
            raise SpecError(f"generalised quaternion needs n >= 3, got {self.n}")
        if self.m < 1 or self.m % 2 == 0:
            raise SpecError(f"cyclic factor must be odd and positive, got {self.m}")

    @property
    def order(self) -> int:
        return 2**self.n * self.m

    @property
    def text(self) -> str:
        return f"Q{2 ** self.n}xC{self.m}"

    @property
    def is_nilpotent(self) -> bool:
        return True


@dataclass(frozen=True)
class Metacyclic(ComplementSpec):
    """<x, y | x^alpha, y^beta, x^y = x^gamma>, gamma stored modulo alpha."""

    alpha: int
    beta: int
    gamma: int

    def __post_init__(self):
        if self.alpha < 2 or self.beta < 2:
            raise SpecError(f"metacyclic needs alpha, beta >= 2, got {self.alpha}, {self.beta}")
        object.__setattr__(self, "gamma", self.gamma % self.alpha)
        if math.gcd(self.alpha, self.beta) != 1:
            raise SpecError(f"gcd(alpha, beta) = {math.gcd(self.alpha, self.beta)} != 1")
        if math.gcd(self.alpha, self.gamma - 1) != 1:
            raise SpecError(f"gcd(alpha, gamma - 1) = {math.gcd(self.alpha, self.gamma - 1)} != 1")
        if pow(self.gamma, self.beta, self.alpha) != 1:
            raise SpecError(f"gamma^beta = {pow(self.gamma, self.beta, self.alpha)} != 1 mod alpha")

    @property
    def order(self) -> int:
        return self.alpha * self.beta

    @property
    def text(self) -> str:
        return f"M({self.alpha},{self.beta},{self.gamma})"

    def canonical(self) -> "Metacyclic":
        """Isomorphic presentation with the least gamma reachable by y -> y^j."""
        g = min(
            pow(self.gamma, j, self.alpha)
            for j in range(1, self.beta + 1)
            if math.gcd(j, self.beta) == 1
        )
        return Metacyclic(self.alpha, self.beta, g)


@dataclass(frozen=True)
class SL2_3(ComplementSpec):
    @property
    def order(self) -> int:
        return 24

    @property
    def text(self) -> str:
        return "SL(2,3)"


@dataclass(frozen=True)
class SL2_5(ComplementSpec):
    @property
    def order(self) -> int:
        return 120

    @property
    def text(self) -> str:
        return "SL(2,5)"

    @property
    def is_soluble(self) -> bool:
        return False


@dataclass(frozen=True)
class FrobeniusSpec:
    kernel: HomocyclicKernel
    complement: ComplementSpec

    def __post_init__(self):
        if self.complement.order < 2:
            raise SpecError("complement must be nontrivial")
        if self.complement.order % self.kernel.p == 0:
            raise SpecError(
                f"p={self.kernel.p} divides the complement order {self.complement.order}"
            )

    @property
    def order(self) -> int:
        return self.kernel.order * self.complement.order

    @property
    def text(self) -> str:
        return f"{self.kernel.text}:{self.complement.text}"

    @property
    def structure_string(self) -> str:
        return f"{self.kernel.label}:{self.complement.text}"

    def __str__(self):
        return self.text


# ---------------------------------------------------------------------------
# Parsing


class _Reader:
    def __init__(self, text: str):
        self.chars = [(c, i) for i, c in enumerate(text) if not c.isspace()]
        self.pos = 0
        self.end = len(text)

    def where(self) -> int:
        return self.chars[self.pos][1] if self.pos < len(self.chars) else self.end

    def peek(self, s: str) -> bool:
        got = "".join(c for c, _ in self.chars[self.pos : self.pos + len(s)])
        return got == s

    def expect(self, s: str):
        if not self.peek(s):
            raise ParseError(f"expected {s!r}", self.where())
        self.pos += len(s)

    def integer(self, signed: bool = False) -> int:
        start = self.where()
        sign = 1
        if signed and self.peek("-"):
            sign = -1
            self.pos += 1
        digits = ""
        while self.pos < len(self.chars) and self.chars[self.pos][0].isdigit():
            digits += self.chars[self.pos][0]
            self.pos += 1
        if not digits:
            raise ParseError("expected an integer", start)
        return sign * int(digits)

    def done(self) -> bool:
        return self.pos >= len(self.chars)


def _kernel(rd: _Reader) -> HomocyclicKernel:
    if rd.peek("H("):
        rd.expect("H(")
        p = rd.integer()
        rd.expect(",")
        k = rd.integer()
        rd.expect(",")
        r = rd.integer()
        rd.expect(")")
        return HomocyclicKernel(p, k, r)
    start = rd.where()
    rd.expect("C")
    q = rd.integer()
    r = 1
    if rd.peek("^"):
        rd.expect("^")
        r = rd.integer()
    pk = prime_power_decompose(q) if q >= 2 else None
    if pk is None:
        raise SpecError(f"kernel exponent {q} at position {start} is not a prime power")
    return HomocyclicKernel(pk[0], pk[1], r)


def _complement(rd: _Reader) -> ComplementSpec:
    if rd.peek("SL("):
        start = rd.where()
        rd.expect("SL(")
        rd.expect("2")
        rd.expect(",")
        q = rd.integer()
        rd.expect(")")
        if q == 3:
            return SL2_3()
        if q == 5:
            return SL2_5()
        raise ParseError("only SL(2,3) and SL(2,5) are supported", start)
    if rd.peek("M("):
        rd.expect("M(")
        a = rd.integer()
        rd.expect(",")
        b = rd.integer()
        rd.expect(",")
        g = rd.integer(signed=True)
        rd.expect(")")
        return Metacyclic(a, b, g)
    if rd.peek("Q"):
        rd.expect("Q")
        start = rd.where()
        size = rd.integer()
        if size < 8 or size & (size - 1):
            raise SpecError(f"quaternion order {size} at position {start} is not a power of 2 >= 8")
        m = 1
        if rd.peek("x"):
            rd.expect("xC")
            m = rd.integer()
        return QuatCyclic(size.bit_length() - 1, m)
    if rd.peek("C"):
        rd.expect("C")
        return Cyclic(rd.integer())
    raise ParseError("expected a complement (C, Q, M, or SL)", rd.where())


def _finish(rd: _Reader):
    if not rd.done():
        raise ParseError("unexpected trailing text", rd.where())


def parse_complement(text: str) -> ComplementSpec:
    rd = _Reader(text)
    spec = _complement(rd)
    _finish(rd)
    return spec


def parse_frobenius(text: str) -> FrobeniusSpec:
    rd = _Reader(text)
    kernel = _kernel(rd)
    rd.expect(":")
    complement = _complement(rd)
    _finish(rd)
    return FrobeniusSpec(kernel, complement)


def parse_spec(text: str) -> FrobeniusSpec | ComplementSpec:
    """Parse either a Frobenius group (contains ':') or a bare complement."""
    if ":" in text:
        return parse_frobenius(text)
    return parse_complement(text)


def render(spec: FrobeniusSpec | ComplementSpec) -> str:
    return spec.text
