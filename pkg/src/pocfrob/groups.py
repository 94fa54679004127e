"""Concrete finite groups: matrix realizations of Frobenius complements over
Z/p^k, semidirect products with homocyclic kernels, and brute-force
element-order censuses.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter, deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Hashable, Iterable

from . import linalg as la
from .errors import DomainError, LiftError, LimitExceeded, RealizationError
from .linalg import Matrix
from .numtheory import divisors, factorize, is_prime
from .orderclasses import OrderCensus
from .specs import (
    ComplementSpec,
    Cyclic,
    HomocyclicKernel,
    Metacyclic,
    QuatCyclic,
    SL2_3,
    SL2_5,
)

CENSUS_LIMIT = 20000
MALNORMAL_LIMIT = 2000


@dataclass(frozen=True)
class MatrixAction:
    """Generator matrices of a linear group acting on (Z/modulus)^dim."""

    modulus: int
    dim: int
    generators: tuple[tuple[str, Matrix], ...]
    spec: ComplementSpec | None = None

    def __post_init__(self):
        p = self.prime
        for label, g in self.generators:
            if len(g) != self.dim or any(len(row) != self.dim for row in g):
                raise DomainError(f"generator {label} is not {self.dim}x{self.dim}")
            if not la.is_invertible_mod_p(g, p):
                raise DomainError(f"generator {label} is not invertible mod {p}")

    @property
    def prime(self) -> int:
        return factorize(self.modulus).primes[0]

    def matrices(self) -> list[Matrix]:
        return [g for _, g in self.generators]

    def generator(self, label: str) -> Matrix:
        return dict(self.generators)[label]


# ---------------------------------------------------------------------------
# Concrete groups


class ConcreteGroup:
    """A finite group given by an explicit element list and a product."""

    def __init__(self, elements: list, identity, mul: Callable, inv: Callable, decomposition=None):
        self.elements = elements
        self.identity = identity
        self.mul = mul
        self.inv = inv
        self.decomposition = decomposition

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def element_order(self, x) -> int:
        n, y = 1, x
        while y != self.identity:
            y = self.mul(y, x)
            n += 1
        return n


class MatrixGroup(ConcreteGroup):
    """Closure of a set of invertible matrices under multiplication."""

    def __init__(self, generators: Iterable[Matrix], modulus: int, limit: int = CENSUS_LIMIT):
        gens = [la.reduce(g, modulus) for g in generators]
        if not gens:
            raise DomainError("need at least one generator")
        r = len(gens[0])
        eye = la.identity(r)
        seen = {eye: 0}
        elements = [eye]
        queue = deque([eye])
        while queue:
            a = queue.popleft()
            for g in gens:
                b = la.mat_mul(a, g, modulus)
                if b not in seen:
                    if len(elements) >= limit:
                        raise LimitExceeded(f"matrix group exceeds {limit} elements")
                    seen[b] = len(elements)
                    elements.append(b)
                    queue.append(b)
        self.modulus = modulus
        self.dim = r
        self.index = seen
        super().__init__(
            elements,
            eye,
            lambda a, b: la.mat_mul(a, b, modulus),
            lambda a: la.mat_inv(a, modulus),
        )

    @classmethod
    def from_action(cls, action: MatrixAction, limit: int = CENSUS_LIMIT) -> "MatrixGroup":
        return cls(action.matrices(), action.modulus, limit)

    def table(self) -> list[list[int]]:
        """Multiplication table by element index."""
        idx = self.index
        m = self.modulus
        return [[idx[la.mat_mul(a, b, m)] for b in self.elements] for a in self.elements]


def _vec_codec(p: int, k: int, r: int):
    q = p**k

    def encode(v):
        code = 0
        for x in reversed(v):
            code = code * q + x
        return code

    def decode(code):
        v = []
        for _ in range(r):
            code, x = divmod(code, q)
            v.append(x)
        return tuple(v)

    return encode, decode


class SemidirectProduct(ConcreteGroup):
    """K x| H on pairs (v, h) with (v, h)(w, g) = (v + h.w, hg).

    Kernel vectors are stored as integer codes and complement elements as
    indices into the enumerated complement, so the product is two table
    lookups plus a vector addition.
    """

    def __init__(self, kernel: HomocyclicKernel, complement: MatrixGroup):
        q = kernel.exponent
        r = kernel.r
        size = kernel.order
        encode, decode = _vec_codec(kernel.p, kernel.k, r)
        vectors = [decode(c) for c in range(size)]
        mats = complement.elements
        mt = complement.table()
        act = [[encode(la.mat_vec(h, v, q)) for v in vectors] for h in mats]
        h_inv = [complement.index[la.mat_inv(h, q)] for h in mats]

        if r == 1:
            def add(a, b):
                return (a + b) % q

            def neg(a):
                return -a % q
        else:
            def vec_add(a, b):
                return encode(tuple((x + y) % q for x, y in zip(vectors[a], vectors[b])))

            def neg(a):
                return encode(tuple(-x % q for x in vectors[a]))

            add = vec_add
            if size <= 4096:
                add_table = [[vec_add(a, b) for b in range(size)] for a in range(size)]

                def add(a, b):
                    return add_table[a][b]

        def mul(x, y):
            return (add(x[0], act[x[1]][y[0]]), mt[x[1]][y[1]])

        def inv(x):
            hi = h_inv[x[1]]
            return (neg(act[hi][x[0]]), hi)

        self.kernel = kernel
        self.complement = complement
        self.encode = encode
        self.decode = decode
        elements = [(v, h) for h in range(len(mats)) for v in range(size)]
        super().__init__(elements, (0, 0), mul, inv, decomposition=(size, len(mats)))

    def complement_elements(self) -> list:
        return [(0, h) for h in range(len(self.complement.elements))]


def semidirect_product(kernel: HomocyclicKernel, action: MatrixAction, limit: int = CENSUS_LIMIT) -> SemidirectProduct:
    if action.modulus != kernel.exponent or action.dim != kernel.r:
        raise DomainError("action does not match the kernel")
    if not is_fixed_point_free(action):
        raise DomainError("action is not fixed-point-free; the product is not a Frobenius group")
    complement = MatrixGroup.from_action(action, limit)
    if kernel.order * complement.order > limit:
        raise LimitExceeded(f"group order {kernel.order * complement.order} exceeds {limit}")
    return SemidirectProduct(kernel, complement)


def order_census_bruteforce(g: ConcreteGroup, limit: int = CENSUS_LIMIT) -> OrderCensus:
    if g.order > limit:
        raise LimitExceeded(f"group order {g.order} exceeds {limit}")
    counts = Counter(g.element_order(x) for x in g.elements)
    return OrderCensus(counts, g.order)


def is_malnormal(g: ConcreteGroup, complement: Iterable, limit: int = MALNORMAL_LIMIT) -> bool:
    """True iff H meets every conjugate H^x, x outside H, only in the identity."""
    if g.order > limit:
        raise LimitExceeded(f"group order {g.order} exceeds {limit}")
    h = set(complement)
    nontrivial = [y for y in h if y != g.identity]
    for x in g.elements:
        if x in h:
            continue
        xi = g.inv(x)
        if any(g.mul(g.mul(xi, y), x) in h for y in nontrivial):
            return False
    return True


# ---------------------------------------------------------------------------
# Matrix searches


def element_of_order(d: int, r: int, p: int) -> Matrix | None:
    """First matrix of order exactly d in a fixed scan of GL(r, p).

    Companion matrices of size e = 1..r are scanned by last column in
    lexicographic order (first entry nonzero) and padded with an identity
    block. If that finds nothing, the semisimple class representatives of
    order d are tried.
    """
    if d < 1:
        raise DomainError(f"order must be positive, got {d}")
    if d % p == 0:
        raise DomainError(f"p={p} divides d={d}")
    if d == 1:
        return la.identity(r)
    if la.gl_order(r, p) % d:
        return None
    for e in range(1, r + 1):
        pad = la.identity(r - e)
        for col in itertools.product(range(p), repeat=e):
            if col[0] == 0:
                continue
            c = la.companion(col, p)
            if la.has_order(c, d, p):
                return la.block_diag([c, pad]) if r > e else c
    reps = la.semisimple_classes(d, r, p)
    return reps[0] if reps else None


def conjugator_space(a: Matrix, gamma: int, p: int) -> list[Matrix]:
    """Basis of {X : X A = A^gamma X} over GF(p)."""
    r = len(a)
    ag = la.mat_pow(a, gamma % la.gl_order(r, p), p)
    # unknown X_{ij} is variable i*r + j
    rows = []
    for i in range(r):
        for j in range(r):
            row = [0] * (r * r)
            for t in range(r):
                row[i * r + t] += a[t][j]
                row[t * r + j] -= ag[i][t]
            rows.append(row)
    return [la.unflatten(v, r) for v in la.nullspace(rows, r * r, p)]


def _span(basis: list[Matrix], p: int):
    """Nonzero members of the span of ``basis``, in a fixed order."""
    if not basis:
        return
    r = len(basis[0])
    flats = [la.flatten(b) for b in basis]
    for coeffs in itertools.product(range(p), repeat=len(basis)):
        if not any(coeffs):
            continue
        v = [0] * (r * r)
        for c, f in zip(coeffs, flats):
            if c:
                for i, x in enumerate(f):
                    v[i] += c * x
        yield la.unflatten([x % p for x in v], r)


def _x_candidates(alpha: int, r: int, p: int) -> list[Matrix]:
    first = element_of_order(alpha, r, p)
    if first is None:
        return []
    reps = la.semisimple_classes(alpha, r, p)
    return [first] + [x for x in reps if x != first]


def relations_hold(spec: ComplementSpec, gens: dict[str, Matrix], m: int) -> bool:
    """Check the defining relations of ``spec`` on labelled generators mod m."""
    r = len(next(iter(gens.values())))
    eye = la.identity(r)
    mul = lambda a, b: la.mat_mul(a, b, m)
    pw = lambda a, e: la.mat_pow(a, e, m)
    if isinstance(spec, Cyclic):
        return la.has_order(gens["x"], spec.n, m) if spec.n > 1 else gens["x"] == eye
    if isinstance(spec, Metacyclic):
        x, y = gens["x"], gens["y"]
        return (
            la.has_order(x, spec.alpha, m)
            and la.has_order(y, spec.beta, m)
            and mul(la.mat_inv(y, m), mul(x, y)) == pw(x, spec.gamma)
        )
    if isinstance(spec, QuatCyclic):
        x, y = gens["x"], gens["y"]
        ok = (
            la.has_order(x, 2 ** (spec.n - 1), m)
            and mul(la.mat_inv(y, m), mul(x, y)) == la.mat_inv(x, m)
            and pw(y, 2) == pw(x, 2 ** (spec.n - 2))
        )
        if spec.m > 1:
            z = gens["z"]
            ok = ok and la.has_order(z, spec.m, m) and mul(x, z) == mul(z, x) and mul(y, z) == mul(z, y)
        return ok
    if isinstance(spec, (SL2_3, SL2_5)):
        n = 3 if isinstance(spec, SL2_3) else 5
        s, t = gens["s"], gens["t"]
        c = pw(s, 3)
        return c != eye and pw(c, 2) == eye and pw(t, n) == c and pw(mul(s, t), 2) == c
    raise DomainError(f"unsupported complement {spec!r}")


def _accept(spec, gens, p, fpf) -> MatrixAction | None:
    if not relations_hold(spec, gens, p):
        return None
    action = MatrixAction(p, len(next(iter(gens.values()))), tuple(gens.items()), spec)
    if MatrixGroup.from_action(action).order != spec.order:
        return None
    if fpf and not is_fixed_point_free(action):
        return None
    return action


def realize_complement(spec: ComplementSpec, r: int, p: int, fpf: bool = False) -> MatrixAction | None:
    """A subgroup of GL(r, p) isomorphic to ``spec``, or None if there is none.

    With ``fpf`` set, only fixed-point-free realizations are accepted, so
    None then means no fixed-point-free embedding exists.
    """
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if spec.order % p == 0:
        raise DomainError(f"p={p} divides |H|={spec.order}")
    if la.gl_order(r, p) % spec.order:
        return None

    if isinstance(spec, Cyclic):
        if spec.n == 1:
            return MatrixAction(p, r, (("x", la.identity(r)),), spec)
        for x in _x_candidates(spec.n, r, p):
            found = _accept(spec, {"x": x}, p, fpf)
            if found:
                return found
        return None

    if isinstance(spec, Metacyclic):
        for x in _x_candidates(spec.alpha, r, p):
            basis = conjugator_space(x, spec.gamma, p)
            if not basis:
                continue
            for c in _span(basis, p):
                if not la.is_invertible_mod_p(c, p) or la.mat_pow(c, spec.beta, p) != la.identity(r):
                    continue
                # c x c^-1 = x^gamma, so y = c^-1 satisfies y^-1 x y = x^gamma
                found = _accept(spec, {"x": x, "y": la.mat_inv(c, p)}, p, fpf)
                if found:
                    return found
        return None

    if isinstance(spec, QuatCyclic):
        half = 2 ** (spec.n - 1)
        for x in _x_candidates(half, r, p):
            target = la.mat_pow(x, half // 2, p)
            for c in _span(conjugator_space(x, -1, p), p):
                if not la.is_invertible_mod_p(c, p):
                    continue
                y = la.mat_inv(c, p)
                if la.mat_pow(y, 2, p) != target:
                    continue
                if spec.m == 1:
                    found = _accept(spec, {"x": x, "y": y}, p, fpf)
                    if found:
                        return found
                    continue
                for z in _span(_commutant([x, y], p), p):
                    if la.is_invertible_mod_p(z, p) and la.has_order(z, spec.m, p):
                        found = _accept(spec, {"x": x, "y": y, "z": z}, p, fpf)
                        if found:
                            return found
        return None

    if isinstance(spec, (SL2_3, SL2_5)):
        if r != 2:
            return None
        n = 3 if isinstance(spec, SL2_3) else 5
        minus = la.scalar(-1, 2, p)
        # s has characteristic polynomial X^2 - X + 1, so s^3 = -I
        s = la.companion((p - 1, 1), p)
        for a, b, c in itertools.product(range(p), repeat=3):
            d = (c - b) % p  # forces trace(st) = 0
            if (a * d - b * c) % p != 1:
                continue
            t = ((a, b), (c, d))
            if la.mat_pow(t, n, p) != minus:
                continue
            found = _accept(spec, {"s": s, "t": t}, p, fpf)
            if found:
                return found
        return None

    raise DomainError(f"unsupported complement {spec!r}")


def _commutant(mats: list[Matrix], p: int) -> list[Matrix]:
    r = len(mats[0])
    rows = []
    for a in mats:
        for i in range(r):
            for j in range(r):
                row = [0] * (r * r)
                for t in range(r):
                    row[i * r + t] += a[t][j]
                    row[t * r + j] -= a[i][t]
                rows.append(row)
    return [la.unflatten(v, r) for v in la.nullspace(rows, r * r, p)]


def is_fixed_point_free(action: MatrixAction, limit: int = CENSUS_LIMIT) -> bool:
    """Every non-identity element has no nonzero fixed vector mod p."""
    p = action.prime
    group = MatrixGroup.from_action(action, limit)
    eye = group.identity
    for g in group.elements:
        if g == eye:
            continue
        if la.det_mod_p(la.mat_sub(g, eye, p), p) == 0:
            return False
    return True


def lift_action(action: MatrixAction, k: int) -> MatrixAction:
    """Lift a representation mod p to one mod p^k reducing to it.

    The representation of the whole group is lifted one p-adic digit at a
    time. At each step the entrywise lift R fails to be multiplicative by a
    2-cocycle E with values in M_r(GF(p)); since |H| is prime to p the
    correction F(h) = -(1/|H|) sum_g E(g, h) makes R(h)(I + p^j F(h))
    multiplicative to one more digit. Relations, group order and reduction
    mod p are re-verified at the end.
    """
    p = action.prime
    if action.modulus != p:
        raise DomainError("lift_action expects an action modulo a prime")
    if k < 1:
        raise DomainError(f"target exponent must be positive, got {k}")
    if k == 1:
        return action
    group = MatrixGroup.from_action(action)
    elems = group.elements
    n = len(elems)
    table = group.table()
    r = action.dim
    eye = la.identity(r)
    n_inv = pow(n, -1, p)
    rep = list(elems)
    for j in range(1, k):
        pj = p**j
        mod = pj * p
        rinv = [la.mat_inv(m, mod) for m in rep]
        total = [[[0] * r for _ in range(r)] for _ in range(n)]
        for g in range(n):
            for h in range(n):
                prod = la.mat_mul(rinv[table[g][h]], la.mat_mul(rep[g], rep[h], mod), mod)
                diff = la.mat_sub(prod, eye, mod)
                acc = total[h]
                for a in range(r):
                    for b in range(r):
                        acc[a][b] += diff[a][b] // pj
        new = []
        for h in range(n):
            corr = tuple(
                tuple((1 if a == b else 0) + pj * (-total[h][a][b] * n_inv % p) for b in range(r))
                for a in range(r)
            )
            new.append(la.mat_mul(rep[h], corr, mod))
        rep = new
    modulus = p**k
    lifted = tuple((label, rep[group.index[g]]) for label, g in action.generators)
    result = MatrixAction(modulus, r, lifted, action.spec)
    gens = dict(lifted)
    if any(la.reduce(m, p) != dict(action.generators)[label] for label, m in lifted):
        raise LiftError("lift does not reduce to the input action")
    if action.spec is not None and not relations_hold(action.spec, gens, modulus):
        raise LiftError("lifted generators violate the defining relations")
    if MatrixGroup.from_action(result).order != n:
        raise LiftError("lifted group has the wrong order")
    return result


# ---------------------------------------------------------------------------
# Realizations used by the census and the classifier


def probe_pairs(spec: ComplementSpec, max_rank: int = 4, max_prime: int = 200):
    """(r, p) pairs to try for realizing ``spec``, smallest first."""
    n = spec.order
    ranks = [2] if isinstance(spec, (SL2_3, SL2_5)) else range(1, max_rank + 1)
    for r in ranks:
        if r == 1 and not spec.is_cyclic:
            continue
        for p in range(3, max_prime + 1):
            if is_prime(p) and n % p and (p**r - 1) % n == 0:
                yield r, p


@lru_cache(maxsize=None)
def find_realization(spec: ComplementSpec, fpf: bool = False) -> MatrixAction:
    """First realization of ``spec`` over the probed (r, p) pairs."""
    for r, p in probe_pairs(spec):
        action = realize_complement(spec, r, p, fpf)
        if action is not None:
            return action
    raise RealizationError(f"no realization of {spec.text} found")


def realize_frobenius(kernel: HomocyclicKernel, spec: ComplementSpec) -> MatrixAction | None:
    """Fixed-point-free action of ``spec`` on the kernel, lifted mod p^k."""
    action = realize_complement(spec, kernel.r, kernel.p, fpf=True)
    if action is None:
        return None
    return lift_action(action, kernel.k)
