"""Matrices over Z/m and polynomials over GF(p).

Matrices are tuples of row tuples with entries reduced into [0, m).
Polynomials are tuples of coefficients, lowest degree first, with no
trailing zeros (the zero polynomial is the empty tuple).
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

from .errors import DomainError
from .numtheory import divisors, euler_phi, factorize, multiplicative_order

Matrix = tuple[tuple[int, ...], ...]
Poly = tuple[int, ...]


def identity(r: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(r)) for i in range(r))


def reduce(a, m: int) -> Matrix:
    return tuple(tuple(x % m for x in row) for row in a)


def scalar(c: int, r: int, m: int) -> Matrix:
    return tuple(tuple(c % m if i == j else 0 for j in range(r)) for i in range(r))


def mat_mul(a: Matrix, b: Matrix, m: int) -> Matrix:
    if len(a) == 2:
        (a0, a1), (a2, a3) = a
        (b0, b1), (b2, b3) = b
        return (
            ((a0 * b0 + a1 * b2) % m, (a0 * b1 + a1 * b3) % m),
            ((a2 * b0 + a3 * b2) % m, (a2 * b1 + a3 * b3) % m),
        )
    cols = tuple(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) % m for col in cols) for row in a)


def mat_add(a: Matrix, b: Matrix, m: int) -> Matrix:
    return tuple(tuple((x + y) % m for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a: Matrix, b: Matrix, m: int) -> Matrix:
    return tuple(tuple((x - y) % m for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(c: int, a: Matrix, m: int) -> Matrix:
    return tuple(tuple(c * x % m for x in row) for row in a)


def mat_vec(a: Matrix, v: tuple[int, ...], m: int) -> tuple[int, ...]:
    return tuple(sum(x * y for x, y in zip(row, v)) % m for row in a)


def mat_pow(a: Matrix, e: int, m: int) -> Matrix:
    if e < 0:
        return mat_pow(mat_inv(a, m), -e, m)
    result = identity(len(a))
    base = a
    while e:
        if e & 1:
            result = mat_mul(result, base, m)
        e >>= 1
        if e:
            base = mat_mul(base, base, m)
    return result


def mat_inv(a: Matrix, m: int) -> Matrix:
    """Inverse over Z/m for m a prime power; raises DomainError if singular."""
    r = len(a)
    rows = [list(row) + [1 if i == j else 0 for j in range(r)] for i, row in enumerate(a)]
    for c in range(r):
        pivot = None
        for i in range(c, r):
            try:
                pivot_inv = pow(rows[i][c], -1, m)
            except ValueError:
                continue
            pivot = i
            break
        if pivot is None:
            raise DomainError("matrix is not invertible")
        rows[c], rows[pivot] = rows[pivot], rows[c]
        rows[c] = [x * pivot_inv % m for x in rows[c]]
        for i in range(r):
            if i != c and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % m for x, y in zip(rows[i], rows[c])]
    return tuple(tuple(row[r:]) for row in rows)


def det_mod_p(a: Matrix, p: int) -> int:
    """Determinant over GF(p)."""
    rows = [[x % p for x in row] for row in a]
    r = len(rows)
    det = 1
    for c in range(r):
        pivot = next((i for i in range(c, r) if rows[i][c]), None)
        if pivot is None:
            return 0
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            det = -det
        det = det * rows[c][c] % p
        inv = pow(rows[c][c], -1, p)
        for i in range(c + 1, r):
            if rows[i][c]:
                f = rows[i][c] * inv % p
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[c])]
    return det % p


def is_invertible_mod_p(a: Matrix, p: int) -> bool:
    return det_mod_p(a, p) != 0


def nullspace(rows: list[list[int]], ncols: int, p: int) -> list[tuple[int, ...]]:
    """Basis of {v : rows . v = 0} over GF(p), in reduced form."""
    mat = [[x % p for x in row] for row in rows]
    pivots = []
    rank = 0
    for c in range(ncols):
        pivot = next((i for i in range(rank, len(mat)) if mat[i][c]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = pow(mat[rank][c], -1, p)
        mat[rank] = [x * inv % p for x in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][c]:
                f = mat[i][c]
                mat[i] = [(x - f * y) % p for x, y in zip(mat[i], mat[rank])]
        pivots.append(c)
        rank += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = -mat[i][fc] % p
        basis.append(tuple(v))
    return basis


def has_order(a: Matrix, d: int, m: int) -> bool:
    """True iff a has multiplicative order exactly d modulo m."""
    if mat_pow(a, d, m) != identity(len(a)):
        return False
    return all(mat_pow(a, d // q, m) != identity(len(a)) for q in factorize(d).primes)


def order_dividing(a: Matrix, bound: int, m: int) -> int:
    """Exact order of a, given that it divides ``bound``."""
    eye = identity(len(a))
    if mat_pow(a, bound, m) != eye:
        raise DomainError(f"matrix order does not divide {bound}")
    order = bound
    for q in factorize(bound).primes:
        while order % q == 0 and mat_pow(a, order // q, m) == eye:
            order //= q
    return order


def gl_order(r: int, p: int) -> int:
    """|GL(r, p)|."""
    result = 1
    for i in range(r):
        result *= p**r - p**i
    return result


def companion(last_column: tuple[int, ...], m: int) -> Matrix:
    """Companion matrix: ones on the subdiagonal, ``last_column`` on the right."""
    e = len(last_column)
    return tuple(
        tuple(
            last_column[i] % m if j == e - 1 else (1 if i == j + 1 else 0)
            for j in range(e)
        )
        for i in range(e)
    )


def companion_of_poly(f: Poly, p: int) -> Matrix:
    """Companion matrix of the monic polynomial f."""
    return companion(tuple(-c % p for c in f[:-1]), p)


def block_diag(blocks: list[Matrix]) -> Matrix:
    r = sum(len(b) for b in blocks)
    rows = []
    offset = 0
    for b in blocks:
        e = len(b)
        for row in b:
            rows.append((0,) * offset + tuple(row) + (0,) * (r - offset - e))
        offset += e
    return tuple(rows)


def flatten(a: Matrix) -> tuple[int, ...]:
    return tuple(x for row in a for x in row)


def unflatten(v, r: int) -> Matrix:
    return tuple(tuple(v[i * r : (i + 1) * r]) for i in range(r))


# ---------------------------------------------------------------------------
# Polynomials over GF(p)


def poly_trim(f) -> Poly:
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return tuple(f)


def poly_mul(f: Poly, g: Poly, p: int) -> Poly:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return poly_trim(out)


def poly_divmod(f: Poly, g: Poly, p: int) -> tuple[Poly, Poly]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(f)
    inv = pow(g[-1], -1, p)
    quot = [0] * max(len(f) - len(g) + 1, 0)
    for i in range(len(f) - len(g), -1, -1):
        c = rem[i + len(g) - 1] * inv % p
        quot[i] = c
        if c:
            for j, b in enumerate(g):
                rem[i + j] = (rem[i + j] - c * b) % p
    return poly_trim(quot), poly_trim(rem[: len(g) - 1])


def poly_gcd(f: Poly, g: Poly, p: int) -> Poly:
    while g:
        f, g = g, poly_divmod(f, g, p)[1]
    if not f:
        return f
    inv = pow(f[-1], -1, p)
    return tuple(c * inv % p for c in f)


def x_power_mod(e: int, f: Poly, p: int) -> Poly:
    """X^e mod f."""
    result: Poly = (1,)
    base = poly_divmod((0, 1), f, p)[1]
    while e:
        if e & 1:
            result = poly_divmod(poly_mul(result, base, p), f, p)[1]
        e >>= 1
        if e:
            base = poly_divmod(poly_mul(base, base, p), f, p)[1]
    return result


def poly_sub_one(f: Poly, p: int) -> Poly:
    """f - 1."""
    g = list(f) or [0]
    g[0] = (g[0] - 1) % p
    return poly_trim(g)


@lru_cache(maxsize=None)
def primitive_root_polys(e: int, p: int) -> tuple[Poly, ...]:
    """Monic irreducible factors over GF(p) of the e-th cyclotomic polynomial.

    Each has degree ord_e(p). They are found by scanning monic polynomials of
    that degree, lexicographically by coefficient tuple, for those dividing
    X^e - 1 and coprime to X^(e/q) - 1 for every prime q | e.
    """
    if e % p == 0:
        raise DomainError(f"p={p} divides e={e}")
    d = multiplicative_order(p, e)
    wanted = euler_phi(e) // d
    found = []
    for coeffs in itertools.product(range(p), repeat=d):
        if coeffs[0] == 0:
            continue
        f = coeffs + (1,)
        if x_power_mod(e, f, p) != (1,):
            continue
        if all(
            poly_gcd(f, poly_sub_one(x_power_mod(e // q, f, p), p), p) == (1,)
            for q in factorize(e).primes
        ):
            found.append(f)
            if len(found) == wanted:
                break
    return tuple(found)


def semisimple_classes(alpha: int, r: int, p: int) -> list[Matrix]:
    """Representatives of the GL(r,p)-conjugacy classes of elements of order alpha.

    Requires p not dividing alpha, so every such element is semisimple and is
    determined up to conjugacy by the multiset of irreducible factors of its
    characteristic polynomial. Each representative is a block-diagonal of
    companion matrices; the list order is deterministic.
    """
    if alpha % p == 0:
        raise DomainError(f"p={p} divides alpha={alpha}")
    factors = []  # (degree, root order, poly)
    for e in divisors(alpha):
        if multiplicative_order(p, e) <= r:
            factors.extend((len(f) - 1, e, f) for f in primitive_root_polys(e, p))
    reps = []

    def extend(start, remaining, chosen):
        if remaining == 0:
            lcm = 1
            for _, e, _ in chosen:
                lcm = lcm * e // math.gcd(lcm, e)
            if lcm == alpha:
                reps.append(block_diag([companion_of_poly(f, p) for _, _, f in chosen]))
            return
        for i in range(start, len(factors)):
            deg = factors[i][0]
            if deg <= remaining:
                extend(i, remaining - deg, chosen + [factors[i]])

    extend(0, r, [])
    return reps

