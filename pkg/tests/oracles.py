"""Independent reference computations used by the tests.

Nothing here goes through the package's matrix engine or closed forms:
groups are built from abstract normal forms or by enumerating all matrices
of a given determinant, and number theory uses direct loops.
"""

import itertools
import math
from collections import Counter


def census_of(elements, mul, identity):
    counts = Counter()
    for x in elements:
        n, y = 1, x
        while y != identity:
            y = mul(y, x)
            n += 1
        counts[n] += 1
    return dict(counts)


def metacyclic_census(alpha, beta, gamma):
    """Census of <x, y | x^alpha, y^beta, y^-1 x y = x^gamma> on normal forms x^i y^j."""
    delta = pow(gamma, -1, alpha)
    powers = [pow(delta, j, alpha) for j in range(beta)]

    def mul(a, b):
        i, j = a
        k, l = b
        return ((i + k * powers[j]) % alpha, (j + l) % beta)

    elements = list(itertools.product(range(alpha), range(beta)))
    return census_of(elements, mul, (0, 0))


def quaternion_census(n, m=1):
    """Census of Q_{2^n} x C_m on normal forms (x^i y^e, z^c)."""
    half = 2 ** (n - 1)

    def mul(a, b):
        (i, e, c), (k, f, d) = a, b
        k = -k if e else k
        return ((i + k + (half // 2 if e and f else 0)) % half, e ^ f, (c + d) % m)

    elements = list(itertools.product(range(half), range(2), range(m)))
    return census_of(elements, mul, (0, 0, 0))


def special_linear_census(p):
    """Census of SL(2, p) by enumerating all determinant-one matrices."""
    elements = [
        (a, b, c, d)
        for a, b, c, d in itertools.product(range(p), repeat=4)
        if (a * d - b * c) % p == 1
    ]

    def mul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return ((a * e + b * g) % p, (a * f + b * h) % p, (c * e + d * g) % p, (c * f + d * h) % p)

    return census_of(elements, mul, (1, 0, 0, 1))


def homocyclic_census(p, k, r):
    q = p**k
    counts = Counter()
    for v in itertools.product(range(q), repeat=r):
        g = math.gcd(q, *v) if any(v) else q
        counts[q // g] += 1
    return dict(counts)


def phi(n):
    return sum(1 for m in range(1, n + 1) if math.gcd(m, n) == 1)


def is_prime(n):
    return n >= 2 and all(n % d for d in range(2, math.isqrt(n) + 1))


def prime_set(n):
    out, d = set(), 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out
