import itertools

from hypothesis import given
from hypothesis import strategies as st

from pocfrob import linalg as la


def test_inverse_mod_prime_power():
    a = ((2, 3), (1, 3))
    inv = la.mat_inv(a, 25)
    assert la.mat_mul(a, inv, 25) == la.identity(2)


@given(st.lists(st.integers(0, 6), min_size=9, max_size=9))
def test_inverse_roundtrip_mod_7(entries):
    a = la.unflatten(entries, 3)
    if la.det_mod_p(a, 7) == 0:
        return
    assert la.mat_mul(la.mat_inv(a, 7), a, 7) == la.identity(3)


def test_det_matches_cofactor_expansion():
    for entries in itertools.product(range(3), repeat=4):
        a = la.unflatten(entries, 2)
        assert la.det_mod_p(a, 3) == (entries[0] * entries[3] - entries[1] * entries[2]) % 3


def test_nullspace():
    basis = la.nullspace([[1, 1, 0], [0, 1, 1]], 3, 5)
    assert len(basis) == 1
    v = basis[0]
    assert (v[0] + v[1]) % 5 == 0 and (v[1] + v[2]) % 5 == 0


def test_gl_order():
    assert la.gl_order(2, 3) == 48
    assert la.gl_order(1, 7) == 6


def test_primitive_root_polys():
    # X^2 + X + 2 and X^2 + 2X + 2 are the two factors of Phi_8 over GF(3)
    assert la.primitive_root_polys(8, 3) == ((2, 1, 1), (2, 2, 1))
    for f in la.primitive_root_polys(8, 3):
        assert la.has_order(la.companion_of_poly(f, 3), 8, 3)
    assert len(la.primitive_root_polys(25, 7)) == 5


def test_semisimple_classes_count_in_gl2():
    # elements of order 5 in GL(2, 31): eigenvalue pairs {w^i, w^j} not both 1: 15 - 1 = 14 classes
    reps = la.semisimple_classes(5, 2, 31)
    assert len(reps) == 14
    assert all(la.has_order(x, 5, 31) for x in reps)


def test_semisimple_classes_cover_all_elements():
    # every order-8 element of GL(2,3) is conjugate to some representative: compare char polys
    def charpoly(a):
        (x, y), (z, w) = a
        return ((x * w - y * z) % 3, -(x + w) % 3)

    reps = {charpoly(x) for x in la.semisimple_classes(8, 2, 3)}
    found = set()
    for entries in itertools.product(range(3), repeat=4):
        a = la.unflatten(entries, 2)
        if la.det_mod_p(a, 3) and la.has_order(a, 8, 3):
            found.add(charpoly(a))
    assert found == reps
