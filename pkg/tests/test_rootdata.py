import pytest

from uqsl21.rootdata import (CARTAN_AFFINE, DELTA, AffineRoot, FiniteRoot, bilinear, cartan_matrices,
                             check_spectral, enumerate_roots, normal_order_cmp, root_constants,
                             root_from_lattice, sign_class, spectral_degree)
from uqsl21.scalars import q_pow

a12, a13, a23 = FiniteRoot(1, 2), FiniteRoot(1, 3), FiniteRoot(2, 3)


def test_bilinear_table():
    assert bilinear(a12.lattice(), a12.lattice()) == 2
    assert bilinear(a13.lattice(), a13.lattice()) == 0
    assert bilinear(a23.lattice(), a23.lattice()) == 0
    assert bilinear(a12.lattice(), a23.lattice()) == -1
    assert bilinear(DELTA, AffineRoot.plus(2, 3).lattice()) == 0
    assert bilinear(DELTA, DELTA) == 0


def test_parities():
    assert a12.parity == 0 and a13.parity == 1 and a23.parity == 1
    assert AffineRoot.minus(1, 3).parity == 1
    assert AffineRoot.imaginary(2, 1).parity == 0


def test_cartan_matrices():
    m = cartan_matrices()
    assert m["A"] == ((2, -1), (-1, 0))
    assert m["A_affine"][0] == (0, -1, 1)
    assert m["C"] == ((0, -1), (-1, -2))
    # the affine Cartan matrix is the Gram matrix of the simple roots
    simple = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert all(bilinear(simple[i], simple[j]) == CARTAN_AFFINE[i][j] for i in range(3) for j in range(3))


def test_inverse_cartan():
    A, C = cartan_matrices()["A"], cartan_matrices()["C"]
    prod = [[sum(A[i][k] * C[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
    assert prod == [[1, 0], [0, 1]]


def test_normal_order():
    assert normal_order_cmp(AffineRoot.plus(1, 2), AffineRoot.plus(1, 3)) == -1
    assert normal_order_cmp(AffineRoot.plus(2, 3, 5), AffineRoot.imaginary(2, 1)) == -1
    assert normal_order_cmp(AffineRoot.minus(1, 3, 3), AffineRoot.minus(1, 3, 1)) == -1
    assert normal_order_cmp(AffineRoot.imaginary(2, 1), AffineRoot.minus(2, 3)) == -1
    r = AffineRoot.plus(1, 2, 1)
    assert normal_order_cmp(r, r) == 0


def test_normal_order_is_total_on_enumeration():
    roots = list(enumerate_roots(2))
    for x in roots:
        for y in roots:
            assert normal_order_cmp(x, y) == -normal_order_cmp(y, x)


def test_root_constants():
    assert root_constants(AffineRoot.plus(1, 2, 3)).a == -1
    c = root_constants(AffineRoot.minus(2, 3, 0))
    assert c.a == -1 and c.q_gamma == -q_pow(0)
    assert root_constants(AffineRoot.plus(1, 2, 0)).q_gamma == q_pow(2)
    with pytest.raises(ValueError):
        root_constants(AffineRoot.imaginary(1, 1))


def test_spectral_degree():
    s = (1, 1, 1)
    assert spectral_degree(AffineRoot.plus(1, 3, 1), s) == 5
    assert spectral_degree(AffineRoot.imaginary(2, 1), s) == 6
    assert spectral_degree(AffineRoot.minus(1, 2, 0), s) == 2
    assert spectral_degree(AffineRoot.plus(1, 2, 0), (2, 1, 1)) == 1


def test_spectral_validation():
    with pytest.raises(ValueError):
        check_spectral((0, 0, 0))
    with pytest.raises(ValueError):
        check_spectral((1, 1))
    assert check_spectral((1, -1, 1)) == (1, -1, 1)


def test_sign_class_and_lattice_lookup():
    assert sign_class((1, 1)) == 1 and sign_class((0, -1)) == -1 and sign_class((1, -1)) == 0
    assert root_from_lattice((1, 1, 1)) == AffineRoot.imaginary(1, 1)
    assert root_from_lattice(AffineRoot.minus(1, 2, 2).lattice()) == AffineRoot.minus(1, 2, 2)
    assert root_from_lattice((0, 2, 0)) is None
