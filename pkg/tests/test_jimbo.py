from concurrent.futures import ThreadPoolExecutor

import pytest

from uqsl21.jimbo import (EpsImageCache, TruncationError, default_cache, epsilon, expansion_residual,
                          expected_phi_eigenvalue, phi1_display, printed_form_refutations,
                          quadratic_residual, recurrence_residual, verify_loop_relations,
                          verify_phi_central, verify_phi_eigenvalues, verify_recurrences)
from uqsl21.pbw import AlgebraElement, E, F, hw_eigenvalue, is_central, qK
from uqsl21.rootdata import AffineRoot
from uqsl21.scalars import QRat, kappa, q_pow

E1, E2 = E(1, 2), E(2, 3)


@pytest.fixture(scope="module")
def cache():
    return default_cache(4)


def test_generator_images():
    assert epsilon("e0") == -(F(1, 3) * qK(1, 0, -1))
    assert epsilon("f0") == qK(-1, 0, 1) * E(1, 3)
    assert epsilon("e1") == E1
    with pytest.raises(KeyError):
        epsilon("e7")


def test_low_root_vectors(cache, q):
    assert cache.root_vector(AffineRoot.plus(1, 3)) == E1 * E2 - q * (E2 * E1)
    assert cache.root_vector(AffineRoot.minus(1, 3)) == -(F(1, 3) * qK(1, 0, -1))
    assert cache.root_vector(AffineRoot.minus(1, 2)) == -(F(1, 2) * qK(1, 1, 0))
    assert cache.root_vector(AffineRoot.plus(1, 2, 3)).weight() == (1, 0)


def test_loop_relations_hold():
    reports = verify_loop_relations()
    assert all(r.passed for r in reports), [r.line() for r in reports if not r.passed]
    assert any("degree-5" in r.name for r in reports)


def test_imaginary_vectors(cache, q):
    k = kappa()
    assert cache.unprimed(1, 1) == cache.primed(1, 1)
    half = QRat.coerce(1) / 2
    assert cache.unprimed(2, 2) == cache.primed(2, 2) + k * half * cache.primed(1, 2) * cache.primed(1, 2)
    e13_bar = E1 * E2 - q ** -1 * (E2 * E1)
    printed = (-k.inverse() * (q ** -1 * qK(0, 2, 0) - q ** -1 * qK(0, 0, -2))
               - k * (F(1, 2) * E1 * qK(1, 1, 0) + q ** 2 * F(1, 3) * e13_bar * qK(1, 0, -1)
                      + F(2, 3) * E2 * qK(0, 1, -1)))
    assert cache.primed(1, 2) == printed


def test_primed_vectors_commute(cache):
    for i in (1, 2):
        for a in range(1, 5):
            for b in range(a + 1, 5):
                x, y = cache.primed(a, i), cache.primed(b, i)
                assert x * y == y * x


def test_gen_series(cache):
    s = cache.gen_series("alpha12", 3)
    assert s[0] == E1
    assert cache.gen_series("delta'1", 3)[0] == AlgebraElement()
    with pytest.raises(KeyError):
        cache.gen_series("alpha99", 2)


def test_truncation_guard():
    c = EpsImageCache(2)
    with pytest.raises(TruncationError):
        c.root_vector(AffineRoot.plus(1, 2, 3))
    with pytest.raises(ValueError):
        EpsImageCache(0)


def test_phi_values(cache, q):
    assert cache.phi_coefficient(1) == phi1_display()
    assert is_central(cache.phi_coefficient(2)).passed
    for lam in ((1, 0, 0), (2, 1, 1)):
        want = q_pow(6 * lam[0]) + q_pow(6 * (lam[1] - 1)) - q_pow(-6 * (lam[2] + 1))
        assert hw_eigenvalue(cache.phi_coefficient(3), lam) == want
        assert expected_phi_eigenvalue(3, lam) == want


def test_phi2_closed_form(cache, q):
    k, b2 = kappa(), q + q ** -1
    F12, F13, F23 = F(1, 2), F(1, 3), F(2, 3)
    e13 = E1 * E2 - q ** -1 * (E2 * E1)
    phi2 = (qK(4, 0, 0) + q ** -4 * qK(0, 4, 0) - q ** -4 * qK(0, 0, -4)
            + k ** 2 * b2 * (q ** -4 * F12 * E1 * qK(1, 3, 0) + F12 * E1 * qK(3, 1, 0)
                             + F13 * e13 * qK(1, 0, -3) + q ** 2 * F13 * e13 * qK(3, 0, -1)
                             + q ** -2 * F23 * E2 * qK(0, 1, -3) + q ** -2 * F23 * E2 * qK(0, 3, -1))
            + k ** 3 * b2 * (q ** -2 * F12 * F23 * e13 * qK(1, 2, -1) + q ** -1 * F13 * E1 * E2 * qK(1, 2, -1))
            + k ** 4 * b2 * (q * F12 * F13 * E1 * e13 * qK(2, 1, -1) + q * F13 * F23 * e13 * E2 * qK(1, 1, -2))
            + k ** 4 * q ** -2 * F12 * F12 * E1 * E1 * qK(2, 2, 0))
    assert cache.phi_coefficient(2) == phi2


def test_phi_single_k1_exponent_is_not_central(cache):
    # reading the Cartan term as q^{n K1} instead of q^{2n K1} destroys centrality
    k = kappa()
    x = qK(1, 0, 0) - cache.unprimed(1, 2) * (k * q_pow(-1))
    assert not is_central(x).passed


def test_phi_suites(cache):
    assert all(r.passed for r in verify_phi_central(4, cache))
    assert all(r.passed for r in verify_phi_eigenvalues(4, cache=cache))


def test_recurrences_as_printed(cache):
    for fam in ("alpha12", "alpha13", "alpha23", "delta-alpha23"):
        assert recurrence_residual(fam, 4, 1, cache) is None


def test_delta_minus_recurrences_need_the_opposite_sign(cache):
    for fam in ("delta-alpha12", "delta-alpha13"):
        assert recurrence_residual(fam, 4, 1, cache) is not None
        assert recurrence_residual(fam, 4, -1, cache) is None


def test_quadratic_identities(cache):
    assert quadratic_residual(1, 4, cache=cache) is None
    assert quadratic_residual(2, 4, cache=cache) is None
    assert quadratic_residual(2, 4, printed=True, cache=cache) is not None


def test_expansions(cache):
    for n in range(1, 5):
        for i in (1, 2):
            assert expansion_residual(n, i, cache=cache) is None
    assert expansion_residual(4, 2, printed=True, cache=cache) is not None


def test_recurrence_suite(cache):
    assert all(r.passed for r in verify_recurrences(4, cache))
    assert all(res is not None for _, res in printed_form_refutations(4, cache))


def test_cache_is_thread_safe():
    shared = EpsImageCache(3)
    fresh = EpsImageCache(3)
    roots = [AffineRoot.plus(i, j, n) for i, j in ((1, 2), (1, 3), (2, 3)) for n in range(4)]
    with ThreadPoolExecutor(max_workers=6) as pool:
        got = list(pool.map(shared.root_vector, roots * 3))
    assert got == [fresh.root_vector(r) for r in roots * 3]
