import pytest

from uqsl21.monodromy import (S12, S13, S23, Z, Spectral, build_D, build_K, build_N, build_O, build_R,
                              build_S, build_S_display, build_UVW, factorization_equations,
                              o_entries, verify_exchange, verify_factorization, verify_invariants,
                              verify_uvw_product, verify_ybe)
from uqsl21.pbw import E, F, ONE_ELT, qK
from uqsl21.reps import GradedTensorOperator
from uqsl21.scalars import ONE, ZERO, kappa, q_pow

SPECTRAL = [(1, 1, 1), (1, 0, 0), (2, 1, 1)]


def _flip(op, key):
    t = dict(op.terms)
    t[key] = -t[key]
    return GradedTensorOperator(op.legs, t)


def test_D():
    D = build_D()
    assert D.entry((1, 1)) == qK(0, 1, 1)
    assert D.entry((3, 3)) == qK(1, 1, 2)
    assert D.entry((1, 2)) is None


def test_O_entries(q):
    k = kappa()
    O = o_entries()
    assert O[(1, 1)] == Spectral({(0, 0, 0): ONE_ELT, Z: -qK(2, 0, 0)})
    assert O[(2, 1)] == Spectral({S12: -k * E(1, 2)})
    # the Cartan factor above the diagonal is q^{K_i + (-1)^{[j]} K_j}
    assert O[(1, 3)] == Spectral({(1, 0, 0): -k * q ** -1 * (F(1, 3) * qK(1, 0, -1))})
    assert O[(1, 2)] == Spectral({(1, 0, 1): -k * q ** -1 * (F(1, 2) * qK(1, 1, 0))})


def test_UVW_leading_terms(q):
    U, V, W = build_UVW(3)
    k = kappa()
    assert U[(2, 1)].terms[S12] == -k * E(1, 2)
    assert V[(1, 1)].terms[(0, 0, 0)] == ONE_ELT
    w23 = W[(2, 3)]
    assert min(w23.terms) == (1, 1, 0)
    assert (2, 2, 1) in w23.terms


def test_R_entries(q):
    num, den = build_R()
    assert num.entry((3, 3), (3, 3)) == Spectral({(0, 0, 0): q ** 2, Z: -ONE})
    assert den == Spectral({(0, 0, 0): ONE, Z: -q ** 2})
    assert build_K().entry((1, 1), (1, 1)) == Spectral.const(ONE)
    # formal zeta -> 0 limit
    assert num.entry((1, 1), (2, 2)).terms[(0, 0, 0)] == q


@pytest.mark.parametrize("s", SPECTRAL)
def test_ybe(s):
    assert verify_ybe(s).passed


def test_ybe_negative_control():
    r = verify_ybe((1, 1, 1), corrupt=lambda op: _flip(op, ((1, 2), (2, 1))))
    assert not r.passed and r.witness


@pytest.mark.parametrize("s", SPECTRAL)
def test_exchange(s):
    assert verify_exchange(3, s).passed


def test_exchange_negative_controls():
    assert not verify_exchange(3, lower=False).passed
    assert not verify_exchange(3, upper=False).passed


def test_exchange_rejects_printed_cartan_factor():
    r = verify_exchange(3, printed_cartan=True)
    assert not r.passed and "F13" in r.witness


def test_factorization_components():
    reports = verify_factorization(4)
    assert len(reports) == 9
    assert all(r.passed for r in reports), [r.line() for r in reports if not r.passed]


def test_factorization_low_order():
    eqs = {name: (lhs, rhs) for name, lhs, rhs in factorization_equations(2)}
    lhs, rhs = eqs["U21"]
    assert lhs == rhs


def test_full_product():
    assert verify_uvw_product(4).passed


def test_invariants():
    assert all(r.passed for r in verify_invariants(3))


def test_pi_of_O_gives_R_numerator():
    num, _ = build_R()
    assert build_S() * build_K() == num


def test_printed_S_display_matches_pi_of_O():
    # the printed S(zeta) carries the opposite sign on every kappa term;
    # (pi x id)(O) is the version that reproduces the printed R
    assert build_S() == build_S_display()


def test_spectral_series_ops(q):
    x = Spectral({(0, 0, 0): ONE, Z: -q ** 2}, order=3)
    inv = x.inverse()
    assert inv == Spectral({(0, 0, 0): ONE, Z: q ** 2, (2, 2, 2): q ** 4, (3, 3, 3): q ** 6})
    assert (x * inv) == Spectral.const(ONE, 3)
    y = Spectral({Z: q, (1, 0, 0): ONE}, order=3)
    assert y.exp().log() == y
    with pytest.raises(ArithmeticError):
        Spectral({(0, 0, 0): ONE}).inverse()
    with pytest.raises(ArithmeticError):
        Spectral({(0, 0, 0): ONE, S23: ONE}, order=2).inverse()


def test_specialize():
    sp = Spectral({S13: ONE, (1, 0, 0): ONE})
    assert sp.specialize((1, 1, 1)) == {(2,): ONE, (1,): ONE}
    assert sp.specialize((2, 0, 0)) == {(0,): ONE, (2,): ONE}


def test_N_is_O_times_D():
    N = build_N()
    assert N.entry((1, 1)).terms[(0, 0, 0)] == qK(0, 1, 1)
