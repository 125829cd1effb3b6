"""Acceptance criteria 1-9; each test prints one PASS/FAIL line with its tolerance."""

import random
import time

import numpy as np
import pytest

from test_reps import _model, _random_op
from uqsl21.central import (mu, random_homogeneous_matrix, verify_c_central, verify_phi_ctilde,
                            verify_s_square_twist)
from uqsl21.jimbo import (default_cache, printed_form_refutations, verify_loop_relations,
                          verify_phi1_display, verify_phi_central, verify_phi_eigenvalues,
                          verify_recurrences)
from uqsl21.monodromy import verify_exchange, verify_factorization, verify_uvw_product, verify_ybe
from uqsl21.pbw import AlgebraElement, omega, random_monomial
from uqsl21.reps import verify_defining_relations, verify_f_image_table, verify_pi_rules
from uqsl21.scalars import ONE

SPECTRAL = [(1, 1, 1), (1, 0, 0), (2, 1, 1)]
TRUNCATION = 4


def _emit(capsys, number, reports, t0, note=""):
    bad = [r for r in reports if not r.passed]
    status = "PASS" if not bad else "FAIL"
    line = (f"criterion {number}: {status} ({len(reports) - len(bad)}/{len(reports)} checks, "
            f"tolerance: exact, {time.perf_counter() - t0:.2f}s)")
    with capsys.disabled():
        print(f"\n{line}{note}")
        for r in bad:
            print(f"    {r.line()}")
    assert not bad, [r.name for r in bad]


class _Check:
    def __init__(self, name, ok):
        self.name, self.passed = name, ok

    def line(self):
        return f"[FAIL   ] {self.name}"


def test_criterion_1_defining_relations(capsys):
    t0 = time.perf_counter()
    _emit(capsys, 1, verify_defining_relations(), t0)


def test_criterion_2_loop_relations(capsys):
    t0 = time.perf_counter()
    reports = verify_loop_relations()
    assert any("degree-5" in r.name for r in reports)
    _emit(capsys, 2, reports, t0)


def test_criterion_3_f_image_table(capsys):
    t0 = time.perf_counter()
    _emit(capsys, 3, verify_f_image_table(4), t0)


def test_criterion_4_central_phi(capsys):
    t0 = time.perf_counter()
    cache = default_cache(TRUNCATION)
    reports = verify_phi_central(4, cache) + [verify_phi1_display(cache)] + verify_phi_eigenvalues(4, cache=cache)
    _emit(capsys, 4, reports, t0)


def test_criterion_5_yang_baxter(capsys):
    t0 = time.perf_counter()
    _emit(capsys, 5, [verify_ybe(s) for s in SPECTRAL], t0)


def test_criterion_6_exchange(capsys):
    t0 = time.perf_counter()
    _emit(capsys, 6, [verify_exchange(3, s) for s in SPECTRAL], t0)


def test_criterion_7_factorization(capsys):
    t0 = time.perf_counter()
    cache = default_cache(TRUNCATION)
    reports = verify_factorization(TRUNCATION, cache=cache) + [verify_uvw_product(TRUNCATION, cache)]
    wanted = {f"gen-series-recurrences:{x}" for x in
              ("alpha12", "alpha13", "alpha23", "quadratic-alpha1", "quadratic-alpha2")}
    reports += [r for r in verify_recurrences(TRUNCATION, cache) if r.name in wanted]
    refuted = [name for name, res in printed_form_refutations(TRUNCATION, cache) if res]
    note = "" if not refuted else "\n    info: printed variants refuted: " + "; ".join(refuted)
    _emit(capsys, 7, reports, t0, note)


def test_criterion_8_partial_trace(capsys):
    t0 = time.perf_counter()
    reports = [r for r in verify_c_central(2) if ":C" in r.name and "Ctilde" not in r.name]
    reports += verify_phi_ctilde(4, TRUNCATION) + [verify_s_square_twist()]
    _emit(capsys, 8, reports, t0)


def test_criterion_9_engine_soundness(capsys):
    t0 = time.perf_counter()
    rng = random.Random(9)
    checks = []

    ok = True
    for _ in range(1000):
        a, b, c = (AlgebraElement({random_monomial(rng): ONE}) for _ in range(3))
        ok &= (a * b) * c == a * (b * c)
    checks.append(_Check("associativity x1000", ok))

    checks.append(verify_pi_rules())

    ok = True
    for _ in range(100):
        x = AlgebraElement({random_monomial(rng): ONE})
        y = AlgebraElement({random_monomial(rng): ONE})
        ok &= omega(x * y) == omega(y) * omega(x) and omega(omega(x)) == x
    checks.append(_Check("omega anti-automorphism and involution", ok))

    ok = True
    for legs in (1, 2, 3):
        for _ in range(10):
            a, b = _random_op(rng, legs), _random_op(rng, legs)
            ok &= np.array_equal(_model(a * b), _model(a).dot(_model(b)))
    checks.append(_Check("graded tensor sign rule vs model", ok))

    ok = True
    for _ in range(100):
        pa, pb = rng.randint(0, 1), rng.randint(0, 1)
        a, b = random_homogeneous_matrix(rng, pa), random_homogeneous_matrix(rng, pb)
        ok &= mu(a * b) == (-1 if pa and pb else 1) * mu(b * a)
    checks.append(_Check("supertrace supercyclicity", ok))
    _emit(capsys, 9, checks, t0)


@pytest.mark.parametrize("s", [(0, 0, 0)])
def test_degenerate_spectral_rejected(s):
    with pytest.raises(ValueError):
        verify_ybe(s)
