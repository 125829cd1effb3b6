"""Central elements of U_q(gl(2|1)) from the Drinfeld partial trace.

``C_n = (1 (x) str)((M^sigma M)^n (1 (x) pi(q^K)))`` with ``K = 2K2 + 2K3``,
where ``M`` and ``M^sigma`` are the images of the finite universal R-matrix
and its graded flip under ``1 (x) pi``.  ``C~_n = omega(C_n)``.
"""

from __future__ import annotations

import random
import threading
import time
from dataclasses import dataclass
from typing import Dict, List

from .jimbo import default_cache
from .pbw import AlgebraElement, E, F, ONE_ELT, is_central, omega, qK, q_H
from .report import CheckReport, failed, passed
from .reps import GradedMatrix, GradedTensorOperator, partial_supertrace, pi, pi_qK
from .rootdata import INDEX_PARITY
from .scalars import QRat, kappa, q_bracket, q_pow

K_WEIGHT = (0, 2, 2)  # q^K with K = 2K2 + 2K3


def _op(terms) -> GradedTensorOperator:
    return GradedTensorOperator(1, {((i, j),): v for (i, j), v in terms})


def _identity() -> GradedTensorOperator:
    return GradedTensorOperator.identity(1, ONE_ELT)


def cartan_factor() -> GradedTensorOperator:
    """``(1 (x) pi)`` of ``exp(-hbar sum_i (-1)^[i] K_i (x) K_i)``."""
    terms = []
    for i in (1, 2, 3):
        lam = [0, 0, 0]
        lam[i - 1] = 1 if INDEX_PARITY[i] else -1
        terms.append(((i, i), qK(tuple(lam))))
    return _op(terms)


def exp_q(x: GradedTensorOperator, base: QRat = None, max_terms: int = 64):
    """``sum x^n / (n)_base!``; stops once a power vanishes.

    ``base=None`` is the ordinary exponential.  Returns the value and the
    number of nonzero terms used.
    """
    out = _identity()
    power = _identity()
    for n in range(1, max_terms):
        power = power * x
        if power.is_zero():
            return out, n
        if base is None:
            denom = QRat.coerce(1)
            for k in range(2, n + 1):
                denom = denom * k
        else:
            denom = _q_factorial_base(n, base)
        out = out + power.scale_right(denom.inverse())
    raise ArithmeticError("q-exponential did not terminate; argument is not nilpotent")


def _q_factorial_base(n: int, base: QRat) -> QRat:
    out = QRat.coerce(1)
    for k in range(1, n + 1):
        num = base ** k - 1
        out = out * (num / (base - 1))
    return out


# universal R = exp_{q^2}(-k E12 (x) F12) exp(k E13 (x) F13) exp(k E23 (x) F23) * Cartan
def _universal_factors():
    k = kappa()
    return [
        (E(1, 2), F(1, 2), -k, q_pow(2)),
        (E(1, 3), F(1, 3), k, None),
        (E(2, 3), F(2, 3), k, None),
    ]


def _one_pi(a: AlgebraElement, b: AlgebraElement, c) -> GradedTensorOperator:
    """``c * a (x) pi(b)``."""
    m = pi(b)
    return _op([(ij, a * c * v) for ij, v in m.entries.items()])


@dataclass
class FiniteRPair:
    M: GradedTensorOperator
    M_sigma: GradedTensorOperator


def build_M_universal() -> FiniteRPair:
    """Both images from the four-factor product via truncated q-exponentials."""
    m = _identity()
    ms = _identity()
    for a, b, c, base in _universal_factors():
        x, _ = exp_q(_one_pi(a, b, c), base)
        m = m * x
        sign = -1 if a.parity() * b.parity() else 1
        xs, _ = exp_q(_one_pi(b, a, c * sign), base)
        ms = ms * xs
    cart = cartan_factor()
    return FiniteRPair(m * cart, ms * cart)


def build_M_display() -> FiniteRPair:
    """Literal transcription of the two printed operators.

    ``E_{ji}`` with ``j > i`` in the printed ``M^sigma`` is read as ``F_{ij}``.
    """
    k = kappa()
    one = ONE_ELT
    left = _op([((1, 1), one), ((2, 2), one), ((3, 3), one),
                ((2, 1), E(1, 2) * -k), ((3, 1), E(1, 3) * k), ((3, 2), E(2, 3) * k)])
    left_s = _op([((1, 1), one), ((2, 2), one), ((3, 3), one),
                  ((1, 2), F(1, 2) * -k), ((1, 3), F(1, 3) * k), ((3, 2), F(2, 3) * k)])
    cart = cartan_factor()
    return FiniteRPair(left * cart, left_s * cart)


def build_finite_R_images() -> FiniteRPair:
    return build_M_universal()


def exp_q_length(a: AlgebraElement, b: AlgebraElement, c, base) -> int:
    """Number of nonzero terms in the q-exponential of ``c a (x) pi(b)``."""
    return exp_q(_one_pi(a, b, c), base)[1]


class CentralFamily:
    """Memoized ``C_n`` and ``C~_n``."""

    def __init__(self, pair: FiniteRPair = None):
        self.pair = pair or build_M_universal()
        self._B = self.pair.M_sigma * self.pair.M
        self._powers: Dict[int, GradedTensorOperator] = {1: self._B}
        self._c: Dict[int, AlgebraElement] = {}
        self._ct: Dict[int, AlgebraElement] = {}
        self._lock = threading.RLock()

    def _power(self, n):
        with self._lock:
            if n not in self._powers:
                self._powers[n] = self._power(n - 1) * self._B
            return self._powers[n]

    def c(self, n: int) -> AlgebraElement:
        if n < 1:
            raise ValueError("C_n needs n >= 1")
        with self._lock:
            if n not in self._c:
                self._c[n] = partial_supertrace(self._power(n), pi_qK(K_WEIGHT))
            return self._c[n]

    def ctilde(self, n: int) -> AlgebraElement:
        with self._lock:
            if n not in self._ct:
                self._ct[n] = omega(self.c(n))
            return self._ct[n]


_FAMILY = None
_FAMILY_LOCK = threading.Lock()


def default_family() -> CentralFamily:
    global _FAMILY
    with _FAMILY_LOCK:
        if _FAMILY is None:
            _FAMILY = CentralFamily()
        return _FAMILY


def c_n(n: int) -> AlgebraElement:
    return default_family().c(n)


def ctilde_n(n: int) -> AlgebraElement:
    return default_family().ctilde(n)


def phi_from_ctilde(n: int, ct=None) -> AlgebraElement:
    """Right-hand sides of the Phi <-> C~ relations for ``n <= 4``."""
    C = ct or ctilde_n
    k, q = kappa(), q_pow(1)
    if n == 1:
        return C(1)
    if n == 2:
        rhs = C(2) * (2 * q) - C(1) * C(1) * k
    elif n == 3:
        rhs = (C(3) * (3 * q ** 2) - C(2) * C(1) * (3 * k * q)
               + C(1) * C(1) * C(1) * k ** 2)
    elif n == 4:
        c1 = C(1)
        rhs = (C(4) * (4 * q ** 3) - C(3) * c1 * (4 * k * q ** 2) - C(2) * C(2) * (2 * k * q ** 2)
               + C(2) * c1 * c1 * (4 * k ** 2 * q) - c1 * c1 * c1 * c1 * k ** 3)
    else:
        raise ValueError("relations are only known for n <= 4")
    return rhs * q_bracket(n).inverse()


def verify_phi_ctilde(n_max: int = 4, truncation: int = 4) -> List[CheckReport]:
    cache = default_cache(max(truncation, n_max))
    out = []
    for n in range(1, n_max + 1):
        t0 = time.perf_counter()
        diff = cache.phi_coefficient(n) - phi_from_ctilde(n)
        name = f"phi-ctilde:{n}"
        if diff.is_zero():
            r = passed(name, "Phi_n vs C~_n relation", truncation)
        else:
            r = failed(name, f"Phi_{n} - rhs = {str(diff)[:300]}", "Phi_n vs C~_n relation", truncation)
        r.elapsed_ms = (time.perf_counter() - t0) * 1e3
        out.append(r)
    return out


# ---------------------------------------------------------------------------
# S^2 twist and trace supercyclicity
# ---------------------------------------------------------------------------

# a word is a tuple of letters ("E", i), ("F", i) or ("qH", i, power)
_LETTER_PARITY = {("E", 1): 0, ("E", 2): 1, ("F", 1): 0, ("F", 2): 1}


def _letter_parity(letter) -> int:
    return 0 if letter[0] == "qH" else _LETTER_PARITY[letter]


def _antipode_letter(letter):
    kind, i = letter[0], letter[1]
    if kind == "E":
        return [(-1, (("qH", i, -1), letter))]
    if kind == "F":
        return [(-1, (letter, ("qH", i, 1)))]
    return [(1, (("qH", i, -letter[2]),))]


def antipode(words):
    """Antipode on a sum of words ``[(coeff, word)]``, as a graded anti-automorphism."""
    out = []
    for c, word in words:
        sign = 1
        par = [_letter_parity(x) for x in word]
        for a in range(len(word)):
            for b in range(a + 1, len(word)):
                if par[a] and par[b]:
                    sign = -sign
        acc = [(c * sign, ())]
        for letter in reversed(word):
            acc = [(x * y, w + v) for x, w in acc for y, v in _antipode_letter(letter)]
        out.extend(acc)
    return out


def evaluate_words(words) -> AlgebraElement:
    gens = {("E", 1): E(1, 2), ("E", 2): E(2, 3), ("F", 1): F(1, 2), ("F", 2): F(2, 3)}
    out = AlgebraElement()
    for c, word in words:
        term = ONE_ELT
        for letter in word:
            term = term * (q_H(letter[1], letter[2]) if letter[0] == "qH" else gens[letter])
        out = out + term * c
    return out


def antipode_squared(name: str) -> AlgebraElement:
    """``S^2`` of a generator ``E1``, ``E2``, ``F1`` or ``F2``."""
    return evaluate_words(antipode(antipode([(1, ((name[0], int(name[1])),))])))


def verify_s_square_twist() -> CheckReport:
    t0 = time.perf_counter()
    qk, qk_inv = qK(K_WEIGHT), qK(tuple(-x for x in K_WEIGHT))
    bad = None
    for name in ("E1", "E2", "F1", "F2"):
        g = {"E1": E(1, 2), "E2": E(2, 3), "F1": F(1, 2), "F2": F(2, 3)}[name]
        if qk * g * qk_inv != antipode_squared(name):
            bad = name
            break
    for i in (1, 2):
        for p in (1, -1):
            if evaluate_words(antipode(antipode([(1, (("qH", i, p),))]))) != q_H(i, p):
                bad = f"q^({p}H{i})"
    r = passed("s-square-twist", "S^2(a) = q^K a q^-K") if bad is None else \
        failed("s-square-twist", f"generator {bad}", "S^2(a) = q^K a q^-K")
    r.elapsed_ms = (time.perf_counter() - t0) * 1e3
    return r


def mu(x: GradedMatrix):
    """Trace functional ``str o pi`` on matrices."""
    return x.supertrace()


def random_homogeneous_matrix(rng: random.Random, parity: int) -> GradedMatrix:
    entries = {}
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            if (INDEX_PARITY[i] + INDEX_PARITY[j]) % 2 == parity and rng.random() < 0.7:
                entries[(i, j)] = q_pow(rng.randint(-3, 3)) * rng.randint(-3, 3)
    return GradedMatrix(entries)


def verify_c_central(n_max: int = 2, family: CentralFamily = None) -> List[CheckReport]:
    fam = family or default_family()
    out = []
    for n in range(1, n_max + 1):
        for label, fn in (("C", fam.c), ("Ctilde", fam.ctilde)):
            t0 = time.perf_counter()
            r = is_central(fn(n), f"partial-trace:{label}{n}-central", "partial trace lies in the center")
            r.elapsed_ms = (time.perf_counter() - t0) * 1e3
            out.append(r)
    return out


def verify_m_routes() -> List[CheckReport]:
    """Printed ``M`` and ``M^sigma`` against the q-exponential construction."""
    t0 = time.perf_counter()
    uni, disp = build_M_universal(), build_M_display()
    out = []
    for label, a, b in (("M", uni.M, disp.M), ("M-sigma", uni.M_sigma, disp.M_sigma)):
        d = a.first_difference(b)
        name = f"partial-trace:{label}-routes"
        anchor = f"{label}: printed operator vs product of q-exponentials"
        r = passed(name, anchor) if d is None else failed(name, f"entry {d[0]}: exp-route {d[1]} printed {d[2]}", anchor)
        r.elapsed_ms = (time.perf_counter() - t0) * 1e3
        out.append(r)
    return out
