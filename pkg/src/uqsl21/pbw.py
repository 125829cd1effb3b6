"""PBW normal form for U_q(gl(2|1)).

A basis monomial is ``F12^a F13^b F23^c  q^{k.K}  E12^d E13^e E23^f`` with
``b, c, e, f`` in {0, 1}.  Products are straightened with a fixed table of
pairwise exchange rules; the table is checked against associativity and the
defining representation in the test-suite rather than assumed.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Dict, NamedTuple, Tuple

from .report import CheckReport, failed, passed
from .rootdata import bilinear, sign_class
from .scalars import ONE, ZERO, QRat, bar, kappa, q_pow

# root-vector slots: 0 -> 12, 1 -> 13, 2 -> 23
SLOT_PAIRS = ((1, 2), (1, 3), (2, 3))
SLOT_OF = {(1, 2): 0, (1, 3): 1, (2, 3): 2}
SLOT_PARITY = (0, 1, 1)
SLOT_WEIGHT = ((1, 0), (1, 1), (0, 1))
NILPOTENT = (False, True, True)

Triple = Tuple[int, int, int]
_ZERO3 = (0, 0, 0)


class PBWMonomial(NamedTuple):
    f: Triple  # exponents of F12, F13, F23
    k: Triple  # Cartan exponent vector: q^{k1 K1 + k2 K2 + k3 K3}
    e: Triple  # exponents of E12, E13, E23

    @property
    def parity(self) -> int:
        return (self.f[1] + self.f[2] + self.e[1] + self.e[2]) % 2

    @property
    def weight(self) -> Tuple[int, int]:
        w1 = w2 = 0
        for slot in range(3):
            n = self.e[slot] - self.f[slot]
            w1 += n * SLOT_WEIGHT[slot][0]
            w2 += n * SLOT_WEIGHT[slot][1]
        return (w1, w2)

    @property
    def degree(self) -> int:
        return sum(self.f) + sum(self.e)


UNIT_MONO = PBWMonomial(_ZERO3, _ZERO3, _ZERO3)


def _shift(lam: Triple, slot: int) -> int:
    """``lam_i - lam_j`` for the slot's pair ``(i, j)``."""
    i, j = SLOT_PAIRS[slot]
    return lam[i - 1] - lam[j - 1]


def _add3(a, b):
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def _neg3(a):
    return (-a[0], -a[1], -a[2])


def _acc(d: dict, key, c: QRat):
    old = d.get(key)
    d[key] = c if old is None else old + c


def _clean(d: dict) -> dict:
    return {k: v for k, v in d.items() if v.num != 0}


# ---------------------------------------------------------------------------
# block-internal reordering
# ---------------------------------------------------------------------------

def _e_times_letter(e: Triple, slot: int):
    """``E-monomial * E_slot`` inside the positive subalgebra."""
    d, b, c = e
    if slot == 2:
        return [] if c else [(ONE, (d, b, 1))]
    if slot == 1:
        if b:
            return []
        if c:  # E23 E13 = -q^{-1} E13 E23
            return [(-q_pow(-1), (d, 1, 1))]
        return [(ONE, (d, 1, 0))]
    # E13 E12 = q E12 E13,  E23 E12 = q^{-1} E12 E23 - q^{-1} E13
    if c:
        out = [(q_pow(b - 1), (d + 1, b, 1))]
        if not b:
            out.append((-q_pow(-1), (d, 1, 0)))
        return out
    return [(q_pow(b), (d + 1, b, 0))]


def _f_times_letter(f: Triple, slot: int):
    """``F-monomial * F_slot`` inside the negative subalgebra."""
    a, b, c = f
    if slot == 2:
        return [] if c else [(ONE, (a, b, 1))]
    if slot == 1:
        if b:
            return []
        if c:  # F23 F13 = -q^{-1} F13 F23
            return [(-q_pow(-1), (a, 1, 1))]
        return [(ONE, (a, 1, 0))]
    # F13 F12 = q F12 F13,  F23 F12 = q^{-1} F12 F23 + F13
    if c:
        out = [(q_pow(b - 1), (a + 1, b, 1))]
        if not b:
            out.append((ONE, (a, 1, 0)))
        return out
    return [(q_pow(b), (a + 1, b, 0))]


def _letters(t: Triple):
    for slot in range(3):
        for _ in range(t[slot]):
            yield slot


_BLOCK_CACHE: Dict[tuple, list] = {}


def _block_product(kind: str, x: Triple, y: Triple):
    key = (kind, x, y)
    hit = _BLOCK_CACHE.get(key)
    if hit is not None:
        return hit
    step = _e_times_letter if kind == "E" else _f_times_letter
    cur = {x: ONE}
    for slot in _letters(y):
        nxt = {}
        for mono, c in cur.items():
            for c2, m2 in step(mono, slot):
                _acc(nxt, m2, c * c2)
        cur = _clean(nxt)
    out = list(cur.items())
    _BLOCK_CACHE[key] = out
    return out


# ---------------------------------------------------------------------------
# E_slot F_slot' exchange table:  E F = sign * F E + remainder
# ---------------------------------------------------------------------------

def _qbracket_cartan(h: Triple):
    """Terms of ``(q^h - q^{-h}) / (q - q^{-1})``."""
    inv = kappa().inverse()
    return [(inv, PBWMonomial(_ZERO3, h, _ZERO3)), (-inv, PBWMonomial(_ZERO3, _neg3(h), _ZERO3))]


def _build_rules():
    H1, H2, K13 = (1, -1, 0), (0, 1, 1), (1, 0, 1)
    M = PBWMonomial
    return {
        (0, 0): (1, _qbracket_cartan(H1)),
        (0, 1): (1, [(-q_pow(-1), M((0, 0, 1), _neg3(H1), _ZERO3))]),
        (0, 2): (1, []),
        (1, 0): (1, [(-q_pow(1), M(_ZERO3, H1, (0, 0, 1)))]),
        (1, 1): (-1, _qbracket_cartan(K13)),
        (1, 2): (-1, [(ONE, M(_ZERO3, _neg3(H2), (1, 0, 0)))]),
        (2, 0): (1, []),
        (2, 1): (-1, [(ONE, M((1, 0, 0), H2, _ZERO3))]),
        (2, 2): (-1, _qbracket_cartan(H2)),
    }


EXCHANGE_RULES = _build_rules()


# ---------------------------------------------------------------------------
# monomial products
# ---------------------------------------------------------------------------

def _assemble(f1: Triple, lam1: Triple, middle: dict, lam2: Triple, e2: Triple):
    """``f1 q^{lam1} (middle) q^{lam2} e2`` for a normal-ordered ``middle``."""
    out = {}
    for m, c in middle.items():
        fp, mu, ep = m
        # q^{lam1} F' = q^{-sum a (lam1_i - lam1_j)} F' q^{lam1}
        p = 0
        for slot in range(3):
            if fp[slot]:
                p -= fp[slot] * _shift(lam1, slot)
            if ep[slot]:
                p -= ep[slot] * _shift(lam2, slot)
        coeff = c if p == 0 else c * q_pow(p)
        k = _add3(_add3(lam1, mu), lam2)
        fparts = _block_product("F", f1, fp) if f1 != _ZERO3 else [(fp, ONE)]
        eparts = _block_product("E", ep, e2) if e2 != _ZERO3 else [(ep, ONE)]
        for ff, cf in fparts:
            for ee, ce in eparts:
                _acc(out, PBWMonomial(ff, k, ee), coeff * cf * ce)
    return out


_EF_CACHE: Dict[tuple, dict] = {}


def _eword_times_f(e: Triple, slot: int) -> dict:
    """Normal form of ``E-monomial * F_slot``."""
    key = (e, slot)
    hit = _EF_CACHE.get(key)
    if hit is not None:
        return hit
    f_letter = [0, 0, 0]
    f_letter[slot] = 1
    f_letter = tuple(f_letter)
    if e == _ZERO3:
        out = {PBWMonomial(f_letter, _ZERO3, _ZERO3): ONE}
        _EF_CACHE[key] = out
        return out
    last = 2 if e[2] else (1 if e[1] else 0)
    rest = list(e)
    rest[last] -= 1
    rest = tuple(rest)
    sign, remainder = EXCHANGE_RULES[(last, slot)]
    out = {}
    # E' (E_last F) = sign * (E' F) E_last + E' * remainder
    inner = _eword_times_f(rest, slot)
    e_last = [0, 0, 0]
    e_last[last] = 1
    e_last = tuple(e_last)
    for (fp, mu, ep), c in inner.items():
        for ee, ce in _block_product("E", ep, e_last):
            _acc(out, PBWMonomial(fp, mu, ee), c * ce if sign > 0 else -(c * ce))
    rest_mono = PBWMonomial(_ZERO3, _ZERO3, rest)
    for c, r in remainder:
        for m, cm in mono_mul(rest_mono, r).items():
            _acc(out, m, c * cm)
    out = _clean(out)
    _EF_CACHE[key] = out
    return out


_EFF_CACHE: Dict[tuple, dict] = {}


def _eword_times_fword(e: Triple, f: Triple) -> dict:
    key = (e, f)
    hit = _EFF_CACHE.get(key)
    if hit is not None:
        return hit
    cur = {PBWMonomial(_ZERO3, _ZERO3, e): ONE}
    for slot in _letters(f):
        nxt = {}
        for m, c in cur.items():
            block = _eword_times_f(m.e, slot)
            for m2, c2 in _assemble(m.f, m.k, block, _ZERO3, _ZERO3).items():
                _acc(nxt, m2, c * c2)
        cur = _clean(nxt)
    _EFF_CACHE[key] = cur
    return cur


_MUL_CACHE: Dict[tuple, dict] = {}


def mono_mul(m1: PBWMonomial, m2: PBWMonomial) -> dict:
    """Normal form of the product of two basis monomials (memoized)."""
    key = (m1, m2)
    hit = _MUL_CACHE.get(key)
    if hit is not None:
        return hit
    if m1.e == _ZERO3 or m2.f == _ZERO3:
        # no E-F crossing: only Cartan passing and block reordering
        lam1, lam2 = m1.k, m2.k
        p = 0
        for slot in range(3):
            p -= m2.f[slot] * _shift(lam1, slot)
            p -= m1.e[slot] * _shift(lam2, slot)
        coeff = q_pow(p) if p else ONE
        k = _add3(lam1, lam2)
        out = {}
        for ff, cf in _block_product("F", m1.f, m2.f):
            for ee, ce in _block_product("E", m1.e, m2.e):
                _acc(out, PBWMonomial(ff, k, ee), coeff * cf * ce)
        out = _clean(out)
    else:
        middle = _shift_middle(_eword_times_fword(m1.e, m2.f), m2.k, m2.e)
        out = _clean(_assemble(m1.f, m1.k, middle, _ZERO3, _ZERO3))
    _MUL_CACHE[key] = out
    return out



def _shift_middle(middle: dict, lam2: Triple, e2: Triple) -> dict:
    """``middle * q^{lam2} * E2`` for normal ``middle``."""
    out = {}
    for (fp, mu, ep), c in middle.items():
        p = 0
        for slot in range(3):
            p -= ep[slot] * _shift(lam2, slot)
        coeff = c * q_pow(p) if p else c
        k = _add3(mu, lam2)
        for ee, ce in _block_product("E", ep, e2):
            _acc(out, PBWMonomial(fp, k, ee), coeff * ce)
    return _clean(out)


def clear_caches():
    for cache in (_BLOCK_CACHE, _EF_CACHE, _EFF_CACHE, _MUL_CACHE, _OMEGA_CACHE):
        cache.clear()


# ---------------------------------------------------------------------------
# algebra elements
# ---------------------------------------------------------------------------

class WeightError(ValueError):
    """Input is not weight-homogeneous or has a weight outside Q_+ and Q_-."""


class AlgebraElement:
    """Finite Q(q)-combination of PBW monomials, stored without zero terms."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        self.terms = {m: c for m, c in terms.items() if c.num != 0}

    # constructors ---------------------------------------------------------

    @classmethod
    def scalar(cls, c) -> "AlgebraElement":
        c = QRat.coerce(c)
        return cls({UNIT_MONO: c}) if c else cls()

    @classmethod
    def monomial(cls, f=_ZERO3, k=_ZERO3, e=_ZERO3, coeff=ONE) -> "AlgebraElement":
        return cls({PBWMonomial(tuple(f), tuple(k), tuple(e)): QRat.coerce(coeff)})

    def one(self) -> "AlgebraElement":
        return ONE_ELT

    # ring structure -------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            if not isinstance(other, (int, Fraction, QRat)):
                return NotImplemented
            other = AlgebraElement.scalar(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            _acc(out, m, c)
        return AlgebraElement(out)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            if not isinstance(other, (int, Fraction, QRat)):
                return NotImplemented
            other = AlgebraElement.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            out = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    c12 = c1 * c2
                    for m, c in mono_mul(m1, m2).items():
                        _acc(out, m, c12 * c)
            return AlgebraElement(out)
        if not isinstance(other, (int, Fraction, QRat)):
            return NotImplemented
        c = QRat.coerce(other)
        if not c:
            return AlgebraElement()
        return AlgebraElement({m: v * c for m, v in self.terms.items()})

    def __rmul__(self, other):
        if not isinstance(other, (int, Fraction, QRat)):
            return NotImplemented
        c = QRat.coerce(other)
        if not c:
            return AlgebraElement()
        return AlgebraElement({m: c * v for m, v in self.terms.items()})

    def __truediv__(self, other):
        return self * QRat.coerce(other).inverse()

    def __pow__(self, n: int):
        out = ONE_ELT
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            try:
                other = AlgebraElement.scalar(other)
            except TypeError:
                return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def inverse(self) -> "AlgebraElement":
        """Inverse of a single scaled Cartan exponential."""
        if len(self.terms) == 1:
            (m, c), = self.terms.items()
            if m.f == _ZERO3 and m.e == _ZERO3:
                return AlgebraElement({PBWMonomial(_ZERO3, _neg3(m.k), _ZERO3): c.inverse()})
        raise ValueError("only scaled Cartan exponentials are invertible here")

    def map_coefficients(self, fn) -> "AlgebraElement":
        return AlgebraElement({m: fn(c) for m, c in self.terms.items()})

    def coefficient(self, mono) -> QRat:
        return self.terms.get(mono, ZERO)

    # grading --------------------------------------------------------------

    def parity(self) -> int:
        ps = {m.parity for m in self.terms}
        if len(ps) > 1:
            raise WeightError("element mixes parities")
        return ps.pop() if ps else 0

    def parity_parts(self):
        even = {m: c for m, c in self.terms.items() if m.parity == 0}
        odd = {m: c for m, c in self.terms.items() if m.parity == 1}
        return AlgebraElement(even), AlgebraElement(odd)

    def weight(self) -> Tuple[int, int]:
        ws = {m.weight for m in self.terms}
        if len(ws) > 1:
            raise WeightError(f"element is not weight-homogeneous: {sorted(ws)}")
        return ws.pop() if ws else (0, 0)

    # display --------------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (t[0].degree, t[0]))

    def __repr__(self):
        return f"AlgebraElement({self})"

    def __str__(self):
        from .render import element_text
        return element_text(self)


ONE_ELT = AlgebraElement({UNIT_MONO: ONE})
ZERO_ELT = AlgebraElement()


def scalar(c) -> AlgebraElement:
    return AlgebraElement.scalar(c)


def E(i: int, j: int) -> AlgebraElement:
    e = [0, 0, 0]
    e[SLOT_OF[(i, j)]] = 1
    return AlgebraElement.monomial(e=e)


def F(i: int, j: int) -> AlgebraElement:
    f = [0, 0, 0]
    f[SLOT_OF[(i, j)]] = 1
    return AlgebraElement.monomial(f=f)


def qK(*lam) -> AlgebraElement:
    """Group-like ``q^{lam1 K1 + lam2 K2 + lam3 K3}``."""
    if len(lam) == 1:
        lam = lam[0]
    return AlgebraElement.monomial(k=tuple(lam))


def q_H(i: int, power: int = 1) -> AlgebraElement:
    """``q^{power * H_i}`` with ``H1 = K1 - K2``, ``H2 = K2 + K3``."""
    h = (1, -1, 0) if i == 1 else (0, 1, 1)
    return qK(tuple(power * x for x in h))


def generators():
    """Chevalley generators and Cartan exponentials used for centrality tests."""
    gens = [("E1", E(1, 2)), ("E2", E(2, 3)), ("F1", F(1, 2)), ("F2", F(2, 3))]
    for idx in range(3):
        for sgn in (1, -1):
            lam = [0, 0, 0]
            lam[idx] = sgn
            gens.append((f"q^{'-' if sgn < 0 else ''}K{idx + 1}", qK(tuple(lam))))
    return gens


# ---------------------------------------------------------------------------
# q-supercommutator
# ---------------------------------------------------------------------------

def _finite_weight_and_parity(x: AlgebraElement):
    return x.weight(), x.parity()


def qsupercommutator(x, y, wx, wy, px: int, py: int):
    """``[[x, y]]`` for elements of given lattice weights and parities.

    Weights may be finite ``(a1, a2)`` or affine ``(a0, a1, a2)`` tuples; the
    q-power uses the matching invariant form.
    """
    sign = -1 if (px * py) % 2 else 1
    cx, cy = sign_class(wx), sign_class(wy)
    if cx == 1 and cy == 1:
        p = -bilinear(wx, wy)
    elif cx == -1 and cy == -1:
        p = bilinear(wx, wy)
    else:
        p = 0
    coeff = q_pow(p) * sign
    return x * y - coeff * (y * x)


def supercommutator(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Three-case q-supercommutator keyed on the Q_+/Q_- class of the weights."""
    wx, px = _finite_weight_and_parity(x)
    wy, py = _finite_weight_and_parity(y)
    return qsupercommutator(x, y, wx, wy, px, py)


def plain_supercommutator(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    ex, ox = x.parity_parts()
    ey, oy = y.parity_parts()
    return x * y - ey * x - oy * ex + oy * ox


# ---------------------------------------------------------------------------
# Cartan anti-involution
# ---------------------------------------------------------------------------

_OMEGA_CACHE: Dict[PBWMonomial, "AlgebraElement"] = {}


def _omega_mono(m: PBWMonomial) -> AlgebraElement:
    hit = _OMEGA_CACHE.get(m)
    if hit is not None:
        return hit
    # omega(F^a q^k E^b) = omega(E^b) q^{-k} omega(F^a), letters reversed
    out = ONE_ELT
    for slot in reversed(list(_letters(m.e))):
        out = out * F(*SLOT_PAIRS[slot])
    out = out * qK(_neg3(m.k))
    for slot in reversed(list(_letters(m.f))):
        out = out * E(*SLOT_PAIRS[slot])
    _OMEGA_CACHE[m] = out
    return out


def omega(x: AlgebraElement) -> AlgebraElement:
    """Anti-automorphism ``E_i <-> F_i``, ``q^{h} -> q^{-h}``, ``q -> q^{-1}`` on scalars."""
    out = {}
    for m, c in x.terms.items():
        cb = bar(c)
        for m2, c2 in _omega_mono(m).terms.items():
            _acc(out, m2, cb * c2)
    return AlgebraElement(out)


# ---------------------------------------------------------------------------
# weights, eigenvalues, centrality
# ---------------------------------------------------------------------------

def weight(x: AlgebraElement):
    return x.weight()


def hw_eigenvalue(x: AlgebraElement, lam) -> QRat:
    """Scalar by which ``x`` acts on a highest-weight vector of weight ``lam``."""
    if x.weight() != (0, 0):
        raise WeightError("highest-weight eigenvalue needs a weight-zero element")
    lam = tuple(lam)
    if any(isinstance(l, Fraction) and l.denominator != 1 for l in lam):
        raise ValueError("non-integral weights leave Q(q); use integer components")
    lam = tuple(int(l) for l in lam)
    out = ZERO
    for m, c in x.terms.items():
        if m.f == _ZERO3 and m.e == _ZERO3:
            out = out + c * q_pow(sum(a * b for a, b in zip(m.k, lam)))
    return out


def is_central(x: AlgebraElement, name: str = "central", anchor: str = "") -> CheckReport:
    even, odd = x.parity_parts()
    for gname, g in generators():
        r = plain_supercommutator(x, g)
        if r:
            shown = str(r)
            if len(shown) > 400:
                shown = shown[:400] + " ..."
            return failed(name, f"[x, {gname}] = {shown}", anchor)
    return passed(name, anchor)


def random_monomial(rng: random.Random, max_power: int = 2, max_k: int = 2) -> PBWMonomial:
    f = (rng.randint(0, max_power), rng.randint(0, 1), rng.randint(0, 1))
    e = (rng.randint(0, max_power), rng.randint(0, 1), rng.randint(0, 1))
    k = tuple(rng.randint(-max_k, max_k) for _ in range(3))
    return PBWMonomial(f, k, e)


def random_element(rng: random.Random, n_terms: int = 3, **kw) -> AlgebraElement:
    out = AlgebraElement()
    for _ in range(n_terms):
        c = q_pow(rng.randint(-2, 2)) * rng.choice([1, -1, 2, 3])
        out = out + AlgebraElement({random_monomial(rng, **kw): c})
    return out
