"""Exact arithmetic in Q(q) and truncated power series over it.

Every coefficient in the package is a :class:`QRat`, a rational function of
the deformation parameter ``q`` kept in lowest terms.  Polynomials are
``flint.fmpz_poly`` objects, so numerator and denominator have integer
coefficients; rational constants are carried by the denominator content.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from flint import fmpz_poly

__all__ = [
    "QRat",
    "Series",
    "SeriesError",
    "q",
    "q_pow",
    "kappa",
    "q_bracket",
    "q_num",
    "q_factorial",
    "bar",
    "qrat_arith",
]

_ONE_POLY = fmpz_poly([1])
_ZERO_POLY = fmpz_poly([])


class QRat:
    """Rational function ``num/den`` in ``q`` with integer-coefficient polynomials.

    The representation is canonical: ``gcd(num, den) == 1`` (content included)
    and the leading coefficient of ``den`` is positive.  Zero is ``0/1``.
    Instances are immutable.
    """

    __slots__ = ("num", "den", "_key")

    def __init__(self, num=0, den=1, *, _canonical=False):
        if not isinstance(num, fmpz_poly):
            num = fmpz_poly([num]) if num else fmpz_poly([])
        if not isinstance(den, fmpz_poly):
            den = fmpz_poly([den])
        if not _canonical:
            if den == 0:
                raise ZeroDivisionError("QRat with zero denominator")
            if num == 0:
                den = _ONE_POLY
            elif den != 1:
                g = num.gcd(den)
                if g != 1:
                    num = num // g
                    den = den // g
                if den[den.degree()] < 0:
                    num = -num
                    den = -den
        self.num = num
        self.den = den
        self._key = None

    # construction helpers -------------------------------------------------

    @classmethod
    def coerce(cls, x) -> "QRat":
        if isinstance(x, QRat):
            return x
        if isinstance(x, int):
            return _int_qrat(x)
        if isinstance(x, Fraction):
            return cls(x.numerator, x.denominator)
        raise TypeError(f"cannot coerce {type(x).__name__} to QRat")

    @classmethod
    def from_laurent(cls, coeffs: dict) -> "QRat":
        """Build ``sum c_k q^k`` from a mapping exponent -> integer/Fraction."""
        out = ZERO
        for k, c in coeffs.items():
            out = out + QRat.coerce(c) * q_pow(k)
        return out

    # predicates -----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num == 0

    def is_one(self) -> bool:
        return self.den == 1 and self.num == 1

    def key(self):
        k = self._key
        if k is None:
            k = (tuple(int(c) for c in self.num.coeffs()),
                 tuple(int(c) for c in self.den.coeffs()))
            self._key = k
        return k

    def __hash__(self):
        return hash(self.key())

    def __eq__(self, other):
        if not isinstance(other, QRat):
            try:
                other = QRat.coerce(other)
            except TypeError:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __bool__(self):
        return self.num != 0

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, QRat):
            try:
                other = QRat.coerce(other)
            except TypeError:
                return NotImplemented
        if other.num == 0:
            return self
        if self.num == 0:
            return other
        if self.den == other.den:
            return QRat(self.num + other.num, self.den)
        return QRat(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return QRat(-self.num, self.den, _canonical=True)

    def __sub__(self, other):
        if not isinstance(other, QRat):
            try:
                other = QRat.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return QRat.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, QRat):
            try:
                other = QRat.coerce(other)
            except TypeError:
                return NotImplemented
        if self.num == 0 or other.num == 0:
            return ZERO
        if self.den == 1 and other.den == 1:
            return QRat(self.num * other.num, _ONE_POLY, _canonical=True)
        return QRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "QRat":
        if self.num == 0:
            raise ZeroDivisionError("inverse of zero QRat")
        return QRat(self.den, self.num)

    def __truediv__(self, other):
        if not isinstance(other, QRat):
            try:
                other = QRat.coerce(other)
            except TypeError:
                return NotImplemented
        if other.num == 0:
            raise ZeroDivisionError("QRat division by zero")
        return QRat(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return QRat.coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return QRat(self.num ** n, self.den ** n, _canonical=True)

    # evaluation / display -------------------------------------------------

    def evaluate(self, value):
        """Evaluate at ``q = value`` (exact for Fraction/int input)."""
        def ev(p):
            acc = 0
            for c in reversed([int(c) for c in p.coeffs()]):
                acc = acc * value + c
            return acc
        return Fraction(ev(self.num)) / Fraction(ev(self.den)) if isinstance(value, (int, Fraction)) \
            else ev(self.num) / ev(self.den)

    def laurent(self):
        """Return ``{k: c}`` if this value is a Laurent polynomial, else ``None``."""
        coeffs = [int(c) for c in self.den.coeffs()]
        nz = [i for i, c in enumerate(coeffs) if c]
        if len(nz) != 1:
            return None
        shift = nz[0]
        c0 = coeffs[shift]
        out = {}
        for i, c in enumerate(int(c) for c in self.num.coeffs()):
            if c:
                out[i - shift] = Fraction(c, c0)
        return out

    def __repr__(self):
        return f"QRat({self})"

    def __str__(self):
        lp = self.laurent()
        if lp is not None:
            return _laurent_str(lp)
        n = _laurent_str({i: int(c) for i, c in enumerate(self.num.coeffs()) if c})
        d = _laurent_str({i: int(c) for i, c in enumerate(self.den.coeffs()) if c})
        return f"({n})/({d})"

    def latex(self) -> str:
        lp = self.laurent()
        if lp is not None:
            return _laurent_str(lp, latex=True)
        n = _laurent_str({i: int(c) for i, c in enumerate(self.num.coeffs()) if c}, latex=True)
        d = _laurent_str({i: int(c) for i, c in enumerate(self.den.coeffs()) if c}, latex=True)
        return rf"\frac{{{n}}}{{{d}}}"


def _laurent_str(lp: dict, latex: bool = False) -> str:
    if not lp:
        return "0"
    parts = []
    for k in sorted(lp, reverse=True):
        c = lp[k]
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if k == 0:
            body = str(c)
        else:
            if latex:
                mono = "q" if k == 1 else f"q^{{{k}}}"
            else:
                mono = "q" if k == 1 else f"q^{k}"
            if c == 1:
                body = mono
            elif latex and isinstance(c, Fraction) and c.denominator != 1:
                body = rf"\frac{{{c.numerator}}}{{{c.denominator}}}{mono}"
            else:
                body = f"{c}*{mono}" if not latex else f"{c}{mono}"
        parts.append((sign, body))
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s


@lru_cache(maxsize=None)
def _int_qrat(n: int) -> QRat:
    return QRat(fmpz_poly([n]) if n else _ZERO_POLY, _ONE_POLY, _canonical=True)


ZERO = QRat(_ZERO_POLY, _ONE_POLY, _canonical=True)
ONE = QRat(_ONE_POLY, _ONE_POLY, _canonical=True)
QRat.zero = ZERO
QRat.one = ONE


@lru_cache(maxsize=None)
def q_pow(n: int) -> QRat:
    """``q**n`` for any integer ``n``."""
    if n >= 0:
        return QRat(fmpz_poly([0] * n + [1]), _ONE_POLY, _canonical=True)
    return QRat(_ONE_POLY, fmpz_poly([0] * (-n) + [1]), _canonical=True)


q = q_pow(1)


@lru_cache(maxsize=None)
def kappa() -> QRat:
    """``q - q^{-1}``."""
    return q_pow(1) - q_pow(-1)


@lru_cache(maxsize=None)
def q_bracket(n: int, base_power: int = 1) -> QRat:
    """Symmetric q-integer ``[n]_x`` with ``x = q**base_power``."""
    if n == 0:
        return ZERO
    x = q_pow(base_power)
    return (q_pow(n * base_power) - q_pow(-n * base_power)) / (x - x.inverse())


@lru_cache(maxsize=None)
def q_num(n: int, base_power: int = 1) -> QRat:
    """Non-symmetric q-integer ``(n)_x = (x^n - 1)/(x - 1)``, ``x = q**base_power``."""
    out = ZERO
    for k in range(n):
        out = out + q_pow(k * base_power)
    return out


@lru_cache(maxsize=None)
def q_factorial(n: int, base_power: int = 1) -> QRat:
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    out = ONE
    for k in range(1, n + 1):
        out = out * q_num(k, base_power)
    return out


def _reverse_poly(p: fmpz_poly, deg: int) -> fmpz_poly:
    cs = [int(c) for c in p.coeffs()]
    cs = cs + [0] * (deg + 1 - len(cs))
    return fmpz_poly(list(reversed(cs)))


def bar(a: QRat) -> QRat:
    """Substitute ``q -> q^{-1}``."""
    a = QRat.coerce(a)
    if a.num == 0:
        return a
    dn, dd = a.num.degree(), a.den.degree()
    d = max(dn, dd)
    return QRat(_reverse_poly(a.num, d), _reverse_poly(a.den, d))


def qrat_arith(a, b, op: str) -> QRat:
    """Dispatch helper: ``op`` in {add, sub, mul, div}."""
    a, b = QRat.coerce(a), QRat.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------
# truncated power series
# ---------------------------------------------------------------------------


class SeriesError(ValueError):
    """Violated constant-term precondition for exp/log/inverse."""


class Series:
    """Truncated power series ``sum_{n<=order} c_n z^n``.

    Coefficients may live in any ring implemented here (``QRat`` or an algebra
    element type); they need not commute, so products keep factor order.
    ``zero`` is the additive identity of the coefficient ring.
    """

    __slots__ = ("coeffs", "order", "zero")

    def __init__(self, coeffs, order: int, zero=ZERO):
        coeffs = list(coeffs)[: order + 1]
        if isinstance(zero, QRat):
            coeffs = [c if isinstance(c, QRat) else QRat.coerce(c) for c in coeffs]
        coeffs += [zero] * (order + 1 - len(coeffs))
        self.coeffs = coeffs
        self.order = order
        self.zero = zero

    @classmethod
    def constant(cls, c, order: int, zero=ZERO):
        return cls([c], order, zero)

    @classmethod
    def monomial(cls, c, power: int, order: int, zero=ZERO):
        return cls([zero] * power + [c], order, zero)

    def __getitem__(self, n):
        return self.coeffs[n] if n <= self.order else self.zero

    def truncate(self, order: int) -> "Series":
        return Series(self.coeffs, min(order, self.order), self.zero)

    def _pair(self, other):
        n = min(self.order, other.order)
        return n, self.coeffs, other.coeffs

    def __add__(self, other):
        if not isinstance(other, Series):
            return Series([self.coeffs[0] + other] + self.coeffs[1:], self.order, self.zero)
        n, a, b = self._pair(other)
        return Series([a[i] + b[i] for i in range(n + 1)], n, self.zero)

    def __radd__(self, other):
        return Series([other + self.coeffs[0]] + self.coeffs[1:], self.order, self.zero)

    def __neg__(self):
        return Series([-c for c in self.coeffs], self.order, self.zero)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Series):
            return Series([c * other for c in self.coeffs], self.order, self.zero)
        n, a, b = self._pair(other)
        out = []
        for k in range(n + 1):
            acc = self.zero
            for i in range(k + 1):
                if _nonzero(a[i]) and _nonzero(b[k - i]):
                    acc = acc + a[i] * b[k - i]
            out.append(acc)
        return Series(out, n, self.zero)

    def __rmul__(self, other):
        return Series([other * c for c in self.coeffs], self.order, self.zero)

    def shift(self, k: int) -> "Series":
        """Multiply by ``z**k`` (k >= 0), keeping the order."""
        return Series([self.zero] * k + self.coeffs, self.order, self.zero)

    def compose_scale(self, c) -> "Series":
        """``s(c z)``: coefficient of ``z^n`` is multiplied by ``c^n``."""
        c = QRat.coerce(c)
        out, p = [], ONE
        for coef in self.coeffs:
            out.append(coef * p if not p.is_one() else coef)
            p = p * c
        return Series(out, self.order, self.zero)

    def _unit(self):
        c0 = self.coeffs[0]
        one = getattr(c0, "one", None)
        if callable(one):
            return one()
        if isinstance(c0, QRat):
            return ONE
        return c0 * 0 + 1

    def exp(self) -> "Series":
        if _nonzero(self.coeffs[0]):
            raise SeriesError("exp needs zero constant term")
        unit = self._unit()
        result = Series.constant(unit, self.order, self.zero)
        power = Series.constant(unit, self.order, self.zero)
        for k in range(1, self.order + 1):
            power = power * self
            result = result + power * Fraction(1, factorial(k))
        return result

    def log(self) -> "Series":
        unit = self._unit()
        if self.coeffs[0] != unit:
            raise SeriesError("log needs constant term 1")
        x = self - unit  # log(1 + x) = sum (-1)^{k+1} x^k / k
        result = Series([], self.order, self.zero)
        power = Series.constant(unit, self.order, self.zero)
        for k in range(1, self.order + 1):
            power = power * x
            result = result + power * Fraction((-1) ** (k + 1), k)
        return result

    def inverse(self) -> "Series":
        c0 = self.coeffs[0]
        try:
            c0_inv = c0.inverse()
        except (ZeroDivisionError, AttributeError, ValueError) as exc:
            raise SeriesError(f"constant term {c0} is not invertible") from exc
        rest = Series([self.zero] + self.coeffs[1:], self.order, self.zero)
        # (c0 + x)^{-1} = sum_k (-c0^{-1} x)^k c0^{-1}
        step = Series([-(c0_inv * c) for c in rest.coeffs], self.order, self.zero)
        unit = self._unit()
        acc = Series.constant(unit, self.order, self.zero)
        power = Series.constant(unit, self.order, self.zero)
        for _ in range(self.order):
            power = power * step
            acc = acc + power
        return acc * c0_inv

    def map(self, fn) -> "Series":
        return Series([fn(c) for c in self.coeffs], self.order, self.zero)

    def is_zero(self) -> bool:
        return not any(_nonzero(c) for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return all(self.coeffs[i] == other.coeffs[i] for i in range(n + 1))

    __hash__ = None

    def __repr__(self):
        terms = [f"({c})*z^{i}" for i, c in enumerate(self.coeffs) if _nonzero(c)]
        return " + ".join(terms) + f" + O(z^{self.order + 1})" if terms else f"O(z^{self.order + 1})"


def _nonzero(c) -> bool:
    return bool(c)
