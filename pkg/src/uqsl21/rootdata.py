"""Root data of gl(2|1), sl(2|1) and the untwisted affinization.

Lattice vectors are plain integer tuples over the simple roots: ``(a1, a2)``
for the finite lattice and ``(a0, a1, a2)`` for the affine one, where
``delta = a0 + a1 + a2``.  Indices 1, 2 are even and 3 is odd.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Tuple, Union

from .scalars import QRat, q_pow

Parity = int  # 0 even, 1 odd

INDEX_PARITY = {1: 0, 2: 0, 3: 1}
PAIRS = ((1, 2), (1, 3), (2, 3))

CARTAN_A = ((2, -1), (-1, 0))
CARTAN_AFFINE = ((0, -1, 1), (-1, 2, -1), (1, -1, 0))
CARTAN_C = ((0, -1), (-1, -2))
SIMPLE_PARITY = (1, 0, 1)  # alpha_0, alpha_1, alpha_2

DELTA = (1, 1, 1)


def index_parity(i: int) -> Parity:
    return INDEX_PARITY[i]


@dataclass(frozen=True, order=True)
class FiniteRoot:
    """``alpha_ij = Xi_i - Xi_j`` for ``i < j``; ``negative`` flips the sign."""

    i: int
    j: int
    negative: bool = False

    def __post_init__(self):
        if not (1 <= self.i < self.j <= 3):
            raise ValueError(f"bad finite root indices ({self.i}, {self.j})")

    @property
    def parity(self) -> Parity:
        return (INDEX_PARITY[self.i] + INDEX_PARITY[self.j]) % 2

    def lattice(self) -> Tuple[int, int]:
        v = [0, 0]
        for k in range(self.i, self.j):
            v[k - 1] = 1
        if self.negative:
            v = [-x for x in v]
        return tuple(v)

    def xi(self) -> Tuple[int, int, int]:
        """Coordinates over ``Xi_1, Xi_2, Xi_3``."""
        v = [0, 0, 0]
        sgn = -1 if self.negative else 1
        v[self.i - 1] += sgn
        v[self.j - 1] -= sgn
        return tuple(v)

    def __str__(self):
        return ("-" if self.negative else "") + f"alpha{self.i}{self.j}"


PLUS, IMAG, MINUS = "real_plus", "imaginary", "real_minus"


@dataclass(frozen=True)
class AffineRoot:
    """Positive affine root.

    ``real_plus``:  ``alpha_ij + n delta``  (``i, j`` the finite pair)
    ``real_minus``: ``(delta - alpha_ij) + n delta``
    ``imaginary``:  ``n delta`` tagged by the simple root index ``i`` (1 or 2);
                    ``j`` is unused and set to 0, ``n >= 1``.
    """

    kind: str
    i: int
    j: int
    n: int

    def __post_init__(self):
        if self.kind == IMAG:
            if self.i not in (1, 2) or self.n < 1:
                raise ValueError("imaginary root needs tag 1|2 and n >= 1")
        elif self.kind in (PLUS, MINUS):
            if (self.i, self.j) not in PAIRS or self.n < 0:
                raise ValueError(f"bad real affine root {self}")
        else:
            raise ValueError(f"unknown root kind {self.kind!r}")

    @classmethod
    def plus(cls, i, j, n=0):
        return cls(PLUS, i, j, n)

    @classmethod
    def minus(cls, i, j, n=0):
        return cls(MINUS, i, j, n)

    @classmethod
    def imaginary(cls, n, tag):
        return cls(IMAG, tag, 0, n)

    @property
    def is_real(self) -> bool:
        return self.kind != IMAG

    @property
    def finite(self) -> FiniteRoot:
        if self.kind == IMAG:
            raise ValueError("imaginary root has no finite part")
        return FiniteRoot(self.i, self.j, negative=(self.kind == MINUS))

    @property
    def parity(self) -> Parity:
        if self.kind == IMAG:
            return 0
        return (INDEX_PARITY[self.i] + INDEX_PARITY[self.j]) % 2

    def lattice(self) -> Tuple[int, int, int]:
        n = self.n
        if self.kind == IMAG:
            return (n, n, n)
        a1, a2 = FiniteRoot(self.i, self.j).lattice()
        if self.kind == PLUS:
            return (n, a1 + n, a2 + n)
        return (n + 1, n + 1 - a1, n + 1 - a2)

    def finite_weight(self) -> Tuple[int, int]:
        """Weight after dropping ``delta``."""
        if self.kind == IMAG:
            return (0, 0)
        return self.finite.lattice()

    def __str__(self):
        if self.kind == IMAG:
            return f"{self.n}delta[alpha{self.i}]"
        base = f"alpha{self.i}{self.j}" if self.kind == PLUS else f"(delta-alpha{self.i}{self.j})"
        return base if self.n == 0 else f"{base}+{self.n}delta"


def enumerate_roots(max_n: int) -> Iterator[AffineRoot]:
    """All positive affine roots with ``n <= max_n`` (imaginary: ``1 <= n <= max_n``)."""
    for n in range(max_n + 1):
        for i, j in PAIRS:
            yield AffineRoot.plus(i, j, n)
            yield AffineRoot.minus(i, j, n)
        if n >= 1:
            yield AffineRoot.imaginary(n, 1)
            yield AffineRoot.imaginary(n, 2)


# ---------------------------------------------------------------------------
# bilinear form, parity
# ---------------------------------------------------------------------------

LatticeLike = Union[FiniteRoot, AffineRoot, Tuple[int, ...]]


def _as_affine(x: LatticeLike) -> Tuple[int, int, int]:
    if isinstance(x, AffineRoot):
        return x.lattice()
    if isinstance(x, FiniteRoot):
        a1, a2 = x.lattice()
        return (0, a1, a2)
    x = tuple(x)
    if len(x) == 2:
        return (0,) + x
    if len(x) == 3:
        return x
    raise ValueError(f"lattice vector of length {len(x)}")


def bilinear(g1: LatticeLike, g2: LatticeLike) -> int:
    """Symmetric invariant form; ``<delta|.> = 0``."""
    a, b = _as_affine(g1), _as_affine(g2)
    return sum(a[r] * CARTAN_AFFINE[r][c] * b[c] for r in range(3) for c in range(3))


def lattice_parity(v: LatticeLike) -> Parity:
    a = _as_affine(v)
    return sum(x * p for x, p in zip(a, SIMPLE_PARITY)) % 2


def sign_class(v: Tuple[int, ...]) -> int:
    """+1 for Q_+, -1 for Q_-, 0 otherwise (zero counts as mixed)."""
    if all(x == 0 for x in v):
        return 0
    if all(x >= 0 for x in v):
        return 1
    if all(x <= 0 for x in v):
        return -1
    return 0


def cartan_matrices():
    return {"A": CARTAN_A, "A_affine": CARTAN_AFFINE, "C": CARTAN_C}


# ---------------------------------------------------------------------------
# normal order
# ---------------------------------------------------------------------------

def _order_key(g: AffineRoot):
    if g.kind == PLUS:
        return (0, g.i, g.j, g.n)
    if g.kind == IMAG:
        return (1, g.n, g.i, 0)
    return (2, -g.i, g.j, -g.n)


def normal_order_cmp(g1: AffineRoot, g2: AffineRoot) -> int:
    """-1 if ``g1`` precedes ``g2``, 0 if equal, 1 if it follows."""
    if not isinstance(g1, AffineRoot) or not isinstance(g2, AffineRoot):
        raise TypeError("normal_order_cmp takes positive AffineRoot values")
    k1, k2 = _order_key(g1), _order_key(g2)
    return (k1 > k2) - (k1 < k2)


def root_from_lattice(v: Tuple[int, int, int]):
    """Positive real or imaginary root with lattice vector ``v`` (imaginary: tag 1), or None."""
    a0, a1, a2 = v
    if a0 < 0:
        return None
    if a0 == a1 == a2 and a0 >= 1:
        return AffineRoot.imaginary(a0, 1)
    for i, j in PAIRS:
        for kind in (PLUS, MINUS):
            r = AffineRoot(kind, i, j, 0)
            base = r.lattice()
            n = a0 - base[0]
            if n >= 0 and (base[1] + n, base[2] + n) == (a1, a2):
                return AffineRoot(kind, i, j, n)
    return None


# ---------------------------------------------------------------------------
# R-matrix constants and spectral degrees
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RootConstants:
    a: int
    q_gamma: QRat
    parity: Parity


def root_constants(g: AffineRoot) -> RootConstants:
    if g.kind == IMAG:
        raise ValueError("a_gamma is undefined for imaginary roots")
    a = (-1) ** g.n if g.kind == PLUS else -((-1) ** g.n)
    norm = bilinear(g, g)
    qg = q_pow(norm) * (-1 if g.parity else 1)
    return RootConstants(a=a, q_gamma=qg, parity=g.parity)


def s_pair(i: int, j: int, s: Tuple[int, int, int]) -> int:
    """``s_ij``: ``s_12 = s_1``, ``s_23 = s_2``, ``s_13 = s_1 + s_2``."""
    return sum(s[k] for k in range(i, j))


def check_spectral(s) -> Tuple[int, int, int]:
    s = tuple(int(x) for x in s)
    if len(s) != 3:
        raise ValueError("spectral weights need three integers (s0, s1, s2)")
    if sum(s) == 0:
        raise ValueError("spectral weights must have nonzero sum")
    return s


def spectral_degree(g: AffineRoot, s) -> int:
    s = check_spectral(s)
    total = sum(s)
    if g.kind == IMAG:
        return g.n * total
    sij = s_pair(g.i, g.j, s)
    if g.kind == PLUS:
        return sij + g.n * total
    return total - sij + g.n * total
