"""The defining representation, graded matrices and graded tensor operators.

Index parities are ``[1] = [2] = 0`` and ``[3] = 1``.  A tensor operator has
an optional coefficient leg (leg 0, an algebra element, series or scalar)
followed by one or more matrix-unit legs, and multiplies with Koszul signs.
"""

from __future__ import annotations

from functools import lru_cache

from .pbw import SLOT_PAIRS, AlgebraElement, PBWMonomial, qsupercommutator
from .rootdata import INDEX_PARITY
from .scalars import ONE, ZERO, QRat, kappa, q_bracket, q_pow

IDX = (1, 2, 3)


def _zero_like(c):
    return c * 0 if not isinstance(c, QRat) else ZERO


def _is_zero(c) -> bool:
    if isinstance(c, QRat):
        return c.num == 0
    if hasattr(c, "is_zero"):
        return c.is_zero()
    return not c


def unit_parity(i: int, j: int) -> int:
    return (INDEX_PARITY[i] + INDEX_PARITY[j]) % 2


class GradedMatrix:
    """3x3 matrix stored sparsely as ``{(i, j): entry}`` with 1-based indices."""

    __slots__ = ("entries",)

    def __init__(self, entries=None):
        entries = entries or {}
        self.entries = {k: v for k, v in entries.items() if not _is_zero(v)}

    @classmethod
    def unit(cls, i, j, c=ONE):
        return cls({(i, j): c})

    @classmethod
    def identity(cls):
        return cls({(i, i): ONE for i in IDX})

    @classmethod
    def diag(cls, values):
        return cls({(i, i): QRat.coerce(v) for i, v in zip(IDX, values)})

    def __getitem__(self, ij):
        return self.entries.get(ij, ZERO)

    def __add__(self, other):
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out[k] + v if k in out else v
        return GradedMatrix(out)

    def __neg__(self):
        return GradedMatrix({k: -v for k, v in self.entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, GradedMatrix):
            out = {}
            for (i, j), a in self.entries.items():
                for (k, l), b in other.entries.items():
                    if j == k:
                        out[(i, l)] = out[(i, l)] + a * b if (i, l) in out else a * b
            return GradedMatrix(out)
        return GradedMatrix({k: v * other for k, v in self.entries.items()})

    def __rmul__(self, c):
        return GradedMatrix({k: c * v for k, v in self.entries.items()})

    def __pow__(self, n):
        out = GradedMatrix.identity()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        return self.entries == other.entries

    __hash__ = None

    def is_zero(self):
        return not self.entries

    def parity(self) -> int:
        ps = {unit_parity(i, j) for (i, j) in self.entries}
        if len(ps) > 1:
            raise ValueError("matrix is not homogeneous")
        return ps.pop() if ps else 0

    def supertrace(self):
        out = ZERO
        for i in IDX:
            v = self.entries.get((i, i))
            if v is not None:
                out = out - v if INDEX_PARITY[i] else out + v
        return out

    def rows(self):
        return [[self[(i, j)] for j in IDX] for i in IDX]

    def __repr__(self):
        return "GradedMatrix(" + repr({k: str(v) for k, v in sorted(self.entries.items())}) + ")"


def supertrace(m: GradedMatrix):
    return m.supertrace()


# ---------------------------------------------------------------------------
# pi = pi^{(1,0,0)}
# ---------------------------------------------------------------------------

# E_ij -> M_ij, F_ij -> M_ji
_E_UNITS = tuple(SLOT_PAIRS)
_F_UNITS = tuple((j, i) for i, j in SLOT_PAIRS)


@lru_cache(maxsize=None)
def _pi_monomial(m: PBWMonomial) -> GradedMatrix:
    out = GradedMatrix.identity()
    for slot, n in enumerate(m.f):
        for _ in range(n):
            out = out * GradedMatrix.unit(*_F_UNITS[slot])
    if any(m.k):
        out = out * GradedMatrix.diag([q_pow(x) for x in m.k])
    for slot, n in enumerate(m.e):
        for _ in range(n):
            out = out * GradedMatrix.unit(*_E_UNITS[slot])
    return out


def pi(x: AlgebraElement) -> GradedMatrix:
    """Defining representation: ``E_ij -> M_ij``, ``F_ij -> M_ji``, ``q^{lam K} -> diag(q^lam)``."""
    out = GradedMatrix()
    for m, c in x.terms.items():
        img = _pi_monomial(m)
        if img.entries:
            out = out + c * img
    return out


def pi_qK(lam) -> GradedMatrix:
    return GradedMatrix.diag([q_pow(x) for x in lam])


# ---------------------------------------------------------------------------
# graded tensor operators
# ---------------------------------------------------------------------------

def parity_split(c):
    """``[(parity, part), ...]`` for a coefficient; scalars are even."""
    if hasattr(c, "parity_parts"):
        even, odd = c.parity_parts()
        return [(p, v) for p, v in ((0, even), (1, odd)) if not _is_zero(v)]
    return [(0, c)]


class GradedTensorOperator:
    """``sum coeff (x) M_{i1 j1} (x) ... (x) M_{iL jL}``.

    ``terms`` maps a tuple of ``L`` index pairs to the coefficient on leg 0.
    Coefficients may be any ring elements supporting ``+`` and ``*``;
    for algebra-valued coefficients Koszul signs use their parity parts.
    """

    __slots__ = ("legs", "terms")

    def __init__(self, legs: int, terms=None):
        self.legs = legs
        terms = terms or {}
        for key in terms:
            if len(key) != legs:
                raise ValueError(f"term {key} does not have {legs} legs")
        self.terms = {k: v for k, v in terms.items() if not _is_zero(v)}

    @classmethod
    def identity(cls, legs: int, one=ONE):
        out = {}
        for idx in _all_diag(legs):
            out[idx] = one
        return cls(legs, out)

    @classmethod
    def from_matrix(cls, m: GradedMatrix):
        return cls(1, {((i, j),): v for (i, j), v in m.entries.items()})

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return GradedTensorOperator(self.legs, out)

    def __neg__(self):
        return GradedTensorOperator(self.legs, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return GradedTensorOperator(self.legs, {k: c * v for k, v in self.terms.items()})

    def map(self, fn):
        return GradedTensorOperator(self.legs, {k: fn(v) for k, v in self.terms.items()})

    def _check(self, other):
        if not isinstance(other, GradedTensorOperator) or other.legs != self.legs:
            raise ValueError("tensor operators have different leg structure")

    def __mul__(self, other):
        if not isinstance(other, GradedTensorOperator):
            return self.scale_right(other)
        self._check(other)
        L = self.legs
        out = {}
        split_cache = {}
        for k1, a in self.terms.items():
            xpar = [unit_parity(*ij) for ij in k1]
            # suffix sums: parity of first-factor matrix legs strictly after leg t
            after = [0] * (L + 1)
            for t in range(L - 1, -1, -1):
                after[t] = after[t + 1] + xpar[t]
            for k2, b in other.terms.items():
                if any(k1[t][1] != k2[t][0] for t in range(L)):
                    continue
                key = tuple((k1[t][0], k2[t][1]) for t in range(L))
                sign = 0
                for t in range(L):
                    if unit_parity(*k2[t]):
                        sign += after[t + 1]
                parts = split_cache.get(k2)
                if parts is None:
                    parts = split_cache[k2] = parity_split(b)
                for pb, bpart in parts:
                    s = sign + pb * after[0]
                    prod = a * bpart
                    if s % 2:
                        prod = -prod
                    out[key] = out[key] + prod if key in out else prod
        return GradedTensorOperator(L, out)

    def scale_right(self, c):
        return GradedTensorOperator(self.legs, {k: v * c for k, v in self.terms.items()})

    def __pow__(self, n):
        if n < 1:
            raise ValueError("use positive powers")
        out = self
        for _ in range(n - 1):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, GradedTensorOperator):
            return NotImplemented
        return self.legs == other.legs and self.terms == other.terms

    __hash__ = None

    def is_zero(self):
        return not self.terms

    def entry(self, *pairs):
        return self.terms.get(tuple(pairs))

    def first_difference(self, other):
        """First key where two operators differ, with both values, or None."""
        keys = sorted(set(self.terms) | set(other.terms))
        for k in keys:
            a, b = self.terms.get(k), other.terms.get(k)
            if a is None or b is None or not (a == b):
                return k, a, b
        return None


def _all_diag(legs):
    if legs == 0:
        yield ()
        return
    for rest in _all_diag(legs - 1):
        for i in IDX:
            yield rest + ((i, i),)


def embed(op: GradedTensorOperator, positions, total: int) -> GradedTensorOperator:
    """Place the matrix legs of ``op`` at ``positions`` (0-based) among ``total`` legs.

    Legs not named are identities.  The coefficient leg stays in front, and
    the embedding of matrix legs carries no sign because identity legs are even.
    """
    out = {}
    others = [p for p in range(total) if p not in positions]
    for key, v in op.terms.items():
        for fill in _all_diag(len(others)):
            new = [None] * total
            for p, ij in zip(positions, key):
                new[p] = ij
            for p, ij in zip(others, fill):
                new[p] = ij
            new = tuple(new)
            out[new] = out[new] + v if new in out else v
    return GradedTensorOperator(total, out)


def matrix_tensor(a: GradedMatrix, b: GradedMatrix) -> GradedTensorOperator:
    """``a (x) b`` as a two-leg operator with scalar coefficient."""
    out = {}
    for ij, x in a.entries.items():
        for kl, y in b.entries.items():
            out[(ij, kl)] = x * y
    return GradedTensorOperator(2, out)


def graded_matmul(A: GradedTensorOperator, B: GradedTensorOperator) -> GradedTensorOperator:
    return A * B


def sigma_swap(x, y):
    """Graded swap of an elementary tensor ``x (x) y``: returns ``(sign, y, x)``."""
    px = x.parity() if hasattr(x, "parity") else 0
    py = y.parity() if hasattr(y, "parity") else 0
    return (-1 if px * py % 2 else 1), y, x


def partial_supertrace(X: GradedTensorOperator, weight: GradedMatrix = None):
    """``sum_i (-1)^[i] (X (1 (x) weight))_ii`` over the single matrix leg."""
    if X.legs != 1:
        raise ValueError("partial supertrace needs exactly one matrix leg")
    if weight is not None:
        X = X * GradedTensorOperator.from_matrix(weight)
    out = None
    for ((i, j),), v in X.terms.items():
        if i != j:
            continue
        term = -v if INDEX_PARITY[i] else v
        out = term if out is None else out + term
    return AlgebraElement() if out is None else out


# ---------------------------------------------------------------------------
# evaluation representation phi = pi o epsilon and the f-type root vectors
# ---------------------------------------------------------------------------

M = GradedMatrix.unit

_GENERATOR_IMAGES = {
    "e0": lambda: q_pow(1) * M(3, 1) * -1,
    "e1": lambda: M(1, 2),
    "e2": lambda: M(2, 3),
    "f0": lambda: q_pow(-1) * M(1, 3),
    "f1": lambda: M(2, 1),
    "f2": lambda: M(3, 2),
}


def _f_weight(root):
    """Lattice weight of ``f_root`` (the negative of the root)."""
    return tuple(-x for x in root.lattice())


def _phi_f_recursive_all(n_max: int):
    """phi-images of all f-type root vectors up to ``n_max`` by the defining recursions."""
    from .rootdata import AffineRoot as R

    def qsc(x, y, rx, ry):
        return qsupercommutator(x, y, _f_weight(rx), _f_weight(ry), rx.parity, ry.parity)

    f = {}
    f[R.plus(1, 2)] = phi_generator("f1")
    f[R.plus(2, 3)] = phi_generator("f2")
    f[R.minus(1, 3)] = phi_generator("f0")
    f[R.plus(1, 3)] = qsc(f[R.plus(2, 3)], f[R.plus(1, 2)], R.plus(2, 3), R.plus(1, 2))
    f[R.minus(1, 2)] = qsc(f[R.minus(1, 3)], f[R.plus(2, 3)], R.minus(1, 3), R.plus(2, 3))
    f[R.minus(2, 3)] = qsc(f[R.minus(1, 3)], f[R.plus(1, 2)], R.minus(1, 3), R.plus(1, 2))
    fp = {}
    fp[(1, 1)] = qsc(f[R.minus(1, 2)], f[R.plus(1, 2)], R.minus(1, 2), R.plus(1, 2))
    fp[(1, 2)] = -qsc(f[R.minus(2, 3)], f[R.plus(2, 3)], R.minus(2, 3), R.plus(2, 3))
    inv2 = q_bracket(2).inverse()
    d1, d2 = R.imaginary(1, 1), R.imaginary(1, 2)
    for n in range(1, n_max + 1):
        p = {k: R.plus(*k, n - 1) for k in ((1, 2), (1, 3), (2, 3))}
        m = {k: R.minus(*k, n - 1) for k in ((1, 2), (1, 3), (2, 3))}
        f[R.plus(1, 2, n)] = inv2 * qsc(fp[(1, 1)], f[p[(1, 2)]], d1, p[(1, 2)])
        f[R.plus(1, 3, n)] = qsc(fp[(1, 2)], f[p[(1, 3)]], d2, p[(1, 3)])
        f[R.plus(2, 3, n)] = -qsc(fp[(1, 1)], f[p[(2, 3)]], d1, p[(2, 3)])
        f[R.minus(1, 2, n)] = inv2 * qsc(f[m[(1, 2)]], fp[(1, 1)], m[(1, 2)], d1)
        f[R.minus(1, 3, n)] = qsc(f[m[(1, 3)]], fp[(1, 2)], m[(1, 3)], d2)
        f[R.minus(2, 3, n)] = -qsc(f[m[(2, 3)]], fp[(1, 1)], m[(2, 3)], d1)
        if n >= 2:
            fp[(n, 1)] = qsc(f[R.minus(1, 2)], f[R.plus(1, 2, n - 1)], R.minus(1, 2), R.plus(1, 2, n - 1))
            # the leading sign of the n = 1 definition is kept for all n
            fp[(n, 2)] = -qsc(f[R.minus(2, 3)], f[R.plus(2, 3, n - 1)], R.minus(2, 3), R.plus(2, 3, n - 1))
    # unprimed: kappa f(x) = log(1 + kappa f'(x)); the images are diagonal and commute
    funp = {}
    k = kappa()
    for tag in (1, 2):
        x = [GradedMatrix()] + [k * fp[(n, tag)] for n in range(1, n_max + 1)]
        logged = _matrix_log(x, n_max)
        for n in range(1, n_max + 1):
            funp[(n, tag)] = k.inverse() * logged[n]
    return f, fp, funp


def _matrix_log(x_series, n_max):
    """log(1 + x) for a matrix-coefficient series ``x`` with zero constant term."""
    out = [GradedMatrix() for _ in range(n_max + 1)]
    power = [GradedMatrix.identity()] + [GradedMatrix() for _ in range(n_max)]
    for k in range(1, n_max + 1):
        nxt = [GradedMatrix() for _ in range(n_max + 1)]
        for a in range(n_max + 1):
            if power[a].is_zero():
                continue
            for b in range(1, n_max + 1 - a):
                if x_series[b].is_zero():
                    continue
                nxt[a + b] = nxt[a + b] + power[a] * x_series[b]
        power = nxt
        c = QRat.coerce(1 if k % 2 else -1) / k
        for n in range(n_max + 1):
            if not power[n].is_zero():
                out[n] = out[n] + c * power[n]
    return out


def phi_generator(tag: str) -> GradedMatrix:
    try:
        return _GENERATOR_IMAGES[tag]()
    except KeyError:
        raise KeyError(f"unknown loop generator {tag!r}") from None


def phi_f_table(root) -> GradedMatrix:
    """Closed-form image of an f-type root vector.

    ``root`` is an :class:`AffineRoot`; imaginary roots select the unprimed
    ``f_{n delta, alpha_i}`` family.
    """
    from .rootdata import IMAG, PLUS

    n = root.n
    sgn = -1 if n % 2 else 1
    if root.kind == IMAG:
        c = QRat.coerce(-sgn) * q_bracket(n) / n
        if root.i == 1:
            return (c * q_pow(-n)) * (M(1, 1) - q_pow(-2 * n) * M(2, 2))
        return (c * q_pow(-2 * n)) * (M(2, 2) + M(3, 3))
    pair = (root.i, root.j)
    if root.kind == PLUS:
        coeff, unit = {
            (1, 2): (sgn * q_pow(-2 * n), (2, 1)),
            (1, 3): (q_pow(-2 * n), (3, 1)),
            (2, 3): (sgn * q_pow(-3 * n), (3, 2)),
        }[pair]
    else:
        coeff, unit = {
            (1, 2): (sgn * q_pow(-2 * n - 1), (1, 2)),
            (1, 3): (q_pow(-2 * n - 1), (1, 3)),
            (2, 3): (-sgn * q_pow(-3 * n - 2), (2, 3)),
        }[pair]
    return coeff * M(*unit)


@lru_cache(maxsize=8)
def phi_f_recursive(n_max: int):
    return _phi_f_recursive_all(n_max)


def phi_image(x, n_max: int = 4, check: bool = True) -> GradedMatrix:
    """phi-image of a loop generator tag (``"e0"`` ... ``"f2"``) or an f-type root.

    For roots the closed form is returned; with ``check`` it is first compared
    with the recursive construction and a mismatch raises ``ArithmeticError``.
    """
    if isinstance(x, str):
        return phi_generator(x)
    table = phi_f_table(x)
    if check:
        f, _, funp = phi_f_recursive(max(n_max, x.n))
        rec = funp[(x.n, x.i)] if not x.is_real else f[x]
        if rec != table:
            raise ArithmeticError(f"phi-image of f[{x}] disagrees with the recursion")
    return table


# ---------------------------------------------------------------------------
# verification suites
# ---------------------------------------------------------------------------

_GEN_WEIGHT = {"E1": ((1, 0), 0), "E2": ((0, 1), 1), "F1": ((-1, 0), 0), "F2": ((0, -1), 1)}
# alpha_j(K_i): E1 carries eps_1 - eps_2, E2 carries eps_2 - eps_3
_ALPHA = {"1": (1, -1, 0), "2": (0, 1, -1)}


def defining_relations(gens, qk, one):
    """``[(name, lhs, rhs)]`` for the finite defining relations in any realization.

    ``gens`` maps ``E1, E2, F1, F2`` to ring elements, ``qk(lam)`` returns the
    image of ``q^{lam K}`` and ``one`` the unit.  The ``K_i`` relations are
    imposed in exponentiated form.
    """
    def br(a, b):
        (wa, pa), (wb, pb) = _GEN_WEIGHT[a], _GEN_WEIGHT[b]
        return qsupercommutator(gens[a], gens[b], wa, wb, pa, pb)

    def br_nested(a, b, c):
        wa, pa = _GEN_WEIGHT[a]
        wb, pb = _GEN_WEIGHT[b]
        wc, pc = _GEN_WEIGHT[c]
        inner = qsupercommutator(gens[b], gens[c], wb, wc, pb, pc)
        w = tuple(x + y for x, y in zip(wb, wc))
        return qsupercommutator(gens[a], inner, wa, w, pa, (pb + pc) % 2)

    zero = one - one
    out = []
    for i in range(3):
        for j in range(3):
            li = tuple(int(k == i) for k in range(3))
            lj = tuple(int(k == j) for k in range(3))
            out.append((f"[K{i + 1},K{j + 1}]", qk(li) * qk(lj), qk(lj) * qk(li)))
    for i in range(3):
        li = tuple(int(k == i) for k in range(3))
        lneg = tuple(-x for x in li)
        for j in ("1", "2"):
            a = _ALPHA[j][i]
            out.append((f"[K{i + 1},E{j}]", qk(li) * gens["E" + j] * qk(lneg), q_pow(a) * gens["E" + j]))
            out.append((f"[K{i + 1},F{j}]", qk(li) * gens["F" + j] * qk(lneg), q_pow(-a) * gens["F" + j]))
    h = {"1": (1, -1, 0), "2": (0, 1, 1)}
    kinv = kappa().inverse()
    for i in ("1", "2"):
        for j in ("1", "2"):
            if i == j:
                rhs = (qk(h[i]) - qk(tuple(-x for x in h[i]))) * kinv
            else:
                rhs = zero
            out.append((f"[E{i},F{j}]", br("E" + i, "F" + j), rhs))
    out.append(("[E2,E2]", br("E2", "E2"), zero))
    out.append(("[F2,F2]", br("F2", "F2"), zero))
    out.append(("[E1,[E1,E2]]", br_nested("E1", "E1", "E2"), zero))
    out.append(("[F1,[F1,F2]]", br_nested("F1", "F1", "F2"), zero))
    return out


def verify_defining_relations():
    """Each finite relation in the PBW engine and in the defining representation."""
    from .pbw import E, F, ONE_ELT, qK
    from .report import failed, passed

    alg = {"E1": E(1, 2), "E2": E(2, 3), "F1": F(1, 2), "F2": F(2, 3)}
    mat = {k: pi(v) for k, v in alg.items()}
    pbw_rel = defining_relations(alg, lambda lam: qK(tuple(lam)), ONE_ELT)
    mat_rel = defining_relations(mat, pi_qK, GradedMatrix.identity())
    reports = []
    for (name, l1, r1), (_, l2, r2) in zip(pbw_rel, mat_rel):
        anchor = f"defining relation {name}"
        if l1 != r1:
            reports.append(failed(f"defining-relations:{name}", f"PBW residual {l1 - r1}", anchor))
        elif l2 != r2:
            reports.append(failed(f"defining-relations:{name}", f"pi residual {(l2 - r2).entries}", anchor))
        else:
            reports.append(passed(f"defining-relations:{name}", anchor))
    return reports


def verify_pi_rules():
    """``pi`` respects every straightening rule: ``pi(a b) = pi(a) pi(b)`` on letter pairs."""
    from .pbw import E, F, qK
    from .report import failed, passed

    letters = [(f"E{i}{j}", E(i, j)) for i, j in SLOT_PAIRS]
    letters += [(f"F{i}{j}", F(i, j)) for i, j in SLOT_PAIRS]
    letters += [("q^K1", qK(1, 0, 0)), ("q^K3", qK(0, 0, 1))]
    for na, a in letters:
        for nb, b in letters:
            if pi(a * b) != pi(a) * pi(b):
                return failed("pi-rules", f"pi({na} {nb}) != pi({na}) pi({nb})", "pi homomorphism")
    return passed("pi-rules", "pi homomorphism")


def verify_f_image_table(n_max: int = 4):
    """Recursion-built images of f-type root vectors against the closed forms."""
    import time

    from .report import failed, passed
    from .rootdata import AffineRoot

    t0 = time.perf_counter()
    f, _, funp = _phi_f_recursive_all(n_max)
    reports = []
    families = [("plus", i, j) for i, j in SLOT_PAIRS] + [("minus", i, j) for i, j in SLOT_PAIRS]
    for kind, i, j in families:
        bad = None
        for n in range(n_max + 1):
            root = AffineRoot.plus(i, j, n) if kind == "plus" else AffineRoot.minus(i, j, n)
            if f[root] != phi_f_table(root):
                bad = f"n={n}: recursion {f[root].entries} table {phi_f_table(root).entries}"
                break
        name = f"f-image-table:{'' if kind == 'plus' else 'delta-'}alpha{i}{j}"
        anchor = "phi-images of f root vectors"
        reports.append(failed(name, bad, anchor, n_max) if bad else passed(name, anchor, n_max))
    for tag in (1, 2):
        bad = None
        for n in range(1, n_max + 1):
            root = AffineRoot.imaginary(n, tag)
            if funp[(n, tag)] != phi_f_table(root):
                bad = f"n={n}: recursion {funp[(n, tag)].entries} table {phi_f_table(root).entries}"
                break
        name = f"f-image-table:delta-alpha{tag}"
        anchor = "phi-images of imaginary f root vectors"
        reports.append(failed(name, bad, anchor, n_max) if bad else passed(name, anchor, n_max))
    elapsed = (time.perf_counter() - t0) * 1e3
    for r in reports:
        r.elapsed_ms = elapsed / len(reports)
    return reports
