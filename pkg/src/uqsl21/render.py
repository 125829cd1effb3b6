"""Plain-text and LaTeX rendering of algebra elements and matrices."""

from __future__ import annotations

from .scalars import QRat

_NAMES = ("12", "13", "23")


def _cartan_text(k, latex=False):
    if not any(k):
        return ""
    parts = []
    for idx, c in enumerate(k, start=1):
        if c == 0:
            continue
        if c == 1:
            parts.append(f"K{idx}" if not latex else f"K_{idx}")
        elif c == -1:
            parts.append(f"-K{idx}" if not latex else f"-K_{idx}")
        else:
            parts.append(f"{c}K{idx}" if not latex else f"{c}K_{idx}")
    body = "+".join(parts).replace("+-", "-")
    return f"q^({body})" if not latex else f"q^{{{body}}}"


def _block_text(letter, exps, latex=False):
    out = []
    for name, n in zip(_NAMES, exps):
        if n == 0:
            continue
        base = f"{letter}{name}" if not latex else f"{letter}_{{{name}}}"
        if n > 1:
            base += f"^{n}" if not latex else f"^{{{n}}}"
        out.append(base)
    return out


def monomial_text(m, latex=False) -> str:
    parts = _block_text("F", m.f, latex)
    c = _cartan_text(m.k, latex)
    if c:
        parts.append(c)
    parts += _block_text("E", m.e, latex)
    return ("*" if not latex else " ").join(parts)


def _coeff_text(c: QRat, latex=False) -> str:
    s = c.latex() if latex else str(c)
    if c.den.degree() > 0 or len([x for x in c.num.coeffs() if x]) > 1:
        return f"({s})" if not latex else f"\\left({s}\\right)"
    return s


def element_text(x, latex=False) -> str:
    if not x.terms:
        return "0"
    pieces = []
    for m, c in x.sorted_terms():
        mono = monomial_text(m, latex)
        if not mono:
            pieces.append(_coeff_text(c, latex))
        elif c.is_one():
            pieces.append(mono)
        elif (-c).is_one():
            pieces.append("-" + mono)
        else:
            pieces.append(_coeff_text(c, latex) + ("*" if not latex else " ") + mono)
    out = " + ".join(pieces)
    return out.replace("+ -", "- ")


def element_latex(x) -> str:
    return element_text(x, latex=True)


def matrix_text(entries, fmt=str, latex=False) -> str:
    """Render a 3x3 list-of-lists; zero entries are shown as 0."""
    rows = [[fmt(e) for e in row] for row in entries]
    if latex:
        body = " \\\\\n".join(" & ".join(r) for r in rows)
        return "\\begin{pmatrix}\n" + body + "\n\\end{pmatrix}"
    width = max(len(s) for r in rows for s in r)
    return "\n".join("[ " + "  ".join(s.ljust(width) for s in r) + " ]" for r in rows)
