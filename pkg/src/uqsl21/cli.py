"""Command-line front end: ``uqsl21 verify`` and ``uqsl21 render``."""

from __future__ import annotations

import argparse
import ast
import json
import operator
import sys
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from . import central, jimbo, monodromy, reps
from .pbw import AlgebraElement, E, F, qK
from .render import element_text, matrix_text
from .report import FAIL, CheckReport, failed, passed
from .rootdata import AffineRoot, check_spectral
from .scalars import QRat, kappa, q_bracket, q_pow


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    truncation: int = 4
    spectral: Tuple[int, int, int] = (1, 1, 1)
    checks: List[str] = field(default_factory=lambda: ["all"])
    format: str = "text"
    output: Optional[str] = None

    def __post_init__(self):
        if self.truncation < 1:
            raise ConfigError("truncation must be at least 1")
        try:
            self.spectral = check_spectral(self.spectral)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        if self.format not in ("text", "json", "latex"):
            raise ConfigError(f"unknown format {self.format!r}")
        unknown = [c for c in self.checks if c != "all" and c not in SUITES]
        if unknown:
            raise ConfigError(f"unknown suite(s): {', '.join(unknown)}")


def _printed_variants(cfg: RunConfig) -> List[CheckReport]:
    """Printed forms that disagree with the computed objects; every report is expected to fail."""
    out = []
    for name, residual in jimbo.printed_form_refutations(cfg.truncation):
        key = "printed-variants:" + name.replace(" ", "-")
        out.append(failed(key, residual, name, cfg.truncation) if residual else passed(key, name, cfg.truncation))
    r = monodromy.verify_exchange(min(cfg.truncation, 3), cfg.spectral, printed_cartan=True)
    r.name = "printed-variants:O-cartan-exponent"
    out.append(r)
    S, Sd = monodromy.build_S(), monodromy.build_S_display()
    d = S.first_difference(Sd)
    out.append(passed("printed-variants:S-display", "S(zeta) matrix display") if d is None else
               failed("printed-variants:S-display", f"entry {d[0]}: (pi x id)(O) {d[1]} printed {d[2]}",
                      "S(zeta) matrix display"))
    for r in central.verify_m_routes():
        if "sigma" in r.name:
            r.name = "printed-variants:M-sigma-display"
            out.append(r)
    return out


def _partial_trace(cfg):
    return central.verify_c_central(2) + [r for r in central.verify_m_routes() if "sigma" not in r.name]


SUITES: Dict[str, Callable[[RunConfig], List[CheckReport]]] = {
    "defining-relations": lambda c: reps.verify_defining_relations() + [reps.verify_pi_rules()],
    "jimbo-homomorphism": lambda c: jimbo.verify_loop_relations(),
    "phi-central": lambda c: jimbo.verify_phi_central(c.truncation) + [jimbo.verify_phi1_display()],
    "phi-eigenvalues": lambda c: jimbo.verify_phi_eigenvalues(c.truncation),
    "gen-series-recurrences": lambda c: jimbo.verify_recurrences(c.truncation),
    "ybe": lambda c: [monodromy.verify_ybe(c.spectral)],
    "exchange": lambda c: [monodromy.verify_exchange(min(c.truncation, 3), c.spectral)],
    "factorization": lambda c: monodromy.verify_factorization(c.truncation, c.spectral)
    + [monodromy.verify_uvw_product(c.truncation)],
    "f-image-table": lambda c: reps.verify_f_image_table(c.truncation),
    "phi-ctilde": lambda c: central.verify_phi_ctilde(min(c.truncation, 4), c.truncation),
    "s-square-twist": lambda c: [central.verify_s_square_twist()],
    "partial-trace": _partial_trace,
    "monodromy-invariants": lambda c: monodromy.verify_invariants(c.truncation),
    "printed-variants": _printed_variants,
}
# suites run by "all"; printed-variants documents known misprints and is opt-in
DEFAULT_SUITES = [s for s in SUITES if s != "printed-variants"]


def run(config: RunConfig) -> List[CheckReport]:
    names = DEFAULT_SUITES if "all" in config.checks else list(dict.fromkeys(config.checks))
    reports = []
    for name in names:
        reports.extend(SUITES[name](config))
    return reports


def format_reports(reports: List[CheckReport], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True)
    if fmt == "latex":
        rows = [f"\\texttt{{{r.name}}} & {r.status} & {r.truncation if r.truncation is not None else '--'} \\\\"
                for r in reports]
        return "\\begin{tabular}{lll}\n" + "\n".join(rows) + "\n\\end{tabular}"
    lines = [r.line() for r in reports]
    nfail = sum(r.status == FAIL for r in reports)
    lines.append(f"{len(reports) - nfail} passed, {nfail} failed")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def _spectral_text(sp, latex=False) -> str:
    if sp.is_zero():
        return "0"
    pieces = []
    for a, c in sorted(sp.terms.items()):
        body = element_text(c, latex) if isinstance(c, AlgebraElement) else (c.latex() if latex else str(c))
        if any(a):
            exp = "+".join(f"{'' if x == 1 else x}s{k}" for k, x in enumerate(a) if x).replace("+-", "-")
            z = f"\\zeta^{{{exp}}}" if latex else f"zeta^({exp})"
            body = f"({body}) {z}" if latex else f"({body})*{z}"
        pieces.append(body)
    return " + ".join(pieces)


def _operator_matrix(op, latex=False) -> str:
    ents = [[op.terms.get(((i, j),)) for j in (1, 2, 3)] for i in (1, 2, 3)]

    def fmt(x):
        if x is None:
            return "0"
        if isinstance(x, AlgebraElement):
            return element_text(x, latex)
        return _spectral_text(x, latex)
    return matrix_text(ents, fmt, latex)


def _two_leg_text(op, latex=False) -> str:
    lines = []
    for key in sorted(op.terms):
        (a, b), (c, d) = key
        unit = f"M_{{{a}{b}}} \\otimes M_{{{c}{d}}}" if latex else f"M{a}{b} (x) M{c}{d}"
        lines.append(f"{unit}: {_spectral_text(op.terms[key], latex)}")
    return "\n".join(lines)


def _parse_alpha(tok: str) -> Tuple[int, ...]:
    if not tok.startswith("alpha"):
        raise KeyError(tok)
    return tuple(int(ch) for ch in tok[5:])


def render_object(expr_id: str, truncation: int = 4):
    """Resolve an expression id to an algebra element or an operator."""
    parts = expr_id.split(":")
    head = parts[0]
    try:
        if head == "Phi":
            n = int(parts[1])
            return jimbo.default_cache(max(truncation, n)).phi_coefficient(n)
        if head in ("C", "Ctilde"):
            n = int(parts[1])
            return central.c_n(n) if head == "C" else central.ctilde_n(n)
        if head == "eps":
            kind, n = parts[1], int(parts[2])
            cache = jimbo.default_cache(max(truncation, n))
            idx = _parse_alpha(parts[3]) if len(parts) > 3 else ()
            if kind == "e'" and len(idx) == 1:
                return cache.primed(n, idx[0])
            if kind == "e" and len(idx) == 1:
                return cache.unprimed(n, idx[0])
            if kind in ("plus", "minus") and len(idx) == 2:
                root = AffineRoot.plus(*idx, n) if kind == "plus" else AffineRoot.minus(*idx, n)
                return cache.root_vector(root)
            raise KeyError(expr_id)
        if len(parts) == 1:
            return {
                "D": monodromy.build_D,
                "O-matrix": monodromy.build_O,
                "R-matrix": lambda: monodromy.build_R()[0],
                "S-matrix": monodromy.build_S,
                "K-matrix": monodromy.build_K,
                "M": lambda: central.build_M_universal().M,
                "M-sigma": lambda: central.build_M_universal().M_sigma,
            }[head]()
    except (KeyError, IndexError, ValueError):
        pass
    raise KeyError(f"unknown expression id {expr_id!r}")


def render(expr_id: str, fmt: str = "text", truncation: int = 4) -> str:
    obj = render_object(expr_id, truncation)
    latex = fmt == "latex"
    if isinstance(obj, AlgebraElement):
        if fmt == "json":
            return json.dumps({"id": expr_id, "value": element_text(obj)})
        return element_text(obj, latex)
    if obj.legs == 1:
        body = _operator_matrix(obj, latex)
    else:
        body = _two_leg_text(obj, latex)
    if expr_id == "R-matrix":
        note = "numerator; R = numerator / (1 - q^2 zeta^s)"
        body = f"% {note}\n{body}" if latex else f"# {note}\n{body}"
    if fmt == "json":
        return json.dumps({"id": expr_id, "value": body})
    return body


# ---------------------------------------------------------------------------
# transcription comparison
# ---------------------------------------------------------------------------

_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul,
           ast.Div: operator.truediv, ast.Pow: operator.pow}


def _names():
    env = {f"E{i}{j}": E(i, j) for i, j in ((1, 2), (1, 3), (2, 3))}
    env.update({f"F{i}{j}": F(i, j) for i, j in ((1, 2), (1, 3), (2, 3))})
    env.update(E1=E(1, 2), E2=E(2, 3), F1=F(1, 2), F2=F(2, 3), q=q_pow(1), kappa=kappa())
    return env


def parse_expression(text: str) -> AlgebraElement:
    """Evaluate a transcription such as ``-kappa*F12*E12*qK(1,1,0) + q**2``.

    Allowed: integers, ``q``, ``kappa``, ``E..``/``F..`` generators,
    ``qK(a, b, c)``, ``br(n)`` for ``[n]_q``, and ``+ - * / **``.
    """
    env = _names()

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return QRat.coerce(node.value)
        if isinstance(node, ast.Name) and node.id in env:
            return env[node.id]
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            left, right = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Pow):
                if not isinstance(node.right, (ast.Constant, ast.UnaryOp)):
                    raise ValueError("exponents must be integer literals")
                right = int(ast.literal_eval(node.right))
            return _BINOPS[type(node.op)](left, right)
        if isinstance(node, ast.Call) and isinstance(node.func, ast.Name):
            args = [int(ast.literal_eval(a)) for a in node.args]
            if node.func.id == "qK" and len(args) == 3:
                return qK(*args)
            if node.func.id == "br" and len(args) == 1:
                return q_bracket(args[0])
        raise ValueError(f"unsupported syntax: {ast.dump(node)[:80]}")

    val = ev(ast.parse(text, mode="eval"))
    return val if isinstance(val, AlgebraElement) else AlgebraElement.scalar(val)


def compare(expr_id: str, transcription: str, truncation: int = 4) -> CheckReport:
    t0 = time.perf_counter()
    obj = render_object(expr_id, truncation)
    if not isinstance(obj, AlgebraElement):
        raise KeyError(f"{expr_id!r} is not an algebra element")
    d = obj - parse_expression(transcription)
    name = f"compare:{expr_id}"
    r = passed(name, "user transcription") if d.is_zero() else \
        failed(name, f"computed - transcription = {element_text(d)}", "user transcription")
    r.elapsed_ms = (time.perf_counter() - t0) * 1e3
    return r


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def _spectral_arg(text: str):
    try:
        vals = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected three comma-separated integers") from None
    if len(vals) != 3:
        raise argparse.ArgumentTypeError("expected three comma-separated integers")
    return vals


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="uqsl21", description="Exact checks for U_q(gl(2|1)) and its loop superalgebra.")
    sub = p.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--truncation", type=int, default=4)
    common.add_argument("--spectral", type=_spectral_arg, default=(1, 1, 1))
    common.add_argument("--format", choices=("text", "json", "latex"), default="text")
    common.add_argument("--output")
    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("--check", default="all", help=f"comma list of: {', '.join(SUITES)} or all")
    r = sub.add_parser("render", parents=[common], help="render a computed expression")
    r.add_argument("expr_id")
    r.add_argument("--compare", metavar="EXPR", help="diff against a transcription of the same element")
    return p


def _emit(text: str, path: Optional[str]):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(args.truncation, args.spectral,
                        args.check.split(",") if args.command == "verify" else [],
                        args.format, args.output)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.command == "verify":
        reports = run(cfg)
        _emit(format_reports(reports, cfg.format), cfg.output)
        return 1 if any(r.status == FAIL for r in reports) else 0
    try:
        if args.compare:
            rep = compare(args.expr_id, args.compare, cfg.truncation)
            _emit(format_reports([rep], cfg.format), cfg.output)
            return 0 if rep.passed else 1
        _emit(render(args.expr_id, cfg.format, cfg.truncation), cfg.output)
    except (KeyError, ValueError, SyntaxError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
