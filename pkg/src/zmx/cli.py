"""Command line front end: matrix file parsing, reports, generators,
verification campaigns.

Matrix files come in two shapes. Plain text is the order on the first line
followed by that many rows of rational literals ("-4", "1/2"); JSON is
{"n": int, "entries": [[string, ...], ...]}. Output sticks to exact
rational strings except the perron command, which also shows a decimal.

Exit codes: 0 success, 1 failed check or domain error, 2 usage/parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from zmx.construct import bdsw_matrix, circulant_pz, from_cyclic_params, type_d
from zmx.cyclic import (
    bdsw_sign_classify,
    cyclic_det,
    cyclic_inverse,
    cyclic_products,
    is_bdsw,
    is_full,
    is_inverse_cyclic,
)
from zmx.digraph import digraph_of, is_irreducible, is_unipathic, maybee_entry, to_dot
from zmx.errors import (
    MatrixParseError,
    NotInverseCyclicError,
    NotZMatrixError,
    OrderCapError,
    SingularMatrixError,
)
from zmx.matrix import Matrix, inverse
from zmx.verify import CAMPAIGNS, run_verify
from zmx.zclass import ORDER_CAP, ClassReport, classify, is_z, perron_r

_LITERAL = re.compile(r"([+-]?\d+)(?:/(\d+))?\Z")


def _literal(token: str) -> Fraction:
    m = _LITERAL.match(token)
    if not m or (m.group(2) is not None and int(m.group(2)) == 0):
        raise ValueError(f"bad rational literal {token!r}")
    num = int(m.group(1))
    return Fraction(num, int(m.group(2))) if m.group(2) else Fraction(num)


def _parse_text(text: str) -> Matrix:
    lines = text.splitlines()
    content = [(no, ln) for no, ln in enumerate(lines, start=1) if ln.strip()]
    if not content:
        raise MatrixParseError("empty input", line=1, column=1)
    head_no, head = content[0]
    head_tokens = head.split()
    if len(head_tokens) != 1 or not head_tokens[0].isdigit() or int(head_tokens[0]) < 1:
        raise MatrixParseError("first line must be the order, a positive integer",
                               line=head_no, column=1)
    n = int(head_tokens[0])
    body = content[1:]
    if len(body) < n:
        raise MatrixParseError(f"expected {n} rows, got {len(body)}",
                               line=content[-1][0], column=1)
    if len(body) > n:
        raise MatrixParseError(f"unexpected extra row (order is {n})",
                               line=body[n][0], column=1)
    rows = []
    for no, line in body:
        entries = []
        for m in re.finditer(r"\S+", line):
            try:
                entries.append(_literal(m.group()))
            except ValueError as exc:
                raise MatrixParseError(str(exc), line=no, column=m.start() + 1) from None
        if len(entries) != n:
            raise MatrixParseError(f"expected {n} entries in row, got {len(entries)}",
                                   line=no, column=1)
        rows.append(entries)
    return Matrix(rows)


def _parse_json(text: str) -> Matrix:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixParseError(exc.msg, line=exc.lineno, column=exc.colno) from None
    if not isinstance(obj, dict) or "n" not in obj or "entries" not in obj:
        raise MatrixParseError('JSON matrix needs "n" and "entries" keys')
    n = obj["n"]
    grid = obj["entries"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise MatrixParseError('"n" must be a positive integer')
    if not isinstance(grid, list) or len(grid) != n:
        raise MatrixParseError(f'"entries" must hold {n} rows')
    rows = []
    for i, row in enumerate(grid, start=1):
        if not isinstance(row, list) or len(row) != n:
            raise MatrixParseError(f"row {i} must hold {n} entries")
        out = []
        for j, cell in enumerate(row, start=1):
            if isinstance(cell, bool) or not isinstance(cell, (int, str)):
                raise MatrixParseError(f"entry ({i},{j}) must be an integer or a rational string")
            try:
                out.append(_literal(str(cell)))
            except ValueError as exc:
                raise MatrixParseError(f"entry ({i},{j}): {exc}") from None
        rows.append(out)
    return Matrix(rows)


def parse_matrix(text: str) -> Matrix:
    """Parse either accepted format, sniffing JSON by the leading brace."""
    if text.lstrip().startswith("{"):
        return _parse_json(text)
    return _parse_text(text)


def serialize_matrix(a: Matrix) -> str:
    lines = [str(a.n)]
    lines.extend(" ".join(str(x) for x in row) for row in a.rows)
    return "\n".join(lines) + "\n"


@dataclass
class CyclicInfo:
    """Cycle-structure facts that ride along with a ClassReport."""

    is_full: bool
    is_inverse_cyclic: bool
    is_bdsw: bool
    d: Fraction
    c: Fraction
    verdict: str
    inverse: Optional[Matrix]
    inverse_is_z: Optional[bool]
    inverse_is_bdsw: Optional[bool]


def gather_info(a: Matrix, cap: int = ORDER_CAP) -> tuple[ClassReport, CyclicInfo]:
    report = classify(a, cap=cap)
    d, c = cyclic_products(a)
    inv = inverse(a) if report.is_nonsingular and a.n <= cap else None
    info = CyclicInfo(
        is_full=is_full(a),
        is_inverse_cyclic=is_inverse_cyclic(a),
        is_bdsw=is_bdsw(a),
        d=d,
        c=c,
        verdict=bdsw_sign_classify(a).value,
        inverse=inv,
        inverse_is_z=None if inv is None else is_z(inv),
        inverse_is_bdsw=None if inv is None else is_bdsw(inv),
    )
    return report, info


def _yn(flag) -> str:
    if flag is None:
        return "n/a"
    return "yes" if flag else "no"


def emit_report(r: ClassReport, info: CyclicInfo, format: str = "text") -> str:
    if format == "json":
        payload = {
            "n": r.n,
            "is_z": r.is_z,
            "is_nonsingular": r.is_nonsingular,
            "determinant": str(r.determinant),
            "irreducible": r.irreducible,
            "is_m": r.is_m,
            "is_nonsingular_m": r.is_nonsingular_m,
            "is_n": r.is_n,
            "is_n0": r.is_n0,
            "is_f0": r.is_f0,
            "l_index": r.l_index,
            "is_full": info.is_full,
            "is_inverse_cyclic": info.is_inverse_cyclic,
            "is_bdsw": info.is_bdsw,
            "d": str(info.d),
            "c": str(info.c),
            "d_minus_c": str(info.d - info.c),
            "verdict": info.verdict,
            "inverse": None
            if info.inverse is None
            else [[str(x) for x in row] for row in info.inverse.rows],
            "inverse_is_z": info.inverse_is_z,
            "inverse_is_bdsw": info.inverse_is_bdsw,
        }
        return json.dumps(payload, separators=(",", ":"))
    lines = [
        f"order: {r.n}",
        f"Z-matrix: {_yn(r.is_z)}",
        f"nonsingular: {_yn(r.is_nonsingular)} (det = {r.determinant})",
        f"irreducible: {_yn(r.irreducible)}",
        f"M: {_yn(r.is_m)}   nonsingular M: {_yn(r.is_nonsingular_m)}   "
        f"N: {_yn(r.is_n)}   N0: {_yn(r.is_n0)}   F0: {_yn(r.is_f0)}",
        "L-band index: " + ("n/a" if r.l_index is None else str(r.l_index)),
        f"full: {_yn(info.is_full)}   inverse cyclic: {_yn(info.is_inverse_cyclic)}   "
        f"bdsw: {_yn(info.is_bdsw)}",
        f"d = {info.d}   c = {info.c}   d - c = {info.d - info.c}",
        f"verdict: {info.verdict}",
    ]
    if info.inverse is not None:
        lines.append(f"inverse (Z: {_yn(info.inverse_is_z)}, bdsw: {_yn(info.inverse_is_bdsw)}):")
        lines.append(str(info.inverse))
    return "\n".join(lines)


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _cmd_classify(args) -> int:
    a = parse_matrix(_read_input(args.file))
    report, info = gather_info(a, cap=args.cap)
    print(emit_report(report, info, "json" if args.json else "text"))
    return 0


def _cmd_invert(args) -> int:
    a = parse_matrix(_read_input(args.file))
    if args.method == "cyclic":
        inv = cyclic_inverse(a)
    elif args.method == "maybee":
        inv = Matrix(
            [
                [maybee_entry(a, i, j, cap=args.cap) for j in range(1, a.n + 1)]
                for i in range(1, a.n + 1)
            ]
        )
    else:
        inv = inverse(a)
    print(serialize_matrix(inv), end="")
    return 0


def _cmd_cyclic_check(args) -> int:
    a = parse_matrix(_read_input(args.file))
    d, c = cyclic_products(a)
    cyc = is_inverse_cyclic(a)
    print(f"order: {a.n}")
    print(f"full: {_yn(is_full(a))}")
    print(f"inverse cyclic: {_yn(cyc)}")
    print(f"d = {d}   c = {c}   d - c = {d - c}")
    if cyc:
        print(f"closed-form determinant: {cyclic_det(a)}")
        return 0
    return 1


def _cmd_digraph(args) -> int:
    a = parse_matrix(_read_input(args.file))
    dg = digraph_of(a)
    if args.dot:
        print(to_dot(dg))
        return 0
    print(f"vertices: {dg.n}")
    print("edges: " + ", ".join(f"{i}->{j}" for i, j in sorted(dg.edges)))
    print(f"irreducible: {_yn(is_irreducible(dg))}")
    try:
        print(f"unipathic: {_yn(is_unipathic(dg, cap=args.cap))}")
    except OrderCapError:
        print("unipathic: n/a (order cap exceeded)")
    return 0


def _split_literals(text: str) -> list[Fraction]:
    return [_literal(tok) for tok in re.split(r"[,\s]+", text.strip()) if tok]


def _cmd_gen(args) -> int:
    p = args.parser
    if args.family == "typed":
        if args.params is None:
            p.error("gen typed requires --params")
        m = type_d(_split_literals(args.params))
    elif args.family == "circulant":
        if args.alpha is None:
            p.error("gen circulant requires --alpha")
        m = circulant_pz(_split_literals(args.alpha))
    else:
        if args.diag is None or args.sup is None or args.corner is None:
            p.error(f"gen {args.family} requires --diag, --super and --corner")
        diag = _split_literals(args.diag)
        sup = _split_literals(args.sup)
        corner = _literal(args.corner)
        if args.family == "cyclic":
            m = from_cyclic_params(diag, sup, corner)
        else:
            m = bdsw_matrix(diag, sup, corner)
    print(serialize_matrix(m), end="")
    return 0


def _cmd_verify(args) -> int:
    lo, hi = args.n
    summary = run_verify(args.theorem, lo, hi, args.trials, args.seed)
    print(f"theorem: {summary.theorem}")
    print(f"orders: {summary.n_lo}..{summary.n_hi}   trials: {summary.trials}   seed: {summary.seed}")
    print(f"checks: {summary.checks}")
    print(f"failures: {len(summary.failures)}")
    for line in summary.failures[:20]:
        print(f"  {line}")
    if len(summary.failures) > 20:
        print(f"  ... and {len(summary.failures) - 20} more")
    return 0 if summary.ok else 1


def _cmd_perron(args) -> int:
    b = parse_matrix(_read_input(args.file))
    tol = _literal(args.tol)
    v = perron_r(b, args.r, tol)
    print(f"r: {args.r}")
    print(f"bound: {v}")
    print(f"bracket: ({v - tol}, {v}]")
    print(f"decimal: {float(v):.12g}")
    return 0


def _range_arg(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo_s, hi_s = text.split("..", 1)
            lo, hi = int(lo_s), int(hi_s)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}, want LO..HI") from None
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"bad range {text!r}, want 1 <= LO <= HI")
    return lo, hi


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zmx",
        description="Exact-arithmetic toolkit for cycle matrices, bdsw patterns "
        "and the Z-matrix taxonomy.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="full class report for a matrix file")
    p.add_argument("file", help="matrix file, or - for stdin")
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("invert", help="exact inverse of a matrix file")
    p.add_argument("file", help="matrix file, or - for stdin")
    p.add_argument("--method", choices=("oracle", "cyclic", "maybee"), default="oracle")
    p.set_defaults(func=_cmd_invert)

    p = sub.add_parser("cyclic-check", help="test the cyclic consistency relations")
    p.add_argument("file", help="matrix file, or - for stdin")
    p.set_defaults(func=_cmd_cyclic_check)

    p = sub.add_parser("digraph", help="digraph of the nonzero pattern")
    p.add_argument("file", help="matrix file, or - for stdin")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of a summary")
    p.set_defaults(func=_cmd_digraph)

    p = sub.add_parser("gen", help="build a matrix from family parameters")
    p.add_argument("family", choices=("typed", "cyclic", "bdsw", "circulant"))
    p.add_argument("--params", help="typed: comma-separated increasing parameters")
    p.add_argument("--diag", help="cyclic/bdsw: diagonal entries")
    p.add_argument("--super", dest="sup", help="cyclic/bdsw: super-diagonal entries")
    p.add_argument("--corner", help="cyclic/bdsw: bottom-left entry")
    p.add_argument("--alpha", help="circulant: polynomial coefficients")
    p.set_defaults(func=_cmd_gen, parser=p)

    p = sub.add_parser("verify", help="run a seeded theorem campaign")
    p.add_argument("--theorem", required=True, choices=sorted(CAMPAIGNS))
    p.add_argument("--n", type=_range_arg, default=(2, 6), metavar="LO..HI")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("perron", help="bisection bound on the largest r-subset Perron root")
    p.add_argument("file", help="nonnegative matrix file, or - for stdin")
    p.add_argument("--r", type=int, required=True, help="principal submatrix order")
    p.add_argument("--tol", default="1/1000000000", help="rational tolerance")
    p.set_defaults(func=_cmd_perron)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    cap = ORDER_CAP
    env = os.environ.get("ZMX_ORDER_CAP")
    if env is not None:
        try:
            cap = int(env)
        except ValueError:
            print(f"error: ZMX_ORDER_CAP must be an integer, got {env!r}", file=sys.stderr)
            return 2
        if cap < 1:
            print("error: ZMX_ORDER_CAP must be positive", file=sys.stderr)
            return 2
    args.cap = cap
    try:
        return args.func(args)
    except MatrixParseError as exc:
        where = ""
        if exc.line is not None:
            where = f" (line {exc.line}" + (f", column {exc.column})" if exc.column else ")")
        print(f"parse error: {exc}{where}", file=sys.stderr)
        return 2
    except (SingularMatrixError, NotInverseCyclicError, NotZMatrixError, OrderCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ArithmeticError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (TypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
