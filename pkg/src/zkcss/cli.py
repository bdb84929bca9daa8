"""Command-line interface: ``zkcss analyze|convert|verify|ltc-sweep|gallery``.

Exit status is 0 when every requested predicate holds, 1 when a predicate
was checked and is false, and 2 for usage, parse and capability errors.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from . import formats
from .code import DEFAULT_BUDGET, LinearCode, low_weight_witness, min_weight
from .css import GALLERY_NAMES, CssCode, css_rate, distance_x, distance_z, gallery_entry, gallery_text
from .equiv import css_to_zk, zk_to_css
from .errors import BudgetExceededError, DegenerateCodeError, FormatError
from .ltc import blr_hadamard_tester, hadamard_code, parity_sampler_tester, soundness_sweep
from .matrix import Matrix
from .zkenc import (
    RandomizedEncoder,
    find_leaking_set,
    is_decodable_oracle,
    max_zk_threshold,
)

EXIT_OK, EXIT_FALSE, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _vec(v) -> str:
    return " ".join(str(int(x)) for x in v)


def _load(path: str, field: int | None):
    try:
        doc = formats.load(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    p = doc.obj.field.p
    if field is not None and field != p:
        raise UsageError(f"{path} is over GF({p}) but --field {field} was given")
    return doc


def _distance_line(label: str, fn) -> str:
    try:
        return f"{label}: {fn()}"
    except BudgetExceededError as exc:
        if exc.lower_bound is not None:
            return f"{label}: >= {exc.lower_bound} (bound, not exact)"
        return f"{label}: skipped (budget exceeded)"


# -- analyze -----------------------------------------------------------------


def _analyze_code(C: LinearCode, budget: int) -> list[str]:
    if C.k == 0:
        raise DegenerateCodeError("zero-dimensional code: nothing to analyze")
    return [
        "kind: code",
        f"field: GF({C.field.p})",
        f"n: {C.n}",
        f"k: {C.k}",
        f"rate: {C.rate}",
        _distance_line("min_distance", lambda: min_weight(C, budget=budget)),
    ]


def _analyze_css(Q: CssCode, budget: int) -> list[str]:
    if Q.is_degenerate():
        raise DegenerateCodeError("degenerate CSS pair: dim(C_X) = dim(C_Z^perp), nothing to analyze")
    lines = [
        "kind: css",
        f"field: GF({Q.field.p})",
        f"n: {Q.n}",
        f"dim_C_X: {Q.cx.k}",
        f"dim_C_Z: {Q.cz.k}",
        f"dimension: {Q.dimension}",
        f"rate: {css_rate(Q)}",
        _distance_line("d_X", lambda: distance_x(Q, budget=budget)),
        _distance_line("d_Z", lambda: distance_z(Q, budget=budget)),
        _distance_line("d", lambda: min(distance_x(Q, budget=budget), distance_z(Q, budget=budget))),
        _distance_line("max_t_zk", lambda: distance_z(Q, budget=budget) - 1),
        _distance_line("max_decodable_e", lambda: (distance_x(Q, budget=budget) - 1) // 2),
    ]
    return lines


def _analyze_encoder(E: RandomizedEncoder, budget: int) -> list[str]:
    Q = E.css
    lines = [
        "kind: encoder",
        f"field: GF({E.field.p})",
        f"n: {E.n}",
        f"k: {E.k}",
        f"k_prime: {E.k_prime}",
        f"rate: {css_rate(Q)}",
        f"code_rate: {E.code.rate}",
        _distance_line("min_distance", lambda: min_weight(E.code, budget=budget)),
        _distance_line("d_X", lambda: distance_x(Q, budget=budget)),
        _distance_line("d_Z", lambda: distance_z(Q, budget=budget)),
        _distance_line("max_t_zk (algebraic)", lambda: max_zk_threshold(E, budget=budget)),
        _distance_line("max_t_zk (oracle)", lambda: max_zk_threshold(E, method="oracle", budget=budget)),
        _distance_line("max_decodable_e", lambda: (distance_x(Q, budget=budget) - 1) // 2),
    ]
    return lines


def cmd_analyze(args) -> int:
    doc = _load(args.input, args.field)
    obj = doc.obj
    if args.css:
        if isinstance(obj, RandomizedEncoder):
            obj = zk_to_css(obj).css
        elif not isinstance(obj, CssCode):
            raise UsageError("--css needs a CSS file or an encoder file")
    if isinstance(obj, CssCode):
        lines = _analyze_css(obj, args.budget)
    elif isinstance(obj, RandomizedEncoder):
        lines = _analyze_encoder(obj, args.budget)
    elif isinstance(obj, LinearCode):
        lines = _analyze_code(obj, args.budget)
    else:
        lines = _analyze_code(LinearCode.from_generator(obj), args.budget)
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


# -- convert -----------------------------------------------------------------


def cmd_convert(args) -> int:
    doc = _load(args.input, args.field)
    source = os.path.basename(args.input)
    obj = doc.obj
    if args.to_css:
        if not isinstance(obj, RandomizedEncoder):
            raise UsageError("--to-css needs an encoder file")
        res = zk_to_css(obj)
        first, last = res.randomness_columns[0] + 1, res.randomness_columns[-1] + 1
        comments = [
            f"converted from encoder {source} (n={obj.n}, k={obj.k}, k_prime={obj.k_prime})",
            "C_X: the code spanned by the generator",
            f"C_Z: vectors orthogonal to generator columns {first}..{last} (1-based)",
        ]
        text = formats.dumps(res.css, comments=comments)
    else:
        if not isinstance(obj, CssCode):
            raise UsageError("--to-zk needs a CSS file")
        res = css_to_zk(obj)
        E = res.encoder
        first, last = res.randomness_columns[0] + 1, res.randomness_columns[-1] + 1
        comments = [
            f"converted from css {source} (n={E.n}, dim C_X={E.k})",
            f"generator columns {first}..{last} (1-based) form a basis of C_Z^perp",
        ]
        text = formats.dumps(E, comments=comments)
    _emit(text, args.output)
    return EXIT_OK


# -- verify ------------------------------------------------------------------


def _pad(support, t: int, n: int) -> list[int]:
    chosen = sorted(int(i) for i in support)
    for i in range(n):
        if len(chosen) >= t:
            break
        if i not in chosen:
            chosen.append(i)
    return sorted(chosen)


def _verify_zk(E: RandomizedEncoder, t: int, args, lines: list[str]) -> bool:
    Q = E.css
    d_z = distance_z(Q, budget=args.budget)
    holds = d_z > t
    lines.append(f"predicate {t}-ZK: {'true' if holds else 'false'}")
    lines.append(f"  method algebraic: d_Z = {d_z} {'>' if holds else '<='} {t}")
    leak = None
    try:
        leak = find_leaking_set(E, t, budget=args.budget)
        lines.append(f"  method oracle: {'agrees' if (leak is None) == holds else 'DISAGREES'} (exhaustive)")
    except BudgetExceededError:
        if args.require_oracle:
            raise
        lines.append("  method oracle: skipped (budget exceeded)")
    if not holds:
        u = low_weight_witness(Q.cz, Q.cx.dual(), t, budget=args.budget)
        if leak is None:
            leak = _pad(np.flatnonzero(u), min(t, E.n), E.n)
        lines.append(f"  witness index set (0-based): {_vec(leak)}")
        lines.append(f"  witness vector in C_Z outside C_X^perp: {_vec(u)}")
    return holds


def _verify_decoding(E: RandomizedEncoder, e: int, args, lines: list[str]) -> bool:
    Q = E.css
    d_x = distance_x(Q, budget=args.budget)
    holds = d_x > 2 * e
    lines.append(f"predicate decodable from {e} errors: {'true' if holds else 'false'}")
    lines.append(f"  method algebraic: d_X = {d_x} {'>' if holds else '<='} {2 * e}")
    try:
        direct = is_decodable_oracle(E, e, budget=args.budget)
        lines.append(f"  method oracle: {'agrees' if direct == holds else 'DISAGREES'} (pairwise distances)")
    except BudgetExceededError:
        if args.require_oracle:
            raise
        lines.append("  method oracle: skipped (budget exceeded)")
    if not holds:
        u = low_weight_witness(Q.cx, Q.cz.dual(), 2 * e, budget=args.budget)
        lines.append(f"  witness vector in C_X outside C_Z^perp: {_vec(u)}")
    return holds


def cmd_verify(args) -> int:
    doc = _load(args.input, args.field)
    obj = doc.obj
    lines: list[str] = []
    if isinstance(obj, CssCode):
        lines.append("predicate CSS orthogonality: true")
        if obj.is_degenerate():
            raise DegenerateCodeError("degenerate CSS pair: k_prime = dim(C_X) - dim(C_Z^perp) must be >= 1")
        E = css_to_zk(obj).encoder
    elif isinstance(obj, RandomizedEncoder):
        E = obj
    else:
        raise UsageError("verify needs an encoder or CSS file")
    results = [True]
    for t in args.t or []:
        results.append(_verify_zk(E, t, args, lines))
    for e in args.e or []:
        results.append(_verify_decoding(E, e, args, lines))
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK if all(results) else EXIT_FALSE


# -- ltc-sweep ---------------------------------------------------------------


def _tester(args):
    spec = args.tester
    if spec.startswith("blr:"):
        try:
            m = int(spec[4:])
        except ValueError:
            raise UsageError(f"bad tester spec {spec!r}; expected blr:<message_len>") from None
        T = blr_hadamard_tester(m)
        if args.code:
            C = _code_from(_load(args.code, args.field).obj)
            if C != hadamard_code(m):
                raise UsageError(f"{args.code} is not the Hadamard code of message length {m}")
        return T
    if not args.code:
        raise UsageError("a code file is required with a parity-check tester")
    C = _code_from(_load(args.code, args.field).obj)
    rows = formats.load(spec).obj
    if isinstance(rows, LinearCode):
        rows = rows.parity_check
    if not isinstance(rows, Matrix):
        raise UsageError(f"{spec} must hold a matrix of check rows")
    return parity_sampler_tester(C, rows)


def _code_from(obj) -> LinearCode:
    if isinstance(obj, LinearCode):
        return obj
    if isinstance(obj, RandomizedEncoder):
        return obj.code
    if isinstance(obj, Matrix):
        return LinearCode.from_generator(obj)
    raise UsageError("expected a code file")


def cmd_ltc_sweep(args) -> int:
    T = _tester(args)
    if args.codewords_only:
        report = soundness_sweep(T, T.code.codewords(budget=args.budget).tolist(), budget=args.budget)
    elif args.samples is not None:
        report = soundness_sweep(T, samples=args.samples, seed=args.seed, budget=args.budget)
    else:
        try:
            report = soundness_sweep(T, budget=args.budget)
        except BudgetExceededError as exc:
            raise BudgetExceededError(f"{exc}; rerun with --samples N --seed S") from None
    _emit(report.to_lines(), args.output)
    return EXIT_OK if report.all_passed else EXIT_FALSE


# -- gallery -----------------------------------------------------------------


def cmd_gallery(args) -> int:
    if args.name:
        _emit(gallery_text(args.name), args.output)
        return EXIT_OK
    lines = ["name n field dimension rate d_X d_Z"]
    for name in GALLERY_NAMES:
        Q = gallery_entry(name)
        lines.append(
            f"{name} {Q.n} GF({Q.field.p}) {Q.dimension} {css_rate(Q)} {distance_x(Q)} {distance_z(Q)}"
        )
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


# -- plumbing ----------------------------------------------------------------


def _emit(text: str, output: str | None):
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="enumeration budget (default 2^22)")
    common.add_argument("--field", type=int, help="expected field size p; mismatching inputs are rejected")
    common.add_argument("--output", "-o", help="write to this file instead of stdout")

    parser = argparse.ArgumentParser(prog="zkcss", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="report parameters of a code, encoder or CSS pair")
    p.add_argument("input")
    p.add_argument("--css", action="store_true", help="analyze as a CSS pair")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("convert", parents=[common], help="encoder <-> CSS pair")
    p.add_argument("input")
    direction = p.add_mutually_exclusive_group(required=True)
    direction.add_argument("--to-css", action="store_true")
    direction.add_argument("--to-zk", action="store_true")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("verify", parents=[common], help="check t-ZK and decodability")
    p.add_argument("input")
    p.add_argument("--t", type=int, action="append", help="ZK threshold to check (repeatable)")
    p.add_argument("--e", type=int, action="append", help="number of errors to decode (repeatable)")
    p.add_argument("--require-oracle", action="store_true", help="fail unless the exhaustive oracle fits the budget")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("ltc-sweep", parents=[common], help="exact soundness sweep of a local tester")
    p.add_argument("code", nargs="?", help="code file (optional for blr:<m>)")
    p.add_argument("--tester", required=True, help="blr:<message_len> or a file of parity-check rows")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true", help="sweep every word (default)")
    mode.add_argument("--samples", type=int, help="sweep this many uniformly random words")
    mode.add_argument("--codewords-only", action="store_true", help="sweep the codewords only")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_ltc_sweep)

    p = sub.add_parser("gallery", parents=[common], help="list or export fixture CSS codes")
    p.add_argument("name", nargs="?", choices=GALLERY_NAMES)
    p.set_defaults(func=cmd_gallery)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        for name in ("t", "e"):
            if any(v < 0 for v in getattr(args, name, None) or []):
                raise UsageError(f"--{name} must be non-negative")
        return args.func(args)
    except (UsageError, FormatError, DegenerateCodeError, BudgetExceededError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
