"""Command-line front end.

Exit status: 0 success, 1 a check or agreement failed, 2 usage error,
3 input rejected (malformed text, or a permutation outside the asked-for class).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Optional

from . import genfunc as gf
from . import structure as st
from .grid import MatrixError, find_gridding, parse_matrix
from .perm import PermutationError, parse_permutation

SCHEMA_VERSION = "1"

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 3


class InputError(Exception):
    pass


def _at_least(lowest: int):
    def convert(text: str) -> int:
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
        if v < lowest:
            raise argparse.ArgumentTypeError(f"must be at least {lowest}")
        return v
    return convert


_positive = _at_least(1)


def _emit(args, command: str, payload: dict, rows: list[dict], text: str) -> None:
    """Write one document in the chosen format.  All numbers go out as decimal strings."""
    if args.format == "json":
        doc = {"schema_version": SCHEMA_VERSION, "command": command}
        doc.update(_stringify(payload))
        if rows:
            doc["rows"] = _stringify(rows)
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    elif args.format == "csv":
        buf = io.StringIO()
        table = rows or [payload]
        fields = ["schema_version"] + list(table[0])
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for row in _stringify(table):
            writer.writerow({"schema_version": SCHEMA_VERSION, **row})
        sys.stdout.write(buf.getvalue())
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")


def _stringify(obj):
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, dict):
        return {k: _stringify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_stringify(v) for v in obj]
    return obj


def _threads(args) -> int:
    return args.threads or st.default_threads()


# ------------------------------------------------------------------ commands


def cmd_count(args) -> int:
    n = args.to
    rows = []
    brute = gfc = None
    if args.method in ("brute", "both"):
        brute = st.enumerate_class(n, threads=_threads(args)).counts
    if args.method in ("gf", "both"):
        gfc = gf.series(gf.named("f"), n)[1:]
    ok = True
    for k in range(1, n + 1):
        row = {"length": k}
        if brute is not None:
            row["brute"] = brute[k - 1]
        if gfc is not None:
            row["gf"] = gfc[k - 1]
        if brute is not None and gfc is not None:
            row["agree"] = brute[k - 1] == gfc[k - 1]
            ok &= row["agree"]
        rows.append(row)
    lines = [f"{'n':>3}  " + "  ".join(f"{c:>12}" for c in rows[0] if c != "length")]
    for row in rows:
        lines.append(f"{row['length']:>3}  " + "  ".join(
            f"{('yes' if v else 'NO') if isinstance(v, bool) else v:>12}"
            for c, v in row.items() if c != "length"))
    _emit(args, "count", {"method": args.method, "ok": ok}, rows, "\n".join(lines))
    return EXIT_OK if ok else EXIT_FAIL


_TALLY_KINDS = list(st.SimpleType)


def cmd_simples(args) -> int:
    if args.to < 4:
        args.parser.error("simples needs --to of at least 4")
    ref = gf.series(gf.named("s"), args.to)
    rows = []
    ok = True
    for n in range(4, args.to + 1):
        tally = {k: 0 for k in _TALLY_KINDS}
        sims = st.simple_members(n, threads=_threads(args))
        for p in sims:
            tally[st.classify_simple(p)] += 1
        agree = len(sims) == ref[n]
        ok &= agree
        row = {"length": n, "total": len(sims), "gf": ref[n], "agree": agree}
        row.update({k.value: tally[k] for k in _TALLY_KINDS})
        rows.append(row)
    lines = []
    for row in rows:
        kinds = ", ".join(f"{k.value}={row[k.value]}" for k in _TALLY_KINDS if row[k.value])
        flag = "ok" if row["agree"] else "MISMATCH"
        lines.append(f"n={row['length']}: {row['total']} simple ({flag}; gf {row['gf']})  {kinds}")
    _emit(args, "simples", {"ok": ok}, rows, "\n".join(lines))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_encode(args) -> int:
    p = _parse_perm(args.perm)
    try:
        word = st.encode_D(p)
    except st.NotInDError as exc:
        raise InputError(str(exc)) from None
    _emit(args, "encode", {"permutation": str(p), "word": word}, [], word)
    return EXIT_OK


def cmd_decode(args) -> int:
    try:
        p = st.decode_word(args.word.strip())
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit(args, "decode", {"word": args.word.strip(), "permutation": str(p)}, [], p.compact())
    return EXIT_OK


def cmd_classify(args) -> int:
    p = _parse_perm(args.perm)
    try:
        kind = st.classify_simple(p)
        profile = st.inflation_profile(p)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    payload = {"permutation": str(p), "type": kind.value,
               "profile": [c.value for c in profile]}
    text = f"{p.compact()}: {kind.value}\n" + "\n".join(
        f"  value {v}: {c.value}" for v, c in zip(p, profile))
    _emit(args, "classify", payload, [], text)
    return EXIT_OK


def cmd_member(args) -> int:
    p = _parse_perm(args.perm)
    brute, structural = st.is_member(p), st.is_member_structural(p)
    dec = str(st.decompose(p))
    payload = {"permutation": str(p), "member": brute, "structural": structural,
               "decomposition": dec}
    text = (f"{p.compact()}: {'member' if brute else 'not a member'} "
            f"(structural test {'agrees' if brute == structural else 'DISAGREES'}); {dec}")
    _emit(args, "member", payload, [], text)
    return EXIT_OK if brute == structural else EXIT_FAIL


def cmd_grid(args) -> int:
    p = _parse_perm(args.perm)
    try:
        m = parse_matrix(args.matrix)
    except MatrixError as exc:
        raise InputError(str(exc)) from None
    g = find_gridding(p, m)
    payload = {"permutation": str(p), "matrix": str(m), "member": g is not None,
               "col_cuts": list(g.col_cuts) if g else None,
               "row_cuts": list(g.row_cuts) if g else None}
    if g is None:
        text = f"{p} is not in the grid class {m}"
    else:
        text = (f"{p} is in the grid class {m}\n"
                f"  column cuts (points to the left): {list(g.col_cuts)}\n"
                f"  row cuts (values below, bottom first): {list(g.row_cuts)}")
    _emit(args, "grid", payload, [], text)
    return EXIT_OK


def cmd_series(args) -> int:
    try:
        r = gf.named(args.name)
    except KeyError as exc:
        raise InputError(exc.args[0]) from None
    coeffs = gf.series(r, args.to)
    rows = [{"length": k, "coefficient": c} for k, c in enumerate(coeffs)]
    _emit(args, "series", {"name": args.name, "formula": str(r)}, rows,
          ", ".join(map(str, coeffs)))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.threads:
        os.environ["PERMCLASS_THREADS"] = str(args.threads)
    from .verify import run_all

    results = run_all(args.to, grid_trials=args.grid_trials)
    ok = all(r.passed for r in results)
    rows = [{"check": r.name, "passed": r.passed, "detail": r.detail} for r in results]
    text = "\n".join(r.line() for r in results)
    text += f"\n{sum(r.passed for r in results)}/{len(results)} checks passed"
    _emit(args, "verify", {"to": args.to, "ok": ok}, rows, text)
    return EXIT_OK if ok else EXIT_FAIL


def _parse_perm(text: str):
    try:
        return parse_permutation(text)
    except PermutationError as exc:
        raise InputError(str(exc)) from None


# -------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--threads", type=_positive, default=None,
                        help="worker processes for enumeration (default: $PERMCLASS_THREADS or all cores)")

    parser = argparse.ArgumentParser(
        prog="permclass",
        description="Enumeration and structure of the permutation class Av(2143, 4231).")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func, parser=p)
        return p

    p = add("count", cmd_count, "count class members by length")
    p.add_argument("--to", type=_positive, required=True)
    p.add_argument("--method", choices=("brute", "gf", "both"), default="both")

    p = add("simples", cmd_simples, "simple members per length, tallied by type")
    p.add_argument("--to", type=_positive, required=True)

    p = add("encode", cmd_encode, "a/b/c word of a member of the column class D")
    p.add_argument("perm")

    p = add("decode", cmd_decode, "permutation of an a/b/c word")
    p.add_argument("word")

    p = add("classify", cmd_classify, "type and inflation profile of a simple member")
    p.add_argument("perm")

    p = add("member", cmd_member, "membership by avoidance and by structure")
    p.add_argument("perm")

    p = add("grid", cmd_grid, "grid class membership with a witness gridding")
    p.add_argument("--matrix", required=True, help='rows top first, e.g. "-1,-1; 1,1; 0,-1"')
    p.add_argument("perm")

    p = add("series", cmd_series, "coefficients of a named generating function")
    p.add_argument("name", help=", ".join(gf.GF_NAMES))
    p.add_argument("--to", type=_at_least(0), default=12)

    p = add("verify", cmd_verify, "run every cross-check up to a length bound")
    p.add_argument("--to", type=_positive, default=9)
    p.add_argument("--grid-trials", type=_positive, default=1000)
    return parser


def _attach_matrix(argv: list[str]) -> list[str]:
    # Matrix text often starts with "-1", which argparse would read as an option.
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--matrix":
            nxt = next(it, None)
            out.append(tok if nxt is None else f"--matrix={nxt}")
        else:
            out.append(tok)
    return out


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_attach_matrix(argv))
    try:
        return args.func(args)
    except InputError as exc:
        print(f"permclass {args.command}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
