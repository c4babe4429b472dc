"""Command line front end.

Exit status: 0 when every check passes, 1 when a mathematical check
fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .abelian import present_group, smith_normal_form
from .report import VerificationReport, exact
from .scenarios import SCENARIOS, run_scenario, verify_surface
from .singular import (
    CyclicQuotient,
    admissible_degenerations,
    hj_evaluate,
    hj_expand,
    is_t_chain,
    is_wahl,
    milnor_rank,
    t_chain_from_s,
)
from .surface_file import SurfaceFileError, load_surface


class InputError(Exception):
    pass


def read_matrix(path: str) -> list[list[int]]:
    """Integer matrix, one row per line, whitespace separated; ``#`` starts a comment."""
    rows = []
    try:
        text = open(path, encoding="utf-8").read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            row = [int(x) for x in line.split()]
        except ValueError:
            raise InputError(f"{path}: line {no}: not an integer row") from None
        if rows and len(row) != len(rows[0]):
            raise InputError(f"{path}: line {no}: expected {len(rows[0])} entries, got {len(row)}")
        rows.append(row)
    return rows


def _emit(obj, fmt: str, text: str) -> None:
    if fmt == "machine":
        print(json.dumps(exact(obj), indent=2, ensure_ascii=False))
    else:
        print(text)


def _emit_reports(reports: list[VerificationReport], fmt: str) -> int:
    ok = all(r.ok for r in reports)
    if fmt == "machine":
        doc = reports[0].to_dict() if len(reports) == 1 else {
            "ok": ok, "reports": [r.to_dict() for r in reports]}
        print(json.dumps(doc, indent=2, ensure_ascii=False))
    else:
        print("\n\n".join(r.to_text() for r in reports))
    return 0 if ok else 1


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def _chain(text: str) -> list[int]:
    try:
        chain = [int(x) for x in text.replace(" ", "").strip("[]").split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad chain {text!r}") from None
    if not chain or any(b < 2 for b in chain):
        raise argparse.ArgumentTypeError("chain entries must be integers >= 2")
    return chain


def _common_options(default_format, default_allow):
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("human", "machine"), default=default_format)
    known = argparse.ArgumentParser(add_help=False)
    known.add_argument("--allow-known-discrepancies", action="store_true", default=default_allow,
                       help="treat the listed known discrepancies in the reference data as non-fatal")
    return fmt, known


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="coble", parents=list(_common_options("human", False)),
                                description="Exact lattice computations for Coble surfaces "
                                            "and their Q-Gorenstein degenerations.")
    # subcommand copies must not reset values given before the subcommand
    fmt, known = _common_options(argparse.SUPPRESS, argparse.SUPPRESS)
    p.add_argument("--check-all", action="store_true", help="run every built-in scenario")
    sub = p.add_subparsers(dest="command")

    r = sub.add_parser("run", parents=[fmt, known], help="run a built-in scenario")
    r.add_argument("scenario", choices=list(SCENARIOS))

    h = sub.add_parser("hj", parents=[fmt], help="continued fraction of n/a")
    h.add_argument("n", type=_positive)
    h.add_argument("a", type=_positive)

    w = sub.add_parser("wahl", parents=[fmt], help="test a chain for a Wahl singularity")
    w.add_argument("chain", type=_chain)

    t = sub.add_parser("tchain", parents=[fmt], help="chain of 1/4s(1,2s-1)")
    t.add_argument("s", type=_positive)

    d = sub.add_parser("degenerations", parents=[fmt], help="configurations for 1/4s(1,2s-1)")
    d.add_argument("s", type=_positive)

    m = sub.add_parser("snf", parents=[fmt], help="Smith normal form of an integer matrix file")
    m.add_argument("matrix_file")

    s = sub.add_parser("surface", help="surface file commands")
    ssub = s.add_subparsers(dest="surface_command", required=True)
    v = ssub.add_parser("verify", parents=[fmt], help="run the lattice pipeline on a surface file")
    v.add_argument("surface_file")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = args.format
    allow = args.allow_known_discrepancies

    if args.check_all:
        if args.command:
            parser.error("--check-all takes no subcommand")
        return _emit_reports([run_scenario(n, allow) for n in SCENARIOS], fmt)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 2

    try:
        if args.command == "run":
            return _emit_reports([run_scenario(args.scenario, allow)], fmt)
        if args.command == "hj":
            try:
                chain = hj_expand(args.n, args.a)
            except ValueError as exc:
                raise InputError(str(exc)) from None
            _emit({"n": args.n, "a": args.a, "chain": chain}, fmt,
                  f"{args.n}/{args.a} = {chain}")
            return 0
        if args.command == "wahl":
            q = hj_evaluate(args.chain)
            res = is_wahl(args.chain)
            t = is_t_chain(args.chain)
            text = f"{args.chain} = {q}: " + (
                f"Wahl singularity 1/{res[0] ** 2}(1,{res[0] * res[1] - 1}), (n, a) = {res}"
                if res else "not a Wahl chain")
            if not res and t:
                text += f"; T-singularity with (d, n, a) = {t}"
            _emit({"chain": args.chain, "fraction": q, "wahl": list(res) if res else None,
                   "t": list(t) if t else None}, fmt, text)
            return 0
        if args.command == "tchain":
            chain = t_chain_from_s(args.s)
            q = hj_evaluate(chain)
            t = is_t_chain(chain)
            sing = CyclicQuotient(q.numerator, q.denominator) if q.denominator > 1 else f"1/{q}(1,1)"
            _emit({"s": args.s, "chain": chain, "fraction": q, "t": list(t or []),
                   "milnor_rank": milnor_rank(args.s)}, fmt,
                  f"s={args.s}: {sing} = {chain}, (d, n, a) = {t}, "
                  f"Milnor fibre H2 rank {milnor_rank(args.s)}")
            return 0
        if args.command == "degenerations":
            try:
                configs = admissible_degenerations(args.s)
            except ValueError as exc:
                raise InputError(str(exc)) from None
            _emit({"s": args.s, "configurations": [str(c) for c in configs]}, fmt,
                  "\n".join(str(c) for c in configs))
            return 0
        if args.command == "snf":
            M = read_matrix(args.matrix_file)
            snf = smith_normal_form(M)
            n = len(M[0]) if M else 0
            grp = present_group([f"g{i}" for i in range(n)], M)
            _emit({"elementary_divisors": snf.elementary_divisors, "D": snf.D, "U": snf.U,
                   "V": snf.V, "cokernel": {"rank": grp.rank, "torsion": list(grp.torsion)}}, fmt,
                  f"elementary divisors: {snf.elementary_divisors}\n"
                  f"cokernel: {grp.describe()}")
            return 0
        if args.command == "surface":
            S = load_surface(args.surface_file)
            try:
                rep = verify_surface(S)
            except ValueError as exc:
                raise InputError(f"{args.surface_file}: {exc}") from None
            return _emit_reports([rep], fmt)
    except (InputError, SurfaceFileError, OSError) as exc:
        print(f"coble: error: {exc}", file=sys.stderr)
        return 2
    parser.print_usage(sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main())
