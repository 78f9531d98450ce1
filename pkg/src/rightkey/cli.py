"""
Command line entry point.

Exit codes: 0 success, 1 usage or parse error, 2 validation error
(non-semistandard input, ``w`` outside ``S_n^lambda``, ...), 3 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Optional, Sequence

from . import alcove, demazure, scanning, verify
from .errors import InvariantError, ParseError, ValidationError
from .permutation import Permutation, parse_permutation
from .shape import Partition, parse_partition
from .tableau import (
    Tableau,
    format_tableau,
    key_of_permutation,
    parse_tableau,
    require_semistandard,
    tableau_to_json,
)

EXIT_OK, EXIT_USAGE, EXIT_VALIDATION, EXIT_INVARIANT = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    if os.path.isfile(source):
        with open(source, encoding="utf-8") as fh:
            return fh.read()
    return source


def _tableau_arg(args: argparse.Namespace) -> Tableau:
    return require_semistandard(parse_tableau(_read(args.tableau), args.n))


def _partition_arg(text: str) -> Partition:
    return parse_partition(_read(text))


def _perm_arg(text: str) -> Permutation:
    return parse_permutation(_read(text))


def _perm_list(u: Permutation) -> list[int]:
    return list(u.images)


# each command returns (text, json-able data)

def cmd_scan(args: argparse.Namespace) -> tuple[str, Any]:
    t = _tableau_arg(args)
    s = scanning.scanning_tableau(t)
    sig = scanning.sigma(t)
    data: dict[str, Any] = {"scanning_tableau": tableau_to_json(s), "sigma": _perm_list(sig)}
    lines = ["S(T):", format_tableau(s), f"sigma = {sig}"]
    if args.paths:
        j = args.column
        fam = scanning.scanning_paths(t, j)
        data["paths"] = [
            {"origin": list(p.origin), "cells": [list(c) for c in p.cells]} for p in fam
        ]
        lines += [f"paths from column {j}:", scanning.annotate_paths(t, j)]
    return "\n".join(lines), data


def _entry_json(e: alcove.ChainEntry) -> dict:
    d: dict[str, Any] = {"label": str(e.label), "perm": _perm_list(e.perm)}
    if e.transposition is not None:
        d["transposition"] = list(e.transposition)
    return d


def cmd_chain(args: argparse.Namespace) -> tuple[str, Any]:
    t = _tableau_arg(args)
    entries = alcove.saturated_chain(t) if args.saturated else alcove.location_chain(t)
    lines = []
    for e in entries:
        line = f"{e.label} {e.perm}"
        if e.transposition is not None:
            line += f" swap {e.transposition[0]},{e.transposition[1]}"
        lines.append(line)
    return "\n".join(lines), {"saturated": bool(args.saturated), "chain": [_entry_json(e) for e in entries]}


def cmd_admissible(args: argparse.Namespace) -> tuple[str, Any]:
    t = _tableau_arg(args)
    gam = alcove.gamma(t.shape)
    subset = alcove.admissible_subset(t)
    marked = set(subset.indices)
    lines = [f"x = {len(gam)}"]
    for x, (r, s) in enumerate(gam, start=1):
        lines.append(f"{x} ({r},{s})" + (" *" if x in marked else ""))
    lines.append("J = " + ",".join(map(str, subset.indices)))
    data = {"x": len(gam), "gamma": [list(g) for g in gam], "J": list(subset.indices)}
    return "\n".join(lines), data


def cmd_rightkey(args: argparse.Namespace) -> tuple[str, Any]:
    t = _tableau_arg(args)
    pi = alcove.alcove_permutation(t)
    key = key_of_permutation(t.shape, pi)
    if key != scanning.scanning_tableau(t):
        raise InvariantError("key of pi_T differs from the scanning tableau")
    text = "\n".join(["R(T):", format_tableau(key), f"pi = {pi}"])
    return text, {"right_key": tableau_to_json(key), "pi": _perm_list(pi)}


def cmd_demazure(args: argparse.Namespace) -> tuple[str, Any]:
    p = _partition_arg(args.partition)
    w = _perm_arg(args.perm)
    poly = demazure.demazure_character(p, w)
    data: dict[str, Any] = {"character": poly.to_json(), "text": str(poly)}
    lines = [str(poly)]
    if args.oracle:
        other = demazure.divided_difference_character(p, w)
        if other != poly:
            raise InvariantError(f"divided-difference oracle gives {other}")
        data["oracle"] = True
        lines.append("oracle: agree")
    return "\n".join(lines), data


def cmd_enumerate(args: argparse.Namespace) -> tuple[str, Any]:
    p = _partition_arg(args.partition)
    w = _perm_arg(args.perm)
    members = list(demazure.demazure_members(p, w, criterion=args.criterion))
    text = "\n\n".join(format_tableau(t) for t in members)
    return text, {"count": len(members), "members": [tableau_to_json(t) for t in members]}


def cmd_verify(args: argparse.Namespace) -> tuple[str, Any]:
    results = verify.run_all(args.max_n, args.max_cells, args.seed, args.random_cases)
    lines = [r.summary() for r in results]
    for r in results:
        lines.extend(f"  {r.name}: {m}" for m in r.messages)
    data = [{"name": r.name, "cases": r.cases, "failures": r.failures} for r in results]
    if any(not r.ok for r in results):
        raise _VerifyFailed("\n".join(lines), data)
    return "\n".join(lines), data


class _VerifyFailed(InvariantError):
    def __init__(self, text: str, data: Any):
        super().__init__("verification failed")
        self.text, self.data = text, data


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    tab = argparse.ArgumentParser(add_help=False)
    tab.add_argument("tableau", help="rows text ('1 1 2 / 2 3'), JSON, a file path, or '-' for stdin")
    tab.add_argument("-n", type=int, default=None, help="rank n (default: taken from input or inferred)")

    pw = argparse.ArgumentParser(add_help=False)
    pw.add_argument("partition", help="e.g. 'n=3; 2,1'")
    pw.add_argument("perm", help="e.g. '3,2,1'")

    parser = _Parser(prog="rightkey", description="Right keys via scanning and the alcove model.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("scan", parents=[common, tab], help="scanning tableau and sigma_T")
    p.add_argument("--paths", action="store_true", help="also print the scanning paths")
    p.add_argument("--column", type=int, default=1, help="origin column for --paths")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("chain", parents=[common, tab], help="alcove-model chain")
    p.add_argument("--saturated", action="store_true", help="print the full saturated chain")
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("admissible", parents=[common, tab], help="Gamma(lambda) and J_T")
    p.set_defaults(func=cmd_admissible)

    p = sub.add_parser("rightkey", parents=[common, tab], help="key of pi_T, checked against S(T)")
    p.set_defaults(func=cmd_rightkey)

    p = sub.add_parser("demazure", parents=[common, pw], help="Demazure character")
    p.add_argument("--oracle", action="store_true", help="cross-check with divided differences")
    p.set_defaults(func=cmd_demazure)

    p = sub.add_parser("enumerate", parents=[common, pw], help="members of D(lambda, w)")
    p.add_argument("--criterion", choices=("key", "bruhat"), default="key")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", parents=[common], help="run the consistency suites")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--max-cells", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--random-cases", type=int, default=1000)
    p.set_defaults(func=cmd_verify)
    return parser


def _emit(fmt: str, text: str, data: Any, stream=None) -> None:
    stream = stream or sys.stdout
    if fmt == "json":
        stream.write(json.dumps(data, sort_keys=True) + "\n")
    elif text:
        stream.write(text + "\n")


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text, data = args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except _VerifyFailed as exc:
        _emit(args.format, exc.text, exc.data)
        return EXIT_INVARIANT
    except InvariantError as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    _emit(args.format, text, data)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
