"""Command-line front end: ``bcinv solve | check | hunt``.

JSON goes to standard output, diagnostics to standard error.  Exit codes:
0 success/found, 2 usage error, 3 not-exists/not-found, 4 claim failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import InconsistencyError, RingError
from .harness import BudgetExceeded, Mode, expand_rings, get_claim, hunt, registry, verify
from .inverses import InverseKind, parse_delta, solve, witness_set
from .ring import build_ring

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_MISSING = 3
EXIT_FAILURE = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2, ensure_ascii=False)
    sys.stdout.write("\n")


def _element(ring, text, flag):
    if text is None:
        return None
    try:
        return ring.parse(text)
    except (RingError, ValueError) as exc:
        raise UsageError(f"--{flag}: {exc}") from None


def cmd_solve(args) -> int:
    try:
        ring = build_ring(args.ring)
        kind = InverseKind(args.kind)
    except (RingError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    a = _element(ring, args.a, "a")
    b, c, d = _element(ring, args.b, "b"), _element(ring, args.c, "c"), _element(ring, args.d, "d")
    delta = None
    if args.delta is not None:
        try:
            delta = parse_delta(args.delta)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    try:
        w = solve(kind, a, b=b, c=c, d=d, delta=delta)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out = {
        "ring": ring.name,
        "kind": kind.value,
        "exists": w is not None,
        "witness": None if w is None else str(w.y),
        "certificate": None if w is None else w.to_json()["certificate"],
    }
    if args.all:
        out["all"] = [str(y) for y in witness_set(kind, a, b=b, c=c, d=d, delta=delta)]
    _emit(out)
    return EXIT_OK if w is not None else EXIT_MISSING


def cmd_check(args) -> int:
    try:
        mode = Mode.parse(args.mode)
        build_ring(args.ring)
    except (RingError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    if args.all_claims:
        ids = [c.id for c in registry()]
    else:
        try:
            ids = [get_claim(args.claim).id]
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from None
    reports = []
    for cid in ids:
        try:
            reports.append(verify(cid, args.ring, mode, workers=args.workers))
        except BudgetExceeded as exc:
            raise UsageError(str(exc)) from None
    # hunt claims are expected to fail somewhere; only "holds" claims gate the exit code
    failing = any(r.expected == "holds" and not r.passed for r in reports)
    payload = [r.to_json() for r in reports]
    _emit(payload[0] if not args.all_claims else {"reports": payload, "all_passed": not failing})
    return EXIT_FAILURE if failing else EXIT_OK


def cmd_hunt(args) -> int:
    try:
        claim = get_claim(args.claim)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    if not claim.is_hunt:
        raise UsageError(f"{claim.id} is not a hunt claim (expected={claim.expected})")
    try:
        rings = expand_rings(args.rings)
        result = hunt(claim.id, rings)
    except (RingError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    _emit(result.to_json())
    return EXIT_OK if result.found else EXIT_MISSING


def cmd_claims(args) -> int:
    _emit([{"id": c.id, "arity": c.arity, "names": list(c.names), "expected": c.expected,
            "statement": c.anchor} for c in registry()])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="bcinv", description="One-sided (b,c)-inverses over finite rings.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("solve", help="decide existence and print a witness")
    s.add_argument("--ring", required=True)
    s.add_argument("--kind", required=True, choices=[k.value for k in InverseKind])
    s.add_argument("--a", required=True)
    s.add_argument("--b")
    s.add_argument("--c")
    s.add_argument("--d")
    s.add_argument("--delta", help="subset of {1,2,3,4}, e.g. 1,3")
    s.add_argument("--all", action="store_true", help="also list every witness")
    s.set_defaults(func=cmd_solve)

    c = sub.add_parser("check", help="verify registered claims")
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--claim")
    g.add_argument("--all-claims", action="store_true")
    c.add_argument("--ring", required=True)
    c.add_argument("--mode", default="exhaustive", help="exhaustive | sample:<seed>:<count>")
    c.add_argument("--workers", type=int, default=1)
    c.set_defaults(func=cmd_check)

    h = sub.add_parser("hunt", help="search for a counterexample to a converse")
    h.add_argument("--claim", required=True)
    h.add_argument("--rings", required=True, help="comma list; zmod:a..b expands inclusively")
    h.set_defaults(func=cmd_hunt)

    ls = sub.add_parser("claims", help="list registered claims")
    ls.set_defaults(func=cmd_claims)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"bcinv: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InconsistencyError as exc:
        print(f"bcinv: internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
