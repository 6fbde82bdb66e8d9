"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 malformed input or parse
error, 3 resource limit, 4 internal consistency violation (an identity the
engine certifies failed, which would falsify one of the structural claims).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import indicator
from .asymptotics import alpha_limit, variance_limit
from .dsl import parse_statistic
from .errors import (
    DegenerateEvaluationError,
    DivergenceError,
    InternalConsistencyError,
    MalformedInputError,
    ParseError,
    ResourceLimitError,
)
from .oracle import class_moment, partitions
from .poly import to_json_dict, to_text

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_RESOURCE = 3
EXIT_CONSISTENCY = 4


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cycstat",
        description="Exact moment polynomials of regular permutation "
        "statistics by conjugacy class.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("expr", help="statistic expression, e.g. 'maj' or "
                       "'T(U=(1);V=(2);C={};f=1)'")
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.add_argument("--cache", metavar="PATH",
                       help="JSON disk cache for indicator polynomials")
        p.add_argument("--bell-cap", type=int, default=indicator.DEFAULT_BELL_CAP,
                       help="largest support size allowed (set-partition cap)")

    p = sub.add_parser("moment", help="symbolic d-th class moment")
    common(p)
    p.add_argument("-d", type=int, default=1, dest="d", help="moment order")
    p.add_argument("--lambda", dest="lam", metavar="a,b,c",
                   help="evaluate at this cycle type")
    p.add_argument("--variance", action="store_true",
                   help="report the class variance instead of the raw moment")

    p = sub.add_parser("limit", help="scaled asymptotic mean or variance")
    common(p)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--mean", action="store_true")
    group.add_argument("--variance", action="store_true")

    p = sub.add_parser("verify", help="compare against brute force on all "
                       "classes up to --nmax")
    common(p)
    p.add_argument("--nmax", type=int, default=6)
    p.add_argument("-d", type=int, default=1, dest="d", help="largest moment order")

    p = sub.add_parser("expand", help="print the canonical translate expansion")
    common(p)
    return parser


def _parse_lambda(text: str) -> tuple[int, ...]:
    try:
        lam = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise MalformedInputError(f"bad cycle type {text!r}; expected e.g. 4,2,1")
    if any(x < 1 for x in lam):
        raise MalformedInputError("cycle lengths must be positive")
    return tuple(sorted(lam, reverse=True))


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def _base_payload(args, stat) -> dict:
    return {
        "command": args.command,
        "statistic": args.expr,
        "power": stat.power,
        "shift": stat.shift,
        "size": stat.size,
    }


def _cmd_moment(args, stat) -> int:
    d = args.d
    if d < 1:
        raise MalformedInputError("-d must be >= 1")
    if args.variance:
        if d != 2:
            raise MalformedInputError("--variance requires -d 2")
        result = stat.variance(args.bell_cap)
        label = "variance"
    else:
        result = stat.moment(d, args.bell_cap)
        label = f"moment d={d}"
    lines = [f"{label}: {result}"]
    payload = _base_payload(args, stat)
    payload["result"] = result.to_json_dict()
    if not args.variance:
        bound = d * (stat.power + stat.shift)
        degree = result.clear_falling(d * stat.shift).graded_degree()
        lines.append(f"graded degree {degree} (bound {bound})")
        payload["result"] |= {"degree": str(degree), "bound": bound}
    if args.lam is not None:
        lam = _parse_lambda(args.lam)
        if args.variance:
            value = stat.variance_at(lam, args.bell_cap)
        else:
            value = stat.moment_at(lam, d, args.bell_cap)
        lines.append(f"value at lambda=({','.join(map(str, lam))}): {value}")
        payload["result"]["evaluations"] = [
            {"lambda": list(lam), "value": str(value)}
        ]
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_limit(args, stat) -> int:
    payload = _base_payload(args, stat)
    if args.variance:
        v1, v2 = variance_limit(stat, args.bell_cap)
        lines = [
            f"p={stat.power}",
            f"V1(alpha) = {to_text(v1, ('alpha',))}",
            f"V2(alpha) = {to_text(v2, ('alpha',))}",
        ]
        payload["result"] = {
            "numerator": {
                "V1": to_json_dict(v1, ("alpha",)),
                "V2": to_json_dict(v2, ("alpha",)),
            },
            "denominator": {"falling": []},
        }
    else:
        f = alpha_limit(stat, args.bell_cap)
        lines = [f"p={stat.power}, f(alpha) = {to_text(f, ('alpha',))}"]
        payload["result"] = {
            "numerator": to_json_dict(f, ("alpha",)),
            "denominator": {"falling": []},
        }
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_verify(args, stat) -> int:
    if args.nmax > 8:
        raise ResourceLimitError("--nmax is capped at 8")
    if args.d < 1:
        raise MalformedInputError("-d must be >= 1")
    failures = 0
    cells = []
    for n in range(1, args.nmax + 1):
        for lam in partitions(n):
            for d in range(1, args.d + 1):
                engine = stat.moment_at(lam, d, args.bell_cap)
                oracle = class_moment(stat.evaluate, lam, d)
                ok = engine == oracle
                failures += 0 if ok else 1
                cells.append((lam, d, ok, engine, oracle))
    lines = []
    for lam, d, ok, engine, oracle in cells:
        tag = "PASS" if ok else "FAIL"
        line = f"{tag} lambda=({','.join(map(str, lam))}) d={d}"
        if not ok:
            line += f" engine={engine} oracle={oracle}"
        lines.append(line)
    lines.append(f"{len(cells) - failures}/{len(cells)} cells passed")
    payload = _base_payload(args, stat)
    payload["result"] = {
        "evaluations": [
            {
                "lambda": list(lam),
                "d": d,
                "pass": ok,
                "engine": str(engine),
                "oracle": str(oracle),
            }
            for lam, d, ok, engine, oracle in cells
        ]
    }
    _emit(args, payload, lines)
    return EXIT_OK if failures == 0 else EXIT_FAIL


def _cmd_expand(args, stat) -> int:
    lines = [f"size={stat.size} shift={stat.shift} power={stat.power}"]
    lines.extend(str(t) for t in stat.translates)
    payload = _base_payload(args, stat)
    payload["result"] = {"translates": [str(t) for t in stat.translates]}
    _emit(args, payload, lines)
    return EXIT_OK


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.cache:
            indicator.configure_disk_cache(args.cache)
        stat = parse_statistic(args.expr)
        if args.command == "moment":
            return _cmd_moment(args, stat)
        if args.command == "limit":
            return _cmd_limit(args, stat)
        if args.command == "verify":
            return _cmd_verify(args, stat)
        return _cmd_expand(args, stat)
    except (ParseError, MalformedInputError, DegenerateEvaluationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (InternalConsistencyError, DivergenceError) as exc:
        print(f"consistency violation: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY


if __name__ == "__main__":
    sys.exit(main())
