"""Command-line front end.

All machine output goes to stdout as JSON or the fixed edgelist/DOT formats;
human-readable messages go to stderr. Exit codes: 0 success, 1 usage error,
2 validation error (bad labels, bad parameters, regime errors), 3 internal
consistency failure or a failed verification check.
"""

from __future__ import annotations

import argparse
import io
import json
import os
import re
import sys
from typing import BinaryIO

from .cliques import (
    Clique,
    ClassificationKind,
    classify,
    clique_number,
    clique_partition,
    clique_partition_number,
    enumerate_max_cliques,
    enumerate_min_cliques,
    extend_to_maximal,
)
from .combinat import parse_label, validate_label
from .errors import InternalConsistencyError, ValidationError
from .graph import DEFAULT_EXPORT_CAP, JohnsonParams, are_adjacent, export
from .oracle import DEFAULT_MATERIALIZE_CAP, verify_range

_RANGE_RE = re.compile(r"(\d+)\.\.(\d+)\Z")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


def _parse_range(text: str) -> range:
    match = _RANGE_RE.match(text)
    if match is None:
        raise argparse.ArgumentTypeError(f"expected a range like 2..4, got {text!r}")
    lo, hi = int(match.group(1)), int(match.group(2))
    return range(lo, hi + 1)


def _env_cap(default: int) -> int:
    raw = os.environ.get("JOHNSON_MAX_VERTICES")
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValidationError(f"JOHNSON_MAX_VERTICES must be an integer, got {raw!r}")


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def build_parser() -> _Parser:
    parser = _Parser(prog="johnson-cliques", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_params(p: _Parser) -> None:
        p.add_argument("--n", type=int, required=True, help="ground-set size")
        p.add_argument("--m", type=int, required=True, help="label size")

    p = sub.add_parser("gen", help="export the graph")
    add_params(p)
    p.add_argument("--format", required=True, choices=("dot", "json", "edgelist"))
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("adj", help="test adjacency of two labels")
    add_params(p)
    p.add_argument("labels", nargs=2, metavar="LABEL")
    p.set_defaults(func=_cmd_adj)

    p = sub.add_parser("cliques", help="stream maximal cliques")
    add_params(p)
    p.add_argument("--class", dest="clique_class", choices=("min", "max", "all"), default="all")
    p.add_argument("--format", choices=("json",), default="json")
    p.set_defaults(func=_cmd_cliques)

    p = sub.add_parser("classify", help="classify a clique")
    add_params(p)
    p.add_argument("labels", nargs="+", metavar="LABEL")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("extend", help="maximal extensions of a clique")
    add_params(p)
    p.add_argument("labels", nargs="+", metavar="LABEL")
    p.set_defaults(func=_cmd_extend)

    p = sub.add_parser("partition", help="edge partition into one clique class")
    add_params(p)
    p.set_defaults(func=_cmd_partition)

    p = sub.add_parser("number", help="clique number and clique partition number")
    add_params(p)
    p.set_defaults(func=_cmd_number)

    p = sub.add_parser("verify", help="check closed forms against the brute-force oracle")
    p.add_argument("--m-range", type=_parse_range, required=True, metavar="A..B")
    p.add_argument("--n-range", type=_parse_range, required=True, metavar="C..D")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_verify)

    return parser


def _cmd_gen(args, out: BinaryIO, tout, terr) -> int:
    params = JohnsonParams(args.n, args.m)
    cap = _env_cap(DEFAULT_EXPORT_CAP)
    if args.out:
        with open(args.out, "wb") as sink:
            export(params, args.format, sink, max_vertices=cap)
    else:
        export(params, args.format, out, max_vertices=cap)
    return 0


def _cmd_adj(args, out, tout, terr) -> int:
    params = JohnsonParams(args.n, args.m)
    u, v = (parse_label(text) for text in args.labels)
    validate_label(u, params.n, params.m)
    validate_label(v, params.n, params.m)
    tout.write("true\n" if are_adjacent(u, v) else "false\n")
    return 0


def _cmd_cliques(args, out, tout, terr) -> int:
    params = JohnsonParams(args.n, args.m)
    if args.clique_class == "min":
        streams = [enumerate_min_cliques(params)]
    elif args.clique_class == "max":
        streams = [enumerate_max_cliques(params)]
    elif params.degenerate:
        # "all" lists the graph's actual maximal cliques, which in the
        # degenerate regime is the class-min family alone.
        streams = [enumerate_min_cliques(params)]
    else:
        streams = [enumerate_min_cliques(params), enumerate_max_cliques(params)]
    for stream in streams:
        for h in stream:
            tout.write(_dumps(h.to_dict()) + "\n")
    return 0


def _parse_clique(args) -> Clique:
    params = JohnsonParams(args.n, args.m)
    return Clique.from_labels((parse_label(text) for text in args.labels), params)


def _cmd_classify(args, out, tout, terr) -> int:
    result = classify(_parse_clique(args))
    if result.kind is ClassificationKind.SINGLETON:
        payload = {"kind": result.kind.value}
    elif result.kind is ClassificationKind.EDGE_BOTH:
        h_min, h_max = result.extensions
        payload = {"kind": result.kind.value, "min": h_min.to_dict(), "max": h_max.to_dict()}
    else:
        payload = {**result.extensions[0].to_dict(), "kind": result.kind.value}
    tout.write(_dumps(payload) + "\n")
    return 0


def _cmd_extend(args, out, tout, terr) -> int:
    extensions = extend_to_maximal(_parse_clique(args))
    tout.write(_dumps([h.to_dict() for h in extensions]) + "\n")
    return 0


def _cmd_partition(args, out, tout, terr) -> int:
    params = JohnsonParams(args.n, args.m)
    tout.write(_dumps(clique_partition(params).to_dict()) + "\n")
    return 0


def _cmd_number(args, out, tout, terr) -> int:
    params = JohnsonParams(args.n, args.m)
    cp = clique_partition_number(params)
    payload = {
        "n": params.n,
        "m": params.m,
        "clique_number": clique_number(params),
        "clique_partition_number": cp,
        "degenerate": params.degenerate,
    }
    if params.degenerate:
        payload["note"] = (
            f"degenerate regime: the graph is complete; the partition formula value {cp} "
            f"counts one part per edge, while a single clique (the whole graph) already "
            f"covers every edge"
        )
    tout.write(_dumps(payload) + "\n")
    return 0


def _cmd_verify(args, out, tout, terr) -> int:
    cap = _env_cap(DEFAULT_MATERIALIZE_CAP)
    reports = verify_range(args.m_range, args.n_range, jobs=args.jobs, max_vertices=cap)
    for report in reports:
        tout.write(_dumps(report.to_dict()) + "\n")
    passed = sum(1 for r in reports if r.passed)
    elapsed = sum(r.elapsed_seconds for r in reports)
    terr.write(f"{passed}/{len(reports)} pairs passed in {elapsed:.2f}s\n")
    return 0 if passed == len(reports) else 3


def run(argv: list[str], out: BinaryIO, err: BinaryIO) -> int:
    """Parse ``argv`` and run one subcommand, writing to the given byte streams."""
    tout = io.TextIOWrapper(out, encoding="utf-8", newline="\n", write_through=True)
    terr = io.TextIOWrapper(err, encoding="utf-8", newline="\n", write_through=True)
    try:
        try:
            args = build_parser().parse_args(argv)
            return args.func(args, out, tout, terr)
        except _UsageError as exc:
            terr.write(f"usage error: {exc}\n")
            return 1
        except SystemExit as exc:  # argparse --help
            return 0 if exc.code in (0, None) else 1
        except ValidationError as exc:
            terr.write(f"error: {exc}\n")
            return 2
        except InternalConsistencyError as exc:
            terr.write(f"internal consistency failure: {exc}\n")
            return 3
    finally:
        tout.flush()
        terr.flush()
        tout.detach()
        terr.detach()


def main() -> None:
    raise SystemExit(run(sys.argv[1:], sys.stdout.buffer, sys.stderr.buffer))
