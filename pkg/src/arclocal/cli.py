"""Command-line interface.

Subcommands: classify, decompose, generate, enumerate-verify, oracle.
Exit codes: 0 success; 1 domain rejection (input outside the required class,
disconnected input, or a failed verification), with the witness printed;
2 usage errors, malformed input files, and exceeded search caps.

The subset-search cap defaults to 12 vertices and can be set with
``--oracle-cap`` or the ARCLOCAL_ORACLE_CAP environment variable.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import render
from .decompose import (
    classify_arc_locally_semicomplete,
    decompose_in_semicomplete,
    decompose_out_semicomplete,
    verify_decomposition,
)
from .digraph import Digraph, format_edge_list, parse_edge_list
from .errors import (
    CapExceeded,
    ClassViolation,
    DisconnectedError,
    EdgeListError,
    InvariantViolation,
)
from .generators import (
    EXHAUSTIVE_CAP,
    RandomModel,
    brute_force_has_clique_cut,
    brute_force_is_perfect,
    digraph_from_index,
    make_extended_cycle,
    random_class_member,
    random_digraph,
)
from .patterns import classify
from .structure import (
    DEFAULT_ORACLE_CAP,
    find_induced_nonoriented_odd_cycle_ge5,
    find_induced_odd_directed_cycle_ge5,
)
from .sweeps import SWEEP_PROPERTIES, run_sweep

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2


def _read_digraph(path: str) -> Digraph:
    if path == "-":
        return parse_edge_list(sys.stdin.read())
    return parse_edge_list(Path(path).read_text())


def _resolve_cap(args) -> int:
    if args.oracle_cap is not None:
        return args.oracle_cap
    env = os.environ.get("ARCLOCAL_ORACLE_CAP")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise CapExceeded(f"ARCLOCAL_ORACLE_CAP must be an integer, got {env!r}") from None
    return DEFAULT_ORACLE_CAP


def cmd_classify(args) -> int:
    d = _read_digraph(args.input)
    report = classify(d)
    if args.format == "json":
        sys.stdout.write(render.dumps(render.class_report_dict(d, report)))
    elif args.format == "dot":
        sys.stdout.write(render.digraph_to_dot(d))
    else:
        sys.stdout.write(render.class_report_text(d, report))
    return EXIT_OK


def cmd_decompose(args) -> int:
    d = _read_digraph(args.input)
    cap = _resolve_cap(args)
    cls = args.cls
    try:
        if cls == "als":
            outcome = classify_arc_locally_semicomplete(d)
            if args.format == "json":
                sys.stdout.write(render.dumps(render.als_outcome_dict(outcome)))
            elif args.format == "dot":
                groups = (
                    {f"V2.{i}": p for i, p in enumerate(outcome.cert.parts)}
                    if outcome.cert is not None
                    else {}
                )
                sys.stdout.write(render.digraph_to_dot(d, groups))
            else:
                sys.stdout.write(render.als_outcome_text(outcome))
            return EXIT_OK
        dec = decompose_in_semicomplete(d) if cls == "in" else decompose_out_semicomplete(d)
    except ClassViolation as exc:
        if args.format == "json":
            sys.stdout.write(render.dumps(render.rejection_dict(cls, str(exc), exc.witness)))
        else:
            sys.stdout.write(f"rejected: {exc}\n")
        return EXIT_DOMAIN
    except DisconnectedError as exc:
        if args.format == "json":
            sys.stdout.write(render.dumps(render.rejection_dict(cls, str(exc), None)))
        else:
            sys.stdout.write(f"rejected: {exc}\n")
        return EXIT_DOMAIN
    ok, reason = verify_decomposition(d, dec, cap=cap)
    if not ok:
        raise InvariantViolation(f"decomposition failed verification: {reason}")
    if args.format == "json":
        sys.stdout.write(render.dumps(render.decomposition_dict(cls, dec)))
    elif args.format == "dot":
        sys.stdout.write(render.digraph_to_dot(d, render.decomposition_groups(dec)))
    else:
        sys.stdout.write(render.decomposition_text(cls, dec))
    return EXIT_OK


def cmd_generate(args) -> int:
    if args.kind == "extended-cycle":
        if args.sizes is None:
            raise UsageError("generate extended-cycle requires --sizes")
        sizes = _parse_sizes(args.sizes)
        d, _ = make_extended_cycle(sizes)
    elif args.kind == "random":
        if args.n is None:
            raise UsageError("generate random requires --n")
        d = random_digraph(
            RandomModel(n=args.n, p_arc=args.p_arc, p_digon=args.p_digon, seed=args.seed)
        )
    elif args.kind == "member":
        if args.n is None:
            raise UsageError("generate member requires --n")
        model = RandomModel(
            n=args.n, p_arc=args.p_arc, p_digon=args.p_digon, seed=args.seed
        )
        member = random_class_member(model, args.cls, max_tries=args.max_tries)
        if member is None:
            sys.stdout.write(
                f"no connected member of class '{args.cls}' found in "
                f"{args.max_tries} tries\n"
            )
            return EXIT_DOMAIN
        d = member
    elif args.kind == "from-index":
        if args.n is None or args.index is None:
            raise UsageError("generate from-index requires --n and --index")
        d = digraph_from_index(args.n, args.index)
    else:
        raise UsageError(f"unknown generate kind {args.kind!r}")
    text = render.digraph_to_dot(d) if args.format == "dot" else format_edge_list(d)
    if args.output is None:
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text)
    return EXIT_OK


def cmd_enumerate_verify(args) -> int:
    if args.n > EXHAUSTIVE_CAP:
        raise CapExceeded(
            f"exhaustive enumeration not computed: n={args.n} exceeds cap {EXHAUSTIVE_CAP}"
        )
    report = run_sweep(args.n, args.cls, args.property, jobs=args.jobs)
    sys.stdout.write(report.summary() + "\n")
    if report.outcomes:
        for outcome in sorted(report.outcomes):
            sys.stdout.write(f"  {outcome}: {report.outcomes[outcome]}\n")
    if not report.ok:
        for index, reason in report.failures[:20]:
            sys.stdout.write(f"  failure at index {index}: {reason}\n")
        return EXIT_DOMAIN
    return EXIT_OK


def cmd_oracle(args) -> int:
    d = _read_digraph(args.input)
    cap = _resolve_cap(args)
    if args.which == "perfect":
        ok, witness = brute_force_is_perfect(d.underlying_graph(), cap=cap)
        if ok:
            sys.stdout.write("perfect: yes\n")
        else:
            sys.stdout.write(f"perfect: no ({witness[0]} {list(witness[1])})\n")
    elif args.which == "clique-cut":
        cut = brute_force_has_clique_cut(d, cap=cap)
        if cut is None:
            sys.stdout.write("clique cut: none\n")
        else:
            sys.stdout.write(f"clique cut: {list(cut)}\n")
    elif args.which == "odd-cycle":
        cycle = find_induced_odd_directed_cycle_ge5(d, cap=cap)
        if cycle is None:
            sys.stdout.write("induced directed odd cycle (>= 5): none\n")
        else:
            sys.stdout.write(f"induced directed odd cycle (>= 5): {list(cycle)}\n")
    elif args.which == "nonoriented-odd-cycle":
        cycle = find_induced_nonoriented_odd_cycle_ge5(d, cap=cap)
        if cycle is None:
            sys.stdout.write("induced non-oriented odd cycle (>= 5): none\n")
        else:
            sys.stdout.write(f"induced non-oriented odd cycle (>= 5): {list(cycle)}\n")
    return EXIT_OK


class UsageError(Exception):
    pass


def _parse_sizes(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.replace(",", " ").split())
    except ValueError:
        raise UsageError(f"--sizes must be a comma-separated list of integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arclocal",
        description=(
            "Recognition and certified structural decomposition of "
            "arc-locally semicomplete digraphs."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_input=True):
        if with_input:
            p.add_argument("input", help="edge-list file, or '-' for stdin")
        p.add_argument(
            "--format", choices=("text", "json", "dot"), default="text",
            help="output format (default text)",
        )
        p.add_argument(
            "--oracle-cap", type=int, default=None,
            help="max vertices for subset searches (default 12 or ARCLOCAL_ORACLE_CAP)",
        )

    p = sub.add_parser("classify", help="report every class flag for a digraph")
    add_common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("decompose", help="structural decomposition with certificate")
    add_common(p)
    p.add_argument(
        "--class", dest="cls", choices=("in", "out", "als"), default="in",
        help="which class's decomposition to apply (default in)",
    )
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("generate", help="emit a digraph in edge-list form")
    p.add_argument(
        "kind", choices=("extended-cycle", "random", "member", "from-index"),
    )
    p.add_argument("--sizes", help="extended-cycle part sizes, e.g. '2,1,3,2,1'")
    p.add_argument("--n", type=int, default=None, help="vertex count")
    p.add_argument("--index", type=int, default=None, help="enumeration index")
    p.add_argument("--p-arc", type=float, default=0.25)
    p.add_argument("--p-digon", type=float, default=0.1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--class", dest="cls", choices=("in", "out", "als"), default="in")
    p.add_argument("--max-tries", type=int, default=64)
    p.add_argument("--format", choices=("text", "dot"), default="text")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser(
        "enumerate-verify",
        help="check a property over every digraph on n vertices",
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--class", dest="cls", choices=("in", "out", "als"), default="in")
    p.add_argument("--property", choices=SWEEP_PROPERTIES, default="main-theorem")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_enumerate_verify)

    p = sub.add_parser("oracle", help="run a brute-force oracle on a digraph")
    add_common(p)
    p.add_argument(
        "--which",
        choices=("perfect", "clique-cut", "odd-cycle", "nonoriented-odd-cycle"),
        default="perfect",
    )
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (EdgeListError, CapExceeded, UsageError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except FileNotFoundError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (ClassViolation, DisconnectedError, InvariantViolation) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
