"""Command line front end.

Exit codes: 0 success, 1 invalid input, 2 not graphic (or a failed
verification), 3 oracle budget exhausted, 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import sys

from .core import (
    HypergraphError,
    InvariantViolation,
    NotGraphic,
    TripartiteDegreeSequence,
    TripartiteHypergraph,
    complement_tripartite,
    verify_realization,
)
from .formats import (
    emit_hypergraph,
    format_degree_sequence,
    format_trace,
    gen_random_sequence,
    parse_degree_file,
    read_hypergraph,
)
from .general import realize_hypergraph
from .oracle import DEFAULT_NODES, DEFAULT_SECONDS, conjectured_constant, cubic_positive_roots, oracle_general, oracle_tripartite
from .tripartite import realize_tripartite_report

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NOT_GRAPHIC = 2
EXIT_BUDGET = 3
EXIT_INTERNAL = 4


class _Exit(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _write(text: str, path):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _emit_trace(args, text: str):
    if args.trace is None:
        return
    if args.trace == "-":
        sys.stderr.write(text)
    else:
        with open(args.trace, "w", encoding="utf-8") as fh:
            fh.write(text)


def _explain(args, lines):
    if args.explain:
        for line in lines:
            print(line, file=sys.stderr)


def _checked(h, seq):
    check = verify_realization(h, seq)
    if not check:
        raise InvariantViolation(f"refusing to write an unverified realization: {check}")
    return h


def cmd_realize(args):
    seq = parse_degree_file(args.input)
    if isinstance(seq, TripartiteDegreeSequence):
        raise _Exit(EXIT_INPUT, "realize expects a general sequence; use realize3 for A:/B:/C: files")
    h, plan = realize_hypergraph(seq)
    _checked(h, seq)
    _explain(args, plan.summary())
    if plan.phase4_trace is not None:
        _emit_trace(args, format_trace(plan.phase4_trace))
    _write(emit_hypergraph(h), args.output)


def cmd_realize3(args):
    seq = parse_degree_file(args.input)
    if not isinstance(seq, TripartiteDegreeSequence):
        raise _Exit(EXIT_INPUT, "realize3 expects a tripartite file with A:, B: and C: lines")
    h, report = realize_tripartite_report(seq)
    _checked(h, seq)
    spec = report.spec
    _explain(
        args,
        [
            f"extreme shape: n={spec.n} x={spec.x} d={spec.d}",
            f"extreme degrees: {' '.join(map(str, spec.degrees()))}",
            f"case: {report.tag.value}",
            f"flips: {len(report.trace)}",
        ],
    )
    _emit_trace(args, format_trace(report.trace))
    _write(emit_hypergraph(h), args.output)


def cmd_verify(args):
    h = read_hypergraph(args.hypergraph)
    seq = parse_degree_file(args.degrees)
    if isinstance(h, TripartiteHypergraph) != isinstance(seq, TripartiteDegreeSequence):
        raise _Exit(EXIT_INPUT, "hypergraph and degree file are of different kinds")
    check = verify_realization(h, seq)
    print(check)
    if not check:
        raise _Exit(EXIT_NOT_GRAPHIC, None)


def cmd_oracle(args):
    seq = parse_degree_file(args.input)
    run = oracle_tripartite if isinstance(seq, TripartiteDegreeSequence) else oracle_general
    result = run(seq, budget=args.budget, time_limit=args.time_limit)
    _explain(args, [f"nodes explored: {result.nodes_explored}"])
    if result.timed_out:
        raise _Exit(EXIT_BUDGET, f"budget exhausted after {result.nodes_explored} nodes")
    if not result.graphic:
        print("not graphic")
        raise _Exit(EXIT_NOT_GRAPHIC, None)
    print("graphic")
    if args.output:
        _write(emit_hypergraph(result.witness), args.output)


def cmd_complement(args):
    h = read_hypergraph(args.hypergraph)
    if not isinstance(h, TripartiteHypergraph):
        raise _Exit(EXIT_INPUT, "complement needs a tripartite hypergraph")
    _write(emit_hypergraph(complement_tripartite(h)), args.output)


def cmd_gen(args):
    seq = gen_random_sequence(args.mode, args.n, args.seed)
    _write(format_degree_sequence(seq), args.output)


def cmd_constant(args):
    if args.roots is not None:
        print(" ".join(f"{z:.12f}" for z in cubic_positive_roots(args.roots)))
    else:
        print(f"{conjectured_constant():.12f}")


def build_parser():
    p = argparse.ArgumentParser(prog="hypergraphic", description="Realize dense 3-uniform degree sequences.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, trace=False):
        sp.add_argument("-o", "--output", help="output file (default stdout)")
        sp.add_argument("--explain", action="store_true", help="print diagnostics to stderr")
        if trace:
            sp.add_argument(
                "--trace", nargs="?", const="-", default=None, metavar="PATH",
                help="write the flip trace (default stderr)",
            )

    sp = sub.add_parser("realize", help="realize a general sequence (n >= 45)")
    sp.add_argument("input")
    common(sp, trace=True)
    sp.set_defaults(func=cmd_realize)

    sp = sub.add_parser("realize3", help="realize a tripartite sequence")
    sp.add_argument("input")
    common(sp, trace=True)
    sp.set_defaults(func=cmd_realize3)

    sp = sub.add_parser("verify", help="check a hypergraph file against a degree file")
    sp.add_argument("hypergraph")
    sp.add_argument("degrees")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("oracle", help="exhaustive graphicality check for small instances")
    sp.add_argument("input")
    sp.add_argument("--budget", type=int, default=DEFAULT_NODES, help="node limit")
    sp.add_argument("--time-limit", type=float, default=DEFAULT_SECONDS, help="seconds")
    common(sp)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("complement", help="complement a tripartite hypergraph")
    sp.add_argument("hypergraph")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_complement)

    sp = sub.add_parser("gen", help="seeded random in-bounds instance")
    sp.add_argument("mode", choices=["tripartite", "general"])
    sp.add_argument("n", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("constant", help="print the double-root constant c")
    sp.add_argument("--roots", type=float, default=None, metavar="C", help="print the positive roots at this c instead")
    sp.set_defaults(func=cmd_constant)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except _Exit as exc:
        if exc.args[0]:
            print(f"error: {exc.args[0]}", file=sys.stderr)
        return exc.code
    except NotGraphic as exc:
        print(f"not graphic: {exc}", file=sys.stderr)
        return EXIT_NOT_GRAPHIC
    except HypergraphError as exc:
        print(f"invalid input ({exc.code}): {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except AssertionError as exc:  # InvariantViolation and construction asserts
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
