"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 validation or shape error,
3 I/O error. A path of ``-`` reads standard input.
"""

from __future__ import annotations

import argparse
import sys

from .determinant import adjoint, determinant
from .errors import IvifError
from .graph_io import build_matrix, parse_graph, read_matrix, write_matrix, write_value
from .matrix import MATRIX_OPERATORS, SPECIAL_KINDS, complement, make_special, matrix_eq, matrix_le, transpose

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_IO = 3

UNARY_OPERATORS = {"complement": complement, "transpose": transpose}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for invalid data here
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as f:
        return f.read()


def _emit(text, out):
    if out is None:
        sys.stdout.write(text + "\n")
    else:
        with open(out, "w", encoding="utf-8") as f:
            f.write(text + "\n")


def _load(path):
    return read_matrix(_read_text(path))


def cmd_validate(args):
    a = _load(args.matrix)
    print(f"ok: {a.rows}x{a.cols} matrix", file=sys.stderr)
    return EXIT_OK


def cmd_apply(args):
    a, b = _load(args.a), _load(args.b)
    _emit(write_matrix(MATRIX_OPERATORS[args.op](a, b)), args.output)
    return EXIT_OK


def cmd_unary(args):
    _emit(write_matrix(UNARY_OPERATORS[args.op](_load(args.a))), args.output)
    return EXIT_OK


def cmd_det(args):
    _emit(write_value(determinant(_load(args.a))), None)
    return EXIT_OK


def cmd_adj(args):
    _emit(write_matrix(adjoint(_load(args.a))), args.output)
    return EXIT_OK


def cmd_cmp(args):
    a, b = _load(args.a), _load(args.b)
    if args.relation == "le":
        result = matrix_le(a, b)
        if not result and not matrix_le(b, a):
            print("note: matrices are incomparable", file=sys.stderr)
    else:
        result = matrix_eq(a, b)
    print("true" if result else "false")
    return EXIT_OK


def cmd_from_graph(args):
    g = parse_graph(_read_text(args.edges))
    _emit(write_matrix(build_matrix(g)), args.output)
    return EXIT_OK


def cmd_ident(args):
    if args.size < 1:
        raise _UsageError("--size must be a positive integer")
    _emit(write_matrix(make_special(args.kind, args.size)), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ivifm", description="Interval-valued intuitionistic fuzzy matrix tool")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def output(p):
        p.add_argument("-o", "--output", help="write the result here instead of standard output")

    p = sub.add_parser("validate", help="check a matrix file against every invariant")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("apply", help="elementwise binary operator")
    p.add_argument("--op", required=True, choices=sorted(MATRIX_OPERATORS))
    p.add_argument("a")
    p.add_argument("b")
    output(p)
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("unary", help="complement or transpose")
    p.add_argument("--op", required=True, choices=sorted(UNARY_OPERATORS))
    p.add_argument("a")
    output(p)
    p.set_defaults(func=cmd_unary)

    p = sub.add_parser("det", help="print the determinant")
    p.add_argument("a")
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("adj", help="adjoint matrix")
    p.add_argument("a")
    output(p)
    p.set_defaults(func=cmd_adj)

    p = sub.add_parser("cmp", help="compare two matrices; prints true or false")
    p.add_argument("--relation", required=True, choices=["le", "eq"])
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_cmp)

    p = sub.add_parser("from-graph", help="build the matrix of an edge-list CSV")
    p.add_argument("edges")
    output(p)
    p.set_defaults(func=cmd_from_graph)

    p = sub.add_parser("ident", help="unit or null matrix")
    p.add_argument("--kind", required=True, choices=SPECIAL_KINDS)
    p.add_argument("--size", required=True, type=int)
    output(p)
    p.set_defaults(func=cmd_ident)

    return parser


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except IvifError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (OSError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
