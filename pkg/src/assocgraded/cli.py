"""Command-line entry point: ``assocgraded [script] [--corpus [filter]] ...``."""

import argparse
import sys

from .corpus import corpus_result
from .errors import ParseError, PrecisionExhausted, UnknownName
from .script import Options, parse_script, render_json, render_text, run_script
from .series import parse_field

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_PRECISION = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser():
    p = _Parser(prog="assocgraded",
                description="Associated graded rings, fiber cones and Gorenstein criteria "
                            "for one-dimensional semigroup and monomial rings.")
    p.add_argument("script", nargs="?", help="analysis script file, or - for stdin")
    p.add_argument("--field", default="q", help="q (rationals, default) or gf:<p>")
    p.add_argument("--precision", type=int, help="initial truncation horizon")
    p.add_argument("--degree-bound", type=int, default=6, help="top degree for presentations")
    p.add_argument("--window", type=int, help="slice window for quasi-Gorenstein checks")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized property runs")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--corpus", nargs="?", const="", metavar="FILTER",
                   help="run the built-in example corpus (optionally filtered, comma list)")
    p.add_argument("--self-test", action="store_true",
                   help="with --corpus: perturb one expected value; a mismatch is expected")
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    render = render_json if args.format == "json" else render_text
    try:
        field = parse_field(args.field)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    if args.corpus is not None:
        try:
            report, code = corpus_result(args.corpus or None, self_test=args.self_test)
        except KeyError as e:
            print(f"error: {e.args[0]}", file=sys.stderr)
            return EXIT_USAGE
        print(render(_jsonable(report)), file=out)
        return code
    if not args.script:
        print("error: give a script file or --corpus", file=sys.stderr)
        return EXIT_USAGE
    try:
        text = sys.stdin.read() if args.script == "-" else open(args.script, encoding="utf-8").read()
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    opts = Options(field=field, precision=args.precision, degree_bound=args.degree_bound,
                   window=args.window, seed=args.seed)
    try:
        script = parse_script(text)
        report, code = run_script(script, opts)
    except (ParseError, UnknownName) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except PrecisionExhausted as e:
        print(f"error: precision exhausted: {e}", file=sys.stderr)
        return EXIT_PRECISION
    report["options"] = {"field": args.field, "precision": args.precision,
                         "degree_bound": args.degree_bound, "window": args.window,
                         "seed": args.seed}
    print(render(report), file=out)
    return code


def _jsonable(report):
    from .script import jsonable
    return jsonable(report)


if __name__ == "__main__":
    raise SystemExit(main())
