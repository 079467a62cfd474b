"""
``paintcat`` command line.

Exit codes: 0 success (all laws pass), 1 some law failed, 2 usage, parse or
evaluation error. Standard output carries only JSON or formatted source.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .dsl import Environment, EvalError, PaintSyntaxError, eval_script, parse, pretty_print, render_final
from .laws import DEFAULT_SEED, LawCheckConfig, run_all
from .render import save_ppm

EXIT_OK, EXIT_LAW_FAILURE, EXIT_ERROR = 0, 1, 2


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="paintcat", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    def law_flags(p):
        p.add_argument("--seed", type=int, default=None,
                       help="law-check seed (default: $PAINTCAT_SEED or 42)")
        p.add_argument("--samples", type=_positive, default=None, help="instances per law")

    run = sub.add_parser("run", help="execute a stroke program")
    run.add_argument("script")
    law_flags(run)

    check = sub.add_parser("check", help="run the law suite on the built-in region pool")
    law_flags(check)

    render = sub.add_parser("render", help="execute a script and render its final word")
    render.add_argument("script")
    render.add_argument("-o", "--output", required=True)
    render.add_argument("--size", type=_positive, nargs=2, metavar=("W", "H"))
    law_flags(render)

    fmt = sub.add_parser("fmt", help="print a script in canonical form")
    fmt.add_argument("script")
    return parser


def _default_seed(flag: int | None) -> int:
    if flag is not None:
        return flag
    env = os.environ.get("PAINTCAT_SEED")
    if env is None:
        return DEFAULT_SEED
    try:
        return int(env)
    except ValueError:
        raise EvalError(f"PAINTCAT_SEED is not an integer: {env!r}") from None


def _load(path: str):
    return parse(Path(path).read_text(encoding="utf-8"))


def _report_syntax(path: str, err: PaintSyntaxError) -> None:
    for e in getattr(err, "errors", [err]):
        print(f"{path}:{e.line}:{e.column}: {e.message}", file=sys.stderr)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "check":
            cfg = LawCheckConfig(seed=_default_seed(args.seed), samples=args.samples or 64)
            report = run_all(cfg)
            print(report.dumps())
            return EXIT_OK if report.passed else EXIT_LAW_FAILURE

        script = _load(args.script)
        if args.command == "fmt":
            sys.stdout.write(pretty_print(script))
            return EXIT_OK

        env = Environment(default_seed=_default_seed(args.seed),
                          default_samples=args.samples or 64,
                          write_files=args.command == "run")
        result = eval_script(script, env)
        sys.stdout.write(result.stdout)
        if args.command == "render":
            path = save_ppm(render_final(result, args.size), args.output)
            print(f"wrote {path}", file=sys.stderr)
        else:
            for out in result.renders:
                print(f"wrote {out.path}", file=sys.stderr)
        return EXIT_OK if result.passed else EXIT_LAW_FAILURE
    except OSError as err:
        print(f"paintcat: {err}", file=sys.stderr)
    except PaintSyntaxError as err:
        _report_syntax(args.script, err)
    except EvalError as err:
        where = f"{args.script}:" if getattr(args, "script", None) else ""
        print(f"paintcat: {where}{err}", file=sys.stderr)
    return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
