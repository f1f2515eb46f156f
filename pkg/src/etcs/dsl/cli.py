"""``etcs`` command: run a script and/or the full axiom suite.

Exit status: 0 when everything passed, 1 when an assert or check failed,
2 on a parse or execution error.
"""

from __future__ import annotations

import argparse
import sys

from ..kernel import MUTATIONS
from ..report import render_report
from ..verifier import check_all
from .interp import RunConfig, execute, exit_status
from .parser import parse_with_diagnostics


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return n


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="etcs", description="Run .etcs scripts and verify the set axioms on small instances.")
    p.add_argument("script", nargs="?", help="script path, or - for standard input")
    p.add_argument("--check-axioms", action="store_true", help="run every axiom and derived check after the script")
    p.add_argument("--size", type=_positive, default=3, help="default size limit for checks (default 3)")
    p.add_argument("--nat-bound", type=_positive, default=10_000, help="bound on the natural numbers (default 10000)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--seed", type=int, default=None, help="sample instances above the exhaustive sizes with this seed")
    p.add_argument("--samples", type=_positive, default=64, help="sample size per hom-set when --seed is given")
    p.add_argument("--jobs", type=_positive, default=1, help="worker processes for --check-axioms")
    p.add_argument("--mutation", choices=sorted(MUTATIONS), help="corrupt one construction for --check-axioms")
    p.add_argument("--timing", action="store_true", help="include wall-clock times (output is then not reproducible)")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.script is None and not args.check_axioms:
        print("etcs: nothing to do; give a script or --check-axioms", file=sys.stderr)
        return 2
    cfg = RunConfig(
        nat_bound=args.nat_bound,
        size=args.size,
        format=args.format,
        seed=args.seed,
        samples=args.samples,
        workers=args.jobs,
    )
    reports, diags = [], []
    if args.script is not None:
        path = "<stdin>" if args.script == "-" else args.script
        try:
            if args.script == "-":
                source = sys.stdin.read()
            else:
                with open(args.script, encoding="utf-8") as fh:
                    source = fh.read()
        except OSError as e:
            print(f"etcs: cannot read {args.script}: {e.strerror}", file=sys.stderr)
            return 2
        script, diags = parse_with_diagnostics(source)
        if script is not None:
            reports, diags = execute(script, cfg)
        for d in diags:
            print(d.format(path), file=sys.stderr)
    if args.check_axioms and exit_status([], diags) == 0:
        reports += check_all(
            args.size, mutation=args.mutation, seed=args.seed, samples=args.samples, workers=args.jobs
        )
    sys.stdout.write(render_report(reports, args.format, timing=args.timing))
    return exit_status(reports, diags)


if __name__ == "__main__":
    sys.exit(main())
