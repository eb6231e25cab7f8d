"""Command-line entry point: ``ringlab analyze|check|hull|scan``.

Exit codes: 0 all checks pass, 1 a theorem-suite failure, 2 input, parse
or output error, 3 cutoff skips without failures.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace

from .corpus import default_corpus, load_corpus
from .errors import EnumerationCutoffExceeded, IoError, RingLabError, SizeCutoffExceeded
from .limits import Limits, use_limits
from .report import emit_report, hull_json
from .suites import RING_LEVEL_SUITES, analyze, run_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_SKIP = 0, 1, 2, 3


def parse_limits(text: str | None, base: Limits | None = None) -> Limits:
    """``module_cutoff=N,hom_cutoff=M`` on top of the environment defaults."""
    lim = base or Limits.from_env()
    if not text:
        return lim
    fields = {"module_cutoff": int, "hom_cutoff": int, "subquotient_depth": str}
    for item in text.split(","):
        key, sep, value = item.partition("=")
        key = key.strip().replace("-", "_")
        if not sep or key not in fields:
            raise argparse.ArgumentTypeError(f"bad limit {item!r}; use module_cutoff=N,hom_cutoff=N")
        try:
            lim = replace(lim, **{key: fields[key](value.strip())})
        except ValueError as exc:
            raise argparse.ArgumentTypeError(f"bad limit {item!r}: {exc}") from exc
    if lim.subquotient_depth != "R+R":
        raise argparse.ArgumentTypeError("only subquotient_depth=R+R is supported")
    return lim


def _progress(name, result):
    print(f"  {name:<28} {result.timing[name]:7.1f}s", file=sys.stderr, flush=True)


def _corpus(arg: str, limits: Limits):
    if arg == "default":
        return default_corpus(limits)
    try:
        with open(arg, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise RingLabError(f"cannot read corpus file {arg}: {exc.strerror}") from exc
    return load_corpus(text, limits)


def cmd_analyze(args) -> int:
    suites = args.suite or list(RING_LEVEL_SUITES)
    report = analyze(args.spec, args.limits, suites, module=args.module)
    emit_report(report, args.format, args.out)
    statuses = [status for _, status, _ in report.theorem_results]
    if "fail" in statuses:
        return EXIT_FAIL
    return EXIT_SKIP if "skip" in statuses else EXIT_OK


def cmd_check(args) -> int:
    corpus = _corpus(args.corpus, args.limits)
    result = run_suite(corpus, args.suite or "all", args.limits, progress=None if args.quiet else _progress)
    emit_report(result, args.format, args.out)
    return result.exit_code


def cmd_hull(args) -> int:
    from .homological import injective_hull
    from .parse import build_module, build_ring

    with use_limits(args.limits):
        ring = build_ring(args.ring)
        M = build_module(ring, args.module)
        doc = hull_json(args.ring, args.module, injective_hull(M))
    emit_report(doc, args.format, args.out)
    return EXIT_OK


def cmd_scan(args) -> int:
    from .predicate import parse_predicate, scan

    parse_predicate(args.predicate)
    corpus = _corpus(args.corpus, args.limits)
    result = scan(corpus, args.predicate, progress=None if args.quiet else _progress)
    emit_report(result, args.format, args.out)
    return result.exit_code


def _suite_list(text: str):
    return "all" if text == "all" else [s.strip() for s in text.split(",") if s.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ringlab", description="Torsion theories over finite rings.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, corpus=False):
        p.add_argument("--limits", type=parse_limits, default=None, help="module_cutoff=N,hom_cutoff=N")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", default=None, help="output path (default stdout)")
        if corpus:
            p.add_argument("--corpus", default="default", help="'default' or a file of ring specs")
            p.add_argument("--quiet", action="store_true", help="no per-ring progress on stderr")

    p = sub.add_parser("analyze", help="classify one ring")
    p.add_argument("spec")
    p.add_argument("--module", default=None, help="also report predicates of this module")
    p.add_argument("--suite", type=_suite_list, default=None,
                   help=f"suites to run (default: {','.join(RING_LEVEL_SUITES)}; 'all' for every suite)")
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("check", help="run theorem suites over a ring corpus")
    p.add_argument("--suite", type=_suite_list, default="all")
    common(p, corpus=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("hull", help="injective hull of a module")
    p.add_argument("ring")
    p.add_argument("--module", required=True)
    common(p)
    p.set_defaults(func=cmd_hull)

    p = sub.add_parser("scan", help="rings of a corpus satisfying a classifier predicate")
    p.add_argument("--predicate", required=True)
    common(p, corpus=True)
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.limits is None:
        args.limits = Limits.from_env()
    try:
        return args.func(args)
    except (SizeCutoffExceeded, EnumerationCutoffExceeded) as exc:
        print(f"ringlab: skipped: {exc}", file=sys.stderr)
        return EXIT_SKIP
    except IoError as exc:
        print(f"ringlab: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except RingLabError as exc:
        print(f"ringlab: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
