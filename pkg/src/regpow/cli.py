"""Command line: ``regpow classify | predict | verify | corpus``."""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from pathlib import Path

from . import harness
from .cache import ENV_VAR, NullCache, ResultCache, default_cache_dir
from .formulas import ClassOutOfScope, predict
from .graph import EdgeListParseError, GraphError, parse_edge_list
from .taxonomy import _jsonable, classify, decompose_structure

EXIT_OK, EXIT_MISMATCH, EXIT_PARSE = 0, 1, 2

_INLINE = re.compile(r"^[\s\d/#-]*$")


def read_input(arg):
    """A path, ``-`` for stdin, or an inline edge list using ``/`` as line separator."""
    if arg == "-":
        return parse_edge_list(sys.stdin.read())
    if os.path.isfile(arg):
        return parse_edge_list(Path(arg).read_text(encoding="utf-8"))
    if _INLINE.match(arg):
        return parse_edge_list(arg.replace("/", "\n"))
    raise FileNotFoundError(arg)


def _emit(obj):
    json.dump(obj, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _cache(args):
    if args.no_cache:
        return NullCache()
    return ResultCache(default_cache_dir(args.cache_dir))


def cmd_classify(args):
    g = read_input(args.input)
    out = {"schema_version": harness.SCHEMA_VERSION}
    for kind in _kinds(args):
        cls = classify(g, kind)
        rec = cls.to_json()
        if cls.is_aci:
            rec["structure"] = _jsonable(decompose_structure(g, cls))
        out[kind] = rec
    _emit(out)
    return EXIT_OK


def cmd_predict(args):
    g = read_input(args.input)
    out = {"schema_version": harness.SCHEMA_VERSION}
    for kind in _kinds(args):
        cls = classify(g, kind)
        rec = {"classification": cls.label}
        try:
            pred = predict(cls)
        except ClassOutOfScope as exc:
            rec.update(status="unavailable", reason=str(exc), table=[])
        else:
            rec["formula"] = pred.formula()
            if pred.note:
                rec["note"] = pred.note
            rec["table"] = pred.table(args.t_max)
        out[kind] = rec
    _emit(out)
    return EXIT_OK


def cmd_verify(args):
    g = read_input(args.input)
    cache = _cache(args)
    reports = []
    for kind in _kinds(args):
        rep, run = harness.verify_graph(g, kind, args.t_max, args.char, args.budget, cache,
                                        entry_id=args.id, checks=args.checks)
        rep["run"] = run
        reports.append(rep)
    _emit({"schema_version": harness.SCHEMA_VERSION, "reports": reports})
    code = harness.exit_code_for(reports)
    for rep in reports:
        for t in rep["mismatches"]:
            row = next(r for r in rep["powers"] if r["t"] == t)
            print(f"MISMATCH {rep['kind']} t={t}: predicted {row['predicted']}, "
                  f"oracle {row['oracle']} ({row['source']})", file=sys.stderr)
    return code


def cmd_corpus(args):
    summary, entries, info = harness.run_corpus(
        args.dir, kinds=_kinds(args), t_max=args.t_max, char=args.char, budget=args.budget,
        jobs=args.jobs, cache_dir=None if args.no_cache else default_cache_dir(args.cache_dir),
        output=args.output, checks=args.checks)
    print(harness.summary_table(summary))
    return EXIT_MISMATCH if summary["mismatches"] else EXIT_OK


def _kinds(args):
    return ("binomial", "parity") if args.ideal == "both" else (args.ideal,)


def build_parser():
    p = argparse.ArgumentParser(
        prog="regpow",
        description="Classify almost complete intersection edge ideals and check "
                    "regularity formulas for their powers.",
        epilog=f"The result cache directory defaults to ${ENV_VAR} or ./.regpow-cache.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, default_ideal="binomial"):
        sp.add_argument("--ideal", choices=["binomial", "parity", "both"], default=default_ideal)

    def engine(sp):
        sp.add_argument("--char", type=int, default=harness.DEFAULT_CHAR,
                        help="field characteristic (prime)")
        sp.add_argument("--budget", type=float, default=harness.DEFAULT_BUDGET,
                        help="seconds per resolution job")
        sp.add_argument("--cache-dir", default=None)
        sp.add_argument("--no-cache", action="store_true")
        sp.add_argument("--checks", choices=["none", "basic", "full"], default="basic",
                        help="hypothesis checks to run alongside the oracle")

    sp = sub.add_parser("classify", help="classify a graph")
    sp.add_argument("input", help="edge-list file, '-' or inline list like '3 3 / 1 2 / 2 3 / 1 3'")
    common(sp, "both")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("predict", help="tabulate predicted regularities")
    sp.add_argument("input")
    common(sp)
    sp.add_argument("--t-max", type=int, default=3)
    sp.set_defaults(func=cmd_predict)

    sp = sub.add_parser("verify", help="compare predictions with the exact oracle")
    sp.add_argument("input")
    common(sp)
    sp.add_argument("--t-max", type=int, default=None)
    sp.add_argument("--id", default="graph")
    engine(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("corpus", help="verify every edge-list file of a directory")
    sp.add_argument("dir")
    common(sp, "both")
    sp.add_argument("--t-max", type=int, default=None)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--output", default=None, help="directory for per-entry JSON reports")
    engine(sp)
    sp.set_defaults(func=cmd_corpus)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    if getattr(args, "t_max", None) is not None and args.t_max < 1:
        print("error: --t-max must be at least 1", file=sys.stderr)
        return EXIT_PARSE
    try:
        return args.func(args)
    except EdgeListParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except FileNotFoundError as exc:
        print(f"error: no such file: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
