"""Command line: verify, replay, show."""

from __future__ import annotations

import argparse
import json
import sys

from ..involutions import algebra_from_doc, subalgebra_from_doc
from .config import ConfigError, parse_config
from .report import replay, report_json, run_suite

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


def _load_json(arg: str):
    """Inline JSON or a path to a JSON file."""
    text = arg if arg.lstrip().startswith("{") else open(arg, encoding="utf-8").read()
    return json.loads(text)


def cmd_verify(args) -> int:
    try:
        with open(args.config, encoding="utf-8") as fh:
            cfg = parse_config(fh.read())
    except OSError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    if args.seed is not None:
        cfg.seed = args.seed % 2**64
    def progress(name, s):
        print(f"{name}: {s['instances']} instances, {s['passes']} passed, {len(s['failures'])} failures, "
              f"{s['not_found']} not found, {s['skipped']} skipped ({s['wall_time']:.1f}s)", flush=True)

    report = run_suite(cfg, jobs=args.jobs, progress=progress)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(report_json(report) + "\n")
    return EXIT_FAIL if report["total_failures"] else EXIT_OK


def cmd_replay(args) -> int:
    try:
        failure = _load_json(args.failure)
    except (OSError, ValueError) as exc:
        print(f"cannot read failure: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        reproduced, results = replay(failure)
    except ValueError as exc:
        print(f"cannot replay: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    for r in results:
        print(f"{r.status:9} {r.name} {r.detail}".rstrip())
    print(("reproduced: " if reproduced else "not reproduced: ") + f"{failure['suite']}/{failure['check']}")
    return EXIT_FAIL if reproduced else EXIT_OK


def _fmt_matrix(M, indent="    "):
    return "\n".join(indent + line for line in M.pretty().splitlines())


def describe(A, bases=True) -> str:
    F = A.field
    lines = [f"field      {F!r}", f"model      {json.dumps(A.model, sort_keys=True)}",
             f"ambient    {A.n}x{A.n}", f"dim_F A    {A.dim}", f"kind       {A.kind}", f"type       {A.type}",
             f"degree     {A.degree}", f"capacity   {A.capacity}"]
    for name in ("symm", "skew", "symd", "syms"):
        space = getattr(A, name)
        lines.append(f"dim {name:6} {space.dim}")
        if bases:
            for b in A.elements_of(space):
                lines.append(_fmt_matrix(b))
                lines.append("")
    return "\n".join(lines)


def cmd_show(args) -> int:
    try:
        doc = _load_json(args.instance)
        if doc.get("schema") == "neatalg.failure/1":
            doc = doc["instance"]
            if doc is None:
                print("failure record has no algebra instance", file=sys.stderr)
                return EXIT_CONFIG
        if doc.get("schema") == "neatalg.subalgebra/1":
            L = subalgebra_from_doc(doc)
            print(describe(L.parent, bases=not args.brief))
            print(f"subalgebra dim {L.dim}, flags {json.dumps(L.flags(), sort_keys=True)}")
            for b in L.basis:
                print(_fmt_matrix(b))
                print()
            return EXIT_OK
        A = algebra_from_doc(doc)
    except (OSError, ValueError, KeyError) as exc:
        print(f"cannot read instance: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    print(describe(A, bases=not args.brief))
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="neatalg", description="Algebras with involution and neat subalgebras.")
    sub = p.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="run property suites over an instance grid")
    v.add_argument("--config", required=True)
    v.add_argument("--seed", type=int)
    v.add_argument("--report")
    v.add_argument("--jobs", type=int, default=1, help="worker processes (results do not depend on this)")
    v.set_defaults(func=cmd_verify)
    r = sub.add_parser("replay", help="re-run the suite behind a failure record")
    r.add_argument("--failure", required=True, help="failure JSON, inline or as a path")
    r.set_defaults(func=cmd_replay)
    s = sub.add_parser("show", help="pretty-print an algebra, its symmetrized spaces and capacity")
    s.add_argument("--instance", required=True, help="algebra, subalgebra or failure JSON, inline or as a path")
    s.add_argument("--brief", action="store_true", help="dimensions only")
    s.set_defaults(func=cmd_show)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code else EXIT_OK
    return args.func(args)
