"""Command-line front end.

Exit codes: 0 success, 1 theorem failure, 2 input/usage error, 3 cap
exceeded where an exact answer was required.
"""

from __future__ import annotations

import argparse
import json
import sys

from .caps import DEFAULT_CAPS, Caps
from .errors import CapExceeded, OrderConvexError
from .convexity import ConvexityKind, ConvexitySpace, applicable_kinds
from .dot import export_dot
from .generators import generate, GeneratorSpec, _FAMILIES
from .geometry import convex_geometry
from .invariants import invariant_profile
from .io import load_poset, save_poset
from .report import analyze
from .semilattice import try_join_structure
from .separation import separation_profile
from .sweeps import run_sweep


def _build_caps(args):
    return Caps(
        max_n=DEFAULT_CAPS.max_n,
        subsets=args.cap_subsets if args.cap_subsets else DEFAULT_CAPS.subsets,
        convex_sets=args.cap_convex_sets if args.cap_convex_sets else DEFAULT_CAPS.convex_sets,
    )


def _load_structure(source, caps):
    """A file path, or a generator spec like ``gen:boolean:3`` / ``chain:4``."""
    head = source.split(":", 1)[0]
    if source.startswith("gen:") or head in _FAMILIES or head == "product":
        return generate(GeneratorSpec.parse(source), caps)
    poset = load_poset(source, caps)
    try:
        return try_join_structure(poset)
    except OrderConvexError:
        return poset


def _parse_kinds(text, structure):
    if not text:
        return applicable_kinds(structure)
    return [ConvexityKind.from_string(k.strip()) for k in text.split(",")]


def _emit(data, path):
    payload = json.dumps(data, indent=2, ensure_ascii=False, sort_keys=True)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
    else:
        print(payload)


def _cmd_analyze(args):
    caps = _build_caps(args)
    structure = _load_structure(args.source, caps)
    kinds = _parse_kinds(args.kinds, structure)
    report = analyze(
        structure, kinds, instance_id=args.source, caps=caps, seed=args.seed
    )
    _emit(report.to_dict(), args.json)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(export_dot(structure))
    return 1 if report.any_failure else 0


def _section_command(section):
    def run(args):
        caps = _build_caps(args)
        structure = _load_structure(args.source, caps)
        kinds = _parse_kinds(args.kinds, structure)
        out = {}
        for kind in kinds:
            cs = ConvexitySpace(structure, kind)
            if section == "invariants":
                out[kind.value] = invariant_profile(cs, caps).to_dict()
            elif section == "geometry":
                out[kind.value] = convex_geometry(cs, caps).to_dict()
            else:
                out[kind.value] = separation_profile(cs, caps).to_dict()
        _emit({"schema": "orderconvex/1", section: out}, args.json)
        return 0

    return run


def _cmd_theorems(args):
    caps = _build_caps(args)
    max_n = 6
    if args.sweep:
        key, _, value = args.sweep.partition("=")
        if key != "n":
            raise OrderConvexError("--sweep expects n=<max>")
        max_n = int(value)
    reports, findings = run_sweep(
        max_n=max_n, seeds=args.seeds, seed_base=args.seed, caps=caps
    )
    failures = [r for r in reports if r.failed]
    _emit(
        {
            "schema": "orderconvex/1",
            "theorems": [r.to_dict() for r in reports] if args.verbose else len(reports),
            "failures": [r.to_dict() for r in failures],
            "findings": [r.to_dict() for r in findings],
        },
        args.json,
    )
    return 1 if failures else 0


def _cmd_gen(args):
    caps = _build_caps(args)
    structure = generate(GeneratorSpec.parse(args.spec), caps)
    poset = getattr(structure, "poset", structure)
    if args.output:
        save_poset(poset, args.output)
    else:
        from .io import poset_to_text

        sys.stdout.write(poset_to_text(poset))
    return 0


def _add_common(parser):
    parser.add_argument("--cap-subsets", type=int, default=None)
    parser.add_argument("--cap-convex-sets", type=int, default=None)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--json", default=None, help="write the JSON report here")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="orderconvex",
        description="Convexity analysis on finite posets, semilattices and lattices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for one instance")
    p.add_argument("source", help="poset file or generator spec (e.g. gen:boolean:3)")
    p.add_argument("--kinds", default=None, help="comma-separated convexity kinds")
    p.add_argument("--dot", default=None, help="write a DOT rendering here")
    _add_common(p)
    p.set_defaults(func=_cmd_analyze)

    for section in ("invariants", "geometry", "separation"):
        p = sub.add_parser(section, help=f"{section} section only")
        p.add_argument("source")
        p.add_argument("--kinds", default=None)
        _add_common(p)
        p.set_defaults(func=_section_command(section))

    p = sub.add_parser("theorems", help="random sweep of the theorem suites")
    p.add_argument("--sweep", default=None, metavar="n=MAX", help="max instance size")
    p.add_argument("--seeds", type=int, default=25, help="number of random instances")
    p.add_argument("--verbose", action="store_true", help="emit every report")
    _add_common(p)
    p.set_defaults(func=_cmd_theorems)

    p = sub.add_parser("gen", help="generate an instance file")
    p.add_argument("spec", help="generator spec, e.g. chain:4")
    p.add_argument("-o", "--output", default=None)
    _add_common(p)
    p.set_defaults(func=_cmd_gen)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (OrderConvexError, OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
