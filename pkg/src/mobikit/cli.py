"""Command-line interface.

    mobi check FILE [--samples N] [--seed S] [--exhaustive] [--affine]
                    [--properties] [--report text|json]
    mobi catalog list
    mobi catalog check NAME [--param k=v]... [check flags]
    mobi convert space-to-module NAME [--origin EXPR] [--param k=v]... [flags]
    mobi convert module-to-space NAME [--param k=v]... [flags]
    mobi roundtrip NAME [--param k=v]... [--samples N] [--seed S]
    mobi search --size N [--distinct-constants] [--limit K]
    mobi trace NAME --from EXPR --to EXPR --steps N --out PATH [--param k=v]...

Exit codes: 0 all checks passed, 1 a check found a counterexample,
2 usage, parse, or configuration errors (diagnostics go to stderr).
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import replace
from fractions import Fraction
from pathlib import Path

from . import catalog as _catalog
from .algebra import (AmbiguousTwoError, MobiAlgebra, NoHalfError,
                      check_algebra, check_properties)
from .carriers import (CarrierError, Float64, GaussianRational,
                       NotEnumerableError, Product, QI, Restricted,
                       SamplingExhausted)
from .dsl import DslError, elaborate, parse, parse_value
from .functors import roundtrip_module, roundtrip_space, space_to_module, \
    module_to_space
from .report import Exhaustive, Sampled, all_passed, report_to_text, \
    reports_to_json
from .ringmod import RModule, check_module, check_ring
from .search import search_finite
from .space import (InverseError, MobiSpace, PointedMobiSpace, check_affine,
                    check_space, check_y_properties, trace_geodesic)

_CONFIG_ERRORS = (CarrierError, NotEnumerableError, SamplingExhausted,
                  AmbiguousTwoError, NoHalfError, InverseError, ValueError,
                  KeyError, OSError)


def _strategy(args):
    if getattr(args, "exhaustive", False):
        return Exhaustive()
    return Sampled(samples=args.samples, seed=args.seed)


def _emit(reports, fmt: str) -> int:
    if fmt == "json":
        print(reports_to_json(reports))
    else:
        for rep in reports:
            print(report_to_text(rep))
        failed = sum(1 for r in reports if not r.passed)
        if failed:
            print(f"checked {len(reports)} law(s): {failed} failed")
        else:
            print(f"checked {len(reports)} law(s): all passed")
    return 0 if all_passed(reports) else 1


def _prefixed(name: str, reports) -> list:
    return [replace(r, law=f"{name}.{r.law}") for r in reports]


def _space_reports(space: MobiSpace, args) -> list:
    strategy = _strategy(args)
    reports = list(check_space(space, strategy))
    if getattr(args, "affine", False):
        reports.append(check_affine(space, strategy))
    if getattr(args, "properties", False):
        reports.extend(check_y_properties(space, strategy))
    return reports


def _algebra_reports(algebra: MobiAlgebra, args) -> list:
    strategy = _strategy(args)
    reports = list(check_algebra(algebra, strategy))
    if getattr(args, "properties", False):
        reports.extend(check_properties(algebra, strategy))
    return reports


def _module_reports(module: RModule, args) -> list:
    strategy = _strategy(args)
    return (_prefixed("ring", check_ring(module.ring, strategy))
            + _prefixed("module", check_module(module, strategy)))


def _params(args) -> dict:
    out = {}
    for item in getattr(args, "param", None) or []:
        if "=" not in item:
            raise ValueError(f"--param wants NAME=VALUE, got {item!r}")
        key, _, value = item.partition("=")
        out[key.strip()] = value.strip()
    return out


def _coerce_into(carrier, value):
    """Best-effort coercion of a parsed literal into a carrier's element type."""
    if isinstance(carrier, Restricted):
        return _coerce_into(carrier.base, value)
    if isinstance(carrier, Product):
        if isinstance(value, tuple) and len(value) == len(carrier.parts):
            return tuple(_coerce_into(p, v) for p, v in zip(carrier.parts, value))
        return value
    if isinstance(carrier, Float64) and isinstance(value, (int, Fraction)):
        return float(value)
    if isinstance(carrier, GaussianRational) and isinstance(value, (int, Fraction)):
        return QI(value)
    return value


# ---------------------------------------------------------------------------
# commands

def _cmd_check(args) -> int:
    path = args.file
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        return 2
    try:
        structures = elaborate(parse(text))
    except DslError as exc:
        print(exc.format(path), file=sys.stderr)
        return 2
    reports = []
    for name, structure in structures.items():
        if isinstance(structure, MobiAlgebra):
            reports.extend(_prefixed(name, _algebra_reports(structure, args)))
        else:
            reports.extend(_prefixed(name, _space_reports(structure, args)))
    return _emit(reports, args.report)


def _cmd_catalog(args) -> int:
    if args.catalog_command == "list":
        for entry in _catalog.list_catalog():
            params = " ".join(f"{p.name}={p.default}" for p in entry.params)
            head = f"{entry.name}  ({entry.kind})"
            print(f"{head}  {params}".rstrip())
            print(f"    {entry.note}")
        return 0
    entry = _catalog.get_entry(args.name)
    built = _catalog.build(args.name, _params(args))
    if entry.kind == "algebra":
        reports = _algebra_reports(built, args)
    elif entry.kind == "space":
        reports = _space_reports(built, args)
    else:
        reports = _module_reports(built, args)
    return _emit(reports, args.report)


def _cmd_convert(args) -> int:
    entry = _catalog.get_entry(args.name)
    params = _params(args)
    if args.direction == "space-to-module":
        if entry.kind != "space":
            raise ValueError(f"{args.name} is a {entry.kind}, not a space")
        space = _catalog.build(args.name, params)
        if args.origin is not None:
            origin = _coerce_into(space.points, parse_value(args.origin))
        else:
            origin = _catalog.default_origin(args.name, params)
        if not space.points.contains(origin):
            raise ValueError(f"origin {args.origin!r} is not a point of {args.name}")
        module = space_to_module(PointedMobiSpace(space, origin))
        reports = _module_reports(module, args)
    else:
        if entry.kind != "module":
            raise ValueError(f"{args.name} is a {entry.kind}, not a module")
        module = _catalog.build(args.name, params)
        pointed = module_to_space(module)
        reports = _space_reports(pointed.space, args)
    return _emit(reports, args.report)


def _cmd_roundtrip(args) -> int:
    entry = _catalog.get_entry(args.name)
    params = _params(args)
    built = _catalog.build(args.name, params)
    strategy = _strategy(args)
    if entry.kind == "module":
        report = roundtrip_module(built, strategy)
    elif entry.kind == "space":
        origin = _catalog.default_origin(args.name, params)
        report = roundtrip_space(PointedMobiSpace(built, origin),
                                 strategy=strategy)
    else:
        raise ValueError(f"{args.name} is an algebra; round-trips apply to "
                         "spaces and modules")
    return _emit([report], args.report)


def _cmd_search(args) -> int:
    models = search_finite(args.size,
                           require_distinct_constants=args.distinct_constants,
                           limit=args.limit)
    suffix = " with distinct constants" if args.distinct_constants else ""
    print(f"found {len(models)} model(s) of size {args.size}{suffix}")
    for idx, model in enumerate(models, 1):
        print(f"model {idx}: zero={model.zero} half={model.half} one={model.one}")
        for a in range(model.size):
            rows = "  ".join(" ".join(str(v) for v in model.table[a][b])
                             for b in range(model.size))
            print(f"  a={a}: {rows}")
    return 0


def _render_cell(value) -> str:
    if isinstance(value, float):
        return repr(value)
    frac = Fraction(value)
    sign = "-" if frac < 0 else ""
    scaled = round(abs(frac) * 10 ** 12)
    digits = f"{scaled:013d}"
    head, tail = digits[:-12], digits[-12:].rstrip("0")
    return f"{sign}{head}.{tail}" if tail else f"{sign}{head}"


def _flatten_point(value) -> list:
    if isinstance(value, tuple):
        out = []
        for part in value:
            out.extend(_flatten_point(part))
        return out
    if isinstance(value, QI):
        return [value.re, value.im]
    return [value]


def _cmd_trace(args) -> int:
    entry = _catalog.get_entry(args.name)
    if entry.kind != "space":
        raise ValueError(f"{args.name} is a {entry.kind}, not a space")
    params = _params(args)
    space = _catalog.build(args.name, params)
    start = _coerce_into(space.points, parse_value(args.src))
    end = _coerce_into(space.points, parse_value(args.dst))
    for label, point in (("--from", start), ("--to", end)):
        if not space.points.contains(point):
            raise ValueError(f"{label} value is not a point of {args.name}")
    if args.steps < 1:
        raise ValueError(f"--steps must be >= 1, got {args.steps}")
    scalars = space.algebra.carrier
    grid = []
    for k in range(args.steps + 1):
        t = Fraction(k, args.steps)
        if scalars.contains(t):
            grid.append(t)
        elif scalars.contains(k / args.steps):
            grid.append(k / args.steps)
    rows = trace_geodesic(space, start, end, grid)
    if not rows:
        raise ValueError("the scalar grid is empty; nothing to trace")
    width = len(_flatten_point(rows[0][1]))
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["t"] + [f"c{i + 1}" for i in range(width)])
        for t, point in rows:
            writer.writerow([_render_cell(t)]
                            + [_render_cell(v) for v in _flatten_point(point)])
    print(f"wrote {len(rows)} points to {args.out}")
    return 0


# ---------------------------------------------------------------------------
# wiring

def _add_check_flags(sp, affine=True):
    sp.add_argument("--samples", type=int, default=500,
                    help="sample count for infinite carriers (default 500)")
    sp.add_argument("--seed", type=int, default=0,
                    help="base RNG seed (default 0)")
    sp.add_argument("--exhaustive", action="store_true",
                    help="enumerate every assignment (finite carriers only)")
    if affine:
        sp.add_argument("--affine", action="store_true",
                        help="also check the affine interchange condition")
        sp.add_argument("--properties", action="store_true",
                        help="also check the derived-operation properties")
    sp.add_argument("--report", choices=("text", "json"), default="text")


def _add_params_flag(sp):
    sp.add_argument("--param", action="append", metavar="NAME=VALUE",
                    help="set a catalog parameter (repeatable)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mobi",
        description="check algebras, spaces, and modules against their laws")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("check", help="check every definition in a file")
    sp.add_argument("file")
    _add_check_flags(sp)
    sp.set_defaults(func=_cmd_check)

    cat = sub.add_parser("catalog", help="list or check built-in structures")
    catsub = cat.add_subparsers(dest="catalog_command", required=True)
    sp = catsub.add_parser("list", help="list catalog entries")
    sp.set_defaults(func=_cmd_catalog)
    sp = catsub.add_parser("check", help="check one catalog entry")
    sp.add_argument("name")
    _add_params_flag(sp)
    _add_check_flags(sp)
    sp.set_defaults(func=_cmd_catalog)

    sp = sub.add_parser("convert",
                        help="convert between spaces and modules, then check")
    sp.add_argument("direction",
                    choices=("space-to-module", "module-to-space"))
    sp.add_argument("name")
    sp.add_argument("--origin", default=None,
                    help="basepoint expression (default: the entry's own)")
    _add_params_flag(sp)
    _add_check_flags(sp)
    sp.set_defaults(func=_cmd_convert)

    sp = sub.add_parser("roundtrip",
                        help="check that converting there and back is the identity")
    sp.add_argument("name")
    _add_params_flag(sp)
    _add_check_flags(sp, affine=False)
    sp.set_defaults(func=_cmd_roundtrip)

    sp = sub.add_parser("search", help="enumerate finite models")
    sp.add_argument("--size", type=int, required=True)
    sp.add_argument("--distinct-constants", action="store_true")
    sp.add_argument("--limit", type=int, default=None)
    sp.set_defaults(func=_cmd_search)

    sp = sub.add_parser("trace", help="sample a path between two points to CSV")
    sp.add_argument("name")
    sp.add_argument("--from", dest="src", required=True)
    sp.add_argument("--to", dest="dst", required=True)
    sp.add_argument("--steps", type=int, required=True)
    sp.add_argument("--out", required=True)
    _add_params_flag(sp)
    sp.set_defaults(func=_cmd_trace)

    return parser


def run_cli(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except DslError as exc:
        print(f"error: {exc.kind}: {exc.msg}", file=sys.stderr)
        return 2
    except _CONFIG_ERRORS as exc:
        msg = exc.args[0] if exc.args else str(exc)
        print(f"error: {msg}", file=sys.stderr)
        return 2


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
