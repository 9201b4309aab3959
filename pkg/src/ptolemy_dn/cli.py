"""Command-line entry point.

Exit status: 0 success, 1 domain-level negative (not Ptolemy, bad mutation
input, failed verification), 2 usage or I/O error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import ar_bridge as ab
from .cells import NotNonCrossingError, OutsideNcError, build_cells
from .census import (
    ResourceGuardError,
    SeedError,
    build_mutation_graph,
    census_jsonl,
    maximal_noncrossing_masks,
    torsion_masks,
)
from .mutation import Direction, mutate_diagram
from .polygon import ElementError, RankError, check_rank, nc
from .ptolemy import is_torsion_part, ptolemy_violation
from .render import RenderSpec, render_svg
from .serialize import (
    FormatError,
    diagram_to_json,
    element_from_json,
    element_to_json,
    loads,
    side_atom_to_json,
)
from .verify import SUITES, run_suites

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class DomainError(Exception):
    pass


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _load(path: str):
    return loads(_read(path))


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        try:
            with open(out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(f"cannot write {out}: {exc.strerror}") from exc
    else:
        sys.stdout.write(text)


def _emit_json(obj, out: Optional[str]) -> None:
    _emit(json.dumps(obj, sort_keys=True) + "\n", out)


def cmd_check(args) -> int:
    x = _load(args.input)
    v = ptolemy_violation(x)
    if v is None:
        _emit_json({"result": "ptolemy", "torsion_part": is_torsion_part(x)}, args.out)
        return EXIT_OK
    _emit_json({"result": "not-ptolemy", "torsion_part": is_torsion_part(x), "violation": v.to_json()}, args.out)
    return EXIT_NEGATIVE


def cmd_nc(args) -> int:
    _emit_json(diagram_to_json(nc(_load(args.input))), args.out)
    return EXIT_OK


def cmd_mutate(args) -> int:
    x, d = _load(args.input), _load(args.with_)
    if x.n != d.n:
        raise UsageError(f"rank mismatch: X has n={x.n}, D has n={d.n}")
    try:
        result = mutate_diagram(d, x, Direction.parse(args.dir))
    except (NotNonCrossingError, OutsideNcError) as exc:
        raise DomainError(str(exc)) from exc
    _emit_json(diagram_to_json(result), args.out)
    return EXIT_OK


def _cells_json(d) -> list:
    out = []
    for cp in build_cells(d):
        out.append(
            {
                "cell": list(cp.cell),
                "partner": list(cp.partner),
                "invariant": cp.invariant,
                "sides": [[side_atom_to_json(a) for a in atoms] for atoms in cp.sides],
                "interior_angles": cp.interior_angles(0),
            }
        )
    return out


def cmd_cells(args) -> int:
    d = _load(args.input)
    try:
        cells = _cells_json(d)
    except NotNonCrossingError as exc:
        raise DomainError(str(exc)) from exc
    _emit_json({"n": d.n, "angle_unit": f"pi/{2 * d.n}", "cells": cells}, args.out)
    return EXIT_OK


def _parse_element(n: int, text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid element JSON: {exc}") from exc
    return element_from_json(n, obj)


def cmd_triangle(args) -> int:
    d = _load(args.input)
    e = _parse_element(d.n, args.element)
    try:
        tri = ab.mutation_triangle(d, e)
    except (NotNonCrossingError, OutsideNcError, ValueError) as exc:
        raise DomainError(str(exc)) from exc
    checks = ab.frame_checks(tri)
    _emit_json(
        {
            "first": element_to_json(tri.first),
            "summands": [element_to_json(s) for s in tri.summands],
            "third": element_to_json(tri.third),
            "frame_checks": [
                {"shifts": c.rotation, "start": str(c.start), "end": str(c.end), "agrees": c.agrees}
                for c in checks
            ],
        },
        args.out,
    )
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.kind == "ptolemy":
        masks = torsion_masks(args.n, args.method)
    else:
        masks = maximal_noncrossing_masks(args.n)
    _emit(census_jsonl(args.n, masks), args.out)
    return EXIT_OK


def cmd_graph(args) -> int:
    seeds = [_load(p) for p in args.seed] if args.seed else None
    try:
        graph = build_mutation_graph(args.n, seeds)
    except SeedError as exc:
        raise DomainError(str(exc)) from exc
    _emit_json(graph.to_json(), args.out)
    return EXIT_OK


def cmd_render(args) -> int:
    x = _load(args.input)
    d = _load(args.with_) if args.with_ else None
    if d is not None and d.n != x.n:
        raise UsageError(f"rank mismatch: X has n={x.n}, D has n={d.n}")
    if args.shade and d is None:
        d = x.__class__(x.n, frozenset())
    try:
        svg = render_svg(RenderSpec(x, d, args.shade, args.size))
    except NotNonCrossingError as exc:
        raise DomainError(str(exc)) from exc
    _emit(svg, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite == "all":
        numbers = sorted(SUITES)
    else:
        try:
            numbers = sorted({int(s) for s in args.suite.split(",")})
        except ValueError:
            raise UsageError(f"--suite takes 'all' or comma-separated numbers, got {args.suite!r}") from None
        unknown = [k for k in numbers if k not in SUITES]
        if unknown:
            raise UsageError(f"unknown suites {unknown}; choose from 1..{len(SUITES)}")
    results = run_suites(numbers, args.n)
    for r in results:
        print(r.line(), file=sys.stderr)
    _emit_json({"n": args.n, "results": [r.to_json() for r in results]}, args.out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_NEGATIVE


def cmd_arvertex(args) -> int:
    if (args.to_arc is None) == (args.from_arc is None):
        raise UsageError("give exactly one of --to-arc and --from-arc")
    check_rank(args.n)
    if args.to_arc is not None:
        v = ab.ArVertex.parse(args.to_arc).check(args.n)
        rep = ab.to_cluster(args.n, v)
        _emit_json(
            {
                "vertex": str(v),
                "cluster_vertex": str(rep),
                "element": element_to_json(ab.b_map(args.n, rep)),
                "tau_inv_sigma": str(ab.tau_inv_sigma(args.n, v)),
            },
            args.out,
        )
    else:
        e = _parse_element(args.n, args.from_arc)
        _emit_json({"element": element_to_json(e), "vertex": str(ab.b_inv(e))}, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ptolemy-dn", description="Torsion parts, cells and mutation in the type D polygon model.")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name: str, fn, help_: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=fn)
        sp.add_argument("--out", help="write output here instead of stdout")
        return sp

    sp = add("check", cmd_check, "decide whether a diagram is Ptolemy")
    sp.add_argument("--input", required=True, help="diagram JSON path, or - for stdin")

    sp = add("nc", cmd_nc, "elements crossing nothing in the diagram")
    sp.add_argument("--input", required=True)

    sp = add("mutate", cmd_mutate, "mutate X with respect to a non-crossing D")
    sp.add_argument("--input", required=True, help="the diagram X")
    sp.add_argument("--with", dest="with_", required=True, help="the non-crossing diagram D")
    sp.add_argument("--dir", choices=("plus", "minus"), default="plus")

    sp = add("cells", cmd_cells, "D-cells of a non-crossing diagram")
    sp.add_argument("--input", required=True)

    sp = add("triangle", cmd_triangle, "mutation triangle of an element")
    sp.add_argument("--input", required=True, help="the non-crossing diagram D")
    sp.add_argument("--element", required=True, help='element JSON, e.g. {"kind":"pair","a":0,"b":3}')

    sp = add("enumerate", cmd_enumerate, "census of torsion parts or maximal non-crossing diagrams")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--kind", choices=("ptolemy", "maximal"), default="ptolemy")
    sp.add_argument("--method", choices=("exhaustive", "closure"), default="exhaustive")

    sp = add("graph", cmd_graph, "mutation graph of Ptolemy diagrams")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--seed", action="append", help="seed diagram JSON (repeatable); default: all Ptolemy diagrams")

    sp = add("render", cmd_render, "SVG drawing of a diagram")
    sp.add_argument("--input", required=True)
    sp.add_argument("--with", dest="with_", help="diagram D drawn thick")
    sp.add_argument("--shade", action="store_true", help="shade the D-cells")
    sp.add_argument("--size", type=int, default=400)

    sp = add("verify", cmd_verify, "run the acceptance suites")
    sp.add_argument("--n", type=int, default=4, choices=(4, 5), help="base rank of the exhaustive sweeps")
    sp.add_argument("--suite", default="all", help="'all' or comma-separated criterion numbers")

    sp = add("arvertex", cmd_arvertex, "translate between AR-quiver vertices and elements")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--to-arc", dest="to_arc", help='vertex such as "[0,4]+"')
    sp.add_argument("--from-arc", dest="from_arc", help="element JSON")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except (UsageError, FormatError, RankError, ElementError, ab.ArVertexError, ResourceGuardError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
