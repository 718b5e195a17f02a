"""Command-line front end.

Exit status 0 means success, 1 an invalid scene, 2 an unreadable or
malformed file (or a curve that the scene does not contain).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .chains import Mode, branch_chain, pseudo_chains
from .diagram import Scene, SceneParseError, load_scene, planar_linking, validate_scene
from .lifts import SHEETS, cycles, trace_lifts
from .linking import aggregate, branch_linking, intersection_matrix

EXIT_OK, EXIT_INVALID, EXIT_INPUT = 0, 1, 2

# violations that make the computations themselves meaningless
FATAL = {"length-mismatch", "empty", "sign-range", "color-range", "overnum-range", "placement"}


class InputError(Exception):
    pass


def fmt(value: Optional[Fraction]) -> str:
    if value is None:
        return "x"
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def to_json(value: Optional[Fraction]):
    if value is None:
        return None
    value = Fraction(value)
    return [value.numerator, value.denominator]


def fmt_cycles(cycles) -> str:
    return " ".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


def fmt_perm(perm) -> str:
    moved = [c for c in cycles(perm) if len(c) > 1]
    return fmt_cycles(moved) if moved else "identity"


def _load(path: str) -> Scene:
    try:
        return load_scene(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except SceneParseError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _checked(path: str) -> Scene:
    """Load a scene, refusing fatal violations and warning about the rest."""
    scene = _load(path)
    violations = validate_scene(scene)
    fatal = [v for v in violations if v.code in FATAL]
    if fatal:
        for v in fatal:
            print(f"error: {v}", file=sys.stderr)
        raise SystemExit(EXIT_INVALID)
    for v in violations:
        print(f"warning: {v}", file=sys.stderr)
    return scene


def _emit(doc) -> None:
    print(json.dumps(doc, indent=2))


def _row(values) -> str:
    return " ".join(f"{fmt(v):>4}" for v in values)


def cmd_validate(args) -> int:
    scene = _load(args.file)
    violations = validate_scene(scene)
    if args.format == "json":
        _emit({"valid": not violations, "violations": [
            {"code": v.code, "where": v.where, "message": v.message} for v in violations]})
    elif violations:
        for v in violations:
            print(v)
    else:
        print("ok")
    return EXIT_INVALID if violations else EXIT_OK


def cmd_lifts(args) -> int:
    scene = _checked(args.file)
    curve = scene.gamma if args.curve == "gamma" else scene.delta
    if curve is None:
        raise InputError(f"{args.file} has no {args.curve} curve")
    trace = trace_lifts(curve, scene.knot)
    if args.format == "json":
        _emit({
            "curve": args.curve,
            "cells": [list(r) for r in trace.cells],
            "monodromy": list(trace.monodromy),
            "closure": [list(c) for c in trace.closure],
        })
        return EXIT_OK
    print(f"curve: {args.curve} ({len(curve)} arcs)")
    for j in SHEETS:
        print(f"lift {j}: " + " ".join(map(str, trace.cells[j - 1])))
    print(f"monodromy: {fmt_perm(trace.monodromy)}")
    print(f"closure: {fmt_cycles(trace.closure)}")
    return EXIT_OK


def cmd_chains(args) -> int:
    scene = _checked(args.file)
    mode = Mode(args.mode)
    if args.branch:
        results = [(f"branch {args.branch}", branch_chain(scene, args.branch, mode).x)]
    else:
        results = [(f"lift {c.sheet}", c.x) for c in pseudo_chains(scene, mode)]
    if args.format == "json":
        _emit({"mode": mode.value, "branch": args.branch,
               "chains": [None if x is None else [to_json(v) for v in x] for _, x in results]})
        return EXIT_OK
    print(f"mode: {mode.value}")
    for label, x in results:
        print(f"{label}: " + ("not nullhomologous" if x is None else " ".join(fmt(v) for v in x)))
    return EXIT_OK


def cmd_link(args) -> int:
    scene = _checked(args.file)
    if scene.delta is None:
        raise InputError(f"{args.file} has no delta curve")
    mode = Mode(args.mode)
    matrix = intersection_matrix(scene, mode)
    g_closure = trace_lifts(scene.gamma, scene.knot).closure
    d_closure = trace_lifts(scene.delta, scene.knot).closure
    totals = aggregate(matrix, g_closure, d_closure)
    if args.format == "json":
        _emit({
            "mode": mode.value,
            "matrix": [[to_json(v) for v in row] for row in matrix.entries],
            "gamma_closure": [list(c) for c in g_closure],
            "delta_closure": [list(c) for c in d_closure],
            "aggregated": [{"gamma": list(g), "delta": list(d), "value": to_json(v)}
                           for (g, d), v in totals.items()],
            "planar_linking": planar_linking(scene.delta),
        })
        return EXIT_OK
    print(f"mode: {mode.value}")
    print("     " + _row(SHEETS))
    for j in SHEETS:
        print(f"{j:>4} " + _row(matrix.entries[j - 1]))
    print(f"gamma closure: {fmt_cycles(g_closure)}")
    print(f"delta closure: {fmt_cycles(d_closure)}")
    print("aggregated: " + ", ".join(fmt(v) for v in totals.values()))
    return EXIT_OK


def cmd_link_branch(args) -> int:
    scene = _checked(args.file)
    mode = Mode(args.mode)
    values = branch_linking(scene, args.index, mode)
    closure = trace_lifts(scene.gamma, scene.knot).closure
    if args.format == "json":
        _emit({"mode": mode.value, "index": args.index, "values": [to_json(v) for v in values],
               "gamma_closure": [list(c) for c in closure]})
        return EXIT_OK
    print(f"mode: {mode.value}")
    print(f"branch {args.index}: " + " ".join(fmt(v) for v in values))
    print(f"gamma closure: {fmt_cycles(closure)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dihedral-link",
        description="Linking numbers of curve lifts in 3-fold irregular dihedral covers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, func, help_text, mode=True):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="scene file (JSON)")
        p.add_argument("--format", choices=("table", "json"), default="table")
        if mode:
            p.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.CODE.value)
        p.set_defaults(func=func)
        return p

    command("validate", cmd_validate, "check a scene file", mode=False)
    p = command("lifts", cmd_lifts, "trace the three lifts of a curve", mode=False)
    p.add_argument("--curve", choices=("gamma", "delta"), default="gamma")
    p = command("chains", cmd_chains, "solve for the chains bounding the lifts of gamma")
    p.add_argument("--branch", type=int, choices=(1, 2), help="solve the branch-curve system instead")
    command("link", cmd_link, "intersection matrix of gamma lifts against delta lifts")
    p = command("link-branch", cmd_link_branch, "linking of gamma lifts with a branch curve")
    p.add_argument("--index", type=int, choices=(1, 2), required=True)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SystemExit as exc:
        return int(exc.code)


if __name__ == "__main__":
    sys.exit(main())
