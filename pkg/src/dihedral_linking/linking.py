"""Intersection numbers between lifts of curves in the cover."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .chains import ChainResult, Mode, branch_chain, pseudo_chains
from .diagram import OverKind, Scene
from .lifts import SHEETS, a2_placement, eps5, eps6, eps7, trace_lifts

Value = Optional[Fraction]  # None marks an undefined entry


@dataclass(frozen=True)
class LinkingMatrix:
    """``entries[j-1][k-1]`` is the intersection of the chain bounding gamma^j with delta^k."""

    entries: tuple[tuple[Value, ...], ...]

    def __getitem__(self, jk: tuple[int, int]) -> Value:
        j, k = jk
        return self.entries[j - 1][k - 1]

    def row_defined(self, j: int) -> bool:
        return self.entries[j - 1][0] is not None

    def column_sums(self) -> list[Value]:
        if not all(self.row_defined(j) for j in SHEETS):
            return [None] * 3
        return [sum(row[k] for row in self.entries) for k in range(3)]

    def transpose(self) -> "LinkingMatrix":
        return LinkingMatrix(tuple(zip(*self.entries)))


def intersection_matrix(
    scene: Scene,
    mode: Mode = Mode.CODE,
    seed: Optional[int] = None,
    chains: Optional[Sequence[ChainResult]] = None,
) -> LinkingMatrix:
    if scene.delta is None:
        raise ValueError("scene has no second pseudo-branch curve")
    knot, delta = scene.knot, scene.delta
    w = a2_placement(knot, seed)
    gamma_trace = trace_lifts(scene.gamma, knot)
    delta_trace = trace_lifts(delta, knot)
    if chains is None:
        chains = pseudo_chains(scene, mode, seed)

    rows = []
    for j in SHEETS:
        x = chains[j - 1].x
        if x is None:
            rows.append((None, None, None))
            continue
        totals = [Fraction(0)] * 3
        for i, kind in enumerate(delta.over_kinds):
            sign = delta.signs[i]
            for k in SHEETS:
                if kind is OverKind.KNOT:
                    term = eps5(delta, knot, w, delta_trace, k, i) * x[delta.over_nums[i]]
                    if mode is Mode.THEOREM:
                        term *= sign
                else:
                    term = sign * eps6(delta, gamma_trace, delta_trace, j, k, i)
                totals[k - 1] += term
        rows.append(tuple(totals))
    return LinkingMatrix(tuple(rows))


def branch_linking(
    scene: Scene, index: int, mode: Mode = Mode.CODE, seed: Optional[int] = None
) -> list[Value]:
    """Intersections of the three lifts of gamma with the chain bounding a branch curve.

    In theorem mode the contribution of a crossing of gamma under the knot is
    ``sign * eps7 * x1[f]`` (index 1) or ``sign * eps5 * x2[f]`` (index 2).
    Code mode counts the lift of the wall actually crossed, as the pseudo
    chains do: the index-1 chain meets the lift in sheet c(f) with
    coefficient 1, and a crossing in sheet w(f) meets A2 or A3 according to
    the crossing sign.
    """
    chain = branch_chain(scene, index, mode, seed)
    if chain.x is None:
        return [None, None, None]
    knot, gamma = scene.knot, scene.gamma
    w = a2_placement(knot, seed)
    trace = trace_lifts(gamma, knot)
    x = chain.x

    totals = [Fraction(0)] * 3
    for i, kind in enumerate(gamma.over_kinds):
        if kind is not OverKind.KNOT:
            continue
        f = gamma.over_nums[i]
        sign = gamma.signs[i]
        for k in SHEETS:
            if mode is Mode.THEOREM:
                eps = eps7 if index == 1 else eps5
                term = sign * eps(gamma, knot, w, trace, k, i) * x[f]
            else:
                sheet = trace.cells[k - 1][i]
                if sheet == knot.colors[f]:
                    term = Fraction(sign) if index == 1 else Fraction(0)
                elif sheet == w[f]:
                    term = x[f] if index == 1 else x[f] + Fraction(sign - 1, 2)
                else:
                    term = -x[f] if index == 1 else -x[f] + Fraction(sign + 1, 2)
            totals[k - 1] += term
    return totals


def aggregate(
    matrix: LinkingMatrix,
    gamma_closure: Sequence[Sequence[int]],
    delta_closure: Sequence[Sequence[int]],
) -> dict[tuple[tuple[int, ...], tuple[int, ...]], Value]:
    """Sum entries over every pair (closed lift of gamma, closed lift of delta)."""
    out = {}
    for cycle_g in gamma_closure:
        for cycle_d in delta_closure:
            values = [matrix[j, k] for j in cycle_g for k in cycle_d]
            out[tuple(cycle_g), tuple(cycle_d)] = (
                None if any(v is None for v in values) else sum(values, Fraction(0))
            )
    return out


@dataclass(frozen=True)
class Mismatch:
    j: int
    k: int
    forward: Fraction
    swapped: Fraction


def symmetry_check(
    scene_a: Scene, scene_b: Scene, mode: Mode = Mode.CODE
) -> list[Mismatch]:
    """Compare I[j,k] of ``scene_a`` with I[k,j] of its role-swapped encoding.

    Only entries defined in both matrices are compared; returns the mismatches.
    """
    if scene_a.delta is None or scene_b.delta is None:
        raise ValueError("symmetry check needs two pseudo-branch curves in both scenes")
    a = intersection_matrix(scene_a, mode)
    b = intersection_matrix(scene_b, mode)
    out = []
    for j in SHEETS:
        for k in SHEETS:
            if a[j, k] is not None and b[k, j] is not None and a[j, k] != b[k, j]:
                out.append(Mismatch(j, k, a[j, k], b[k, j]))
    return out
