"""Sheet bookkeeping in the 3-fold irregular dihedral cover.

The complement of the cone on the diagram has three lifts, labelled 1, 2, 3
so that a meridian of an arc colored ``c`` acts on the labels as the
transposition fixing ``c``.  Everything here is pure index arithmetic on
those labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .diagram import COLORS, CurvePresentation, KnotPresentation, OverKind

SHEETS = (1, 2, 3)


class PlacementError(ValueError):
    """The A2-placement does not close up around the knot."""


class CrossingClassError(ValueError):
    """A crossing sign was requested for the wrong kind of crossing."""


def wall_color_change(old: int, wall: int) -> int:
    """Sheet reached from sheet ``old`` after passing under an arc colored ``wall``."""
    if old == wall:
        return old
    return 6 - old - wall


@dataclass(frozen=True)
class LiftTrace:
    """Sheets visited by the three path lifts of a curve.

    ``cells[j - 1][i]`` is the sheet holding arc ``i`` on the lift that
    starts in sheet ``j``.  ``monodromy[j - 1]`` is the sheet that lift ends
    in, and ``closure`` lists the cycles of that permutation; each cycle is
    one closed lift.
    """

    cells: tuple[tuple[int, ...], ...]
    monodromy: tuple[int, ...]
    closure: tuple[tuple[int, ...], ...]

    def closed_lifts(self) -> list[int]:
        """Start sheets whose path lift is by itself a closed loop."""
        return [cycle[0] for cycle in self.closure if len(cycle) == 1]


def cycles(perm: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Cycle decomposition of a permutation of 1..n given as images."""
    seen = set()
    out = []
    for start in range(1, len(perm) + 1):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        nxt = perm[start - 1]
        while nxt != start:
            cycle.append(nxt)
            seen.add(nxt)
            nxt = perm[nxt - 1]
        out.append(tuple(cycle))
    return tuple(out)


def _step(sheet: int, curve, i: int, knot: KnotPresentation) -> int:
    if curve.over_kinds[i] is OverKind.KNOT:
        return wall_color_change(sheet, knot.colors[curve.over_nums[i]])
    # meridians of pseudo-branch curves act trivially
    return sheet


def trace_lifts(curve: CurvePresentation, knot: KnotPresentation) -> LiftTrace:
    cells = []
    ends = []
    for start in SHEETS:
        row = [start]
        for i in range(len(curve) - 1):
            row.append(_step(row[i], curve, i, knot))
        cells.append(tuple(row))
        ends.append(_step(row[-1], curve, len(curve) - 1, knot))
    monodromy = tuple(ends)
    return LiftTrace(tuple(cells), monodromy, cycles(monodromy))


@dataclass(frozen=True)
class A2Placement:
    """``w[i]``: the sheet that fixes which lift of the wall below arc i is A2."""

    w: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        return self.w[i]

    def __len__(self) -> int:
        return len(self.w)


def a2_placement(knot: KnotPresentation, seed: Optional[int] = None) -> A2Placement:
    """Propagate the A2 choice along the knot.

    ``seed`` is the value of ``w[0]``; by default the smaller of the two
    colors other than ``c(0)``.
    """
    others = [c for c in COLORS if c != knot.colors[0]]
    if seed is None:
        seed = others[0]
    elif seed not in others:
        raise ValueError(f"seed must be one of {others}, got {seed}")
    w = [seed]
    for i in range(len(knot) - 1):
        w.append(_step(w[i], knot, i, knot))
    closing = _step(w[-1], knot, len(knot) - 1, knot)
    if closing != seed:
        raise PlacementError(
            f"placement returns as {closing} after the last crossing, started as {seed}"
        )
    return A2Placement(tuple(w))


def alternate_seed(knot: KnotPresentation) -> int:
    """The other admissible value of ``w[0]``."""
    return [c for c in COLORS if c != knot.colors[0]][1]


# -- crossing signs ------------------------------------------------------------


def _self_crossing(knot: KnotPresentation, i: int, homogeneous: bool) -> tuple[int, int]:
    if knot.over_kinds[i] is not OverKind.KNOT:
        raise CrossingClassError(f"crossing {i} is not a self-crossing of the knot")
    f = knot.over_nums[i]
    if (knot.colors[i] == knot.colors[f]) != homogeneous:
        kind = "homogeneous" if homogeneous else "inhomogeneous"
        raise CrossingClassError(f"crossing {i} is not {kind}")
    return i, f


def eps1(knot: KnotPresentation, w: Sequence[int], i: int) -> int:
    i, f = _self_crossing(knot, i, homogeneous=False)
    return 1 if knot.colors[i] != w[f] else -1


def eps2(knot: KnotPresentation, w: Sequence[int], i: int) -> int:
    i, f = _self_crossing(knot, i, homogeneous=False)
    return 1 if knot.colors[f] == w[i] else -1


def eps3(knot: KnotPresentation, w: Sequence[int], i: int) -> int:
    i, f = _self_crossing(knot, i, homogeneous=True)
    return 1 if w[i] != w[f] else -1


def eps4(knot: KnotPresentation, w: Sequence[int], gamma: LiftTrace, j: int, i: int) -> int:
    """Sign for knot crossing ``i`` under the first curve, seen from lift ``j``."""
    if knot.over_kinds[i] is not OverKind.PSEUDO:
        raise CrossingClassError(f"crossing {i} of the knot is not under the pseudo-branch curve")
    sheet = gamma.cells[j - 1][knot.over_nums[i]]
    if sheet == w[i]:
        return -1
    if sheet == knot.colors[i]:
        return 0
    return 1


def _under_knot(curve: CurvePresentation, knot: KnotPresentation, w, trace: LiftTrace, k: int, i: int):
    if curve.over_kinds[i] is not OverKind.KNOT:
        raise CrossingClassError(f"crossing {i} of the curve is not under the knot")
    f = curve.over_nums[i]
    return trace.cells[k - 1][i], w[f], knot.colors[f]


def eps5(curve: CurvePresentation, knot: KnotPresentation, w: Sequence[int], trace: LiftTrace, k: int, i: int) -> int:
    """+1 / 0 / -1 as lift ``k`` of the curve sits in sheet w(f) / c(f) / neither."""
    sheet, wf, cf = _under_knot(curve, knot, w, trace, k, i)
    if sheet == wf:
        return 1
    if sheet == cf:
        return 0
    return -1


def eps7(curve: CurvePresentation, knot: KnotPresentation, w: Sequence[int], trace: LiftTrace, k: int, i: int) -> int:
    sheet, wf, cf = _under_knot(curve, knot, w, trace, k, i)
    return 1 if sheet in (wf, cf) else -1


def eps6(delta: CurvePresentation, gamma: LiftTrace, delta_trace: LiftTrace, j: int, k: int, i: int) -> int:
    """1 when lift ``k`` of delta and lift ``j`` of gamma share a sheet at crossing ``i``."""
    if delta.over_kinds[i] is not OverKind.PSEUDO:
        raise CrossingClassError(f"crossing {i} of delta is not under gamma")
    return 1 if delta_trace.cells[k - 1][i] == gamma.cells[j - 1][delta.over_nums[i]] else 0
