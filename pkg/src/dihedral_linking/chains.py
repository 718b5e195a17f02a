"""Linear systems for 2-chains bounded by lifts of curves.

A chain is recorded only through its coefficients ``x_i`` on the lifts
``A_{2,i}`` of the walls below the knot arcs.  For a pseudo-branch lift the
chain is ``sum_i B_{j,i} + x_i (A_{2,i} - A_{3,i})``; for the index-1 branch
curve it is ``sum_i A_{1,i} + x_i (A_{2,i} - A_{3,i})`` and for the index-2
branch curve ``sum_i x_i A_{2,i} + (1 - x_i) A_{3,i}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from .diagram import OverKind, Scene
from .lifts import SHEETS, A2Placement, a2_placement, eps1, eps2, eps3, eps4, trace_lifts
from .linalg import Matrix, solve_affine


class Mode(str, Enum):
    """Sign convention.

    ``CODE`` is the default and the one checked against reference values.
    ``THEOREM`` keeps the alternative sign choices: an extra crossing-sign
    factor on knot undercrossings, the opposite right-hand side under the
    pseudo-branch curve, and the literal branch-curve right-hand sides.
    """

    CODE = "code"
    THEOREM = "theorem"


@dataclass(frozen=True)
class ChainResult:
    """Solved coefficients, or ``x is None`` when the curve is not rationally nullhomologous."""

    kind: str  # "pseudo", "branch1" or "branch2"
    sheet: Optional[int]
    x: Optional[tuple[Fraction, ...]]

    @property
    def nullhomologous(self) -> bool:
        return self.x is not None


def _knot_rows(scene: Scene, w: A2Placement) -> Matrix:
    """Left-hand sides shared by every system: x_i - x_{i+1} (+ overstrand term)."""
    knot = scene.knot
    m = len(knot)
    rows = []
    for i in range(m):
        row = [Fraction(0)] * (m + 1)
        row[i] += 1
        row[(i + 1) % m] -= 1
        if knot.over_kinds[i] is OverKind.KNOT:
            f = knot.over_nums[i]
            if knot.colors[i] != knot.colors[f]:
                row[f] += eps1(knot, w, i) * eps2(knot, w, i)
            else:
                row[f] += 2 * eps3(knot, w, i)
        rows.append(row)
    return rows


def pseudo_chain_system(scene: Scene, j: int, mode: Mode = Mode.CODE, seed: Optional[int] = None) -> Matrix:
    """Augmented system whose solutions bound lift ``j`` of gamma."""
    knot = scene.knot
    w = a2_placement(knot, seed)
    trace = trace_lifts(scene.gamma, knot)
    rows = _knot_rows(scene, w)
    for i, row in enumerate(rows):
        if knot.over_kinds[i] is OverKind.PSEUDO:
            rhs = knot.signs[i] * eps4(knot, w, trace, j, i)
            if mode is Mode.CODE:
                rhs = -rhs
            row[-1] = Fraction(-rhs)
    return rows


def branch_chain_system(scene: Scene, index: int, mode: Mode = Mode.CODE, seed: Optional[int] = None) -> Matrix:
    """Augmented system for the index-1 or index-2 branch curve.

    Rows under the pseudo-branch curve read ``x_i - x_{i+1} = 0``.  Code
    mode uses ``sign * eps2`` on inhomogeneous rows of the index-1 system
    and ``eps3`` on homogeneous rows of the index-2 system; theorem mode
    uses ``sign * eps1`` and a zero right-hand side respectively.
    """
    if index not in (1, 2):
        raise ValueError(f"branch index must be 1 or 2, got {index}")
    knot = scene.knot
    w = a2_placement(knot, seed)
    rows = _knot_rows(scene, w)
    for i, row in enumerate(rows):
        if knot.over_kinds[i] is not OverKind.KNOT:
            continue
        f = knot.over_nums[i]
        if knot.colors[i] != knot.colors[f]:
            e1, e2 = eps1(knot, w, i), eps2(knot, w, i)
            if index == 1:
                rhs = Fraction(knot.signs[i] * (e2 if mode is Mode.CODE else e1))
            else:
                rhs = Fraction(e2 * (e1 - knot.signs[i]), 2)
        elif index == 2 and mode is Mode.CODE:
            rhs = Fraction(eps3(knot, w, i))
        else:
            rhs = Fraction(0)
        row[-1] = -rhs
    return rows


def solve_chain(system: Matrix, kind: str, sheet: Optional[int] = None) -> ChainResult:
    x = solve_affine(system)
    return ChainResult(kind, sheet, None if x is None else tuple(x))


def pseudo_chains(scene: Scene, mode: Mode = Mode.CODE, seed: Optional[int] = None) -> list[ChainResult]:
    """Chains for the three lifts of gamma, in sheet order."""
    return [solve_chain(pseudo_chain_system(scene, j, mode, seed), "pseudo", j) for j in SHEETS]


def branch_chain(scene: Scene, index: int, mode: Mode = Mode.CODE, seed: Optional[int] = None) -> ChainResult:
    return solve_chain(branch_chain_system(scene, index, mode, seed), f"branch{index}")
