"""Combinatorial encoding of a 3-colored knot diagram with auxiliary curves.

A diagram is stored as parallel index arrays, one block per curve.  Entry
``i`` of a block describes the crossing at the head of arc ``i`` of that
curve, i.e. the place where the curve passes under something and arc
``i + 1`` (mod length) begins.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Union

COLORS = (1, 2, 3)


class OverKind(str, Enum):
    """Which curve owns the overstrand at a crossing."""

    KNOT = "k"
    PSEUDO = "p"


@dataclass(frozen=True)
class KnotPresentation:
    colors: tuple[int, ...]
    over_nums: tuple[int, ...]
    over_kinds: tuple[OverKind, ...]
    signs: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.colors)

    @property
    def m(self) -> int:
        return len(self.colors)

    def next(self, i: int) -> int:
        return (i + 1) % len(self.colors)


@dataclass(frozen=True)
class CurvePresentation:
    over_nums: tuple[int, ...]
    over_kinds: tuple[OverKind, ...]
    signs: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.over_nums)


@dataclass(frozen=True)
class Scene:
    knot: KnotPresentation
    gamma: CurvePresentation
    delta: Optional[CurvePresentation] = None

    def without_delta(self) -> "Scene":
        return Scene(self.knot, self.gamma)


Presentation = Union[KnotPresentation, CurvePresentation]


class SceneParseError(ValueError):
    """Raised when a scene document cannot be read."""

    def __init__(self, message: str, location: str = ""):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


# -- parsing -----------------------------------------------------------------

_KNOT_KEYS = ("colors", "overnums", "overtypes", "signs")
_CURVE_KEYS = ("overnums", "overtypes", "signs")


def _int_list(block: dict, key: str, where: str) -> tuple[int, ...]:
    values = block[key]
    if not isinstance(values, list):
        raise SceneParseError(f"expected a list, got {type(values).__name__}", f"{where}.{key}")
    for pos, v in enumerate(values):
        if isinstance(v, bool) or not isinstance(v, int):
            raise SceneParseError(f"expected an integer, got {v!r}", f"{where}.{key}[{pos}]")
    return tuple(values)


def _kind_list(block: dict, where: str) -> tuple[OverKind, ...]:
    values = block["overtypes"]
    if not isinstance(values, list):
        raise SceneParseError("expected a list", f"{where}.overtypes")
    kinds = []
    for pos, v in enumerate(values):
        try:
            kinds.append(OverKind(v))
        except ValueError:
            raise SceneParseError(
                f"unknown crossing type {v!r} (expected 'k' or 'p')", f"{where}.overtypes[{pos}]"
            ) from None
    return tuple(kinds)


def _block(doc: dict, name: str, keys: Sequence[str]) -> dict:
    block = doc[name]
    if not isinstance(block, dict):
        raise SceneParseError("expected an object", name)
    missing = [k for k in keys if k not in block]
    if missing:
        raise SceneParseError(f"missing key(s) {', '.join(missing)}", name)
    extra = sorted(set(block) - set(keys))
    if extra:
        raise SceneParseError(f"unexpected key(s) {', '.join(extra)}", name)
    return block


def _curve(doc: dict, name: str) -> CurvePresentation:
    block = _block(doc, name, _CURVE_KEYS)
    return CurvePresentation(
        over_nums=_int_list(block, "overnums", name),
        over_kinds=_kind_list(block, name),
        signs=_int_list(block, "signs", name),
    )


def parse_scene(text: str) -> Scene:
    """Read a scene from its JSON text.  Only syntax and types are checked."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SceneParseError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    if not isinstance(doc, dict):
        raise SceneParseError("top level must be an object")
    for name in ("knot", "gamma"):
        if name not in doc:
            raise SceneParseError(f"missing block {name!r}")
    extra = sorted(set(doc) - {"knot", "gamma", "delta"})
    if extra:
        raise SceneParseError(f"unexpected block(s) {', '.join(extra)}")

    block = _block(doc, "knot", _KNOT_KEYS)
    knot = KnotPresentation(
        colors=_int_list(block, "colors", "knot"),
        over_nums=_int_list(block, "overnums", "knot"),
        over_kinds=_kind_list(block, "knot"),
        signs=_int_list(block, "signs", "knot"),
    )
    gamma = _curve(doc, "gamma")
    delta = _curve(doc, "delta") if doc.get("delta") is not None else None
    return Scene(knot, gamma, delta)


def load_scene(path) -> Scene:
    with open(path, encoding="utf-8") as fh:
        return parse_scene(fh.read())


def _curve_doc(curve: CurvePresentation) -> dict:
    return {
        "overnums": list(curve.over_nums),
        "overtypes": [k.value for k in curve.over_kinds],
        "signs": list(curve.signs),
    }


def scene_to_dict(scene: Scene) -> dict:
    doc = {
        "knot": {
            "colors": list(scene.knot.colors),
            "overnums": list(scene.knot.over_nums),
            "overtypes": [k.value for k in scene.knot.over_kinds],
            "signs": list(scene.knot.signs),
        },
        "gamma": _curve_doc(scene.gamma),
    }
    if scene.delta is not None:
        doc["delta"] = _curve_doc(scene.delta)
    return doc


def serialize_scene(scene: Scene) -> str:
    return json.dumps(scene_to_dict(scene), indent=2)


def make_knot(colors, over_nums, over_kinds, signs) -> KnotPresentation:
    """Build a knot block from plain sequences; kinds may be 'k'/'p' strings."""
    return KnotPresentation(
        tuple(colors), tuple(over_nums), tuple(OverKind(k) for k in over_kinds), tuple(signs)
    )


def make_curve(over_nums, over_kinds, signs) -> CurvePresentation:
    return CurvePresentation(tuple(over_nums), tuple(OverKind(k) for k in over_kinds), tuple(signs))


# -- validation --------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    code: str
    where: str
    message: str

    def __str__(self) -> str:
        return f"[{self.code}] {self.where}: {self.message}"


def _check_block(name: str, lengths: dict[str, int], signs, out: list[Violation]) -> bool:
    ok = True
    if len(set(lengths.values())) > 1:
        detail = ", ".join(f"{k}={v}" for k, v in lengths.items())
        out.append(Violation("length-mismatch", name, f"arrays differ in length ({detail})"))
        ok = False
    if min(lengths.values()) == 0:
        out.append(Violation("empty", name, "a block needs at least one arc"))
        ok = False
    for pos, s in enumerate(signs):
        if s not in (1, -1):
            out.append(Violation("sign-range", f"{name}[{pos}]", f"sign {s} is not +1 or -1"))
    return ok


def _check_overnums(name, curve: Presentation, m: int, s: Optional[int], out) -> None:
    for pos, (kind, f) in enumerate(zip(curve.over_kinds, curve.over_nums)):
        if kind is OverKind.KNOT:
            bound, owner = m, "knot"
        else:
            if s is None:
                continue
            bound, owner = s, "gamma"
        if not 0 <= f < bound:
            out.append(
                Violation(
                    "overnum-range",
                    f"{name}[{pos}]",
                    f"overstrand {f} is not an arc of {owner} (0..{bound - 1})",
                )
            )


def validate_scene(scene: Scene) -> list[Violation]:
    """Return every invariant violation found in ``scene``; empty means valid."""
    out: list[Violation] = []
    knot, gamma, delta = scene.knot, scene.gamma, scene.delta

    knot_ok = _check_block(
        "knot",
        {
            "colors": len(knot.colors),
            "overnums": len(knot.over_nums),
            "overtypes": len(knot.over_kinds),
            "signs": len(knot.signs),
        },
        knot.signs,
        out,
    )
    gamma_ok = _check_block(
        "gamma",
        {"overnums": len(gamma.over_nums), "overtypes": len(gamma.over_kinds), "signs": len(gamma.signs)},
        gamma.signs,
        out,
    )
    if delta is not None:
        _check_block(
            "delta",
            {"overnums": len(delta.over_nums), "overtypes": len(delta.over_kinds), "signs": len(delta.signs)},
            delta.signs,
            out,
        )

    for pos, c in enumerate(knot.colors):
        if c not in COLORS:
            out.append(Violation("color-range", f"knot[{pos}]", f"color {c} is not 1, 2 or 3"))
            knot_ok = False

    m = len(knot.colors)
    s = len(gamma.over_nums) if gamma_ok else None
    _check_overnums("knot", knot, m, s, out)
    _check_overnums("gamma", gamma, m, s, out)
    if delta is not None:
        _check_overnums("delta", delta, m, s, out)
    if not knot_ok or any(v.code == "overnum-range" and v.where.startswith("knot") for v in out):
        return out

    for i in range(m):
        here, after = knot.colors[i], knot.colors[(i + 1) % m]
        if knot.over_kinds[i] is OverKind.KNOT:
            over = knot.colors[knot.over_nums[i]]
            if len({here, after, over}) == 2:
                out.append(
                    Violation(
                        "coloring",
                        f"knot[{i}]",
                        f"colors (under {here}->{after}, over {over}) are neither one color nor three",
                    )
                )
        elif here != after:
            out.append(
                Violation(
                    "pseudo-wall-color",
                    f"knot[{i}]",
                    f"color changes {here}->{after} under a pseudo-branch curve",
                )
            )

    if len(set(knot.colors)) != 3:
        out.append(
            Violation("surjectivity", "knot", f"coloring uses only {sorted(set(knot.colors))}")
        )

    self_crossings = sum(1 for k in knot.over_kinds if k is OverKind.KNOT)
    if self_crossings % 2:
        out.append(
            Violation(
                "parity",
                "knot",
                f"{self_crossings} self-crossings; add a Reidemeister I kink to make it even",
            )
        )
    else:
        from .lifts import PlacementError, a2_placement

        try:
            a2_placement(knot)
        except PlacementError as exc:
            out.append(Violation("placement", "knot", str(exc)))
    return out


def planar_linking(curve: Presentation) -> int:
    """Signed count of the block's crossings under the first pseudo-branch curve.

    For the knot block this is lk(gamma, alpha); for the delta block it is
    lk(gamma, delta).
    """
    return sum(s for s, k in zip(curve.signs, curve.over_kinds) if k is OverKind.PSEUDO)
