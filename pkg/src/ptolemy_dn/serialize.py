"""JSON encoding of elements and diagrams."""
from __future__ import annotations

import json
from typing import Any, Union

from .polygon import (
    COLORS,
    ArcElement,
    Diagram,
    Diameter,
    EdgePair,
    ElementError,
    PairOfArcs,
    RankError,
    check_rank,
    chord_kind,
    pair,
)


class FormatError(ValueError):
    """Malformed diagram or element JSON."""


def element_to_json(e: Union[ArcElement, EdgePair]) -> dict:
    if isinstance(e, PairOfArcs):
        return {"kind": "pair", "a": e.a, "b": e.b}
    if isinstance(e, Diameter):
        return {"kind": "diameter", "a": e.a, "color": e.color}
    if isinstance(e, EdgePair):
        return {"kind": "zero", "a": e.a}
    raise TypeError(f"cannot encode {e!r}")


def _int(obj: dict, key: str) -> int:
    v = obj.get(key)
    if not isinstance(v, int) or isinstance(v, bool):
        raise FormatError(f"field {key!r} must be an integer, got {v!r}")
    return v


def element_from_json(n: int, obj: Any) -> ArcElement:
    """Decode and canonicalise one element; vertices must lie in [0, 2n)."""
    if not isinstance(obj, dict):
        raise FormatError(f"element must be an object, got {obj!r}")
    kind = obj.get("kind")
    m = 2 * n
    try:
        if kind == "pair":
            a, b = _int(obj, "a"), _int(obj, "b")
            if not (0 <= a < m and 0 <= b < m):
                raise FormatError(f"vertex out of range [0, {m}): ({a}, {b})")
            if a == b:
                raise FormatError(f"degenerate chord ({a}, {b})")
            k = chord_kind(n, a, b)
            if k != "pair":
                raise FormatError(f"({a}, {b}) is {'an edge' if k == 'edge' else 'a diameter'}, not a pair of arcs")
            return pair(n, a, b)
        if kind == "diameter":
            a = _int(obj, "a")
            color = obj.get("color")
            if color not in COLORS:
                raise FormatError(f"diameter colour must be red or green, got {color!r}")
            if not 0 <= a < m:
                raise FormatError(f"vertex out of range [0, {m}): {a}")
            return Diameter(n, a % n, color)
    except ElementError as exc:
        raise FormatError(str(exc)) from exc
    raise FormatError(f"unknown element kind {kind!r}")


def diagram_to_json(x: Diagram) -> dict:
    return {"n": x.n, "elements": [element_to_json(e) for e in x.sorted()]}


def diagram_from_json(obj: Any) -> Diagram:
    if not isinstance(obj, dict):
        raise FormatError("diagram must be a JSON object")
    n = obj.get("n")
    try:
        check_rank(n)
    except RankError as exc:
        raise FormatError(str(exc)) from exc
    raw = obj.get("elements")
    if not isinstance(raw, list):
        raise FormatError("'elements' must be a list")
    seen: set = set()
    for item in raw:
        e = element_from_json(n, item)
        if e in seen:
            raise FormatError(f"duplicate element {e!r}")
        seen.add(e)
    return Diagram(n, frozenset(seen))


def dumps(x: Diagram) -> str:
    return json.dumps(diagram_to_json(x), sort_keys=True)


def loads(text: str) -> Diagram:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    return diagram_from_json(obj)


def side_atom_to_json(r) -> dict:
    """Encode an element of r_D(D) or an edge pair (a cell side)."""
    from .cells import RadiiPair

    if isinstance(r, RadiiPair):
        return {"kind": "radii", "a": r.a, "color": r.color}
    if isinstance(r, EdgePair):
        return {"kind": "edge", "a": r.a}
    return element_to_json(r)
