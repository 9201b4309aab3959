"""Mutation of elements and diagrams with respect to a non-crossing diagram D."""
from __future__ import annotations

import enum

from .cells import (
    C,
    IN_D,
    NotNonCrossingError,
    OutsideNcError,
    RadiiPair,
    locate,
    replace,
    replaced_chords,
)
from .polygon import (
    ArcElement,
    Diagram,
    Diameter,
    PairOfArcs,
    chord_kind,
    diameter,
    is_noncrossing,
    nc,
    other_color,
    pair,
)


class Direction(enum.IntEnum):
    PLUS = 1
    MINUS = -1

    @classmethod
    def parse(cls, text: str) -> "Direction":
        try:
            return cls[text.upper()]
        except KeyError:
            raise ValueError(f"direction must be 'plus' or 'minus', got {text!r}") from None


def _diameter_color(d: Diagram, source: ArcElement, chord: int) -> str:
    diams = d.diameters
    if not diams:
        if not isinstance(source, Diameter):
            raise AssertionError("only diameters mutate to diameters when D has none")
        return other_color(source.color)
    colors = {x.color for x in diams}
    if len(colors) > 1:
        raise AssertionError("nc(D) \\ D has no diameters when D holds both colours")
    (color,) = colors
    if len(diams) == 1 and diams[0].a == chord % d.n:
        return other_color(color)
    return color


def _pull_back(d: Diagram, u, v, source: ArcElement) -> ArcElement:
    n = d.n
    if C in (u, v):
        x = v if u == C else u
        result: ArcElement = diameter(n, x, _diameter_color(d, source, x))
    else:
        kind = chord_kind(n, u, v)
        if kind == "edge":
            raise AssertionError(f"mutation reached the edge ({u}, {v})")
        if kind == "diameter":
            result = diameter(n, u, _diameter_color(d, source, u))
        else:
            result = pair(n, u, v)
    chords = {frozenset(a) for a in replaced_chords(replace(d)[result])}
    if frozenset((u, v)) not in chords:
        raise AssertionError(f"r_D({result!r}) does not realise ({u}, {v})")
    return result


def _check(d: Diagram) -> None:
    if not is_noncrossing(d):
        raise NotNonCrossingError(f"{d!r} is not pairwise non-crossing")


def mutate_element(d: Diagram, e: ArcElement, direction: Direction = Direction.PLUS) -> ArcElement:
    """mu_D (PLUS) or mu_D^- (MINUS) of a single element of nc(D)."""
    _check(d)
    loc = locate(d, e)
    if loc == IN_D:
        return e
    seq = loc.sequence
    k = len(seq)
    step = int(direction)
    return _pull_back(d, seq[(loc.i + step) % k], seq[(loc.j + step) % k], e)


def mutate_diagram(d: Diagram, x: Diagram, direction: Direction = Direction.PLUS) -> Diagram:
    _check(d)
    if not x.elements <= nc(d).elements:
        raise OutsideNcError("the diagram to mutate is not contained in nc(D)")
    return Diagram(x.n, frozenset(mutate_element(d, e, direction) for e in x.elements))


def is_mutation_pair(d: Diagram, x: Diagram, x2: Diagram) -> bool:
    """D <= X2 <= mu^-_D(X) and D <= X <= mu_D(X2)."""
    if not is_noncrossing(d):
        return False
    ncd = nc(d).elements
    if not (x.elements <= ncd and x2.elements <= ncd):
        return False
    return (
        d <= x2
        and x2 <= mutate_diagram(d, x, Direction.MINUS)
        and d <= x
        and x <= mutate_diagram(d, x2, Direction.PLUS)
    )


def shift(e: ArcElement) -> ArcElement:
    """Suspension: every vertex moves back by one, diameters change colour."""
    if isinstance(e, PairOfArcs):
        return pair(e.n, e.a - 1, e.b - 1)
    return diameter(e.n, e.a - 1, other_color(e.color))


def unshift(e: ArcElement) -> ArcElement:
    if isinstance(e, PairOfArcs):
        return pair(e.n, e.a + 1, e.b + 1)
    return diameter(e.n, e.a + 1, other_color(e.color))


def shift_diagram(x: Diagram, times: int = 1) -> Diagram:
    elems = x.elements
    for _ in range(times % (2 * x.n)):
        elems = frozenset(shift(e) for e in elems)
    return Diagram(x.n, elems)


__all__ = [
    "Direction",
    "RadiiPair",
    "is_mutation_pair",
    "mutate_diagram",
    "mutate_element",
    "shift",
    "shift_diagram",
    "unshift",
]
