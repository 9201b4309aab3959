"""Torsion parts: the Ptolemy hull axioms and the nc-closure test."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .polygon import (
    COLORS,
    ArcElement,
    Diagram,
    Diameter,
    EdgePair,
    PairOfArcs,
    chord_kind,
    chord_orbit,
    chords_cross,
    crossing_count,
    diameter,
    element_index,
    full_alphabet,
    nc_mask,
)


@dataclass(frozen=True)
class PtolemyViolation:
    axiom: str  # "Pt1" | "Pt2" | "Pt3"
    witnesses: tuple[ArcElement, ArcElement]
    missing: tuple[ArcElement, ...]

    def to_json(self) -> dict:
        from .serialize import element_to_json

        return {
            "axiom": self.axiom,
            "witnesses": [element_to_json(e) for e in self.witnesses],
            "missing": [element_to_json(e) for e in self.missing],
        }


def _hull(i: int, j: int, k: int, l: int) -> tuple[tuple[int, int], ...]:
    return ((i, k), (k, j), (j, l), (l, i))


@lru_cache(maxsize=1 << 16)
def hull_requirements(e1: ArcElement, e2: ArcElement) -> tuple[tuple[str, tuple[ArcElement, ...]], ...]:
    """Axiom requirements for every crossing choice of representative arcs.

    Returns (axiom, required elements) pairs; edges among the hull
    orbits are dropped since they always lie in X together with the edges.
    """
    n = e1.n
    out = []
    for i, j in e1.arcs:
        for k, l in e2.arcs:
            if not chords_cross(n, i, j, k, l):
                continue
            if isinstance(e1, PairOfArcs) and isinstance(e2, PairOfArcs):
                req: list[ArcElement] = []
                for x, y in _hull(i, j, k, l):
                    kind = chord_kind(n, x, y)
                    if kind == "pair":
                        req.append(chord_orbit(n, x, y))
                    elif kind == "diameter":
                        req.extend(diameter(n, x, c) for c in COLORS)
                out.append(("Pt1", tuple(req)))
            elif isinstance(e1, Diameter) and isinstance(e2, Diameter):
                if e1.color == e2.color:
                    continue
                req = []
                for x, y in ((i, k), (k, j)):
                    orbit = chord_orbit(n, x, y)  # never a diameter here
                    if isinstance(orbit, PairOfArcs):
                        req.append(orbit)
                out.append(("Pt2", tuple(req)))
            else:
                if isinstance(e1, Diameter):
                    d, (a, b), (p, q) = e1, (i, j), (k, l)
                    partner = e2
                else:
                    d, (a, b), (p, q) = e2, (k, l), (i, j)
                    partner = e1
                req = []
                for x, y in _hull(a, b, p, q):
                    orbit = chord_orbit(n, x, y)
                    if isinstance(orbit, EdgePair):
                        continue
                    if crossing_count(orbit, partner) == 0:
                        req.append(orbit)
                req.append(diameter(n, p, d.color))
                req.append(diameter(n, q, d.color))
                out.append(("Pt3", tuple(req)))
    return tuple(out)


def ptolemy_violation(x: Diagram) -> PtolemyViolation | None:
    """The first violated axiom instance (in canonical element order), or None."""
    elems = x.sorted()
    for e1 in elems:
        for e2 in elems:
            for axiom, req in hull_requirements(e1, e2):
                missing = tuple(dict.fromkeys(r for r in req if r not in x.elements))
                if missing:
                    return PtolemyViolation(axiom, (e1, e2), missing)
    return None


def is_ptolemy(x: Diagram) -> bool:
    return ptolemy_violation(x) is None


def is_torsion_part(x: Diagram) -> bool:
    """X is a torsion part iff nc(nc(X)) == X."""
    m = x.mask
    return nc_mask(x.n, nc_mask(x.n, m)) == m


@lru_cache(maxsize=None)
def requirement_table(n: int) -> tuple[tuple[int, ...], ...]:
    """table[i][j]: mask of everything the axioms demand when elements i, j lie in X.

    Zero when i and j have no crossing representatives.
    """
    alph = full_alphabet(n)
    index = element_index(n)
    rows = []
    for e1 in alph:
        row = []
        for e2 in alph:
            m = 0
            for _, req in hull_requirements(e1, e2):
                for r in req:
                    m |= 1 << index[r]
            row.append(m)
        rows.append(tuple(row))
    return tuple(rows)


def required_mask(n: int, mask: int) -> int:
    """Union of all axiom requirements triggered by the elements of mask."""
    table = requirement_table(n)
    bits = [i for i in range(n * n) if mask >> i & 1]
    need = 0
    for i in bits:
        row = table[i]
        for j in bits:
            need |= row[j]
    return need


def is_ptolemy_mask(n: int, mask: int) -> bool:
    return required_mask(n, mask) & ~mask == 0


def ptolemy_saturate(n: int, mask: int) -> int:
    """Smallest Ptolemy diagram containing mask, by repeated hull completion."""
    while True:
        grown = mask | required_mask(n, mask)
        if grown == mask:
            return mask
        mask = grown
