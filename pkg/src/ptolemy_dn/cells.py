"""The replacement map r_D, exact clockwise angles, and D-cells.

Cell vertices are boundary vertices 0..2n-1 or the centre, spelled ``"c"``.
Angles are exact integers in units of pi/(2n); a full turn is 4n units.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Union

from .polygon import (
    ArcElement,
    Diagram,
    Diameter,
    EdgePair,
    PairOfArcs,
    chord_kind,
    chord_orbit,
    full_alphabet,
    is_noncrossing,
    nc,
    other_color,
)

C = "c"
CellVertex = Union[int, str]


class NotNonCrossingError(ValueError):
    pass


class OutsideNcError(ValueError):
    pass


@dataclass(frozen=True)
class RadiiPair:
    """The coloured pair of radii {(a, c), (a+n, c)}, canonical 0 <= a < n."""

    n: int
    a: int
    color: str

    def __post_init__(self) -> None:
        if not 0 <= self.a < self.n:
            raise ValueError(f"radii index {self.a} not canonical for n={self.n}")

    @property
    def arcs(self) -> tuple[tuple[int, str], tuple[int, str]]:
        return ((self.a, C), (self.a + self.n, C))

    def __repr__(self) -> str:
        return f"RadiiPair({self.a},{self.color})"


ReplacedElement = Union[PairOfArcs, Diameter, RadiiPair]


def replaced_chords(r: Union[ReplacedElement, EdgePair]) -> tuple[tuple, ...]:
    if isinstance(r, EdgePair):
        m = 2 * r.n
        return ((r.a, r.a + 1), (r.a + r.n, (r.a + r.n + 1) % m))
    return r.arcs


def _require_noncrossing(d: Diagram) -> None:
    if not is_noncrossing(d):
        raise NotNonCrossingError(f"{d!r} is not pairwise non-crossing")


@lru_cache(maxsize=4096)
def replace(d: Diagram) -> dict[ArcElement, ReplacedElement]:
    """r_D on the whole alphabet."""
    _require_noncrossing(d)
    out: dict[ArcElement, ReplacedElement] = {}
    has_diameters = any(isinstance(e, Diameter) for e in d.elements)
    for e in full_alphabet(d.n):
        if isinstance(e, PairOfArcs) or not has_diameters:
            out[e] = e
        elif e.recolored(other_color(e.color)) in d.elements:
            out[e] = e
        else:
            out[e] = RadiiPair(d.n, e.a, e.color)
    return out


def replace_inverse(d: Diagram) -> dict[ReplacedElement, ArcElement]:
    return {r: e for e, r in replace(d).items()}


def direction(n: int, at: CellVertex, to: CellVertex) -> int:
    """Direction of the ray at -> to, up to a per-vertex constant offset."""
    if at == C:
        return 2 * to
    if to == C:
        return n
    return (to - at) % (2 * n)


def angle_rank(n: int, prev: CellVertex, at: CellVertex, cand: CellVertex) -> int:
    """Clockwise angle from ray at->prev to ray at->cand, in [0, 4n)."""
    if prev == at or cand == at:
        raise ValueError("degenerate angle")
    return (direction(n, at, prev) - direction(n, at, cand)) % (4 * n)


def _side_map(d: Diagram) -> dict[frozenset, list]:
    """Chord -> list of the r_D(D) atoms (or edge orbit) realising it."""
    n = d.n
    sides: dict[frozenset, list] = {}
    r = replace(d)
    for e in d.sorted():
        for arc in replaced_chords(r[e]):
            key = frozenset(x % (2 * n) if x != C else C for x in arc)
            sides.setdefault(key, []).append(r[e])
    for v in range(2 * n):
        sides.setdefault(frozenset((v, (v + 1) % (2 * n))), []).append(
            chord_orbit(n, v, v + 1)
        )
    return sides


def _vertex_key(n: int, v: CellVertex) -> int:
    return 2 * n if v == C else v


def _rotate_vertex(n: int, v: CellVertex, k: int) -> CellVertex:
    return C if v == C else (v + k) % (2 * n)


def _canonical_cycle(n: int, cycle: tuple) -> tuple:
    start = min(range(len(cycle)), key=lambda t: _vertex_key(n, cycle[t]))
    return cycle[start:] + cycle[:start]


@dataclass(frozen=True)
class CellPair:
    n: int
    cell: tuple
    partner: tuple
    sides: tuple  # sides[t]: atoms realising (cell[t], cell[t+1])

    @property
    def invariant(self) -> bool:
        return self.cell == self.partner

    @property
    def central(self) -> bool:
        return C in self.cell or self.invariant

    @property
    def members(self) -> tuple[tuple, ...]:
        return (self.cell,) if self.invariant else (self.cell, self.partner)

    def interior_angles(self, member: int = 0) -> list[int]:
        seq = self.members[member]
        k = len(seq)
        return [angle_rank(self.n, seq[t - 1], seq[t], seq[(t + 1) % k]) for t in range(k)]


def _walk_faces(d: Diagram) -> tuple[list[tuple], dict[frozenset, list]]:
    n = d.n
    sides = _side_map(d)
    adj: dict[CellVertex, set] = {}
    for key in sides:
        u, v = tuple(key)
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)

    def step(prev, cur):
        best, best_angle = None, None
        for w in adj[cur]:
            if w == prev:
                continue
            a = angle_rank(n, prev, cur, w)
            if a == 0:
                continue
            if best_angle is None or a < best_angle:
                best, best_angle = w, a
        return best

    seen: set[tuple] = set()
    faces = []
    for u in sorted(adj, key=lambda v: _vertex_key(n, v)):
        for v in sorted(adj[u], key=lambda v: _vertex_key(n, v)):
            if (u, v) in seen:
                continue
            cycle = []
            prev, cur = u, v
            while True:
                cycle.append(prev)
                seen.add((prev, cur))
                prev, cur = cur, step(prev, cur)
                if (prev, cur) == (u, v):
                    break
            faces.append(tuple(cycle))
    return faces, sides


@lru_cache(maxsize=4096)
def build_cells(d: Diagram) -> tuple[CellPair, ...]:
    """All pairs of D-cells, each cell listed anticlockwise."""
    _require_noncrossing(d)
    n = d.n
    faces, sides = _walk_faces(d)
    cells = []
    for face in faces:
        k = len(face)
        angles = [angle_rank(n, face[t - 1], face[t], face[(t + 1) % k]) for t in range(k)]
        if any(a > 2 * n for a in angles):
            continue  # the unbounded face, traversed clockwise
        cells.append(_canonical_cycle(n, face))
    seen = set()
    pairs = []
    for cell in sorted(cells, key=lambda cy: [_vertex_key(n, v) for v in cy]):
        if cell in seen:
            continue
        partner = _canonical_cycle(n, tuple(_rotate_vertex(n, v, n) for v in cell))
        seen.add(cell)
        seen.add(partner)
        k = len(cell)
        side_atoms = tuple(
            tuple(sides[frozenset((cell[t], cell[(t + 1) % k]))]) for t in range(k)
        )
        pairs.append(CellPair(n, cell, partner, side_atoms))
    return tuple(pairs)


IN_D = "in-D"


@dataclass(frozen=True)
class Location:
    cells: CellPair
    member: int
    i: int  # 0-based positions in cells.members[member]
    j: int

    @property
    def sequence(self) -> tuple:
        return self.cells.members[self.member]


def _diagonal_hits(d: Diagram, e: ArcElement) -> Iterator[Location]:
    n = d.n
    chords = replaced_chords(replace(d)[e])
    for cp in build_cells(d):
        for member, seq in enumerate(cp.members):
            pos = {v: t for t, v in enumerate(seq)}
            k = len(seq)
            for x, y in chords:
                x = x if x == C else x % (2 * n)
                y = y if y == C else y % (2 * n)
                if x in pos and y in pos:
                    i, j = pos[x], pos[y]
                    if (j - i) % k not in (0, 1, k - 1):
                        yield Location(cp, member, i, j)


def locate(d: Diagram, e: ArcElement) -> Union[Location, str]:
    """Cell pair containing e as a diagonal, or IN_D when e lies in D."""
    if e in d.elements:
        return IN_D
    if e not in nc(d).elements:
        raise OutsideNcError(f"{e!r} crosses an element of D")
    for loc in _diagonal_hits(d, e):
        return loc
    raise AssertionError(f"{e!r} in nc(D) \\ D lies in no cell")  # pragma: no cover


def containing_cells(d: Diagram, e: ArcElement) -> list[CellPair]:
    """Every cell pair holding a chord of r_D(e) as a diagonal, without early exit."""
    _require_noncrossing(d)
    out: list[CellPair] = []
    for loc in _diagonal_hits(d, e):
        if loc.cells not in out:
            out.append(loc.cells)
    return out


def chord_of(n: int, u: CellVertex, v: CellVertex) -> str:
    """Classify a chord between cell vertices: 'radii', 'diameter', 'pair' or 'edge'."""
    if C in (u, v):
        return "radii"
    return chord_kind(n, u, v)
