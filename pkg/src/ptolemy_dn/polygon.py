"""Arcs, coloured diameters and crossing arithmetic in the regular 2n-gon.

Vertices are labelled 0, ..., 2n-1 anticlockwise and every computation on
them is modulo 2n.  The atoms of a diagram are pi-rotation orbits: a pair of
arcs {(a, b), (a+n, b+n)} or a diameter (a, a+n) carrying a colour.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Union

RED = "red"
GREEN = "green"
COLORS = (RED, GREEN)


class RankError(ValueError):
    """Raised for an invalid rank or for mixing elements of different ranks."""


class ElementError(ValueError):
    """Raised when an arc element is malformed (edge, out of range, ...)."""


def check_rank(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n < 4:
        raise RankError(f"rank must be an integer >= 4, got {n!r}")
    return n


def other_color(color: str) -> str:
    return GREEN if color == RED else RED


def chords_cross(n: int, i: int, j: int, k: int, l: int) -> bool:
    """True iff the chords (i, j) and (k, l) of the 2n-gon cross.

    Endpoints must be four distinct boundary vertices and alternate around
    the boundary.
    """
    m = 2 * n
    i, j, k, l = i % m, j % m, k % m, l % m
    if len({i, j, k, l}) < 4:
        return False
    span = (j - i) % m
    return ((k - i) % m < span) != ((l - i) % m < span)


def _canonical_pair(n: int, a: int, b: int) -> tuple[int, int]:
    m = 2 * n
    a, b = a % m, b % m
    lo = min(a, b, (a + n) % m, (b + n) % m)
    if lo in (a, b):
        return (min(a, b), max(a, b))
    a2, b2 = (a + n) % m, (b + n) % m
    return (min(a2, b2), max(a2, b2))


@dataclass(frozen=True)
class PairOfArcs:
    """The orbit {(a, b), (a+n, b+n)}; (a, b) is the member holding the smallest vertex."""

    n: int
    a: int
    b: int

    def __post_init__(self) -> None:
        n, m = self.n, 2 * self.n
        if not (0 <= self.a < m and 0 <= self.b < m):
            raise ElementError(f"vertex out of range for n={n}: ({self.a}, {self.b})")
        gap = (self.b - self.a) % m
        if gap == 0 or gap == n:
            raise ElementError(f"({self.a}, {self.b}) is not a pair of arcs")
        if gap in (1, m - 1):
            raise ElementError(f"({self.a}, {self.b}) is an edge")
        if _canonical_pair(n, self.a, self.b) != (self.a, self.b):
            raise ElementError(f"({self.a}, {self.b}) is not canonical; use pair()")

    @property
    def arcs(self) -> tuple[tuple[int, int], tuple[int, int]]:
        m = 2 * self.n
        return ((self.a, self.b), ((self.a + self.n) % m, (self.b + self.n) % m))

    @property
    def sort_key(self) -> tuple[int, int, int]:
        return (0, self.a, self.b)

    def __repr__(self) -> str:
        return f"PairOfArcs({self.a},{self.b})"


@dataclass(frozen=True)
class Diameter:
    """A coloured diameter (a, a+n), canonical 0 <= a < n."""

    n: int
    a: int
    color: str

    def __post_init__(self) -> None:
        if not 0 <= self.a < self.n:
            raise ElementError(f"diameter index {self.a} not canonical for n={self.n}")
        if self.color not in COLORS:
            raise ElementError(f"unknown colour {self.color!r}")

    @property
    def arcs(self) -> tuple[tuple[int, int]]:
        return ((self.a, self.a + self.n),)

    @property
    def sort_key(self) -> tuple[int, int, int]:
        return (1, self.a, 0 if self.color == RED else 1)

    def recolored(self, color: str) -> "Diameter":
        return Diameter(self.n, self.a, color)

    def __repr__(self) -> str:
        return f"Diameter({self.a},{self.color})"


@dataclass(frozen=True)
class EdgePair:
    """The orbit of boundary edges {(a, a+1), (a+n, a+n+1)}, canonical 0 <= a < n.

    Never a member of a Diagram; it stands for the zero object.
    """

    n: int
    a: int

    def __post_init__(self) -> None:
        if not 0 <= self.a < self.n:
            raise ElementError(f"edge index {self.a} not canonical for n={self.n}")

    def __repr__(self) -> str:
        return f"EdgePair({self.a})"


ArcElement = Union[PairOfArcs, Diameter]


def pair(n: int, a: int, b: int) -> PairOfArcs:
    """Canonical pair of arcs through the chord (a, b)."""
    a2, b2 = _canonical_pair(n, a, b)
    return PairOfArcs(n, a2, b2)


def diameter(n: int, a: int, color: str) -> Diameter:
    return Diameter(n, a % n, color)


def edge(n: int, a: int) -> EdgePair:
    return EdgePair(n, a % n)


def chord_kind(n: int, x: int, y: int) -> str:
    """Classify a boundary chord as 'edge', 'diameter' or 'pair'."""
    gap = (y - x) % (2 * n)
    if gap == 0:
        raise ElementError(f"degenerate chord ({x}, {y})")
    if gap in (1, 2 * n - 1):
        return "edge"
    if gap == n:
        return "diameter"
    return "pair"


def chord_orbit(n: int, x: int, y: int) -> Union[PairOfArcs, EdgePair]:
    """Orbit of a non-diameter chord: a pair of arcs or a pair of edges."""
    kind = chord_kind(n, x, y)
    if kind == "edge":
        lo = x if (y - x) % (2 * n) == 1 else y
        return edge(n, lo)
    if kind == "diameter":
        raise ElementError(f"({x}, {y}) is a diameter; it has no uncoloured orbit")
    return pair(n, x, y)


def rotate_element(e: ArcElement, k: int) -> ArcElement:
    """Shift every vertex by k, keeping colours."""
    if isinstance(e, PairOfArcs):
        return pair(e.n, e.a + k, e.b + k)
    return diameter(e.n, e.a + k, e.color)


def crossing_count(e1: ArcElement, e2: ArcElement) -> int:
    """Number of times two elements cross: 0, 1 or 2."""
    if e1.n != e2.n:
        raise RankError(f"rank mismatch: {e1.n} vs {e2.n}")
    n = e1.n
    if isinstance(e1, Diameter) and isinstance(e2, Diameter):
        if e1.color == e2.color or e1.a == e2.a:
            return 0
        # distinct diameters always cross
        assert chords_cross(n, e1.a, e1.a + n, e2.a, e2.a + n)
        return 1
    if isinstance(e1, Diameter) or isinstance(e2, Diameter):
        d, p = (e1, e2) if isinstance(e1, Diameter) else (e2, e1)
        (i, j), = d.arcs
        return int(chords_cross(n, i, j, *p.arcs[0]))
    (i, j) = e1.arcs[0]
    return sum(chords_cross(n, i, j, k, l) for k, l in e2.arcs)


@lru_cache(maxsize=None)
def full_alphabet(n: int) -> tuple[ArcElement, ...]:
    """All n**2 elements in the canonical order used for bitmask indices."""
    check_rank(n)
    elements: set[ArcElement] = set()
    for a in range(2 * n):
        for b in range(2 * n):
            if a != b and chord_kind(n, a, b) == "pair":
                elements.add(pair(n, a, b))
    for a in range(n):
        for color in COLORS:
            elements.add(Diameter(n, a, color))
    return tuple(sorted(elements, key=lambda e: e.sort_key))


@lru_cache(maxsize=None)
def element_index(n: int) -> dict[ArcElement, int]:
    return {e: i for i, e in enumerate(full_alphabet(n))}


@lru_cache(maxsize=None)
def crossing_table(n: int) -> tuple[tuple[int, ...], ...]:
    """crossing_table(n)[i][j] = crossing_count of alphabet elements i and j."""
    alph = full_alphabet(n)
    return tuple(tuple(crossing_count(x, y) for y in alph) for x in alph)


@lru_cache(maxsize=None)
def noncrossing_masks(n: int) -> tuple[int, ...]:
    """Bit j of entry i is set iff elements i and j do not cross."""
    table = crossing_table(n)
    return tuple(
        sum(1 << j for j, c in enumerate(row) if c == 0) for row in table
    )


def full_mask(n: int) -> int:
    return (1 << (n * n)) - 1


def mask_of(n: int, elements: Iterable[ArcElement]) -> int:
    index = element_index(n)
    mask = 0
    for e in elements:
        mask |= 1 << index[e]
    return mask


def elements_of(n: int, mask: int) -> tuple[ArcElement, ...]:
    alph = full_alphabet(n)
    return tuple(alph[i] for i in range(n * n) if mask >> i & 1)


def nc_mask(n: int, mask: int) -> int:
    """Mask of elements crossing no element of the given mask."""
    out = full_mask(n)
    ncm = noncrossing_masks(n)
    i = 0
    while mask:
        if mask & 1:
            out &= ncm[i]
        mask >>= 1
        i += 1
    return out


@dataclass(frozen=True)
class Diagram:
    """A set of arc elements of a fixed rank."""

    n: int
    elements: frozenset

    def __post_init__(self) -> None:
        check_rank(self.n)
        for e in self.elements:
            if not isinstance(e, (PairOfArcs, Diameter)):
                raise ElementError(f"{e!r} cannot lie in a diagram")
            if e.n != self.n:
                raise RankError(f"element {e!r} has rank {e.n}, diagram has {self.n}")

    @classmethod
    def of(cls, n: int, elements: Iterable[ArcElement] = ()) -> "Diagram":
        return cls(n, frozenset(elements))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "Diagram":
        return cls(n, frozenset(elements_of(n, mask)))

    @property
    def mask(self) -> int:
        return mask_of(self.n, self.elements)

    def sorted(self) -> list[ArcElement]:
        return sorted(self.elements, key=lambda e: e.sort_key)

    @property
    def diameters(self) -> list[Diameter]:
        return [e for e in self.sorted() if isinstance(e, Diameter)]

    def __contains__(self, e: object) -> bool:
        return e in self.elements

    def __iter__(self) -> Iterator[ArcElement]:
        return iter(self.sorted())

    def __len__(self) -> int:
        return len(self.elements)

    def __le__(self, other: "Diagram") -> bool:
        return self.elements <= other.elements

    def __or__(self, other: "Diagram") -> "Diagram":
        return Diagram(self.n, self.elements | other.elements)

    def __and__(self, other: "Diagram") -> "Diagram":
        return Diagram(self.n, self.elements & other.elements)

    def __sub__(self, other: "Diagram") -> "Diagram":
        return Diagram(self.n, self.elements - other.elements)

    def __repr__(self) -> str:
        return f"Diagram(n={self.n}, {self.sorted()})"


def nc(x: Diagram) -> Diagram:
    """All elements crossing no element of x."""
    return Diagram.from_mask(x.n, nc_mask(x.n, x.mask))


def is_noncrossing(x: Diagram) -> bool:
    return x.elements <= nc(x).elements


def rotate(x: Diagram, k: int) -> Diagram:
    return Diagram(x.n, frozenset(rotate_element(e, k) for e in x.elements))
