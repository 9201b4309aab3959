"""Auslander-Reiten quiver coordinates and the frame calculus in mod kD_n.

Vertices are [i, j] (plain, i+2 <= j <= i+n-1) or [i, i+n] with a sign.
Three regions are used:

* derived category: any integer i;
* cluster category: 0 <= i <= n-1 (slice n-1 holds the shifted projectives);
* module category: 0 <= i <= n-2 (slice 0 holds the projectives).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .cells import C, IN_D, locate
from .polygon import (
    GREEN,
    RED,
    ArcElement,
    Diagram,
    Diameter,
    EdgePair,
    chord_kind,
    chord_orbit,
    crossing_count,
    pair,
)
from .mutation import Direction, mutate_element, shift, unshift


class ArVertexError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class ArVertex:
    i: int
    j: int
    sign: Optional[str] = None  # None, "+" or "-"

    def check(self, n: int) -> "ArVertex":
        if self.sign is None:
            if not self.i + 2 <= self.j <= self.i + n - 1:
                raise ArVertexError(f"{self} is not a plain vertex for n={n}")
        elif self.sign in "+-" and len(self.sign) == 1:
            if self.j != self.i + n:
                raise ArVertexError(f"{self} is not a signed vertex for n={n}")
        else:
            raise ArVertexError(f"bad sign {self.sign!r}")
        return self

    @classmethod
    def parse(cls, text: str) -> "ArVertex":
        m = re.fullmatch(r"\s*\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]\s*([+-]?)\s*", text)
        if not m:
            raise ArVertexError(f"cannot parse AR vertex {text!r}")
        return cls(int(m[1]), int(m[2]), m[3] or None)

    def __str__(self) -> str:
        return f"[{self.i},{self.j}]{self.sign or ''}"


def _flip(sign: str) -> str:
    return "-" if sign == "+" else "+"


def in_cluster_region(n: int, v: ArVertex) -> bool:
    v.check(n)
    return 0 <= v.i <= n - 1


def in_module_region(n: int, v: ArVertex) -> bool:
    v.check(n)
    return 0 <= v.i <= n - 2


def is_projective(n: int, v: ArVertex) -> bool:
    return in_module_region(n, v) and v.i == 0


def tau_inv_sigma(n: int, v: ArVertex) -> ArVertex:
    """The auto-equivalence tau^-1 Sigma on the derived-category AR quiver."""
    v.check(n)
    if v.sign is None:
        return ArVertex(v.i + n, v.j + n)
    sign = v.sign if n % 2 == 0 else _flip(v.sign)
    return ArVertex(v.i + n, v.i + 2 * n, sign)


def to_cluster(n: int, v: ArVertex) -> ArVertex:
    """Representative of the tau^-1 Sigma orbit of v inside the cluster region."""
    v.check(n)
    q = v.i // n
    i, j = v.i - q * n, v.j - q * n
    if v.sign is None:
        return ArVertex(i, j)
    sign = v.sign if n % 2 == 0 or q % 2 == 0 else _flip(v.sign)
    return ArVertex(i, j, sign)


def b_map(n: int, v: ArVertex) -> ArcElement:
    """Cluster-category vertex -> arc element."""
    if not in_cluster_region(n, v):
        raise ArVertexError(f"{v} is outside the cluster-category region for n={n}")
    if v.sign is None:
        return pair(n, v.i, v.j)
    even = v.i % 2 == 0
    if v.sign == "+":
        color = GREEN if even else RED
    else:
        color = RED if even else GREEN
    return Diameter(n, v.i, color)


def b_inv(e: ArcElement) -> ArVertex:
    n = e.n
    if isinstance(e, Diameter):
        even = e.a % 2 == 0
        plus = (e.color == GREEN) == even
        return ArVertex(e.a, e.a + n, "+" if plus else "-")
    for x, y in e.arcs:
        for s, t in ((x, y), (y, x)):
            gap = (t - s) % (2 * n)
            if s < n and 2 <= gap <= n - 1:
                return ArVertex(s, s + gap)
    raise AssertionError(f"no cluster coordinate for {e!r}")  # pragma: no cover


def module_vertices(n: int) -> list[ArVertex]:
    out = []
    for i in range(n - 1):
        out.extend(ArVertex(i, j) for j in range(i + 2, i + n))
        out.extend(ArVertex(i, i + n, s) for s in "+-")
    return out


def _plain(n: int, i: int, j: int) -> Optional[ArVertex]:
    if 0 <= i <= n - 2 and i + 2 <= j <= i + n - 1:
        return ArVertex(i, j)
    return None


def _signed(n: int, i: int, sign: str) -> Optional[ArVertex]:
    if 0 <= i <= n - 2:
        return ArVertex(i, i + n, sign)
    return None


def _collect(items) -> frozenset:
    return frozenset(v for v in items if v is not None)


@lru_cache(maxsize=None)
def _starting_frame(n: int, v: ArVertex) -> frozenset:
    i, j = v.i, v.j
    if v.sign is None:
        return _collect(
            [_plain(n, i, k) for k in range(j, i + n)]
            + [_signed(n, i, "+"), _signed(n, i, "-")]
            + [_plain(n, k, j) for k in range(i, j - 1)]
            + [_plain(n, k, i + n) for k in range(j, i + n - 1)]
        )
    return _collect(
        [_plain(n, k, i + n) for k in range(i + 1, i + n - 1)]
        + [_signed(n, k, v.sign if (k - i) % 2 == 0 else _flip(v.sign)) for k in range(i, n - 1)]
    )


@lru_cache(maxsize=None)
def _ending_frame(n: int, v: ArVertex) -> frozenset:
    i, j = v.i, v.j
    if v.sign is None:
        return _collect(
            [_plain(n, i, k) for k in range(i + 2, j + 1)]
            + [_plain(n, k, j) for k in range(j - n + 1, i + 1)]
            + [_signed(n, j - n, "+"), _signed(n, j - n, "-")]
            + [_plain(n, j - n, k) for k in range(j - n + 2, i + 1)]
        )
    return _collect(
        [_plain(n, i, k) for k in range(i + 2, i + n)]
        + [_signed(n, k, v.sign if (i - k) % 2 == 0 else _flip(v.sign)) for k in range(0, i + 1)]
    )


def _module(n: int, v: ArVertex) -> ArVertex:
    if not in_module_region(n, v):
        raise ArVertexError(f"{v} is outside the module-category region for n={n}")
    return v


def starting_frame(n: int, v: ArVertex) -> frozenset:
    return _starting_frame(n, _module(n, v))


def ending_frame(n: int, v: ArVertex) -> frozenset:
    return _ending_frame(n, _module(n, v))


def middle_term(n: int, source: ArVertex, target: ArVertex) -> tuple[ArVertex, ...]:
    """Middle of the non-split extension 0 -> M_target -> E -> M_source -> 0.

    Requires the b-images to cross exactly once.
    """
    _module(n, source)
    _module(n, target)
    if crossing_count(b_map(n, source), b_map(n, target)) != 1:
        raise ArVertexError(f"Ext between {source} and {target} is not one-dimensional")
    return tuple(sorted(_starting_frame(n, target) & _ending_frame(n, source)))


@dataclass(frozen=True)
class Triangle:
    """first -> sum(summands) -> third -> Sigma first; EdgePair entries are zero objects."""

    first: ArcElement
    summands: tuple
    third: ArcElement

    @property
    def nonzero(self) -> tuple[ArcElement, ...]:
        return tuple(s for s in self.summands if not isinstance(s, EdgePair))


def _side_pullback(d: Diagram, u, v) -> list:
    n = d.n
    if C in (u, v) or chord_kind(n, u, v) == "diameter":
        x = v if u == C else u
        return [e for e in d.diameters if e.a == x % n]
    return [chord_orbit(n, u, v)]


def mutation_triangle(d: Diagram, e: ArcElement) -> Triangle:
    """The triangle e -> d -> mu^-_D(e) -> Sigma e with d built from cell sides."""
    loc = locate(d, e)
    if loc == IN_D:
        raise ValueError(f"{e!r} lies in D")
    third = mutate_element(d, e, Direction.MINUS)
    seq = loc.sequence
    i, j = loc.i, loc.j
    sides = [(seq[i - 1], seq[i]), (seq[j - 1], seq[j])]
    both_diameters = isinstance(e, Diameter) and isinstance(third, Diameter)
    summands: list = []
    for u, v in sides:
        if both_diameters and C in (u, v):
            continue  # the self-folded case: radii sides drop out
        for s in _side_pullback(d, u, v):
            if s not in summands:
                summands.append(s)
    key = lambda s: (1, s.a, 0) if isinstance(s, EdgePair) else (0,) + s.sort_key
    return Triangle(e, tuple(sorted(summands, key=key)), third)


@dataclass(frozen=True)
class FrameCheck:
    rotation: int  # number of shifts applied
    start: ArVertex
    end: ArVertex
    frames: tuple[ArcElement, ...]
    claimed: tuple[ArcElement, ...]

    @property
    def agrees(self) -> bool:
        return self.frames == self.claimed


def _sort(elems) -> tuple:
    return tuple(sorted(set(elems), key=lambda s: s.sort_key))


def _shift_n(e: ArcElement, s: int) -> ArcElement:
    for _ in range(s):
        e = shift(e)
    return e


def frame_checks(tri: Triangle, rotations: str = "all") -> list[FrameCheck]:
    """Compare the triangle's middle term against frame intersections.

    Every rotation of the triangle with indecomposable outer terms is shifted
    through all 2n positions; whenever its first term is a projective module,
    its third term a module and the two cross once, the frame intersection
    must reproduce the middle term.  With rotations="base" only the triangle
    itself is used.
    """
    n = tri.first.n
    mid = tri.nonzero
    variants = [(tri.first, mid, tri.third)]
    if rotations == "all" and len(mid) == 1:
        (m,) = mid
        variants.append((unshift(tri.third), (tri.first,), m))
        variants.append((unshift(m), (unshift(tri.third),), tri.first))
    checks = []
    for a, middle, b in variants:
        for s in range(2 * n):
            a2, b2 = _shift_n(a, s), _shift_n(b, s)
            va, vb = b_inv(a2), b_inv(b2)
            if not (is_projective(n, va) and in_module_region(n, vb)):
                continue
            if crossing_count(a2, b2) != 1:
                continue
            frames = _sort(b_map(n, v) for v in middle_term(n, vb, va))
            claimed = _sort(_shift_n(x, s) for x in middle)
            checks.append(FrameCheck(s, va, vb, frames, claimed))
    return checks


def shift_triangle_consistent(tri: Triangle) -> bool:
    """A zero middle term forces third = Sigma first."""
    return bool(tri.nonzero) or tri.third == shift(tri.first)
