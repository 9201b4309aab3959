import cmath
import math

import pytest
from hypothesis import given

from conftest import noncrossing_diagrams
from ptolemy_dn.cells import (
    C,
    IN_D,
    NotNonCrossingError,
    OutsideNcError,
    RadiiPair,
    angle_rank,
    build_cells,
    containing_cells,
    locate,
    replace,
    replace_inverse,
    replaced_chords,
)
from ptolemy_dn.census import all_noncrossing_masks
from ptolemy_dn.polygon import GREEN, RED, Diagram, Diameter, full_alphabet, nc, pair


def _all_nc(n):
    return [Diagram.from_mask(n, m) for m in all_noncrossing_masks(n)]


def _pt(n, v):
    return 0j if v == C else cmath.exp(1j * math.pi * v / n)


def _area(n, seq):
    pts = [_pt(n, v) for v in seq]
    return 0.5 * sum((p.conjugate() * q).imag for p, q in zip(pts, pts[1:] + pts[:1]))


def _proper_cross(p, q, r, s):
    def orient(a, b, c):
        return ((b - a).conjugate() * (c - a)).imag

    eps = 1e-9
    d1, d2, d3, d4 = orient(p, q, r), orient(p, q, s), orient(r, s, p), orient(r, s, q)
    return d1 * d2 < -eps and d3 * d4 < -eps


def test_replace_examples():
    n = 4
    r = replace(Diagram.of(n))
    assert all(r[e] == e for e in full_alphabet(n))
    r = replace(Diagram.of(n, [Diameter(n, 0, RED)]))
    assert r[Diameter(n, 0, RED)] == RadiiPair(n, 0, RED)
    assert r[Diameter(n, 0, GREEN)] == Diameter(n, 0, GREEN)
    assert r[Diameter(n, 1, GREEN)] == RadiiPair(n, 1, GREEN)
    assert r[pair(n, 0, 2)] == pair(n, 0, 2)
    r = replace(Diagram.of(n, [Diameter(n, 0, RED), Diameter(n, 1, RED)]))
    assert isinstance(r[Diameter(n, 0, RED)], RadiiPair)
    assert isinstance(r[Diameter(n, 1, RED)], RadiiPair)
    r = replace(Diagram.of(n, [Diameter(n, 0, RED), Diameter(n, 0, GREEN)]))
    assert r[Diameter(n, 0, RED)] == Diameter(n, 0, RED)


def test_replace_requires_noncrossing():
    with pytest.raises(NotNonCrossingError):
        replace(Diagram.of(4, [Diameter(4, 0, RED), Diameter(4, 1, GREEN)]))


@given(noncrossing_diagrams())
def test_replace_is_bijective(d):
    assert len(replace_inverse(d)) == d.n * d.n


def test_angle_examples():
    assert angle_rank(4, 0, 1, 2) == 6
    assert angle_rank(4, 0, 1, C) == angle_rank(4, 0, 1, 5)
    assert angle_rank(4, 0, 1, 0) == 0
    # the straight angle at the centre
    assert angle_rank(4, 0, C, 4) == 8
    with pytest.raises(ValueError):
        angle_rank(4, 1, 1, 2)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_angle_matches_geometry(n):
    verts = list(range(2 * n)) + [C]
    for y in verts:
        for x in verts:
            for z in verts:
                if y in (x, z):
                    continue
                u, w = _pt(n, x) - _pt(n, y), _pt(n, z) - _pt(n, y)
                clockwise = (cmath.phase(u) - cmath.phase(w)) % (2 * math.pi)
                assert angle_rank(n, x, y, z) == round(clockwise / (math.pi / (2 * n))) % (4 * n)


def test_cell_examples():
    n = 4
    (cp,) = build_cells(Diagram.of(n))
    assert cp.invariant and cp.cell == tuple(range(8))
    assert cp.interior_angles() == [6] * 8

    (cp,) = build_cells(Diagram.of(n, [Diameter(n, 0, RED)]))
    assert cp.cell == (0, 1, 2, 3, 4, C)
    assert cp.partner == (0, C, 4, 5, 6, 7)  # the cycle 4,5,6,7,0,c
    assert cp.interior_angles(0) == [3, 6, 6, 6, 3, 8]

    cps = build_cells(Diagram.of(n, [pair(n, 1, 3)]))
    assert {(cp.cell, cp.partner) for cp in cps} == {
        ((0, 1, 3, 4, 5, 7), (0, 1, 3, 4, 5, 7)),
        ((1, 2, 3), (5, 6, 7)),
    }


def test_cell_sides_record_both_colours():
    d = Diagram.of(4, [Diameter(4, 0, RED), Diameter(4, 0, GREEN)])
    (cp,) = build_cells(d)
    assert cp.cell == (0, 1, 2, 3, 4)
    assert set(cp.sides[-1]) == {Diameter(4, 0, RED), Diameter(4, 0, GREEN)}


def test_locate_examples():
    n = 4
    d = Diagram.of(n, [Diameter(n, 0, RED)])
    loc = locate(d, Diameter(n, 1, RED))
    assert loc.sequence == (0, 1, 2, 3, 4, C)
    assert (loc.i, loc.j) == (1, 5)
    with pytest.raises(OutsideNcError):
        locate(d, Diameter(n, 1, GREEN))
    assert locate(d, Diameter(n, 0, RED)) == IN_D

    d = Diagram.of(n, [pair(n, 1, 3)])
    loc = locate(d, pair(n, 0, 3))
    assert loc.cells.invariant
    assert {loc.sequence[loc.i], loc.sequence[loc.j]} in ({0, 3}, {4, 7})


@pytest.mark.parametrize("n", [4, 5])
def test_partition_and_convexity(n):
    for d in _all_nc(n):
        cps = build_cells(d)
        for cp in cps:
            assert len(cp.cell) >= 3
            for member in range(len(cp.members)):
                assert all(0 < a <= 2 * n for a in cp.interior_angles(member))
        for e in nc(d) - d:
            assert len(containing_cells(d, e)) == 1


@pytest.mark.parametrize("n", [4, 5])
def test_cells_tile_the_polygon(n):
    full = _area(n, list(range(2 * n)))
    for d in _all_nc(n):
        total = sum(_area(n, m) for cp in build_cells(d) for m in cp.members)
        assert total == pytest.approx(full)


@pytest.mark.parametrize("n", [4, 5])
def test_invariant_cell_criterion(n):
    for d in _all_nc(n):
        inv = [cp for cp in build_cells(d) if cp.invariant]
        assert bool(inv) == (not d.diameters)
        if not inv:
            continue
        (cp,) = inv
        cell, k = cp.cell, len(cp.cell)
        for e in nc(d) - d:
            if isinstance(e, Diameter):
                assert containing_cells(d, e) == [cp]
        for i in range(k):
            for j in range(k):
                is_diam = (cell[j] - cell[i]) % (2 * n) == n
                prev_diam = (cell[j - 1] - cell[i - 1]) % (2 * n) == n
                assert is_diam == prev_diam


@pytest.mark.parametrize("n", [4, 5])
def test_sides_never_cross_and_centre_not_reflex(n):
    for d in _all_nc(n):
        r = replace(d)
        chords = [c for e in d for c in replaced_chords(r[e])]
        for a, (p, q) in enumerate(chords):
            for (s, t) in chords[a + 1:]:
                assert not _proper_cross(_pt(n, p), _pt(n, q), _pt(n, s), _pt(n, t))
        for cp in build_cells(d):
            for seq in cp.members:
                k = len(seq)
                for t, v in enumerate(seq):
                    if v == C:
                        a, b = seq[t - 1], seq[(t + 1) % k]
                        assert (b - a) % (2 * n) != 1


@pytest.mark.parametrize("n", [4, 5])
def test_angle_minimality(n):
    for d in _all_nc(n):
        r = replace(d)
        chords = {frozenset(c) for e in d for c in replaced_chords(r[e])}
        chords |= {frozenset((v, (v + 1) % (2 * n))) for v in range(2 * n)}
        for cp in build_cells(d):
            for seq in cp.members:
                k = len(seq)
                for t, y in enumerate(seq):
                    x, z = seq[t - 1], seq[(t + 1) % k]
                    best = angle_rank(n, x, y, z)
                    for ch in chords:
                        if y in ch:
                            (w,) = ch - {y}
                            a = angle_rank(n, x, y, w)
                            assert not 0 < a < best
