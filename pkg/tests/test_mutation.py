import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import elements, noncrossing_diagrams
from ptolemy_dn.cells import NotNonCrossingError, OutsideNcError, RadiiPair, replace
from ptolemy_dn.census import all_noncrossing_masks
from ptolemy_dn.mutation import (
    Direction,
    is_mutation_pair,
    mutate_diagram,
    mutate_element,
    shift,
    shift_diagram,
    unshift,
)
from ptolemy_dn.polygon import (
    GREEN,
    RED,
    Diagram,
    Diameter,
    PairOfArcs,
    crossing_count,
    full_alphabet,
    nc,
    pair,
)

PLUS, MINUS = Direction.PLUS, Direction.MINUS


def _all_nc(n):
    return [Diagram.from_mask(n, m) for m in all_noncrossing_masks(n)]


def test_examples_empty_d():
    e = Diagram.of(4)
    assert mutate_element(e, pair(4, 0, 2), PLUS) == pair(4, 1, 3)
    assert mutate_element(e, pair(4, 0, 2), MINUS) == pair(4, 1, 7)
    assert mutate_element(e, Diameter(4, 0, RED), PLUS) == Diameter(4, 1, GREEN)


def test_examples_one_diameter():
    d = Diagram.of(4, [Diameter(4, 0, RED)])
    e = Diameter(4, 1, RED)
    assert mutate_element(d, e, MINUS) == Diameter(4, 0, GREEN)
    assert mutate_element(d, e, PLUS) == pair(4, 0, 2)
    assert mutate_element(d, Diameter(4, 0, RED), PLUS) == Diameter(4, 0, RED)


def test_rejects_bad_inputs():
    d = Diagram.of(4, [Diameter(4, 0, RED)])
    with pytest.raises(OutsideNcError):
        mutate_element(d, Diameter(4, 1, GREEN), PLUS)
    with pytest.raises(OutsideNcError):
        mutate_diagram(d, Diagram.of(4, [Diameter(4, 1, GREEN)]), PLUS)
    bad = Diagram.of(4, [pair(4, 0, 2), pair(4, 1, 3)])
    with pytest.raises(NotNonCrossingError):
        mutate_element(bad, pair(4, 0, 2), PLUS)


def test_direction_parse():
    assert Direction.parse("plus") is PLUS
    assert Direction.parse("MINUS") is MINUS
    with pytest.raises(ValueError):
        Direction.parse("up")


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_empty_d_is_rotation(n):
    e = Diagram.of(n)
    for x in full_alphabet(n):
        assert mutate_element(e, x, PLUS) == unshift(x)
        assert mutate_element(e, x, MINUS) == shift(x)
    alph = Diagram.of(n, full_alphabet(n))
    assert mutate_diagram(e, alph, PLUS) == alph


def test_shift_examples():
    assert shift(pair(4, 1, 3)) == pair(4, 0, 2)
    assert shift(Diameter(4, 1, GREEN)) == Diameter(4, 0, RED)


@given(elements())
def test_shift_orbit(e):
    n = e.n
    x = e
    for _ in range(2 * n):
        x = shift(x)
    assert x == e
    assert unshift(shift(e)) == e


@given(noncrossing_diagrams())
def test_shift_diagram_full_turn(d):
    assert shift_diagram(d, 2 * d.n) == d
    assert shift_diagram(shift_diagram(d, 1), -1) == d


@pytest.mark.parametrize("n", [4, 5])
def test_mutation_properties_exhaustive(n):
    for d in _all_nc(n):
        ncd = nc(d)
        for e in ncd:
            up, down = mutate_element(d, e, PLUS), mutate_element(d, e, MINUS)
            assert mutate_element(d, up, MINUS) == e
            assert mutate_element(d, down, PLUS) == e
            assert up in ncd and down in ncd
            if e in d:
                assert up == down == e
                continue
            assert crossing_count(e, down) == 1
            if isinstance(e, Diameter):
                for f in (up, down):
                    if isinstance(f, Diameter):
                        assert f.color != e.color
                    else:
                        # only pairs of radii split into pairs of arcs
                        assert isinstance(replace(d)[e], RadiiPair)
        assert mutate_diagram(d, ncd, PLUS) == ncd
        assert mutate_diagram(d, d, PLUS) == d


@given(noncrossing_diagrams(), st.data())
def test_mutation_inverse_sampled(d, data):
    e = data.draw(st.sampled_from(nc(d).sorted()))
    assert mutate_element(d, mutate_element(d, e, PLUS), MINUS) == e
    assert mutate_element(d, mutate_element(d, e, MINUS), PLUS) == e
    if e not in d:
        assert crossing_count(e, mutate_element(d, e, MINUS)) == 1


@given(noncrossing_diagrams(), st.data())
def test_mutate_diagram_injective(d, data):
    ncd = nc(d).sorted()
    x = Diagram.of(d.n, data.draw(st.lists(st.sampled_from(ncd), unique=True)))
    y = mutate_diagram(d, x, PLUS)
    assert len(y) == len(x)
    assert mutate_diagram(d, y, MINUS) == x


def test_mutation_pairs():
    n = 4
    d = Diagram.of(n, [Diameter(n, 0, RED)])
    assert is_mutation_pair(d, d, d)
    x = d | Diagram.of(n, [Diameter(n, 1, RED), pair(n, 0, 2)])
    assert is_mutation_pair(d, x, mutate_diagram(d, x, MINUS))
    e = Diagram.of(n)
    one = Diagram.of(n, [pair(n, 0, 2)])
    assert not is_mutation_pair(e, one, one)
    assert not is_mutation_pair(Diagram.of(n, [pair(n, 0, 2), pair(n, 1, 3)]), one, one)


def test_mutation_pair_needs_d_inside():
    n = 4
    d = Diagram.of(n, [pair(n, 1, 3)])
    x = Diagram.of(n, [pair(n, 0, 3)])
    assert not is_mutation_pair(d, x, mutate_diagram(d, x, MINUS))
    assert isinstance(mutate_element(d, pair(n, 0, 3), MINUS), PairOfArcs)
