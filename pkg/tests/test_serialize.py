import json

import pytest
from hypothesis import given

from conftest import diagrams
from ptolemy_dn.polygon import GREEN, RED, Diagram, Diameter, EdgePair, pair
from ptolemy_dn.serialize import (
    FormatError,
    diagram_from_json,
    diagram_to_json,
    dumps,
    element_to_json,
    loads,
)


@given(diagrams())
def test_round_trip(x):
    assert loads(dumps(x)) == x
    assert diagram_from_json(diagram_to_json(x)) == x


def test_format():
    x = Diagram.of(4, [pair(4, 0, 2), Diameter(4, 1, RED)])
    assert diagram_to_json(x) == {
        "n": 4,
        "elements": [{"kind": "pair", "a": 0, "b": 2}, {"kind": "diameter", "a": 1, "color": "red"}],
    }
    assert element_to_json(EdgePair(4, 3)) == {"kind": "zero", "a": 3}


def test_canonicalises_on_load():
    x = loads('{"n": 4, "elements": [{"kind": "pair", "a": 7, "b": 5}, {"kind": "diameter", "a": 6, "color": "green"}]}')
    assert x == Diagram.of(4, [pair(4, 1, 3), Diameter(4, 2, GREEN)])


@pytest.mark.parametrize(
    "elements",
    [
        [{"kind": "pair", "a": 0, "b": 1}],  # edge
        [{"kind": "pair", "a": 7, "b": 0}],  # edge across the wrap
        [{"kind": "pair", "a": 0, "b": 4}],  # a diameter given as a pair
        [{"kind": "pair", "a": 0, "b": 8}],  # out of range
        [{"kind": "pair", "a": -1, "b": 2}],
        [{"kind": "pair", "a": 2, "b": 2}],
        [{"kind": "pair", "a": 0, "b": 2}, {"kind": "pair", "a": 4, "b": 6}],  # duplicate orbit
        [{"kind": "diameter", "a": 0, "color": "red"}, {"kind": "diameter", "a": 4, "color": "red"}],
        [{"kind": "diameter", "a": 0, "color": "blue"}],
        [{"kind": "diameter", "a": 9, "color": "red"}],
        [{"kind": "arc", "a": 0, "b": 2}],
        [{"kind": "pair", "a": "0", "b": 2}],
        [{"kind": "pair", "a": True, "b": 2}],
        ["pair"],
    ],
)
def test_rejects(elements):
    with pytest.raises(FormatError):
        diagram_from_json({"n": 4, "elements": elements})


@pytest.mark.parametrize("text", ["", "[]", '{"n": 3, "elements": []}', '{"n": 4}', '{"n": 4, "elements": {}}', "{bad"])
def test_rejects_documents(text):
    with pytest.raises(FormatError):
        loads(text)


def test_sorted_output_is_stable():
    a = Diagram.of(5, [Diameter(5, 3, GREEN), pair(5, 0, 3), pair(5, 1, 4)])
    assert json.loads(dumps(a))["elements"][0] == {"kind": "pair", "a": 0, "b": 3}
