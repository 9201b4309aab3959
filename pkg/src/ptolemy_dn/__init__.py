"""Torsion parts, cells and mutation in the 2n-gon model of type D_n."""
from .mutation import Direction, mutate_diagram, mutate_element, shift
from .polygon import Diagram, Diameter, PairOfArcs, crossing_count, diameter, full_alphabet, nc, pair
from .ptolemy import is_ptolemy, is_torsion_part, ptolemy_violation

__version__ = "0.1.0"

__all__ = [
    "Diagram",
    "Diameter",
    "Direction",
    "PairOfArcs",
    "crossing_count",
    "diameter",
    "full_alphabet",
    "is_ptolemy",
    "is_torsion_part",
    "mutate_diagram",
    "mutate_element",
    "nc",
    "pair",
    "ptolemy_violation",
    "shift",
]
