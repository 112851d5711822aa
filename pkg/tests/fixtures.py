"""Instances shared by the SVG, CLI and acceptance tests."""

from conftest import I
from interval_ordering.instance import CostFunction

POW2 = CostFunction.pow2()

# seven intervals; in the order given the sixth, [1, 11), keeps [4,5) U [7,8)
SEVEN = I((0, 4), (5, 7), (8, 12), (10, 14), (2, 3), (1, 11), (3, 9), cost=POW2)
SINGLE = I((0, 5), cost=POW2)
DISJOINT = I((0, 1), (2, 4), (5, 8), cost=POW2)

SVG_FIXTURES = {
    "seven": (SEVEN, list(range(7))),
    "single": (SINGLE, [0]),
    "disjoint": (DISJOINT, [2, 0, 1]),
}
