from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from interval_ordering.geometry import (
    EMPTY,
    DisjointUnion,
    Interval,
    as_rat,
    fmt_rat,
    intersect,
    is_canonical,
    is_single_interval,
    length,
    subtract,
    union,
)

U = DisjointUnion.of


def test_union_touching_merges():
    assert union(U((0, 1)), U((1, 2))) == U((0, 2))


def test_union_identity():
    assert union(EMPTY, U((3, 4))) == U((3, 4))


def test_union_overlapping():
    assert union(U((0, 2)), U((1, 3), (5, 6))) == U((0, 3), (5, 6))


def test_subtract_leaves_holes():
    assert subtract(U((1, 11)), U((2, 4), (5, 7), (8, 11))) == U((1, 2), (4, 5), (7, 8))
    assert subtract(U((0, 1)), EMPTY) == U((0, 1))
    assert subtract(U((0, 3)), U((1, 2))) == U((0, 1), (2, 3))


def test_length():
    assert length(U((0, 3), (5, 6))) == 4
    assert length(EMPTY) == 0
    assert length(U((Fraction(1, 2), Fraction(3, 2)))) == 1


def test_single_interval():
    assert is_single_interval(U((0, 2)))
    assert not is_single_interval(U((0, 1), (2, 3)))
    assert not is_single_interval(EMPTY)


def test_interval_validation():
    with pytest.raises(ValueError):
        Interval(2, 2)
    with pytest.raises(ValueError):
        Interval(3, 1)


def test_rationals():
    assert as_rat("3/4") == Fraction(3, 4)
    assert fmt_rat(Fraction(6, 3)) == "2"
    assert fmt_rat(Fraction(-1, 3)) == "-1/3"
    with pytest.raises((TypeError, ValueError)):
        as_rat(0.5)


def test_half_open_membership():
    iv = Interval(0, 1)
    assert 0 in iv and Fraction(1, 2) in iv and 1 not in iv
    assert not Interval(0, 1).intersects(Interval(1, 2))
    assert Interval(0, 1).touches_or_intersects(Interval(1, 2))


def test_canonical_constructor_merges():
    u = DisjointUnion([Interval(3, 4), Interval(0, 2), Interval(1, 3)])
    assert u == U((0, 4))
    assert is_canonical(u)


# property tests -------------------------------------------------------

pairs = st.tuples(st.integers(0, 31), st.integers(1, 8)).map(lambda t: (t[0], t[0] + t[1]))
unions = st.lists(pairs, max_size=5).map(lambda ps: DisjointUnion([Interval(a, b) for a, b in ps]))
GRID = [Fraction(k, 2) for k in range(0, 2 * 40 + 1)]


def member(u, x):
    return any(c.start <= x < c.end for c in u)


def no_touching(u):
    comps = list(u)
    return all(comps[i].end < comps[i + 1].start for i in range(len(comps) - 1))


@given(unions)
def test_union_with_empty_is_identity(u):
    assert union(u, EMPTY) == u


@given(unions, unions)
def test_pointwise_semantics(u, v):
    un, diff, inter = union(u, v), subtract(u, v), intersect(u, v)
    for x in GRID:
        assert member(un, x) == (member(u, x) or member(v, x))
        assert member(diff, x) == (member(u, x) and not member(v, x))
        assert member(inter, x) == (member(u, x) and member(v, x))
    for w in (un, diff, inter):
        assert no_touching(w)


@given(unions, unions)
def test_length_split_identity(u, v):
    assert length(u) == length(subtract(u, v)) + length(subtract(u, subtract(u, v)))
