from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from interval_ordering.errors import PreconditionError
from interval_ordering.generators import (
    FAMILIES,
    PartitionReductionParams,
    gen_nested_powers,
    gen_partition_reduction,
    gen_random,
    has_partition,
    reduction_cost,
)
from interval_ordering.geometry import Interval
from interval_ordering.instance import classify, cost_of_ordering
from interval_ordering.solver import brute_force, decide


def test_nested_powers_construction():
    assert gen_nested_powers(3).intervals == (Interval(2, 4), Interval(4, 8), Interval(0, 8))
    assert gen_nested_powers(2).intervals == (Interval(2, 4), Interval(0, 4))
    with pytest.raises(PreconditionError):
        gen_nested_powers(1)


def test_partition_example():
    p = PartitionReductionParams((1, 1, 2))
    inst = gen_partition_reduction(p)
    h = Fraction(1, 2)
    assert inst.intervals == (Interval(0, h), Interval(h, 1), Interval(1, 2), Interval(0, 5))
    f = inst.cost
    assert f(1) == 2 and f(4) == 7 and inst.threshold == 9
    # the two halves first, then the long interval, then the rest
    assert cost_of_ordering(inst, (0, 1, 3, 2))[0] == 9
    assert decide(inst)


def test_partition_no_instance():
    inst = gen_partition_reduction(PartitionReductionParams((1, 1, 1)))
    assert not decide(inst)
    assert brute_force(inst).total > inst.threshold


def test_partition_validation():
    for bad in [
        PartitionReductionParams(()),
        PartitionReductionParams((1, 0)),
        PartitionReductionParams((1,), eps=0),
        PartitionReductionParams((1,), slopes=(2, 1, 3)),
        PartitionReductionParams((1,), x0=Fraction(5, 2)),
    ]:
        with pytest.raises(PreconditionError):
            bad.validate()


@given(st.tuples(st.integers(1, 5), st.integers(1, 5), st.integers(1, 5)).filter(lambda c: c[0] < c[1] < c[2]))
def test_reduction_cost_strictly_increasing(slopes):
    f = reduction_cost(PartitionReductionParams((1,), slopes=slopes))
    xs = [Fraction(k, 4) for k in range(0, 40)]
    vals = [f(x) for x in xs]
    assert all(a < b for a, b in zip(vals, vals[1:]))
    assert f(0) == 0


def test_has_partition():
    assert has_partition([1, 1, 2]) and has_partition([3, 1, 1, 2, 1])
    assert not has_partition([1, 1, 1]) and not has_partition([1, 4])


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 12), st.integers(0, 10**6), st.sampled_from(FAMILIES))
def test_random_families(n, seed, family):
    inst = gen_random(n, 16, seed, family)
    assert inst == gen_random(n, 16, seed, family)
    assert inst.n == n
    assert all(0 <= iv.start < iv.end <= 16 for iv in inst.intervals)
    stats = classify(inst)
    if family == "pairwise":
        assert stats.is_pairwise_connected
    if family == "agreeable":
        assert stats.is_agreeable
    if family == "laminar":
        assert stats.is_laminar


def test_random_validation():
    with pytest.raises(PreconditionError):
        gen_random(0)
    with pytest.raises(PreconditionError):
        gen_random(3, family="nope")
