from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import I, brute_min
from interval_ordering.errors import CapExceededError, InfeasibleEnumerationError, PreconditionError
from interval_ordering.exposed import ExposedPartSet, enumerate_full, enumerate_interval_parts
from interval_ordering.frame import Frame
from interval_ordering.generators import cost_preset
from interval_ordering.instance import CostFunction, cost_of_ordering, split_components
from interval_ordering.solver import brute_force, decide, dp_solve, integerize, solve, solve_auto, subset_dp

POW2 = CostFunction.pow2()
NESTED = I((0, 3), (1, 2), cost=POW2)


def test_nested_pow2():
    for sol in (dp_solve(NESTED, enumerate_full(NESTED)), brute_force(NESTED), solve_auto(NESTED)):
        assert sol.total == 6 and sol.ordering == (1, 0)
    assert subset_dp(NESTED).total == 6


def test_single_interval():
    f = CostFunction.polynomial([1, 0, 1])
    inst = I((0, 5), cost=f)
    assert dp_solve(inst, enumerate_full(inst)).total == 26
    assert brute_force(inst).total == 26


def test_linear_cost_is_order_free():
    inst = I((0, 2), (1, 3), cost=CostFunction.linear())
    assert dp_solve(inst, enumerate_full(inst)).total == 3


def test_empty_and_disjoint():
    assert subset_dp(I(cost=POW2)).total == 0
    assert solve_auto(I(cost=POW2)).total == 0
    assert subset_dp(I((0, 1), (2, 3), cost=POW2)).total == 4
    f = CostFunction.piecewise_linear([3, 4], [2, 1, 3])
    inst = I((0, 1), (2, 5), (7, 11), cost=f)
    assert solve_auto(inst).total == f(1) + f(3) + f(4)


def test_zero_cost():
    inst = I((0, 4), (1, 2), (3, 6), cost=CostFunction.linear(0, 0))
    assert brute_force(inst).total == 0


def test_decide():
    assert decide(NESTED.__class__(NESTED.intervals, POW2, 6))
    assert not decide(NESTED.__class__(NESTED.intervals, POW2, 5))
    assert decide(I(cost=POW2, W=0))
    with pytest.raises(PreconditionError):
        decide(NESTED)


def test_caps():
    big = I(*[(k, k + 2) for k in range(9)], cost=POW2)
    with pytest.raises(CapExceededError):
        brute_force(big)
    with pytest.raises(CapExceededError):
        subset_dp(I(*[(k, k + 2) for k in range(21)], cost=POW2))


def test_infeasible_parts():
    inst = I((0, 2), (1, 3), cost=POW2)
    frame = Frame(inst.intervals)
    only_first = ExposedPartSet("custom", frame, [frame.interval_mask(inst.intervals[0])])
    with pytest.raises(InfeasibleEnumerationError):
        dp_solve(inst, only_first)


def test_solve_dispatch():
    for name in ("auto", "full", "super", "pairwise", "sbound", "subset-dp", "brute"):
        assert solve(NESTED, name).total == 6
    assert solve(NESTED, "alpha", 2).total == 6
    with pytest.raises(PreconditionError):
        solve(NESTED, "alpha")
    with pytest.raises(PreconditionError):
        solve(NESTED, "fastest")


def test_rational_endpoints_and_float_backend():
    inst = I((0, Fraction(5, 2)), (Fraction(1, 2), Fraction(3, 2)), (2, Fraction(7, 2)), cost=POW2)
    assert inst.backend == "float"
    ref = brute_min(inst)
    got = solve_auto(inst).total
    assert abs(got - ref) <= 1e-25 * abs(ref)


def test_integerize():
    ints, back = integerize([Fraction(1, 2), 3, Fraction(2, 3)], "exact")
    assert ints == [3, 18, 4] and back(sum(ints)) == Fraction(25, 6)
    ints, back = integerize([5, -2], "exact")
    assert ints == [5, -2]


def test_negative_costs():
    inst = I((0, 3), (1, 2), (2, 5), cost=CostFunction.linear(2, -3))
    assert solve_auto(inst).total == brute_min(inst)


# properties ------------------------------------------------------------

PRESETS = ["pow2", "square", "linear", "sqrt", "min5", "partition"]
instances = st.lists(
    st.tuples(st.integers(0, 11), st.integers(1, 6)).map(lambda t: (t[0], min(12, t[0] + t[1]))),
    min_size=1,
    max_size=6,
)


def close(a, b):
    return a == b or abs(a - b) <= 1e-9 * max(abs(a), abs(b), 1)


@settings(max_examples=120, deadline=None)
@given(instances, st.sampled_from(PRESETS))
def test_solvers_agree_with_direct_minimum(pairs, preset):
    inst = I(*pairs, cost=cost_preset(preset))
    ref = brute_min(inst)
    sols = [brute_force(inst), subset_dp(inst), dp_solve(inst, enumerate_full(inst)), solve_auto(inst)]
    f = inst.cost
    if f.declared_class == "sub":
        sols.append(dp_solve(inst, enumerate_interval_parts(inst)))
    if f.declared_class == "super":
        sols.append(solve(inst, "super"))
    for sol in sols:
        assert close(sol.total, ref), sol.algorithm
        # the reported ordering really costs the reported total
        assert cost_of_ordering(inst, sol.ordering)[0] == sol.total
        assert sorted(sol.ordering) == list(range(inst.n))


@settings(max_examples=60, deadline=None)
@given(instances, st.sampled_from(PRESETS))
def test_component_additivity(pairs, preset):
    inst = I(*pairs, cost=cost_preset(preset))
    total = solve_auto(inst).total
    parts = sum((solve_auto(c).total for c in split_components(inst)), inst.zero)
    assert close(total, parts)
