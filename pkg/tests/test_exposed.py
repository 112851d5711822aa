import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import I, oracle_parts
from interval_ordering.errors import CapExceededError, PreconditionError
from interval_ordering.exposed import (
    enumerate_alpha,
    enumerate_full,
    enumerate_interval_parts,
    enumerate_oracle,
    enumerate_pairwise,
    enumerate_parts,
    enumerate_sbound,
    enumerate_super_parts,
    prefix_part_bound,
)
from interval_ordering.generators import gen_nested_powers
from interval_ordering.geometry import DisjointUnion
from interval_ordering.instance import classify

U = DisjointUnion.of
PAIR = I((0, 2), (1, 3))
NESTED = I((0, 3), (1, 2))
FOUR = {U((0, 2)), U((2, 3)), U((1, 3)), U((0, 1))}


def test_full_examples():
    assert enumerate_full(PAIR).as_set() == FOUR
    assert enumerate_full(I((0, 5))).as_set() == {U((0, 5))}
    lengths = {u.length for u in enumerate_full(gen_nested_powers(3))}
    assert lengths == {2, 4, 6, 8}
    # only [0, 8) reaches 0, so these are its parts
    big = [u for u in enumerate_full(gen_nested_powers(3)) if u.components[0].start == 0]
    assert sorted(u.length for u in big) == [2, 4, 6, 8]


def test_oracle_examples():
    assert enumerate_oracle(PAIR).as_set() == FOUR
    assert enumerate_oracle(I((0, 5))).as_set() == {U((0, 5))}
    assert enumerate_oracle(I((0, 1), (2, 3))).as_set() == {U((0, 1)), U((2, 3))}
    with pytest.raises(CapExceededError):
        enumerate_oracle(I(*[(k, k + 1) for k in range(9)]))


def test_interval_parts_examples():
    assert enumerate_interval_parts(PAIR).as_set() == FOUR
    # [0, 1) and [2, 3) alone are never exposed: [1, 2) cannot cover either
    got = enumerate_interval_parts(NESTED).as_set()
    assert got == {U((0, 3)), U((1, 2))}
    assert got == {u for u in oracle_parts(NESTED) if len(u) == 1}
    assert U((0, 1), (2, 3)) not in got


def test_super_parts_examples():
    assert enumerate_super_parts(NESTED).as_set() == {U((0, 1), (2, 3)), U((1, 2))}
    assert enumerate_super_parts(PAIR).as_set() == FOUR
    chain = I((0, 4), (1, 3), (1, 2))
    parts = enumerate_super_parts(chain)
    assert len(parts) <= 9
    assert len({(u.components[0].start, u.components[-1].end) for u in parts}) == len(parts)


def test_pairwise_examples():
    assert enumerate_pairwise(PAIR).as_set() == FOUR
    assert U((0, 1), (2, 3)) in enumerate_pairwise(NESTED)
    assert enumerate_pairwise(I((0, 5))).as_set() == {U((0, 5))}
    with pytest.raises(PreconditionError):
        enumerate_pairwise(I((0, 1), (2, 3)))


def test_alpha_and_sbound_examples():
    assert U((0, 1), (2, 3)) in enumerate_alpha(NESTED, 2)
    assert enumerate_alpha(NESTED, 1).as_set() == enumerate_interval_parts(NESTED).as_set()
    assert enumerate_sbound(NESTED).as_set() == enumerate_full(NESTED).as_set()
    assert len(enumerate_sbound(NESTED)) <= NESTED.n**2 * 2
    assert enumerate_sbound(gen_nested_powers(3)).as_set() == enumerate_full(gen_nested_powers(3)).as_set()
    with pytest.raises(PreconditionError):
        enumerate_alpha(NESTED, 0)


def test_output_sorted_and_deduplicated():
    parts = enumerate_full(gen_nested_powers(4)).parts
    keys = [u.key() for u in parts]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)
    assert all(u for u in parts)


def test_dispatch():
    assert enumerate_parts(PAIR, "alpha", 1).as_set() == FOUR
    with pytest.raises(PreconditionError):
        enumerate_parts(PAIR, "nope")
    with pytest.raises(PreconditionError):
        enumerate_parts(PAIR, "alpha")


def test_prefix_part_bound_first_terms():
    assert prefix_part_bound(1) == 1
    assert [prefix_part_bound(k) for k in range(1, 5)] == [1, 6, 21, 58]


# properties against the permutation oracle ------------------------------

instances = st.lists(
    st.tuples(st.integers(0, 11), st.integers(1, 6)).map(lambda t: (t[0], min(12, t[0] + t[1]))),
    min_size=1,
    max_size=6,
)


@settings(max_examples=120, deadline=None)
@given(instances)
def test_enumerators_match_oracle(pairs):
    inst = I(*pairs)
    n = inst.n
    truth = oracle_parts(inst)
    full = enumerate_full(inst)
    assert full.as_set() == truth
    for k, size in enumerate(full.prefix_sizes, 1):
        assert size <= prefix_part_bound(k)
    ip = enumerate_interval_parts(inst)
    assert ip.as_set() == {u for u in truth if len(u) == 1}
    assert len(ip) <= (2 * n) ** 2
    sp = enumerate_super_parts(inst)
    assert sp.as_set() == oracle_parts(inst, respect_subintervals=True)
    assert len(sp) <= (2 * n) ** 2
    sb = enumerate_sbound(inst)
    assert sb.as_set() == truth
    assert len(sb) <= (2 * n) ** 2 * 2 ** classify(inst).max_subintervals
    prev = set()
    for a in range(1, n + 1):
        cur = enumerate_alpha(inst, a).as_set()
        assert prev <= cur <= truth
        assert cur == {u for u in truth if len(u) <= a}
        prev = cur
    assert prev == truth
    if classify(inst).is_pairwise_connected:
        assert enumerate_pairwise(inst).as_set() == truth
