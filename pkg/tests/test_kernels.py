import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import I
from interval_ordering import kernels
from interval_ordering.exposed import enumerate_full
from interval_ordering.frame import Frame
from interval_ordering.generators import cost_preset
from interval_ordering.instance import CostFunction
from interval_ordering.solver import dp_solve

needs_compiled = pytest.mark.skipif(kernels.compiled is None, reason="compiled kernels not built")

instances = st.lists(
    st.tuples(st.integers(0, 11), st.integers(1, 6)).map(lambda t: (t[0], min(12, t[0] + t[1]))),
    min_size=0,
    max_size=6,
)


def setup(pairs, preset):
    inst = I(*pairs, cost=cost_preset(preset))
    frame = Frame(inst.intervals)
    masks = [frame.interval_mask(iv) for iv in inst.intervals]
    return inst, masks, (lambda e: inst.f(frame.length(e)))


def test_selection():
    assert kernels.IMPLEMENTATION in ("compiled", "python")
    assert kernels.for_segments(kernels.MAX_COMPILED_SEGMENTS + 1) is kernels.python


@needs_compiled
@settings(max_examples=80, deadline=None)
@given(instances, st.sampled_from(["pow2", "sqrt", "min5", "partition"]))
def test_exhaustive_kernels_identical(pairs, preset):
    inst, masks, cost = setup(pairs, preset)
    for name in ("brute_force", "subset_dp"):
        a = getattr(kernels.python, name)(masks, cost, inst.zero)
        b = getattr(kernels.compiled, name)(masks, cost, inst.zero)
        assert a == b, name


@needs_compiled
@settings(max_examples=60, deadline=None)
@given(instances.filter(bool), st.sampled_from(["pow2", "square", "sqrt", "partition", "huge"]))
def test_dp_fill_identical(pairs, preset):
    # "huge" overflows int64 and so runs the compiled object loop
    cost = CostFunction.polynomial([1, 2**70, 3]) if preset == "huge" else cost_preset(preset)
    inst = I(*pairs, cost=cost)
    parts = enumerate_full(inst)
    saved = kernels.active
    try:
        kernels.active = kernels.python
        a = dp_solve(inst, parts)
        kernels.active = kernels.compiled
        b = dp_solve(inst, parts)
    finally:
        kernels.active = saved
    assert a.ordering == b.ordering and a.total == b.total


def test_wide_frame_uses_python():
    inst = I(*[(3 * k, 3 * k + 1) for k in range(40)])
    assert Frame(inst.intervals).segments > 64
    assert kernels.for_segments(Frame(inst.intervals).segments) is kernels.python
