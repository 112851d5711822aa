"""Exact solvers: the covered-interval DP plus two exhaustive oracles."""

from __future__ import annotations

import sys
from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from . import kernels
from .covered import CoveredIntervalTable, build_covered_table
from .errors import CapExceededError, InfeasibleEnumerationError, PreconditionError
from .exposed import (
    ExposedPartSet,
    enumerate_alpha,
    enumerate_full,
    enumerate_interval_parts,
    enumerate_pairwise,
    enumerate_sbound,
    enumerate_super_parts,
)
from .frame import Frame, gaps, span
from .geometry import DisjointUnion
from .instance import EXACT, FLOAT, Instance, classify, component_groups, cost_of_ordering

BRUTE_FORCE_CAP = 8
SUBSET_DP_CAP = 20


@dataclass(frozen=True)
class Solution:
    total: object
    ordering: tuple[int, ...]  # 0-based interval indices
    exposed: tuple[DisjointUnion, ...]  # by ordering position
    algorithm: str

    def costs(self, inst: Instance) -> list:
        return [inst.f(e.length) for e in self.exposed]


def _finish(inst: Instance, ordering, value, algorithm: str) -> Solution:
    total, exposed = cost_of_ordering(inst, ordering)
    if inst.backend == EXACT and value is not None and total != value:
        raise AssertionError(f"{algorithm}: reconstructed ordering costs {total}, expected {value}")
    return Solution(total, tuple(ordering), tuple(exposed), algorithm)


def _mask_cost(inst: Instance, frame: Frame):
    f = inst.f
    if inst.backend != EXACT:
        return lambda e: f(frame.length(e))

    def cost(e):
        # integral Fractions become ints: much cheaper to add in the loops
        v = f(frame.length(e))
        return v.numerator if isinstance(v, Fraction) and v.denominator == 1 else v

    return cost


def brute_force(inst: Instance, cap: int = BRUTE_FORCE_CAP) -> Solution:
    """Best of all n! orderings; ties go to the lexicographically smallest."""
    if inst.n > cap:
        raise CapExceededError(f"brute force is capped at n = {cap} (got {inst.n})")
    frame = Frame(inst.intervals)
    masks = [frame.interval_mask(iv) for iv in inst.intervals]
    core = kernels.for_segments(frame.segments)
    value, perm = core.brute_force(masks, _mask_cost(inst, frame), inst.zero)
    return _finish(inst, perm, value, "brute")


def subset_dp(inst: Instance, cap: int = SUBSET_DP_CAP) -> Solution:
    """The standard 2^n table over subsets of intervals."""
    if inst.n > cap:
        raise CapExceededError(f"subset DP is capped at n = {cap} (got {inst.n})")
    frame = Frame(inst.intervals)
    masks = [frame.interval_mask(iv) for iv in inst.intervals]
    core = kernels.for_segments(frame.segments)
    value, perm = core.subset_dp(masks, _mask_cost(inst, frame), inst.zero)
    return _finish(inst, perm, value, "subset-dp")


def integerize(values: list, backend: str):
    """Scale costs to Python ints so the DP adds and compares integers.

    Exact values are multiplied by the lcm of their denominators, so nothing
    changes.  Float values become fixed-point numbers with about 120 bits
    below the largest magnitude, which is finer than the float backend
    itself.  Returns the ints and the map back to the backend's numbers.
    """
    if backend == EXACT:
        den = 1
        for v in values:
            if isinstance(v, Fraction):
                den = lcm(den, v.denominator)
        if den == 1:
            return [int(v) for v in values], lambda x: x
        return [int(v * den) for v in values], lambda x: Fraction(x, den)
    top = max((abs(v) for v in values), default=FLOAT.zero)
    shift = 120 - (int(FLOAT.floor(FLOAT.log(top, 2))) if top else 0)
    k = FLOAT.ldexp(FLOAT.one, shift)
    return [int(FLOAT.nint(v * k)) for v in values], lambda x: FLOAT.mpf(x) / k


class _Fronts:
    """Containment-minimal input intervals around a span, as ascending lists."""

    def __init__(self, spans_: list[tuple[int, int]]):
        self.by_start = sorted(spans_)
        self.starts = [p for p, _ in self.by_start]

    def __call__(self, s: int, t: int):
        k = bisect_left(self.starts, s + 1)
        ps: list[int] = []
        qs: list[int] = []
        best_q = None
        for p, q in reversed(self.by_start[:k]):
            if q >= t and (best_q is None or q < best_q):
                ps.append(p)
                qs.append(q)
                best_q = q
        ps.reverse()
        qs.reverse()
        return ps, qs


def dp_solve(
    inst: Instance,
    parts: ExposedPartSet,
    table: CoveredIntervalTable | None = None,
    algorithm: str | None = None,
) -> Solution:
    """Fill OPT over the covered intervals using the candidate ``parts``.

    For covered interval ``C`` a part ``E`` is used when some input interval
    inside ``C`` contains ``E`` and every component of ``C - E`` is a covered
    interval; the intervals not inside ``C - E`` other than that witness each
    pay ``f(0)``.  An instance whose union has several components gets the
    sum over its components.
    """
    algorithm = algorithm or f"dp-{parts.mode}"
    n = inst.n
    if n == 0:
        return Solution(inst.zero, (), (), algorithm)
    frame = Frame(inst.intervals)
    table = table or build_covered_table(inst, frame)
    if table.frame != frame:
        raise PreconditionError("covered table was built for a different instance")
    if parts.frame == frame:
        masks = parts.masks
    else:
        masks = [m for m in (frame.mask_of(u) for u in parts.parts) if m]
        masks.sort(key=lambda m: frame.key(m))

    span_parts: dict[tuple[int, int], list[int]] = {}
    part_gaps: list = []
    part_gapcnt: list[int] = []
    for p, m in enumerate(masks):
        span_parts.setdefault(span(m), []).append(p)
        ids = []
        cnt = 0
        for lo, hi in gaps(m):
            gid = table.index.get((lo, hi))
            if gid is None:
                ids = None
                break
            ids.append(gid)
            cnt += table.entries[gid].count
        part_gaps.append(ids)
        part_gapcnt.append(cnt)

    raw = [inst.f(frame.length(m)) for m in masks]
    scaled, unscale = integerize(raw + [inst.f0], inst.backend)
    f0 = scaled.pop()

    spans_ = [frame.indices(iv) for iv in inst.intervals]
    entries = table.entries
    opt, choice = kernels.active.dp_fill(
        [e.lo for e in entries],
        [e.hi for e in entries],
        [e.count for e in entries],
        table.by_start(),
        table.by_end(),
        span_parts,
        part_gaps,
        part_gapcnt,
        scaled,
        _Fronts(spans_),
        f0,
    )

    def order_for(cid: int) -> list[int]:
        p, lid, rid = choice[cid]
        c_lo, c_hi = entries[cid].lo, entries[cid].hi
        subs = ([lid] if lid >= 0 else []) + list(part_gaps[p]) + ([rid] if rid >= 0 else [])
        seq: list[int] = []
        for sub in subs:
            seq.extend(order_for(sub))
        s, t = span(masks[p])
        placed = set(seq)
        witness = min(
            j for j, (lo, hi) in enumerate(spans_) if c_lo <= lo <= s and t <= hi <= c_hi and j not in placed
        )
        seq.append(witness)
        placed.add(witness)
        seq.extend(j for j, (lo, hi) in enumerate(spans_) if c_lo <= lo and hi <= c_hi and j not in placed)
        return seq

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * len(entries) + 100))
    try:
        ordering: list[int] = []
        value = inst.zero
        for group in component_groups(inst.intervals):
            lo = min(spans_[j][0] for j in group)
            hi = max(spans_[j][1] for j in group)
            cid = table.index[(lo, hi)]
            if opt[cid] is None:
                raise InfeasibleEnumerationError(
                    f"parts from '{parts.mode}' cannot build the covered interval {table.interval(cid)}"
                )
            value = value + unscale(opt[cid])
            ordering.extend(order_for(cid))
    finally:
        sys.setrecursionlimit(limit)
    return _finish(inst, ordering, value, algorithm)


def _combine(inst: Instance, pieces: list[tuple[list[int], Solution]], algorithm: str) -> Solution:
    ordering: list[int] = []
    for idx, sol in pieces:
        ordering.extend(idx[j] for j in sol.ordering)
    value = inst.zero
    for _, sol in pieces:
        value = value + sol.total
    return _finish(inst, ordering, value if inst.backend == EXACT else None, algorithm)


def choose_enumerator(inst: Instance) -> tuple[str, object]:
    """Enumerator for one component, by declared cost class then geometry."""
    cls = inst.cost.declared_class if inst.cost is not None else "arbitrary"
    if cls == "sub":
        return "intervals", enumerate_interval_parts
    if cls == "super":
        return "super", enumerate_super_parts
    if classify(inst).is_pairwise_connected:
        return "pairwise", enumerate_pairwise
    return "full", enumerate_full


def solve_auto(inst: Instance) -> Solution:
    """Split into components and run the cheapest exact DP for each."""
    pieces = []
    used = []
    for group in component_groups(inst.intervals):
        sub = inst.with_intervals(inst.intervals[j] for j in group)
        mode, enum = choose_enumerator(sub)
        table = build_covered_table(sub)
        pieces.append((group, dp_solve(sub, enum(sub), table)))
        used.append(mode)
    label = "auto:" + ",".join(sorted(set(used))) if used else "auto"
    return _combine(inst, pieces, label)


def solve(inst: Instance, algorithm: str = "auto", alpha: int | None = None) -> Solution:
    """Dispatch by name: auto, full, sub, super, pairwise, alpha, sbound,
    subset-dp, brute."""
    if algorithm == "auto":
        return solve_auto(inst)
    if algorithm == "brute":
        return brute_force(inst)
    if algorithm == "subset-dp":
        return subset_dp(inst)
    enumerators = {
        "full": enumerate_full,
        "sub": enumerate_interval_parts,
        "super": enumerate_super_parts,
        "pairwise": enumerate_pairwise,
        "sbound": enumerate_sbound,
    }
    if algorithm == "alpha":
        if alpha is None:
            raise PreconditionError("alpha algorithm needs a component bound")
        return dp_solve(inst, enumerate_alpha(inst, alpha), algorithm=f"dp-alpha{alpha}")
    if algorithm not in enumerators:
        raise PreconditionError(f"unknown algorithm {algorithm!r}")
    return dp_solve(inst, enumerators[algorithm](inst), algorithm=f"dp-{algorithm}")


def decide(inst: Instance) -> bool:
    """Is there an ordering of cost at most W?"""
    if inst.threshold is None:
        raise PreconditionError("decision needs a threshold W")
    return bool(solve_auto(inst).total <= inst.W)


def threshold_ok(inst: Instance, total) -> bool | None:
    return None if inst.threshold is None else bool(total <= inst.W)


__all__ = [
    "Solution",
    "brute_force",
    "subset_dp",
    "dp_solve",
    "solve_auto",
    "solve",
    "decide",
]
