"""Enumerators for the exposed parts an instance can produce.

Each returns an :class:`ExposedPartSet`: deduplicated, non-empty, sorted by
component list.  Internally a part is a bitmask over the instance frame
(see :mod:`interval_ordering.frame`).
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations
from typing import Iterable, Iterator

from .covered import CoveredIntervalTable, build_covered_table
from .errors import CapExceededError, PreconditionError
from .frame import Frame, range_mask, runs, span
from .geometry import DisjointUnion
from .instance import Instance, classify

ORACLE_CAP = 8


@dataclass
class ExposedPartSet:
    mode: str
    frame: Frame
    masks: list[int]
    prefix_sizes: list[int] = field(default_factory=list)

    def __post_init__(self):
        self.masks = sorted(set(self.masks) - {0}, key=runs)

    def __len__(self) -> int:
        return len(self.masks)

    def __iter__(self) -> Iterator[DisjointUnion]:
        return iter(self.parts)

    def __contains__(self, u) -> bool:
        return u in self.as_set()

    @cached_property
    def parts(self) -> tuple[DisjointUnion, ...]:
        return tuple(self.frame.union_of(m) for m in self.masks)

    def as_set(self) -> frozenset[DisjointUnion]:
        return frozenset(self.parts)

    def max_components(self) -> int:
        return max((len(runs(m)) for m in self.masks), default=0)


def _setup(inst: Instance) -> tuple[Frame, list[int]]:
    frame = Frame(inst.intervals)
    return frame, [frame.interval_mask(iv) for iv in inst.intervals]


def realizable_via(e: int, j: int, masks: list[int]) -> bool:
    """Is ``e`` the exposed part of interval ``j`` in some ordering?

    The best predecessor set is every other interval disjoint from ``e``;
    ``e`` is realizable iff those cover the rest of interval ``j``.
    """
    mj = masks[j]
    if not e or e & ~mj:
        return False
    rest = mj & ~e
    if not rest:
        return True
    for k, mk in enumerate(masks):
        if k != j and not mk & e:
            rest &= ~mk
            if not rest:
                return True
    return False


def realizable(e: int, masks: list[int]) -> bool:
    return any(realizable_via(e, j, masks) for j in range(len(masks)))


def _proper_sub(mi: int, mj: int) -> bool:
    """Interval ``mi`` is a proper subinterval of ``mj``."""
    return mi != mj and not mi & ~mj


def enumerate_oracle(inst: Instance, cap: int = ORACLE_CAP, respect_subintervals: bool = False) -> ExposedPartSet:
    """Exposed parts read off every one of the n! orderings.

    With ``respect_subintervals`` only orderings in which no interval comes
    before one of its proper subintervals are used.
    """
    n = inst.n
    if n > cap:
        raise CapExceededError(f"oracle enumeration is capped at n = {cap} (got {n})")
    frame, masks = _setup(inst)
    must_precede = [(i, j) for i in range(n) for j in range(n) if _proper_sub(masks[i], masks[j])]
    found = set()
    for perm in permutations(range(n)):
        if respect_subintervals and must_precede:
            pos = [0] * n
            for p, j in enumerate(perm):
                pos[j] = p
            if any(pos[i] > pos[j] for i, j in must_precede):
                continue
        cov = 0
        for j in perm:
            e = masks[j] & ~cov
            if e:
                found.add(e)
            cov |= masks[j]
    return ExposedPartSet("oracle-respecting" if respect_subintervals else "oracle", frame, list(found))


def prefix_part_bound(k: int) -> int:
    """Upper bound on the number of exposed parts of the ``k`` longest intervals."""
    return 6 * 2**k - k * k - 4 * k - 6


def enumerate_full(inst: Instance) -> ExposedPartSet:
    """All exposed parts, adding intervals longest first.

    When interval ``I`` joins, every known part ``E`` also yields ``E - I``.
    No earlier interval fits strictly inside ``I``, so ``I``'s own exposed
    part is a single interval ``[s, t)`` cut at endpoints of earlier
    intervals.  It is kept if the earlier intervals missing it cover the rest
    of ``I``.
    """
    frame, masks = _setup(inst)
    spans_ = [span(m) for m in masks]
    order = sorted(range(inst.n), key=lambda j: (-inst.intervals[j].length, j))
    parts: set[int] = set()
    seen: list[int] = []
    sizes = []
    for j in order:
        mj = masks[j]
        if parts:
            shrunk = {e & ~mj for e in parts}
            shrunk.discard(0)
            parts |= shrunk
        a, b = spans_[j]
        ss = {a}
        ts = {b}
        for i in seen:
            lo, hi = spans_[i]
            if a < hi < b:
                ss.add(hi)
            if a < lo < b:
                ts.add(lo)
        for s in ss:
            for t in ts:
                if s >= t:
                    continue
                cand = range_mask(s, t)
                rest = mj & ~cand
                for i in seen:
                    if not rest:
                        break
                    if not masks[i] & cand:
                        rest &= ~masks[i]
                if not rest:
                    parts.add(cand)
        seen.append(j)
        sizes.append(len(parts))
    return ExposedPartSet("full", frame, list(parts), sizes)


def _flank_limits(table: CoveredIntervalTable) -> tuple[dict[int, int], dict[int, int]]:
    """Earliest start of a covered interval ending at each point, and the
    latest end of one starting at each point."""
    left: dict[int, int] = {}
    right: dict[int, int] = {}
    for e in table.entries:
        if e.lo < left.get(e.hi, e.hi):
            left[e.hi] = e.lo
        if e.hi > right.get(e.lo, e.lo):
            right[e.lo] = e.hi
    return left, right


def enumerate_interval_parts(inst: Instance, table: CoveredIntervalTable | None = None) -> ExposedPartSet:
    """Exposed parts that are single intervals.

    ``[s, t)`` is exposed inside ``J = [p, q)`` iff ``[p, s)`` is empty or
    inside a covered interval ending at ``s``, and ``[t, q)`` likewise on the
    right.  So per ``s`` only intervals starting in ``[left(s), s]`` qualify,
    and per ``t`` their ends must lie in ``[t, right(t)]``.
    """
    frame, masks = _setup(inst)
    table = table or build_covered_table(inst, frame)
    left, right = _flank_limits(table)
    spans_ = [span(m) for m in masks]
    m = len(frame.points)
    found = []
    for s in range(m):
        plo = left.get(s, s)
        qs = sorted(q for p, q in spans_ if plo <= p <= s and q > s)
        if not qs:
            continue
        for t in range(s + 1, m):
            i = bisect_left(qs, t)
            if i < len(qs) and qs[i] <= right.get(t, t):
                found.append(range_mask(s, t))
    return ExposedPartSet("intervals", frame, found)


def enumerate_super_parts(inst: Instance) -> ExposedPartSet:
    """Exposed parts of orderings that put every interval after its proper
    subintervals.

    Interval ``I`` loses everything its proper subintervals cover, and may in
    addition be clipped from the left by an interval sticking out past its
    start and from the right by one sticking out past its end.
    """
    frame, masks = _setup(inst)
    spans_ = [span(m) for m in masks]
    found = set()
    for j, mj in enumerate(masks):
        a, b = spans_[j]
        sub = 0
        lefts = {a}
        rights = {b}
        for i, mi in enumerate(masks):
            if _proper_sub(mi, mj):
                sub |= mi
                continue
            lo, hi = spans_[i]
            if lo < a < hi < b:
                lefts.add(hi)
            elif a < lo < b < hi:
                rights.add(lo)
        e = mj & ~sub
        if not e:
            continue
        for s in lefts:
            for t in rights:
                if s < t:
                    clipped = e & range_mask(s, t)
                    if clipped:
                        found.add(clipped)
    return ExposedPartSet("super", frame, list(found))


def enumerate_pairwise(inst: Instance, table: CoveredIntervalTable | None = None) -> ExposedPartSet:
    """``I - C`` for every interval ``I`` and covered interval ``C``.

    Exact only when every covered area is one interval, i.e. all intervals
    pairwise touch or intersect; anything else is refused.
    """
    if inst.n and not classify(inst).is_pairwise_connected:
        raise PreconditionError("instance is not pairwise touching/intersecting; use another enumerator")
    frame, masks = _setup(inst)
    table = table or build_covered_table(inst, frame)
    covers = [range_mask(e.lo, e.hi) for e in table.entries]
    found = set(masks)
    for mj in masks:
        for c in covers:
            found.add(mj & ~c)
    return ExposedPartSet("pairwise", frame, list(found))


def _spans_with_witness(masks: list[int], m: int) -> Iterable[tuple[int, int]]:
    spans_ = [span(x) for x in masks]
    for s in range(m):
        for t in range(s + 1, m):
            if any(p <= s and t <= q for p, q in spans_):
                yield s, t


def enumerate_alpha(inst: Instance, alpha: int, table: CoveredIntervalTable | None = None) -> ExposedPartSet:
    """Exposed parts with at most ``alpha`` interval components.

    A part spanning ``[s, t)`` with ``r`` components has ``r - 1`` holes,
    each a covered interval strictly inside the span.  Candidates punch up
    to ``alpha - 1`` pairwise non-touching covered intervals out of each
    span and are kept when realizable.
    """
    if alpha < 1:
        raise PreconditionError("alpha must be at least 1")
    frame, masks = _setup(inst)
    table = table or build_covered_table(inst, frame)
    blocks = sorted((e.lo, e.hi) for e in table.entries)
    found = set()
    for s, t in _spans_with_witness(masks, len(frame.points)):
        inner = [(lo, hi) for lo, hi in blocks if s < lo and hi < t]
        base = range_mask(s, t)
        cands = {base}

        def extend(start: int, after: int, cut: int, depth: int):
            if depth == alpha - 1:
                return
            for i in range(start, len(inner)):
                lo, hi = inner[i]
                if lo > after:
                    c = cut | range_mask(lo, hi)
                    cands.add(base & ~c)
                    extend(i + 1, hi, c, depth + 1)

        extend(0, s, 0, 0)
        for e in cands:
            if e not in found and realizable(e, masks):
                found.add(e)
    return ExposedPartSet(f"alpha{alpha}", frame, list(found))


def enumerate_sbound(inst: Instance) -> ExposedPartSet:
    """Exposed parts found by trying, per span ``[s, t)``, every subset of the
    intervals lying strictly inside it as the holes; at most ``s_I`` such
    intervals exist when some interval contains the span.
    """
    frame, masks = _setup(inst)
    spans_ = [span(x) for x in masks]
    found = set()
    for s, t in _spans_with_witness(masks, len(frame.points)):
        inner = [masks[k] for k, (lo, hi) in enumerate(spans_) if s < lo and hi < t]
        holes = {0}
        for mk in inner:
            holes |= {h | mk for h in holes}
        base = range_mask(s, t)
        for h in holes:
            e = base & ~h
            if e not in found and realizable(e, masks):
                found.add(e)
    return ExposedPartSet("sbound", frame, list(found))


ENUMERATORS = {
    "full": enumerate_full,
    "oracle": enumerate_oracle,
    "intervals": enumerate_interval_parts,
    "super": enumerate_super_parts,
    "pairwise": enumerate_pairwise,
    "sbound": enumerate_sbound,
}


def enumerate_parts(inst: Instance, mode: str, alpha: int | None = None) -> ExposedPartSet:
    if mode == "alpha":
        if alpha is None:
            raise PreconditionError("alpha mode needs a component bound")
        return enumerate_alpha(inst, alpha)
    try:
        fn = ENUMERATORS[mode]
    except KeyError:
        raise PreconditionError(f"unknown enumeration mode {mode!r}") from None
    return fn(inst)
