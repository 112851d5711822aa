"""Covered intervals: unions of input intervals that form a single interval."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .frame import Frame, range_mask
from .geometry import DisjointUnion, Interval, as_union
from .instance import Instance


class CoveredEntry(NamedTuple):
    id: int
    lo: int  # frame index of the start point
    hi: int  # frame index of the end point
    count: int  # input intervals contained in [lo, hi)


@dataclass
class CoveredIntervalTable:
    """Covered intervals in topological order (subintervals first).

    Order is decreasing start, then increasing end; incomparable entries
    therefore come out in a fixed order.
    """

    frame: Frame
    entries: list[CoveredEntry]
    index: dict[tuple[int, int], int]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[CoveredEntry]:
        return iter(self.entries)

    def interval(self, cid: int) -> Interval:
        e = self.entries[cid]
        return self.frame.interval(e.lo, e.hi)

    def items(self) -> list[tuple[Interval, int]]:
        return [(self.frame.interval(e.lo, e.hi), e.count) for e in self.entries]

    def lookup(self, u) -> int | None:
        u = as_union(u)
        if len(u.components) != 1:
            return None
        c = u.components[0]
        lo = self.frame.index.get(c.start)
        hi = self.frame.index.get(c.end)
        if lo is None or hi is None:
            return None
        return self.index.get((lo, hi))

    def by_start(self) -> dict[int, list[tuple[int, int]]]:
        """start index -> [(end index, id)]"""
        out: dict[int, list[tuple[int, int]]] = {}
        for e in self.entries:
            out.setdefault(e.lo, []).append((e.hi, e.id))
        return out

    def by_end(self) -> dict[int, list[tuple[int, int]]]:
        """end index -> [(start index, id)]"""
        out: dict[int, list[tuple[int, int]]] = {}
        for e in self.entries:
            out.setdefault(e.hi, []).append((e.lo, e.id))
        return out


def build_covered_table(inst: Instance, frame: Frame | None = None) -> CoveredIntervalTable:
    """All covered intervals with their containment counts.

    For a start point ``a`` only intervals starting at or after ``a`` matter;
    sweeping the end points upward and OR-ing in the intervals that end by
    ``b`` gives the covered area of the intervals inside ``[a, b)``, which must
    equal ``[a, b)`` itself.
    """
    frame = frame or Frame(inst.intervals)
    spans = sorted(frame.indices(iv) for iv in inst.intervals)
    starts = sorted({lo for lo, _ in spans})
    ends = sorted({hi for _, hi in spans})
    found: list[tuple[int, int, int]] = []
    for a in starts:
        inside = sorted((hi, lo) for lo, hi in spans if lo >= a)
        cover = 0
        count = 0
        k = 0
        for b in ends:
            if b <= a:
                continue
            while k < len(inside) and inside[k][0] <= b:
                hi, lo = inside[k]
                cover |= range_mask(lo, hi)
                count += 1
                k += 1
            if cover == range_mask(a, b):
                found.append((a, b, count))
    found.sort(key=lambda t: (-t[0], t[1]))
    entries = [CoveredEntry(i, lo, hi, cnt) for i, (lo, hi, cnt) in enumerate(found)]
    return CoveredIntervalTable(frame, entries, {(e.lo, e.hi): e.id for e in entries})


def lookup(table: CoveredIntervalTable, u: DisjointUnion) -> int | None:
    return table.lookup(u)
