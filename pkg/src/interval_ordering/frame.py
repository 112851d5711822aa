"""Coordinate compression: point sets over an instance's endpoints as bitmasks.

Every exposed part and covered area of an instance has endpoints drawn from
the instance's own endpoints.  Sorting those ``m`` distinct points gives
``m - 1`` elementary segments; bit ``i`` of a mask stands for
``[points[i], points[i+1])``.  Runs of set bits are interval components, so a
mask is a canonical form for free and union/difference are ``|`` and ``& ~``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .geometry import DisjointUnion, Interval


def range_mask(lo: int, hi: int) -> int:
    """Bits ``lo .. hi-1``."""
    return ((1 << hi) - 1) ^ ((1 << lo) - 1)


def runs(mask: int) -> list[tuple[int, int]]:
    """Maximal runs of set bits as ``(lo, hi)`` point-index pairs."""
    out = []
    while mask:
        lo = (mask & -mask).bit_length() - 1
        # adding the lowest set bit carries through the run
        above = mask + (1 << lo)
        hi = (above & -above).bit_length() - 1
        out.append((lo, hi))
        mask &= ~range_mask(lo, hi)
    return out


def span(mask: int) -> tuple[int, int]:
    return (mask & -mask).bit_length() - 1, mask.bit_length()


def gaps(mask: int) -> list[tuple[int, int]]:
    """Runs of clear bits strictly between the first and last set bit."""
    lo, hi = span(mask)
    return runs(range_mask(lo, hi) & ~mask)


class Frame:
    """Sorted distinct endpoints of a collection of intervals."""

    __slots__ = ("points", "index", "seglen")

    def __init__(self, intervals: Iterable[Interval]):
        pts = sorted({p for iv in intervals for p in (iv.start, iv.end)})
        self.points: list[Fraction] = pts
        self.index: dict[Fraction, int] = {p: i for i, p in enumerate(pts)}
        self.seglen: list[Fraction] = [pts[i + 1] - pts[i] for i in range(len(pts) - 1)]

    @property
    def segments(self) -> int:
        return max(len(self.points) - 1, 0)

    def __eq__(self, other) -> bool:
        return isinstance(other, Frame) and self.points == other.points

    def interval_mask(self, iv: Interval) -> int:
        return range_mask(self.index[iv.start], self.index[iv.end])

    def indices(self, iv: Interval) -> tuple[int, int]:
        return self.index[iv.start], self.index[iv.end]

    def mask_of(self, u: DisjointUnion) -> int | None:
        """Mask of ``u``, or None if some endpoint is not a frame point."""
        m = 0
        for c in u.components:
            lo = self.index.get(c.start)
            hi = self.index.get(c.end)
            if lo is None or hi is None:
                return None
            m |= range_mask(lo, hi)
        return m

    def union_of(self, mask: int) -> DisjointUnion:
        pts = self.points
        return DisjointUnion._trusted(
            tuple(Interval(pts[lo], pts[hi]) for lo, hi in runs(mask))
        )

    def interval(self, lo: int, hi: int) -> Interval:
        return Interval(self.points[lo], self.points[hi])

    def length(self, mask: int) -> Fraction:
        pts = self.points
        return sum((pts[hi] - pts[lo] for lo, hi in runs(mask)), Fraction(0))

    def key(self, mask: int) -> tuple:
        """Lexicographic sort key matching the component-list order."""
        return tuple(runs(mask))


def masks_for(frame: Frame, intervals: Sequence[Interval]) -> list[int]:
    return [frame.interval_mask(iv) for iv in intervals]
