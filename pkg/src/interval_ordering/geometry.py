"""Exact half-open intervals and canonical unions of disjoint intervals.

All coordinates are :class:`fractions.Fraction`.  A :class:`DisjointUnion`
keeps its components sorted with a strict gap between neighbours, so two
unions covering the same point set always compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Union

Number = Union[int, Fraction]


def as_rat(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to Fraction (no floats)."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact coordinate")


def fmt_rat(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True, order=True)
class Interval:
    """Half-open interval ``[start, end)`` with ``start < end``."""

    start: Fraction
    end: Fraction

    def __init__(self, start: Number, end: Number):
        s, e = as_rat(start), as_rat(end)
        if not s < e:
            raise ValueError(f"empty interval [{fmt_rat(s)}, {fmt_rat(e)})")
        object.__setattr__(self, "start", s)
        object.__setattr__(self, "end", e)

    @property
    def length(self) -> Fraction:
        return self.end - self.start

    def contains(self, other: "Interval") -> bool:
        return self.start <= other.start and other.end <= self.end

    def intersects(self, other: "Interval") -> bool:
        return self.start < other.end and other.start < self.end

    def touches_or_intersects(self, other: "Interval") -> bool:
        return self.start <= other.end and other.start <= self.end

    def __contains__(self, x: Number) -> bool:
        return self.start <= x < self.end

    def __repr__(self) -> str:
        return f"[{fmt_rat(self.start)}, {fmt_rat(self.end)})"


class DisjointUnion:
    """Immutable canonical union of pairwise non-touching intervals."""

    __slots__ = ("components", "_hash")

    def __init__(self, components: Iterable[Interval] = ()):
        self.components: tuple[Interval, ...] = _canonical(components)
        self._hash = None

    @classmethod
    def of(cls, *pairs) -> "DisjointUnion":
        """``DisjointUnion.of((0, 1), (2, 3))``"""
        return cls(Interval(a, b) for a, b in pairs)

    @classmethod
    def _trusted(cls, comps: tuple[Interval, ...]) -> "DisjointUnion":
        u = cls.__new__(cls)
        u.components = comps
        u._hash = None
        return u

    def __iter__(self) -> Iterator[Interval]:
        return iter(self.components)

    def __len__(self) -> int:
        return len(self.components)

    def __bool__(self) -> bool:
        return bool(self.components)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DisjointUnion):
            return NotImplemented
        return self.components == other.components

    def __lt__(self, other: "DisjointUnion") -> bool:
        return self.key() < other.key()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.components)
        return self._hash

    def __repr__(self) -> str:
        if not self.components:
            return "{}"
        return "{" + ", ".join(map(repr, self.components)) + "}"

    def key(self) -> tuple:
        return tuple((c.start, c.end) for c in self.components)

    @property
    def length(self) -> Fraction:
        return length(self)

    @property
    def span(self) -> Interval | None:
        if not self.components:
            return None
        return Interval(self.components[0].start, self.components[-1].end)

    def contains_point(self, x: Number) -> bool:
        return any(x in c for c in self.components)

    def __or__(self, other: "DisjointUnion") -> "DisjointUnion":
        return union(self, other)

    def __sub__(self, other: "DisjointUnion") -> "DisjointUnion":
        return subtract(self, other)


def _canonical(components: Iterable[Interval]) -> tuple[Interval, ...]:
    items = sorted(components)
    out: list[Interval] = []
    for iv in items:
        if out and iv.start <= out[-1].end:
            if iv.end > out[-1].end:
                out[-1] = Interval(out[-1].start, iv.end)
        else:
            out.append(iv)
    return tuple(out)


def as_union(x) -> DisjointUnion:
    if isinstance(x, DisjointUnion):
        return x
    if isinstance(x, Interval):
        return DisjointUnion._trusted((x,))
    raise TypeError(f"expected Interval or DisjointUnion, got {type(x).__name__}")


def union(u: DisjointUnion, v: DisjointUnion) -> DisjointUnion:
    u, v = as_union(u), as_union(v)
    if not v.components:
        return u
    if not u.components:
        return v
    return DisjointUnion(u.components + v.components)


def subtract(u: DisjointUnion, v: DisjointUnion) -> DisjointUnion:
    """Point-set difference ``u \\ v`` by a merge walk over both component lists."""
    u, v = as_union(u), as_union(v)
    if not u.components or not v.components:
        return u
    out: list[Interval] = []
    cut = v.components
    j = 0
    for c in u.components:
        start = c.start
        while j < len(cut) and cut[j].end <= start:
            j += 1
        k = j
        while k < len(cut) and cut[k].start < c.end:
            if cut[k].start > start:
                out.append(Interval(start, cut[k].start))
            start = max(start, cut[k].end)
            if start >= c.end:
                break
            k += 1
        if start < c.end:
            out.append(Interval(start, c.end))
    # pieces of one component are separated by removed material, so no merge needed
    return DisjointUnion._trusted(tuple(out))


def intersect(u: DisjointUnion, v: DisjointUnion) -> DisjointUnion:
    u = as_union(u)
    return subtract(u, subtract(u, v))


def length(u: DisjointUnion) -> Fraction:
    return sum((c.end - c.start for c in as_union(u).components), Fraction(0))


def is_single_interval(u: DisjointUnion) -> bool:
    return len(as_union(u).components) == 1


def is_canonical(u: DisjointUnion) -> bool:
    comps = u.components
    return all(comps[i].end < comps[i + 1].start for i in range(len(comps) - 1))


def covered_area(intervals: Iterable[Interval]) -> DisjointUnion:
    return DisjointUnion(intervals)


EMPTY = DisjointUnion()
