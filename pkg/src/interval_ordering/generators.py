"""Hardness constructions and seeded random instance families."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import PreconditionError
from .geometry import Interval, as_rat
from .instance import CostFunction, Instance

FAMILIES = ("general", "agreeable", "laminar", "pairwise")


def gen_nested_powers(n: int, cost: CostFunction | None = None) -> Instance:
    """``[2^i, 2^(i+1))`` for ``i = 1..n-1`` plus ``[0, 2^n)``.

    The nested pieces can be peeled off the big interval in any subset, so
    its exposed length takes every even value up to ``2^n``.
    """
    if n < 2:
        raise PreconditionError("the construction needs n >= 2")
    ivs = [Interval(1 << i, 1 << (i + 1)) for i in range(1, n)]
    ivs.append(Interval(0, 1 << n))
    return Instance(tuple(ivs), cost)


@dataclass(frozen=True)
class PartitionReductionParams:
    items: tuple[int, ...]
    eps: Fraction = Fraction(1)
    x0: Fraction = Fraction(4)
    slopes: tuple[Fraction, Fraction, Fraction] = (Fraction(1), Fraction(2), Fraction(3))

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(int(x) for x in self.items))
        object.__setattr__(self, "eps", as_rat(self.eps))
        object.__setattr__(self, "x0", as_rat(self.x0))
        object.__setattr__(self, "slopes", tuple(as_rat(c) for c in self.slopes))

    def validate(self) -> None:
        if not self.items or any(x <= 0 for x in self.items):
            raise PreconditionError("items must be a non-empty list of positive integers")
        if self.eps <= 0:
            raise PreconditionError("eps must be positive")
        c1, c2, c3 = self.slopes
        if not c1 < c2 < c3:
            raise PreconditionError("slopes must satisfy c1 < c2 < c3")
        # the slope-c2 stretch on [0, 2 eps] must end before the c1 piece starts
        if self.x0 - self.eps < 2 * self.eps:
            raise PreconditionError("need x0 >= 3 * eps so the linear pieces do not overlap")


def reduction_cost(p: PartitionReductionParams) -> CostFunction:
    """Continuous three-piece cost: slope c2 up to x0 - eps, c1 up to x0,
    c3 beyond, with f(0) = 0."""
    c1, c2, c3 = p.slopes
    return CostFunction.piecewise_linear([p.x0 - p.eps, p.x0], [c2, c1, c3], f0=0)


def gen_partition_reduction(p: PartitionReductionParams) -> Instance:
    """Laminar instance with cost at most W iff the items split evenly.

    Item ``k`` becomes ``[2 eps S_(k-1)/S, 2 eps S_k/S)`` (``S_k`` prefix
    sums, ``S`` the total); one long interval ``[0, x0 + eps)`` covers them.
    W is ``f(eps) + f(x0)``.
    """
    p.validate()
    total = sum(p.items)
    ivs = []
    acc = 0
    for x in p.items:
        ivs.append(Interval(Fraction(2 * acc, total) * p.eps, Fraction(2 * (acc + x), total) * p.eps))
        acc += x
    ivs.append(Interval(0, p.x0 + p.eps))
    f = reduction_cost(p)
    return Instance(tuple(ivs), f, f.exact(p.eps) + f.exact(p.x0))


def has_partition(items: Sequence[int]) -> bool:
    """Subset brute force; desk-scale only."""
    total = sum(items)
    if total % 2:
        return False
    half = total // 2
    idx = range(len(items))
    return any(sum(items[i] for i in c) == half for r in range(len(items) + 1) for c in combinations(idx, r))


def gen_random(
    n: int,
    coord_range: int = 16,
    seed: int = 0,
    family: str = "general",
    cost: CostFunction | None = None,
) -> Instance:
    """Integer-endpoint instance inside ``[0, coord_range]``, fixed by ``seed``."""
    if n < 1:
        raise PreconditionError("n must be at least 1")
    if coord_range < 2:
        raise PreconditionError("coord_range must be at least 2")
    if family not in FAMILIES:
        raise PreconditionError(f"unknown family {family!r}")
    rng = random.Random(seed)
    R = coord_range
    pairs: list[tuple[int, int]] = []
    if family == "general":
        for _ in range(n):
            a = rng.randrange(R)
            pairs.append((a, rng.randint(a + 1, R)))
    elif family == "pairwise":
        mid = R // 2
        for _ in range(n):
            pairs.append((rng.randint(0, mid - 1), rng.randint(mid, R)))
    elif family == "agreeable":
        starts = sorted(rng.randrange(R) for _ in range(n))
        end = 0
        for a in starts:
            end = max(end, rng.randint(a + 1, min(R, a + max(2, R // 3))))
            pairs.append((a, end))
        rng.shuffle(pairs)
    else:
        pairs = _laminar(n, R, rng)
    return Instance(tuple(Interval(a, b) for a, b in pairs), cost)


def _laminar(n: int, R: int, rng: random.Random) -> list[tuple[int, int]]:
    def fits(a: int, b: int) -> bool:
        return all(b <= c or d <= a or (c <= a and b <= d) or (a <= c and d <= b) for c, d in out)

    out: list[tuple[int, int]] = []
    while len(out) < n:
        for _ in range(200):
            a = rng.randrange(R)
            b = rng.randint(a + 1, R)
            if fits(a, b):
                out.append((a, b))
                break
        else:
            out.append(rng.choice(out))
    return out


def min5_cost() -> CostFunction:
    """``min(x, 5)``: concave and subadditive."""
    return CostFunction.piecewise_linear([5], [1, 0], f0=0, declared_class="sub")


# Named cost functions for the command line and the test corpora.
COST_PRESETS = {
    "pow2": CostFunction.pow2,
    "square": lambda: CostFunction.polynomial([0, 0, 1], declared_class="super"),
    "linear": lambda: CostFunction.linear(1, 0, declared_class="super"),
    "sqrt": CostFunction.sqrt,
    "min5": min5_cost,
    "partition": lambda: reduction_cost(PartitionReductionParams((1,))),
}


def cost_preset(name: str) -> CostFunction:
    try:
        return COST_PRESETS[name]()
    except KeyError:
        raise PreconditionError(f"unknown cost preset {name!r}") from None
