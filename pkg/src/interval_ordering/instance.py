"""Problem instances, cost functions and structural statistics."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Any, Iterable, Sequence

from mpmath.ctx_mp import MPContext

from .errors import InstanceFormatError, PreconditionError, UndefinedLengthError
from .geometry import EMPTY, DisjointUnion, Interval, as_rat, covered_area, length, subtract, union

# Float backend: 113-bit mantissa (binary128).  Private context, so the global
# mpmath precision is left alone.
FLOAT = MPContext()
FLOAT.prec = 113

EXACT = "exact"
FLOAT_BACKEND = "float"

KINDS = ("pow2", "linear", "polynomial", "piecewise_linear", "sqrt", "table")
CLASSES = ("arbitrary", "sub", "super")


def to_float(x):
    """Lift an exact number into the float backend."""
    if isinstance(x, Fraction):
        return FLOAT.mpf(x.numerator) / x.denominator
    return FLOAT.mpf(x)


def _rat(v, what: str) -> Fraction:
    if isinstance(v, bool):
        raise InstanceFormatError(f"{what}: expected a rational, got {v!r}")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (list, tuple)) and len(v) == 2 and all(
        isinstance(p, int) and not isinstance(p, bool) for p in v
    ):
        if v[1] <= 0:
            raise InstanceFormatError(f"{what}: denominator must be positive")
        return Fraction(v[0], v[1])
    raise InstanceFormatError(f"{what}: expected integer or [num, den], got {v!r}")


def rat_json(x: Fraction) -> list[int]:
    return [x.numerator, x.denominator]


@dataclass(frozen=True, eq=False)
class CostFunction:
    """A cost ``f: [0, inf) -> R`` of one of a few closed-form kinds.

    ``params`` per kind (rationals throughout):

    * ``pow2``: none, ``f(x) = 2**x``
    * ``linear``: ``c`` (default 1), ``b`` (default 0), ``f(x) = c*x + b``
    * ``polynomial``: ``coeffs`` in ascending degree
    * ``piecewise_linear``: ``f0`` (default 0), ``breakpoints`` (strictly
      increasing, positive), ``slopes`` (one more than breakpoints)
    * ``sqrt``: ``c`` (default 1), ``f(x) = c*sqrt(x)``
    * ``table``: ``values``, a list of ``[length, cost]`` pairs

    ``declared_class`` states whether ``f - f(0)`` is subadditive (``"sub"``)
    or superadditive (``"super"``).  It is trusted, never inferred.
    """

    kind: str
    params: dict = field(default_factory=dict)
    declared_class: str = "arbitrary"

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InstanceFormatError(f"unknown cost kind {self.kind!r}")
        if self.declared_class not in CLASSES:
            raise InstanceFormatError(f"unknown cost class {self.declared_class!r}")
        object.__setattr__(self, "params", _normalize_params(self.kind, dict(self.params)))

    def __eq__(self, other):
        if not isinstance(other, CostFunction):
            return NotImplemented
        return (self.kind, self.params, self.declared_class) == (
            other.kind,
            other.params,
            other.declared_class,
        )

    def __hash__(self):
        return hash((self.kind, self.declared_class, json.dumps(self.to_json(), sort_keys=True)))

    # constructors --------------------------------------------------------
    @classmethod
    def pow2(cls, declared_class="super"):
        return cls("pow2", {}, declared_class)

    @classmethod
    def linear(cls, c=1, b=0, declared_class="arbitrary"):
        return cls("linear", {"c": as_rat(c), "b": as_rat(b)}, declared_class)

    @classmethod
    def polynomial(cls, coeffs, declared_class="arbitrary"):
        return cls("polynomial", {"coeffs": [as_rat(c) for c in coeffs]}, declared_class)

    @classmethod
    def piecewise_linear(cls, breakpoints, slopes, f0=0, declared_class="arbitrary"):
        return cls(
            "piecewise_linear",
            {
                "f0": as_rat(f0),
                "breakpoints": [as_rat(b) for b in breakpoints],
                "slopes": [as_rat(s) for s in slopes],
            },
            declared_class,
        )

    @classmethod
    def sqrt(cls, c=1, declared_class="sub"):
        return cls("sqrt", {"c": as_rat(c)}, declared_class)

    @classmethod
    def table(cls, values, declared_class="arbitrary"):
        return cls("table", {"values": {as_rat(k): as_rat(v) for k, v in dict(values).items()}}, declared_class)

    # evaluation ----------------------------------------------------------
    def exact_for(self, integral_lengths: bool) -> bool:
        """Whether every value at lengths of the given sort is rational."""
        if self.kind == "sqrt":
            return False
        if self.kind == "pow2":
            return integral_lengths
        return True

    def exact(self, x: Fraction):
        """Exact value (int or Fraction); raises if ``f(x)`` is irrational here."""
        p = self.params
        k = self.kind
        if k == "pow2":
            if x.denominator != 1:
                raise PreconditionError(f"2**x is irrational at x = {x}")
            return 1 << int(x)
        if k == "linear":
            return p["c"] * x + p["b"]
        if k == "polynomial":
            acc = Fraction(0)
            for c in reversed(p["coeffs"]):
                acc = acc * x + c
            return acc
        if k == "piecewise_linear":
            acc = p["f0"]
            lo = Fraction(0)
            bps = p["breakpoints"]
            for i, slope in enumerate(p["slopes"]):
                hi = bps[i] if i < len(bps) else None
                if hi is None or x <= hi:
                    return acc + slope * (x - lo)
                acc += slope * (hi - lo)
                lo = hi
            return acc  # pragma: no cover
        if k == "table":
            try:
                return p["values"][x]
            except KeyError:
                raise UndefinedLengthError(f"table cost has no value at length {x}") from None
        raise PreconditionError(f"{k} has no exact values")

    def approx(self, x: Fraction):
        """Value in the float backend."""
        k = self.kind
        if k == "pow2":
            if x.denominator == 1:
                return FLOAT.ldexp(FLOAT.one, int(x))
            return FLOAT.power(2, to_float(x))
        if k == "sqrt":
            return to_float(self.params["c"]) * FLOAT.sqrt(to_float(x))
        return to_float(self.exact(x))

    def evaluate(self, x: Fraction, backend: str = EXACT):
        x = as_rat(x)
        if x < 0:
            raise PreconditionError("cost functions are defined on [0, inf)")
        return self.exact(x) if backend == EXACT else self.approx(x)

    def __call__(self, x):
        x = as_rat(x)
        return self.evaluate(x, EXACT if self.exact_for(x.denominator == 1) else FLOAT_BACKEND)

    # serialization -------------------------------------------------------
    def to_json(self) -> dict:
        p = self.params
        if self.kind == "table":
            params = {"values": [[rat_json(k), rat_json(v)] for k, v in sorted(p["values"].items())]}
        else:
            params = {
                k: ([rat_json(x) for x in v] if isinstance(v, list) else rat_json(v)) for k, v in p.items()
            }
        return {"kind": self.kind, "params": params, "class": self.declared_class}

    @classmethod
    def from_json(cls, obj) -> "CostFunction":
        if not isinstance(obj, dict):
            raise InstanceFormatError("cost must be an object")
        extra = set(obj) - {"kind", "params", "class"}
        if extra:
            raise InstanceFormatError(f"unknown cost keys: {sorted(extra)}")
        if "kind" not in obj:
            raise InstanceFormatError("cost.kind is required")
        params = obj.get("params", {})
        if not isinstance(params, dict):
            raise InstanceFormatError("cost.params must be an object")
        return cls(obj["kind"], _parse_params(obj["kind"], params), obj.get("class", "arbitrary"))

    def __repr__(self):
        return f"CostFunction({self.kind!r}, {self.params!r}, {self.declared_class!r})"


_PARAM_KEYS = {
    "pow2": set(),
    "linear": {"c", "b"},
    "polynomial": {"coeffs"},
    "piecewise_linear": {"f0", "breakpoints", "slopes"},
    "sqrt": {"c"},
    "table": {"values"},
}


def _parse_params(kind: str, raw: dict) -> dict:
    if kind not in _PARAM_KEYS:
        raise InstanceFormatError(f"unknown cost kind {kind!r}")
    extra = set(raw) - _PARAM_KEYS[kind]
    if extra:
        raise InstanceFormatError(f"unknown {kind} params: {sorted(extra)}")
    out: dict[str, Any] = {}
    for key, v in raw.items():
        if kind == "table":
            if not isinstance(v, list):
                raise InstanceFormatError("table values must be a list of [length, cost] pairs")
            vals = {}
            for pair in v:
                if not isinstance(pair, list) or len(pair) != 2:
                    raise InstanceFormatError("table values must be a list of [length, cost] pairs")
                vals[_rat(pair[0], "table length")] = _rat(pair[1], "table cost")
            out[key] = vals
        elif key in ("coeffs", "breakpoints", "slopes"):
            if not isinstance(v, list):
                raise InstanceFormatError(f"{key} must be a list")
            out[key] = [_rat(x, key) for x in v]
        else:
            out[key] = _rat(v, key)
    return out


def _normalize_params(kind: str, p: dict) -> dict:
    extra = set(p) - _PARAM_KEYS[kind]
    if extra:
        raise InstanceFormatError(f"unknown {kind} params: {sorted(extra)}")
    if kind == "linear":
        return {"c": as_rat(p.get("c", 1)), "b": as_rat(p.get("b", 0))}
    if kind == "sqrt":
        return {"c": as_rat(p.get("c", 1))}
    if kind == "polynomial":
        coeffs = [as_rat(c) for c in p.get("coeffs", [])]
        if not coeffs:
            raise InstanceFormatError("polynomial needs at least one coefficient")
        return {"coeffs": coeffs}
    if kind == "piecewise_linear":
        bps = [as_rat(b) for b in p.get("breakpoints", [])]
        slopes = [as_rat(s) for s in p.get("slopes", [])]
        if len(slopes) != len(bps) + 1:
            raise InstanceFormatError("piecewise_linear needs len(slopes) == len(breakpoints) + 1")
        if any(b <= 0 for b in bps) or any(bps[i] >= bps[i + 1] for i in range(len(bps) - 1)):
            raise InstanceFormatError("breakpoints must be positive and strictly increasing")
        return {"f0": as_rat(p.get("f0", 0)), "breakpoints": bps, "slopes": slopes}
    if kind == "table":
        vals = {as_rat(k): as_rat(v) for k, v in dict(p.get("values", {})).items()}
        if any(k < 0 for k in vals):
            raise InstanceFormatError("table lengths must be non-negative")
        return {"values": vals}
    return {}


def eval_cost(f: CostFunction, x, backend: str | None = None):
    """``f(x)``; the backend defaults to exact whenever the value is rational."""
    x = as_rat(x)
    if backend is None:
        return f(x)
    return f.evaluate(x, backend)


@dataclass(frozen=True)
class Instance:
    intervals: tuple[Interval, ...]
    cost: CostFunction | None = None
    threshold: Fraction | None = None

    def __post_init__(self):
        ivs = tuple(self.intervals)
        for iv in ivs:
            if not isinstance(iv, Interval):
                raise TypeError("intervals must be Interval instances")
        object.__setattr__(self, "intervals", ivs)
        if self.threshold is not None:
            object.__setattr__(self, "threshold", as_rat(self.threshold))

    @classmethod
    def of(cls, pairs, cost=None, threshold=None) -> "Instance":
        return cls(tuple(Interval(a, b) for a, b in pairs), cost, threshold)

    @property
    def n(self) -> int:
        return len(self.intervals)

    def __len__(self) -> int:
        return len(self.intervals)

    @cached_property
    def integral(self) -> bool:
        return all(iv.start.denominator == 1 and iv.end.denominator == 1 for iv in self.intervals)

    @cached_property
    def backend(self) -> str:
        if self.cost is None or self.cost.exact_for(self.integral):
            return EXACT
        return FLOAT_BACKEND

    def _require_cost(self) -> CostFunction:
        if self.cost is None:
            raise PreconditionError("instance has no cost function")
        return self.cost

    def f(self, x):
        """Cost of an exposed length in this instance's backend."""
        return self._require_cost().evaluate(x, self.backend)

    @cached_property
    def f0(self):
        return self.f(Fraction(0))

    @property
    def zero(self):
        return 0 if self.backend == EXACT else FLOAT.zero

    @property
    def W(self):
        if self.threshold is None:
            return None
        return self.threshold if self.backend == EXACT else to_float(self.threshold)

    def with_intervals(self, intervals: Iterable[Interval]) -> "Instance":
        return Instance(tuple(intervals), self.cost, None)

    def with_cost(self, cost: CostFunction | None) -> "Instance":
        return Instance(self.intervals, cost, self.threshold)

    # serialization -------------------------------------------------------
    def to_json(self) -> dict:
        obj: dict[str, Any] = {
            "intervals": [{"start": rat_json(iv.start), "end": rat_json(iv.end)} for iv in self.intervals]
        }
        if self.cost is not None:
            obj["cost"] = self.cost.to_json()
        if self.threshold is not None:
            obj["W"] = rat_json(self.threshold)
        return obj

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2) + "\n"

    @classmethod
    def from_json(cls, obj) -> "Instance":
        if not isinstance(obj, dict):
            raise InstanceFormatError("instance must be a JSON object")
        extra = set(obj) - {"intervals", "cost", "W"}
        if extra:
            raise InstanceFormatError(f"unknown instance keys: {sorted(extra)}")
        raw = obj.get("intervals")
        if not isinstance(raw, list):
            raise InstanceFormatError("'intervals' must be a list")
        ivs = []
        for k, item in enumerate(raw, 1):
            if not isinstance(item, dict) or set(item) != {"start", "end"}:
                raise InstanceFormatError(f"interval {k}: expected exactly keys 'start' and 'end'")
            s, e = _rat(item["start"], f"interval {k} start"), _rat(item["end"], f"interval {k} end")
            if not s < e:
                raise InstanceFormatError(f"interval {k} is empty")
            ivs.append(Interval(s, e))
        cost = CostFunction.from_json(obj["cost"]) if "cost" in obj else None
        w = _rat(obj["W"], "W") if "W" in obj else None
        return cls(tuple(ivs), cost, w)

    @classmethod
    def loads(cls, text: str) -> "Instance":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InstanceFormatError(f"invalid JSON: {exc}") from None
        return cls.from_json(obj)


def load_instance(path) -> Instance:
    with open(path, encoding="utf-8") as fh:
        return Instance.loads(fh.read())


def check_ordering(n: int, ordering: Sequence[int]) -> tuple[int, ...]:
    perm = tuple(ordering)
    if sorted(perm) != list(range(n)):
        raise PreconditionError(f"{list(perm)} is not a permutation of 0..{n - 1}")
    return perm


def cost_of_ordering(inst: Instance, ordering: Sequence[int]):
    """Total cost and exposed parts (listed by ordering position) of ``ordering``.

    Indices are 0-based.
    """
    perm = check_ordering(inst.n, ordering)
    covered = EMPTY
    total = inst.zero
    exposed = []
    for j in perm:
        iv = DisjointUnion._trusted((inst.intervals[j],))
        e = subtract(iv, covered)
        exposed.append(e)
        total = total + inst.f(length(e))
        covered = union(covered, iv)
    return total, exposed


@dataclass(frozen=True)
class InstanceStats:
    is_agreeable: bool
    is_laminar: bool
    is_pairwise_connected: bool
    max_subintervals: int
    component_count: int


def classify(inst: Instance) -> InstanceStats:
    ivs = inst.intervals
    by_start = sorted(ivs, key=lambda iv: (iv.start, iv.end))
    agreeable = all(by_start[i].end <= by_start[i + 1].end for i in range(len(by_start) - 1))
    laminar = all(
        not a.intersects(b) or a.contains(b) or b.contains(a) for a, b in combinations(ivs, 2)
    )
    # 1-D Helly: pairwise touching/intersecting iff max start <= min end
    pairwise = bool(ivs) and max(iv.start for iv in ivs) <= min(iv.end for iv in ivs)
    s_max = 0
    for iv in ivs:
        s = sum(1 for jv in ivs if iv.contains(jv) and jv != iv)
        s_max = max(s_max, s)
    return InstanceStats(
        is_agreeable=agreeable,
        is_laminar=laminar,
        is_pairwise_connected=pairwise,
        max_subintervals=s_max,
        component_count=len(covered_area(ivs)),
    )


def component_groups(intervals: Sequence[Interval]) -> list[list[int]]:
    """Indices of the intervals grouped by interval component of their union."""
    order = sorted(range(len(intervals)), key=lambda j: (intervals[j].start, intervals[j].end, j))
    groups: list[list[int]] = []
    reach = None
    for j in order:
        iv = intervals[j]
        if reach is None or iv.start > reach:
            groups.append([j])
            reach = iv.end
        else:
            groups[-1].append(j)
            reach = max(reach, iv.end)
    return [sorted(g) for g in groups]


def split_components(inst: Instance) -> list[Instance]:
    return [inst.with_intervals(inst.intervals[j] for j in g) for g in component_groups(inst.intervals)]


def spot_check_class(f: CostFunction, samples: int = 200, seed: int = 0) -> list[tuple[Fraction, Fraction]]:
    """Random pairs ``(x, y)`` at which ``f - f(0)`` breaks its declared class.

    An empty result is evidence only.  Comparisons happen in one backend:
    the float one as soon as any of the three values is irrational.
    """
    if f.declared_class == "arbitrary":
        raise PreconditionError("nothing to check for an arbitrary cost function")
    rng = random.Random(seed)
    if f.kind == "table":
        lengths = sorted(f.params["values"])
        if Fraction(0) not in f.params["values"]:
            raise PreconditionError("table cost needs a value at length 0 to check its class")
        pairs = [(x, y) for x in lengths for y in lengths if x <= y and x + y in f.params["values"]]
        pool = [pairs[rng.randrange(len(pairs))] for _ in range(samples)] if pairs else []
    else:
        pool = []
        for _ in range(samples):
            q = rng.choice((1, 1, 2, 3, 4))
            pool.append((Fraction(rng.randint(0, 12 * q), q), Fraction(rng.randint(0, 12 * q), q)))
    bad = []
    zero = Fraction(0)
    for x, y in pool:
        pts = (zero, x, y, x + y)
        if all(f.exact_for(p.denominator == 1) for p in pts):
            f0, fx, fy, fxy = (f.exact(p) for p in pts)
        else:
            f0, fx, fy, fxy = (f.approx(p) for p in pts)
        ok = fxy + f0 <= fx + fy if f.declared_class == "sub" else fxy + f0 >= fx + fy
        if not ok:
            bad.append((x, y))
    return bad
