"""Exact solvers for ordering intervals under a cost on newly covered length.

Intervals arrive one at a time; each pays ``f`` of the length it adds to
the union so far.  The package finds orderings of minimum total cost.
"""

from .covered import CoveredIntervalTable, build_covered_table
from .errors import (
    CapExceededError,
    InfeasibleEnumerationError,
    InstanceFormatError,
    IntervalOrderingError,
    PreconditionError,
    UndefinedLengthError,
)
from .exposed import (
    ExposedPartSet,
    enumerate_alpha,
    enumerate_full,
    enumerate_interval_parts,
    enumerate_oracle,
    enumerate_pairwise,
    enumerate_parts,
    enumerate_sbound,
    enumerate_super_parts,
)
from .generators import (
    PartitionReductionParams,
    cost_preset,
    gen_nested_powers,
    gen_partition_reduction,
    gen_random,
    has_partition,
)
from .geometry import DisjointUnion, Interval, covered_area, fmt_rat, intersect, subtract, union
from .instance import CostFunction, Instance, classify, cost_of_ordering, load_instance, split_components
from .kernels import IMPLEMENTATION
from .solver import Solution, brute_force, decide, dp_solve, solve, solve_auto, subset_dp
from .svg import render_svg

__all__ = [
    "CapExceededError",
    "CostFunction",
    "CoveredIntervalTable",
    "DisjointUnion",
    "ExposedPartSet",
    "IMPLEMENTATION",
    "InfeasibleEnumerationError",
    "Instance",
    "InstanceFormatError",
    "Interval",
    "IntervalOrderingError",
    "PartitionReductionParams",
    "PreconditionError",
    "Solution",
    "UndefinedLengthError",
    "brute_force",
    "build_covered_table",
    "classify",
    "cost_of_ordering",
    "cost_preset",
    "covered_area",
    "decide",
    "dp_solve",
    "enumerate_alpha",
    "enumerate_full",
    "enumerate_interval_parts",
    "enumerate_oracle",
    "enumerate_pairwise",
    "enumerate_parts",
    "enumerate_sbound",
    "enumerate_super_parts",
    "fmt_rat",
    "gen_nested_powers",
    "gen_partition_reduction",
    "gen_random",
    "has_partition",
    "intersect",
    "load_instance",
    "render_svg",
    "solve",
    "solve_auto",
    "split_components",
    "subset_dp",
    "subtract",
    "union",
]
