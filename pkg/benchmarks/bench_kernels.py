"""Compare the compiled kernels with the pure-Python ones.

    python benchmarks/bench_kernels.py [--repeat 3]

Runs the same inputs through both modules and checks that results match.
"""

import argparse
import time

from interval_ordering import kernels
from interval_ordering.exposed import enumerate_full, enumerate_interval_parts
from interval_ordering.frame import Frame
from interval_ordering.generators import cost_preset, gen_nested_powers, gen_random
from interval_ordering.solver import _mask_cost, dp_solve


def best_of(repeat, fn):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def exhaustive_case(name, inst):
    frame = Frame(inst.intervals)
    masks = [frame.interval_mask(iv) for iv in inst.intervals]
    cost = _mask_cost(inst, frame)
    return name, lambda mod: getattr(mod, name.split()[0])(masks, cost, inst.zero)


def dp_case(label, inst, parts):
    def run(mod):
        saved = kernels.active
        kernels.active = mod
        try:
            sol = dp_solve(inst, parts)
        finally:
            kernels.active = saved
        return sol.total, sol.ordering

    return label, run


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if kernels.compiled is None:
        raise SystemExit("compiled kernels are not built; run pip install -e . first")

    sq = cost_preset("square")
    cases = [
        exhaustive_case("brute_force n=8", gen_random(8, 16, seed=2, cost=sq)),
        exhaustive_case("subset_dp n=16", gen_random(16, 40, seed=2, cost=sq)),
        exhaustive_case("subset_dp n=18", gen_random(18, 48, seed=5, cost=sq)),
    ]
    nested = gen_nested_powers(14, cost_preset("pow2"))
    cases.append(dp_case("dp_fill full n=14 (bigint)", nested, enumerate_full(nested)))
    rnd = gen_random(200, 800, seed=1, cost=cost_preset("min5"))
    cases.append(dp_case("dp_fill intervals n=200", rnd, enumerate_interval_parts(rnd)))

    print(f"{'kernel':<28}{'python s':>10}{'compiled s':>12}{'speedup':>9}")
    for label, run in cases:
        tp, rp = best_of(args.repeat, lambda: run(kernels.python))
        tc, rc = best_of(args.repeat, lambda: run(kernels.compiled))
        if rp != rc:
            raise SystemExit(f"{label}: results differ between implementations")
        print(f"{label:<28}{tp:>10.3f}{tc:>12.3f}{tp / tc:>8.1f}x")


if __name__ == "__main__":
    main()
