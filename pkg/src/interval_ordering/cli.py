"""Command line: solve, enumerate, classify, generate, verify, plot.

Exit status: 0 ok, 1 verification failure, 2 bad input, 3 size cap
exceeded, 4 enumerator could not build a solution.  Interval numbers on
the command line and in reports are 1-based.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import kernels
from .errors import (
    CapExceededError,
    InfeasibleEnumerationError,
    InstanceFormatError,
    PreconditionError,
    UndefinedLengthError,
)
from .exposed import enumerate_parts
from .generators import (
    COST_PRESETS,
    FAMILIES,
    PartitionReductionParams,
    cost_preset,
    gen_nested_powers,
    gen_partition_reduction,
    gen_random,
)
from .geometry import DisjointUnion, fmt_rat
from .instance import EXACT, FLOAT, Instance, classify, load_instance, rat_json, spot_check_class
from .solver import BRUTE_FORCE_CAP, Solution, brute_force, solve, subset_dp
from .svg import Layout, render_svg

OK, VERIFY_FAILED, BAD_INPUT, CAP_EXCEEDED, INFEASIBLE = 0, 1, 2, 3, 4

ALGORITHMS = ("auto", "full", "sub", "super", "pairwise", "alpha", "sbound", "subset-dp", "brute")
MODES = ("full", "oracle", "intervals", "super", "pairwise", "alpha", "sbound")


class UsageError(Exception):
    pass


def _rat_arg(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _with_alpha(values: list[str], choices: tuple[str, ...], flag: str) -> tuple[str, int | None]:
    """Parse ``name`` or ``alpha K``."""
    name, rest = values[0], values[1:]
    if name not in choices:
        raise UsageError(f"{flag}: unknown choice {name!r} (expected one of {', '.join(choices)})")
    if name == "alpha":
        if len(rest) != 1 or not rest[0].isdigit() or int(rest[0]) < 1:
            raise UsageError(f"{flag} alpha needs one positive integer K")
        return name, int(rest[0])
    if rest:
        raise UsageError(f"{flag} {name} takes no argument")
    return name, None


def fmt_union(u: DisjointUnion) -> str:
    return " U ".join(f"[{fmt_rat(c.start)},{fmt_rat(c.end)})" for c in u) or "{}"


def fmt_value(x) -> str:
    if isinstance(x, (int, Fraction)):
        return fmt_rat(Fraction(x))
    return FLOAT.nstr(x, 20)


def value_json(x):
    if isinstance(x, (int, Fraction)):
        return rat_json(Fraction(x))
    return float(x)


def union_json(u: DisjointUnion) -> list:
    return [[rat_json(c.start), rat_json(c.end)] for c in u]


def _parse_ordering(text: str, n: int) -> list[int]:
    try:
        order = [int(tok) - 1 for tok in text.replace(" ", "").split(",") if tok]
    except ValueError:
        raise UsageError(f"--ordering: expected comma-separated integers, got {text!r}") from None
    if sorted(order) != list(range(n)):
        raise UsageError(f"--ordering must be a permutation of 1..{n}")
    return order


# commands --------------------------------------------------------------


def solution_report(inst: Instance, sol: Solution) -> dict:
    rep = {
        "algorithm": sol.algorithm,
        "backend": inst.backend,
        "ordering": [j + 1 for j in sol.ordering],
        "exposed": [union_json(e) for e in sol.exposed],
        "costs": [value_json(c) for c in sol.costs(inst)],
        "total": value_json(sol.total),
    }
    if inst.threshold is not None:
        rep["W"] = rat_json(inst.threshold)
        rep["decision"] = bool(sol.total <= inst.W)
    return rep


def cmd_solve(args) -> int:
    inst = load_instance(args.file)
    name, alpha = _with_alpha(args.algorithm, ALGORITHMS, "--algorithm")
    if inst.cost is None and inst.n:
        raise PreconditionError("instance has no cost function")
    sol = solve(inst, name, alpha)
    if args.json:
        print(json.dumps(solution_report(inst, sol)))
        return OK
    print(f"algorithm: {sol.algorithm} ({inst.backend} arithmetic)")
    print("ordering: " + " ".join(str(j + 1) for j in sol.ordering))
    costs = sol.costs(inst)
    for pos, (j, e, c) in enumerate(zip(sol.ordering, sol.exposed, costs), 1):
        print(f"  {pos:>3}. I{j + 1:<4} exposed {fmt_union(e):<28} length {fmt_rat(e.length):<6} cost {fmt_value(c)}")
    print(f"total: {fmt_value(sol.total)}")
    if inst.threshold is not None:
        verdict = "yes" if sol.total <= inst.W else "no"
        print(f"W: {fmt_rat(inst.threshold)}  cost <= W: {verdict}")
    return OK


def cmd_enumerate(args) -> int:
    inst = load_instance(args.file)
    mode, alpha = _with_alpha(args.mode, MODES, "--mode")
    parts = enumerate_parts(inst, mode, alpha)
    for u in parts:
        print(f"{fmt_union(u)}  length {fmt_rat(u.length)}")
    print(f"count: {len(parts)}")
    return OK


def cmd_classify(args) -> int:
    inst = load_instance(args.file)
    st = classify(inst)
    cls = inst.cost.declared_class if inst.cost else "-"
    print(f"intervals: {inst.n}")
    print(f"components: {st.component_count}")
    print(f"agreeable: {'yes' if st.is_agreeable else 'no'}")
    print(f"laminar: {'yes' if st.is_laminar else 'no'}")
    print(f"pairwise touching/intersecting: {'yes' if st.is_pairwise_connected else 'no'}")
    print(f"max proper subintervals: {st.max_subintervals}")
    print(f"cost: {inst.cost.kind if inst.cost else '-'} (declared {cls}, {inst.backend} arithmetic)")
    return OK


def cmd_generate(args) -> int:
    if args.family == "nested":
        inst = gen_nested_powers(args.n, cost_preset(args.cost) if args.cost != "none" else None)
    elif args.family == "partition":
        params = PartitionReductionParams(tuple(args.items), args.eps, args.x0, tuple(args.slopes))
        inst = gen_partition_reduction(params)
    else:
        cost = cost_preset(args.cost) if args.cost != "none" else None
        inst = gen_random(args.n, args.range, args.seed, args.shape, cost)
    sys.stdout.write(inst.dumps())
    return OK


def _agree(a, b, exact: bool) -> bool:
    if exact:
        return a == b
    a, b = FLOAT.mpf(a), FLOAT.mpf(b)
    return abs(a - b) <= FLOAT.mpf("1e-9") * max(abs(a), abs(b), 1)


def _restricted(inst: Instance) -> list[str]:
    """Restricted DP paths the instance is eligible for."""
    paths = []
    if inst.cost is not None and inst.cost.declared_class == "sub":
        paths.append("sub")
    if inst.cost is not None and inst.cost.declared_class == "super":
        paths.append("super")
    if inst.n and classify(inst).is_pairwise_connected:
        paths.append("pairwise")
    return paths


def check_instance(inst: Instance) -> list[str]:
    """Disagreements between the oracles and the DP paths; empty if none."""
    exact = inst.backend == EXACT
    ref = brute_force(inst).total
    results = {"subset-dp": subset_dp(inst).total}
    for name in ["full"] + _restricted(inst):
        try:
            results[name] = solve(inst, name).total
        except InfeasibleEnumerationError as exc:
            results[name] = exc
    bad = []
    for name, val in results.items():
        if isinstance(val, Exception):
            bad.append(f"{name}: {val}")
        elif not _agree(ref, val, exact):
            bad.append(f"{name}: {fmt_value(val)} but brute force gives {fmt_value(ref)}")
    return bad


def shrink(inst: Instance) -> Instance:
    """Drop intervals one at a time while the instance still fails."""
    changed = True
    while changed and inst.n > 1:
        changed = False
        for j in range(inst.n):
            smaller = Instance(inst.intervals[:j] + inst.intervals[j + 1 :], inst.cost, inst.threshold)
            if check_instance(smaller):
                inst = smaller
                changed = True
                break
    return inst


def _verify_corpus(args):
    if args.file:
        yield "file", load_instance(args.file)
        return
    if args.random is None:
        raise UsageError("verify needs a file or --random N")
    presets = list(COST_PRESETS)
    for k in range(args.count):
        seed = args.seed * 1_000_003 + k
        n = 1 + k % args.random
        family = FAMILIES[k % len(FAMILIES)]
        cost = cost_preset(presets[k % len(presets)])
        yield f"seed {seed}", gen_random(n, args.range, seed, family, cost)


def cmd_verify(args) -> int:
    if args.random is not None and args.random > BRUTE_FORCE_CAP:
        raise CapExceededError(f"--random sizes are capped at {BRUTE_FORCE_CAP}")
    checked = 0
    for label, inst in _verify_corpus(args):
        if inst.cost is None and inst.n:
            raise PreconditionError("instance has no cost function")
        bad = check_instance(inst)
        checked += 1
        if not bad:
            continue
        small = shrink(inst)
        print(f"FAIL ({label}):")
        for line in check_instance(small):
            print(f"  {line}")
        names = {b.split(":")[0] for b in check_instance(small)}
        if names & {"sub", "super"} and not names & {"full", "subset-dp"}:
            f = small.cost
            witness = spot_check_class(f) if f.declared_class != "arbitrary" else []
            note = f" (counterexample lengths {fmt_rat(witness[0][0])}, {fmt_rat(witness[0][1])})" if witness else ""
            print(f"  suspect: cost declared '{f.declared_class}' may not belong to that class{note}")
        print("minimal failing instance:")
        sys.stdout.write(small.dumps())
        return VERIFY_FAILED
    print(f"ok: {checked} instance(s), all algorithms agree [kernels: {kernels.IMPLEMENTATION}]")
    return OK


def cmd_plot(args) -> int:
    inst = load_instance(args.file)
    if args.solve:
        if inst.cost is None:
            raise PreconditionError("--solve needs a cost function")
        order = list(solve(inst).ordering)
    elif args.ordering is not None:
        order = _parse_ordering(args.ordering, inst.n)
    else:
        raise UsageError("plot needs --ordering or --solve")
    if inst.cost is None:
        # exposed parts do not depend on the cost; any exact cost will do
        inst = inst.with_cost(COST_PRESETS["linear"]())
    svg = render_svg(inst, order, Layout(width=args.width))
    if args.output in (None, "-"):
        sys.stdout.write(svg)
    else:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(svg)
    return OK


# parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="interval-ordering", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="optimal ordering of an instance")
    s.add_argument("file")
    s.add_argument("--algorithm", nargs="+", default=["auto"], metavar="NAME",
                   help=f"one of {', '.join(ALGORITHMS)}; 'alpha K' takes a component bound")
    s.add_argument("--json", action="store_true", help="machine-readable report")
    s.set_defaults(func=cmd_solve)

    e = sub.add_parser("enumerate", help="list candidate exposed parts")
    e.add_argument("file")
    e.add_argument("--mode", nargs="+", default=["full"], metavar="NAME",
                   help=f"one of {', '.join(MODES)}; 'alpha K' takes a component bound")
    e.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("classify", help="structural statistics")
    c.add_argument("file")
    c.set_defaults(func=cmd_classify)

    g = sub.add_parser("generate", help="write an instance as JSON to stdout")
    gs = g.add_subparsers(dest="family", required=True)
    g1 = gs.add_parser("nested", help="nested powers of two")
    g1.add_argument("--n", type=int, required=True)
    g1.add_argument("--cost", choices=[*COST_PRESETS, "none"], default="pow2")
    g2 = gs.add_parser("partition", help="instance encoding a PARTITION input")
    g2.add_argument("--items", type=int, nargs="+", required=True)
    g2.add_argument("--eps", type=_rat_arg, default=Fraction(1))
    g2.add_argument("--x0", type=_rat_arg, default=Fraction(4))
    g2.add_argument("--slopes", type=_rat_arg, nargs=3, default=[Fraction(1), Fraction(2), Fraction(3)])
    g3 = gs.add_parser("random", help="seeded random instance")
    g3.add_argument("--n", type=int, required=True)
    g3.add_argument("--seed", type=int, default=0)
    g3.add_argument("--range", type=int, default=16)
    g3.add_argument("--family", dest="shape", choices=FAMILIES, default="general")
    g3.add_argument("--cost", choices=[*COST_PRESETS, "none"], default="pow2")
    g.set_defaults(func=cmd_generate)

    v = sub.add_parser("verify", help="cross-check every solver")
    v.add_argument("file", nargs="?")
    v.add_argument("--random", type=int, metavar="N", help="random instances with up to N intervals")
    v.add_argument("--count", type=int, default=100)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--range", type=int, default=16)
    v.set_defaults(func=cmd_verify)

    pl = sub.add_parser("plot", help="draw an ordering as SVG")
    pl.add_argument("file")
    pl.add_argument("--ordering", help="comma-separated 1-based interval numbers")
    pl.add_argument("--solve", action="store_true", help="draw an optimal ordering")
    pl.add_argument("-o", "--output", help="output path (stdout if omitted)")
    pl.add_argument("--width", type=int, default=800)
    pl.set_defaults(func=cmd_plot)
    return p


def main(argv: list[str] | None = None) -> int:
    # exact totals such as 2^65536 print in full
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, InstanceFormatError, PreconditionError, UndefinedLengthError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return CAP_EXCEEDED
    except InfeasibleEnumerationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INFEASIBLE


if __name__ == "__main__":
    sys.exit(main())
