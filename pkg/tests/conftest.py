import itertools

import pytest

from interval_ordering import CostFunction, Instance, Interval, cost_of_ordering

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def record_criterion():
    def record(number: int, title: str, ok: bool, detail: str = ""):
        line = f"criterion {number:>2} [{'PASS' if ok else 'FAIL'}] {title}" + (f" ({detail})" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return record


def all_orderings(n):
    return itertools.permutations(range(n))


def brute_min(inst: Instance):
    """Minimum total over every ordering, by direct evaluation."""
    return min(cost_of_ordering(inst, p)[0] for p in all_orderings(inst.n))


def oracle_parts(inst: Instance, respect_subintervals=False):
    """Exposed parts over all orderings, as DisjointUnions."""
    ivs = inst.intervals
    inst = inst.with_cost(CostFunction.linear())
    found = set()
    for perm in all_orderings(inst.n):
        if respect_subintervals:
            pos = {j: k for k, j in enumerate(perm)}
            if any(
                pos[i] > pos[j]
                for i in range(inst.n)
                for j in range(inst.n)
                if ivs[j].contains(ivs[i]) and ivs[i] != ivs[j]
            ):
                continue
        for e in cost_of_ordering(inst, perm)[1]:
            if e:
                found.add(e)
    return found


def I(*pairs, cost=None, W=None):
    return Instance(tuple(Interval(a, b) for a, b in pairs), cost, W)
