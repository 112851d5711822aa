"""Pure-Python hot loops.  ``_core.pyx`` implements the same functions.

Masks are ints over frame segments; costs are opaque numbers (ints,
Fractions or mpmath floats) compared with ``<`` and summed with ``+``.
``cost_of_mask`` maps an exposed-part mask to its cost.
"""

from bisect import bisect_left

IMPLEMENTATION = "python"


def brute_force(masks, cost_of_mask, zero):
    """Minimum over all orderings, depth first in lexicographic order.

    Strict improvement only, so ties resolve to the lexicographically
    smallest permutation.  Returns ``(total, ordering)``.
    """
    n = len(masks)
    if n == 0:
        return zero, []
    memo = {}
    best = None
    best_perm = None
    perm = [0] * n
    used = [False] * n
    costs = [zero] * (n + 1)
    covers = [0] * (n + 1)

    def rec(depth):
        nonlocal best, best_perm
        if depth == n:
            if best is None or costs[n] < best:
                best = costs[n]
                best_perm = perm[:]
            return
        cov = covers[depth]
        acc = costs[depth]
        for j in range(n):
            if used[j]:
                continue
            m = masks[j]
            e = m & ~cov
            c = memo.get(e)
            if c is None:
                c = memo[e] = cost_of_mask(e)
            used[j] = True
            perm[depth] = j
            covers[depth + 1] = cov | m
            costs[depth + 1] = acc + c
            rec(depth + 1)
            used[j] = False

    rec(0)
    return best, best_perm


def subset_dp(masks, cost_of_mask, zero):
    """``opt(S) = min_j opt(S - j) + f(|I_j minus C(S - j)|)`` over all subsets.

    Returns ``(total, ordering)``; the smallest ``j`` wins ties for the last
    position of each subset.
    """
    n = len(masks)
    size = 1 << n
    memo = {}
    cover = [0] * size
    opt = [zero] * size
    last = [-1] * size
    for S in range(1, size):
        low = S & -S
        cover[S] = cover[S ^ low] | masks[low.bit_length() - 1]
        best = None
        bj = -1
        rest = S
        while rest:
            bit = rest & -rest
            rest ^= bit
            j = bit.bit_length() - 1
            prev = S ^ bit
            e = masks[j] & ~cover[prev]
            c = memo.get(e)
            if c is None:
                c = memo[e] = cost_of_mask(e)
            w = opt[prev] + c
            if best is None or w < best:
                best = w
                bj = j
        opt[S] = best
        last[S] = bj
    order = []
    S = size - 1
    while S:
        j = last[S]
        order.append(j)
        S ^= 1 << j
    order.reverse()
    return opt[size - 1], order


def dp_fill(elo, ehi, ecnt, by_start, by_end, span_parts, part_gaps, part_gapcnt, part_cost, front, f0):
    """Fill OPT over covered intervals in table order.

    ``span_parts[(s, t)]`` lists part ids (ascending = tie-break order) whose
    first component starts at ``s`` and last ends at ``t``.  ``part_gaps[p]``
    holds the table ids of the holes inside part ``p`` (None when some hole is
    not a covered interval) and ``part_cost[p]`` its cost as an int, like
    ``f0``.  ``front(s, t)`` returns ``(ps, qs)``: the
    containment-minimal input intervals ``[p, q)`` around ``[s, t)``, both
    lists ascending.

    Returns ``(opt, choice)`` with ``choice[c] = (part, left_id, right_id)``
    (-1 for an absent flank); ``opt[c]`` is None when no part fits.
    """
    n_entries = len(elo)
    opt = [None] * n_entries
    choice = [None] * n_entries
    gapsum = {}
    fronts = {}
    for cid in range(n_entries):
        a = elo[cid]
        b = ehi[cid]
        cnt = ecnt[cid]
        best = None
        best_choice = None
        lefts = [(a, -1)]
        for s, lid in by_start.get(a, ()):
            if s < b:
                lefts.append((s, lid))
        rights = [(b, -1)]
        for t, rid in by_end.get(b, ()):
            if t > a:
                rights.append((t, rid))
        for s, lid in lefts:
            if lid >= 0:
                lopt = opt[lid]
                if lopt is None:
                    continue
                lcnt = ecnt[lid]
            else:
                lopt = 0
                lcnt = 0
            for t, rid in rights:
                if t <= s:
                    continue
                plist = span_parts.get((s, t))
                if plist is None:
                    continue
                if rid >= 0:
                    ropt = opt[rid]
                    if ropt is None:
                        continue
                    rcnt = ecnt[rid]
                else:
                    ropt = 0
                    rcnt = 0
                fr = fronts.get((s, t))
                if fr is None:
                    fr = fronts[(s, t)] = front(s, t)
                ps, qs = fr
                i = bisect_left(ps, a)
                if i == len(ps) or qs[i] > b:
                    continue
                base = lopt + ropt
                for p in plist:
                    gaps = part_gaps[p]
                    if gaps is None:
                        continue
                    if gaps:
                        gs = gapsum.get(p, False)
                        if gs is False:
                            gs = 0
                            for g in gaps:
                                og = opt[g]
                                if og is None:
                                    gs = None
                                    break
                                gs = gs + og
                            gapsum[p] = gs
                        if gs is None:
                            continue
                    else:
                        gs = 0
                    k = cnt - 1 - lcnt - rcnt - part_gapcnt[p]
                    if k < 0:
                        raise AssertionError("negative count of fully covered intervals")
                    w = part_cost[p] + base + gs + k * f0
                    if best is None or w < best or (w == best and p < best_choice[0]):
                        best = w
                        best_choice = (p, lid, rid)
        opt[cid] = best
        choice[cid] = best_choice
    return opt, choice
