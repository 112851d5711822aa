# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the loops in ``_core_py``.

Same signatures and tie-breaking.  ``brute_force`` and ``subset_dp`` keep
masks in 64-bit words (callers route wider frames to the Python module);
costs stay Python objects so exact and float backends both work.
"""

from bisect import bisect_left

from libc.stdint cimport uint64_t
from libc.stdlib cimport free, malloc

IMPLEMENTATION = "compiled"


cdef class _Brute:
    cdef int n
    cdef uint64_t *masks
    cdef uint64_t *covers
    cdef int *perm
    cdef char *used
    cdef list costs
    cdef dict memo
    cdef object cost_of_mask
    cdef object best
    cdef list best_perm

    def __cinit__(self, int n):
        self.n = n
        self.masks = <uint64_t *>malloc((n + 1) * sizeof(uint64_t))
        self.covers = <uint64_t *>malloc((n + 1) * sizeof(uint64_t))
        self.perm = <int *>malloc((n + 1) * sizeof(int))
        self.used = <char *>malloc((n + 1) * sizeof(char))
        if not (self.masks and self.covers and self.perm and self.used):
            raise MemoryError()

    def __dealloc__(self):
        free(self.masks)
        free(self.covers)
        free(self.perm)
        free(self.used)

    cdef void rec(self, int depth) except *:
        cdef int j, n = self.n
        cdef uint64_t cov = self.covers[depth]
        cdef uint64_t m, e
        cdef object acc = self.costs[depth]
        cdef object c
        if depth == n:
            if self.best is None or acc < self.best:
                self.best = acc
                self.best_perm = [self.perm[j] for j in range(n)]
            return
        for j in range(n):
            if self.used[j]:
                continue
            m = self.masks[j]
            e = m & ~cov
            c = self.memo.get(e)
            if c is None:
                c = self.cost_of_mask(e)
                self.memo[e] = c
            self.used[j] = 1
            self.perm[depth] = j
            self.covers[depth + 1] = cov | m
            self.costs[depth + 1] = acc + c
            self.rec(depth + 1)
            self.used[j] = 0


def brute_force(masks, cost_of_mask, zero):
    cdef int n = len(masks)
    cdef int j
    if n == 0:
        return zero, []
    cdef _Brute b = _Brute(n)
    for j in range(n):
        b.masks[j] = masks[j]
        b.used[j] = 0
    b.covers[0] = 0
    b.costs = [zero] * (n + 1)
    b.memo = {}
    b.cost_of_mask = cost_of_mask
    b.best = None
    b.rec(0)
    return b.best, b.best_perm


def subset_dp(masks, cost_of_mask, zero):
    cdef int n = len(masks)
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n
    cdef Py_ssize_t S, prev, rest, bit, low
    cdef int j, bj
    cdef uint64_t e
    cdef uint64_t mk[64]
    cdef uint64_t *cover
    cdef int *last
    cdef dict memo = {}
    cdef list opt
    cdef object best, c, w
    if n > 30:
        raise ValueError("subset_dp holds at most 30 intervals")
    opt = [zero] * size
    cover = <uint64_t *>malloc(size * sizeof(uint64_t))
    last = <int *>malloc(size * sizeof(int))
    if not cover or not last:
        free(cover)
        free(last)
        raise MemoryError()
    try:
        for j in range(n):
            mk[j] = masks[j]
        cover[0] = 0
        last[0] = -1
        for S in range(1, size):
            low = S & -S
            cover[S] = cover[S ^ low] | mk[_bitpos(low)]
            best = None
            bj = -1
            rest = S
            while rest:
                bit = rest & -rest
                rest ^= bit
                j = _bitpos(bit)
                prev = S ^ bit
                e = mk[j] & ~cover[prev]
                c = memo.get(e)
                if c is None:
                    c = cost_of_mask(e)
                    memo[e] = c
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
            S ^= (<Py_ssize_t>1) << j
        order.reverse()
        return opt[size - 1], order
    finally:
        free(cover)
        free(last)


cdef inline int _bitpos(Py_ssize_t bit):
    cdef int k = 0
    while bit > 1:
        bit >>= 1
        k += 1
    return k


def _dp_fill_objects(elo, ehi, ecnt, dict by_start, dict by_end, dict span_parts, list part_gaps, part_gapcnt,
                     part_cost, front, f0):
    cdef Py_ssize_t n_entries = len(elo)
    cdef Py_ssize_t cid, i
    cdef int a, b, s, t, lid, rid, p, cnt, lcnt, rcnt, k
    cdef list opt = [None] * n_entries
    cdef list choice = [None] * n_entries
    cdef dict gapsum = {}
    cdef dict fronts = {}
    cdef list lefts, rights, plist, ps, qs, gaps
    cdef object best, best_choice, lopt, ropt, gs, og, w, base, fr
    cdef int best_p
    for cid in range(n_entries):
        a = elo[cid]
        b = ehi[cid]
        cnt = ecnt[cid]
        best = None
        best_choice = None
        best_p = -1
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
                    fr = front(s, t)
                    fronts[(s, t)] = fr
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
                    if best is None or w < best or (w == best and p < best_p):
                        best = w
                        best_p = p
                        best_choice = (p, lid, rid)
        opt[cid] = best
        choice[cid] = best_choice
    return opt, choice

# Dense (s, t) index limit for the typed path: points^2 int32 cells.
DENSE_LIMIT = 1 << 24
# Every DP value is a sum of at most n + 1 part costs and n copies of f0;
# this keeps all of them inside int64.
INT64_SAFE = (1 << 62)


def dp_fill(elo, ehi, ecnt, dict by_start, dict by_end, dict span_parts, list part_gaps, part_gapcnt,
            part_cost, front, f0):
    """Typed loop when the costs fit in int64 and the frame is small enough
    for a dense span index; otherwise the object loop."""
    n_entries = len(elo)
    if n_entries == 0:
        return [], []
    m = max(ehi) + 1
    top = max([abs(c) for c in part_cost] + [abs(f0), 1])
    bound = top * (2 * max(ecnt) + 2)
    if m * m > DENSE_LIMIT or bound >= INT64_SAFE:
        return _dp_fill_objects(elo, ehi, ecnt, by_start, by_end, span_parts, part_gaps, part_gapcnt,
                                part_cost, front, f0)
    return _dp_fill_typed(elo, ehi, ecnt, by_start, by_end, span_parts, part_gaps, part_gapcnt,
                          part_cost, front, f0, m)


cdef _csr(list rows, Py_ssize_t nrows, int **off_out, int **a_out, int **b_out):
    """rows[i] is a list of (x, y); fills off/a/b as flat int arrays."""
    cdef Py_ssize_t i, k = 0, total = 0
    for i in range(nrows):
        total += len(rows[i])
    cdef int *off = <int *>malloc((nrows + 1) * sizeof(int))
    cdef int *a = <int *>malloc((total + 1) * sizeof(int))
    cdef int *b = <int *>malloc((total + 1) * sizeof(int))
    if not off or not a or not b:
        free(off)
        free(a)
        free(b)
        raise MemoryError()
    for i in range(nrows):
        off[i] = k
        for x, y in rows[i]:
            a[k] = x
            b[k] = y
            k += 1
    off[nrows] = k
    off_out[0] = off
    a_out[0] = a
    b_out[0] = b


cdef class _Arrays:
    """Owns the malloc'd buffers of one typed fill."""
    cdef list ptrs

    def __cinit__(self):
        self.ptrs = []

    cdef void *take(self, void *p) except NULL:
        if p == NULL:
            raise MemoryError()
        self.ptrs.append(<size_t>p)
        return p

    def __dealloc__(self):
        for p in self.ptrs:
            free(<void *><size_t>p)


def _dp_fill_typed(elo, ehi, ecnt, dict by_start, dict by_end, dict span_parts, list part_gaps, part_gapcnt,
                   part_cost, front, f0, int m):
    cdef Py_ssize_t E = len(elo)
    cdef Py_ssize_t P = len(part_cost)
    cdef Py_ssize_t K = len(span_parts)
    cdef _Arrays mem = _Arrays()
    cdef int *lo = <int *>mem.take(malloc(E * sizeof(int)))
    cdef int *hi = <int *>mem.take(malloc(E * sizeof(int)))
    cdef int *cnt = <int *>mem.take(malloc(E * sizeof(int)))
    cdef long long *opt = <long long *>mem.take(malloc(E * sizeof(long long)))
    cdef char *have = <char *>mem.take(malloc(E * sizeof(char)))
    cdef int *cp = <int *>mem.take(malloc(E * sizeof(int)))
    cdef int *cl = <int *>mem.take(malloc(E * sizeof(int)))
    cdef int *cr = <int *>mem.take(malloc(E * sizeof(int)))
    cdef int *span_id = <int *>mem.take(malloc(m * m * sizeof(int)))
    cdef long long *cost = <long long *>mem.take(malloc((P + 1) * sizeof(long long)))
    cdef int *gapcnt = <int *>mem.take(malloc((P + 1) * sizeof(int)))
    cdef char *gapstate = <char *>mem.take(malloc((P + 1) * sizeof(char)))  # 0 unknown, 1 ok, 2 dead
    cdef long long *gapsum = <long long *>mem.take(malloc((P + 1) * sizeof(long long)))
    cdef int *soff
    cdef int *sa
    cdef int *sb
    cdef int *eoff
    cdef int *ea
    cdef int *eb
    cdef int *poff
    cdef int *pa
    cdef int *pb
    cdef int *foff
    cdef int *fp
    cdef int *fq
    cdef int *goff
    cdef int *ga
    cdef int *gb
    cdef Py_ssize_t i, j, k, cid, li, ri, pi, g
    cdef int a, b, s, t, lid, rid, p, lcnt, rcnt, kk, sid, flo, fhi, mid, best_p, bl, br
    cdef long long lopt, ropt, gs, w, best, ff0 = f0
    cdef bint found

    for i in range(E):
        lo[i] = elo[i]
        hi[i] = ehi[i]
        cnt[i] = ecnt[i]
        have[i] = 0
    for i in range(m * m):
        span_id[i] = -1
    for i in range(P):
        cost[i] = part_cost[i]
        gapcnt[i] = part_gapcnt[i]
        gapstate[i] = 2 if part_gaps[i] is None else (1 if not part_gaps[i] else 0)
        gapsum[i] = 0

    _csr([by_start.get(x, []) for x in range(m)], m, &soff, &sa, &sb)
    mem.take(soff); mem.take(sa); mem.take(sb)
    _csr([by_end.get(x, []) for x in range(m)], m, &eoff, &ea, &eb)
    mem.take(eoff); mem.take(ea); mem.take(eb)
    keys = list(span_parts)
    fronts = []
    for k, key in enumerate(keys):
        span_id[key[0] * m + key[1]] = k
        ps, qs = front(key[0], key[1])
        fronts.append(list(zip(ps, qs)))
    _csr([[(x, 0) for x in span_parts[key]] for key in keys], K, &poff, &pa, &pb)
    mem.take(poff); mem.take(pa); mem.take(pb)
    _csr(fronts, K, &foff, &fp, &fq)
    mem.take(foff); mem.take(fp); mem.take(fq)
    _csr([[(x, 0) for x in (gl or [])] for gl in part_gaps], P, &goff, &ga, &gb)
    mem.take(goff); mem.take(ga); mem.take(gb)

    for cid in range(E):
        a = lo[cid]
        b = hi[cid]
        found = False
        best = 0
        best_p = -1
        bl = -1
        br = -1
        # li == -1 / ri == -1 stand for the empty flank
        for li in range(soff[a] - 1, soff[a + 1]):
            if li < soff[a]:
                s = a
                lid = -1
                lopt = 0
                lcnt = 0
            else:
                s = sa[li]
                lid = sb[li]
                if s >= b or not have[lid]:
                    continue
                lopt = opt[lid]
                lcnt = cnt[lid]
            for ri in range(eoff[b] - 1, eoff[b + 1]):
                if ri < eoff[b]:
                    t = b
                    rid = -1
                    ropt = 0
                    rcnt = 0
                else:
                    t = ea[ri]
                    rid = eb[ri]
                    if t <= a or not have[rid]:
                        continue
                    ropt = opt[rid]
                    rcnt = cnt[rid]
                if t <= s:
                    continue
                sid = span_id[s * m + t]
                if sid < 0:
                    continue
                # first front interval starting at or after a must end by b
                flo = foff[sid]
                fhi = foff[sid + 1]
                while flo < fhi:
                    mid = (flo + fhi) >> 1
                    if fp[mid] < a:
                        flo = mid + 1
                    else:
                        fhi = mid
                if flo == foff[sid + 1] or fq[flo] > b:
                    continue
                for pi in range(poff[sid], poff[sid + 1]):
                    p = pa[pi]
                    if gapstate[p] == 2:
                        continue
                    if gapstate[p] == 0:
                        gs = 0
                        gapstate[p] = 1
                        for g in range(goff[p], goff[p + 1]):
                            if not have[ga[g]]:
                                gapstate[p] = 2
                                break
                            gs += opt[ga[g]]
                        gapsum[p] = gs
                        if gapstate[p] == 2:
                            continue
                    kk = cnt[cid] - 1 - lcnt - rcnt - gapcnt[p]
                    if kk < 0:
                        raise AssertionError("negative count of fully covered intervals")
                    w = cost[p] + lopt + ropt + gapsum[p] + kk * ff0
                    if not found or w < best or (w == best and p < best_p):
                        found = True
                        best = w
                        best_p = p
                        bl = lid
                        br = rid
        if found:
            have[cid] = 1
            opt[cid] = best
            cp[cid] = best_p
            cl[cid] = bl
            cr[cid] = br
    out_opt = [opt[i] if have[i] else None for i in range(E)]
    out_choice = [(cp[i], cl[i], cr[i]) if have[i] else None for i in range(E)]
    return out_opt, out_choice

