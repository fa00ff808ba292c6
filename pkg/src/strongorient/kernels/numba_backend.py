"""Numba-compiled kernels.

Counts are produced per fixed-size chunk inside ``prange`` and merged in
chunk order afterwards, so every result is independent of thread count.
All random bits come from the shared splitmix64 counter scheme (see
``strongorient.rng``); only integers are ever reduced.
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit, prange

U64 = np.uint64
GOLDEN = U64(0x9E3779B97F4A7C15)
MIX1 = U64(0xBF58476D1CE4E5B9)
MIX2 = U64(0x94D049BB133111EB)
S30 = U64(30)
S27 = U64(27)
S31 = U64(31)
S32 = U64(32)
S63 = U64(63)
ONE = U64(1)
ZERO = U64(0)


@njit(cache=True, inline="always")
def _mix64(z):
    z = z + GOLDEN
    z = (z ^ (z >> S30)) * MIX1
    z = (z ^ (z >> S27)) * MIX2
    return z ^ (z >> S31)


@njit(cache=True, inline="always")
def _rng_bit(seed, trial, edge):
    counter = (trial << S32) | edge
    word = _mix64(seed ^ (counter * GOLDEN))
    return word >> S63


@njit(cache=True, inline="always")
def _popcount(x):
    x = x - ((x >> ONE) & U64(0x5555555555555555))
    x = (x & U64(0x3333333333333333)) + ((x >> U64(2)) & U64(0x3333333333333333))
    x = (x + (x >> U64(4))) & U64(0x0F0F0F0F0F0F0F0F)
    return (x * U64(0x0101010101010101)) >> U64(56)


@njit(cache=True, parallel=True)
def _cheeger_scan(n, deg, adj, total_vol):
    total = 1 << (n - 1)
    nch = 256 if total >= 256 else 1
    best_cut = np.zeros(nch, np.int64)
    best_minvol = np.ones(nch, np.int64)
    best_mask = np.zeros(nch, np.uint64)
    full = (ONE << U64(n)) - ONE
    for c in prange(nch):
        lo = c * total // nch
        hi = (c + 1) * total // nch
        # rebuild the subset state at counter lo
        gray = lo ^ (lo >> 1)
        mask = (U64(gray) << ONE) | ONE
        vol = np.int64(0)
        cut = np.int64(0)
        for v in range(n):
            if (mask >> U64(v)) & ONE:
                vol += deg[v]
                cut += np.int64(_popcount(adj[v] & ~mask))
        bc = total_vol + 1  # worse than any real cut ratio
        bm = np.int64(1)
        bmask = ZERO
        for t in range(lo, hi):
            if mask != full:
                other = total_vol - vol
                minvol = vol if vol < other else other
                # exact rational comparison by cross-multiplication
                left = cut * bm
                right = bc * minvol
                if left < right or (left == right and mask < bmask):
                    bc = cut
                    bm = minvol
                    bmask = mask
            nxt = t + 1
            if nxt < hi:
                b = 0
                while ((nxt >> b) & 1) == 0:
                    b += 1
                w = b + 1
                wbit = ONE << U64(w)
                inside = np.int64(_popcount(adj[w] & mask))
                if mask & wbit:
                    # vertex leaves the subset
                    mask ^= wbit
                    vol -= deg[w]
                    cut += 2 * inside - deg[w]
                else:
                    mask ^= wbit
                    vol += deg[w]
                    cut += deg[w] - 2 * inside
        best_cut[c] = bc
        best_minvol[c] = bm
        best_mask[c] = bmask
    gc = best_cut[0]
    gm = best_minvol[0]
    gmask = best_mask[0]
    for c in range(1, nch):
        left = best_cut[c] * gm
        right = gc * best_minvol[c]
        if left < right or (left == right and best_mask[c] < gmask):
            gc = best_cut[c]
            gm = best_minvol[c]
            gmask = best_mask[c]
    return gc, gm, gmask


def cheeger_scan_arrays(n, deg, adj, total_vol):
    cut, minvol, mask = _cheeger_scan(n, deg, adj, np.int64(total_vol))
    return int(cut), int(minvol), int(mask)


@njit(cache=True)
def _connected_subsets(n, adj, k, out):
    cnt = 0
    total = 1 << n
    for raw in range(1, total):
        mask = U64(raw)
        if int(_popcount(mask)) != k:
            continue
        start = mask & (~mask + ONE)
        reach = start
        changed = True
        while changed:
            changed = False
            for v in range(n):
                if (reach >> U64(v)) & ONE:
                    add = adj[v] & mask & ~reach
                    if add != ZERO:
                        reach |= add
                        changed = True
        if reach == mask:
            out[cnt] = mask
            cnt += 1
    return cnt


def connected_subsets_arrays(n, adj, k):
    cap = math.comb(n, k)
    out = np.zeros(cap, dtype=np.uint64)
    cnt = _connected_subsets(n, adj, k, out)
    return out[:cnt].copy()


@njit(cache=True, parallel=True)
def _census(n, eu, ev, deg, m):
    total = 1 << m
    nch = 1024 if total >= 1024 else total
    res = np.zeros((nch, 3), np.int64)
    full = (ONE << U64(n)) - ONE
    for c in prange(nch):
        lo = c * total // nch
        hi = (c + 1) * total // nch
        outm = np.zeros(n, np.uint64)
        inm = np.zeros(n, np.uint64)
        n_strong = np.int64(0)
        n_sinkfree = np.int64(0)
        n_euler = np.int64(0)
        for o in range(lo, hi):
            for v in range(n):
                outm[v] = ZERO
                inm[v] = ZERO
            for j in range(m):
                u = eu[j]
                v = ev[j]
                if (o >> j) & 1:
                    outm[v] |= ONE << U64(u)
                    inm[u] |= ONE << U64(v)
                else:
                    outm[u] |= ONE << U64(v)
                    inm[v] |= ONE << U64(u)
            has_sink = False
            for v in range(n):
                if outm[v] == ZERO:
                    has_sink = True
                    break
            euler = True
            for v in range(n):
                if 2 * np.int64(_popcount(outm[v])) != deg[v]:
                    euler = False
                    break
            if euler:
                n_euler += 1
            if has_sink:
                continue
            n_sinkfree += 1
            # forward reachability from vertex 0
            reach = ONE
            frontier = ONE
            while frontier != ZERO:
                nxt = ZERO
                for v in range(n):
                    if (frontier >> U64(v)) & ONE:
                        nxt |= outm[v]
                frontier = nxt & ~reach
                reach |= frontier
            if reach != full:
                continue
            reach = ONE
            frontier = ONE
            while frontier != ZERO:
                nxt = ZERO
                for v in range(n):
                    if (frontier >> U64(v)) & ONE:
                        nxt |= inm[v]
                frontier = nxt & ~reach
                reach |= frontier
            if reach == full:
                n_strong += 1
        res[c, 0] = n_strong
        res[c, 1] = n_sinkfree
        res[c, 2] = n_euler
    s = np.int64(0)
    sf = np.int64(0)
    el = np.int64(0)
    for c in range(nch):
        s += res[c, 0]
        sf += res[c, 1]
        el += res[c, 2]
    return s, sf, el


def census_arrays(n, eu, ev, deg):
    m = len(eu)
    s, sf, el = _census(n, eu, ev, deg, m)
    return int(s), int(sf), int(el)


@njit(cache=True, inline="always")
def _bfs_count(n, heads, nxt, dst, queue, vis, stamp, start):
    vis[start] = stamp
    queue[0] = start
    qn = 1
    qi = 0
    while qi < qn:
        v = queue[qi]
        qi += 1
        j = heads[v]
        while j != -1:
            w = dst[j]
            if vis[w] != stamp:
                vis[w] = stamp
                queue[qn] = w
                qn += 1
            j = nxt[j]
    return qn


@njit(cache=True, parallel=True)
def _mc_strong(n, eu, ev, m, trials, seed, offset):
    nch = 64 if trials >= 64 else trials
    res = np.zeros(nch, np.int64)
    for c in prange(nch):
        lo = c * trials // nch
        hi = (c + 1) * trials // nch
        out_head = np.empty(n, np.int64)
        in_head = np.empty(n, np.int64)
        out_next = np.empty(m, np.int64)
        in_next = np.empty(m, np.int64)
        out_dst = np.empty(m, np.int64)
        in_dst = np.empty(m, np.int64)
        queue = np.empty(n, np.int64)
        vis = np.full(n, -1, np.int64)
        cnt = np.int64(0)
        stamp = np.int64(0)
        for t in range(lo, hi):
            gt = U64(offset + t)
            for v in range(n):
                out_head[v] = -1
                in_head[v] = -1
            for j in range(m):
                bit = _rng_bit(seed, gt, U64(j))
                if bit == ZERO:
                    tail = eu[j]
                    head = ev[j]
                else:
                    tail = ev[j]
                    head = eu[j]
                out_next[j] = out_head[tail]
                out_head[tail] = j
                out_dst[j] = head
                in_next[j] = in_head[head]
                in_head[head] = j
                in_dst[j] = tail
            ok = _bfs_count(n, out_head, out_next, out_dst, queue, vis, stamp, 0) == n
            stamp += 1
            if ok:
                ok = _bfs_count(n, in_head, in_next, in_dst, queue, vis, stamp, 0) == n
            stamp += 1
            if ok:
                cnt += 1
        res[c] = cnt
    total = np.int64(0)
    for c in range(nch):
        total += res[c]
    return total


def mc_strong_arrays(n, eu, ev, trials, seed, offset):
    if trials <= 0:
        return 0
    if n == 1:
        return trials
    return int(_mc_strong(n, eu, ev, len(eu), trials, U64(seed), U64(offset)))


@njit(cache=True, parallel=True)
def _mc_sink(n, eu, ev, m, trials, seed, offset):
    nch = 64 if trials >= 64 else trials
    res = np.zeros((nch, 2), np.int64)
    for c in prange(nch):
        lo = c * trials // nch
        hi = (c + 1) * trials // nch
        outdeg = np.empty(n, np.int64)
        s = np.int64(0)
        sq = np.int64(0)
        for t in range(lo, hi):
            gt = U64(offset + t)
            for v in range(n):
                outdeg[v] = 0
            for j in range(m):
                bit = _rng_bit(seed, gt, U64(j))
                if bit == ZERO:
                    outdeg[eu[j]] += 1
                else:
                    outdeg[ev[j]] += 1
            sinks = np.int64(0)
            for v in range(n):
                if outdeg[v] == 0:
                    sinks += 1
            s += sinks
            sq += sinks * sinks
        res[c, 0] = s
        res[c, 1] = sq
    s = np.int64(0)
    sq = np.int64(0)
    for c in range(nch):
        s += res[c, 0]
        sq += res[c, 1]
    return s, sq


def mc_sink_arrays(n, eu, ev, trials, seed, offset):
    if trials <= 0:
        return 0, 0
    s, sq = _mc_sink(n, eu, ev, len(eu), trials, U64(seed), U64(offset))
    return int(s), int(sq)


@njit(cache=True, parallel=True)
def _mc_joint(n, eu, ev, m, trials, seed, offset):
    nch = 64 if trials >= 64 else trials
    res = np.zeros((nch, 3), np.int64)
    for c in prange(nch):
        lo = c * trials // nch
        hi = (c + 1) * trials // nch
        out_head = np.empty(n, np.int64)
        in_head = np.empty(n, np.int64)
        out_next = np.empty(m, np.int64)
        in_next = np.empty(m, np.int64)
        out_dst = np.empty(m, np.int64)
        in_dst = np.empty(m, np.int64)
        outdeg = np.empty(n, np.int64)
        queue = np.empty(n, np.int64)
        vis = np.full(n, -1, np.int64)
        n_strong = np.int64(0)
        n_withsink = np.int64(0)
        n_sinks = np.int64(0)
        stamp = np.int64(0)
        for t in range(lo, hi):
            gt = U64(offset + t)
            for v in range(n):
                out_head[v] = -1
                in_head[v] = -1
                outdeg[v] = 0
            for j in range(m):
                bit = _rng_bit(seed, gt, U64(j))
                if bit == ZERO:
                    tail = eu[j]
                    head = ev[j]
                else:
                    tail = ev[j]
                    head = eu[j]
                outdeg[tail] += 1
                out_next[j] = out_head[tail]
                out_head[tail] = j
                out_dst[j] = head
                in_next[j] = in_head[head]
                in_head[head] = j
                in_dst[j] = tail
            sinks = np.int64(0)
            for v in range(n):
                if outdeg[v] == 0:
                    sinks += 1
            n_sinks += sinks
            if sinks > 0:
                n_withsink += 1
                stamp += 2
                continue
            ok = _bfs_count(n, out_head, out_next, out_dst, queue, vis, stamp, 0) == n
            stamp += 1
            if ok:
                ok = _bfs_count(n, in_head, in_next, in_dst, queue, vis, stamp, 0) == n
            stamp += 1
            if ok:
                n_strong += 1
        res[c, 0] = n_strong
        res[c, 1] = n_withsink
        res[c, 2] = n_sinks
    a = np.int64(0)
    b = np.int64(0)
    d = np.int64(0)
    for c in range(nch):
        a += res[c, 0]
        b += res[c, 1]
        d += res[c, 2]
    return a, b, d


def mc_joint_arrays(n, eu, ev, trials, seed, offset):
    if trials <= 0:
        return 0, 0, 0
    if n == 1:
        # lone vertex: strongly connected by convention, and always a sink
        return trials, trials, trials
    a, b, d = _mc_joint(n, eu, ev, len(eu), trials, U64(seed), U64(offset))
    return int(a), int(b), int(d)
