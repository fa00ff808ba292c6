"""Pure-numpy fallback kernels.

Same contracts and same counter-based random bits as the numba backend, so
all integer results are bit-identical across backends.  Work is vectorized
over fixed-size blocks; blocks are merged in ascending order, which keeps
results independent of block size choices and of any threading.
"""

from __future__ import annotations

import math

import numpy as np

U64 = np.uint64
GOLDEN = U64(0x9E3779B97F4A7C15)
MIX1 = U64(0xBF58476D1CE4E5B9)
MIX2 = U64(0x94D049BB133111EB)

_CHEEGER_BLOCK = 1 << 18
_SUBSET_BLOCK = 1 << 18
_CENSUS_BLOCK = 1 << 14
_MC_BLOCK = 1 << 13


def _mix64_arr(z: np.ndarray) -> np.ndarray:
    z = (z + GOLDEN).astype(U64)
    z = (z ^ (z >> U64(30))) * MIX1
    z = (z ^ (z >> U64(27))) * MIX2
    return z ^ (z >> U64(31))


def _rng_bits(seed: int, trials: np.ndarray, edge: int) -> np.ndarray:
    """Direction bits for one edge across an array of trial indices."""
    counter = (trials << U64(32)) | U64(edge)
    word = _mix64_arr(U64(seed) ^ (counter * GOLDEN))
    return (word >> U64(63)).astype(np.int64)


def _rng_bits_edges(seed: int, trial: int, m: int) -> np.ndarray:
    """Direction bits for all edges of one trial."""
    counter = (U64(trial) << U64(32)) | np.arange(m, dtype=U64)
    word = _mix64_arr(U64(seed) ^ (counter * GOLDEN))
    return (word >> U64(63)).astype(np.int64)


def _popcount_arr(x: np.ndarray) -> np.ndarray:
    x = x - ((x >> U64(1)) & U64(0x5555555555555555))
    x = (x & U64(0x3333333333333333)) + ((x >> U64(2)) & U64(0x3333333333333333))
    x = (x + (x >> U64(4))) & U64(0x0F0F0F0F0F0F0F0F)
    return ((x * U64(0x0101010101010101)) >> U64(56)).astype(np.int64)


def cheeger_scan_arrays(n, deg, adj, total_vol):
    # Scan all subsets containing vertex 0.  Distinct cut ratios with these
    # integer bounds (cut <= 276, volume <= 552) differ by more than 1/552^2,
    # far above float64 resolution, so the float argmin per block is exact;
    # blocks are then merged with exact integer cross-multiplication.
    deg = np.asarray(deg, dtype=np.int64)
    edges = [(u, v) for u in range(n) for v in range(n)
             if u < v and (int(adj[u]) >> v) & 1]
    total = 1 << (n - 1)
    full = (1 << n) - 1
    best = None  # (cut, minvol, mask)
    with np.errstate(over="ignore"):
        for lo in range(0, total, _CHEEGER_BLOCK):
            hi = min(lo + _CHEEGER_BLOCK, total)
            r = np.arange(lo, hi, dtype=np.int64)
            masks = (r << 1) | 1
            vol = np.zeros(hi - lo, dtype=np.int64)
            for v in range(n):
                vol += deg[v] * ((masks >> v) & 1)
            cut = np.zeros(hi - lo, dtype=np.int64)
            for u, v in edges:
                cut += ((masks >> u) & 1) ^ ((masks >> v) & 1)
            minvol = np.minimum(vol, total_vol - vol)
            ok = masks != full
            if not ok.any():
                continue
            ratio = np.where(ok, cut / np.maximum(minvol, 1), np.inf)
            rmin = ratio.min()
            tie = ratio == rmin
            idx_mask = int(masks[tie].min())
            i = int(np.nonzero(masks == idx_mask)[0][0])
            cand = (int(cut[i]), int(minvol[i]), idx_mask)
            if best is None:
                best = cand
            else:
                left = cand[0] * best[1]
                right = best[0] * cand[1]
                if left < right or (left == right and cand[2] < best[2]):
                    best = cand
    return best


def connected_subsets_arrays(n, adj, k):
    adj = np.asarray(adj, dtype=U64)
    total = 1 << n
    found: list[np.ndarray] = []
    with np.errstate(over="ignore"):
        for lo in range(0, total, _SUBSET_BLOCK):
            hi = min(lo + _SUBSET_BLOCK, total)
            masks = np.arange(lo, hi, dtype=U64)
            pc = _popcount_arr(masks)
            cand = masks[pc == k]
            if cand.size == 0:
                continue
            # flood fill from the lowest set bit of each candidate
            reach = cand & (~cand + U64(1))
            while True:
                grown = reach.copy()
                for v in range(n):
                    sel = ((reach >> U64(v)) & U64(1)).astype(bool)
                    if sel.any():
                        grown[sel] |= adj[v] & cand[sel]
                if np.array_equal(grown, reach):
                    break
                reach = grown
            found.append(cand[reach == cand])
    if not found:
        return np.zeros(0, dtype=U64)
    return np.concatenate(found)


def _batch_reach(n, masks_by_vertex, width):
    """Bitmask reachability from vertex 0 for a batch of digraphs."""
    reach = np.full(width, 1, dtype=U64)
    frontier = reach.copy()
    while True:
        nxt = np.zeros(width, dtype=U64)
        for v in range(n):
            sel = ((frontier >> U64(v)) & U64(1)).astype(bool)
            if sel.any():
                nxt[sel] |= masks_by_vertex[v][sel]
        frontier = nxt & ~reach
        if not frontier.any():
            break
        reach |= frontier
    return reach


def census_arrays(n, eu, ev, deg):
    m = len(eu)
    deg = np.asarray(deg, dtype=np.int64)
    total = 1 << m
    full = U64((1 << n) - 1)
    n_strong = 0
    n_sinkfree = 0
    n_euler = 0
    with np.errstate(over="ignore"):
        for lo in range(0, total, _CENSUS_BLOCK):
            hi = min(lo + _CENSUS_BLOCK, total)
            o = np.arange(lo, hi, dtype=np.int64)
            width = hi - lo
            outm = np.zeros((n, width), dtype=U64)
            inm = np.zeros((n, width), dtype=U64)
            for j in range(m):
                bit = (o >> j) & 1
                u, v = int(eu[j]), int(ev[j])
                fwd = bit == 0
                outm[u][fwd] |= U64(1 << v)
                inm[v][fwd] |= U64(1 << u)
                outm[v][~fwd] |= U64(1 << u)
                inm[u][~fwd] |= U64(1 << v)
            sinkfree = np.ones(width, dtype=bool)
            euler = np.ones(width, dtype=bool)
            for v in range(n):
                outdeg = _popcount_arr(outm[v])
                sinkfree &= outdeg > 0
                euler &= 2 * outdeg == deg[v]
            fwd_ok = _batch_reach(n, outm, width) == full
            bwd_ok = _batch_reach(n, inm, width) == full
            strong = sinkfree & fwd_ok & bwd_ok
            n_strong += int(strong.sum())
            n_sinkfree += int(sinkfree.sum())
            n_euler += int(euler.sum())
    return n_strong, n_sinkfree, n_euler


def _scatter_bfs(n, src, dst):
    """Boolean-array BFS from vertex 0 along arcs src -> dst."""
    reached = np.zeros(n, dtype=bool)
    reached[0] = True
    cnt = 1
    while True:
        reachable = dst[reached[src]]
        reached[reachable] = True
        new_cnt = int(reached.sum())
        if new_cnt == cnt:
            return new_cnt
        cnt = new_cnt


def _mc_strong_small(n, eu, ev, trials, seed, offset):
    m = len(eu)
    full = U64((1 << n) - 1)
    count = 0
    with np.errstate(over="ignore"):
        for lo in range(0, trials, _MC_BLOCK):
            hi = min(lo + _MC_BLOCK, trials)
            t = np.arange(offset + lo, offset + hi, dtype=U64)
            width = hi - lo
            outm = np.zeros((n, width), dtype=U64)
            inm = np.zeros((n, width), dtype=U64)
            for j in range(m):
                bit = _rng_bits(seed, t, j)
                u, v = int(eu[j]), int(ev[j])
                fwd = bit == 0
                outm[u][fwd] |= U64(1 << v)
                inm[v][fwd] |= U64(1 << u)
                outm[v][~fwd] |= U64(1 << u)
                inm[u][~fwd] |= U64(1 << v)
            ok = (_batch_reach(n, outm, width) == full) & (
                _batch_reach(n, inm, width) == full
            )
            count += int(ok.sum())
    return count


def _mc_strong_large(n, eu, ev, trials, seed, offset):
    count = 0
    for t in range(trials):
        bits = _rng_bits_edges(seed, offset + t, len(eu))
        src = np.where(bits == 0, eu, ev)
        dst = np.where(bits == 0, ev, eu)
        if _scatter_bfs(n, src, dst) == n and _scatter_bfs(n, dst, src) == n:
            count += 1
    return count


def mc_strong_arrays(n, eu, ev, trials, seed, offset):
    if trials <= 0:
        return 0
    if n == 1:
        return trials
    if n <= 64:
        return _mc_strong_small(n, eu, ev, trials, seed, offset)
    return _mc_strong_large(n, eu, ev, trials, seed, offset)


def _sink_counts_block(n, eu, ev, seed, t):
    """Sink counts for a block of trial indices t."""
    width = t.size
    outdeg = np.zeros((n, width), dtype=np.int64)
    for j in range(len(eu)):
        bit = _rng_bits(seed, t, j)
        outdeg[int(eu[j])] += 1 - bit
        outdeg[int(ev[j])] += bit
    return (outdeg == 0).sum(axis=0)


def mc_sink_arrays(n, eu, ev, trials, seed, offset):
    if trials <= 0:
        return 0, 0
    s = 0
    sq = 0
    with np.errstate(over="ignore"):
        for lo in range(0, trials, _MC_BLOCK):
            hi = min(lo + _MC_BLOCK, trials)
            t = np.arange(offset + lo, offset + hi, dtype=U64)
            sinks = _sink_counts_block(n, eu, ev, seed, t)
            s += int(sinks.sum())
            sq += int((sinks * sinks).sum())
    return s, sq


def mc_joint_arrays(n, eu, ev, trials, seed, offset):
    if trials <= 0:
        return 0, 0, 0
    if n == 1:
        # lone vertex: strongly connected by convention, and always a sink
        return trials, trials, trials
    n_strong = 0
    n_withsink = 0
    n_sinks = 0
    with np.errstate(over="ignore"):
        for lo in range(0, trials, _MC_BLOCK):
            hi = min(lo + _MC_BLOCK, trials)
            t = np.arange(offset + lo, offset + hi, dtype=U64)
            sinks = _sink_counts_block(n, eu, ev, seed, t)
            n_sinks += int(sinks.sum())
            n_withsink += int((sinks > 0).sum())
            # a sink already rules out strong connectivity
            for ti in np.nonzero(sinks == 0)[0]:
                trial = offset + lo + int(ti)
                bits = _rng_bits_edges(seed, trial, len(eu))
                src = np.where(bits == 0, eu, ev)
                dst = np.where(bits == 0, ev, eu)
                if _scatter_bfs(n, src, dst) == n and _scatter_bfs(n, dst, src) == n:
                    n_strong += 1
    return n_strong, n_withsink, n_sinks
