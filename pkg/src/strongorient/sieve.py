"""Sink-event sieve sums and the disconnection experiment on clustered
regular graphs.

For a uniformly random orientation, vertex v is a sink with probability
2^(-deg v).  Sink events at two adjacent vertices are incompatible (the
shared edge must point both ways), while over an independent set they are
genuinely independent because the incident edge sets are disjoint.  The
k-th sieve sum is therefore

    S^(k) = sum over independent k-sets { v_1..v_k } of prod_i 2^(-deg v_i),

and on a log2(N)-regular graph with N vertices it is sandwiched between
(1 - k log2(N)/N)^k / k! and C(N,k)/N^k, both tending to 1/k!.  That trend
drives the no-sink probability toward 1/e, hence disconnection probability
at least about 1 - 1/e on the clustered construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .errors import DomainError
from .generators import random_regular
from .graph import Graph
from .orientation import MCEstimate, wilson_interval
from .rng import derive_seed

SIEVE_MAX_N = 128
SIEVE_SET_BUDGET = 5_000_000
EXPERIMENT_BLOCK = 100


@dataclass(frozen=True)
class SieveReport:
    """One sieve sum with its factorial target and, when available, the
    regular-case sandwich bounds."""

    k: int
    n: int
    s_k: Fraction
    target: Fraction
    upper: Fraction | None = None
    lower: Fraction | None = None

    def to_json_dict(self) -> dict:
        out = {
            "k": self.k,
            "n": self.n,
            "s_k_num": self.s_k.numerator,
            "s_k_den": self.s_k.denominator,
            "s_k": float(self.s_k),
            "target": float(self.target),
            "k_factorial_times_s_k": float(self.s_k) * math.factorial(self.k),
        }
        out["upper"] = None if self.upper is None else float(self.upper)
        out["lower"] = None if self.lower is None else float(self.lower)
        return out


def sink_probability(g: Graph, v: int) -> Fraction:
    """Probability vertex v is a sink under a uniform orientation."""
    if not 0 <= v < g.n:
        raise DomainError(f"vertex {v} out of range for n={g.n}")
    d = g.deg[v]
    if d < 1:
        raise DomainError(
            f"vertex {v} is isolated; strong connectivity is impossible"
        )
    return Fraction(1, 1 << d)


def _check_sieve_input(g: Graph, k: int):
    if g.n > SIEVE_MAX_N:
        raise DomainError(f"sieve sums need n <= {SIEVE_MAX_N}, got {g.n}")
    if not 1 <= k <= g.n:
        raise DomainError(f"k must lie in [1, n], got k={k}")
    if g.min_degree() < 1:
        raise DomainError("graph has an isolated vertex")
    if math.comb(g.n, k) > SIEVE_SET_BUDGET:
        raise DomainError(
            f"C({g.n},{k}) exceeds the subset enumeration budget"
        )


def _sieve_sum(g: Graph, k: int) -> Fraction:
    """Exact S^(k) by pruned enumeration of independent k-sets.

    Terms are powers of two; they are accumulated as one integer numerator
    over the common denominator 2^(k * max_deg).
    """
    n = g.n
    adj = g.adjacency_masks()
    deg = g.deg
    scale = k * g.max_degree()
    total = 0

    def rec(start: int, allowed: int, depth: int, deg_sum: int):
        nonlocal total
        if depth == k:
            total += 1 << (scale - deg_sum)
            return
        m = allowed >> start
        v = start
        while m:
            if m & 1:
                rec(v + 1, allowed & ~adj[v], depth + 1, deg_sum + deg[v])
            m >>= 1
            v += 1

    rec(0, (1 << n) - 1, 0, 0)
    return Fraction(total, 1 << scale)


def sieve_term(g: Graph, k: int) -> SieveReport:
    """Exact k-th sieve sum; no sandwich bounds attached."""
    _check_sieve_input(g, k)
    s = _sieve_sum(g, k)
    return SieveReport(k=k, n=g.n, s_k=s, target=Fraction(1, math.factorial(k)))


def sieve_sandwich(g: Graph, k: int, strict: bool = True) -> SieveReport:
    """Sieve sum with the regular-case bounds C(N,k)/N^k and
    (1 - k log2(N)/N)^k / k!.

    Strict mode demands a d-regular graph with d = log2(N) exactly (the
    clustered-construction shape); pass strict=False to attach the same
    formulas to other graphs as descriptive values.
    """
    _check_sieve_input(g, k)
    n = g.n
    t = n.bit_length() - 1
    if strict:
        degs = set(g.deg)
        if len(degs) != 1:
            raise DomainError("strict sandwich needs a regular graph")
        d = degs.pop()
        if (1 << t) != n or d != t:
            raise DomainError(
                f"strict sandwich needs degree log2(n) exactly; "
                f"n={n}, degree={d}"
            )
    s = _sieve_sum(g, k)
    kfac = math.factorial(k)
    upper = Fraction(math.comb(n, k), n ** k)
    if (1 << t) == n:
        lower = Fraction(n - k * t, n) ** k / kfac
    else:
        lower = Fraction((1.0 - k * math.log2(n) / n) ** k / kfac)
    return SieveReport(
        k=k, n=n, s_k=s, target=Fraction(1, kfac), upper=upper, lower=lower
    )


@dataclass(frozen=True)
class BlockCounts:
    """Per-block counters of one experiment block."""

    trials: int
    strong: int
    with_sink: int
    total_sinks: int

    def to_json_dict(self) -> dict:
        return {
            "trials": self.trials,
            "strong": self.strong,
            "with_sink": self.with_sink,
            "total_sinks": self.total_sinks,
        }


@dataclass(frozen=True)
class Example1Report:
    """Disconnection experiment on fresh random t-regular graphs."""

    t: int
    n: int
    trials: int
    seed: int
    block_size: int
    p_disconnected: MCEstimate
    p_has_sink: MCEstimate
    mean_sinks: float
    exact_expected_sinks: Fraction
    blocks: tuple[BlockCounts, ...]

    def to_json_dict(self) -> dict:
        return {
            "t": self.t,
            "n": self.n,
            "trials": self.trials,
            "seed": self.seed,
            "block_size": self.block_size,
            "p_disconnected": self.p_disconnected.to_json_dict(),
            "p_has_sink": self.p_has_sink.to_json_dict(),
            "mean_sinks": self.mean_sinks,
            "exact_expected_sinks": float(self.exact_expected_sinks),
            "blocks": [b.to_json_dict() for b in self.blocks],
        }


def example1_experiment(t: int, trials: int, seed: int) -> Example1Report:
    """Sample orientations of fresh random t-regular graphs on 2^t vertices.

    A new graph is drawn every EXPERIMENT_BLOCK trials so the estimate
    averages over the graph measure as well as the orientation measure.
    Each vertex has sink probability 2^(-t) = 1/N, so the expected sink
    count is exactly 1 regardless of t.
    """
    if not 3 <= t <= 7:
        raise DomainError("experiment needs t in [3, 7]")
    if trials < 1:
        raise DomainError("trials must be positive")
    n = 1 << t
    blocks: list[BlockCounts] = []
    strong_total = 0
    sink_total = 0
    sinks_sum = 0
    done = 0
    block_id = 0
    while done < trials:
        size = min(EXPERIMENT_BLOCK, trials - done)
        g = random_regular(n, t, derive_seed(seed, 2 * block_id))
        strong, with_sink, total_sinks = kernels.mc_joint_stats(
            g, size, derive_seed(seed, 2 * block_id + 1)
        )
        blocks.append(BlockCounts(size, strong, with_sink, total_sinks))
        strong_total += strong
        sink_total += with_sink
        sinks_sum += total_sinks
        done += size
        block_id += 1
    disc = trials - strong_total
    lo_d, hi_d = wilson_interval(disc, trials)
    lo_s, hi_s = wilson_interval(sink_total, trials)
    return Example1Report(
        t=t,
        n=n,
        trials=trials,
        seed=seed,
        block_size=EXPERIMENT_BLOCK,
        p_disconnected=MCEstimate(trials, disc, disc / trials, lo_d, hi_d, seed),
        p_has_sink=MCEstimate(
            trials, sink_total, sink_total / trials, lo_s, hi_s, seed
        ),
        mean_sinks=sinks_sum / trials,
        exact_expected_sinks=Fraction(n, 1 << t),
        blocks=tuple(blocks),
    )
