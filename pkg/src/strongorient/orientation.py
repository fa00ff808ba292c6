"""Orientations of a graph: sampling, census, and cut-event probabilities.

An orientation assigns each undirected edge a direction.  Bit j = 0 orients
canonical edge j = (u, v) with u < v as the arc u -> v; bit 1 reverses it.
Random orientations flip one fair coin per edge, independently.

Two independent routes to strong connectivity are kept side by side: the
``Orientation`` object is checked with an iterative Tarjan SCC pass, while
the bulk census / Monte Carlo kernels use forward plus backward BFS
reachability.  Tests pin the two against each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import kernels
from .errors import DomainError, SizeLimitError
from .graph import Graph, as_subset, boundary_edge_list
from .rng import MASK64, OrientationStream

CENSUS_MAX_M = 24
CUT_EVENT_MAX_EDGES = 24
WILSON_Z = 1.96


@dataclass(frozen=True)
class Orientation:
    """One orientation of a graph, stored as an edge-direction bitmask."""

    graph: Graph
    bits: int

    def __post_init__(self):
        if not 0 <= self.bits < (1 << self.graph.m):
            raise DomainError("orientation bits out of range for edge count")

    def arc(self, j: int) -> tuple[int, int]:
        """The arc (tail, head) that edge j carries."""
        u, v = self.graph.edges[j]
        return (u, v) if ((self.bits >> j) & 1) == 0 else (v, u)

    def arcs(self) -> list[tuple[int, int]]:
        return [self.arc(j) for j in range(self.graph.m)]

    def out_degrees(self) -> list[int]:
        out = [0] * self.graph.n
        for tail, _ in self.arcs():
            out[tail] += 1
        return out

    def out_neighbors(self, v: int) -> list[int]:
        return [h for t, h in self.arcs() if t == v]

    def in_neighbors(self, v: int) -> list[int]:
        return [t for t, h in self.arcs() if h == v]


@dataclass(frozen=True)
class DegreeExtremes:
    """Out-degree extremes of one orientation, with sink/source witnesses."""

    min_out: int
    max_out: int
    sinks: tuple[int, ...]
    sources: tuple[int, ...]

    @property
    def has_sink(self) -> bool:
        return bool(self.sinks)

    @property
    def has_source(self) -> bool:
        return bool(self.sources)


@dataclass(frozen=True)
class OrientationCensus:
    """Exact orientation counts over all 2^m orientations of one graph."""

    n: int
    m: int
    total: int
    strong: int
    sink_free: int
    eulerian: int

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "total": self.total,
            "strong": self.strong,
            "sink_free": self.sink_free,
            "eulerian": self.eulerian,
        }


@dataclass(frozen=True)
class MCEstimate:
    """Monte Carlo proportion estimate with a Wilson 95% interval."""

    trials: int
    successes: int
    p_hat: float
    ci_low: float
    ci_high: float
    seed: int

    def to_json_dict(self) -> dict:
        return {
            "trials": self.trials,
            "successes": self.successes,
            "p_hat": self.p_hat,
            "ci_low": self.ci_low,
            "ci_high": self.ci_high,
            "seed": self.seed,
        }


@dataclass(frozen=True)
class SinkStats:
    """Sample sink-count statistics next to the exact expectation."""

    trials: int
    seed: int
    mean_sinks: float
    sample_std: float
    exact_expectation: Fraction
    z_score: float

    def to_json_dict(self) -> dict:
        return {
            "trials": self.trials,
            "seed": self.seed,
            "mean_sinks": self.mean_sinks,
            "sample_std": self.sample_std,
            "exact_expectation_num": self.exact_expectation.numerator,
            "exact_expectation_den": self.exact_expectation.denominator,
            "exact_expectation": float(self.exact_expectation),
            "z_score": self.z_score,
        }


def random_orientation(g: Graph, stream: OrientationStream) -> Orientation:
    """Next orientation from a counter-based stream (one coin per edge)."""
    return Orientation(g, stream.next_bits(g.m))


def orientation_at(g: Graph, seed: int, trial: int) -> Orientation:
    """The orientation that trial index ``trial`` of ``seed`` produces."""
    return Orientation(g, OrientationStream(seed, start_trial=trial).next_bits(g.m))


def degree_extremes(o: Orientation) -> DegreeExtremes:
    """Out-degree extremes; requires minimum degree >= 1."""
    g = o.graph
    if g.min_degree() < 1:
        raise DomainError("degree extremes need minimum degree >= 1")
    out = o.out_degrees()
    sinks = tuple(v for v in range(g.n) if out[v] == 0)
    sources = tuple(v for v in range(g.n) if out[v] == g.deg[v])
    return DegreeExtremes(min(out), max(out), sinks, sources)


def is_strongly_connected(o: Orientation) -> bool:
    """Single-pass iterative Tarjan: exactly one SCC.

    Single vertex counts as strongly connected.
    """
    g = o.graph
    n = g.n
    if n == 1:
        return True
    out: list[list[int]] = [[] for _ in range(n)]
    for tail, head in o.arcs():
        out[tail].append(head)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    scc_stack: list[int] = []
    counter = 0
    sccs = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, i = work.pop()
            if i == 0:
                index[v] = low[v] = counter
                counter += 1
                scc_stack.append(v)
                on_stack[v] = True
            advanced = False
            while i < len(out[v]):
                w = out[v][i]
                i += 1
                if index[w] == -1:
                    work.append((v, i))
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            if low[v] == index[v]:
                sccs += 1
                if sccs > 1:
                    return False
                while True:
                    w = scc_stack.pop()
                    on_stack[w] = False
                    if w == v:
                        break
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return sccs == 1


def orientation_census(g: Graph) -> OrientationCensus:
    """Exhaustive counts over all 2^m orientations (m <= 24)."""
    if g.m > CENSUS_MAX_M:
        raise SizeLimitError(
            f"orientation census limited to m <= {CENSUS_MAX_M}, got m={g.m}"
        )
    total = 1 << g.m
    if g.n <= 64:
        strong, sink_free, eulerian = kernels.census_counts(g)
        if g.n == 1:
            strong = 1  # lone vertex is strongly connected by convention
        return OrientationCensus(g.n, g.m, total, strong, sink_free, eulerian)
    # n > 64 with m <= 24 forces isolated vertices, hence disconnection and
    # unavoidable sinks; only the Eulerian count needs the kernel, run on the
    # core of non-isolated vertices (at most 2m <= 48 of them).
    core_vertices = [v for v in range(g.n) if g.deg[v] > 0]
    if not core_vertices:
        return OrientationCensus(g.n, g.m, total, 0, 0, total)
    relabel = {v: i for i, v in enumerate(core_vertices)}
    core = Graph(len(core_vertices), [(relabel[u], relabel[v]) for u, v in g.edges])
    _, _, eulerian = kernels.census_counts(core)
    return OrientationCensus(g.n, g.m, total, 0, 0, eulerian)


def strong_probability_exact(g: Graph) -> Fraction:
    """Exact probability that a uniform orientation is strongly connected."""
    c = orientation_census(g)
    return Fraction(c.strong, c.total)


def cut_event_probability_exact(g: Graph, x) -> Fraction:
    """Probability that a cut has no crossing arc in one direction.

    The event: all crossing edges of the subset point out of it, or all point
    into it.  Counted by exhaustive enumeration of the 2^e crossing-edge
    assignments, independently of the closed form 2^(1-e).
    """
    s = as_subset(g, x)
    if s.mask == 0 or s.mask == (1 << g.n) - 1:
        raise DomainError("cut event needs a nonempty proper subset")
    crossing = boundary_edge_list(g, s)
    e = len(crossing)
    if e == 0:
        raise DomainError("no crossing edges: subset is disconnected from the rest")
    if e > CUT_EVENT_MAX_EDGES:
        raise SizeLimitError(
            f"cut-event enumeration limited to {CUT_EVENT_MAX_EDGES} crossing edges"
        )
    # bit i = 0 orients crossing edge i from its lower endpoint; record which
    # bit value means "leaves the subset"
    leave_bit = np.array(
        [0 if (s.mask >> u) & 1 else 1 for u, v in crossing], dtype=np.int64
    )
    out_count = 0
    in_count = 0
    both_count = 0
    block = 1 << 16
    for lo in range(0, 1 << e, block):
        hi = min(lo + block, 1 << e)
        a = np.arange(lo, hi, dtype=np.int64)
        all_out = np.ones(hi - lo, dtype=bool)
        all_in = np.ones(hi - lo, dtype=bool)
        for i in range(e):
            leaves = ((a >> i) & 1) == leave_bit[i]
            all_out &= leaves
            all_in &= ~leaves
        out_count += int(all_out.sum())
        in_count += int(all_in.sum())
        both_count += int((all_out & all_in).sum())
    favorable = out_count + in_count - both_count
    return Fraction(favorable, 1 << e)


def wilson_interval(successes: int, trials: int, z: float = WILSON_Z) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion."""
    if trials <= 0:
        raise DomainError("Wilson interval needs at least one trial")
    if not 0 <= successes <= trials:
        raise DomainError("successes must lie in [0, trials]")
    p = successes / trials
    z2 = z * z
    denom = 1.0 + z2 / trials
    center = (p + z2 / (2 * trials)) / denom
    half = (z / denom) * math.sqrt(p * (1 - p) / trials + z2 / (4 * trials * trials))
    return (max(0.0, center - half), min(1.0, center + half))


def mc_strong_probability(
    g: Graph, trials: int, seed: int, trial_offset: int = 0
) -> MCEstimate:
    """Monte Carlo estimate of the strong-connectivity probability."""
    _check_mc_args(trials, seed)
    successes = kernels.mc_strong_count(g, trials, seed, trial_offset)
    low, high = wilson_interval(successes, trials)
    return MCEstimate(trials, successes, successes / trials, low, high, seed)


def mc_sink_statistics(
    g: Graph, trials: int, seed: int, trial_offset: int = 0
) -> SinkStats:
    """Sampled sink-count mean/std against the exact expectation.

    The exact expectation of the number of sinks is sum over vertices of
    2^(-deg v), by linearity.
    """
    _check_mc_args(trials, seed)
    s, sq = kernels.mc_sink_stats(g, trials, seed, trial_offset)
    mean = s / trials
    exact = sink_count_expectation(g)
    if trials > 1:
        var = (sq - s * s / trials) / (trials - 1)
        std = math.sqrt(max(0.0, var))
    else:
        std = 0.0
    se = std / math.sqrt(trials)
    if se == 0.0:
        z = 0.0 if mean == float(exact) else math.inf
    else:
        z = (mean - float(exact)) / se
    return SinkStats(trials, seed, mean, std, exact, z)


def sink_count_expectation(g: Graph) -> Fraction:
    """Exact expected number of sinks of a uniform orientation."""
    return sum((Fraction(1, 2 ** d) for d in g.deg), Fraction(0))


def _check_mc_args(trials: int, seed: int) -> None:
    if trials < 1:
        raise DomainError("trial count must be >= 1")
    if not 0 <= seed <= MASK64:
        raise DomainError("seed must fit in 64 bits")


def robbins_orientable(g: Graph) -> bool:
    """Whether some orientation is strongly connected.

    Equivalent to 2-edge-connectivity; kept as a named helper because the
    census cross-checks it (strong count > 0 iff True).
    """
    from .graph import is_two_edge_connected

    return is_two_edge_connected(g)
