"""Orientation sampling, exhaustive censuses, and the exact cut-event law."""

import math
from fractions import Fraction

import pytest

from strongorient.errors import DomainError
from strongorient.generators import barbell, complete, cycle, lollipop, path
from strongorient.graph import Graph, iter_nonempty_proper_subsets
from strongorient.orientation import (
    Orientation,
    cut_event_probability_exact,
    degree_extremes,
    is_strongly_connected,
    mc_sink_statistics,
    mc_strong_probability,
    orientation_at,
    orientation_census,
    random_orientation,
    robbins_orientable,
    sink_count_expectation,
    strong_probability_exact,
    wilson_interval,
)
from strongorient.rng import OrientationStream, orientation_bit

from conftest import SUITE, suite_params


def test_orientation_arc_convention():
    g = cycle(3)
    o = Orientation(g, 0b000)
    # bit 0 keeps the canonical direction u -> v with u < v
    assert o.arcs() == [(0, 1), (0, 2), (1, 2)]
    o = Orientation(g, 0b101)
    assert o.arc(0) == (1, 0) and o.arc(1) == (0, 2) and o.arc(2) == (2, 1)


def test_out_degrees_and_neighbors():
    g = complete(3)
    o = Orientation(g, 0b000)
    assert o.out_degrees() == [2, 1, 0]
    assert o.out_neighbors(0) == [1, 2]
    assert o.in_neighbors(2) == [0, 1]
    ext = degree_extremes(o)
    assert ext.has_sink and ext.has_source
    assert ext.min_out == 0 and ext.max_out == 2


def test_cyclic_orientation_is_strong():
    g = cycle(4)
    # 0->1->2->3->0: edge (0,3) must run 3->0, others canonical
    bits = 1 << g.edge_index(0, 3)
    assert is_strongly_connected(Orientation(g, bits))
    assert not is_strongly_connected(Orientation(g, 0))


def test_single_vertex_strong():
    assert is_strongly_connected(Orientation(Graph(1, []), 0))


def _census_brute(g):
    """Independent reference census via explicit per-orientation checks."""
    strong = sink_free = eulerian = 0
    for bits in range(1 << g.m):
        o = Orientation(g, bits)
        outs = o.out_degrees()
        ins = [d - x for d, x in zip(g.deg, outs)]
        if all(x > 0 for x in outs):
            sink_free += 1
        if outs == ins:
            eulerian += 1
        if is_strongly_connected(o):
            strong += 1
    return strong, sink_free, eulerian


@pytest.mark.parametrize("g", suite_params())
def test_census_matches_brute_force(g):
    if g.m > 13:
        pytest.skip("brute census kept small")
    rep = orientation_census(g)
    strong, sink_free, eulerian = _census_brute(g)
    assert rep.total == 1 << g.m
    assert (rep.strong, rep.sink_free, rep.eulerian) == (
        strong, sink_free, eulerian,
    )


def test_census_known_values():
    assert orientation_census(complete(3)).to_json_dict() == {
        "n": 3, "m": 3, "total": 8, "strong": 2, "sink_free": 2, "eulerian": 2,
    }
    rep = orientation_census(complete(4))
    assert (rep.total, rep.strong, rep.eulerian) == (64, 24, 0)
    assert orientation_census(cycle(4)).strong == 2
    # a bridge kills every orientation
    assert orientation_census(barbell(6)).strong == 0


def test_census_ordering_invariants():
    for g in SUITE.values():
        if g.m > 20:
            continue
        rep = orientation_census(g)
        assert 0 <= rep.strong <= rep.sink_free <= rep.total
        if g.n >= 2:
            # strong orientations exist iff the graph is 2-edge-connected
            from strongorient.graph import is_two_edge_connected

            assert (rep.strong > 0) == is_two_edge_connected(g)


def test_census_eulerian_parity():
    # odd-degree vertex forbids eulerian orientations
    assert orientation_census(path(3)).eulerian == 0
    assert orientation_census(cycle(5)).eulerian == 2


def test_census_disconnected_graph():
    g = Graph(70, [(0, 1), (1, 2), (0, 2)])
    rep = orientation_census(g)
    assert rep.total == 8
    assert rep.strong == 0 and rep.sink_free == 0
    assert rep.eulerian == 2


def test_census_guard():
    with pytest.raises(DomainError):
        orientation_census(complete(8))  # m = 28 > 24


def test_strong_probability_exact():
    assert strong_probability_exact(complete(3)) == Fraction(1, 4)
    assert strong_probability_exact(cycle(4)) == Fraction(1, 8)
    assert strong_probability_exact(barbell(6)) == 0


@pytest.mark.parametrize("g", suite_params())
def test_cut_event_law(g):
    """P(all crossing edges agree) = 2^(1 - cut size), for every cut."""
    if g.m > 14:
        pytest.skip("exact cut enumeration kept small")
    from strongorient.graph import edge_boundary

    for mask in iter_nonempty_proper_subsets(g.n):
        members = [v for v in range(g.n) if mask >> v & 1]
        e = edge_boundary(g, members)
        if e == 0:
            continue
        p = cut_event_probability_exact(g, members)
        assert p == Fraction(2, 1 << e)


def test_cut_event_brute_force_c4():
    # direct check against the enumeration for one handpicked cut
    g = cycle(4)
    p = cut_event_probability_exact(g, [0, 1])
    hits = 0
    for bits in range(1 << g.m):
        o = Orientation(g, bits)
        arcs = o.arcs()
        crossing = [a for a in arcs if (a[0] in (0, 1)) != (a[1] in (0, 1))]
        out = sum(1 for a in crossing if a[0] in (0, 1))
        if out == len(crossing) or out == 0:
            hits += 1
    assert p == Fraction(hits, 1 << g.m)


def test_cut_event_guards():
    g = Graph(4, [(0, 1), (2, 3)])
    with pytest.raises(DomainError):
        cut_event_probability_exact(g, [0, 1])  # empty boundary
    with pytest.raises(DomainError):
        cut_event_probability_exact(cycle(4), [])


def test_random_orientation_reproducible():
    g = complete(4)
    a = random_orientation(g, OrientationStream(seed=5))
    b = random_orientation(g, OrientationStream(seed=5))
    c = orientation_at(g, seed=5, trial=0)
    assert a.bits == b.bits == c.bits
    # bit j of trial 0 equals the raw counter-based bit
    for j in range(g.m):
        assert (a.bits >> j) & 1 == orientation_bit(5, 0, j)


def test_orientation_stream_advances():
    g = complete(4)
    stream = OrientationStream(seed=5)
    first = random_orientation(g, stream)
    second = random_orientation(g, stream)
    assert second.bits == orientation_at(g, 5, 1).bits
    assert first.bits != second.bits or g.m == 0


def test_wilson_interval_basics():
    lo, hi = wilson_interval(50, 100)
    assert 0.0 <= lo < 0.5 < hi <= 1.0
    lo0, hi0 = wilson_interval(0, 100)
    assert lo0 == 0.0 and hi0 > 0.0
    lo1, hi1 = wilson_interval(100, 100)
    assert 0.99 < hi1 <= 1.0 and lo1 < 1.0
    with pytest.raises(DomainError):
        wilson_interval(5, 0)
    with pytest.raises(DomainError):
        wilson_interval(7, 5)


def test_wilson_widens_with_z():
    lo95, hi95 = wilson_interval(30, 100, z=1.96)
    lo99, hi99 = wilson_interval(30, 100, z=2.576)
    assert lo99 < lo95 and hi99 > hi95


def test_mc_strong_probability_matches_census_coarsely():
    g = complete(3)
    est = mc_strong_probability(g, trials=20_000, seed=11)
    assert est.trials == 20_000
    assert est.ci_low <= 0.25 <= est.ci_high
    assert abs(est.p_hat - 0.25) < 0.02


def test_mc_on_bridge_graph_never_strong():
    est = mc_strong_probability(barbell(6), trials=2_000, seed=1)
    assert est.successes == 0 and est.p_hat == 0.0


def test_mc_partition_invariance():
    g = complete(4)
    whole = mc_strong_probability(g, trials=1_000, seed=9).successes
    head = mc_strong_probability(g, trials=600, seed=9).successes
    tail = mc_strong_probability(g, trials=400, seed=9, trial_offset=600).successes
    assert whole == head + tail


def test_sink_expectation_exact():
    assert sink_count_expectation(complete(3)) == Fraction(3, 4)
    assert sink_count_expectation(cycle(4)) == Fraction(1, 1)
    g = lollipop(5)
    want = sum(Fraction(1, 1 << d) for d in g.deg)
    assert sink_count_expectation(g) == want


def test_mc_sink_statistics_sane():
    g = cycle(4)  # expectation exactly 1
    stats = mc_sink_statistics(g, trials=50_000, seed=2)
    assert abs(stats.mean_sinks - 1.0) < 0.05
    assert stats.exact_expectation == 1
    assert abs(stats.z_score) < 4.0
    assert stats.sample_std > 0


def test_mc_sink_partition_invariance():
    g = cycle(5)
    s1 = mc_sink_statistics(g, trials=1_000, seed=3)
    a = mc_sink_statistics(g, trials=700, seed=3)
    b = mc_sink_statistics(g, trials=300, seed=3, trial_offset=700)
    merged = (a.mean_sinks * 700 + b.mean_sinks * 300) / 1_000
    assert math.isclose(s1.mean_sinks, merged, rel_tol=1e-12)


@pytest.mark.parametrize(
    "build,expected",
    [
        (lambda: cycle(5), True),
        (lambda: complete(4), True),
        (lambda: barbell(6), False),
        (lambda: path(4), False),
    ],
)
def test_robbins_orientable(build, expected):
    assert robbins_orientable(build()) is expected


def test_mc_rejects_bad_args():
    g = cycle(4)
    with pytest.raises(DomainError):
        mc_strong_probability(g, trials=0, seed=1)
    with pytest.raises(DomainError):
        mc_strong_probability(g, trials=10, seed=-1)
