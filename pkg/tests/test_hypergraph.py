import random
from fractions import Fraction as F

import pytest

from conftest import shortcut_net
from edgecurv import parse_hyperedges
from edgecurv.errors import ContractViolation, CurvatureUndefined
from edgecurv.hypergraph import (
    degree_difference_hyper,
    forman_hyper,
    hyper_distance,
    hyperedge_context,
    in_measure,
    ollivier_hyper,
    ollivier_hyper_details,
    out_measure,
)
from edgecurv.network import HYPERGRAPH, Hyperedge, Network, bridged_distances
from oracles import graph_distance_oracle, random_hyperedge_text


def atoms_by_label(net, measure):
    return {net.labels[v]: m for v, m in measure.atoms}


def test_golden_measures(golden_net):
    masses = in_measure(golden_net, 0)
    holes = out_measure(golden_net, 0)
    assert atoms_by_label(golden_net, masses) == {"g": F(1, 2), "t": F(1, 2)}
    assert atoms_by_label(golden_net, holes) == {
        "s": F(1, 2), "t": F(1, 4), "r1": F(1, 8), "r2": F(1, 8)
    }  # fmt: skip
    assert [golden_net.labels[v] for v in masses.sources] == ["g"]
    assert [golden_net.labels[v] for v in holes.sources] == ["s"]


def test_golden_curvature(golden_net):
    value, plan = ollivier_hyper(golden_net, 0)
    assert value == F(-1, 4)
    assert plan.total_cost == F(5, 4)
    assert plan.m in {(F(1, 4), F(1, 2), 0, F(1, 4)), (F(1, 4), F(1, 4), F(1, 2), 0)}


def test_source_and_sink_rules():
    net = parse_hyperedges("a,b,c -> d,e")
    masses, holes = in_measure(net, 0), out_measure(net, 0)
    assert masses.atoms == tuple((v, F(1, 3)) for v in net.edges[0].tail)
    assert holes.atoms == tuple((v, F(1, 2)) for v in net.edges[0].head)
    assert masses.reached == frozenset() and len(masses.sources) == 3


def test_atoms_accumulate_on_shared_tail_vertex():
    # both hyperedges entering a share tail vertex p
    net = parse_hyperedges("a -> z\np,q -> a\np -> a")
    m = atoms_by_label(net, in_measure(net, 0))
    assert m == {"p": F(1, 4) + F(1, 2), "q": F(1, 4)}
    assert in_measure(net, 0).total == 1


def test_empty_tail_neighbor_is_not_a_recipient():
    net = parse_hyperedges("a -> z\n-> a | uptake\nq -> a")
    assert atoms_by_label(net, in_measure(net, 0)) == {"q": F(1)}
    only_uptake = parse_hyperedges("a -> z\n-> a | uptake")
    m = in_measure(only_uptake, 0)
    assert atoms_by_label(only_uptake, m) == {"a": F(1)}


def test_self_incidence_switch():
    net = parse_hyperedges("a,k -> b,k\nx -> a")
    ctx = hyperedge_context(net, 0)
    assert (ctx.deg_in, ctx.deg_out) == (1, 0)
    ctx_self = hyperedge_context(net, 0, include_self=True)
    assert (ctx_self.deg_in, ctx_self.deg_out) == (2, 1)
    assert forman_hyper(net, 0) == 3
    assert forman_hyper(net, 0, include_self=True) == 1
    # k is a source by default; with the switch its budget passes through e itself
    assert atoms_by_label(net, in_measure(net, 0)) == {"x": F(1, 2), "k": F(1, 2)}
    assert atoms_by_label(net, in_measure(net, 0, include_self=True)) == {
        "x": F(1, 2), "a": F(1, 4), "k": F(1, 4)
    }  # fmt: skip


def test_catalyst_gives_distance_zero():
    net = parse_hyperedges("a,k -> b,k")
    value, plan = ollivier_hyper(net, 0)
    assert plan.m[0] == F(1, 2)
    assert hyper_distance(net, net.node_id("k"), net.node_id("k")) == 0


def test_hyper_distance_examples():
    net = parse_hyperedges(shortcut_net("left"))
    x, p, a, c = (net.node_id(s) for s in "xpac")
    assert hyper_distance(net, a, c) == 1
    for u in ("x", "y"):
        for v in ("p", "q"):
            assert hyper_distance(net, net.node_id(u), net.node_id(v)) == 3
    assert hyper_distance(net, x, x) == 0
    with pytest.raises(ContractViolation):
        hyper_distance(net, p, x)


def test_forman_examples():
    assert forman_hyper(parse_hyperedges("a,b -> c,d,e"), 0) == 5
    for variant in ("left", "right"):
        assert forman_hyper(parse_hyperedges(shortcut_net(variant)), 0) == 0


def test_forman_multiplicity_counting():
    # f enters two tail vertices of e and counts twice
    net = parse_hyperedges("a,b -> c\nx -> a,b")
    assert hyperedge_context(net, 0).deg_in == 2
    assert forman_hyper(net, 0) == 1
    assert degree_difference_hyper(net, 0) == -2


def test_weighted_forman_hyper():
    net = Network(
        HYPERGRAPH,
        ["a", "b", "c", "x"],
        [Hyperedge((0, 1), (2,), F(2)), Hyperedge((3,), (0, 1), F(1, 3))],
        weighted=True,
    )
    assert forman_hyper(net, 0) == 2 * 3 - 2 * F(1, 3)
    with pytest.raises(ContractViolation):
        ollivier_hyper(net, 0)


def test_degree_difference_examples():
    assert degree_difference_hyper(parse_hyperedges("a -> b"), 0) == 0
    net = parse_hyperedges("a,b -> c\nx -> a\ny -> a\nz -> b")
    assert degree_difference_hyper(net, 0) == -3


def test_ollivier_extremes():
    twin = parse_hyperedges("a -> b\nb -> x\nx -> a")
    assert ollivier_hyper(twin, 0)[0] == 1
    assert ollivier_hyper(parse_hyperedges(shortcut_net("left")), 0)[0] == -2


def test_ollivier_empty_side_undefined():
    net = parse_hyperedges("-> a\na -> b")
    with pytest.raises(CurvatureUndefined):
        ollivier_hyper(net, 0)
    assert forman_hyper(net, 0) == 1 - 1


def test_shortcut_patterns():
    left = parse_hyperedges(shortcut_net("left"))
    right = parse_hyperedges(shortcut_net("right"))
    blue = parse_hyperedges(shortcut_net("right", "blue"))
    green = parse_hyperedges(shortcut_net("right", "green"))
    o = {name: ollivier_hyper_details(n, 0) for name, n in
         [("left", left), ("right", right), ("blue", blue), ("green", green)]}  # fmt: skip
    assert o["left"].value < 0 < o["right"].value
    assert forman_hyper(left, 0) == forman_hyper(right, 0) == 0
    # blue edges change F; the extra mass they route moves at distance 1 only
    assert forman_hyper(blue, 0) != forman_hyper(right, 0)
    assert o["blue"].plan.m[2] == o["blue"].plan.m[3] == 0 and o["blue"].plan.m[1] > 0
    assert o["blue"].value > 0
    # F cannot tell blue from green, O can: green routes via m2
    assert forman_hyper(blue, 0) == forman_hyper(green, 0)
    assert o["green"].plan.m[2] > 0
    assert o["green"].value < o["blue"].value


def test_random_identity_range_and_unit_mass():
    rng = random.Random(41)
    for _ in range(60):
        net = parse_hyperedges(random_hyperedge_text(rng))
        for k in range(net.n_edges):
            r = ollivier_hyper_details(net, k)
            assert r.masses.total == 1 and r.holes.total == 1
            assert all(m > 0 for _, m in r.masses.atoms + r.holes.atoms)
            m0, _, m2, m3 = r.plan.m
            assert r.value == 1 - r.plan.total_cost == m0 - m2 - 2 * m3
            assert -2 <= r.value <= 1


def test_distances_match_untruncated_oracle():
    rng = random.Random(42)
    for _ in range(40):
        net = parse_hyperedges(random_hyperedge_text(rng))
        dist = graph_distance_oracle(net)
        for k in range(net.n_edges):
            h = net.edges[k]
            us = [u for u, _ in in_measure(net, k).atoms]
            vs = [v for v, _ in out_measure(net, k).atoms]
            cost = bridged_distances(net, us, vs, h.tail, h.head)
            for i, u in enumerate(us):
                for j, v in enumerate(vs):
                    assert cost[i][j] == dist[u][v] <= 3
                    assert hyper_distance(net, u, v) == dist[u][v]
