import random
from fractions import Fraction as F

import pytest

from edgecurv import from_edges, parse_edge_list, parse_hyperedges
from edgecurv.directed import (
    directed_degree_difference,
    forman_directed,
    measures,
    ollivier_directed,
    transport_instance,
    vertex_flow,
)
from edgecurv.errors import ContractViolation
from edgecurv.hypergraph import forman_hyper, ollivier_hyper
from oracles import graph_distance_oracle, ollivier_directed_literal, random_graph_pairs

CHAIN = parse_edge_list("u v\nv w\nw x", kind="directed")
TRIANGLE = parse_edge_list("u v\nv w\nw u", kind="directed")
SINGLE = parse_edge_list("v w", kind="directed")


def digraph(text):
    return parse_edge_list(text, kind="directed")


def test_forman_directed_examples():
    assert forman_directed(CHAIN, 1) == 0
    assert forman_directed(SINGLE, 0) == 2
    net = digraph("a v\nb v\nc v\nv w\nw x\nw y")
    assert forman_directed(net, (net.node_id("v"), net.node_id("w"))) == -3


def test_weighted_forman_directed():
    net = parse_edge_list("a v 2\nv w 3\nw x 1/2", kind="directed", weighted=True)
    assert forman_directed(net, 1) == 6 - 2 - F(1, 2)


def test_directed_degree_difference_examples():
    assert directed_degree_difference(CHAIN, 1) == 0
    net = digraph("v w\nw a\nw b\nw c\nw d")
    assert directed_degree_difference(net, 0) == 4
    assert directed_degree_difference(CHAIN, 0) == 1
    assert directed_degree_difference(CHAIN, 2) == -1


def test_measures_source_and_sink_fall_back_to_edge():
    mu_in, mu_out = measures(SINGLE, 0)
    assert mu_in.support == ((0, 1),) and mu_out.support == ((0, 1),)
    mu_in, mu_out = measures(CHAIN, 0)  # source tail, normal head
    assert mu_in.support == ((0, 1),)
    assert mu_out.support == ((1, 1),)


def test_ollivier_directed_examples():
    # oracle values from the literal edge-level construction
    assert ollivier_directed_literal(CHAIN, 1) == -2
    assert ollivier_directed_literal(TRIANGLE, 1) == 1
    assert ollivier_directed_literal(SINGLE, 0) == 0
    assert ollivier_directed(CHAIN, 1)[0] == -2
    assert ollivier_directed(TRIANGLE, 1)[0] == 1
    assert ollivier_directed(SINGLE, 0)[0] == 0


def test_ollivier_directed_matches_literal_oracle():
    rng = random.Random(31)
    for _ in range(12):
        net = from_edges(random_graph_pairs(rng, 25, directed=True), "directed")
        dist = graph_distance_oracle(net)
        for k in range(net.n_edges):
            assert ollivier_directed(net, k)[0] == ollivier_directed_literal(net, k, dist)


def test_ollivier_directed_identity_and_range():
    rng = random.Random(32)
    for _ in range(12):
        net = from_edges(random_graph_pairs(rng, 100, directed=True), "directed")
        for k in range(net.n_edges):
            value, plan = ollivier_directed(net, k)
            m0, _, m2, m3 = plan.m
            assert value == m0 - m2 - 2 * m3
            assert -2 <= value <= 1


def test_truncated_distances_directed():
    rng = random.Random(33)
    for _ in range(8):
        net = from_edges(random_graph_pairs(rng, 150, directed=True), "directed")
        dist = graph_distance_oracle(net)
        for k in range(net.n_edges):
            inst = transport_instance(net, k)
            for i, (a, _) in enumerate(inst.supplies):
                for j, (b, _) in enumerate(inst.demands):
                    assert inst.cost[i][j] == dist[a][b]


def test_vertex_flow():
    net = digraph("u v\nv w\nx y")
    iso = parse_edge_list("a b", kind="directed")
    assert vertex_flow(net, net.node_id("v")) == 0
    assert vertex_flow(net, net.node_id("u")) == -1
    assert vertex_flow(net, net.node_id("w")) == 1
    lonely = from_edges([("a", "b")], "directed")
    assert vertex_flow(lonely, 0, "ollivier") == 0
    with pytest.raises(KeyError):
        vertex_flow(iso, 7)
    with pytest.raises(ValueError):
        vertex_flow(net, 0, "nope")


def test_vertex_flow_without_incident_edges():
    from edgecurv.network import DIRECTED, Edge, Network

    net = Network(DIRECTED, ["a", "b", "z"], [Edge(0, 1)])
    assert vertex_flow(net, 2) == 0
    assert vertex_flow(net, 2, "ollivier") == 0


def test_reversal_negates_ddiff_keeps_forman():
    rng = random.Random(34)
    for _ in range(30):
        pairs = random_graph_pairs(rng, 40, directed=True)
        net = from_edges(pairs, "directed")
        rev = from_edges([(v, u) for u, v in pairs], "directed")
        for k in range(net.n_edges):
            e = net.edges[k]
            kr = rev.edge_id((rev.node_id(net.labels[e.head]), rev.node_id(net.labels[e.tail])))
            assert directed_degree_difference(rev, kr) == -directed_degree_difference(net, k)
            assert forman_directed(rev, kr) == forman_directed(net, k)


def as_hypergraph(net):
    lab = net.labels
    return parse_hyperedges("".join(f"{lab[e.tail]} -> {lab[e.head]}\n" for e in net.edges))


def test_reduction_to_hypergraph():
    rng = random.Random(35)
    for _ in range(20):
        net = from_edges(random_graph_pairs(rng, 40, directed=True), "directed")
        hyp = as_hypergraph(net)
        for k in range(net.n_edges):
            assert forman_hyper(hyp, k) == forman_directed(net, k)
            assert ollivier_hyper(hyp, k)[0] == ollivier_directed(net, k)[0]


def test_wrong_kind_and_weighted():
    with pytest.raises(ContractViolation):
        forman_directed(parse_edge_list("a b"), 0)
    with pytest.raises(ContractViolation):
        ollivier_directed(parse_edge_list("a b 2", kind="directed", weighted=True), 0)
