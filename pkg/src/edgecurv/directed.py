"""Curvatures of directed edges and the derived vertex flow."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ContractViolation
from .network import DIRECTED, Edge, Network, bridged_distances
from .transport import TransportInstance, TransportPlan, solve_transport


@dataclass(frozen=True)
class DirectedEdgeContext:
    edge: int
    tail: int
    head: int
    in_edges: tuple[int, ...]   # head == tail of the edge
    out_edges: tuple[int, ...]  # tail == head of the edge
    deg_in: Fraction
    deg_out: Fraction


@dataclass(frozen=True)
class DirectedMeasure:
    side: str
    support: tuple[tuple[int, Fraction], ...]  # (edge id, mass)


def _require_directed(net: Network) -> None:
    if net.kind != DIRECTED:
        raise ContractViolation(f"expected a directed graph, got {net.kind}")


def context(net: Network, e: int | Edge | tuple[int, int]) -> DirectedEdgeContext:
    _require_directed(net)
    k = net.edge_id(e)
    edge = net.edges[k]
    ins, outs = net.in_edges[edge.tail], net.out_edges[edge.head]
    if net.weighted:
        deg_in = sum((net.edges[f].weight for f in ins), Fraction(0))
        deg_out = sum((net.edges[f].weight for f in outs), Fraction(0))
    else:
        deg_in, deg_out = Fraction(len(ins)), Fraction(len(outs))
    return DirectedEdgeContext(k, edge.tail, edge.head, ins, outs, deg_in, deg_out)


def forman_directed(net: Network, e: int | Edge | tuple[int, int]) -> Fraction:
    ctx = context(net, e)
    return 2 * net.edges[ctx.edge].weight - ctx.deg_in - ctx.deg_out


def directed_degree_difference(net: Network, e: int | Edge | tuple[int, int]) -> Fraction:
    """Signed ``deg_out - deg_in``: positive for edges that emit more than they receive."""
    ctx = context(net, e)
    return ctx.deg_out - ctx.deg_in


def measures(net: Network, e: int | Edge | tuple[int, int]) -> tuple[DirectedMeasure, DirectedMeasure]:
    """Uniform input/output measures; an empty side puts unit mass on the edge itself."""
    ctx = context(net, e)
    ins = ctx.in_edges or (ctx.edge,)
    outs = ctx.out_edges or (ctx.edge,)
    return (
        DirectedMeasure("in", tuple((f, Fraction(1, len(ins))) for f in ins)),
        DirectedMeasure("out", tuple((f, Fraction(1, len(outs))) for f in outs)),
    )


def transport_instance(net: Network, e: int | Edge | tuple[int, int]) -> TransportInstance:
    """Sites are the tails of input edges and the heads of output edges."""
    mu_in, mu_out = measures(net, e)
    edges = net.edges
    src = [(edges[f].tail, m) for f, m in mu_in.support]
    dst = [(edges[f].head, m) for f, m in mu_out.support]
    k = net.edge_id(e)
    cost = bridged_distances(
        net, [s for s, _ in src], [d for d, _ in dst], (edges[k].tail,), (edges[k].head,)
    )
    return TransportInstance(src, dst, cost)


def ollivier_directed(
    net: Network, e: int | Edge | tuple[int, int]
) -> tuple[Fraction, TransportPlan]:
    if net.weighted:
        raise ContractViolation("Ollivier curvature is only defined for unweighted graphs")
    plan = solve_transport(transport_instance(net, e))
    value = 1 - plan.total_cost
    assert value == plan.curvature
    return value, plan


def vertex_flow(net: Network, v: int, kind: str = "forman") -> Fraction:
    """Curvature summed over edges entering ``v`` minus that over edges leaving it."""
    _require_directed(net)
    if not 0 <= v < net.n_nodes:
        raise KeyError(f"vertex {v} not in network")
    if kind == "forman":
        kappa = lambda k: forman_directed(net, k)  # noqa: E731
    elif kind == "ollivier":
        kappa = lambda k: ollivier_directed(net, k)[0]  # noqa: E731
    else:
        raise ValueError(f"kind must be 'forman' or 'ollivier', got {kind!r}")
    return sum((kappa(k) for k in net.in_edges[v]), Fraction(0)) - sum(
        (kappa(k) for k in net.out_edges[v]), Fraction(0)
    )
