"""Forman curvature, degree difference and Ollivier curvature of undirected edges."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ContractViolation
from .network import UNDIRECTED, Edge, Network, bridged_distances
from .transport import TransportInstance, TransportPlan, solve_transport


@dataclass(frozen=True)
class EdgeNeighborhood:
    """Local view of edge ``(v, w)``.

    ``e_v``/``e_w`` are the edge ids incident to ``v``/``w`` and both contain
    the edge itself. ``deg_v``/``deg_w`` count (or weigh, in weighted mode)
    the *other* edges at each endpoint.
    """

    edge: int
    v: int
    w: int
    e_v: tuple[int, ...]
    e_w: tuple[int, ...]
    deg_v: Fraction
    deg_w: Fraction


def _require_undirected(net: Network) -> None:
    if net.kind != UNDIRECTED:
        raise ContractViolation(f"expected an undirected graph, got {net.kind}")


def neighborhood(net: Network, e: int | Edge | tuple[int, int]) -> EdgeNeighborhood:
    _require_undirected(net)
    k = net.edge_id(e)
    edge = net.edges[k]
    v, w = edge.tail, edge.head
    e_v, e_w = net.out_edges[v], net.out_edges[w]
    if net.weighted:
        deg_v = sum((net.edges[f].weight for f in e_v if f != k), Fraction(0))
        deg_w = sum((net.edges[f].weight for f in e_w if f != k), Fraction(0))
    else:
        deg_v, deg_w = Fraction(len(e_v) - 1), Fraction(len(e_w) - 1)
    return EdgeNeighborhood(k, v, w, e_v, e_w, deg_v, deg_w)


def forman(net: Network, e: int | Edge | tuple[int, int]) -> Fraction:
    """``2 - deg_v(e) - deg_w(e)``; weighted: ``2*w(e)`` minus neighbor weights."""
    nb = neighborhood(net, e)
    return 2 * net.edges[nb.edge].weight - nb.deg_v - nb.deg_w


def degree_difference(net: Network, e: int | Edge | tuple[int, int]) -> Fraction:
    nb = neighborhood(net, e)
    return abs(nb.deg_v - nb.deg_w)


def _far(net: Network, edge_id: int, near: int) -> int:
    e = net.edges[edge_id]
    return e.head if e.tail == near else e.tail


def transport_instance(net: Network, e: int | Edge | tuple[int, int]) -> TransportInstance:
    """Uniform measures on ``E_v`` and ``E_w`` carried by far endpoints.

    In a simple graph the far endpoints of ``E_v`` are distinct; the edge
    itself sits at ``w`` in the first measure and at ``v`` in the second.
    """
    nb = neighborhood(net, e)
    src = [_far(net, f, nb.v) for f in nb.e_v]
    dst = [_far(net, f, nb.w) for f in nb.e_w]
    ms, md = Fraction(1, len(src)), Fraction(1, len(dst))
    cost = bridged_distances(net, src, dst, (nb.v,), (nb.w,))
    return TransportInstance([(x, ms) for x in src], [(y, md) for y in dst], cost)


def ollivier(net: Network, e: int | Edge | tuple[int, int]) -> tuple[Fraction, TransportPlan]:
    """``1 - W1(mu_v, mu_w)`` with hop-count ground distance; unweighted only."""
    if net.weighted:
        raise ContractViolation("Ollivier curvature is only defined for unweighted graphs")
    plan = solve_transport(transport_instance(net, e))
    value = 1 - plan.total_cost
    assert value == plan.curvature
    return value, plan
