"""Curvatures of directed hyperedges.

Tail = inputs (educts), head = outputs (products). A vertex may sit on both
sides of a hyperedge (a catalyst). By default the hyperedge under evaluation
is not counted among its own neighbors; pass ``include_self=True`` to count
it wherever it is incident to its own tail or head vertices.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ContractViolation, CurvatureUndefined
from .network import HYPERGRAPH, Hyperedge, Network, bridged_distances, hop_distance
from .transport import TransportInstance, TransportPlan, solve_transport


@dataclass(frozen=True)
class HyperedgeContext:
    edge: int
    eta_in: int
    eta_out: int
    deg_in: Fraction
    deg_out: Fraction


@dataclass(frozen=True)
class MassHoleMeasure:
    """Probability measure on vertices built by the even-splitting procedure.

    ``sources`` are tail (resp. head) vertices that kept their budget because
    nothing enters (resp. leaves) them; ``reached`` is the set of masses
    (resp. holes) the budget was split onto.
    """

    side: str
    atoms: tuple[tuple[int, Fraction], ...]
    sources: tuple[int, ...]
    reached: frozenset[int]

    @property
    def total(self) -> Fraction:
        return sum((m for _, m in self.atoms), Fraction(0))


def _require_hyper(net: Network) -> None:
    if net.kind != HYPERGRAPH:
        raise ContractViolation(f"expected a directed hypergraph, got {net.kind}")


def _resolve(net: Network, e: int | Hyperedge) -> tuple[int, Hyperedge]:
    _require_hyper(net)
    k = net.edge_id(e)
    return k, net.edges[k]


def hyperedge_context(net: Network, e: int | Hyperedge, include_self: bool = False) -> HyperedgeContext:
    """Degrees with multiplicity: a neighbor touching k tail vertices counts k times."""
    k, h = _resolve(net, e)
    edges = net.edges
    deg_in = Fraction(0)
    for v in h.tail:
        for f in net.in_edges[v]:
            if f != k or include_self:
                deg_in += edges[f].weight if net.weighted else 1
    deg_out = Fraction(0)
    for v in h.head:
        for f in net.out_edges[v]:
            if f != k or include_self:
                deg_out += edges[f].weight if net.weighted else 1
    return HyperedgeContext(k, len(h.tail), len(h.head), deg_in, deg_out)


def forman_hyper(net: Network, e: int | Hyperedge, include_self: bool = False) -> Fraction:
    """``|e1| + |e2| - deg_in - deg_out``; weighted mode scales the sizes by ``w(e)``."""
    ctx = hyperedge_context(net, e, include_self)
    w = net.edges[ctx.edge].weight
    return w * (ctx.eta_in + ctx.eta_out) - ctx.deg_in - ctx.deg_out


def degree_difference_hyper(net: Network, e: int | Hyperedge, include_self: bool = False) -> Fraction:
    ctx = hyperedge_context(net, e, include_self)
    return ctx.deg_out - ctx.deg_in


def _split(
    net: Network,
    k: int,
    side: str,
    members: tuple[int, ...],
    include_self: bool,
) -> MassHoleMeasure:
    if not members:
        raise CurvatureUndefined(f"hyperedge {k} has an empty {'tail' if side == 'in' else 'head'}")
    edges = net.edges
    if side == "in":
        neighbors, far = net.in_edges, (lambda f: edges[f].tail)
    else:
        neighbors, far = net.out_edges, (lambda f: edges[f].head)
    budget = Fraction(1, len(members))
    atoms: dict[int, Fraction] = {}
    sources = []
    reached: set[int] = set()
    for w in members:
        # neighbors with an empty far side have nowhere to pass measure on
        nbrs = [f for f in neighbors[w] if (f != k or include_self) and far(f)]
        if not nbrs:
            sources.append(w)
            atoms[w] = atoms.get(w, 0) + budget
            continue
        share = budget / len(nbrs)
        for f in nbrs:
            ends = far(f)
            piece = share / len(ends)
            for u in ends:
                atoms[u] = atoms.get(u, 0) + piece
                reached.add(u)
    return MassHoleMeasure(side, tuple(atoms.items()), tuple(sources), frozenset(reached))


def in_measure(net: Network, e: int | Hyperedge, include_self: bool = False) -> MassHoleMeasure:
    """Masses: ``1/|tail|`` per tail vertex, split evenly over the hyperedges
    entering it and then evenly over each of their tails."""
    k, h = _resolve(net, e)
    return _split(net, k, "in", h.tail, include_self)


def out_measure(net: Network, e: int | Hyperedge, include_self: bool = False) -> MassHoleMeasure:
    """Holes: the mirror of :func:`in_measure` on the head side."""
    k, h = _resolve(net, e)
    return _split(net, k, "out", h.head, include_self)


def hyper_distance(net: Network, u: int, v: int) -> int:
    """Fewest directed hyperedges leading from ``u`` to ``v`` (0 when equal)."""
    _require_hyper(net)
    d = hop_distance(net, u, v, max_depth=3)
    if d is None:
        raise ContractViolation(f"vertex {v} is not within 3 hyperedges of {u}")
    return d


@dataclass(frozen=True)
class HyperOllivier:
    value: Fraction
    plan: TransportPlan
    masses: MassHoleMeasure
    holes: MassHoleMeasure


def ollivier_hyper_details(net: Network, e: int | Hyperedge, include_self: bool = False) -> HyperOllivier:
    k, h = _resolve(net, e)
    if net.weighted:
        raise ContractViolation("Ollivier curvature is only defined for unweighted hypergraphs")
    mu_in = _split(net, k, "in", h.tail, include_self)
    mu_out = _split(net, k, "out", h.head, include_self)
    cost = bridged_distances(
        net, [u for u, _ in mu_in.atoms], [v for v, _ in mu_out.atoms], h.tail, h.head
    )
    plan = solve_transport(TransportInstance(mu_in.atoms, mu_out.atoms, cost))
    value = 1 - plan.total_cost
    assert value == plan.curvature and -2 <= value <= 1
    return HyperOllivier(value, plan, mu_in, mu_out)


def ollivier_hyper(
    net: Network, e: int | Hyperedge, include_self: bool = False
) -> tuple[Fraction, TransportPlan]:
    r = ollivier_hyper_details(net, e, include_self)
    return r.value, r.plan
