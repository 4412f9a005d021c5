"""Exact optimal transport for small instances with ground costs in {0, 1, 2, 3}.

Masses are rational. They are scaled by the lcm of their denominators to
integers, the resulting integer minimum-cost flow problem is solved by
successive shortest paths (primal-dual form: every phase computes reduced
distances with Dijkstra and then saturates all shortest augmenting paths with
a blocking-flow pass), and the flow is scaled back.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Hashable, Sequence

from .errors import ContractViolation

MAX_COST = 3


@dataclass(frozen=True)
class TransportInstance:
    """Supplies and demands are ``(site, mass)`` lists; ``cost[i][j]`` is the
    ground distance from ``supplies[i]`` to ``demands[j]``."""

    supplies: Sequence[tuple[Hashable, Fraction]]
    demands: Sequence[tuple[Hashable, Fraction]]
    cost: Sequence[Sequence[int]]

    def validate(self) -> None:
        if not self.supplies or not self.demands:
            raise ContractViolation("transport instance needs at least one supply and one demand")
        for side in (self.supplies, self.demands):
            for site, m in side:
                if m <= 0:
                    raise ContractViolation(f"non-positive mass {m} at site {site!r}")
        total_s = sum((m for _, m in self.supplies), Fraction(0))
        total_d = sum((m for _, m in self.demands), Fraction(0))
        if total_s != total_d:
            raise ContractViolation(f"supply total {total_s} != demand total {total_d}")
        if total_s != 1:
            raise ContractViolation(f"measures must have total mass 1, got {total_s}")
        if len(self.cost) != len(self.supplies):
            raise ContractViolation("cost matrix row count differs from supply count")
        for row in self.cost:
            if len(row) != len(self.demands):
                raise ContractViolation("cost matrix column count differs from demand count")
            for c in row:
                if c not in (0, 1, 2, 3):
                    raise ContractViolation(f"cost {c!r} outside {{0,1,2,3}}")


@dataclass(frozen=True)
class TransportPlan:
    entries: tuple[tuple[Hashable, Hashable, Fraction], ...]
    total_cost: Fraction
    m: tuple[Fraction, Fraction, Fraction, Fraction]

    @property
    def curvature(self) -> Fraction:
        """``m0 - m2 - 2*m3``, equal to ``1 - total_cost`` for unit mass."""
        m0, _, m2, m3 = self.m
        return m0 - m2 - 2 * m3


def solve_transport(inst: TransportInstance) -> TransportPlan:
    """Cost-minimal coupling of ``inst.supplies`` and ``inst.demands``.

    Plan entries are listed in (supply index, demand index) order. Ties among
    optimal plans are resolved deterministically by scanning sites in
    ascending index order.
    """
    inst.validate()
    scale = lcm(*(m.denominator for _, m in inst.supplies), *(m.denominator for _, m in inst.demands))
    a = [int(m * scale) for _, m in inst.supplies]
    b = [int(m * scale) for _, m in inst.demands]
    flows = min_cost_flow(a, b, inst.cost)

    entries = []
    by_dist = [0, 0, 0, 0]
    for (i, j), f in sorted(flows.items()):
        entries.append((inst.supplies[i][0], inst.demands[j][0], Fraction(f, scale)))
        by_dist[inst.cost[i][j]] += f
    m = tuple(Fraction(x, scale) for x in by_dist)
    total = Fraction(by_dist[1] + 2 * by_dist[2] + 3 * by_dist[3], scale)
    plan = TransportPlan(tuple(entries), total, m)  # type: ignore[arg-type]
    if sum(m) != 1 or plan.curvature != 1 - total:
        raise AssertionError("m-decomposition identity violated")
    return plan


def min_cost_flow(
    supply: Sequence[int], demand: Sequence[int], cost: Sequence[Sequence[int]]
) -> dict[tuple[int, int], int]:
    """Integer transportation problem; returns the nonzero flows ``{(i, j): f}``.

    ``sum(supply)`` must equal ``sum(demand)``; costs must be non-negative.
    """
    ns, nd = len(supply), len(demand)
    total = sum(supply)
    if total != sum(demand):
        raise ContractViolation("supply and demand totals differ")
    if ns == 1 or nd == 1:
        if ns == 1:
            return {(0, j): d for j, d in enumerate(demand) if d}
        return {(i, 0): s for i, s in enumerate(supply) if s}

    # node layout: 0 = source, 1..ns supplies, ns+1..ns+nd demands, last = sink
    src, snk = 0, ns + nd + 1
    n = snk + 1
    # arcs come in (forward, reverse) pairs so that ``k ^ 1`` is the partner
    to: list[int] = []
    cap: list[int] = []
    arc_cost: list[int] = []
    adj: list[list[int]] = [[] for _ in range(n)]
    for i, s in enumerate(supply):
        adj[src].append(2 * i)
        adj[1 + i].append(2 * i + 1)
        to += (1 + i, src)
        cap += (s, 0)
        arc_cost += (0, 0)
    first_middle = len(to)
    heads = [x for j in range(nd) for x in (1 + ns + j, 0)]
    for i in range(ns):
        base = len(to)
        heads[1::2] = [1 + i] * nd
        to += heads
        cap += [total, 0] * nd
        arc_cost += [x for w in cost[i] for x in (w, -w)]
        adj[1 + i] += range(base, base + 2 * nd, 2)
    last_middle = len(to)
    for j in range(nd):
        adj[1 + ns + j] = list(range(first_middle + 2 * j + 1, last_middle, 2 * nd))
    for j, d in enumerate(demand):
        k = len(to)
        adj[1 + ns + j].append(k)
        adj[snk].append(k + 1)
        to += (snk, 1 + ns + j)
        cap += (d, 0)
        arc_cost += (0, 0)

    pot = [0] * n
    inf = float("inf")
    sent = 0
    while sent < total:
        # Dijkstra on reduced costs
        dist: list[float] = [inf] * n
        dist[src] = 0
        heap = [(0, src)]
        while heap:
            d, u = heapq.heappop(heap)
            if d > dist[u]:
                continue
            pu = pot[u]
            for k in adj[u]:
                if cap[k] > 0:
                    v = to[k]
                    nd_ = d + arc_cost[k] + pu - pot[v]
                    if nd_ < dist[v]:
                        dist[v] = nd_
                        heapq.heappush(heap, (nd_, v))
        dt = dist[snk]
        if dt == inf:
            raise ContractViolation("transport instance infeasible")
        for v in range(n):
            dv = dist[v]
            pot[v] += dt if dv > dt else dv  # type: ignore[assignment]

        # blocking flows along zero-reduced-cost residual arcs
        adm = [[k for k in adj[u] if arc_cost[k] + pot[u] == pot[to[k]]] for u in range(n)]
        while True:
            level = [-1] * n
            level[src] = 0
            queue = [src]
            for u in queue:
                for k in adm[u]:
                    v = to[k]
                    if cap[k] > 0 and level[v] < 0:
                        level[v] = level[u] + 1
                        queue.append(v)
            if level[snk] < 0:
                break
            sent += _blocking_flow(src, snk, adm, to, cap, level)

    flows = {}
    for k in range(first_middle, last_middle, 2):
        f = cap[k + 1]
        if f:
            i = to[k + 1] - 1
            j = to[k] - 1 - ns
            flows[(i, j)] = f
    return flows


def _blocking_flow(src, snk, adm, to, cap, level) -> int:
    """Dinic phase over the admissible arcs ``adm``; iterative DFS."""
    it = [0] * len(adm)
    pushed = 0
    while True:
        path: list[int] = []  # arc ids
        u = src
        while u != snk:
            arcs = adm[u]
            i = it[u]
            want = level[u] + 1
            while i < len(arcs):
                k = arcs[i]
                if cap[k] > 0 and level[to[k]] == want:
                    break
                i += 1
            it[u] = i
            if i < len(arcs):
                path.append(arcs[i])
                u = to[arcs[i]]
                continue
            if u == src:
                return pushed
            level[u] = -1  # dead end
            k = path.pop()
            u = to[k ^ 1]
            it[u] += 1
        f = min(cap[k] for k in path)
        for k in path:
            cap[k] -= f
            cap[k ^ 1] += f
        pushed += f
