"""Immutable graph / directed-hypergraph container, text parsers and components.

Nodes are dense integer ids ``0..n-1`` assigned in order of first appearance;
``Network.labels[i]`` holds the original token. All weights are
:class:`fractions.Fraction` so that downstream curvature arithmetic is exact.
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ContractViolation, NetworkParseError

log = logging.getLogger(__name__)

UNDIRECTED = "undirected-graph"
DIRECTED = "directed-graph"
HYPERGRAPH = "directed-hypergraph"
KINDS = (UNDIRECTED, DIRECTED, HYPERGRAPH)

ONE = Fraction(1)


@dataclass(frozen=True)
class Edge:
    tail: int
    head: int
    weight: Fraction = ONE


@dataclass(frozen=True)
class Hyperedge:
    """Directed hyperedge: ``tail`` are the inputs (educts), ``head`` the outputs."""

    tail: tuple[int, ...]
    head: tuple[int, ...]
    weight: Fraction = ONE
    label: str = ""


@dataclass(frozen=True)
class ParseStats:
    duplicates: int = 0
    self_loops: int = 0


class Network:
    """Undirected graph, directed graph or directed hypergraph.

    Incidence indexes are built once in the constructor and exposed as tuples
    (``in_edges``, ``out_edges``) and frozensets (``successors``,
    ``predecessors``). For the undirected kind every edge is both "in" and
    "out" at both endpoints, so the indexes are symmetric.
    """

    def __init__(
        self,
        kind: str,
        labels: Sequence[str],
        edges: Sequence[Edge | Hyperedge],
        weighted: bool = False,
        stats: ParseStats | None = None,
    ):
        if kind not in KINDS:
            raise ValueError(f"unknown network kind {kind!r}")
        self.kind = kind
        self.labels: tuple[str, ...] = tuple(labels)
        self.edges: tuple[Edge | Hyperedge, ...] = tuple(edges)
        self.weighted = weighted
        self.stats = stats or ParseStats()
        self._label_index = {lab: i for i, lab in enumerate(self.labels)}
        if len(self._label_index) != len(self.labels):
            raise ContractViolation("node labels must be unique")
        n = len(self.labels)

        in_e: list[list[int]] = [[] for _ in range(n)]
        out_e: list[list[int]] = [[] for _ in range(n)]
        self._pair_index: dict[tuple[int, int], int] = {}
        if kind == HYPERGRAPH:
            for k, h in enumerate(self.edges):
                if not isinstance(h, Hyperedge):
                    raise ContractViolation("hypergraph edges must be Hyperedge")
                if not h.tail and not h.head:
                    raise ContractViolation(f"hyperedge {k} has empty tail and head")
                if len(set(h.tail)) != len(h.tail) or len(set(h.head)) != len(h.head):
                    raise ContractViolation(f"hyperedge {k} repeats a vertex on one side")
                self._check_weight(k, h.weight)
                for v in h.tail:
                    self._check_node(v, n)
                    out_e[v].append(k)
                for v in h.head:
                    self._check_node(v, n)
                    in_e[v].append(k)
        else:
            for k, e in enumerate(self.edges):
                if not isinstance(e, Edge):
                    raise ContractViolation("graph edges must be Edge")
                self._check_node(e.tail, n)
                self._check_node(e.head, n)
                self._check_weight(k, e.weight)
                if e.tail == e.head:
                    raise ContractViolation(f"self-loop at edge {k}")
                keys = [(e.tail, e.head)]
                if kind == UNDIRECTED:
                    keys.append((e.head, e.tail))
                for key in keys:
                    if key in self._pair_index:
                        raise ContractViolation(f"duplicate edge {key}")
                    self._pair_index[key] = k
                out_e[e.tail].append(k)
                in_e[e.head].append(k)
                if kind == UNDIRECTED:
                    out_e[e.head].append(k)
                    in_e[e.tail].append(k)

        self.in_edges: tuple[tuple[int, ...], ...] = tuple(tuple(x) for x in in_e)
        self.out_edges: tuple[tuple[int, ...], ...] = tuple(tuple(x) for x in out_e)

        succ: list[set[int]] = [set() for _ in range(n)]
        pred: list[set[int]] = [set() for _ in range(n)]
        for e in self.edges:
            tails, heads = self.ends(e)
            for u in tails:
                succ[u].update(heads)
            for v in heads:
                pred[v].update(tails)
            if kind == UNDIRECTED:
                succ[e.head].add(e.tail)
                pred[e.tail].add(e.head)
        self.successors: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in succ)
        self.predecessors: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in pred)

    @staticmethod
    def _check_node(v: int, n: int) -> None:
        if not 0 <= v < n:
            raise ContractViolation(f"node id {v} out of range 0..{n - 1}")

    @staticmethod
    def _check_weight(k: int, w: Fraction) -> None:
        if w <= 0:
            raise ContractViolation(f"edge {k} has non-positive weight {w}")

    @staticmethod
    def ends(e: Edge | Hyperedge) -> tuple[tuple[int, ...], tuple[int, ...]]:
        if isinstance(e, Hyperedge):
            return e.tail, e.head
        return (e.tail,), (e.head,)

    @property
    def n_nodes(self) -> int:
        return len(self.labels)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def directed(self) -> bool:
        return self.kind != UNDIRECTED

    @property
    def is_graph(self) -> bool:
        return self.kind != HYPERGRAPH

    def node_id(self, label: str) -> int:
        return self._label_index[label]

    def edge_id(self, e: int | Edge | tuple[int, int]) -> int:
        """Resolve an edge given by index, ``Edge`` or ``(tail, head)`` pair."""
        if isinstance(e, int):
            if not 0 <= e < len(self.edges):
                raise KeyError(f"edge index {e} not in network")
            return e
        if isinstance(e, Hyperedge):
            try:
                return self.edges.index(e)
            except ValueError:
                raise KeyError(f"hyperedge {e} not in network") from None
        key = (e.tail, e.head) if isinstance(e, Edge) else tuple(e)
        try:
            return self._pair_index[key]
        except KeyError:
            raise KeyError(f"edge {key} not in network") from None

    def incident(self, v: int) -> tuple[int, ...]:
        """Edges touching ``v`` in any role (undirected incidence list)."""
        if self.kind == UNDIRECTED:
            return self.out_edges[v]
        return tuple(sorted(set(self.in_edges[v]) | set(self.out_edges[v])))

    def degree(self, v: int) -> int:
        return len(self.incident(v))

    def out_degree(self, v: int) -> int:
        return len(self.out_edges[v])

    def in_degree(self, v: int) -> int:
        return len(self.in_edges[v])

    def __repr__(self) -> str:
        return f"Network({self.kind}, n_nodes={self.n_nodes}, n_edges={self.n_edges})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Network):
            return NotImplemented
        return (
            self.kind == other.kind
            and self.labels == other.labels
            and self.edges == other.edges
            and self.weighted == other.weighted
        )

    __hash__ = None  # type: ignore[assignment]


# --------------------------------------------------------------------------
# builders / parsers


class _Interner:
    def __init__(self) -> None:
        self.labels: list[str] = []
        self.index: dict[str, int] = {}

    def __call__(self, label: str) -> int:
        i = self.index.get(label)
        if i is None:
            i = self.index[label] = len(self.labels)
            self.labels.append(label)
        return i


def _content_lines(text: str | Iterable[str]) -> Iterable[tuple[int, str]]:
    lines = text.splitlines() if isinstance(text, str) else text
    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\r\n").strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _parse_weight(token: str, lineno: int) -> Fraction:
    try:
        w = Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise NetworkParseError(f"bad weight {token!r}", lineno) from None
    if w <= 0:
        raise NetworkParseError(f"non-positive weight {token!r}", lineno)
    return w


def _graph_kind(kind: str) -> str:
    if kind in ("undirected", UNDIRECTED):
        return UNDIRECTED
    if kind in ("directed", DIRECTED):
        return DIRECTED
    raise ValueError(f"graph kind must be 'undirected' or 'directed', got {kind!r}")


def from_edges(
    pairs: Iterable[tuple],
    kind: str = "undirected",
    weighted: bool = False,
) -> Network:
    """Build a simple graph from ``(u, v)`` or ``(u, v, w)`` label tuples.

    Duplicate pairs are merged with weights summed and self-loops are dropped;
    both are counted in ``Network.stats``.
    """
    net_kind = _graph_kind(kind)
    intern = _Interner()
    weights: dict[tuple[int, int], Fraction] = {}
    dups = loops = 0
    for p in pairs:
        if str(p[0]) == str(p[1]):
            loops += 1  # a node seen only in self-loops is not created
            continue
        u, v = intern(str(p[0])), intern(str(p[1]))
        w = Fraction(p[2]) if len(p) > 2 else ONE
        key = (u, v)
        if net_kind == UNDIRECTED and (v, u) in weights:
            key = (v, u)
        if key in weights:
            dups += 1
            weights[key] += w
        else:
            weights[key] = w
    if dups or loops:
        log.warning("collapsed %d duplicate edge(s), dropped %d self-loop(s)", dups, loops)
    edges = [Edge(u, v, w) for (u, v), w in weights.items()]
    return Network(net_kind, intern.labels, edges, weighted, ParseStats(dups, loops))


def parse_edge_list(
    text: str | Iterable[str], kind: str = "undirected", weighted: bool = False
) -> Network:
    """Parse whitespace-separated ``u v`` / ``u v w`` lines.

    An explicit weight on an unweighted parse is an error rather than being
    silently ignored. See :func:`from_edges` for the collapse rules.
    """
    _graph_kind(kind)
    rows = []
    for lineno, line in _content_lines(text):
        tok = line.split()
        if len(tok) == 3 and weighted:
            rows.append((tok[0], tok[1], _parse_weight(tok[2], lineno)))
        elif len(tok) == 2:
            rows.append((tok[0], tok[1]))
        else:
            expect = "2 or 3" if weighted else "2"
            raise NetworkParseError(f"expected {expect} tokens, got {len(tok)}", lineno)
    return from_edges(rows, kind, weighted)


def _parse_side(side: str, lineno: int, intern: _Interner) -> tuple[int, ...]:
    side = side.strip()
    if not side:
        return ()
    out: list[int] = []
    for tok in side.split(","):
        tok = tok.strip()
        if not tok or any(c.isspace() for c in tok):
            raise NetworkParseError(f"bad node token {tok!r}", lineno)
        i = intern(tok)
        if i not in out:
            out.append(i)
    return tuple(out)


def parse_hyperedges(
    text: str | Iterable[str], split_reversible: bool = False
) -> Network:
    """Parse ``T1,T2 -> H1,H2 | label`` lines into a directed hypergraph.

    ``<->`` marks a reversible reaction; it is only accepted with
    ``split_reversible=True`` and then yields a forward hyperedge labelled
    ``label`` followed by a reverse one labelled ``label:rev``. Unlabelled
    lines get ``e<line number>``.
    """
    intern = _Interner()
    edges: list[Hyperedge] = []
    for lineno, line in _content_lines(text):
        body, _, label = line.partition("|")
        label = label.strip() or f"e{lineno}"
        if "<->" in body:
            if not split_reversible:
                raise NetworkParseError(
                    "reversible '<->' requires split_reversible (--split-reversible)", lineno
                )
            lhs, _, rhs = body.partition("<->")
            reversible = True
        elif "->" in body:
            lhs, _, rhs = body.partition("->")
            reversible = False
        else:
            raise NetworkParseError("missing '->' or '<->'", lineno)
        if "->" in rhs or "<-" in rhs:
            raise NetworkParseError("more than one arrow", lineno)
        tail = _parse_side(lhs, lineno, intern)
        head = _parse_side(rhs, lineno, intern)
        if not tail and not head:
            raise NetworkParseError("both sides empty", lineno)
        edges.append(Hyperedge(tail, head, ONE, label))
        if reversible:
            edges.append(Hyperedge(head, tail, ONE, f"{label}:rev"))
    return Network(HYPERGRAPH, intern.labels, edges)


def to_edge_list(net: Network) -> str:
    """Serialize a graph in the format read by :func:`parse_edge_list`."""
    if not net.is_graph:
        raise ContractViolation("to_edge_list needs a graph")
    lab = net.labels
    lines = []
    for e in net.edges:
        row = f"{lab[e.tail]} {lab[e.head]}"
        if net.weighted:
            row += f" {e.weight}"
        lines.append(row)
    return "\n".join(lines) + "\n"


def to_hyperedge_text(net: Network) -> str:
    """Serialize a hypergraph, one directed hyperedge per line (no ``<->``)."""
    if net.is_graph:
        raise ContractViolation("to_hyperedge_text needs a hypergraph")
    lab = net.labels
    return "".join(
        f"{','.join(lab[v] for v in h.tail)} -> {','.join(lab[v] for v in h.head)} | {h.label}\n"
        for h in net.edges
    )


# --------------------------------------------------------------------------
# connectivity


def components(net: Network) -> list[list[int]]:
    """Weakly connected vertex sets, each sorted, ordered by smallest id.

    Hyperedges connect all of their tail and head vertices.
    """
    nbrs = [set(net.successors[v]) | net.predecessors[v] for v in range(net.n_nodes)]
    if not net.is_graph:
        for h in net.edges:
            members = h.tail + h.head
            for v in members:
                nbrs[v].update(members)
    seen = [False] * net.n_nodes
    comps = []
    for s in range(net.n_nodes):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for x in nbrs[u]:
                if not seen[x]:
                    seen[x] = True
                    comp.append(x)
                    queue.append(x)
        comps.append(sorted(comp))
    return comps


def induced_subnetwork(net: Network, nodes: Iterable[int]) -> Network:
    """Subgraph on ``nodes`` with ids re-densified in ascending original order."""
    keep = sorted(set(nodes))
    remap = {old: new for new, old in enumerate(keep)}
    edges = [
        Edge(remap[e.tail], remap[e.head], e.weight)
        for e in net.edges
        if e.tail in remap and e.head in remap
    ]
    return Network(net.kind, [net.labels[v] for v in keep], edges, net.weighted, net.stats)


def largest_component(net: Network) -> Network:
    """The giant (weakly connected) component of a graph.

    Ties go to the component containing the smallest node id.
    """
    if not net.is_graph:
        raise ContractViolation("component extraction is only defined for graphs")
    if net.n_nodes == 0:
        raise ContractViolation("empty network has no components")
    comps = components(net)
    best = max(comps, key=len)  # first maximal one == smallest minimum id
    if len(best) == net.n_nodes:
        return net
    return induced_subnetwork(net, best)


# --------------------------------------------------------------------------
# hop distances


def hop_distance(net: Network, u: int, v: int, max_depth: int = 3) -> int | None:
    """Directed hop count from ``u`` to ``v`` by breadth-first search.

    One hop follows one (hyper)edge from any tail vertex to any head vertex
    (both directions for undirected graphs). Returns ``None`` when ``v`` is
    not reached within ``max_depth`` hops.
    """
    if u == v:
        return 0
    succ = net.successors
    seen = {u}
    frontier = [u]
    for depth in range(1, max_depth + 1):
        nxt = []
        for x in frontier:
            for y in succ[x]:
                if y == v:
                    return depth
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
        if not frontier:
            break
    return None


def bridged_distances(
    net: Network,
    sources: Sequence[int],
    targets: Sequence[int],
    entry: Iterable[int],
    exit: Iterable[int],
) -> list[list[int]]:
    """Depth-3 truncated hop distances between all ``sources`` x ``targets``.

    ``entry``/``exit`` are the two sides of the (hyper)edge being evaluated:
    every source lies in ``entry`` or one hop before it, every target lies in
    ``exit`` or one hop after it, so ``source -> entry -> exit -> target`` is a
    route of length at most 3 and deeper search is never needed. That
    precondition is checked per pair that is not resolved at depth 2.
    """
    succ, pred = net.successors, net.predecessors
    entry, exit = frozenset(entry), frozenset(exit)
    rows = []
    for a in sources:
        s1 = succ[a]
        a_ok: bool | None = None
        row = []
        for b in targets:
            if a == b:
                row.append(0)
            elif b in s1:
                row.append(1)
            elif not s1.isdisjoint(pred[b]):
                row.append(2)
            else:
                if a_ok is None:
                    a_ok = a in entry or not s1.isdisjoint(entry)
                if not (a_ok and (b in exit or not pred[b].isdisjoint(exit))):
                    raise AssertionError(f"pair ({a}, {b}) is not within 3 hops via the edge")
                row.append(3)
        rows.append(row)
    return rows
