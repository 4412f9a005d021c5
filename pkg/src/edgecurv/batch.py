"""Per-edge curvature records for a whole network, optionally across processes."""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import directed, hypergraph, undirected
from .errors import ContractViolation, CurvatureUndefined
from .network import DIRECTED, HYPERGRAPH, UNDIRECTED, Network

log = logging.getLogger(__name__)

MEASURES = ("forman", "ddiff", "ollivier")


@dataclass(frozen=True)
class CurvatureRecord:
    index: int
    label: str
    tail: tuple[str, ...]
    head: tuple[str, ...]
    forman: Fraction | None = None
    ddiff: Fraction | None = None
    ollivier: Fraction | None = None
    w1: Fraction | None = None
    m: tuple[Fraction, Fraction, Fraction, Fraction] | None = None
    n_masses: int | None = None
    n_holes: int | None = None

    @property
    def tail_size(self) -> int:
        return len(self.tail)

    @property
    def head_size(self) -> int:
        return len(self.head)


def check_measures(net: Network, measures: Iterable[str]) -> tuple[str, ...]:
    ms = tuple(m for m in MEASURES if m in set(measures))
    unknown = set(measures) - set(MEASURES)
    if unknown:
        raise ContractViolation(f"unknown measure(s): {', '.join(sorted(unknown))}")
    if "ollivier" in ms and net.weighted:
        raise ContractViolation("ollivier requires an unweighted network")
    return ms


def edge_record(
    net: Network, k: int, measures: Sequence[str] = MEASURES, include_self: bool = False
) -> CurvatureRecord:
    e = net.edges[k]
    tails, heads = net.ends(e)
    lab = net.labels
    fields: dict = {}
    if net.kind == UNDIRECTED:
        if "forman" in measures:
            fields["forman"] = undirected.forman(net, k)
        if "ddiff" in measures:
            fields["ddiff"] = undirected.degree_difference(net, k)
        if "ollivier" in measures:
            fields["ollivier"], plan = undirected.ollivier(net, k)
            fields["w1"], fields["m"] = plan.total_cost, plan.m
    elif net.kind == DIRECTED:
        if "forman" in measures:
            fields["forman"] = directed.forman_directed(net, k)
        if "ddiff" in measures:
            fields["ddiff"] = directed.directed_degree_difference(net, k)
        if "ollivier" in measures:
            fields["ollivier"], plan = directed.ollivier_directed(net, k)
            fields["w1"], fields["m"] = plan.total_cost, plan.m
    else:
        if "forman" in measures or "ddiff" in measures:
            ctx = hypergraph.hyperedge_context(net, k, include_self)
            if "forman" in measures:
                fields["forman"] = e.weight * (ctx.eta_in + ctx.eta_out) - ctx.deg_in - ctx.deg_out
            if "ddiff" in measures:
                fields["ddiff"] = ctx.deg_out - ctx.deg_in
        if "ollivier" in measures:
            try:
                r = hypergraph.ollivier_hyper_details(net, k, include_self)
            except CurvatureUndefined:
                pass
            else:
                fields.update(
                    ollivier=r.value,
                    w1=r.plan.total_cost,
                    m=r.plan.m,
                    n_masses=len(r.masses.reached),
                    n_holes=len(r.holes.reached),
                )
    label = e.label if net.kind == HYPERGRAPH else ""
    return CurvatureRecord(
        k, label, tuple(lab[v] for v in tails), tuple(lab[v] for v in heads), **fields
    )


# worker-process state, set once per process by the pool initializer
_state: tuple[Network, tuple[str, ...], bool] | None = None


def _init_worker(net: Network, measures: tuple[str, ...], include_self: bool) -> None:
    global _state
    _state = (net, measures, include_self)


def _run_chunk(bounds: tuple[int, int]) -> list[CurvatureRecord]:
    assert _state is not None
    net, measures, include_self = _state
    return [edge_record(net, k, measures, include_self) for k in range(*bounds)]


def compute_records(
    net: Network,
    measures: Iterable[str] = MEASURES,
    include_self: bool = False,
    workers: int = 1,
) -> list[CurvatureRecord]:
    """Records for every (hyper)edge, in edge order regardless of ``workers``."""
    ms = check_measures(net, measures)
    n = net.n_edges
    if workers <= 1 or n < 2:
        return [edge_record(net, k, ms, include_self) for k in range(n)]
    n_chunks = min(n, workers * 8)
    step = -(-n // n_chunks)
    chunks = [(lo, min(lo + step, n)) for lo in range(0, n, step)]
    log.info("computing %d records in %d chunks on %d workers", n, len(chunks), workers)
    with ProcessPoolExecutor(workers, initializer=_init_worker, initargs=(net, ms, include_self)) as ex:
        out: list[CurvatureRecord] = []
        for part in ex.map(_run_chunk, chunks):
            out.extend(part)
    return out


def format_decimal(x: Fraction, places: int = 6) -> str:
    """Exact round-half-even of a rational to ``places`` decimals."""
    q = round(x * 10**places)
    sign = "-" if q < 0 else ""
    q = abs(q)
    whole, frac = divmod(q, 10**places)
    return f"{sign}{whole}.{frac:0{places}d}"
