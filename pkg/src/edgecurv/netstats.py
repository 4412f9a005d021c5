"""Network-level summaries: assortativity, histograms and descriptive statistics."""
from __future__ import annotations

import json
import math
import statistics
from bisect import bisect_right
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .batch import MEASURES, CurvatureRecord, format_decimal
from .errors import ContractViolation
from .network import DIRECTED, HYPERGRAPH, UNDIRECTED, Network, components

HIGH_OUT_DEGREE = 100


def assortativity(net: Network) -> float | None:
    """Degree assortativity (Pearson correlation over edges).

    Undirected graphs use full endpoint degrees over both orientations of
    every edge; directed graphs correlate the out-degree of the tail with the
    in-degree of the head. ``None`` when undefined (no edges or a constant
    marginal).
    """
    if net.kind == HYPERGRAPH:
        raise ContractViolation("assortativity is defined for graphs only")
    if net.n_edges == 0:
        return None
    if net.kind == UNDIRECTED:
        deg = [net.degree(v) for v in range(net.n_nodes)]
        a = [deg[e.tail] for e in net.edges]
        b = [deg[e.head] for e in net.edges]
        x, y = a + b, b + a
    else:
        x = [net.out_degree(e.tail) for e in net.edges]
        y = [net.in_degree(e.head) for e in net.edges]
    if min(x) == max(x) or min(y) == max(y):
        return None
    xa = np.asarray(x, dtype=float)
    ya = np.asarray(y, dtype=float)
    xa -= xa.mean()
    ya -= ya.mean()
    return float(np.dot(xa, ya) / math.sqrt(np.dot(xa, xa) * np.dot(ya, ya)))


@dataclass(frozen=True)
class Histogram:
    edges: tuple[Fraction, ...]
    counts: tuple[int, ...]
    underflow: int = 0
    overflow: int = 0

    @property
    def total(self) -> int:
        return sum(self.counts) + self.underflow + self.overflow


def integer_bins(values: Sequence[Fraction]) -> list[Fraction]:
    """Unit-width bins ``[k, k+1)`` spanning the observed range."""
    if not values:
        return [Fraction(0), Fraction(1)]
    lo, hi = math.floor(min(values)), math.floor(max(values))
    return [Fraction(k) for k in range(lo, hi + 2)]


def uniform_bins(lo: Fraction, hi: Fraction, width: Fraction) -> list[Fraction]:
    lo, hi, width = Fraction(lo), Fraction(hi), Fraction(width)
    if width <= 0 or hi <= lo:
        raise ValueError("need lo < hi and width > 0")
    n = math.ceil((hi - lo) / width)
    return [lo + k * width for k in range(n)] + [hi]


def ollivier_bins() -> list[Fraction]:
    return uniform_bins(Fraction(-2), Fraction(1), Fraction(1, 20))


def histogram(values: Sequence[Fraction], bins: Sequence[Fraction] | str) -> Histogram:
    """Bin ``values``; bins are left-closed and right-open except the last.

    ``bins`` is an ascending edge list or ``"integer"`` for unit bins over the
    data range.
    """
    if isinstance(bins, str):
        if bins != "integer":
            raise ValueError(f"unknown bin mode {bins!r}")
        bins = integer_bins(values)
    edges = tuple(Fraction(b) for b in bins)
    if len(edges) < 2:
        raise ValueError("need at least one bin (two edges)")
    if any(b <= a for a, b in zip(edges, edges[1:])):
        raise ValueError("bin edges must be strictly ascending")
    counts = [0] * (len(edges) - 1)
    under = over = 0
    for x in values:
        if x < edges[0]:
            under += 1
        elif x > edges[-1]:
            over += 1
        elif x == edges[-1]:
            counts[-1] += 1
        else:
            counts[bisect_right(edges, x) - 1] += 1
    return Histogram(edges, tuple(counts), under, over)


@dataclass(frozen=True)
class MeasureStats:
    count: int
    min: Fraction
    max: Fraction
    mean: Fraction
    median: Fraction


@dataclass
class SummaryReport:
    kind: str
    n_nodes: int
    n_edges: int
    n_components: int
    giant_nodes: int
    assortativity: float | None
    measures: dict[str, MeasureStats] = field(default_factory=dict)
    ddiff_zero: int | None = None
    ollivier_undefined: int = 0
    high_out_degree: int | None = None
    duplicates_merged: int = 0
    self_loops_dropped: int = 0

    def items(self) -> list[tuple[str, str]]:
        """Flat ``(key, value)`` pairs in a fixed order."""
        rows = [
            ("kind", self.kind),
            ("n_nodes", str(self.n_nodes)),
            ("n_edges", str(self.n_edges)),
            ("n_components", str(self.n_components)),
            ("giant_component_nodes", str(self.giant_nodes)),
            ("assortativity", "undefined" if self.assortativity is None else f"{self.assortativity:.6f}"),
        ]
        if self.high_out_degree is not None:
            rows.append((f"vertices_out_degree_gt_{HIGH_OUT_DEGREE}", str(self.high_out_degree)))
        if self.ddiff_zero is not None:
            rows.append(("ddiff_zero_count", str(self.ddiff_zero)))
        for name, st in self.measures.items():
            rows.append((f"{name}_count", str(st.count)))
            for stat in ("min", "max", "mean", "median"):
                v = getattr(st, stat)
                rows.append((f"{name}_{stat}", f"{v} ({format_decimal(v)})"))
        if "ollivier" in self.measures or self.ollivier_undefined:
            rows.append(("ollivier_undefined", str(self.ollivier_undefined)))
        rows.append(("duplicates_merged", str(self.duplicates_merged)))
        rows.append(("self_loops_dropped", str(self.self_loops_dropped)))
        return rows

    def to_text(self) -> str:
        return "".join(f"{k}: {v}\n" for k, v in self.items())

    def to_json(self) -> str:
        doc = asdict(self)
        doc["measures"] = {
            name: {
                "count": st.count,
                **{
                    stat: {"exact": str(getattr(st, stat)), "decimal": float(getattr(st, stat))}
                    for stat in ("min", "max", "mean", "median")
                },
            }
            for name, st in self.measures.items()
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _stats(values: list[Fraction]) -> MeasureStats:
    return MeasureStats(
        len(values),
        min(values),
        max(values),
        sum(values, Fraction(0)) / len(values),
        Fraction(statistics.median(values)),
    )


def summarize(
    net: Network, records: Sequence[CurvatureRecord], measures: Sequence[str] = ()
) -> SummaryReport:
    """Descriptive statistics of ``net`` and its per-edge ``records``.

    ``measures`` names the measures that were requested, so that an Ollivier
    run where every hyperedge was undefined still reports the count.
    """
    if len(records) != net.n_edges or any(r.index != k for k, r in enumerate(records)):
        raise ContractViolation("records do not correspond to the network's edges")
    comps = components(net)
    report = SummaryReport(
        kind=net.kind,
        n_nodes=net.n_nodes,
        n_edges=net.n_edges,
        n_components=len(comps),
        giant_nodes=max((len(c) for c in comps), default=0),
        assortativity=None if net.kind == HYPERGRAPH else assortativity(net),
        duplicates_merged=net.stats.duplicates,
        self_loops_dropped=net.stats.self_loops,
    )
    if net.kind == DIRECTED:
        report.high_out_degree = sum(
            1 for v in range(net.n_nodes) if net.out_degree(v) > HIGH_OUT_DEGREE
        )
    for name in MEASURES:
        vals = [getattr(r, name) for r in records if getattr(r, name) is not None]
        if vals:
            report.measures[name] = _stats(vals)
    ddiffs = [r.ddiff for r in records if r.ddiff is not None]
    if ddiffs:
        report.ddiff_zero = sum(1 for d in ddiffs if d == 0)
    if "ollivier" in measures or "ollivier" in report.measures:
        report.ollivier_undefined = sum(1 for r in records if r.ollivier is None)
    return report
