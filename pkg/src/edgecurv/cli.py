"""Command-line front end.

    edgecurv graph ppi.txt --giant-component --out results/
    edgecurv digraph trn.txt --measures forman,ddiff,ollivier
    edgecurv hypergraph inj661.rxn --split-reversible --threads 4

Writes ``edges.csv``, ``summary.txt``, ``summary.json`` and one
``hist_<measure>.csv`` per selected measure into ``--out``.
"""
from __future__ import annotations

import argparse
import csv
import io
import logging
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .batch import MEASURES, CurvatureRecord, check_measures, compute_records, format_decimal
from .errors import ContractViolation, NetworkParseError
from .netstats import Histogram, histogram, ollivier_bins, summarize, uniform_bins
from .network import Network, largest_component, parse_edge_list, parse_hyperedges

log = logging.getLogger("edgecurv")

EXIT_OK, EXIT_PARSE, EXIT_CONTRACT, EXIT_IO = 0, 1, 2, 3

CSV_COLUMNS = [
    "edge_id", "label", "tail", "head", "tail_size", "head_size",
    "forman", "forman_dec", "ddiff", "ddiff_dec", "ollivier", "ollivier_dec",
    "w1", "m0", "m1", "m2", "m3", "n_masses", "n_holes",
]  # fmt: skip


@dataclass
class RunConfig:
    subcommand: str
    input: Path
    out: Path = Path(".")
    weighted: bool = False
    split_reversible: bool = False
    giant_component: bool = False
    measures: tuple[str, ...] = MEASURES
    bins: dict[str, list[Fraction] | str] = field(default_factory=dict)
    include_self: bool = False
    threads: int = 1


def parse_bin_spec(text: str) -> tuple[str, list[Fraction] | str]:
    """``measure=integer``, ``measure=lo:hi:width`` or ``measure=e0,e1,...``."""
    name, sep, spec = text.partition("=")
    if not sep or name not in MEASURES:
        raise argparse.ArgumentTypeError(f"bad bin spec {text!r}; expected MEASURE=SPEC")
    try:
        if spec == "integer":
            return name, "integer"
        if ":" in spec:
            lo, hi, width = (Fraction(p) for p in spec.split(":"))
            return name, uniform_bins(lo, hi, width)
        return name, [Fraction(p) for p in spec.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad bin spec {text!r}: {exc}") from None


def default_bins(measure: str) -> list[Fraction] | str:
    return ollivier_bins() if measure == "ollivier" else "integer"


def _cell(x: Fraction | int | None) -> str:
    return "" if x is None else str(x)


def _dec(x: Fraction | None) -> str:
    return "" if x is None else format_decimal(x)


def records_csv(records: Sequence[CurvatureRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in records:
        m = r.m or (None,) * 4
        w.writerow([
            r.index, r.label, ";".join(r.tail), ";".join(r.head), r.tail_size, r.head_size,
            _cell(r.forman), _dec(r.forman), _cell(r.ddiff), _dec(r.ddiff),
            _cell(r.ollivier), _dec(r.ollivier), _cell(r.w1), *(_cell(x) for x in m),
            _cell(r.n_masses), _cell(r.n_holes),
        ])  # fmt: skip
    return buf.getvalue()


def histogram_csv(h: Histogram) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["bin", "lo", "hi", "count"])
    w.writerow(["underflow", "", h.edges[0], h.underflow])
    for i, c in enumerate(h.counts):
        w.writerow([i, h.edges[i], h.edges[i + 1], c])
    w.writerow(["overflow", h.edges[-1], "", h.overflow])
    return buf.getvalue()


def load_network(cfg: RunConfig) -> Network:
    text = cfg.input.read_text(encoding="utf-8")
    if cfg.subcommand == "hypergraph":
        if cfg.weighted:
            raise ContractViolation("the hyperedge line format carries no weights")
        if cfg.giant_component:
            raise ContractViolation("component extraction is not supported for hypergraphs")
        return parse_hyperedges(text, cfg.split_reversible)
    if cfg.split_reversible or cfg.include_self:
        raise ContractViolation("--split-reversible/--include-self apply to hypergraphs only")
    kind = "undirected" if cfg.subcommand == "graph" else "directed"
    net = parse_edge_list(text, kind, cfg.weighted)
    if cfg.giant_component:
        net = largest_component(net)
    return net


def run(cfg: RunConfig) -> int:
    try:
        net = load_network(cfg)
        measures = check_measures(net, cfg.measures)
        log.info("loaded %r", net)
        records = compute_records(net, measures, cfg.include_self, cfg.threads)
        report = summarize(net, records, measures)
        outputs = {
            "edges.csv": records_csv(records),
            "summary.txt": report.to_text(),
            "summary.json": report.to_json(),
        }
        for name in measures:
            vals = [getattr(r, name) for r in records if getattr(r, name) is not None]
            outputs[f"hist_{name}.csv"] = histogram_csv(
                histogram(vals, cfg.bins.get(name) or default_bins(name))
            )
        cfg.out.mkdir(parents=True, exist_ok=True)
        for fname, body in outputs.items():
            (cfg.out / fname).write_text(body, encoding="utf-8")
    except NetworkParseError as exc:
        print(f"edgecurv: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ContractViolation, ValueError) as exc:
        print(f"edgecurv: {exc}", file=sys.stderr)
        return EXIT_CONTRACT
    except OSError as exc:
        print(f"edgecurv: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="edgecurv", description="Edge curvatures of networks.")
    sub = p.add_subparsers(dest="subcommand", required=True)
    helps = {
        "graph": "undirected edge list",
        "digraph": "directed edge list",
        "hypergraph": "directed hyperedge lines 'a,b -> c | label'",
    }
    for name, h in helps.items():
        s = sub.add_parser(name, help=h)
        s.add_argument("input", type=Path)
        s.add_argument("-o", "--out", type=Path, default=Path("."), help="output directory")
        s.add_argument("--measures", default=",".join(MEASURES),
                       help="comma-separated subset of forman,ddiff,ollivier")  # fmt: skip
        s.add_argument("--bins", type=parse_bin_spec, action="append", default=[],
                       metavar="MEASURE=SPEC",
                       help="integer | lo:hi:width | e0,e1,... (repeatable)")  # fmt: skip
        s.add_argument("-j", "--threads", type=int, default=1, help="worker processes")
        s.add_argument("-v", "--verbose", action="store_true")
        if name == "hypergraph":
            s.add_argument("--split-reversible", action="store_true",
                           help="turn each '<->' line into forward and reverse hyperedges")  # fmt: skip
            s.add_argument("--include-self-incidence", dest="include_self", action="store_true",
                           help="count a hyperedge among its own neighbors")  # fmt: skip
        else:
            s.add_argument("--weighted", action="store_true", help="read a third weight column")
            s.add_argument("--giant-component", action="store_true",
                           help="restrict to the largest weakly connected component")  # fmt: skip
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    cfg = RunConfig(
        subcommand=args.subcommand,
        input=args.input,
        out=args.out,
        weighted=getattr(args, "weighted", False),
        split_reversible=getattr(args, "split_reversible", False),
        giant_component=getattr(args, "giant_component", False),
        measures=tuple(m.strip() for m in args.measures.split(",") if m.strip()),
        bins=dict(args.bins),
        include_self=getattr(args, "include_self", False),
        threads=max(1, args.threads),
    )
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
