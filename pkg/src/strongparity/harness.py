"""Batch verification: run configuration, JSON-lines reports, and the four commands.

Each command returns ``(VerificationReport, exit_code)``; exit code 0 means
every assertion held, 1 means a finding (disagreement, violated invariant).
Usage and parse errors surface as ``GraphInputError`` and are mapped to exit
code 2 by the CLI.
"""

from __future__ import annotations

import json
import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Any, Callable, Iterable, Iterator, Sequence

from . import graph6
from .constructions import (
    all_labeled_graphs,
    build_counterexample,
    circular_ladder,
    complete_bipartite,
    complete_graph,
    random_3_edge_connected,
    random_graph,
)
from .errors import CapacityError, GraphInputError
from .graph import Graph, components_excluding, edge_connectivity, mask_to_set
from .strong import (
    Verdict,
    certify_no_factor,
    deficiency,
    extract_violating_X,
    has_spp_by_characterization,
    has_spp_by_definition,
    iter_deficiencies,
)

log = logging.getLogger(__name__)

MODES = ("characterization", "definition", "both")
SOURCES = ("exhaustive-labeled", "corpus", "random")
EXHAUSTIVE_MAX_N = 6
SCAN_MAX_N = 20


@dataclass
class RunConfig:
    max_n: int = 12
    edge_cap: int = 20
    jobs: int = 1
    deterministic: bool = False
    seed: int = 0
    corpus: list[str] = field(default_factory=list)
    cross_check: bool = False

    def __post_init__(self) -> None:
        for name in ("max_n", "edge_cap", "jobs"):
            if getattr(self, name) < 1:
                raise GraphInputError(f"{name} must be positive")

    @classmethod
    def load(cls, path: str | Path) -> "RunConfig":
        with open(path) as fh:
            data = json.load(fh)
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise GraphInputError(f"unknown config keys: {sorted(unknown)}")
        return cls(**data)

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


@dataclass
class GraphRecord:
    id: str
    n: int
    m: int
    graph6: str | None
    status: str = "ok"  # ok | finding | skipped | error
    verdicts: dict[str, str] = field(default_factory=dict)
    certificates: dict[str, dict[str, Any]] = field(default_factory=dict)
    agreement: bool | None = None
    details: dict[str, Any] = field(default_factory=dict)
    message: str | None = None
    elapsed: float | None = None
    edges: list[list[int]] | None = None

    def graph(self) -> Graph:
        if self.graph6 is not None:
            return graph6.decode(self.graph6)
        return Graph(self.n, self.edges or [])


@dataclass
class VerificationReport:
    command: str
    config: dict[str, Any]
    records: list[GraphRecord] = field(default_factory=list)
    counters: dict[str, int] = field(default_factory=dict)
    passed: bool = True
    summary: dict[str, Any] = field(default_factory=dict)

    def tally(self) -> None:
        c = {"graphs_processed": 0, "agreements": 0, "disagreements": 0,
             "findings": 0, "errors": 0, "skipped": 0}
        for r in self.records:
            c["graphs_processed"] += 1
            if r.agreement is True:
                c["agreements"] += 1
            elif r.agreement is False:
                c["disagreements"] += 1
            if r.status == "finding":
                c["findings"] += 1
            elif r.status == "error":
                c["errors"] += 1
            elif r.status == "skipped":
                c["skipped"] += 1
        self.counters = c
        self.passed = c["disagreements"] == 0 and c["findings"] == 0

    def lines(self) -> Iterator[str]:
        for r in self.records:
            yield json.dumps({"type": "record", **asdict(r)}, sort_keys=True)
        yield json.dumps(
            {"type": "aggregate", "command": self.command, "config": self.config,
             "counters": self.counters, "passed": self.passed, "summary": self.summary},
            sort_keys=True,
        )

    def to_jsonl(self) -> str:
        return "\n".join(self.lines()) + "\n"

    @classmethod
    def from_jsonl(cls, text: str) -> "VerificationReport":
        records = []
        agg = None
        for line in text.splitlines():
            if not line.strip():
                continue
            obj = json.loads(line)
            kind = obj.pop("type")
            if kind == "record":
                records.append(GraphRecord(**obj))
            elif kind == "aggregate":
                agg = obj
        if agg is None:
            raise GraphInputError("report has no aggregate line")
        return cls(agg["command"], agg["config"], records, agg["counters"], agg["passed"], agg["summary"])


def revalidate(record: GraphRecord) -> bool:
    """Recompute the deficiency of a stored characterization certificate."""
    cert = record.certificates.get("characterization")
    if not cert or cert["verdict"] != Verdict.LACKS_PROPERTY.value:
        return True
    return deficiency(record.graph(), cert["violating_T"]) == cert["deficiency_value"]


def _new_record(gid: str, G: Graph) -> GraphRecord:
    if G.n <= graph6.MAX_N:
        return GraphRecord(gid, G.n, G.m, graph6.encode(G))
    return GraphRecord(gid, G.n, G.m, None, edges=[list(e) for e in G.sorted_edges()])


def _map(fn: Callable[[Any], GraphRecord], items: Iterable[Any], cfg: RunConfig) -> list[GraphRecord]:
    if cfg.jobs == 1:
        return [fn(it) for it in items]
    with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
        return list(pool.map(fn, items, chunksize=64))


def _finish(report: VerificationReport, cfg: RunConfig) -> tuple[VerificationReport, int]:
    if cfg.deterministic:
        for r in report.records:
            r.elapsed = None
    report.tally()
    log.info("%s: %s", report.command, report.counters)
    return report, 0 if report.passed else 1


def _decide(item: tuple[str, Graph, str, RunConfig]) -> GraphRecord:
    gid, G, mode, cfg = item
    rec = _new_record(gid, G)
    start = time.perf_counter()
    if mode in ("characterization", "both"):
        cert = has_spp_by_characterization(G)
        rec.verdicts["characterization"] = cert.verdict.value
        rec.certificates["characterization"] = cert.to_dict()
    if mode in ("definition", "both"):
        try:
            cert = has_spp_by_definition(G, max_n=cfg.max_n, cross_check=cfg.cross_check, edge_cap=cfg.edge_cap)
        except CapacityError as exc:
            rec.status = "skipped"
            rec.message = str(exc)
        else:
            rec.verdicts["definition"] = cert.verdict.value
            rec.certificates["definition"] = cert.to_dict()
    if mode == "both" and len(rec.verdicts) == 2:
        rec.agreement = rec.verdicts["characterization"] == rec.verdicts["definition"]
        if not rec.agreement:
            rec.status = "finding"
            rec.message = "deciders disagree"
    if not revalidate(rec):
        rec.status = "finding"
        rec.message = "stored certificate does not re-validate"
    rec.elapsed = time.perf_counter() - start
    return rec


def cmd_check(graphs: Sequence[tuple[str, Graph]], mode: str = "both",
              cfg: RunConfig | None = None) -> tuple[VerificationReport, int]:
    cfg = cfg or RunConfig()
    if mode not in MODES:
        raise GraphInputError(f"mode must be one of {MODES}")
    report = VerificationReport("check", {**cfg.to_dict(), "mode": mode})
    report.records = _map(_decide, [(gid, G, mode, cfg) for gid, G in graphs], cfg)
    return _finish(report, cfg)


def load_graph_lines(lines: Iterable[str], prefix: str = "") -> list[tuple[str, Graph]]:
    """Parse graph6 lines into ``(id, graph)``; a bad line raises with its number."""
    return [(f"{prefix}{lineno}", G) for lineno, G in graph6.iter_lines(lines)]


def counterexample_summary(p: int) -> tuple[dict[str, Any], bool]:
    layout = build_counterexample(p)
    G, A = layout.graph, layout.A
    lam = edge_connectivity(G)
    c = len(components_excluding(G, A))
    dA = deficiency(G, A)
    X = extract_violating_X(G, A)
    eta_A = certify_no_factor(G, A, X)
    cert = has_spp_by_characterization(G)
    summary = {
        "p": p, "n": G.n, "m": G.m, "min_degree": G.min_degree(), "edge_connectivity": lam,
        "components_without_A": c, "deficiency_A": dA, "A": sorted(A), "X": sorted(X),
        "eta_empty_A": eta_A, "verdict": cert.verdict.value, "first_violating_T": sorted(cert.violating_T or ()),
        "graph6": graph6.encode(G) if G.n <= graph6.MAX_N else None,
    }
    checks = {
        "min_degree": G.min_degree() == 3,
        "edge_connectivity": lam == 2,
        "components_without_A": c == 3 * p // 2,
        "deficiency_A": dA == -p // 2,
        "verdict": cert.verdict is Verdict.LACKS_PROPERTY,
        "certificate": eta_A <= -1,
    }
    summary["checks"] = checks
    return summary, all(checks.values())


def cmd_gen_counterexample(p: int, out: str | Path | None = None,
                           cfg: RunConfig | None = None) -> tuple[dict[str, Any], int]:
    """Build the counterexample, optionally write its graph6, and re-validate its invariants."""
    summary, ok = counterexample_summary(p)
    if out is not None:
        if summary["graph6"] is None:
            raise GraphInputError(f"n = {summary['n']} exceeds the graph6 limit of {graph6.MAX_N}")
        Path(out).write_text(summary["graph6"] + "\n")
    return summary, 0 if ok else 1


def equivalence_items(source: str, max_n: int, min_n: int | None, seed: int,
                      samples: int, n: int | None, corpus: Sequence[str]) -> tuple[list[tuple[str, Graph]], list[GraphRecord]]:
    """Graphs for an equivalence run, plus error records for unparseable corpus lines."""
    if source not in SOURCES:
        raise GraphInputError(f"source must be one of {SOURCES}")
    items: list[tuple[str, Graph]] = []
    errors: list[GraphRecord] = []
    if source == "exhaustive-labeled":
        if max_n > EXHAUSTIVE_MAX_N:
            raise GraphInputError(f"exhaustive-labeled mode supports max_n <= {EXHAUSTIVE_MAX_N}")
        lo = max_n if min_n is None else min_n
        for order in range(lo, max_n + 1):
            items += [(f"L{order}:{i}", G) for i, G in enumerate(all_labeled_graphs(order))]
    elif source == "random":
        rng = random.Random(seed)
        order = max_n if n is None else n
        items = [(f"R{i}", random_graph(order, 0.5, rng)) for i in range(samples)]
    else:
        if not corpus:
            raise GraphInputError("corpus mode needs at least one graph6 file")
        for path in corpus:
            with open(path) as fh:
                for lineno, raw in enumerate(fh, start=1):
                    s = raw.strip()
                    if not s or s == graph6.HEADER:
                        continue
                    try:
                        items.append((f"{path}:{lineno}", graph6.decode(s)))
                    except GraphInputError as exc:
                        errors.append(GraphRecord(f"{path}:{lineno}", 0, 0, None, status="error", message=str(exc)))
    return items, errors


def cmd_verify_equivalence(max_n: int = 6, source: str = "exhaustive-labeled", seed: int = 0,
                           cfg: RunConfig | None = None, min_n: int | None = None,
                           samples: int = 200, n: int | None = None) -> tuple[VerificationReport, int]:
    cfg = cfg or RunConfig(max_n=max(max_n, n or 0))
    items, errors = equivalence_items(source, max_n, min_n, seed, samples, n, cfg.corpus)
    report = VerificationReport(
        "verify-equivalence",
        {**cfg.to_dict(), "source": source, "sweep_max_n": max_n, "min_n": min_n,
         "samples": samples, "n": n, "seed": seed},
    )
    report.records = errors + _map(_decide, [(gid, G, "both", cfg) for gid, G in items], cfg)
    return _finish(report, cfg)


def theorem3_family(kmax: int, samples: int, seed: int, max_order: int = 12) -> list[tuple[str, Graph]]:
    fam = [("K4", complete_graph(4)), ("K5", complete_graph(5)), ("K3,3", complete_bipartite(3, 3))]
    fam += [(f"CL{k}", circular_ladder(k)) for k in range(3, kmax + 1)]
    rng = random.Random(seed)
    for i in range(samples):
        order = rng.randint(6, max_order)
        fam.append((f"R3EC{i}", random_3_edge_connected(order, rng)))
    return fam


def _theorem3_check(item: tuple[str, Graph]) -> GraphRecord:
    gid, G = item
    rec = _new_record(gid, G)
    start = time.perf_counter()
    if G.n > SCAN_MAX_N:
        rec.status = "skipped"
        rec.message = f"exhaustive T scan capped at n = {SCAN_MAX_N}"
        return rec
    lam = edge_connectivity(G)
    best_t, best = 0, None
    def_viol = ineq_viol = scanned = 0
    for t, d, c, degsum in iter_deficiencies(G):
        scanned += 1
        if best is None or d < best:
            best, best_t = d, t
        def_viol += d < -1
        # every component of G - T sends >= 3 edges into a nonempty T
        ineq_viol += t != 0 and 3 * c > degsum
    rec.details = {
        "edge_connectivity": lam, "min_degree": G.min_degree(), "subsets_scanned": scanned,
        "min_deficiency": best, "argmin_T": sorted(mask_to_set(best_t)),
        "deficiency_violations": def_viol, "inequality_violations": ineq_viol,
    }
    rec.verdicts["characterization"] = (Verdict.HAS_PROPERTY if def_viol == 0 else Verdict.LACKS_PROPERTY).value
    if lam < 3:
        rec.status = "error"
        rec.message = "family member is not 3-edge-connected"
    elif def_viol or ineq_viol:
        rec.status = "finding"
        rec.message = "3-edge-connected graph violates the deficiency bound or the cut inequality"
    rec.elapsed = time.perf_counter() - start
    return rec


def cmd_theorem3_suite(kmax: int = 6, samples: int = 100, seed: int = 0,
                       cfg: RunConfig | None = None, max_order: int = 12) -> tuple[VerificationReport, int]:
    cfg = cfg or RunConfig(seed=seed)
    report = VerificationReport(
        "theorem3-suite", {**cfg.to_dict(), "kmax": kmax, "samples": samples, "seed": seed, "max_order": max_order}
    )
    report.records = _map(_theorem3_check, theorem3_family(kmax, samples, seed, max_order), cfg)
    report, code = _finish(report, cfg)
    if report.counters["errors"]:
        report.passed = False
        code = 1
    return report, code
