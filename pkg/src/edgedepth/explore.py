"""Sweeps over small graphs: bounds vs. oracle depth, one JSONL record per (graph, t)."""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import IO, Iterable

from . import __version__
from .bounds import bound_report
from .enumeration import MAX_N, canonical_key, enumerate_connected_graphs
from .graphs import Graph, builtin, edge_ideal
from .homology import Field
from .monomials import ideal_power
from .oracle import (DEFAULT_LATTICE_CAP, DEFAULT_SOCLE_BUDGET, LATTICE, STRATEGIES, OracleBudgetError,
                     socle_depth_zero)

RUNTIME_FIELDS = ("runtime_ms",)


@dataclass(frozen=True)
class RunConfig:
    """Sweep settings.

    `family` is "connected" (every connected class with min_n <= n <= max_n)
    or a comma-separated list of built-in ids such as "matching:2,matching:3".
    The sweep itself draws no random numbers, so `seed` only matters to
    callers that also run the sampled verification suites.
    """
    max_n: int = 5
    min_n: int = 3
    powers: tuple[int, ...] = (1, 2)
    field: str = "gf2"
    strategy: str = LATTICE
    lattice_cap: int = DEFAULT_LATTICE_CAP
    socle_budget: int = DEFAULT_SOCLE_BUDGET
    jobs: int = 1
    seed: int = 0
    out: str | None = None
    budget_ms: float | None = None
    family: str = "connected"

    def __post_init__(self):
        if self.strategy not in STRATEGIES:
            raise ValueError(f"strategy must be one of {STRATEGIES}")
        Field.parse(self.field)
        if not self.powers or min(self.powers) < 1:
            raise ValueError("powers must be positive")
        if self.family == "connected" and self.max_n > MAX_N:
            raise ValueError(f"max_n is capped at {MAX_N}")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")


def parse_powers(text: str) -> tuple[int, ...]:
    """"2" -> (2,); "1..3" -> (1, 2, 3); "1,3" -> (1, 3)."""
    text = text.strip()
    if ".." in text:
        a, b = text.split("..", 1)
        lo, hi = int(a), int(b)
        if hi < lo:
            raise ValueError(f"empty power range {text!r}")
        return tuple(range(lo, hi + 1))
    return tuple(int(x) for x in text.split(","))


def graph_key(G: Graph) -> str:
    """Canonical key when n is within the enumeration cap, else the key of the
    given labelling (same format, not isomorphism invariant)."""
    if G.n <= MAX_N:
        return canonical_key(G)
    bits = "".join("1" if (i, j) in G.edges else "0" for i in range(G.n) for j in range(i + 1, G.n))
    return f"{G.n}:{bits}"


def sweep_graphs(config: RunConfig) -> list[Graph]:
    if config.family == "connected":
        out = []
        for n in range(max(config.min_n, 2), config.max_n + 1):
            out.extend(enumerate_connected_graphs(n))
        return out
    return [builtin(x.strip()) for x in config.family.split(",") if x.strip()]


def run_instance(G: Graph, t: int, config: RunConfig) -> dict:
    start = time.perf_counter()
    report = bound_report(G, t, with_oracle=True, field=Field.parse(config.field), strategy=config.strategy,
                          budget_ms=config.budget_ms, lattice_cap=config.lattice_cap)
    witness = None
    if report.oracle_depth == 0:
        try:
            z = socle_depth_zero(ideal_power(edge_ideal(G), t), G.n, budget=config.socle_budget)
            witness = None if z is None else z.to_str(G.vertex_names)
        except OracleBudgetError:
            witness = None
    runtime = (time.perf_counter() - start) * 1000
    rec = {
        "canonical_key": graph_key(G),
        "n": report.n,
        "edge_count": report.edge_count,
        "d": report.d,
        "p": report.p,
        "isolated": report.isolated,
        "bipartite": report.bipartite,
        "t": t,
    }
    for k, v in report.to_record().items():
        rec.setdefault(k, v)
    rec.update({
        "oracle_depth": report.oracle_depth,
        "sharp": report.sharp,
        "socle_witness": witness,
        "skip_reason": report.extra.get("skip_reason"),
        "graph_name": G.name or None,
        "strategy": config.strategy,
        "field": Field.parse(config.field).name,
        "runtime_ms": round(runtime, 3),
        "artifact_version": __version__,
    })
    return rec


def _task(args):
    G, t, config = args
    return run_instance(G, t, config)


def run_sweep(config: RunConfig) -> list[dict]:
    tasks = [(G, t, config) for G in sweep_graphs(config) for t in config.powers]
    # heaviest first so the pool's tail is short
    tasks.sort(key=lambda a: (-a[1], -len(a[0].edges)))
    if config.jobs == 1:
        records = [_task(a) for a in tasks]
    else:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            records = list(pool.map(_task, tasks, chunksize=1))
    records.sort(key=lambda r: (r["canonical_key"], r["t"], r["field"], r["strategy"]))
    return records


def write_jsonl(records: Iterable[dict], fh: IO[str]):
    for r in records:
        fh.write(json.dumps(r) + "\n")


def strip_runtime(line: str) -> str:
    rec = json.loads(line)
    for k in RUNTIME_FIELDS:
        rec.pop(k, None)
    return json.dumps(rec)


@dataclass
class SweepSummary:
    records: int = 0
    skipped: int = 0
    sharp: int = 0
    violations: list[dict] = field(default_factory=list)    # BUG rows
    candidates: list[dict] = field(default_factory=list)    # conjectural-rule failures

    def to_text(self) -> str:
        return (f"{self.records} records, {self.sharp} sharp, {self.skipped} skipped, "
                f"{len(self.violations)} bound violations, {len(self.candidates)} candidate counterexamples")


def summarize(records: Iterable[dict]) -> SweepSummary:
    s = SweepSummary()
    for r in records:
        s.records += 1
        s.skipped += r["status"] == "SKIPPED"
        s.sharp += bool(r["sharp"])
        if r["status"] == "BUG":
            s.violations.append(r)
        elif r["status"] == "CANDIDATE-COUNTEREXAMPLE":
            s.candidates.append(r)
    return s

