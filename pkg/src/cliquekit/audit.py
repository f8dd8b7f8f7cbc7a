"""Audit harness: the merge algorithm and the oracles, side by side.

Every audited graph produces one record comparing the two clique sets by
canonical form. Soundness and maximality violations fail loudly downstream;
missed and spurious counts are measured and reported, never thresholded.
Reports are CSV (fixed column order, diff-able) and JSON; wall times are
only written when timing is switched on so that default reports are
byte-identical across runs.
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field, asdict
from pathlib import Path

import numpy as np

from .calc import CalcOptions, do_calculation
from .dimacs import parse_dimacs_edge, write_dimacs_edge
from .generators import (
    GeneratorSpec,
    generate,
    gnp_corpus,
    parse_generator_spec,
    prng_stream,
)
from .graph import Graph, is_clique, is_maximal_clique
from .oracles import bron_kerbosch_pivot
from .pairmerge import KEY_STRATEGIES, MergeOptions

DEFAULT_ORACLE_MAX_NODES = 128

CSV_COLUMNS = (
    "descriptor",
    "n",
    "m",
    "paper_clique_count",
    "oracle_clique_count",
    "soundness_violations",
    "maximality_violations",
    "missed_cliques",
    "spurious_cliques",
    "paper_max_size",
    "oracle_max_size",
    "phase1_ops",
    "phase2_ops",
    "paper_time_s",
    "oracle_time_s",
)

SCALING_CSV_COLUMNS = ("n", "phase1_ops", "phase2_ops", "wall_time_s")


@dataclass
class AuditRecord:
    descriptor: str
    n: int
    m: int
    paper_clique_count: int
    oracle_clique_count: int
    soundness_violations: int
    maximality_violations: int
    missed_cliques: int
    spurious_cliques: int
    paper_max_size: int
    oracle_max_size: int
    phase1_ops: int
    phase2_ops: int
    paper_time: float
    oracle_time: float


@dataclass
class ScalingRecord:
    n: int
    phase1_ops: int
    phase2_ops: int
    wall_time: float


@dataclass
class ScalingResult:
    records: list[ScalingRecord]
    phase1_slope: float
    phase2_slope: float


def audit_graph(
    g: Graph,
    opts: CalcOptions | None = None,
    *,
    descriptor: str = "",
    oracle_max_nodes: int = DEFAULT_ORACLE_MAX_NODES,
) -> AuditRecord:
    """Run the merge algorithm and the enumeration oracle on one graph."""
    if g.node_count > oracle_max_nodes:
        raise ValueError(
            f"graph has {g.node_count} nodes, above the {oracle_max_nodes}-node "
            "oracle cap"
        )
    opts = opts or CalcOptions()

    t0 = time.perf_counter()
    result = do_calculation(g, opts)
    t1 = time.perf_counter()
    oracle_set = bron_kerbosch_pivot(g)
    t2 = time.perf_counter()

    paper_set = result.all_cliques
    soundness = sum(1 for c in paper_set if not is_clique(g, c))
    maximality = sum(
        1 for c in paper_set if is_clique(g, c) and not is_maximal_clique(g, c)
    )
    return AuditRecord(
        descriptor=descriptor,
        n=g.node_count,
        m=g.edge_count,
        paper_clique_count=len(paper_set),
        oracle_clique_count=len(oracle_set),
        soundness_violations=soundness,
        maximality_violations=maximality,
        missed_cliques=len(oracle_set - paper_set),
        spurious_cliques=len(paper_set - oracle_set),
        paper_max_size=len(result.largest) if result.largest else 0,
        oracle_max_size=max((len(c) for c in oracle_set), default=0),
        phase1_ops=result.counters.phase1_ops,
        phase2_ops=result.counters.phase2_ops,
        paper_time=t1 - t0,
        oracle_time=t2 - t1,
    )


# ---------------------------------------------------------------------------
# campaigns


@dataclass
class CampaignConfig:
    """Parsed campaign description (flat key-value text file).

    Keys: ``instances`` (whitespace-separated generator specs or
    ``file:<path>`` entries), sweep keys ``family``/``trials``/``n``/``p``/
    ``seed`` (family ``gnp`` only), output keys ``csv``/``json``/``plots``,
    and knobs ``timing``, ``include_singletons``, ``key_strategy``,
    ``oracle_max_nodes``.
    """

    instances: list[str] = field(default_factory=list)
    family: str | None = None
    trials: int = 0
    n_range: tuple[int, int] = (4, 12)
    p_values: tuple[float, ...] = (0.3, 0.5, 0.7)
    seed: int = 0
    csv_path: str | None = None
    json_path: str | None = None
    plots_dir: str | None = None
    timing: bool = False
    include_singletons: bool = True
    key_strategy: str = "first-of-pair"
    oracle_max_nodes: int = DEFAULT_ORACLE_MAX_NODES


@dataclass
class CampaignResult:
    records: list[AuditRecord]
    summary: dict
    csv_path: str | None = None
    json_path: str | None = None
    witness_path: str | None = None
    violation_path: str | None = None


def _parse_bool(raw: str, key: str) -> bool:
    lowered = raw.strip().lower()
    if lowered in ("true", "yes", "1", "on"):
        return True
    if lowered in ("false", "no", "0", "off"):
        return False
    raise ValueError(f"config key {key!r} wants a boolean, got {raw!r}")


def parse_campaign_config(text: str) -> CampaignConfig:
    """Parse ``key = value`` lines; '#' starts a comment."""
    cfg = CampaignConfig()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, eq, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not eq or not key or not value:
            raise ValueError(f"config line {lineno}: expected 'key = value', got {raw!r}")
        if key == "instances":
            cfg.instances.extend(value.split())
        elif key == "family":
            if value != "gnp":
                raise ValueError(
                    f"config line {lineno}: only the 'gnp' family sweeps; "
                    "list other graphs under 'instances'"
                )
            cfg.family = value
        elif key == "trials":
            cfg.trials = int(value)
        elif key == "n":
            lo, sep, hi = value.partition("..")
            cfg.n_range = (int(lo), int(hi)) if sep else (int(value), int(value))
        elif key == "p":
            cfg.p_values = tuple(float(v) for v in value.replace(",", " ").split())
        elif key == "seed":
            cfg.seed = int(value)
        elif key == "csv":
            cfg.csv_path = value
        elif key == "json":
            cfg.json_path = value
        elif key == "plots":
            cfg.plots_dir = value
        elif key == "timing":
            cfg.timing = _parse_bool(value, key)
        elif key == "include_singletons":
            cfg.include_singletons = _parse_bool(value, key)
        elif key == "key_strategy":
            if value not in KEY_STRATEGIES:
                raise ValueError(
                    f"config line {lineno}: key_strategy must be one of {KEY_STRATEGIES}"
                )
            cfg.key_strategy = value
        elif key == "oracle_max_nodes":
            cfg.oracle_max_nodes = int(value)
        else:
            raise ValueError(f"config line {lineno}: unknown key {key!r}")
    if not cfg.instances and not (cfg.family and cfg.trials > 0):
        raise ValueError("campaign config lists no instances and no sweep")
    return cfg


def _load_instance(entry: str) -> tuple[Graph, str]:
    if entry.startswith("file:"):
        path = entry[len("file:") :]
        graph = parse_dimacs_edge(Path(path).read_text(encoding="utf-8"))
        return graph, entry
    spec = parse_generator_spec(entry)
    graph, _names = generate(spec)
    return graph, spec.descriptor()


def _campaign_instances(cfg: CampaignConfig) -> list[tuple[Graph, str]]:
    loaded = [_load_instance(entry) for entry in cfg.instances]
    if cfg.family and cfg.trials > 0:
        for spec in gnp_corpus(cfg.trials, cfg.n_range, cfg.p_values, cfg.seed):
            graph, _names = generate(spec)
            loaded.append((graph, spec.descriptor()))
    return loaded


def _format_time(value: float, timing: bool) -> str:
    return f"{value:.6f}" if timing else ""


def records_to_csv(records: list[AuditRecord], timing: bool = False) -> str:
    """Render audit records in the fixed CSV column order."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in records:
        writer.writerow(
            [
                r.descriptor,
                r.n,
                r.m,
                r.paper_clique_count,
                r.oracle_clique_count,
                r.soundness_violations,
                r.maximality_violations,
                r.missed_cliques,
                r.spurious_cliques,
                r.paper_max_size,
                r.oracle_max_size,
                r.phase1_ops,
                r.phase2_ops,
                _format_time(r.paper_time, timing),
                _format_time(r.oracle_time, timing),
            ]
        )
    return buf.getvalue()


def summarize_records(records: list[AuditRecord]) -> dict:
    return {
        "instances": len(records),
        "soundness_violations": sum(r.soundness_violations for r in records),
        "maximality_violations": sum(r.maximality_violations for r in records),
        "total_missed_cliques": sum(r.missed_cliques for r in records),
        "total_spurious_cliques": sum(r.spurious_cliques for r in records),
        "instances_with_missed": sum(1 for r in records if r.missed_cliques > 0),
        "max_size_matches": sum(
            1 for r in records if r.paper_max_size == r.oracle_max_size
        ),
    }


def records_to_json(
    records: list[AuditRecord], summary: dict, timing: bool = False
) -> str:
    payload = {"records": [], "summary": summary}
    for r in records:
        row = asdict(r)
        if not timing:
            row["paper_time"] = None
            row["oracle_time"] = None
        payload["records"].append(row)
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def run_audit_campaign(cfg: CampaignConfig) -> CampaignResult:
    """Audit every configured instance and write the configured reports.

    Also archives witnesses: the smallest instance whose maximal-clique set
    diverged from the oracle, and any instance with a soundness or
    maximality violation, are written next to the CSV as DIMACS reproducers.
    """
    instances = _campaign_instances(cfg)
    opts = CalcOptions(
        merge=MergeOptions(key_node_strategy=cfg.key_strategy),
        include_singletons=cfg.include_singletons,
    )
    records: list[AuditRecord] = []
    divergent: tuple[tuple[int, int], Graph, str] | None = None
    violating: tuple[Graph, str] | None = None
    for graph, descriptor in instances:
        record = audit_graph(
            graph, opts, descriptor=descriptor, oracle_max_nodes=cfg.oracle_max_nodes
        )
        records.append(record)
        if record.missed_cliques > 0:
            rank = (record.n, record.m)
            if divergent is None or rank < divergent[0]:
                divergent = (rank, graph, descriptor)
        if (
            violating is None
            and record.soundness_violations + record.maximality_violations > 0
        ):
            violating = (graph, descriptor)

    summary = summarize_records(records)
    result = CampaignResult(records=records, summary=summary)

    if cfg.csv_path:
        csv_file = Path(cfg.csv_path)
        csv_file.parent.mkdir(parents=True, exist_ok=True)
        csv_file.write_text(records_to_csv(records, cfg.timing), encoding="utf-8")
        result.csv_path = str(csv_file)
        if divergent is not None:
            witness = csv_file.with_suffix(".witness.col")
            _rank, graph, descriptor = divergent
            witness.write_text(
                f"c smallest instance with missed maximal cliques\n"
                f"c descriptor: {descriptor}\n" + write_dimacs_edge(graph),
                encoding="utf-8",
            )
            result.witness_path = str(witness)
        if violating is not None:
            reproducer = csv_file.with_suffix(".violation.col")
            graph, descriptor = violating
            reproducer.write_text(
                f"c instance with soundness/maximality violations\n"
                f"c descriptor: {descriptor}\n" + write_dimacs_edge(graph),
                encoding="utf-8",
            )
            result.violation_path = str(reproducer)
    if cfg.json_path:
        json_file = Path(cfg.json_path)
        json_file.parent.mkdir(parents=True, exist_ok=True)
        json_file.write_text(
            records_to_json(records, summary, cfg.timing), encoding="utf-8"
        )
        result.json_path = str(json_file)
    if cfg.plots_dir:
        from . import plots  # matplotlib import deferred until needed

        plots.render_audit_figure(records, Path(cfg.plots_dir) / "audit.png")
    return result


# ---------------------------------------------------------------------------
# scaling


SCALING_FAMILIES = ("complete", "gnp", "moon_moser")


def _scaling_graph(family: str, n: int, p: float, seed: int) -> Graph:
    if family == "complete":
        spec = GeneratorSpec(kind="complete", n=n)
    elif family == "gnp":
        spec = GeneratorSpec(kind="gnp", n=n, p=p, seed=seed)
    elif family == "moon_moser":
        if n % 3 != 0:
            raise ValueError("moon_moser sizes must be multiples of 3")
        spec = GeneratorSpec(kind="moon_moser", k=n // 3)
    else:
        raise ValueError(f"unknown scaling family {family!r}; expected one of "
                         f"{SCALING_FAMILIES}")
    graph, _names = generate(spec)
    return graph


def _loglog_slope(sizes: list[int], ops: list[int]) -> float:
    if any(v <= 0 for v in ops):
        return float("nan")
    return float(np.polyfit(np.log(sizes), np.log(ops), 1)[0])


def run_scaling(
    family: str,
    sizes: list[int],
    opts: CalcOptions | None = None,
    *,
    p: float = 0.5,
    seed: int = 0,
) -> ScalingResult:
    """Measure operation counters across sizes and fit log-log slopes.

    Counters, not wall time, are the scaling signal; wall time is recorded
    for context. At least three ascending sizes are required for a fit.
    """
    if len(sizes) < 3:
        raise ValueError("need at least 3 sizes to fit a slope")
    if any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise ValueError("sizes must be strictly ascending")
    opts = opts or CalcOptions()
    stream = prng_stream(seed)
    records = []
    for n in sizes:
        graph = _scaling_graph(family, n, p, next(stream))
        t0 = time.perf_counter()
        result = do_calculation(graph, opts)
        wall = time.perf_counter() - t0
        records.append(
            ScalingRecord(
                n=n,
                phase1_ops=result.counters.phase1_ops,
                phase2_ops=result.counters.phase2_ops,
                wall_time=wall,
            )
        )
    return ScalingResult(
        records=records,
        phase1_slope=_loglog_slope(sizes, [r.phase1_ops for r in records]),
        phase2_slope=_loglog_slope(sizes, [r.phase2_ops for r in records]),
    )


def scaling_to_csv(result: ScalingResult, timing: bool = True) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SCALING_CSV_COLUMNS)
    for r in result.records:
        writer.writerow(
            [r.n, r.phase1_ops, r.phase2_ops, _format_time(r.wall_time, timing)]
        )
    return buf.getvalue()
