"""Command-line interface: solve, gen, audit, scale, sat.

Exit codes: 0 success (YES in decision modes), 1 NO in decision modes,
2 and above for errors.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .audit import (
    parse_campaign_config,
    run_audit_campaign,
    run_scaling,
    scaling_to_csv,
    SCALING_FAMILIES,
)
from .calc import CalcOptions, do_calculation, has_clique_of_size, per_node_report
from .dimacs import parse_dimacs_cnf, parse_dimacs_edge, write_dimacs_edge
from .generators import generate, parse_generator_spec
from .graph import Clique, Graph
from .oracles import brute_force_maximal_cliques, bron_kerbosch_pivot

ALGO_CHOICES = ("paper", "bk", "brute")


def _fail(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(2)


def _load_graph(
    input_path: str | None, gen_spec: str | None
) -> tuple[Graph, dict[int, str] | None, str]:
    if (input_path is None) == (gen_spec is None):
        _fail("provide exactly one of --input or --gen")
    if input_path is not None:
        try:
            text = Path(input_path).read_text(encoding="utf-8")
        except OSError as exc:
            _fail(str(exc))
        graph = parse_dimacs_edge(text)
        return graph, None, f"file:{input_path}"
    spec = parse_generator_spec(gen_spec)
    graph, names = generate(spec)
    return graph, names, spec.descriptor()


def _fmt_clique(clique: Clique, names: dict[int, str] | None) -> str:
    names = names or {}
    return "[" + ",".join(names.get(v, str(v)) for v in clique) + "]"


@click.group()
@click.version_option(package_name="cliquekit")
def main() -> None:
    """Clique toolkit: enumerate maximal cliques with a per-node two-phase
    merge algorithm, cross-check against oracles, and audit the results."""


@main.command()
@click.option("--input", "input_path", type=str, default=None,
              help="DIMACS edge file to solve.")
@click.option("--gen", "gen_spec", type=str, default=None,
              help="Generator spec, e.g. fig4a or gnp:n=10,p=0.5,seed=7.")
@click.option("--algo", type=click.Choice(ALGO_CHOICES), default="paper",
              show_default=True,
              help="paper: the two-phase merge algorithm under audit; "
                   "bk: Bron-Kerbosch oracle; brute: exhaustive subsets.")
@click.option("--k", type=int, default=None,
              help="Decision mode: exit 0 if a clique of size >= k exists "
                   "(per the chosen algorithm), else exit 1.")
@click.option("--list-maximal", is_flag=True, help="Print every maximal clique.")
@click.option("--per-node", "show_per_node", is_flag=True,
              help="Print each node's own clique calculations (paper algo only).")
@click.option("--format", "fmt", type=click.Choice(("text", "json")),
              default="text", show_default=True)
def solve(input_path, gen_spec, algo, k, list_maximal, show_per_node, fmt):
    """Solve one graph: list maximal cliques or decide a k-clique question."""
    try:
        graph, names, descriptor = _load_graph(input_path, gen_spec)
    except ValueError as exc:
        _fail(str(exc))
    if k is not None and k < 1:
        _fail("--k must be >= 1")

    if k is not None:
        if algo == "paper":
            found, witness = has_clique_of_size(graph, k)
        else:
            enumerate_fn = (
                bron_kerbosch_pivot if algo == "bk" else brute_force_maximal_cliques
            )
            try:
                cliques = enumerate_fn(graph)
            except ValueError as exc:
                _fail(str(exc))
            qualifying = sorted((c for c in cliques if len(c) >= k),
                                key=lambda c: (-len(c), c))
            found = bool(qualifying)
            witness = qualifying[0] if qualifying else None
        if fmt == "json":
            click.echo(json.dumps(
                {"descriptor": descriptor, "k": k, "answer": found,
                 "witness": list(witness) if witness else None}))
        elif found:
            click.echo(f"YES {_fmt_clique(witness, names)}")
        else:
            click.echo("NO")
        sys.exit(0 if found else 1)

    if algo == "paper":
        result = do_calculation(graph, CalcOptions())
        cliques = result.all_cliques
        largest = result.largest
    else:
        enumerate_fn = (
            bron_kerbosch_pivot if algo == "bk" else brute_force_maximal_cliques
        )
        try:
            cliques = enumerate_fn(graph)
        except ValueError as exc:
            _fail(str(exc))
        largest = min(cliques, key=lambda c: (-len(c), c)) if cliques else None
        result = None

    ordered = sorted(cliques, key=lambda c: (-len(c), c))
    if fmt == "json":
        payload = {
            "descriptor": descriptor,
            "nodes": graph.node_count,
            "edges": graph.edge_count,
            "maximal_clique_count": len(cliques),
            "largest": list(largest) if largest else None,
        }
        if list_maximal:
            payload["cliques"] = [list(c) for c in ordered]
        click.echo(json.dumps(payload))
        return
    click.echo(f"nodes: {graph.node_count}")
    click.echo(f"edges: {graph.edge_count}")
    click.echo(f"maximal cliques: {len(cliques)}")
    if largest is not None:
        click.echo(f"largest: {_fmt_clique(largest, names)} (size {len(largest)})")
    if list_maximal:
        for c in ordered:
            click.echo(_fmt_clique(c, names))
    if show_per_node:
        if result is None:
            _fail("--per-node needs --algo paper")
        click.echo(per_node_report(result, names))


@main.command()
@click.option("--gen", "gen_spec", type=str, required=True,
              help="Generator spec to materialize.")
@click.option("--out", type=str, default=None,
              help="Output DIMACS edge file (stdout when omitted).")
def gen(gen_spec, out):
    """Generate a graph and write it in DIMACS edge format."""
    try:
        spec = parse_generator_spec(gen_spec)
        graph, _names = generate(spec)
    except ValueError as exc:
        _fail(str(exc))
    text = write_dimacs_edge(graph)
    if out is None:
        click.echo(text, nl=False)
    else:
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        click.echo(f"wrote {path} ({graph.node_count} nodes, {graph.edge_count} edges)")


@main.command()
@click.option("--config", "config_path", type=str, required=True,
              help="Campaign config file (key = value lines).")
@click.option("--csv", "csv_override", type=str, default=None,
              help="Override the config's CSV output path.")
@click.option("--json", "json_override", type=str, default=None,
              help="Override the config's JSON output path.")
@click.option("--plots", "plots_override", type=str, default=None,
              help="Render figures into this directory.")
def audit(config_path, csv_override, json_override, plots_override):
    """Run an audit campaign: the merge algorithm vs the oracle per instance."""
    try:
        cfg = parse_campaign_config(Path(config_path).read_text(encoding="utf-8"))
    except (OSError, ValueError) as exc:
        _fail(str(exc))
    if csv_override:
        cfg.csv_path = csv_override
    if json_override:
        cfg.json_path = json_override
    if plots_override:
        cfg.plots_dir = plots_override
    try:
        result = run_audit_campaign(cfg)
    except (OSError, ValueError) as exc:
        _fail(str(exc))
    for key, value in result.summary.items():
        click.echo(f"{key}: {value}")
    for label, path in (
        ("csv", result.csv_path),
        ("json", result.json_path),
        ("witness", result.witness_path),
        ("violation reproducer", result.violation_path),
    ):
        if path:
            click.echo(f"{label}: {path}")


@main.command()
@click.option("--family", type=click.Choice(SCALING_FAMILIES), required=True)
@click.option("--sizes", type=str, required=True,
              help="Comma-separated ascending sizes, e.g. 8,16,32,64.")
@click.option("--p", type=float, default=0.5, show_default=True,
              help="Edge probability for the gnp family.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--csv", "csv_path", type=str, default=None,
              help="Write per-size counters to this CSV file.")
@click.option("--plots", "plots_dir", type=str, default=None,
              help="Render the log-log figure into this directory.")
def scale(family, sizes, p, seed, csv_path, plots_dir):
    """Measure operation-count scaling and fit log-log slopes."""
    try:
        size_list = [int(s) for s in sizes.replace(",", " ").split()]
        result = run_scaling(family, size_list, p=p, seed=seed)
    except ValueError as exc:
        _fail(str(exc))
    for record in result.records:
        click.echo(
            f"n={record.n} phase1_ops={record.phase1_ops} "
            f"phase2_ops={record.phase2_ops} wall={record.wall_time:.4f}s"
        )
    click.echo(f"phase1 log-log slope: {result.phase1_slope:.3f}")
    click.echo(f"phase2 log-log slope: {result.phase2_slope:.3f}")
    if csv_path:
        path = Path(csv_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(scaling_to_csv(result), encoding="utf-8")
        click.echo(f"csv: {path}")
    if plots_dir:
        from . import plots

        figure = plots.render_scaling_figure(result, Path(plots_dir) / "scaling.png")
        click.echo(f"figure: {figure}")


@main.command()
@click.option("--cnf", "cnf_path", type=str, required=True,
              help="DIMACS CNF file (exactly 3 literals per clause).")
@click.option("--solver", type=click.Choice(("paper", "oracle")), default="oracle",
              show_default=True,
              help="oracle: exact enumeration on the reduction graph; "
                   "paper: the merge algorithm's k-clique decision.")
def sat(cnf_path, solver):
    """Decide 3-CNF satisfiability via the clique reduction.

    Exit 0 when satisfiable, 1 when not.
    """
    from .sat import decide_satisfiable

    try:
        formula = parse_dimacs_cnf(Path(cnf_path).read_text(encoding="utf-8"))
        answer = decide_satisfiable(formula, solver)
    except (OSError, ValueError) as exc:
        _fail(str(exc))
    click.echo("SATISFIABLE" if answer else "UNSATISFIABLE")
    sys.exit(0 if answer else 1)


if __name__ == "__main__":
    main()
