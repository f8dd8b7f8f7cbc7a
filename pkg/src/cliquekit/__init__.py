"""Clique enumeration by per-node triangle gossip, plus the audit harness
that measures it against exact oracles."""

from .graph import (
    Clique,
    CliqueSet,
    Graph,
    canonical_clique,
    is_clique,
    is_maximal_clique,
)
from .introductions import (
    MutualNeighborView,
    TriangleTable,
    introductions_for,
    mutual_neighbor_view,
    mutual_neighbors,
    run_introductions,
)
from .pairmerge import (
    KEY_BOTH,
    KEY_FIRST,
    KEY_SECOND,
    MergeOptions,
    NodePair,
    PairList,
    build_pair_list,
    merge_cliques_for_node,
    paired_in_list,
    run_pair_merge,
)
from .calc import (
    CalcOptions,
    CalcResult,
    OpCounters,
    do_calculation,
    has_clique_of_size,
    largest_found_clique,
    per_node_report,
)
from .oracles import (
    OracleLimits,
    bron_kerbosch_pivot,
    brute_force_maximal_cliques,
    max_clique_size_oracle,
    triangles_oracle,
)
from .generators import (
    GeneratorSpec,
    generate,
    gnp_corpus,
    parse_generator_spec,
    prng_next,
    prng_stream,
)
from .dimacs import (
    DimacsError,
    ParseDiagnostic,
    parse_dimacs_cnf,
    parse_dimacs_edge,
    write_dimacs_edge,
)
from .sat import (
    CnfFormula,
    Literal,
    ReductionResult,
    cnf_corpus,
    decide_satisfiable,
    random_3cnf,
    reduce_3sat,
    truth_table_oracle,
)
from .audit import (
    AuditRecord,
    CampaignConfig,
    CampaignResult,
    ScalingRecord,
    ScalingResult,
    audit_graph,
    parse_campaign_config,
    run_audit_campaign,
    run_scaling,
)

__version__ = "0.1.0"

__all__ = [
    "AuditRecord",
    "CalcOptions",
    "CalcResult",
    "CampaignConfig",
    "CampaignResult",
    "Clique",
    "CliqueSet",
    "CnfFormula",
    "DimacsError",
    "GeneratorSpec",
    "Graph",
    "KEY_BOTH",
    "KEY_FIRST",
    "KEY_SECOND",
    "Literal",
    "MergeOptions",
    "MutualNeighborView",
    "NodePair",
    "OpCounters",
    "OracleLimits",
    "PairList",
    "ParseDiagnostic",
    "ReductionResult",
    "ScalingRecord",
    "ScalingResult",
    "TriangleTable",
    "audit_graph",
    "bron_kerbosch_pivot",
    "brute_force_maximal_cliques",
    "build_pair_list",
    "canonical_clique",
    "cnf_corpus",
    "decide_satisfiable",
    "do_calculation",
    "generate",
    "gnp_corpus",
    "has_clique_of_size",
    "introductions_for",
    "is_clique",
    "is_maximal_clique",
    "largest_found_clique",
    "max_clique_size_oracle",
    "merge_cliques_for_node",
    "mutual_neighbor_view",
    "mutual_neighbors",
    "paired_in_list",
    "parse_campaign_config",
    "parse_dimacs_cnf",
    "parse_dimacs_edge",
    "parse_generator_spec",
    "per_node_report",
    "prng_next",
    "prng_stream",
    "random_3cnf",
    "reduce_3sat",
    "run_audit_campaign",
    "run_introductions",
    "run_pair_merge",
    "run_scaling",
    "triangles_oracle",
    "truth_table_oracle",
    "write_dimacs_edge",
]
