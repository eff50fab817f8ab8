"""Overlap labelings of digraphs and balanced bipartite graphs.

Library layout:

* :mod:`ovlab.graphs` - graph types and structural predicates
* :mod:`ovlab.labeling` - overlap semantics, verifiers, binary reduction
* :mod:`ovlab.decomposition` - weight decompositions, rules, parameter searches
* :mod:`ovlab.construct` - constructive labelers and transformations
* :mod:`ovlab.families` - named families, fixtures, seeded random graphs
* :mod:`ovlab.oracle` - exact achievability and readability oracles
* :mod:`ovlab.serialize` - JSON and DOT formats
* :mod:`ovlab.report` - seeded experiments with CSV/PNG reports
* :mod:`ovlab.cli` - the ``ovlab`` command

Everything is a pure function over immutable inputs and safe to call
concurrently; searches and constructions are deterministic.
"""

from .construct import (
    ConstructionTrace,
    achieve_labeling,
    bipartite_to_digraph,
    digraph_to_bipartite,
    layered_biclique_labeling,
    lift_to_digraph,
    project_to_bipartite,
    tree_radius_decomposition,
)
from .decomposition import (
    Decomposition,
    RuleVerdict,
    SearchBudgetExceeded,
    check_hub_rule,
    check_p4_rule,
    check_strict_p4_rule,
    distinctness,
    hub_number,
    min_rule_decomposition,
)
from .families import (
    Fixture,
    Lcg,
    build_biclique,
    build_cycle,
    build_hadamard,
    build_path,
    build_radius_tree,
    load_fixture,
    sample_random_bipartite,
)
from .graphs import (
    BipartiteGraph,
    Digraph,
    GraphError,
    common_neighbors,
    edge_color_bipartite,
    enumerate_induced_p4s,
    is_c4_free,
    is_disjoint_union_of_bicliques,
    radius_center,
    twin_status,
)
from .labeling import (
    Labeling,
    LabelingError,
    VerifyResult,
    Violation,
    encode_binary,
    extract_decomposition,
    ov,
    verify_bipartite,
    verify_digraph,
)
from .oracle import AchievesVerdict, oracle_achieves, oracle_readability, readability_witness

__version__ = "0.1.0"

__all__ = [
    "AchievesVerdict",
    "BipartiteGraph",
    "ConstructionTrace",
    "Decomposition",
    "Digraph",
    "Fixture",
    "GraphError",
    "Labeling",
    "LabelingError",
    "Lcg",
    "RuleVerdict",
    "SearchBudgetExceeded",
    "VerifyResult",
    "Violation",
    "achieve_labeling",
    "bipartite_to_digraph",
    "build_biclique",
    "build_cycle",
    "build_hadamard",
    "build_path",
    "build_radius_tree",
    "check_hub_rule",
    "check_p4_rule",
    "check_strict_p4_rule",
    "common_neighbors",
    "digraph_to_bipartite",
    "distinctness",
    "edge_color_bipartite",
    "encode_binary",
    "enumerate_induced_p4s",
    "extract_decomposition",
    "hub_number",
    "is_c4_free",
    "is_disjoint_union_of_bicliques",
    "layered_biclique_labeling",
    "lift_to_digraph",
    "load_fixture",
    "min_rule_decomposition",
    "oracle_achieves",
    "oracle_readability",
    "ov",
    "project_to_bipartite",
    "radius_center",
    "readability_witness",
    "sample_random_bipartite",
    "tree_radius_decomposition",
    "twin_status",
    "verify_bipartite",
    "verify_digraph",
]
