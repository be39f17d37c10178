"""Connected matchings in graphs with independence number at most 2.

A connected matching is a set of pairwise disjoint edges every two of which
are joined by some edge of the host graph.  The package provides exact and
heuristic solvers, structural-bound checkers, a recursive constructor, graph
family generators, and a resumable search harness, all exposed through the
``cmatch`` command line tool.
"""

from .bipartite import (
    BipartiteMatching,
    VertexCover,
    konig_cover,
    max_bipartite_matching,
)
from .cliques import CliqueResult, greedy_clique, max_clique
from .construct import (
    ConstructionTrace,
    ConstructorConfig,
    FailureCertificate,
    LevelRecord,
    construct_connected_matching,
)
from .generators import (
    c5_blowup,
    enumerate_alpha2,
    random_alpha2,
    two_cliques,
    two_cliques_plus,
)
from .graphs import (
    Graph,
    Graph6Error,
    GraphError,
    MAX_VERTICES,
    bits,
    clique_number,
    common_neighborhood,
    complement,
    encode_graph6,
    find_triangle,
    independence_at_most_2,
    induced_subgraph,
    is_anticomplete,
    is_clique,
    is_complete_between,
    neighborhood,
    parse_edge_list,
    parse_graph6,
    triangle_count,
)
from .matchings import (
    GeneralizedMatching,
    LinkGraph,
    Matching,
    MatchingResult,
    MinorCertificate,
    are_linked,
    build_link_graph,
    complete_minor_certificate,
    greedy_connected_matching,
    is_dominating_matching,
    max_connected_matching,
    max_generalized_matching,
    validate_connected_matching,
    validate_generalized_matching,
    validate_minor_certificate,
    witness_from_json,
    witness_to_json,
)
from .report import load_run, render_figures, summarize_run, write_summary_csv
from .search import (
    CANDIDATE,
    PASS,
    SKIPPED,
    VERDICTS,
    SearchConfig,
    SearchError,
    evaluate_instance,
    iter_instances,
    run_search,
)
from .verifiers import (
    HOLDS,
    INCONCLUSIVE,
    KNOWN_TRUE_T,
    LEMMA_IDS,
    VIOLATED,
    VerifierReport,
    check_clique_bound,
    check_dominating_free,
    check_generalized_bound,
    check_matching_bound,
    check_pair_bound,
    check_partition_bound,
    check_triangle_bound,
    check_triple_bound,
    find_dominating_matching,
    max_anticomplete_pair,
    run_checker,
)

__version__ = "0.1.0"

__all__ = [
    "BipartiteMatching",
    "CANDIDATE",
    "CliqueResult",
    "ConstructionTrace",
    "ConstructorConfig",
    "FailureCertificate",
    "GeneralizedMatching",
    "Graph",
    "Graph6Error",
    "GraphError",
    "HOLDS",
    "INCONCLUSIVE",
    "KNOWN_TRUE_T",
    "LEMMA_IDS",
    "LevelRecord",
    "LinkGraph",
    "MAX_VERTICES",
    "Matching",
    "MatchingResult",
    "MinorCertificate",
    "PASS",
    "SKIPPED",
    "SearchConfig",
    "SearchError",
    "VERDICTS",
    "VIOLATED",
    "VertexCover",
    "VerifierReport",
    "are_linked",
    "bits",
    "build_link_graph",
    "c5_blowup",
    "check_clique_bound",
    "check_dominating_free",
    "check_generalized_bound",
    "check_matching_bound",
    "check_pair_bound",
    "check_partition_bound",
    "check_triangle_bound",
    "check_triple_bound",
    "clique_number",
    "common_neighborhood",
    "complement",
    "complete_minor_certificate",
    "construct_connected_matching",
    "encode_graph6",
    "enumerate_alpha2",
    "evaluate_instance",
    "find_dominating_matching",
    "find_triangle",
    "greedy_clique",
    "greedy_connected_matching",
    "independence_at_most_2",
    "induced_subgraph",
    "is_anticomplete",
    "is_clique",
    "is_complete_between",
    "is_dominating_matching",
    "iter_instances",
    "konig_cover",
    "load_run",
    "max_anticomplete_pair",
    "max_bipartite_matching",
    "max_clique",
    "max_connected_matching",
    "max_generalized_matching",
    "neighborhood",
    "parse_edge_list",
    "parse_graph6",
    "random_alpha2",
    "render_figures",
    "run_checker",
    "run_search",
    "summarize_run",
    "triangle_count",
    "two_cliques",
    "two_cliques_plus",
    "validate_connected_matching",
    "validate_generalized_matching",
    "validate_minor_certificate",
    "witness_from_json",
    "witness_to_json",
    "write_summary_csv",
]
