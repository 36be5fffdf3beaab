"""Desk-scale laboratory for one-sided graph property testing.

Graph primitives and generators, exact recognizers, beta-cut
decompositions, triangle/5-cycle witness packings, hard-instance gadget
constructions, sampling testers with a Monte-Carlo detection harness, and
extremal searches, behind a reproducible seeded-stream discipline.
"""

from .decomposition import (
    AboveCap,
    Cut,
    NotFound,
    Refinement,
    distance_to_property,
    find_beta_cut,
    find_cut,
    refine_along_cuts,
)
from .extremal import ExtremalRecord, estimate_f, search_min_p3_density
from .gadgets import ApFreeSet, GadgetBundle, ap3_free_set, build_c5_gadget, build_poset_gadget, rs_graph
from .graphs import (
    Digraph,
    Graph,
    PartLabeling,
    complement,
    complete_graph,
    count_induced_c5,
    count_induced_p3,
    count_triangles,
    cycle_graph,
    empty_graph,
    flip_pairs,
    gnp,
    induced_subgraph,
    path_graph,
    random_cograph,
    sample_vertices,
)
from .graph_io import ParseError, read_digraph, read_graph, write_digraph, write_graph
from .packing import (
    PackingError,
    WitnessPacking,
    farness_lower_bound,
    greedy_c5_packing,
    random_tripartite_extract,
    triangle_cover,
    triangle_packing,
    triangles_of,
)
from .recognizers import (
    RecognitionResult,
    check_order_transitivity,
    is_cograph,
    is_comparability,
    is_induced_h_free,
    is_perfect,
    is_poset,
    is_triangle_free,
    property_recognizer,
)
from .rng import Stream
from .testers import (
    MinBudgetResult,
    TesterConfig,
    TesterReport,
    Verdict,
    estimate_detection,
    induced_p3_tester,
    min_budget_for_detection,
    theoretical_sample_counts,
    triangle_tester,
    universal_tester,
    wilson95,
)

__version__ = "0.1.0"
