"""Exact-rank toolkit for reduced triangle-free and bipartite graphs."""

from .canonical import (
    CanonicalForm,
    are_isomorphic,
    canonical_form,
    canonical_graph,
    from_graph6,
    to_graph6,
)
from .codes import (
    BinaryCode,
    all_ones_in_rowspace,
    min_distance,
    plotkin_bound_check,
    rowspace_distance2_bound,
    rowspace_distance2_max,
    singleton_verify,
)
from .constructions import (
    BoundsTable,
    LabeledConstruction,
    b_bound,
    bipartite_remark_graph,
    bounds,
    c_bound,
    extremal_triangle_free,
    extremal_triangle_free_recursive,
    incidence_graph,
    odd_subset_incidence_graph,
    subset_incidence_graph,
)
from .enumeration import (
    Core,
    EnumerationReport,
    ExtensionCandidate,
    GraphClass,
    all_extensions,
    candidates,
    compatible,
    complete,
    enumerate_all,
    enumerate_extremal,
    gen_cores,
    max_extension,
    verify_theorem,
)
from .graphs import (
    CapacityError,
    CapExceededError,
    Graph,
    bipartition,
    bits,
    duplication_classes,
    independence_number,
    induced_subgraph,
    is_reduced,
    is_triangle_free,
    mask_of,
    maximum_independent_sets,
    reduce_graph,
    symmetric_difference,
)
from .linalg import (
    adjacency_matrix,
    adjugate_solve,
    det_exact,
    nonsingular_principal_core,
    rank_exact,
)
from .structure import (
    StructureReport,
    max_subgraph_below_rank,
    obstruction_free,
    rank_drop_neighborhood,
    rank_drop_symdiff,
)

__version__ = "0.1.0"

__all__ = [
    "BinaryCode",
    "BoundsTable",
    "CanonicalForm",
    "CapExceededError",
    "CapacityError",
    "Core",
    "EnumerationReport",
    "ExtensionCandidate",
    "Graph",
    "GraphClass",
    "LabeledConstruction",
    "StructureReport",
    "adjacency_matrix",
    "adjugate_solve",
    "all_extensions",
    "all_ones_in_rowspace",
    "are_isomorphic",
    "b_bound",
    "bipartite_remark_graph",
    "bipartition",
    "bits",
    "bounds",
    "c_bound",
    "candidates",
    "canonical_form",
    "canonical_graph",
    "compatible",
    "complete",
    "det_exact",
    "duplication_classes",
    "enumerate_all",
    "enumerate_extremal",
    "extremal_triangle_free",
    "extremal_triangle_free_recursive",
    "from_graph6",
    "gen_cores",
    "incidence_graph",
    "independence_number",
    "induced_subgraph",
    "is_reduced",
    "is_triangle_free",
    "mask_of",
    "max_extension",
    "max_subgraph_below_rank",
    "maximum_independent_sets",
    "min_distance",
    "nonsingular_principal_core",
    "obstruction_free",
    "odd_subset_incidence_graph",
    "plotkin_bound_check",
    "rank_drop_neighborhood",
    "rank_drop_symdiff",
    "rank_exact",
    "reduce_graph",
    "rowspace_distance2_bound",
    "rowspace_distance2_max",
    "singleton_verify",
    "subset_incidence_graph",
    "symmetric_difference",
    "to_graph6",
    "verify_theorem",
]
