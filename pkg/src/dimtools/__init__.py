"""Dominating induced matchings: solving, partitioning, and verification."""

from .checks import (
    Budgets,
    CheckEntry,
    Coloring,
    VerificationReport,
    check_cycle_intersections,
    check_dim_bounds,
    check_dim_size_invariance,
    check_edge_bound,
    check_partition_regularity,
    full_report,
    regular_dim_formula,
    three_coloring_from_dim,
)
from .corpus import connected_graphs, sample_connected_graphs
from .families import (
    LabeledGraph,
    bg_dim_partition,
    bipartite_kneser,
    complete,
    cycle,
    kneser,
    kneser_dim_partition,
    petersen,
    star,
)
from .graph import (
    BiregularClasses,
    Cycle,
    DegreeProfile,
    Graph,
    build_graph,
    components,
    degree_profile,
    enumerate_cycles,
    induced_subgraph,
    is_connected,
)
from .io import (
    FormatError,
    graph_digest,
    parse_graph,
    parse_matching,
    parse_partition,
    serialize_graph,
    serialize_matching,
    serialize_partition,
)
from .partition import (
    DimPartition,
    ListAssignment,
    ListCheck,
    PartitionCheck,
    brute_force_dim_partitions,
    check_kneser_isomorphism,
    find_dim_partition,
    list_assignment,
    verify_dim_partition,
    verify_list_properties,
)
from .solver import (
    DimClass,
    DimWitness,
    SearchBudgetExceeded,
    brute_force_dims,
    classify_dim,
    dim_size,
    dominated_set,
    enumerate_dims,
    find_dim,
)

__version__ = "0.1.0"
