"""Pairing-Hamiltonian extensions in graph prisms.

A pairing of a graph on an even number of vertices is a perfect matching of
the complete graph on the same vertex set.  A graph has the pairing-
Hamiltonian property when every pairing extends, by a perfect matching of the
graph's own edges, to a Hamiltonian cycle.  This package verifies the
property exhaustively or by sampling, extends pairings constructively through
iterated prisms, and bounds or probes for the smallest prism power with the
property via spanning-tree leaf counts.
"""

from .dot_export import export_dot
from .extension import (
    BaseNotExtendable,
    ExtensionTrace,
    MemoizedBaseOracle,
    PairingPartition,
    extend,
    extend_cross,
    extend_no_cross,
    memoized_base_oracle,
    partition_pairing,
)
from .graph6 import Graph6Error, decode_graph6, encode_graph6
from .graphs import (
    PRODUCT_VERTEX_CAP,
    TOWER_VERTEX_CAP,
    BudgetExceeded,
    Graph,
    PrismStructure,
    PrismTower,
    cartesian_product,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    find_hamiltonian_path,
    hypercube_graph,
    is_traceable,
    path_graph,
    prism,
    prism_power,
    standard_graph,
    star_graph,
    strong_product,
)
from .matchings import (
    CycleDecomposition,
    Pairing,
    PerfectMatching,
    PHVerdict,
    SearchBudget,
    double_factorial,
    enumerate_pairings,
    enumerate_perfect_matchings,
    find_extension_bruteforce,
    is_hamiltonian_extension,
    pairing_at_index,
    pairing_count,
    random_pairing,
    union_cycle_decomposition,
    verify_ph,
)
from .trees import (
    ML_VERTEX_CAP,
    PROBE_TOP_CAP,
    LeafTree,
    MlResult,
    PhPowerResult,
    min_leaf_number,
    ph_power_exact,
    ph_power_upper_bound,
    prism_leaf_reduction,
    prism_leaf_reduction_steps,
    traceable_threshold,
)

__version__ = "0.1.0"

__all__ = [
    "BaseNotExtendable",
    "BudgetExceeded",
    "CycleDecomposition",
    "ExtensionTrace",
    "Graph",
    "Graph6Error",
    "LeafTree",
    "MemoizedBaseOracle",
    "MlResult",
    "ML_VERTEX_CAP",
    "PHVerdict",
    "Pairing",
    "PairingPartition",
    "PerfectMatching",
    "PhPowerResult",
    "PrismStructure",
    "PrismTower",
    "PROBE_TOP_CAP",
    "PRODUCT_VERTEX_CAP",
    "SearchBudget",
    "TOWER_VERTEX_CAP",
    "cartesian_product",
    "complete_bipartite_graph",
    "complete_graph",
    "cycle_graph",
    "decode_graph6",
    "double_factorial",
    "encode_graph6",
    "enumerate_pairings",
    "enumerate_perfect_matchings",
    "export_dot",
    "extend",
    "extend_cross",
    "extend_no_cross",
    "find_extension_bruteforce",
    "find_hamiltonian_path",
    "hypercube_graph",
    "is_hamiltonian_extension",
    "is_traceable",
    "memoized_base_oracle",
    "min_leaf_number",
    "pairing_at_index",
    "pairing_count",
    "partition_pairing",
    "path_graph",
    "ph_power_exact",
    "ph_power_upper_bound",
    "prism",
    "prism_leaf_reduction",
    "prism_leaf_reduction_steps",
    "prism_power",
    "random_pairing",
    "standard_graph",
    "star_graph",
    "strong_product",
    "traceable_threshold",
    "union_cycle_decomposition",
    "verify_ph",
]
