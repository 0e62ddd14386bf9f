"""Extremal Wiener indices of unicyclic graphs with a given matching number.

Exact constructions, closed forms, graph rewrites and exhaustive
verification at small orders.
"""

from .canonical import canonical_form, is_isomorphic
from .enumeration import (
    ExtremalRecord,
    extremal_table,
    trees,
    unicyclic_graphs,
    verify_dankelmann,
    verify_main_theorem,
    verify_minima,
    verify_monotonicity,
)
from .errors import DisconnectedGraphError, DomainError, Graph6Error, GraphError, TransformError
from .families import (
    AnmParams,
    DuZhouParams,
    G3Params,
    G4Params,
    build_anm,
    build_duzhou_min_tree,
    build_duzhou_min_unicyclic,
    build_g3,
    build_g4,
    params_to_nm,
)
from .formulas import (
    bound_dankelmann_max,
    bound_dankelmann_min,
    bound_duzhou_tree_min,
    bound_duzhou_unicyclic_min,
    bound_max_unicyclic,
    collapse_g3,
    collapse_g4,
    compare_g4_parity,
    compare_g4_vs_g3,
    delta_g3_collapse,
    delta_g4_collapse,
    extremal_set_predicted,
    wiener_g3_closed,
    wiener_g4_closed,
)
from .graph import (
    CycleInfo,
    Graph,
    all_pairs_distances,
    complete_graph,
    cycle_graph,
    from_edges,
    path_graph,
    star_graph,
    unicyclic_info,
    wiener_index,
)
from .graph6 import from_graph6, to_graph6
from .matching import (
    MatchingCertificate,
    matching_number,
    matching_number_bruteforce,
    matching_number_tree,
    matching_number_unicyclic,
)
from .transforms import TransformReport, cycle_swap, path_regraft, random_unicyclic, spr

__version__ = "0.1.0"
