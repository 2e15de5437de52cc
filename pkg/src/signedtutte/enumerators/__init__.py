"""Independent brute-force and structural enumerators (the oracles)."""
from ._assign import BUDGET_ENV, DEFAULT_BUDGET, BudgetExceeded, budget_limit
from .circuits import (
    Circuit,
    CircuitWalk,
    Cycle,
    circuit_walk,
    enumerate_circuits,
    positive_closed_walk_vectors,
    reversed_walk,
    simple_cycles,
    walk_coefficients,
)
from .colorings import (
    all_improper_formula,
    chromatic_subset,
    count_all_improper,
    count_colorings_zaslavsky,
    count_group_colorings,
    count_xiota_colorings,
    fixed_point_count,
    involutions,
    negation_involution,
)
from .flows import count_flows, count_flows_closed_form, count_nz_flows_subset, incidence_matrix
from .orientation import (
    Orientation,
    default_orientation,
    flip_edge,
    is_compatible,
    switch_orientation,
)
from .tensions import (
    ConnectedBasis,
    DeltaStats,
    TensionCounts,
    connected_basis,
    count_tensions,
    delta,
    delta_image_stats,
    delta_matrix,
    extend_tension_from_basis,
    extension_matrix,
    is_potential_difference,
    is_tension,
    scan_basis_tensions,
    scan_tensions,
    tension_constraints,
    unbalanced_cycle_indicators,
    validate_basis,
)
