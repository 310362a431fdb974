"""Lattice toric code toolkit: rotated lattices, distances, slicing and
crystalline gates, backed by the C++ core."""

from ._core import (
    boundary_distance,
    check_matrices,
    code_parameters,
    crystalline_group_order,
    effective_distance_bell,
    hadamard_lattice,
    hnf,
    honeycomb_cell_counts,
    injection_round_trips,
    injection_sets,
    l1_systole,
    lattice_automorphism_count,
    min_weight_logical,
    n_slice,
    search_min_det,
    slice_logical_group,
    starfish_distance,
    surgery_measured_products,
)

__all__ = [
    "boundary_distance",
    "check_matrices",
    "code_parameters",
    "crystalline_group_order",
    "effective_distance_bell",
    "hadamard_lattice",
    "hnf",
    "honeycomb_cell_counts",
    "injection_round_trips",
    "injection_sets",
    "l1_systole",
    "lattice_automorphism_count",
    "min_weight_logical",
    "n_slice",
    "search_min_det",
    "slice_logical_group",
    "starfish_distance",
    "surgery_measured_products",
]
