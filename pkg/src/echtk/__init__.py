"""Exact combinatorial ECH invariants of S^3 fibered along a positive
torus knot T(p,q): indices, chain complexes, spectra, and bounds."""

from .complexes import (
    BoundaryMatrix,
    ComplexSpec,
    WindowError,
    differential,
    enumerate_currents,
    homology,
    homology_representative,
    knot_filtered_homology,
    linking_threshold,
    required_degree,
)
from .currents import KnotParams, ReebCurrent, action, degree, knot_filtration, linking
from .exact import InfRat, ceil_inf, cmp_inf, floor_inf
from .indices import (
    InvariantLedger,
    cz_in_triv,
    cz_orb,
    cz_table,
    ech_index,
    ech_index_from_components,
    j0_index,
    ledger,
)
from .nseq import (
    NSeq,
    lattice_count,
    nk,
    nk_closed_form,
    nk_upto,
    partition,
    repeat_count,
)
from .spectra import (
    BoundResult,
    CobordismResult,
    SpectrumEntry,
    action_linking_bound,
    action_spectrum,
    calabi_mean_action_bound,
    cobordism_obstruction,
    linking_spectrum,
    sqrt_decimal,
    weyl_scan,
)
from .toric import (
    LatticePath,
    current_to_path,
    lattice_points_under,
    path_index,
    path_to_current,
    round_corner,
    vertices,
)

__version__ = "0.1.0"

__all__ = [
    "BoundaryMatrix",
    "BoundResult",
    "CobordismResult",
    "ComplexSpec",
    "InfRat",
    "InvariantLedger",
    "KnotParams",
    "LatticePath",
    "NSeq",
    "ReebCurrent",
    "SpectrumEntry",
    "WindowError",
    "action",
    "action_linking_bound",
    "action_spectrum",
    "calabi_mean_action_bound",
    "ceil_inf",
    "cmp_inf",
    "cobordism_obstruction",
    "current_to_path",
    "cz_in_triv",
    "cz_orb",
    "cz_table",
    "degree",
    "differential",
    "ech_index",
    "ech_index_from_components",
    "enumerate_currents",
    "floor_inf",
    "homology",
    "homology_representative",
    "j0_index",
    "knot_filtered_homology",
    "knot_filtration",
    "lattice_count",
    "lattice_points_under",
    "ledger",
    "linking",
    "linking_spectrum",
    "linking_threshold",
    "nk",
    "nk_closed_form",
    "nk_upto",
    "partition",
    "path_index",
    "path_to_current",
    "repeat_count",
    "required_degree",
    "round_corner",
    "sqrt_decimal",
    "vertices",
    "weyl_scan",
]
