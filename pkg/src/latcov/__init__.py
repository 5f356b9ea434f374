"""Exact covariogram toolkit for lattice-convex planar sets."""

from .covariogram import (
    Covariogram,
    compute_covariogram,
    convolve,
    covariogram_equal,
    support_of,
)
from .homometry import (
    HexagonParams,
    MirrorPairReport,
    SublatticeBasis,
    WidthOneParams,
    condition_i,
    condition_ii,
    corollary_pair_generator,
    decompose_plane,
    direct_sum,
    gs_graph_connected,
    mirror_pair,
    product_pair,
    sum_is_direct,
    width_one_T,
)
from .invariants import (
    InvariantRecord,
    delta_bound_check,
    discrepancy,
    edge_normals,
    invariants_direct,
)
from .lattice import (
    AffineMap2,
    Hull2,
    LatticeError,
    affine_equivalent,
    affine_witnesses,
    canonical_form,
    convex_hull,
    difference_set,
    halfopen_parallelogram_count,
    hull_lattice_points,
    is_centrally_symmetric,
    is_lattice_convex,
    point_set,
    spans_plane,
    support_set,
    translate,
)
from .reconstruct import (
    EdgePairSketch,
    determination_verdict,
    diffset_from_covariogram,
    edge_pair_from_covariogram,
    invariants_from_covariogram,
    reconstruct_all,
)
from .search import (
    CorollaryMatch,
    HomometricClass,
    PairVerdict,
    SearchReport,
    constructibility_search,
    enumerate_lattice_convex,
    homometric_classes,
    match_corollary,
)

__version__ = "0.1.0"

__all__ = [
    "AffineMap2",
    "CorollaryMatch",
    "Covariogram",
    "EdgePairSketch",
    "HexagonParams",
    "HomometricClass",
    "Hull2",
    "InvariantRecord",
    "LatticeError",
    "MirrorPairReport",
    "PairVerdict",
    "SearchReport",
    "SublatticeBasis",
    "WidthOneParams",
    "affine_equivalent",
    "affine_witnesses",
    "canonical_form",
    "compute_covariogram",
    "condition_i",
    "condition_ii",
    "constructibility_search",
    "convex_hull",
    "convolve",
    "corollary_pair_generator",
    "covariogram_equal",
    "decompose_plane",
    "delta_bound_check",
    "determination_verdict",
    "difference_set",
    "diffset_from_covariogram",
    "direct_sum",
    "discrepancy",
    "edge_normals",
    "edge_pair_from_covariogram",
    "enumerate_lattice_convex",
    "gs_graph_connected",
    "halfopen_parallelogram_count",
    "homometric_classes",
    "hull_lattice_points",
    "invariants_direct",
    "invariants_from_covariogram",
    "is_centrally_symmetric",
    "is_lattice_convex",
    "match_corollary",
    "mirror_pair",
    "point_set",
    "product_pair",
    "reconstruct_all",
    "spans_plane",
    "support_set",
    "support_of",
    "translate",
    "width_one_T",
]
