"""Orientation/subgraph correspondences on graphs and regular matroids.

The package builds, inverts, and exhaustively certifies the bijection that
sends each orientation of a graph (or of a regular matroid given by a
totally unimodular matrix) to a subset of the ground set, respecting a pair
of acyclic circuit/cocircuit signatures.  Everything is exact: rational
arithmetic, integer bit masks, and brute-force oracles.
"""

from .bijection import (
    BijectionTable,
    basis_from_orientation,
    basis_to_orientation,
    classify_specialization,
    orientation_to_subgraph,
    orientation_to_subgraph_complement,
    restricted_orientation_map,
    restricted_subgraph_map,
    subgraph_to_orientation,
)
from .core import (
    Basis,
    Graph,
    Orientation,
    PartialOrientation,
    RegularMatroidRep,
    SignedSupportVector,
    conformal_decompose,
    enumerate_bases,
    enumerate_independent_sets,
    enumerate_signed_circuits,
    enumerate_signed_cocircuits,
    find_conforming_circuit_or_cocircuit,
    fundamental_circuit,
    fundamental_cocircuit,
    graph_to_rep,
    is_totally_unimodular,
    loops_only_rep,
    rep_for,
    split_kernel_image,
)
from .errors import (
    CapExceededError,
    InputError,
    InvariantViolationError,
    NonGenericWeightsError,
    NotCompatibleError,
    NotSameClassError,
    OribijError,
    TrivialGraphError,
)
from .geometry import (
    HalfOpenCell,
    MultilinearPolynomial,
    RationalPoint,
    TilingReport,
    cell_contains,
    cell_count_polynomial,
    dilated_zonotope_lattice_count,
    independent_set_polynomial,
    locate_point,
    random_rational_point,
    verify_cube_tiling,
)
from .oracle import (
    AuditReport,
    audit_bijection,
    classify_subset,
    reversal_closure_classes,
    tutte,
)
from .reversal import (
    ClassDecomposition,
    circuit_class_representative,
    cocircuit_class_representative,
    compatible_decomposition,
    enumerate_classes,
    reverse,
    same_class,
)
from .signatures import (
    CIRCUIT,
    COCIRCUIT,
    Acyclicity,
    Signature,
    canonical_signature_pair,
    canonical_weights,
    directed_circuits_in,
    explicit_signature,
    is_acyclic,
    is_compatible,
    signature_from_weights,
)
from .verification import run_verification

__version__ = "0.1.0"
