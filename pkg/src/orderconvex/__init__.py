"""orderconvex: abstract convexity on finite posets, semilattices and lattices.

Build structures with `build_poset` / `try_join_structure` or the
generators, wrap them in a `ConvexitySpace` for one of the eight convexity
kinds, and query hulls, extreme points, invariants, separation and the
theorem checkers.
"""

from .bitset import bits, iter_bits, mask_of
from .caps import Caps, DEFAULT_CAPS
from .errors import (
    CapExceeded,
    ConstantTop,
    CycleDetected,
    DuplicateElement,
    HypothesisUnmet,
    NoBottom,
    NotASemilattice,
    NotConvex,
    NotConvexMap,
    NotDistributive,
    NotInUpSet,
    NotQuasiconcave,
    NotUpperSet,
    OrderConvexError,
    PointInA,
)
from .poset import FinitePoset, build_poset
from .semilattice import (
    JoinStructure,
    StructureClass,
    classify,
    is_distributive_lattice,
    is_distributive_semilattice,
    is_tree,
    try_join_structure,
)
from .convexity import (
    ConvexityKind,
    ConvexitySpace,
    applicable_kinds,
    verify_family_is_convexity,
)
from .extremal import (
    ElementClassifier,
    classify_elements,
    extreme_points,
    is_extreme_subset,
    is_face,
    is_lassak_extreme,
)
from .invariants import (
    InvariantProfile,
    breadth,
    caratheodory,
    clique_number,
    depth,
    helly,
    helly_verify,
    invariant_profile,
    rank,
)
from .geometry import (
    CompletionLattice,
    ConvexGeometryVerdict,
    Copoint,
    all_copoints,
    characterization_checks,
    convex_geometry,
    copoints_at,
    dm_completion,
    mwe_conditions,
    principally_separated,
)
from .separation import (
    ProjectionResult,
    SeparationProfile,
    halfspaces,
    is_halfspace,
    project,
    separate_upper,
    separation_profile,
)
from .theorems import (
    ChainMap,
    check_bauer_max,
    check_bauer_min,
    check_depth_count,
    check_free_module,
    check_km_poset,
    check_km_semilattice,
    check_martinez_equivalence,
    check_milman_poset,
    check_milman_semilattice,
    check_minkowski,
    free_module_structure,
    join_decomposition,
)
from .verdicts import TheoremReport
from .generators import GeneratorSpec, catalog, generate
from .io import (
    load_poset,
    parse_poset_json,
    parse_poset_text,
    poset_to_json,
    poset_to_text,
    save_poset,
)
from .dot import export_dot
from .report import AnalysisReport, analyze
from .sweeps import run_sweep

__version__ = "0.1.0"
