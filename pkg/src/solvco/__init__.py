"""Exact-arithmetic Lie algebra cohomology, semisimple splittings and
almost abelian solvmanifold lattice analysis."""

__version__ = "0.1.0"

from .almost_abelian import (
    AlmostAbelianReport,
    CoverType,
    HolonomyInput,
    MostowStatus,
    Scale,
    almost_abelian_algebra,
    analyze,
    b1_lattice,
    invariant_betti,
    mostow_status,
    torus_cover,
)
from .catalog import CatalogEntry, catalog_get, catalog_names
from .cohomology import (
    CEComplex,
    CohomologyResult,
    StructuralReport,
    betti_numbers,
    build_complex,
    cohomology,
    format_cocycle,
    multi_indices,
    structural_checks,
)
from .decompositions import (
    JordanDecomposition,
    SplitCompactParts,
    char_poly,
    exp_nilpotent,
    jordan_chevalley,
    log_unipotent,
    minimal_polynomial,
    split_compact_parts,
)
from .errors import (
    AntisymmetryViolation,
    DecompositionInvalid,
    DimensionTooLarge,
    JacobiViolation,
    NonCommutingTorus,
    NotFiniteOrder,
    NotNilpotent,
    NotQuasiUnipotent,
    NotRationallySplittable,
    NotSolvable,
    NotUnipotent,
    ParseError,
    SolvcoError,
    UnknownName,
)
from .files import parse_matrix, parse_structure_file, structure_equations
from .lie import (
    FlagCertificate,
    LieAlgebra,
    Subspace,
    ad_matrix,
    completely_solvable_flag,
    conjugate,
    derived_series,
    derived_subalgebra,
    is_nilpotent,
    is_solvable,
    is_unimodular,
    lower_central_series,
    validate,
    verify_nilpotent_complement,
)
from .matrices import Matrix, rank_and_kernel
from .polynomials import Polynomial, cyclotomic, cyclotomic_factors, sturm_real_root_count
from .splitting import (
    KillMap,
    KillMode,
    SplittingInput,
    SplittingResult,
    compact_components,
    kill_map,
    malcev_splitting,
    modified_bracket,
    nilshadow,
)
