"""Exact-arithmetic Lie combinatorics for Goldie-rank bounds on primitive ideals."""
from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    GoldieBoundError,
    NonGenericNu,
    NotDivisible,
    NotDominant,
    NotEvenOrbit,
    NotInWeightLattice,
    ParityViolation,
    PipelineError,
    SizeMismatch,
    UnsupportedOrbit,
    UnsupportedType,
)
from .lattice import (
    IntegralSubsystem,
    SchurClass,
    in_root_lattice,
    in_weight_lattice,
    integral_subsystem,
    schur_class_of,
    trivial_class,
)
from .nilorbit import (
    OrbitDatum,
    Partition,
    ambient_root_system,
    centralizer_dim,
    h_and_grading,
    orbit_datum,
    reductive_centralizer,
    tQ_embedding,
    transpose,
    validate_partition,
)
from .pipeline import (
    BoundReport,
    goldie_bound,
    normalize_factors,
    premet_example,
    premet_table,
)
from .repdim import (
    DPsiResult,
    azumaya_index,
    d_psi,
    enumerate_dominant_in_class,
    spinor_certificate,
    weyl_dim,
)
from .rootsys import Root, RootSystem, build, coroot_pairing, vec
from .slices import (
    IrreducibilityVerdict,
    SliceContext,
    delta,
    even_identity_check,
    irreducibility_verdict,
    principal_in_nu_centralizer,
    restrict_to_tQ,
    rho_zero,
    slice_context,
    underline_character,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "BudgetExceeded",
    "DPsiResult",
    "DimensionMismatch",
    "GoldieBoundError",
    "IntegralSubsystem",
    "IrreducibilityVerdict",
    "NonGenericNu",
    "NotDivisible",
    "NotDominant",
    "NotEvenOrbit",
    "NotInWeightLattice",
    "OrbitDatum",
    "ParityViolation",
    "Partition",
    "PipelineError",
    "Root",
    "RootSystem",
    "SchurClass",
    "SizeMismatch",
    "SliceContext",
    "UnsupportedOrbit",
    "UnsupportedType",
    "ambient_root_system",
    "azumaya_index",
    "build",
    "centralizer_dim",
    "coroot_pairing",
    "d_psi",
    "delta",
    "enumerate_dominant_in_class",
    "even_identity_check",
    "goldie_bound",
    "h_and_grading",
    "in_root_lattice",
    "in_weight_lattice",
    "integral_subsystem",
    "irreducibility_verdict",
    "normalize_factors",
    "orbit_datum",
    "premet_example",
    "premet_table",
    "principal_in_nu_centralizer",
    "reductive_centralizer",
    "restrict_to_tQ",
    "rho_zero",
    "schur_class_of",
    "slice_context",
    "spinor_certificate",
    "tQ_embedding",
    "transpose",
    "trivial_class",
    "underline_character",
    "validate_partition",
    "vec",
    "weyl_dim",
]
