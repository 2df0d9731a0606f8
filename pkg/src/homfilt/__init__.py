"""Exact homological algebra over finite-dimensional filtered rational vector spaces.

The package realises a small quasi-abelian category concretely: objects are
spaces with an integer-weighted adapted basis, morphisms are filtration
preserving maps with exact rational matrices.  On top of it live bounded
cochain complexes with reduced cohomology, the injective and projective
model-structure morphism classes with an exact lifting solver, truncated
free graded algebras, dg-Lie algebras with enveloping-algebra rewriting and
Chevalley-Eilenberg resolutions, and Koszul resolutions with the derived
critical locus as the showcase application.  Everything is computed over
the rationals with zero tolerance; there is no floating point anywhere.
"""

from .linalg import Matrix, rank, kernel_basis, solve_affine, echelon_with_pivot_order
from .filtvect import (
    FiltObject,
    FiltMorphism,
    FactoredMorphism,
    kernel,
    cokernel,
    image,
    coimage,
    is_strict,
    is_strict_mono,
    is_strict_epi,
    factor,
    pushout,
    pullback,
    tensor,
    tensor_mor,
    dual,
    unit,
)
from .complexes import (
    Complex,
    ChainMap,
    reduced_cohomology,
    is_reduced_qiso,
    cone,
    shift,
    strict_exact_check,
)
from .model import (
    MorphismClassification,
    classify,
    generating_cofibration,
    generating_projective_cofibration,
    LiftingSquare,
    solve_lift,
    pushout_product,
)
from .graded import (
    GradedBasisAlgebra,
    tensor_algebra,
    symmetric_algebra,
    exterior_algebra,
    check_dga_axioms,
)
from .dglie import (
    DGLie,
    check_lie_axioms,
    cone_lie,
    uea,
    pbw_check,
    ce_resolution,
    verify_ce_acyclicity,
    derived_quotient,
)
from .koszul import (
    KoszulData,
    fancy_koszul,
    verify_augmentation_qiso,
    specialized_koszul,
    base_change_check,
    PolySpec,
    critical_locus,
)

__version__ = "0.1.0"
