"""Exact polycyclic and serial codes over Galois rings.

The package models ideals of R[x]/<f> (and the bivariate analogue) for
R = GR(p^r, m), with transform-domain tooling: evaluation at the roots of
f in a splitting extension, dualities, idempotent decompositions and
Hamming-isometry classification of ambient spaces.
"""

from .codes import (
    Code,
    DistanceReport,
    DualityReport,
    all_ideals,
    annihilator,
    code_from_generators,
    code_sum,
    decompose,
    dual_code,
    duality_report,
    full_code,
    generator_matrix,
    min_distance,
    zero_code,
)
from .errors import (
    AlgebraError,
    ComputationError,
    EnumerationBudgetError,
    NotAnImageError,
    PreconditionError,
    RepeatedResidueRootsError,
    SingularMatrixError,
)
from .factor import (
    Factorization,
    IdempotentSet,
    SplittingData,
    factor_polynomial,
    factor_residue,
    hensel_lift,
    primitive_idempotents,
    residue_squarefree,
    splitting_data,
)
from .isometry import (
    ConstacyclicEquivalence,
    IsometryVerdict,
    IsomorphismWitness,
    build_isomorphism,
    classify_isometry,
    constacyclic_witness,
    monomial_target,
    power_matrix,
)
from .linalg import (
    HowellBasis,
    RingMatrix,
    det,
    howell_form,
    is_monomial,
    kernel,
    matrix_inverse,
    smith_decomposition,
    solve_left,
)
from .poly import Polynomial
from .quotient import (
    AmbientSpace,
    QuotElement,
    commutes_with_companion,
    companion_matrix,
    regular_representation,
    row_product,
    trace_map,
)
from .rings import (
    FieldElement,
    GaloisRing,
    ResidueField,
    RingElement,
    RingEmbedding,
    build_embedding,
    construct_ring,
)
from .serial import (
    BivariateAmbient,
    BivariateElement,
    BivariateSpectrum,
    SerialIsometryWitness,
    bivariate_ms,
    bivariate_ms_inverse,
    serial_isometry,
    tensor_idempotents,
)
from .transform import (
    DftReport,
    Spectrum,
    VandermondePair,
    dft_invertible,
    ms_inverse,
    ms_transform,
    vandermonde,
    vandermonde_inverse_symbolic,
)
from .zmod import IntegersMod

__all__ = [name for name in dir() if not name.startswith("_")]
