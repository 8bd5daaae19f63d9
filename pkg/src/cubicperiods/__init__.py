"""Exact enumeration and verification of Gaussian periods and Shanks cubics
for cyclic cubic fields.

For any valid conductor the package enumerates the normalized solutions of
4f = M^2 + 27 N^2, builds the matching one-parameter cubics and period
polynomials with exact rational arithmetic, computes the Gaussian periods
numerically from character kernels, and verifies the linear relation
between the two root systems, exactly where the statement is exact and to
a certified tolerance where it is numeric.
"""

from .arith import (
    Conductor,
    Factorization,
    Kind,
    conductors_up_to,
    factorize,
    moebius,
    validate_conductor,
)
from .cubicpoly import (
    RationalCubic,
    cubic_discriminant,
    delta,
    discriminant_check,
    is_irreducible_cubic,
    irreducibility_criterion,
    period_poly_formula,
    shanks_poly,
    substitute_affine,
    verify_main_identity,
)
from .eisenstein import (
    CubicCharacter,
    EisensteinInt,
    character_for_representation,
    chi9,
    chi9_gauss_sum_report,
    cubic_residue_character,
    eis_gcd,
    factor_rhs,
    gaussian_sum,
)
from .errors import (
    ComplexRoots,
    CongruenceFailure,
    CountMismatch,
    CubicPeriodsError,
    FactorizationMismatch,
    GeneratorFailure,
    IdentityFailure,
    InvalidConductor,
    MatchingFailure,
    NonIntegralCoefficient,
    NormalizationFailure,
    NotPrimitiveRoot,
    ParityError,
    RelationFailure,
    RoundingFailure,
    ToleranceExceeded,
    VerificationError,
)
from .groupring import (
    ConjugateVector,
    GroupRingElement,
    apply,
    gr_mul,
    idempotents,
    unit_list_p3,
    verify_generators,
)
from .periods import (
    DEFAULT_TOLERANCE,
    FieldRecord,
    PeriodTriple,
    UnitGroup,
    gaussian_periods,
    match_fields,
    numeric_period_poly,
    primitive_cubic_kernels,
    real_roots_cubic,
    unit_group,
    verify_kernel_character,
    verify_period_relation,
    verify_sign_congruences,
)
from .quadform import Representation, ShanksParams, representations, shanks_params
from .verdicts import Verdict

__version__ = "0.1.0"
