"""Support distributions, support enumerators and duality checks for linear codes."""

from .charsum import (
    CyclotomicInt,
    char,
    full_field_char_sum,
    lemma_char_sum,
    scaled_char_sum,
    scan_lemma,
)
from .code import (
    ENUM_MAX,
    CoordinatePartition,
    LinearCode,
    code_from_generator,
    codewords,
    contains,
    dual,
    full_space,
    is_self_dual,
    min_distance,
    standard_basis_partition,
    zero_code,
)
from .enumerator import (
    RationalPoly,
    SupportDistribution,
    WeightDistribution,
    macwilliams_transform,
    support_distribution_closed,
    support_distribution_enum,
    support_enumerator,
    total_weight_identity,
    verify_self_dual_criterion,
    verify_support_identity,
    weight_distribution,
    weight_enumerator,
)
from .families import extended_hamming_8_4, hamming, repetition, simplex
from .field import FieldElement, FieldSpec, field_new, gf
from .linalg import MatrixFq, nullspace_basis, rref

__version__ = "0.1.0"
