"""Occupation-number second-quantization toolkit.

States are finite linear combinations of occupation-number kets; inner
products run through permanent/determinant kernels; observables are built
from ladder-operator expressions; a dense labeled-tensor-product reference
implementation is included for cross-validation.
"""

from ._qspace import (
    BasisKet,
    ComparisonReport,
    FormatError,
    LabeledOperator,
    LabeledVector,
    OneBodyCoeffs,
    OperatorExpr,
    RelationReport,
    StateVector,
    Statistics,
    TwoBodyCoeffs,
    add,
    apply_annihilate,
    apply_create,
    apply_expr,
    build_one_body,
    build_two_body,
    canonicalize,
    check_car,
    check_ccr,
    compare_formulations,
    correlation_coeffs,
    determinant,
    embed,
    embed_state,
    expectation,
    first_quantized_one_body,
    first_quantized_two_body,
    inner,
    is_similar,
    ket_inner,
    labeled_inner,
    norm,
    normalize,
    occupation,
    one_body,
    one_body_from_spectral,
    permanent,
    scale,
    sigma_n,
    sigma_z,
    spin_correlation_scan,
    state,
    state_from_json,
    state_to_json,
    up_down_pair_state,
    vacuum,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
