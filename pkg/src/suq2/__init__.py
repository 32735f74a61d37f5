"""Numerical discrete quantum group su_q(2) and its compact dual.

The package builds the finite dimensional irreducible representations of
the deformed enveloping algebra with generators e, f, q, assembles their
tensor product decompositions, equips the resulting direct sum of matrix
blocks with its Hopf algebra structure (coproduct, counit, antipode,
scaling group, integrals, cointegral), and realizes the dual compact
quantum group generated by the spin-1/2 matrix coefficients.  Every
structural identity ships as a named, machine checkable residual; see
`suq2.verify` and the `suq2` command line tool.

Conventions: spins are passed as doubled integers (`two_n = 2n`), weight
bases are ordered by descending weight, and `lam = exp(t)` with `t > 0`.
"""

from .params import Params
from .words import (
    AlgPoly,
    Gen,
    TensorPoly,
    formal_antipode,
    formal_coproduct,
    formal_counit,
)
from .reps import (
    Rep,
    build_rep,
    casimir_matrix,
    casimir_scalar,
    classify_by_highest_weight,
    evaluate,
    evaluate_in,
    ladder_poly_coeffs,
    ladder_poly_matrix,
    relation_residuals,
)
from .clebsch import (
    CGIsometry,
    Decomposition,
    TensorRep,
    decompose,
    decomposition_residuals,
    index_set,
    tensor_rep,
)
from .discrete import (
    AlgElement,
    BiElement,
    antipode,
    antipode_inv,
    cointegral,
    cointegral_coproduct,
    coproduct_component,
    coproduct_window,
    counit,
    embed,
    invariant_vector,
    left_integral,
    matrix_unit,
    modular_automorphism,
    modular_element_block,
    one_window,
    quantum_dimension,
    right_integral,
    scaling,
    scaling_imag,
    unitary_antipode,
)
from .dual import (
    U_LABELS,
    DualElement,
    dual_antipode,
    dual_antipode_inv,
    dual_counit,
    dual_haar,
    dual_modular,
    dual_modular_inv,
    dual_mul,
    dual_star,
    dual_unit,
    pair,
    span_check,
    u_entry,
    u_entries,
    unitarity_residuals,
    woronowicz_residuals,
)
from .util import weights
from .verify import Check, Report, RunConfig, run_suite

__version__ = "0.1.0"

__all__ = [
    "AlgElement",
    "AlgPoly",
    "BiElement",
    "CGIsometry",
    "Check",
    "Decomposition",
    "DualElement",
    "Gen",
    "Params",
    "Rep",
    "Report",
    "RunConfig",
    "TensorPoly",
    "TensorRep",
    "U_LABELS",
    "antipode",
    "antipode_inv",
    "build_rep",
    "casimir_matrix",
    "casimir_scalar",
    "classify_by_highest_weight",
    "cointegral",
    "cointegral_coproduct",
    "coproduct_component",
    "coproduct_window",
    "counit",
    "decompose",
    "decomposition_residuals",
    "dual_antipode",
    "dual_antipode_inv",
    "dual_counit",
    "dual_haar",
    "dual_modular",
    "dual_modular_inv",
    "dual_mul",
    "dual_star",
    "dual_unit",
    "embed",
    "evaluate",
    "evaluate_in",
    "formal_antipode",
    "formal_coproduct",
    "formal_counit",
    "index_set",
    "invariant_vector",
    "ladder_poly_coeffs",
    "ladder_poly_matrix",
    "left_integral",
    "matrix_unit",
    "modular_automorphism",
    "modular_element_block",
    "one_window",
    "pair",
    "quantum_dimension",
    "relation_residuals",
    "right_integral",
    "run_suite",
    "scaling",
    "scaling_imag",
    "span_check",
    "tensor_rep",
    "u_entries",
    "u_entry",
    "unitarity_residuals",
    "unitary_antipode",
    "weights",
    "woronowicz_residuals",
]
