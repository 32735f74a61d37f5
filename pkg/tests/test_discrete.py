"""Direct sum algebra: coproduct, antipode, scaling group, integrals."""

import numpy as np
import pytest

from suq2.discrete import (
    AlgElement,
    antipode,
    antipode_inv,
    cointegral,
    cointegral_coproduct,
    conjugate_unitary,
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
from suq2.params import Params
from suq2.reps import build_rep, evaluate
from suq2.util import max_abs, weights
from suq2.verify import (
    antipode_law_residual,
    coassociativity_residual,
    counit_law_residual,
    flip_residual,
    invariance_residual,
    modular_certificate_residual,
    scaling_compat_residual,
)
from suq2.words import E, F, Q, QINV, formal_antipode

PARAMS = Params(t=0.3)
LAM = PARAMS.lam
WINDOW = list(range(0, 5))


def _random_element(seed, two_ns=WINDOW):
    rng = np.random.default_rng(seed)
    return AlgElement(
        {
            two_n: rng.standard_normal((two_n + 1, two_n + 1))
            + 1j * rng.standard_normal((two_n + 1, two_n + 1))
            for two_n in two_ns
        }
    )


def test_embed_evaluates_blockwise():
    a = embed(PARAMS, E * F, WINDOW)
    for two_n in WINDOW:
        rep = build_rep(PARAMS, two_n)
        assert max_abs(a.block(two_n) - evaluate(rep, E * F)) < 1e-13


def test_counit_reads_the_trivial_block():
    assert counit(one_window(WINDOW)) == 1.0
    assert counit(embed(PARAMS, E, WINDOW)) == 0.0
    assert counit(matrix_unit(0, 0, 0)) == 1.0
    assert counit(matrix_unit(2, 0, 0)) == 0.0


def test_algebra_operations():
    a = _random_element(1)
    b = _random_element(2)
    assert ((a + b) - b - a).norm() < 1e-12
    assert ((2.0 * a) - a - a).norm() < 1e-12
    assert (a * one_window(WINDOW) - a).norm() < 1e-12
    assert ((a * b).star() - b.star() * a.star()).norm() < 1e-12
    assert (a.star().star() - a).norm() == 0.0


def test_matrix_unit_multiplication_table():
    e12 = matrix_unit(2, 2, 0)
    e23 = matrix_unit(2, 0, -2)
    e13 = matrix_unit(2, 2, -2)
    assert (e12 * e23 - e13).norm() == 0.0
    assert (e23 * e12).norm() == 0.0


def test_coproduct_component_against_tensor_evaluation():
    # embedding then decomposing must agree with evaluating on the product
    from suq2.clebsch import tensor_rep
    from suq2.reps import evaluate_in

    a = embed(PARAMS, Q * E * F, list(range(0, 9)))
    for two_n in range(0, 4):
        for two_m in range(0, 4):
            left = build_rep(PARAMS, two_n)
            right = build_rep(PARAMS, two_m)
            trep = tensor_rep(left, right)
            direct = evaluate_in(trep.gen_matrices, Q * E * F, trep.dim)
            assert max_abs(coproduct_component(PARAMS, a, two_n, two_m) - direct) < 1e-10


def test_coproduct_window_collects_blocks():
    a = matrix_unit(2, 0, 0)
    pairs = [(1, 1), (2, 0), (0, 2)]
    window = coproduct_window(PARAMS, a, pairs)
    for two_n, two_m in pairs:
        assert window.block(two_n, two_m).shape == ((two_n + 1) * (two_m + 1),) * 2


@pytest.mark.parametrize("two_m", range(0, 4))
def test_counit_laws_on_battery(two_m):
    for a in [_random_element(3), embed(PARAMS, E * F, WINDOW), matrix_unit(2, 2, -2)]:
        assert counit_law_residual(PARAMS, a, two_m) < 1e-9


@pytest.mark.parametrize("two_n", range(0, 4))
def test_antipode_laws_on_battery(two_n):
    for a in [_random_element(4), embed(PARAMS, Q * E, WINDOW), matrix_unit(1, 1, -1)]:
        assert antipode_law_residual(PARAMS, a, two_n) < 1e-9


def test_coassociativity_on_battery():
    a = _random_element(5, [0, 1, 2, 3])
    for two_n in range(0, 3):
        for two_m in range(0, 3):
            for two_l in range(0, 3):
                assert coassociativity_residual(PARAMS, a, two_n, two_m, two_l) < 1e-9


def test_coproduct_is_multiplicative_and_star_compatible():
    a = _random_element(6)
    b = _random_element(7)
    for two_n in range(0, 3):
        for two_m in range(0, 3):
            left = coproduct_component(PARAMS, a * b, two_n, two_m)
            right = coproduct_component(PARAMS, a, two_n, two_m) @ coproduct_component(
                PARAMS, b, two_n, two_m
            )
            assert max_abs(left - right) < 1e-9
            star = coproduct_component(PARAMS, a.star(), two_n, two_m)
            assert max_abs(star - coproduct_component(PARAMS, a, two_n, two_m).conj().T) < 1e-9


def test_conjugate_unitary_squares_to_parity():
    for two_n in range(0, 5):
        g = conjugate_unitary(two_n)
        basis = np.eye(two_n + 1, dtype=complex)
        parity = (-1.0) ** two_n
        for i in range(two_n + 1):
            assert max_abs(g.apply(g.apply(basis[i])) - parity * basis[i]) < 1e-14
        # unitary as a matrix: columns orthonormal
        assert max_abs(g.matrix.conj().T @ g.matrix - np.eye(two_n + 1)) < 1e-14


def test_unitary_antipode_closed_form_on_matrix_units():
    for two_n in range(0, 4):
        for two_r in weights(two_n):
            for two_s in weights(two_n):
                image = unitary_antipode(matrix_unit(two_n, two_r, two_s))
                sign = (-1.0) ** ((two_s - two_r) // 2)
                expected = sign * matrix_unit(two_n, -two_s, -two_r)
                assert (image - expected).norm() < 1e-13


def test_unitary_antipode_is_star_antiautomorphism():
    a = _random_element(8)
    b = _random_element(9)
    assert (unitary_antipode(unitary_antipode(a)) - a).norm() < 1e-12
    assert (unitary_antipode(a * b) - unitary_antipode(b) * unitary_antipode(a)).norm() < 1e-12
    assert (unitary_antipode(a.star()) - unitary_antipode(a).star()).norm() < 1e-12


def test_unitary_antipode_on_embedded_generators():
    assert (unitary_antipode(embed(PARAMS, Q, WINDOW)) - embed(PARAMS, QINV, WINDOW)).norm() < 1e-12
    assert (unitary_antipode(embed(PARAMS, E, WINDOW)) + embed(PARAMS, E, WINDOW)).norm() < 1e-12
    assert (unitary_antipode(embed(PARAMS, F, WINDOW)) + embed(PARAMS, F, WINDOW)).norm() < 1e-12


def test_unitary_antipode_flips_the_coproduct():
    a = _random_element(10)
    for two_n in range(0, 3):
        for two_m in range(0, 3):
            assert flip_residual(PARAMS, a, two_n, two_m) < 1e-9


def test_antipode_matches_symbolic_antipode():
    for x in [Q, QINV, E, F, E * F, Q * E]:
        lhs = antipode(PARAMS, embed(PARAMS, x, WINDOW))
        rhs = embed(PARAMS, formal_antipode(x, LAM), WINDOW)
        assert (lhs - rhs).norm() < 1e-12


def test_antipode_closed_form_on_matrix_units():
    for two_n in range(0, 4):
        for two_r in weights(two_n):
            for two_s in weights(two_n):
                image = antipode(PARAMS, matrix_unit(two_n, two_r, two_s))
                factor = (-1.0) ** ((two_s - two_r) // 2) * PARAMS.lam_pow(two_s - two_r)
                expected = factor * matrix_unit(two_n, -two_s, -two_r)
                assert (image - expected).norm() < 1e-12
                inv = antipode_inv(PARAMS, matrix_unit(two_n, two_r, two_s))
                factor = (-1.0) ** ((two_s - two_r) // 2) * PARAMS.lam_pow(two_r - two_s)
                expected = factor * matrix_unit(two_n, -two_s, -two_r)
                assert (inv - expected).norm() < 1e-12


def test_antipode_squared_is_imaginary_time_scaling():
    a = _random_element(11)
    assert (antipode_inv(PARAMS, antipode(PARAMS, a)) - a).norm() < 1e-12
    twice = antipode(PARAMS, antipode(PARAMS, a))
    assert (twice - scaling_imag(PARAMS, a, -1.0)).norm() < 1e-12
    # S^2 = conjugation by q^-2 blockwise
    for two_n in WINDOW:
        d = modular_element_block(PARAMS, two_n)
        sq = np.diag(np.sqrt(np.diag(d).real))  # q^2 on the block
        manual = np.linalg.inv(sq) @ a.block(two_n) @ sq
        assert max_abs(twice.block(two_n) - manual) < 1e-10


def test_scaling_group_laws():
    a = _random_element(12)
    assert (scaling(PARAMS, a, 0.0) - a).norm() < 1e-13
    s1, s2 = 0.8, -0.5
    assert (
        scaling(PARAMS, scaling(PARAMS, a, s1), s2) - scaling(PARAMS, a, s1 + s2)
    ).norm() < 1e-12
    assert (scaling(PARAMS, a.star(), s1) - scaling(PARAMS, a, s1).star()).norm() < 1e-12
    for two_n in range(0, 3):
        for two_m in range(0, 3):
            assert scaling_compat_residual(PARAMS, a, two_n, two_m, s1) < 1e-9


def test_scaling_fixes_counit_and_integrals():
    a = _random_element(13)
    s = 1.7
    assert abs(counit(scaling(PARAMS, a, s)) - counit(a)) < 1e-12
    assert abs(left_integral(PARAMS, scaling(PARAMS, a, s)) - left_integral(PARAMS, a)) < 1e-9


def test_cointegral_is_absorbing():
    h = cointegral()
    for a in [_random_element(14), embed(PARAMS, E * F, WINDOW), matrix_unit(2, 2, 0)]:
        assert (a * h - counit(a) * h).norm() < 1e-12
        assert (h * a - counit(a) * h).norm() < 1e-12
    assert counit(h) == 1.0


@pytest.mark.parametrize("two_n", range(0, 6))
def test_cointegral_coproduct_two_routes(two_n):
    closed = cointegral_coproduct(PARAMS, two_n)
    assembled = coproduct_component(PARAMS, cointegral(), two_n, two_n)
    assert max_abs(closed - assembled) < 1e-10


@pytest.mark.parametrize("two_n", range(0, 6))
def test_cointegral_coproduct_is_rank_one_projection(two_n):
    block = cointegral_coproduct(PARAMS, two_n)
    assert max_abs(block @ block - block) < 1e-10
    assert max_abs(block - block.conj().T) < 1e-12
    sing = np.linalg.svd(block, compute_uv=False)
    assert abs(sing[0] - 1.0) < 1e-10
    if sing.size > 1:
        assert sing[1] < 1e-10
    vec = invariant_vector(PARAMS, two_n)
    assert max_abs(block - np.outer(vec, vec.conj())) < 1e-10
    assert abs(np.linalg.norm(vec) - 1.0) < 1e-12


def test_integral_values_on_matrix_units():
    for two_n in range(0, 5):
        c_n = quantum_dimension(PARAMS, two_n)
        for two_r in weights(two_n):
            unit = matrix_unit(two_n, two_r, two_r)
            assert abs(left_integral(PARAMS, unit) - c_n * PARAMS.lam_pow(-2 * two_r)) < 1e-10
            assert abs(right_integral(PARAMS, unit) - c_n * PARAMS.lam_pow(2 * two_r)) < 1e-10
    # off-diagonal units are null
    assert left_integral(PARAMS, matrix_unit(2, 2, 0)) == 0.0
    assert right_integral(PARAMS, matrix_unit(2, 0, -2)) == 0.0


def test_integrals_normalize_the_cointegral():
    h = cointegral()
    assert abs(left_integral(PARAMS, h) - 1.0) < 1e-14
    assert abs(right_integral(PARAMS, h) - 1.0) < 1e-14


@pytest.mark.parametrize("two_n", range(0, 4))
def test_integral_invariance(two_n):
    for a in [matrix_unit(2, 2, -2), matrix_unit(1, 1, 1), _random_element(15, [0, 1, 2])]:
        left, right = invariance_residual(PARAMS, a, two_n)
        assert left < 1e-9
        assert right < 1e-9


def test_quantum_dimension_values():
    assert abs(quantum_dimension(PARAMS, 0) - 1.0) < 1e-14
    assert abs(quantum_dimension(PARAMS, 1) - (LAM + 1.0 / LAM)) < 1e-13
    assert abs(
        quantum_dimension(PARAMS, 2) - (LAM**2 + 1.0 + LAM**-2)
    ) < 1e-13


@pytest.mark.parametrize("two_n", range(0, 4))
@pytest.mark.parametrize("kind", ["left", "right"])
def test_modular_certificates(two_n, kind):
    assert modular_certificate_residual(PARAMS, two_n, kind) < 1e-11


def test_modular_automorphisms_are_mutually_inverse():
    a = _random_element(16)
    round_trip = modular_automorphism(
        PARAMS, modular_automorphism(PARAMS, a, "left"), "right"
    )
    assert (round_trip - a).norm() < 1e-12
    assert abs(
        left_integral(PARAMS, modular_automorphism(PARAMS, a, "left"))
        - left_integral(PARAMS, a)
    ) < 1e-9


def test_modular_element_is_q_fourth():
    delta = embed(PARAMS, Q * Q * Q * Q, WINDOW)
    for two_n in WINDOW:
        assert max_abs(delta.block(two_n) - modular_element_block(PARAMS, two_n)) < 1e-12


def test_alg_element_validation():
    with pytest.raises(ValueError):
        AlgElement({1: np.zeros((3, 3))})  # wrong block shape for spin 1/2
    with pytest.raises(ValueError):
        matrix_unit(2, 3, 0)  # weight not in the block's grid
