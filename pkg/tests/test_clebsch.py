"""Tensor product decompositions: index sets, isometries, reconstruction."""

import numpy as np
import pytest

from suq2.clebsch import (
    decompose,
    decomposition_residuals,
    highest_weight_vector,
    index_set,
    tensor_rep,
)
from suq2.params import Params
from suq2.reps import build_rep, evaluate, evaluate_in
from suq2.util import max_abs
from suq2.words import E, F, Q, QINV, formal_coproduct, AlgPoly

PARAMS = Params(t=0.3)
LAM = PARAMS.lam

WORDS = [Q, QINV, E, F, E * F, Q * E * F]


def test_index_set_examples():
    assert index_set(0, 0) == [0]
    assert index_set(1, 1) == [0, 2]
    assert index_set(2, 3) == [1, 3, 5]
    assert index_set(0, 4) == [4]
    assert index_set(4, 4) == [0, 2, 4, 6, 8]


@pytest.mark.parametrize("two_n", range(0, 7))
@pytest.mark.parametrize("two_m", range(0, 7))
def test_dimension_identity_is_exact(two_n, two_m):
    total = sum(two_k + 1 for two_k in index_set(two_n, two_m))
    assert total == (two_n + 1) * (two_m + 1)


@pytest.mark.parametrize("two_n", range(0, 7))
@pytest.mark.parametrize("two_m", range(0, 7))
def test_decomposition_residuals(two_n, two_m):
    res = decomposition_residuals(PARAMS, two_n, two_m)
    assert res["orthonormality"] < 1e-9
    assert res["completeness"] < 1e-9
    assert res["intertwining"] < 1e-9


def test_worked_half_half_example():
    dec = decompose(PARAMS, 1, 1)
    root = np.sqrt(LAM + 1.0 / LAM)

    singlet = dec.piece(0).v[:, 0]
    expected = np.array([0.0, LAM**-0.5, -(LAM**0.5), 0.0]) / root
    assert max_abs(singlet - expected) < 1e-12

    triplet = dec.piece(2).v
    assert max_abs(triplet[:, 0] - np.array([1.0, 0, 0, 0])) < 1e-12
    middle = np.array([0.0, LAM**0.5, LAM**-0.5, 0.0]) / root
    assert max_abs(triplet[:, 1] - middle) < 1e-12
    assert max_abs(triplet[:, 2] - np.array([0.0, 0, 0, 1.0])) < 1e-12


def test_half_half_lowering_identity():
    # D(f) applied to the top product vector splits with the quantum weights
    left = build_rep(PARAMS, 1)
    trep = tensor_rep(left, left)
    top = np.array([1.0, 0.0, 0.0, 0.0])
    lowered = trep.f @ top
    expected = np.array([0.0, LAM**0.5, LAM**-0.5, 0.0])
    assert max_abs(lowered - expected) < 1e-13


def test_tensor_with_trivial_is_identity():
    for two_m in range(0, 5):
        assert max_abs(decompose(PARAMS, 0, two_m).piece(two_m).v - np.eye(two_m + 1)) < 1e-12
        assert max_abs(decompose(PARAMS, two_m, 0).piece(two_m).v - np.eye(two_m + 1)) < 1e-12


@pytest.mark.parametrize("two_n", range(0, 5))
@pytest.mark.parametrize("two_m", range(0, 5))
def test_block_reconstruction_on_word_battery(two_n, two_m):
    left = build_rep(PARAMS, two_n)
    right = build_rep(PARAMS, two_m)
    trep = tensor_rep(left, right)
    dec = decompose(PARAMS, two_n, two_m)
    for x in WORDS:
        direct = evaluate_in(trep.gen_matrices, x, trep.dim)
        assembled = np.zeros_like(direct)
        for piece in dec.pieces:
            rep_k = build_rep(PARAMS, piece.two_k)
            assembled += piece.v @ evaluate(rep_k, x) @ piece.v.conj().T
        assert max_abs(assembled - direct) < 1e-9


@pytest.mark.parametrize("two_n", range(0, 4))
@pytest.mark.parametrize("two_m", range(0, 4))
def test_tensor_generators_match_symbolic_coproduct(two_n, two_m):
    # independent route: expand D(x) symbolically, evaluate legs, kron, sum
    left = build_rep(PARAMS, two_n)
    right = build_rep(PARAMS, two_m)
    trep = tensor_rep(left, right)
    for x in WORDS:
        direct = evaluate_in(trep.gen_matrices, x, trep.dim)
        symbolic = np.zeros_like(direct)
        for (w1, w2), coeff in formal_coproduct(x).terms.items():
            m1 = evaluate(left, AlgPoly({w1: 1.0}))
            m2 = evaluate(right, AlgPoly({w2: 1.0}))
            symbolic += coeff * np.kron(m1, m2)
        assert max_abs(symbolic - direct) < 1e-10


def test_highest_weight_vector_is_annihilated_and_normalized():
    left = build_rep(PARAMS, 3)
    right = build_rep(PARAMS, 2)
    trep = tensor_rep(left, right)
    for two_k in index_set(3, 2):
        v = highest_weight_vector(PARAMS, trep, two_k)
        assert abs(np.linalg.norm(v) - 1.0) < 1e-12
        assert np.linalg.norm(trep.e @ v) < 1e-10
        # weight of the vector is k
        weighted = trep.q @ v
        assert max_abs(weighted - PARAMS.lam_pow(two_k) * v) < 1e-10


def test_highest_weight_vector_phase_is_deterministic():
    left = build_rep(PARAMS, 2)
    trep = tensor_rep(left, left)
    v1 = highest_weight_vector(PARAMS, trep, 2)
    v2 = highest_weight_vector(PARAMS, trep, 2)
    assert np.array_equal(v1, v2)
    first = v1[np.flatnonzero(np.abs(v1) > 1e-9)[0]]
    assert abs(first.imag) < 1e-12 and first.real > 0


def test_highest_weight_rejects_foreign_spin():
    left = build_rep(PARAMS, 1)
    trep = tensor_rep(left, left)
    with pytest.raises(ValueError):
        highest_weight_vector(PARAMS, trep, 4)
    with pytest.raises(ValueError):
        highest_weight_vector(PARAMS, trep, 1)


def test_decompose_results_are_memoized():
    a = decompose(PARAMS, 2, 2)
    b = decompose(PARAMS, 2, 2)
    assert a is b


def test_decomposition_piece_lookup():
    dec = decompose(PARAMS, 1, 2)
    assert dec.piece(1).v.shape == (6, 2)
    assert dec.piece(3).v.shape == (6, 4)
    with pytest.raises(KeyError):
        dec.piece(5)


def test_residuals_hold_at_other_deformations():
    for t in (0.1, 0.5, 1.0):
        params = Params(t=t)
        res = decomposition_residuals(params, 3, 3)
        assert max(res.values()) < 1e-9, (t, res)
