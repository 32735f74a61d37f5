"""Tensor products of irreducible representations and their decomposition.

The comultiplication turns the tensor product of two irreducible
representations into a new representation with generator images

    D(q) = q (x) q,   D(e) = q (x) e + e (x) q^-1,   D(f) = q (x) f + f (x) q^-1,

on C^(dim_left * dim_right) in the lexicographic product basis (left factor
index major).  For spins n and m it decomposes as the direct sum of the
irreducibles k = |n - m|, ..., n + m, exactly as classically.  Each summand
is realized by an isometry V_k whose columns are built by

      * extracting the one dimensional kernel of the raising operator on
        the weight-k subspace (SVD; smallest singular vector),
      * fixing the phase so the first nonzero coordinate is real positive,
      * lowering with D(f) and dividing by the target amplitudes r^(k).

Column j of V_k is then the weight-j vector of the spin-k summand, so
V_k intertwines f by construction; that it also intertwines q and e is a
theorem the test-suite checks numerically.
"""

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .params import Params
from .reps import Rep, build_rep, casimir_matrix, casimir_scalar
from .util import max_abs, weights


@dataclass(frozen=True, eq=False)
class TensorRep:
    """Generator images on a tensor product of two irreducibles."""

    left: Rep
    right: Rep
    q: np.ndarray = field(repr=False)
    q_inv: np.ndarray = field(repr=False)
    e: np.ndarray = field(repr=False)
    f: np.ndarray = field(repr=False)
    two_weights: np.ndarray = field(repr=False)

    @property
    def dim(self) -> int:
        return self.left.dim * self.right.dim

    @property
    def gen_matrices(self) -> dict:
        from .words import Gen

        return {Gen.Q: self.q, Gen.QINV: self.q_inv, Gen.E: self.e, Gen.F: self.f}


def tensor_rep(left: Rep, right: Rep) -> TensorRep:
    """Assemble the coproduct generator images on the product basis."""
    q = np.kron(left.q, right.q)
    q_inv = np.kron(left.q_inv, right.q_inv)
    e = np.kron(left.q, right.e) + np.kron(left.e, right.q_inv)
    f = np.kron(left.q, right.f) + np.kron(left.f, right.q_inv)
    wl = weights(left.two_n)
    wr = weights(right.two_n)
    two_weights = (wl[:, None] + wr[None, :]).reshape(-1)
    return TensorRep(left=left, right=right, q=q, q_inv=q_inv, e=e, f=f, two_weights=two_weights)


def index_set(two_n: int, two_m: int) -> list:
    """Doubled spins occurring in the spin-n (x) spin-m decomposition."""
    if two_n < 0 or two_m < 0:
        raise ValueError("doubled spins must be nonnegative")
    return list(range(abs(two_n - two_m), two_n + two_m + 1, 2))


def highest_weight_vector(params: Params, trep: TensorRep, two_k: int) -> np.ndarray:
    """Unit vector of weight k killed by the raising operator.

    The raising operator maps the weight-k subspace into the weight-(k+2)
    subspace; its kernel there is one dimensional for every k in the index
    set.  The phase is fixed by making the first nonzero coordinate (in the
    product basis order) real positive.
    """
    if two_k not in index_set(trep.left.two_n, trep.right.two_n):
        raise ValueError(
            f"doubled spin {two_k} not in the index set of "
            f"({trep.left.two_n}, {trep.right.two_n})"
        )
    cols = np.flatnonzero(trep.two_weights == two_k)
    rows = np.flatnonzero(trep.two_weights == two_k + 2)

    if rows.size == 0:
        kernel = np.eye(cols.size, dtype=complex)
    else:
        block = trep.e[np.ix_(rows, cols)]
        _, sing, vh = np.linalg.svd(block, full_matrices=True)
        cutoff = params.tol_rel * (float(sing[0]) if sing.size else 0.0)
        rank = int(np.sum(sing > cutoff))
        kernel = vh[rank:].conj()

    if kernel.shape[0] != 1:
        raise ValueError(
            f"raising kernel at doubled weight {two_k} has dimension {kernel.shape[0]}, expected 1"
        )

    v = np.zeros(trep.dim, dtype=complex)
    v[cols] = kernel[0]
    v /= np.linalg.norm(v)

    support = np.abs(v) > max(params.tol_abs, params.tol_rel * float(np.max(np.abs(v))))
    first = int(np.flatnonzero(support)[0])
    phase = v[first] / abs(v[first])
    return v * phase.conjugate()


@dataclass(frozen=True, eq=False)
class CGIsometry:
    """Isometry from the spin-k summand into spin-n (x) spin-m."""

    two_n: int
    two_m: int
    two_k: int
    v: np.ndarray = field(repr=False)


def cg_isometry(params: Params, trep: TensorRep, two_k: int) -> CGIsometry:
    """Build one summand isometry by lowering from the highest weight vector.

    Raises
    ------
    ValueError
        If a column norm drifts from 1 beyond tolerance, which would mean
        the lowering amplitudes do not match the tensor product side.
    """
    rep_k = build_rep(params, two_k, +1)
    dim_k = rep_k.dim
    v = np.zeros((trep.dim, dim_k), dtype=complex)
    v[:, 0] = highest_weight_vector(params, trep, two_k)
    for i in range(1, dim_k):
        v[:, i] = (trep.f @ v[:, i - 1]) / rep_k.r[i - 1]

    norms = np.linalg.norm(v, axis=0)
    drift = float(np.max(np.abs(norms - 1.0)))
    if drift > params.tol_abs + params.tol_rel:
        raise ValueError(f"summand column norms deviate from 1 by {drift:.3e}")
    return CGIsometry(two_n=trep.left.two_n, two_m=trep.right.two_n, two_k=two_k, v=v)


@dataclass(frozen=True, eq=False)
class Decomposition:
    """Complete family of summand isometries for one tensor product."""

    two_n: int
    two_m: int
    pieces: tuple

    def piece(self, two_k: int) -> CGIsometry:
        for p in self.pieces:
            if p.two_k == two_k:
                return p
        raise KeyError(two_k)


def _polish(params: Params, trep: TensorRep, pieces: tuple) -> tuple:
    """Remove lowering drift by snapping to the tensor Casimir eigenbasis.

    The summand columns at one weight jointly diagonalize the hermitian
    Casimir of the tensor representation, with eigenvalues known in closed
    form.  At large deformation the lowering cascade spans a dynamic range
    of order lam^(2(n+m)) and loses digits; two Newton sweeps of the
    first-order eigenvector correction  Z[a,b] = R[a,b] / (c_b - c_a)  with
    R = X* C X - diag(c), followed by the polar snap to the closest
    isometry, restore them.  Corrections across near-degenerate eigenvalue
    pairs are skipped: there the gap quotient would amplify roundoff, and
    the lowering construction is accurate in exactly that regime.
    """
    cas = casimir_matrix(params, trep)
    columns = {p.two_k: np.array(p.v) for p in pieces}
    c_all = {p.two_k: casimir_scalar(params, p.two_k) for p in pieces}

    for two_w in np.unique(trep.two_weights):
        idx = np.flatnonzero(trep.two_weights == two_w)
        ks = [p.two_k for p in pieces if p.two_k >= abs(int(two_w))]
        if len(ks) != idx.size:
            raise AssertionError("weight multiplicity mismatch")
        cols = [(two_k, (two_k - int(two_w)) // 2) for two_k in ks]
        x = np.stack([columns[two_k][idx, j] for two_k, j in cols], axis=1)
        c_w = cas[np.ix_(idx, idx)]
        c = np.array([c_all[two_k] for two_k in ks])
        gaps = c[None, :] - c[:, None]
        scale = float(np.max(np.abs(c)))
        eps = np.finfo(float).eps
        safe = np.abs(gaps) >= np.sqrt(eps) * scale
        floor = 64.0 * eps * idx.size * scale
        for _ in range(2):
            r = x.conj().T @ c_w @ x - np.diag(c)
            z = np.where(safe & (np.abs(r) >= floor), r / np.where(safe, gaps, 1.0), 0.0)
            np.fill_diagonal(z, 0.0)
            if not np.count_nonzero(z):
                break
            u, _, vh = np.linalg.svd(x + x @ z)
            x = u @ vh
        for col, (two_k, j) in enumerate(cols):
            columns[two_k][idx, j] = x[:, col]

    return tuple(
        CGIsometry(two_n=p.two_n, two_m=p.two_m, two_k=p.two_k, v=columns[p.two_k])
        for p in pieces
    )


@lru_cache(maxsize=None)
def decompose(params: Params, two_n: int, two_m: int) -> Decomposition:
    """Decompose spin-n (x) spin-m into irreducible summands.

    Results are memoized per (params, two_n, two_m); the returned object is
    shared, so callers must treat it as read-only.
    """
    left = build_rep(params, two_n, +1)
    right = build_rep(params, two_m, +1)
    trep = tensor_rep(left, right)
    pieces = tuple(cg_isometry(params, trep, two_k) for two_k in index_set(two_n, two_m))
    return Decomposition(two_n=two_n, two_m=two_m, pieces=_polish(params, trep, pieces))


def decomposition_residuals(params: Params, two_n: int, two_m: int) -> dict:
    """Numerical certificates that the summand isometries are correct.

    Returns max-abs residuals for orthonormality of each V_k, mutual
    orthogonality of different summands, completeness (the V_k V_k* sum to
    the identity) and generator intertwining  V_k pi_k(x) = D(x) V_k  for
    x in {q, e, f}.
    """
    dec = decompose(params, two_n, two_m)
    left = build_rep(params, two_n, +1)
    right = build_rep(params, two_m, +1)
    trep = tensor_rep(left, right)

    ortho = 0.0
    for a in dec.pieces:
        for b in dec.pieces:
            gram = a.v.conj().T @ b.v
            expect = np.eye(a.v.shape[1]) if a.two_k == b.two_k else 0.0
            ortho = max(ortho, max_abs(gram - expect))

    total = sum(p.v @ p.v.conj().T for p in dec.pieces)
    completeness = max_abs(total - np.eye(trep.dim))

    intertwine = 0.0
    for p in dec.pieces:
        rep_k = build_rep(params, p.two_k, +1)
        for big, small in ((trep.q, rep_k.q), (trep.e, rep_k.e), (trep.f, rep_k.f)):
            intertwine = max(intertwine, max_abs(big @ p.v - p.v @ small))

    return {
        "orthonormality": ortho,
        "completeness": completeness,
        "intertwining": intertwine,
    }
