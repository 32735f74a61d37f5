"""The discrete quantum group built on the dual of the representation theory.

The function algebra is the algebraic direct sum  A = (+)_n M_(2n+1)(C)
over all doubled spins, one full matrix block per irreducible.  An element
is a finite family of blocks; products, sums and the star act blockwise.
The comultiplication of an element is specified by its components

    D(a)_(n,m) = sum_k V_k a_k V_k*        (k in the index set of (n, m)),

living on the tensor product of the spin-n and spin-m blocks, where the
V_k are the summand isometries of the tensor product decomposition.  On
top of this sit a counit (the spin-0 entry), a polar-decomposed antipode
S = R o tau_(-i/2) built from a conjugate-linear flip unitary and the
analytic continuation of the scaling group, a cointegral h (the unit of
the spin-0 block), and left/right invariant integrals with modular data
q^4.  All of these admit closed forms on matrix units, which is what the
verification batteries pin down.
"""

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .clebsch import decompose, index_set
from .params import Params
from .reps import build_rep, evaluate
from .util import max_abs, weight_index, weights
from .words import AlgPoly


class AlgElement:
    """Finitely supported element of the direct sum of matrix blocks."""

    __slots__ = ("blocks",)

    def __init__(self, blocks=None):
        self.blocks = {}
        if blocks:
            for two_n, mat in blocks.items():
                mat = np.asarray(mat, dtype=complex)
                if mat.shape != (two_n + 1, two_n + 1):
                    raise ValueError(
                        f"block {two_n} must be {two_n + 1} x {two_n + 1}, got {mat.shape}"
                    )
                if np.count_nonzero(mat):
                    self.blocks[int(two_n)] = mat

    @property
    def support(self) -> list:
        return sorted(self.blocks)

    def block(self, two_n: int) -> np.ndarray:
        """The block at doubled spin two_n (zeros if absent)."""
        if two_n in self.blocks:
            return self.blocks[two_n]
        return np.zeros((two_n + 1, two_n + 1), dtype=complex)

    def __add__(self, other):
        out = {n: m.copy() for n, m in self.blocks.items()}
        for n, m in other.blocks.items():
            out[n] = out[n] + m if n in out else m
        return AlgElement(out)

    def __sub__(self, other):
        return self + (-1.0) * other

    def __mul__(self, other):
        if isinstance(other, AlgElement):
            shared = self.blocks.keys() & other.blocks.keys()
            return AlgElement({n: self.blocks[n] @ other.blocks[n] for n in shared})
        return AlgElement({n: complex(other) * m for n, m in self.blocks.items()})

    def __rmul__(self, scalar):
        return AlgElement({n: complex(scalar) * m for n, m in self.blocks.items()})

    def __neg__(self):
        return (-1.0) * self

    def star(self):
        return AlgElement({n: m.conj().T for n, m in self.blocks.items()})

    def norm(self) -> float:
        return max((max_abs(m) for m in self.blocks.values()), default=0.0)

    def __repr__(self):
        return f"AlgElement(support={self.support})"


class BiElement:
    """Finitely supported element of the two-leg direct sum (+) A_n (x) A_m."""

    __slots__ = ("blocks",)

    def __init__(self, blocks=None):
        self.blocks = {}
        if blocks:
            for (two_n, two_m), mat in blocks.items():
                mat = np.asarray(mat, dtype=complex)
                dim = (two_n + 1) * (two_m + 1)
                if mat.shape != (dim, dim):
                    raise ValueError(f"block {(two_n, two_m)} must be {dim} x {dim}")
                if np.count_nonzero(mat):
                    self.blocks[(int(two_n), int(two_m))] = mat

    def block(self, two_n: int, two_m: int) -> np.ndarray:
        if (two_n, two_m) in self.blocks:
            return self.blocks[(two_n, two_m)]
        dim = (two_n + 1) * (two_m + 1)
        return np.zeros((dim, dim), dtype=complex)

    def __sub__(self, other):
        out = {k: m.copy() for k, m in self.blocks.items()}
        for k, m in other.blocks.items():
            out[k] = out[k] - m if k in out else -m
        return BiElement(out)

    def __mul__(self, other):
        shared = self.blocks.keys() & other.blocks.keys()
        return BiElement({k: self.blocks[k] @ other.blocks[k] for k in shared})

    def star(self):
        return BiElement({k: m.conj().T for k, m in self.blocks.items()})

    def norm(self) -> float:
        return max((max_abs(m) for m in self.blocks.values()), default=0.0)


def matrix_unit(two_n: int, two_r: int, two_s: int) -> AlgElement:
    """The matrix unit e_(r, s) of the spin-(two_n/2) block, weight labels."""
    dim = two_n + 1
    m = np.zeros((dim, dim), dtype=complex)
    m[weight_index(two_n, two_r), weight_index(two_n, two_s)] = 1.0
    return AlgElement({two_n: m})


def one_window(window) -> AlgElement:
    """Local unit: identity on every block in the window."""
    return AlgElement({two_n: np.eye(two_n + 1, dtype=complex) for two_n in window})


def embed(params: Params, x: AlgPoly, window) -> AlgElement:
    """Evaluate a formal polynomial in every block of a finite window."""
    return AlgElement(
        {two_n: evaluate(build_rep(params, two_n, +1), x) for two_n in window}
    )


def counit(a: AlgElement) -> complex:
    """The spin-0 entry; the counit of the comultiplication below."""
    if 0 in a.blocks:
        return complex(a.blocks[0][0, 0])
    return 0.0 + 0.0j


def coproduct_component(params: Params, a: AlgElement, two_n: int, two_m: int) -> np.ndarray:
    """The (n, m) block of D(a) on the product basis, as a dense matrix."""
    dim = (two_n + 1) * (two_m + 1)
    out = np.zeros((dim, dim), dtype=complex)
    relevant = [k for k in index_set(two_n, two_m) if k in a.blocks]
    if relevant:
        dec = decompose(params, two_n, two_m)
        for two_k in relevant:
            v = dec.piece(two_k).v
            out += v @ a.blocks[two_k] @ v.conj().T
    return out


def coproduct_window(params: Params, a: AlgElement, pairs) -> BiElement:
    """D(a) restricted to a finite family of (n, m) block pairs."""
    return BiElement(
        {(n, m): coproduct_component(params, a, n, m) for (n, m) in pairs}
    )


# ---------------------------------------------------------------------------
# scaling group and antipode
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class ConjugateUnitary:
    """Conjugate-linear unitary: a signed weight flip composed with
    entrywise complex conjugation.  Squares to +1 on integer spins and to
    -1 on half-integer spins."""

    two_n: int
    perm: np.ndarray = field(repr=False)
    signs: np.ndarray = field(repr=False)

    def apply(self, vec) -> np.ndarray:
        out = np.empty_like(np.asarray(vec, dtype=complex))
        out[self.perm] = self.signs * np.conj(vec)
        return out

    @property
    def matrix(self) -> np.ndarray:
        """The signed permutation part (the linear factor)."""
        dim = self.two_n + 1
        p = np.zeros((dim, dim))
        p[self.perm, np.arange(dim)] = self.signs
        return p


@lru_cache(maxsize=None)
def conjugate_unitary(two_n: int) -> ConjugateUnitary:
    """The flip sending the weight-j vector to (-1)^(n+j) times the
    weight-(-j) vector, composed with complex conjugation."""
    dim = two_n + 1
    perm = np.arange(dim - 1, -1, -1)
    signs = np.array([(-1.0) ** (two_n - i) for i in range(dim)])
    return ConjugateUnitary(two_n=two_n, perm=perm, signs=signs)


def unitary_antipode_block(two_n: int, mat: np.ndarray) -> np.ndarray:
    """R(a) = G^-1 a* G on one block; the conjugations cancel, leaving the
    linear sandwich P^T a^T P with P the signed flip."""
    p = conjugate_unitary(two_n).matrix
    return p.T @ mat.T @ p


def scaling_block(params: Params, two_n: int, mat: np.ndarray, s: float) -> np.ndarray:
    """tau_s(a) = q^(-2is) a q^(2is) on one block (s real)."""
    phase = np.exp(-1j * params.t * s * weights(two_n))
    return mat * np.outer(phase, 1.0 / phase)


def scaling_imag_block(params: Params, two_n: int, mat: np.ndarray, s: float) -> np.ndarray:
    """Analytic continuation tau_(is)(a) = q^(2s) a q^(-2s) on one block."""
    d = np.exp(params.t * s * weights(two_n))
    return mat * np.outer(d, 1.0 / d)


def antipode_block(params: Params, two_n: int, mat: np.ndarray) -> np.ndarray:
    """S = R o tau_(-i/2) on one block."""
    return unitary_antipode_block(two_n, scaling_imag_block(params, two_n, mat, -0.5))


def antipode_inv_block(params: Params, two_n: int, mat: np.ndarray) -> np.ndarray:
    """S^-1 = tau_(i/2) o R on one block."""
    return scaling_imag_block(params, two_n, unitary_antipode_block(two_n, mat), +0.5)


def _blockwise(a: AlgElement, fn) -> AlgElement:
    return AlgElement({n: fn(n, m) for n, m in a.blocks.items()})


def unitary_antipode(a: AlgElement) -> AlgElement:
    """The involutive *-antiautomorphism R; flips the comultiplication."""
    return _blockwise(a, unitary_antipode_block)


def scaling(params: Params, a: AlgElement, s: float) -> AlgElement:
    """One-parameter scaling group tau_s (s real); commutes with R."""
    return _blockwise(a, lambda n, m: scaling_block(params, n, m, s))


def scaling_imag(params: Params, a: AlgElement, s: float) -> AlgElement:
    """Entire extension tau_(is); s = -1 gives the antipode squared."""
    return _blockwise(a, lambda n, m: scaling_imag_block(params, n, m, s))


def antipode(params: Params, a: AlgElement) -> AlgElement:
    """S = R o tau_(-i/2); on matrix units S(e_(r,s)) = (-1)^(s-r) lam^(s-r) e_(-s,-r)."""
    return _blockwise(a, lambda n, m: antipode_block(params, n, m))


def antipode_inv(params: Params, a: AlgElement) -> AlgElement:
    return _blockwise(a, lambda n, m: antipode_inv_block(params, n, m))


# ---------------------------------------------------------------------------
# cointegral, integrals, modular structure
# ---------------------------------------------------------------------------


def cointegral() -> AlgElement:
    """The element h absorbing multiplication, a h = eps(a) h = h a;
    concretely the unit of the spin-0 block."""
    return AlgElement({0: np.array([[1.0]], dtype=complex)})


def quantum_dimension(params: Params, two_n: int) -> float:
    """sum_j lam^(2j) over the weights of the spin-(two_n/2) block."""
    return float(np.sum(np.exp(params.t * weights(two_n))))


def cointegral_coproduct(params: Params, two_n: int) -> np.ndarray:
    """The (n, n) block of D(h) in closed form:

        (1/c) sum_(r,s) (-1)^(s-r) lam^(r+s)  e_(-s,-r) (x) e_(s,r),

    with c the quantum dimension of the block.  It is the rank-1 orthogonal
    projection onto the canonical invariant vector of spin-n (x) spin-n.
    """
    dim = two_n + 1
    c = quantum_dimension(params, two_n)
    out = np.zeros((dim * dim, dim * dim), dtype=complex)
    for two_r in weights(two_n):
        for two_s in weights(two_n):
            row = weight_index(two_n, -two_s) * dim + weight_index(two_n, two_s)
            col = weight_index(two_n, -two_r) * dim + weight_index(two_n, two_r)
            sign = (-1.0) ** ((two_s - two_r) // 2)
            out[row, col] = sign * params.lam_pow(two_r + two_s) / c
    return out


def invariant_vector(params: Params, two_n: int) -> np.ndarray:
    """Unit vector spanning the range of the (n, n) block of D(h):

        (1/sqrt(c)) sum_k (-1)^(k+n) lam^k  xi_(-k) (x) xi_k.
    """
    dim = two_n + 1
    c = quantum_dimension(params, two_n)
    v = np.zeros(dim * dim, dtype=complex)
    for two_k in weights(two_n):
        pos = weight_index(two_n, -two_k) * dim + weight_index(two_n, two_k)
        v[pos] = (-1.0) ** ((two_k + two_n) // 2) * params.lam_pow(two_k)
    return v / np.sqrt(c)


def integral_weight_matrix(params: Params, two_n: int, kind: str) -> np.ndarray:
    """Values of the invariant integral on the matrix units of one block,
    as the matrix W with W[p, p'] = integral(e_(p, p')).

    kind "left" is the left invariant integral  phi(e_(r,s)) = c d(r,s) lam^(-2r);
    kind "right" the right invariant one       psi(e_(r,s)) = c d(r,s) lam^(2r).
    """
    c = quantum_dimension(params, two_n)
    two_js = weights(two_n)
    if kind == "left":
        return np.diag(c * np.exp(-params.t * two_js)).astype(complex)
    if kind == "right":
        return np.diag(c * np.exp(params.t * two_js)).astype(complex)
    raise ValueError(f"kind must be 'left' or 'right', got {kind!r}")


def left_integral(params: Params, a: AlgElement) -> complex:
    """phi(a) = sum_n c_n trace(a_n q^-2); left invariant for D."""
    total = 0.0 + 0.0j
    for two_n, mat in a.blocks.items():
        c = quantum_dimension(params, two_n)
        total += c * np.sum(np.diag(mat) * np.exp(-params.t * weights(two_n)))
    return complex(total)


def right_integral(params: Params, a: AlgElement) -> complex:
    """psi(a) = sum_n c_n trace(a_n q^2); right invariant for D."""
    total = 0.0 + 0.0j
    for two_n, mat in a.blocks.items():
        c = quantum_dimension(params, two_n)
        total += c * np.sum(np.diag(mat) * np.exp(params.t * weights(two_n)))
    return complex(total)


def modular_element_block(params: Params, two_n: int) -> np.ndarray:
    """Block of the modular element relating phi and psi; equals q^4."""
    return np.diag(np.exp(2.0 * params.t * weights(two_n))).astype(complex)


def modular_automorphism(params: Params, a: AlgElement, kind: str) -> AlgElement:
    """The modular automorphism of the chosen invariant integral.

    kind "left":   sigma(a) = q^-2 a q^2   with  phi(a b) = phi(b sigma(a));
    kind "right":  sigma(a) = q^2 a q^-2   with  psi(a b) = psi(b sigma(a)).

    The two are mutually inverse.
    """
    if kind == "left":
        return _blockwise(a, lambda n, m: scaling_imag_block(params, n, m, -1.0))
    if kind == "right":
        return _blockwise(a, lambda n, m: scaling_imag_block(params, n, m, +1.0))
    raise ValueError(f"kind must be 'left' or 'right', got {kind!r}")


# ---------------------------------------------------------------------------
# leg contractions
# ---------------------------------------------------------------------------


def contract_first(mat: np.ndarray, dim_left: int, dim_right: int, w: np.ndarray) -> np.ndarray:
    """Apply a functional (given by its matrix-unit values W[p, p']) to the
    first leg of an operator on a product of two blocks."""
    m4 = mat.reshape(dim_left, dim_right, dim_left, dim_right)
    return np.einsum("pq,puqv->uv", w, m4)


def contract_second(mat: np.ndarray, dim_left: int, dim_right: int, w: np.ndarray) -> np.ndarray:
    """Same, on the second leg."""
    m4 = mat.reshape(dim_left, dim_right, dim_left, dim_right)
    return np.einsum("uv,puqv->pq", w, m4)
