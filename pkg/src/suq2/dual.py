"""The dual picture: matrix coefficients of the compact quantum SU(2).

A functional on the direct-sum algebra with finite support is stored as a
family of coefficient matrices, one per block, paired by

    <a, b> = sum_n sum_(r,s) B^(n)[r, s] * a_n[r, s]        (no conjugation).

Products, coproduct evaluations, antipode and star on this dual side are
all *transposes* of the corresponding structure maps of the direct-sum
side under the pairing:

    <a, x y>    = <D(a), y (x) x>          (y pairs against the first leg)
    <a, S(b)>   = <S^-1(a), b>
    <a, b*>     = conj(<S(a*), b>)

The 2x2 family u of matrix units of the spin-1/2 block is a unitary
corepresentation whose entries alpha = u[1/2,1/2] and gamma = u[-1/2,1/2]
satisfy the defining commutation relations of the compact quantum SU(2)
with parameter 1/lam; the verification battery checks those relations,
unitarity, the Haar values and the modular data numerically.
"""

import numpy as np

from .clebsch import decompose
from .discrete import (
    AlgElement,
    antipode_block,
    antipode_inv_block,
    modular_element_block,
)
from .params import Params
from .util import max_abs, weight_index

_UNIT_CACHE = {}


class DualElement:
    """Finitely supported functional, one coefficient matrix per block."""

    __slots__ = ("blocks",)

    def __init__(self, blocks=None):
        self.blocks = {}
        if blocks:
            for two_n, mat in blocks.items():
                mat = np.asarray(mat, dtype=complex)
                if mat.shape != (two_n + 1, two_n + 1):
                    raise ValueError(
                        f"coefficient block {two_n} must be {two_n + 1} x {two_n + 1}"
                    )
                if np.count_nonzero(mat):
                    self.blocks[int(two_n)] = mat

    @property
    def support(self) -> list:
        return sorted(self.blocks)

    def block(self, two_n: int) -> np.ndarray:
        if two_n in self.blocks:
            return self.blocks[two_n]
        return np.zeros((two_n + 1, two_n + 1), dtype=complex)

    def __add__(self, other):
        out = {n: m.copy() for n, m in self.blocks.items()}
        for n, m in other.blocks.items():
            out[n] = out[n] + m if n in out else m
        return DualElement(out)

    def __sub__(self, other):
        return self + (-1.0) * other

    def __rmul__(self, scalar):
        return DualElement({n: complex(scalar) * m for n, m in self.blocks.items()})

    def __mul__(self, scalar):
        return DualElement({n: complex(scalar) * m for n, m in self.blocks.items()})

    def norm(self) -> float:
        return max((max_abs(m) for m in self.blocks.values()), default=0.0)

    def __repr__(self):
        return f"DualElement(support={self.support})"


def dual_unit() -> DualElement:
    """The unit of the dual algebra: the counit of the direct-sum side."""
    return DualElement({0: np.array([[1.0]], dtype=complex)})


def pair(a: AlgElement, b: DualElement) -> complex:
    """<a, b> = sum over shared blocks of the entrywise products."""
    total = 0.0 + 0.0j
    for two_n in a.blocks.keys() & b.blocks.keys():
        total += np.sum(b.blocks[two_n] * a.blocks[two_n])
    return complex(total)


def dual_mul(params: Params, x: DualElement, y: DualElement) -> DualElement:
    """Product of functionals: <a, x y> = <D(a), y (x) x>.

    The coefficient block of x y at spin k collects, over all pairs (n, m)
    with n in supp(y) and m in supp(x), the compression of y (x) x by the
    summand isometry of spin k, computed as V^T kron(y_n, x_m) conj(V).
    """
    out = {}
    for two_n in y.support:
        for two_m in x.support:
            kron = np.kron(y.blocks[two_n], x.blocks[two_m])
            dec = decompose(params, two_n, two_m)
            for piece in dec.pieces:
                v = piece.v
                contrib = v.T @ kron @ v.conj()
                if piece.two_k in out:
                    out[piece.two_k] = out[piece.two_k] + contrib
                else:
                    out[piece.two_k] = contrib
    return DualElement(out)


def dual_coproduct_pairing(params: Params, a: AlgElement, a2: AlgElement, b: DualElement) -> complex:
    """<a (x) a2, D(b)> evaluated through the product convention <a a2, b>."""
    return pair(a * a2, b)


def dual_counit(b: DualElement) -> complex:
    """Pairing with the local unit over the support of b."""
    return complex(sum(np.trace(m) for m in b.blocks.values()))


def dual_transpose(b: DualElement, block_map) -> DualElement:
    """Transpose a blockwise linear map of the direct-sum side onto the dual.

    ``block_map(two_n, mat)`` must be linear in ``mat`` and preserve the
    block; the returned functional satisfies
    <a, result> = <block_map(a), b> for every a supported where b is.
    """
    out = {}
    for two_n, coeff in b.blocks.items():
        dim = two_n + 1
        new = np.zeros((dim, dim), dtype=complex)
        unit = np.zeros((dim, dim), dtype=complex)
        for r in range(dim):
            for s in range(dim):
                unit[r, s] = 1.0
                new[r, s] = np.sum(block_map(two_n, unit) * coeff)
                unit[r, s] = 0.0
        out[two_n] = new
    return DualElement(out)


def dual_antipode(params: Params, b: DualElement) -> DualElement:
    """S on the dual: <a, S(b)> = <S^-1(a), b>."""
    return dual_transpose(b, lambda n, m: antipode_inv_block(params, n, m))


def dual_antipode_inv(params: Params, b: DualElement) -> DualElement:
    """S^-1 on the dual: <a, S^-1(b)> = <S(a), b>."""
    return dual_transpose(b, lambda n, m: antipode_block(params, n, m))


def dual_star(params: Params, b: DualElement) -> DualElement:
    """Star on the dual: <a, b*> = conj(<S(a*), b>)."""
    out = {}
    for two_n, coeff in b.blocks.items():
        dim = two_n + 1
        new = np.zeros((dim, dim), dtype=complex)
        unit = np.zeros((dim, dim), dtype=complex)
        for r in range(dim):
            for s in range(dim):
                unit[s, r] = 1.0  # (e_(r,s))* = e_(s,r)
                new[r, s] = np.conj(np.sum(antipode_block(params, two_n, unit) * coeff))
                unit[s, r] = 0.0
        out[two_n] = new
    return DualElement(out)


def dual_haar(b: DualElement) -> complex:
    """The Haar state: pairing with the cointegral (spin-0 coefficient)."""
    if 0 in b.blocks:
        return complex(b.blocks[0][0, 0])
    return 0.0 + 0.0j


def dual_modular(params: Params, b: DualElement) -> DualElement:
    """Modular automorphism of the Haar state:
    <a, sigma(b)> = <S^-2(a) delta, b> with delta the modular element."""

    def block_map(two_n, mat):
        lifted = antipode_inv_block(params, two_n, antipode_inv_block(params, two_n, mat))
        return lifted @ modular_element_block(params, two_n)

    return dual_transpose(b, block_map)


def dual_modular_inv(params: Params, b: DualElement) -> DualElement:
    """Inverse modular automorphism:
    <a, sigma^-1(b)> = <S^2(a delta^-1), b>."""

    def block_map(two_n, mat):
        delta = modular_element_block(params, two_n)
        shifted = mat @ np.diag(1.0 / np.diag(delta))
        return antipode_block(params, two_n, antipode_block(params, two_n, shifted))

    return dual_transpose(b, block_map)


# ---------------------------------------------------------------------------
# the fundamental 2x2 corepresentation
# ---------------------------------------------------------------------------

#: Doubled-weight labels of the two rows/columns, highest first.
U_LABELS = (1, -1)


def u_entry(two_i: int, two_j: int) -> DualElement:
    """Matrix coefficient u[i, j] of the spin-1/2 block: <a, u[i,j]> = a[i, j]."""
    key = (two_i, two_j)
    if key not in _UNIT_CACHE:
        mat = np.zeros((2, 2), dtype=complex)
        mat[weight_index(1, two_i), weight_index(1, two_j)] = 1.0
        _UNIT_CACHE[key] = DualElement({1: mat})
    return _UNIT_CACHE[key]


def u_entries() -> dict:
    """All four entries keyed by doubled weights (row, column)."""
    return {(i, j): u_entry(i, j) for i in U_LABELS for j in U_LABELS}


def unitarity_residuals(params: Params) -> dict:
    """Unitarity of u via the antipode: S(u) is the inverse of u on both
    sides, entry by entry in the 2x2 matrix algebra over the dual."""
    su = {(i, j): dual_antipode(params, u_entry(i, j)) for i in U_LABELS for j in U_LABELS}
    one = dual_unit()
    left = 0.0
    right = 0.0
    for i in U_LABELS:
        for j in U_LABELS:
            target = one if i == j else DualElement()
            acc_l = DualElement()
            acc_r = DualElement()
            for k in U_LABELS:
                acc_l = acc_l + dual_mul(params, su[(i, k)], u_entry(k, j))
                acc_r = acc_r + dual_mul(params, u_entry(i, k), su[(k, j)])
            left = max(left, (acc_l - target).norm())
            right = max(right, (acc_r - target).norm())
    return {"S(u) u = 1": left, "u S(u) = 1": right}


def woronowicz_residuals(params: Params) -> dict:
    """The defining relations of the compact quantum SU(2) at 1/lam,
    expressed through alpha = u[1/2,1/2] and gamma = u[-1/2,1/2]."""
    lam = params.lam
    alpha = u_entry(1, 1)
    gamma = u_entry(-1, 1)
    alpha_s = dual_star(params, alpha)
    gamma_s = dual_star(params, gamma)
    one = dual_unit()

    def mul(x, y):
        return dual_mul(params, x, y)

    return {
        "alpha gamma = gamma alpha / lam": (mul(alpha, gamma) - (1.0 / lam) * mul(gamma, alpha)).norm(),
        "alpha gamma* = gamma* alpha / lam": (mul(alpha, gamma_s) - (1.0 / lam) * mul(gamma_s, alpha)).norm(),
        "gamma gamma* = gamma* gamma": (mul(gamma, gamma_s) - mul(gamma_s, gamma)).norm(),
        "alpha* alpha + gamma* gamma = 1": (mul(alpha_s, alpha) + mul(gamma_s, gamma) - one).norm(),
        "alpha alpha* + gamma* gamma / lam^2 = 1": (
            mul(alpha, alpha_s) + (1.0 / lam**2) * mul(gamma_s, gamma) - one
        ).norm(),
    }


def span_check(params: Params, two_k_max: int) -> dict:
    """Numerical evidence that products of u-entries fill every block.

    Forms all products of at most ``two_k_max`` entries of u (the empty
    product is the unit), collects their coefficient matrices on each block
    k <= two_k_max, and reports the singular values of the stacked family.
    Full spanning means numerical rank (two_k + 1)^2 on block k.

    Returns a dict keyed by two_k with entries
    ``{"rank": int, "expected": int, "gap": float}`` where ``gap`` is the
    smallest retained singular value.
    """
    entries = list(u_entries().values())
    products = [dual_unit()]
    layer = [dual_unit()]
    for _ in range(two_k_max):
        layer = [dual_mul(params, p, u) for p in layer for u in entries]
        products.extend(layer)

    report = {}
    for two_k in range(0, two_k_max + 1):
        rows = [p.blocks[two_k].reshape(-1) for p in products if two_k in p.blocks]
        expected = (two_k + 1) ** 2
        if not rows:
            report[two_k] = {"rank": 0, "expected": expected, "gap": 0.0}
            continue
        stack = np.array(rows)
        sing = np.linalg.svd(stack, compute_uv=False)
        cutoff = params.tol_rel * float(sing[0])
        rank = int(np.sum(sing > cutoff))
        gap = float(sing[rank - 1]) if rank else 0.0
        report[two_k] = {"rank": rank, "expected": expected, "gap": gap}
    return report
