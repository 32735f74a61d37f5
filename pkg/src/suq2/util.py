"""Small numerical helpers shared across modules."""

import numpy as np


def max_abs(m) -> float:
    """Max-absolute-entry norm; the residual norm used everywhere here."""
    m = np.asarray(m)
    if m.size == 0:
        return 0.0
    return float(np.max(np.abs(m)))


def rel_residual(value, expected) -> float:
    """|value - expected| / max(1, |expected|)."""
    return abs(value - expected) / max(1.0, abs(expected))


def weights(two_n: int) -> np.ndarray:
    """Doubled weights of the spin-(two_n/2) module, highest first.

    ``weights(3) == [3, 1, -1, -3]``; the basis of every representation in
    this package is ordered the same way (j = n down to j = -n).
    """
    if two_n < 0 or not isinstance(two_n, (int, np.integer)):
        raise ValueError(f"doubled spin must be a nonnegative integer, got {two_n!r}")
    return np.arange(two_n, -two_n - 1, -2, dtype=int)


def weight_index(two_n: int, two_j: int) -> int:
    """Basis position of weight two_j inside the spin-(two_n/2) module."""
    if (two_n - two_j) % 2 != 0 or abs(two_j) > two_n:
        raise ValueError(f"weight {two_j} does not occur in the spin module {two_n}")
    return (two_n - two_j) // 2


def swap_matrix(dim_left: int, dim_right: int) -> np.ndarray:
    """Permutation matrix exchanging tensor factors, left (x) right -> right (x) left."""
    w = np.zeros((dim_right * dim_left, dim_left * dim_right))
    for p in range(dim_left):
        for u in range(dim_right):
            w[u * dim_left + p, p * dim_right + u] = 1.0
    return w
