"""
The discrete quantum group: a multiplier Hopf *-algebra
=======================================================

The direct sum of all matrix blocks M_(2n+1) carries a comultiplication built
from the tensor-product isometries, a counit, an antipode, and a cointegral.
Integrals exist on both sides and are related by a modular element.  This
script walks through each structure map on small blocks and prints the
residuals of the laws they satisfy.
"""

import numpy as np

from suq2 import (
    Params,
    cointegral,
    cointegral_coproduct,
    coproduct_component,
    counit,
    embed,
    invariant_vector,
    left_integral,
    matrix_unit,
    modular_automorphism,
    modular_element_block,
    quantum_dimension,
    right_integral,
    weights,
)
from suq2.verify import (
    WORD_BATTERY,
    antipode_law_residual,
    coassociativity_residual,
    counit_law_residual,
    flip_residual,
    invariance_residual,
)

np.set_printoptions(precision=4, suppress=True, linewidth=100)

params = Params(t=0.3)
window = [0, 1, 2, 3]

# ---------------------------------------------------------------------------
# Elements are block-diagonal matrices; the generators embed as multipliers.
# The coproduct of a block algebra element lands in a tensor product of
# blocks, computed through the Clebsch-Gordan isometries.
# ---------------------------------------------------------------------------
a = embed(params, WORD_BATTERY["ef"], window)
print("embedded e f, block 2n = 1:")
print(a.block(1).real)
print("\ncoproduct block (2n, 2m) = (1, 1) of e f, a 4x4 matrix:")
print(coproduct_component(params, a, 1, 1).real)

# ---------------------------------------------------------------------------
# Hopf laws on a small battery: counit law, antipode convolution law, and
# coassociativity compared block by block.
# ---------------------------------------------------------------------------
battery = [a, matrix_unit(2, 2, 0), matrix_unit(1, -1, -1)]
worst_counit = max(counit_law_residual(params, x, two_m) for x in battery for two_m in window)
worst_antipode = max(antipode_law_residual(params, x, two_n) for x in battery for two_n in window)
worst_coassoc = max(
    coassociativity_residual(params, x, n, m, l)
    for x in battery for n in window[:3] for m in window[:3] for l in window[:3]
)
worst_flip = max(flip_residual(params, x, n, m) for x in battery for n in window for m in window)
print("\nHopf laws on the battery:")
print(f"  counit law          {worst_counit:.3e}")
print(f"  antipode law        {worst_antipode:.3e}")
print(f"  coassociativity     {worst_coassoc:.3e}")
print(f"  unitary flip law    {worst_flip:.3e}")

# ---------------------------------------------------------------------------
# The cointegral h is the unit of the one-dimensional block.  Its coproduct
# block (n, n) is the rank-one projection onto a canonical invariant vector.
# ---------------------------------------------------------------------------
h = cointegral()
print("\ncointegral: eps(h) =", counit(h).real)
block = cointegral_coproduct(params, 2)
vec = invariant_vector(params, 2)
print("coproduct block (2n, 2m) = (2, 2) of h:")
print(block.real)
print("rank-one residual:", f"{np.max(np.abs(block - np.outer(vec, vec.conj()))):.3e}")

# ---------------------------------------------------------------------------
# Left and right integrals weight each diagonal matrix unit by the quantum
# dimension times lam^(-2r) (left) or lam^(+2r) (right); they are invariant
# under the coproduct and tied together by the modular element q^4.
# ---------------------------------------------------------------------------
print("\nintegral weights on block 2n = 2 (weights r = 1, 0, -1):")
c_n = quantum_dimension(params, 2)
for two_r in weights(2):
    unit = matrix_unit(2, two_r, two_r)
    print(f"  r = {two_r / 2:+.0f}:  phi = {left_integral(params, unit):.6f}"
          f"   psi = {right_integral(params, unit):.6f}"
          f"   (c_n = {c_n:.6f})")

x = matrix_unit(2, 2, 0) + 0.5 * matrix_unit(1, 1, 1)
left_res, right_res = invariance_residual(params, x, 2)
print(f"\ninvariance residuals on a mixed element:  left {left_res:.3e},  right {right_res:.3e}")

print("\nmodular element block 2n = 1 (this is q^4 restricted to the block):")
print(modular_element_block(params, 1).real)

sig = modular_automorphism(params, matrix_unit(1, 1, -1), "left")
ab = matrix_unit(1, 1, -1) * matrix_unit(1, -1, 1)
ba = matrix_unit(1, -1, 1) * sig
print("modular certificate phi(ab) = phi(b sigma(a)):",
      f"{abs(left_integral(params, ab) - left_integral(params, ba)):.3e}")
