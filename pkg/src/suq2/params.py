"""Deformation parameter and shared numerical context.

Everything in this package is computed for a fixed deformation parameter
t > 0, entering through lam = exp(t) (the classical theory is the t -> 0
limit).  Half-integer labels (spins ``n`` and weights ``j``) are passed
around as *doubled integers* so that all bookkeeping stays exact: a spin
n = 3/2 is the integer ``two_n = 3``, the weight j = -1 is ``two_j = -2``.
"""

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class Params:
    """Deformation parameter and tolerances used by every numerical routine.

    Attributes
    ----------
    t : float
        Deformation parameter, must be positive.  lam = exp(t).
    tol_abs : float
        Absolute tolerance for residual checks and clamping.
    tol_rel : float
        Relative tolerance, used where a natural scale is available
        (singular value thresholds, Casimir eigenvalues, ...).
    """

    t: float = 0.3
    tol_abs: float = 1e-9
    tol_rel: float = 1e-9

    def __post_init__(self):
        if not (self.t > 0.0 and math.isfinite(self.t)):
            raise ValueError(f"deformation parameter t must be positive, got {self.t!r}")
        if self.tol_abs < 0.0 or self.tol_rel < 0.0:
            raise ValueError("tolerances must be nonnegative")

    @property
    def lam(self) -> float:
        """The deformation base lam = exp(t) > 1."""
        return math.exp(self.t)

    @property
    def c(self) -> float:
        """Structure constant (lam - lam^-1)^-1 of the commutation relation.

        With this normalization the defining relation reads
        ef - fe = c (q^2 - q^-2), and the classical limit of c (q^2 - q^-2)
        as t -> 0 recovers the usual 2h of sl(2).
        """
        lam = self.lam
        return 1.0 / (lam - 1.0 / lam)

    def lam_pow(self, two_exp) -> float:
        """lam raised to a half-integer power given as a doubled exponent.

        ``lam_pow(two_exp) == lam ** (two_exp / 2)``; exact for the doubled
        integers used throughout, but any real ``two_exp`` is accepted.
        """
        return math.exp(0.5 * self.t * two_exp)
