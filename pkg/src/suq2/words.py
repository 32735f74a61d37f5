"""Formal words and polynomials in the generators q, q^-1, e, f.

This layer is purely symbolic: words are never reduced, so distinct words
are independent basis vectors of a free *-algebra.  Its job is to carry the
structural operations that are defined letterwise (comultiplication,
counit, antipode, star) and to feed the evaluation maps of the
representation layer, where the defining relations actually get checked.

The comultiplication acts on letters as

    D(q)    = q (x) q          D(e) = q (x) e + e (x) q^-1
    D(q^-1) = q^-1 (x) q^-1    D(f) = q (x) f + f (x) q^-1

and extends multiplicatively; the counit sends q, q^-1 to 1 and e, f to 0;
the antipode is the antihomomorphism with S(q) = q^-1, S(e) = -lam^-1 e,
S(f) = -lam f; the star is the antilinear antihomomorphism with e* = f,
f* = e and q, q^-1 self-adjoint.
"""

from enum import Enum


class Gen(Enum):
    """Generator letters."""

    Q = "q"
    QINV = "q^-1"
    E = "e"
    F = "f"

    def __repr__(self):
        return self.value


#: A word is a tuple of letters; the empty tuple is the unit word.
Word = tuple

_STAR_LETTER = {Gen.Q: Gen.Q, Gen.QINV: Gen.QINV, Gen.E: Gen.F, Gen.F: Gen.E}


def word_str(word) -> str:
    return " ".join(g.value for g in word) if word else "1"


class AlgPoly:
    """Finite complex combination of words.

    Supports +, -, scalar and polynomial multiplication, and the star.
    Coefficients that come out exactly zero are pruned, so ``terms`` only
    holds genuine support.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for word, coeff in terms.items():
                coeff = complex(coeff)
                if coeff != 0:
                    self.terms[tuple(word)] = coeff

    @classmethod
    def from_word(cls, *letters):
        return cls({tuple(letters): 1.0})

    def __add__(self, other):
        out = dict(self.terms)
        for word, coeff in other.terms.items():
            out[word] = out.get(word, 0.0) + coeff
        return AlgPoly(out)

    def __sub__(self, other):
        return self + (-1.0) * other

    def __neg__(self):
        return (-1.0) * self

    def __mul__(self, other):
        if isinstance(other, AlgPoly):
            out = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    word = w1 + w2
                    out[word] = out.get(word, 0.0) + c1 * c2
            return AlgPoly(out)
        return AlgPoly({w: complex(other) * c for w, c in self.terms.items()})

    def __rmul__(self, scalar):
        return AlgPoly({w: complex(scalar) * c for w, c in self.terms.items()})

    def star(self):
        """Antilinear antihomomorphism: reverse each word, swap e and f."""
        out = {}
        for word, coeff in self.terms.items():
            new = tuple(_STAR_LETTER[g] for g in reversed(word))
            out[new] = out.get(new, 0.0) + coeff.conjugate()
        return AlgPoly(out)

    def max_abs_coeff(self) -> float:
        return max((abs(c) for c in self.terms.values()), default=0.0)

    def __eq__(self, other):
        return isinstance(other, AlgPoly) and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "AlgPoly(0)"
        bits = [f"({c:g})*{word_str(w)}" for w, c in sorted(self.terms.items(), key=lambda kv: (len(kv[0]), str(kv[0])))]
        return "AlgPoly(" + " + ".join(bits) + ")"


class TensorPoly:
    """Finite complex combination of two-leg tensors word (x) word."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for key, coeff in terms.items():
                coeff = complex(coeff)
                if coeff != 0:
                    self.terms[(tuple(key[0]), tuple(key[1]))] = coeff

    def __add__(self, other):
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            out[key] = out.get(key, 0.0) + coeff
        return TensorPoly(out)

    def __sub__(self, other):
        return self + (-1.0) * other

    def __mul__(self, other):
        if isinstance(other, TensorPoly):
            out = {}
            for (a1, b1), c1 in self.terms.items():
                for (a2, b2), c2 in other.terms.items():
                    key = (a1 + a2, b1 + b2)
                    out[key] = out.get(key, 0.0) + c1 * c2
            return TensorPoly(out)
        return TensorPoly({k: complex(other) * c for k, c in self.terms.items()})

    def __rmul__(self, scalar):
        return self * scalar

    def star(self):
        """Legwise star: (v (x) w)* = v* (x) w*."""
        out = {}
        for (w1, w2), coeff in self.terms.items():
            k1 = tuple(_STAR_LETTER[g] for g in reversed(w1))
            k2 = tuple(_STAR_LETTER[g] for g in reversed(w2))
            key = (k1, k2)
            out[key] = out.get(key, 0.0) + coeff.conjugate()
        return TensorPoly(out)

    def max_abs_coeff(self) -> float:
        return max((abs(c) for c in self.terms.values()), default=0.0)

    def __eq__(self, other):
        return isinstance(other, TensorPoly) and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "TensorPoly(0)"
        bits = [
            f"({c:g})*{word_str(w1)} (x) {word_str(w2)}"
            for (w1, w2), c in sorted(self.terms.items(), key=lambda kv: str(kv[0]))
        ]
        return "TensorPoly(" + " + ".join(bits) + ")"


#: Convenience basis polynomials.
ONE = AlgPoly({(): 1.0})
Q = AlgPoly.from_word(Gen.Q)
QINV = AlgPoly.from_word(Gen.QINV)
E = AlgPoly.from_word(Gen.E)
F = AlgPoly.from_word(Gen.F)

_COPRODUCT_LETTER = {
    Gen.Q: TensorPoly({((Gen.Q,), (Gen.Q,)): 1.0}),
    Gen.QINV: TensorPoly({((Gen.QINV,), (Gen.QINV,)): 1.0}),
    Gen.E: TensorPoly({((Gen.Q,), (Gen.E,)): 1.0, ((Gen.E,), (Gen.QINV,)): 1.0}),
    Gen.F: TensorPoly({((Gen.Q,), (Gen.F,)): 1.0, ((Gen.F,), (Gen.QINV,)): 1.0}),
}

_COUNIT_LETTER = {Gen.Q: 1.0, Gen.QINV: 1.0, Gen.E: 0.0, Gen.F: 0.0}


def formal_coproduct(x: AlgPoly) -> TensorPoly:
    """Letterwise comultiplication, extended multiplicatively to words."""
    total = TensorPoly()
    for word, coeff in x.terms.items():
        term = TensorPoly({((), ()): coeff})
        for g in word:
            term = term * _COPRODUCT_LETTER[g]
        total = total + term
    return total


def formal_counit(x: AlgPoly) -> complex:
    """Multiplicative counit; kills every word containing e or f."""
    total = 0.0
    for word, coeff in x.terms.items():
        value = coeff
        for g in word:
            value *= _COUNIT_LETTER[g]
        total += value
    return complex(total)


def formal_antipode(x: AlgPoly, lam: float) -> AlgPoly:
    """Antihomomorphism with S(q) = q^-1, S(e) = -e/lam, S(f) = -lam f."""
    letter = {
        Gen.Q: ((Gen.QINV,), 1.0),
        Gen.QINV: ((Gen.Q,), 1.0),
        Gen.E: ((Gen.E,), -1.0 / lam),
        Gen.F: ((Gen.F,), -lam),
    }
    out = {}
    for word, coeff in x.terms.items():
        new_word = ()
        value = coeff
        for g in reversed(word):
            w, scale = letter[g]
            new_word = new_word + w
            value *= scale
        out[new_word] = out.get(new_word, 0.0) + value
    return AlgPoly(out)


def coproduct_leg(tp: TensorPoly, leg: int) -> dict:
    """Apply the comultiplication to one leg of a two-leg tensor.

    Returns a plain dict mapping three-word tuples to coefficients; used to
    state coassociativity, which lives in the triple tensor product.
    """
    if leg not in (0, 1):
        raise ValueError("leg must be 0 or 1")
    out = {}
    for (w1, w2), coeff in tp.terms.items():
        target = w1 if leg == 0 else w2
        expanded = formal_coproduct(AlgPoly({target: 1.0}))
        for (a, b), c in expanded.terms.items():
            key = (a, b, w2) if leg == 0 else (w1, a, b)
            value = out.get(key, 0.0) + coeff * c
            if value == 0:
                out.pop(key, None)
            else:
                out[key] = value
    return out
