"""Verification batteries and machine readable reports.

Every mathematical guarantee of the package is expressed here as a named
check with a residual and a tolerance.  The batteries are grouped into
three suites:

    hopf   -- structural identities of the formal word layer,
    dqg    -- representations, tensor decompositions and the Hopf
              structure of the direct-sum algebra,
    dual   -- the compact dual: products, antipode, star, Haar state,
              modular data and spanning evidence.

Reports carry no timestamps or environment data, so two runs with the
same configuration produce byte-identical serializations.
"""

import json
from dataclasses import dataclass

import numpy as np

from . import words
from .clebsch import decompose, decomposition_residuals, index_set, tensor_rep
from .discrete import (
    AlgElement,
    antipode,
    antipode_inv,
    antipode_block,
    coproduct_component,
    cointegral,
    cointegral_coproduct,
    conjugate_unitary,
    contract_first,
    contract_second,
    counit,
    embed,
    integral_weight_matrix,
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
    U_LABELS,
)
from .params import Params
from .reps import (
    build_rep,
    casimir_matrix,
    casimir_scalar,
    classify_by_highest_weight,
    evaluate,
    evaluate_in,
    ladder_poly_matrix,
    relation_residuals,
)
from .util import max_abs, swap_matrix, weights
from .words import AlgPoly, Gen, formal_antipode, formal_coproduct, formal_counit


# ---------------------------------------------------------------------------
# report plumbing
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RunConfig:
    """Configuration shared by the command line and the batteries."""

    t: float = 0.3
    nmax2: int = 4
    tol_abs: float = 1e-9
    tol_rel: float = 1e-9
    fmt: str = "json"
    out: str = ""
    seed: int = 0

    def params(self) -> Params:
        return Params(t=self.t, tol_abs=self.tol_abs, tol_rel=self.tol_rel)


@dataclass(frozen=True)
class Check:
    """One verified identity: a residual against a tolerance."""

    id: str
    law: str
    residual: float
    tolerance: float
    passed: bool


def make_check(check_id: str, law: str, residual: float, tolerance: float) -> Check:
    residual = float(residual)
    return Check(id=check_id, law=law, residual=residual, tolerance=float(tolerance), passed=residual <= tolerance)


def bool_check(check_id: str, law: str, ok: bool) -> Check:
    return Check(id=check_id, law=law, residual=0.0 if ok else 1.0, tolerance=0.0, passed=bool(ok))


@dataclass(frozen=True)
class Report:
    suite: str
    config: RunConfig
    checks: tuple

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]


def build_report(suite: str, config: RunConfig, checks) -> Report:
    ordered = tuple(sorted(checks, key=lambda c: c.id))
    ids = [c.id for c in ordered]
    if len(set(ids)) != len(ids):
        dupes = sorted({i for i in ids if ids.count(i) > 1})
        raise ValueError(f"duplicate check ids: {dupes}")
    return Report(suite=suite, config=config, checks=ordered)


def _format_float(x: float) -> str:
    if x != x or x in (float("inf"), float("-inf")):
        raise ValueError(f"non-finite number in report: {x!r}")
    return format(float(x), ".17g")


def dump_json(obj) -> str:
    """Minimal JSON serializer with pinned float formatting.

    Floats are rendered with 17 significant digits so serialized reports
    round-trip bit-faithfully; the stdlib encoder does not expose that
    knob, hence this tiny emitter.  Output is compact and key order is
    the insertion order of the dicts handed in.
    """
    if isinstance(obj, dict):
        items = ",".join(f"{json.dumps(str(k))}:{dump_json(v)}" for k, v in obj.items())
        return "{" + items + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(dump_json(v) for v in obj) + "]"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _format_float(float(obj))
    if isinstance(obj, (complex, np.complexfloating)):
        return "[" + _format_float(obj.real) + "," + _format_float(obj.imag) + "]"
    if isinstance(obj, np.ndarray):
        return dump_json(obj.tolist())
    raise TypeError(f"cannot serialize {type(obj)!r}")


def config_doc(config: RunConfig) -> dict:
    return {
        "t": config.t,
        "nmax2": config.nmax2,
        "tol_abs": config.tol_abs,
        "tol_rel": config.tol_rel,
        "seed": config.seed,
    }


def report_doc(report: Report) -> dict:
    return {
        "schema": 1,
        "kind": "verify",
        "suite": report.suite,
        "config": config_doc(report.config),
        "checks": [
            {
                "id": c.id,
                "law": c.law,
                "residual": c.residual,
                "tolerance": c.tolerance,
                "pass": c.passed,
            }
            for c in report.checks
        ],
        "summary": {
            "total": len(report.checks),
            "passed": sum(1 for c in report.checks if c.passed),
            "failed": sum(1 for c in report.checks if not c.passed),
        },
    }


def report_csv(report: Report) -> str:
    lines = ["id,law,residual,tolerance,pass"]
    for c in report.checks:
        law = '"' + c.law.replace('"', '""') + '"'
        lines.append(
            f"{c.id},{law},{_format_float(c.residual)},{_format_float(c.tolerance)},{str(c.passed).lower()}"
        )
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# shared residual helpers (also consumed by the acceptance tests)
# ---------------------------------------------------------------------------


WORD_BATTERY = {
    "q": words.Q,
    "q^-1": words.QINV,
    "e": words.E,
    "f": words.F,
    "ef": words.E * words.F,
    "qef": words.Q * words.E * words.F,
}


def tensor_evaluate_formal(params: Params, two_n: int, two_m: int, x: AlgPoly) -> np.ndarray:
    """Evaluate D(x) on spin-n (x) spin-m through the formal coproduct.

    Independent route used against the generator-matrix route: expand the
    comultiplication symbolically, then evaluate each leg separately.
    """
    left = build_rep(params, two_n, +1)
    right = build_rep(params, two_m, +1)
    out = np.zeros((left.dim * right.dim,) * 2, dtype=complex)
    for (w1, w2), coeff in formal_coproduct(x).terms.items():
        m1 = evaluate(left, AlgPoly({w1: 1.0}))
        m2 = evaluate(right, AlgPoly({w2: 1.0}))
        out += coeff * np.kron(m1, m2)
    return out


def block_reconstruction_residual(params: Params, two_n: int, two_m: int, x: AlgPoly) -> float:
    """| sum_k V_k pi_k(x) V_k*  -  D(x) on the product basis |."""
    left = build_rep(params, two_n, +1)
    right = build_rep(params, two_m, +1)
    trep = tensor_rep(left, right)
    direct = evaluate_in(trep.gen_matrices, x, trep.dim)
    dec = decompose(params, two_n, two_m)
    assembled = np.zeros_like(direct)
    for piece in dec.pieces:
        rep_k = build_rep(params, piece.two_k, +1)
        assembled += piece.v @ evaluate(rep_k, x) @ piece.v.conj().T
    return max_abs(assembled - direct)


def worked_half_half_residual(params: Params) -> float:
    """Deviation of the (1/2, 1/2) decomposition from its closed form.

    The spin-0 summand is spanned by
        (lam^(-1/2) xi_+ (x) xi_-  -  lam^(1/2) xi_- (x) xi_+) / sqrt(lam + 1/lam)
    and the spin-1 middle column is
        (lam^(1/2) xi_+ (x) xi_-  +  lam^(-1/2) xi_- (x) xi_+) / sqrt(lam + 1/lam),
    flanked by xi_+ (x) xi_+ and xi_- (x) xi_-.
    """
    lam = params.lam
    root = np.sqrt(lam + 1.0 / lam)
    dec = decompose(params, 1, 1)

    v0 = np.array([0.0, lam ** -0.5, -(lam ** 0.5), 0.0], dtype=complex) / root
    v1 = np.zeros((4, 3), dtype=complex)
    v1[:, 0] = [1.0, 0.0, 0.0, 0.0]
    v1[:, 1] = np.array([0.0, lam ** 0.5, lam ** -0.5, 0.0]) / root
    v1[:, 2] = [0.0, 0.0, 0.0, 1.0]

    return max(
        max_abs(dec.piece(0).v[:, 0] - v0),
        max_abs(dec.piece(2).v - v1),
    )


def counit_law_residual(params: Params, a: AlgElement, two_m: int) -> float:
    """Counit laws on the block pair (0, m) and (m, 0)."""
    dim = two_m + 1
    block = a.block(two_m)
    left = coproduct_component(params, a, 0, two_m).reshape(1, dim, 1, dim)[0, :, 0, :]
    right = coproduct_component(params, a, two_m, 0).reshape(dim, 1, dim, 1)[:, 0, :, 0]
    return max(max_abs(left - block), max_abs(right - block))


def antipode_law_residual(params: Params, a: AlgElement, two_n: int) -> float:
    """Convolution laws  m(S (x) id) D(a) = eps(a) 1 = m(id (x) S) D(a)
    read off on the (n, n) block."""
    dim = two_n + 1
    m4 = coproduct_component(params, a, two_n, two_n).reshape(dim, dim, dim, dim)
    target = counit(a) * np.eye(dim, dtype=complex)

    unit = np.zeros((dim, dim), dtype=complex)
    lhs = np.zeros((dim, dim), dtype=complex)
    rhs = np.zeros((dim, dim), dtype=complex)
    for p in range(dim):
        for pp in range(dim):
            unit[p, pp] = 1.0
            s_unit = antipode_block(params, two_n, unit)
            unit[p, pp] = 0.0
            lhs += s_unit @ m4[p, :, pp, :]
            rhs += m4[:, p, :, pp] @ s_unit
    return max(max_abs(lhs - target), max_abs(rhs - target))


def coassociativity_residual(params: Params, a: AlgElement, two_n: int, two_m: int, two_l: int) -> float:
    """(D (x) id) D(a) versus (id (x) D) D(a) on the block triple (n, m, l)."""
    dims = (two_n + 1, two_m + 1, two_l + 1)
    total = dims[0] * dims[1] * dims[2]

    lhs = np.zeros((total, total), dtype=complex)
    dec_nm = decompose(params, two_n, two_m)
    for two_k in index_set(two_n, two_m):
        inner = coproduct_component(params, a, two_k, two_l)
        if not np.count_nonzero(inner):
            continue
        lift = np.kron(dec_nm.piece(two_k).v, np.eye(dims[2]))
        lhs += lift @ inner @ lift.conj().T

    rhs = np.zeros((total, total), dtype=complex)
    dec_ml = decompose(params, two_m, two_l)
    for two_k in index_set(two_m, two_l):
        inner = coproduct_component(params, a, two_n, two_k)
        if not np.count_nonzero(inner):
            continue
        lift = np.kron(np.eye(dims[0]), dec_ml.piece(two_k).v)
        rhs += lift @ inner @ lift.conj().T

    return max_abs(lhs - rhs)


def flip_residual(params: Params, a: AlgElement, two_n: int, two_m: int) -> float:
    """R reverses the comultiplication:
    D(R(a))_(m,n) = flip (R (x) R) D(a)_(n,m)."""
    p_n = conjugate_unitary(two_n).matrix
    p_m = conjugate_unitary(two_m).matrix
    block = coproduct_component(params, a, two_n, two_m)
    p_big = np.kron(p_n, p_m)
    r_tensor = p_big.T @ block.T @ p_big
    w = swap_matrix(two_n + 1, two_m + 1)
    flipped = w @ r_tensor @ w.T
    return max_abs(coproduct_component(params, unitary_antipode(a), two_m, two_n) - flipped)


def scaling_compat_residual(params: Params, a: AlgElement, two_n: int, two_m: int, s: float) -> float:
    """The scaling group is a coproduct symmetry:
    D(tau_s(a))_(n,m) = (tau_s (x) tau_s) D(a)_(n,m)."""
    phase_n = np.exp(-1j * params.t * s * weights(two_n))
    phase_m = np.exp(-1j * params.t * s * weights(two_m))
    d = np.kron(phase_n, phase_m)
    block = coproduct_component(params, a, two_n, two_m)
    both_legs = block * np.outer(d, 1.0 / d)
    return max_abs(coproduct_component(params, scaling(params, a, s), two_n, two_m) - both_legs)


def invariance_residual(params: Params, a: AlgElement, two_n: int) -> tuple:
    """Left and right invariance of the integrals, block n:

        sum_m (id (x) phi) D(a)_(n,m) = phi(a) 1_n
        sum_m (psi (x) id) D(a)_(m,n) = psi(a) 1_n
    """
    dim = two_n + 1
    left_sum = np.zeros((dim, dim), dtype=complex)
    right_sum = np.zeros((dim, dim), dtype=complex)
    left_scale = right_scale = 1.0
    # every block of a reaches the m-blocks in its own index set; the
    # coproduct component already sums over the support, so deduplicate
    m_window = sorted(
        {two_m for two_k in a.support for two_m in index_set(two_k, two_n)}
    )
    for two_m in m_window:
        block = coproduct_component(params, a, two_n, two_m)
        w = integral_weight_matrix(params, two_m, "left")
        term = contract_second(block, dim, two_m + 1, w)
        left_sum += term
        left_scale = max(left_scale, max_abs(term))
        block = coproduct_component(params, a, two_m, two_n)
        w = integral_weight_matrix(params, two_m, "right")
        term = contract_first(block, two_m + 1, dim, w)
        right_sum += term
        right_scale = max(right_scale, max_abs(term))
    eye = np.eye(dim, dtype=complex)
    # integral weights grow like lam^(2n); compare at the scale of the
    # largest term entering the cancellation
    return (
        max_abs(left_sum - left_integral(params, a) * eye) / left_scale,
        max_abs(right_sum - right_integral(params, a) * eye) / right_scale,
    )


def modular_certificate_residual(params: Params, two_n: int, kind: str) -> float:
    """Brute force sweep of  integral(a b) = integral(b sigma(a))  over all
    matrix-unit pairs of one block."""
    integral = left_integral if kind == "left" else right_integral
    worst = 0.0
    units = [
        matrix_unit(two_n, two_r, two_s)
        for two_r in weights(two_n)
        for two_s in weights(two_n)
    ]
    for a in units:
        sig_a = modular_automorphism(params, a, kind)
        for b in units:
            lhs = integral(params, a * b)
            rhs = integral(params, b * sig_a)
            worst = max(worst, abs(lhs - rhs))
    return worst


def dual_coproduct_residual(params: Params) -> float:
    """Matrix coefficient law of u through the pairing:
    <a a', u[i,j]> = sum_k <a, u[i,k]> <a', u[k,j]> over the full
    matrix-unit battery of the spin-1/2 block."""
    battery = [
        matrix_unit(1, two_r, two_s) for two_r in (1, -1) for two_s in (1, -1)
    ]
    worst = 0.0
    for a in battery:
        for a2 in battery:
            prod = a * a2
            for i in U_LABELS:
                for j in U_LABELS:
                    lhs = pair(prod, u_entry(i, j))
                    rhs = sum(
                        pair(a, u_entry(i, k)) * pair(a2, u_entry(k, j)) for k in U_LABELS
                    )
                    worst = max(worst, abs(lhs - rhs))
    return worst


def dual_haar_quadratic_expected(params: Params, two_k: int, two_l: int, two_i: int, two_j: int) -> complex:
    """Closed form of the Haar state on quadratics:
    haar(u[k,l] u[i,j]) = d(i,-k) d(j,-l) (-1)^(k-l) lam^(k+l) / (lam + 1/lam)."""
    lam = params.lam
    if two_i != -two_k or two_j != -two_l:
        return 0.0 + 0.0j
    sign = (-1.0) ** ((two_k - two_l) // 2)
    return complex(sign * params.lam_pow(two_k + two_l) / (lam + 1.0 / lam))


def dual_antipode_expected(params: Params, two_r: int, two_s: int) -> tuple:
    """S(u[r,s]) = (-1)^(r-s) lam^(r-s) u[-s,-r]; returns (factor, (-s, -r))."""
    sign = (-1.0) ** ((two_r - two_s) // 2)
    return sign * params.lam_pow(two_r - two_s), (-two_s, -two_r)


# ---------------------------------------------------------------------------
# batteries
# ---------------------------------------------------------------------------


def _all_words(max_len: int):
    letters = list(Gen)
    out = [()]
    frontier = [()]
    for _ in range(max_len):
        frontier = [w + (g,) for w in frontier for g in letters]
        out.extend(frontier)
    return out


def formal_battery(params: Params) -> list:
    lam = params.lam
    tol = params.tol_abs
    checks = []

    expected = words.TensorPoly(
        {
            (((Gen.Q, Gen.Q), (Gen.E, Gen.F))): 1.0,
            (((Gen.Q, Gen.F), (Gen.E, Gen.QINV))): 1.0,
            (((Gen.E, Gen.Q), (Gen.QINV, Gen.F))): 1.0,
            (((Gen.E, Gen.F), (Gen.QINV, Gen.QINV))): 1.0,
        }
    )
    checks.append(
        make_check(
            "words/coproduct-ef",
            "D(ef) = qq(x)ef + qf(x)e q^-1 + eq(x)q^-1 f + ef(x)q^-2",
            (formal_coproduct(words.E * words.F) - expected).max_abs_coeff(),
            tol,
        )
    )

    counit_ok = (
        formal_counit(words.Q) == 1.0
        and formal_counit(words.QINV) == 1.0
        and formal_counit(words.E) == 0.0
        and formal_counit(words.F) == 0.0
        and formal_counit(words.Q * words.QINV) == 1.0
        and formal_counit(words.Q * words.E) == 0.0
    )
    checks.append(bool_check("words/counit-values", "eps kills e, f and sends q, q^-1 to 1", counit_ok))

    s_ef = formal_antipode(words.E * words.F, lam)
    checks.append(
        make_check("words/antipode-ef", "S(ef) = fe", (s_ef - words.F * words.E).max_abs_coeff(), tol)
    )
    checks.append(
        bool_check(
            "words/star-examples",
            "(qe)* = fq and (ef)* = ef",
            (words.Q * words.E).star() == words.F * words.Q
            and (words.E * words.F).star() == words.E * words.F,
        )
    )

    battery = [AlgPoly({w: 1.0}) for w in _all_words(3)]

    worst = 0.0
    for x in battery:
        tp = formal_coproduct(x)
        lhs = words.coproduct_leg(tp, 0)
        rhs = words.coproduct_leg(tp, 1)
        keys = lhs.keys() | rhs.keys()
        for key in keys:
            worst = max(worst, abs(lhs.get(key, 0.0) - rhs.get(key, 0.0)))
    checks.append(make_check("words/coassociativity", "(D(x)id)D = (id(x)D)D, words to length 3", worst, tol))

    worst = 0.0
    for x in battery:
        tp = formal_coproduct(x)
        left = AlgPoly({w2: c * formal_counit(AlgPoly({w1: 1.0})) for (w1, w2), c in tp.terms.items()})
        right = AlgPoly({w1: c * formal_counit(AlgPoly({w2: 1.0})) for (w1, w2), c in tp.terms.items()})
        worst = max(worst, (left - x).max_abs_coeff(), (right - x).max_abs_coeff())
    checks.append(make_check("words/counit-laws", "(eps(x)id)D = id = (id(x)eps)D, words to length 3", worst, tol))

    pairs = [AlgPoly({w: 1.0}) for w in _all_words(2)]
    worst = 0.0
    for x in pairs:
        for y in pairs:
            worst = max(
                worst,
                (formal_coproduct(x * y) - formal_coproduct(x) * formal_coproduct(y)).max_abs_coeff(),
            )
    checks.append(make_check("words/coproduct-homomorphism", "D(xy) = D(x) D(y)", worst, tol))

    worst = 0.0
    for x in pairs:
        for y in pairs:
            worst = max(
                worst,
                (
                    formal_antipode(x * y, lam)
                    - formal_antipode(y, lam) * formal_antipode(x, lam)
                ).max_abs_coeff(),
            )
    checks.append(make_check("words/antipode-antihomomorphism", "S(xy) = S(y) S(x)", worst, tol))

    worst = 0.0
    for x in battery:
        round_trip = formal_antipode(formal_antipode(x, lam).star(), lam).star()
        worst = max(worst, (round_trip - x).max_abs_coeff())
    checks.append(make_check("words/antipode-star-involution", "S(S(x)*)* = x", worst, tol))

    worst = 0.0
    for x in battery:
        worst = max(worst, abs(formal_counit(formal_antipode(x, lam)) - formal_counit(x)))
    checks.append(make_check("words/counit-antipode", "eps(S(x)) = eps(x)", worst, tol))

    return checks


def rep_battery(params: Params, nmax2: int, rng) -> list:
    tol = params.tol_abs
    checks = []
    lam = params.lam

    relation_worst = {}
    adjoint_worst = 0.0
    symmetry_worst = 0.0
    terminal_worst = 0.0
    casimir_worst = 0.0

    for two_n in range(0, nmax2 + 1):
        for sign in (+1, -1):
            rep = build_rep(params, two_n, sign)
            for law, value in relation_residuals(params, rep.q, rep.q_inv, rep.e, rep.f).items():
                relation_worst[law] = max(relation_worst.get(law, 0.0), value)
            adjoint_worst = max(adjoint_worst, max_abs(rep.e.conj().T - rep.f))
        rep = build_rep(params, two_n, +1)
        if rep.r.size:
            symmetry_worst = max(symmetry_worst, float(np.max(np.abs(rep.r - rep.r[::-1]))))
        closing = params.c * np.sum(
            np.exp(params.t * weights(two_n)) - np.exp(-params.t * weights(two_n))
        )
        terminal_worst = max(terminal_worst, abs(float(closing)))
        for sign in (+1, -1):
            rep = build_rep(params, two_n, sign)
            expected = casimir_scalar(params, two_n)
            cas = casimir_matrix(params, rep)
            casimir_worst = max(
                casimir_worst,
                max_abs(cas - expected * np.eye(rep.dim)) / max(1.0, abs(expected)),
            )

    for law, value in relation_worst.items():
        slug = law.split(" = ")[0].replace(" ", "").replace("^", "").replace("*", "star")
        checks.append(make_check(f"reps/relation-{slug}", law, value, tol))
    checks.append(make_check("reps/adjointness", "e* = f entrywise", adjoint_worst, tol))
    checks.append(make_check("reps/amplitude-symmetry", "r_(-j-1) = r_j", symmetry_worst, tol))
    checks.append(make_check("reps/amplitude-closure", "r_(-n-1) = 0", terminal_worst, tol))
    checks.append(make_check("reps/casimir", "Casimir = 2(lam^(2n+1) + lam^-(2n+1)) 1", casimir_worst, tol))

    worst = 0.0
    for two_n in range(0, min(nmax2, 6) + 1):
        rep = build_rep(params, two_n, +1)
        f_pow = np.eye(rep.dim, dtype=complex)
        for k in range(1, two_n + 3):
            f_prev = f_pow
            f_pow = f_pow @ rep.f
            lhs = rep.e @ f_pow - f_pow @ rep.e
            rhs = f_prev @ ladder_poly_matrix(params, rep, k)
            worst = max(worst, max_abs(lhs - rhs))
    checks.append(
        make_check("reps/ladder-identity", "e f^k - f^k e = f^(k-1)(a q^2 + b q^-2)", worst, tol)
    )

    trivial = build_rep(params, 0, +1)
    half = build_rep(params, 1, +1)
    one = build_rep(params, 2, +1)
    v = lam + 1.0 / lam
    examples = max(
        max_abs(trivial.q - np.eye(1)),
        max_abs(trivial.e),
        max_abs(half.q - np.diag([lam**0.5, lam**-0.5])),
        abs(half.r[0] - 1.0),
        abs(one.r[0] ** 2 - v),
        abs(one.r[1] ** 2 - v),
        max_abs(
            evaluate(half, words.Q * words.E) - np.array([[0.0, lam**0.5], [0.0, 0.0]])
        ),
    )
    checks.append(
        make_check("reps/closed-forms", "spin 0, 1/2, 1 matrices and amplitudes", examples, tol)
    )

    ok = True
    for two_n in range(0, min(nmax2, 6) + 1):
        for sign in (+1, -1):
            rep = build_rep(params, two_n, sign)
            ok = ok and classify_by_highest_weight(params, rep.q, rep.e, rep.f) == (two_n, sign)
    checks.append(bool_check("reps/classification", "highest weight recovers (n, sign)", ok))

    ok = True
    for two_n in range(0, min(nmax2, 6) + 1):
        for sign in (+1, -1):
            rep = build_rep(params, two_n, sign)
            u = _haar_unitary(rng, rep.dim)
            conj = lambda m: u @ m @ u.conj().T
            ok = ok and classify_by_highest_weight(params, conj(rep.q), conj(rep.e), conj(rep.f)) == (two_n, sign)
    checks.append(
        bool_check("reps/classification-conjugated", "classification is basis independent", ok)
    )

    worst = 0.0
    c = params.c
    for two_n in range(0, min(nmax2, 4) + 1):
        rep = build_rep(params, two_n, +1)
        e1 = rep.e / np.sqrt(c)
        f1 = rep.f / np.sqrt(c)
        q2 = rep.q @ rep.q - rep.q_inv @ rep.q_inv
        worst = max(worst, max_abs(e1 @ f1 - f1 @ e1 - q2))
        worst = max(
            worst,
            max_abs((np.sqrt(c) * e1) @ (np.sqrt(c) * f1) - (np.sqrt(c) * f1) @ (np.sqrt(c) * e1) - c * q2),
        )
    checks.append(
        make_check(
            "reps/rescaling",
            "e -> sqrt(c) e, f -> sqrt(c) f maps the c = 1 relations to the c relations",
            worst,
            tol,
        )
    )

    worst = 0.0
    for theta in rng.uniform(0.0, 2.0 * np.pi, size=3):
        z = np.exp(1j * theta)
        for two_n in range(0, min(nmax2, 4) + 1):
            rep = build_rep(params, two_n, +1)
            res = relation_residuals(params, rep.q, rep.q_inv, z * rep.e, np.conj(z) * rep.f)
            worst = max(worst, max(res.values()))
    checks.append(
        make_check("reps/phase-twist", "e -> z e, f -> conj(z) f is a *-automorphism (|z| = 1)", worst, tol)
    )

    return checks


def clebsch_battery(params: Params, nmax2: int) -> list:
    tol = params.tol_abs
    checks = []
    cap = min(nmax2, 6)

    ok = index_set(1, 1) == [0, 2] and index_set(2, 3) == [1, 3, 5] and index_set(0, 4) == [4]
    dims_ok = True
    for two_n in range(0, cap + 1):
        for two_m in range(0, cap + 1):
            ks = index_set(two_n, two_m)
            dims_ok = dims_ok and sum(k + 1 for k in ks) == (two_n + 1) * (two_m + 1)
    checks.append(bool_check("cg/index-set", "summands are |n-m|, ..., n+m", ok))
    checks.append(
        bool_check("cg/dimension-identity", "sum of (2k+1) = (2n+1)(2m+1), exact", dims_ok)
    )

    ortho = completeness = intertwine = 0.0
    for two_n in range(0, cap + 1):
        for two_m in range(0, cap + 1):
            res = decomposition_residuals(params, two_n, two_m)
            ortho = max(ortho, res["orthonormality"])
            completeness = max(completeness, res["completeness"])
            intertwine = max(intertwine, res["intertwining"])
    checks.append(make_check("cg/orthonormality", "V_k* V_l = delta(k,l) 1", ortho, tol))
    checks.append(make_check("cg/completeness", "sum V_k V_k* = 1", completeness, tol))
    checks.append(make_check("cg/intertwining", "D(x) V_k = V_k pi_k(x)", intertwine, tol))

    checks.append(
        make_check(
            "cg/worked-half-half",
            "(1/2, 1/2) summand vectors match their closed forms",
            worked_half_half_residual(params),
            tol,
        )
    )

    worst = 0.0
    for two_m in range(0, cap + 1):
        v = decompose(params, 0, two_m).piece(two_m).v
        worst = max(worst, max_abs(v - np.eye(two_m + 1)))
        v = decompose(params, two_m, 0).piece(two_m).v
        worst = max(worst, max_abs(v - np.eye(two_m + 1)))
    checks.append(
        make_check("cg/trivial-factor", "tensoring with spin 0 is the identity map", worst, tol)
    )

    worst = 0.0
    formal_worst = 0.0
    for two_n in range(0, min(cap, 4) + 1):
        for two_m in range(0, min(cap, 4) + 1):
            left = build_rep(params, two_n, +1)
            right = build_rep(params, two_m, +1)
            trep = tensor_rep(left, right)
            for x in WORD_BATTERY.values():
                worst = max(worst, block_reconstruction_residual(params, two_n, two_m, x))
                direct = evaluate_in(trep.gen_matrices, x, trep.dim)
                formal_worst = max(
                    formal_worst,
                    max_abs(direct - tensor_evaluate_formal(params, two_n, two_m, x)),
                )
    checks.append(
        make_check("cg/block-reconstruction", "sum V_k pi_k(x) V_k* = D(x) on a word battery", worst, tol)
    )
    checks.append(
        make_check(
            "cg/formal-route",
            "generator-matrix route equals the symbolic coproduct route",
            formal_worst,
            tol,
        )
    )

    res = relation_residuals(
        params,
        *(lambda tr: (tr.q, tr.q_inv, tr.e, tr.f))(
            tensor_rep(build_rep(params, min(cap, 2), +1), build_rep(params, min(cap, 3), +1))
        ),
    )
    checks.append(
        make_check(
            "cg/tensor-relations",
            "coproduct generators satisfy the defining relations",
            max(res.values()),
            tol,
        )
    )

    return checks


def _haar_unitary(rng, dim: int) -> np.ndarray:
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))[None, :]


def _random_alg_element(rng, two_ns) -> AlgElement:
    return AlgElement(
        {
            two_n: rng.standard_normal((two_n + 1, two_n + 1))
            + 1j * rng.standard_normal((two_n + 1, two_n + 1))
            for two_n in two_ns
        }
    )


def hopf_battery(params: Params, nmax2: int, rng) -> list:
    tol = params.tol_abs
    checks = []
    cap = min(nmax2, 4)
    window = list(range(0, cap + 1))

    word_elements = {name: embed(params, x, window) for name, x in WORD_BATTERY.items()}
    unit_elements = [
        matrix_unit(two_k, two_r, two_s)
        for two_k in range(0, min(cap, 2) + 1)
        for two_r in weights(two_k)
        for two_s in weights(two_k)
    ]
    random_elements = [_random_alg_element(rng, window) for _ in range(2)]
    battery = list(word_elements.values()) + unit_elements + random_elements

    worst = 0.0
    for a in battery:
        for two_m in window:
            worst = max(worst, counit_law_residual(params, a, two_m))
    checks.append(make_check("dqg/counit-laws", "(eps(x)id)D = id = (id(x)eps)D", worst, tol))

    worst = 0.0
    for a in battery:
        for two_n in window:
            worst = max(worst, antipode_law_residual(params, a, two_n))
    checks.append(
        make_check("dqg/antipode-laws", "m(S(x)id)D(a) = eps(a)1 = m(id(x)S)D(a)", worst, tol)
    )

    coassoc_battery = [word_elements["e"], word_elements["ef"]] + random_elements
    worst = 0.0
    for a in coassoc_battery:
        for two_n in window:
            for two_m in window:
                for two_l in window:
                    worst = max(
                        worst, coassociativity_residual(params, a, two_n, two_m, two_l)
                    )
    checks.append(make_check("dqg/coassociativity", "(D(x)id)D = (id(x)D)D", worst, tol))

    worst = 0.0
    hom_pairs = [
        (word_elements["q"], word_elements["e"]),
        (word_elements["e"], word_elements["f"]),
        (random_elements[0], random_elements[1]),
        (unit_elements[1], unit_elements[2]) if len(unit_elements) > 2 else (random_elements[0], random_elements[0]),
    ]
    for a, b in hom_pairs:
        for two_n in window:
            for two_m in window:
                prod = coproduct_component(params, a, two_n, two_m) @ coproduct_component(
                    params, b, two_n, two_m
                )
                worst = max(
                    worst, max_abs(coproduct_component(params, a * b, two_n, two_m) - prod)
                )
    checks.append(make_check("dqg/coproduct-multiplicative", "D(ab) = D(a) D(b)", worst, tol))

    worst = 0.0
    for a in random_elements + [word_elements["qef"]]:
        for two_n in window:
            for two_m in window:
                adj = coproduct_component(params, a, two_n, two_m).conj().T
                worst = max(
                    worst, max_abs(coproduct_component(params, a.star(), two_n, two_m) - adj)
                )
    checks.append(make_check("dqg/coproduct-star", "D(a*) = D(a)*", worst, tol))

    # unitary antipode: closed form on matrix units, involution, *-antihomomorphism
    worst = 0.0
    for two_k in range(0, min(cap, 3) + 1):
        for two_r in weights(two_k):
            for two_s in weights(two_k):
                image = unitary_antipode(matrix_unit(two_k, two_r, two_s))
                sign = (-1.0) ** ((two_s - two_r) // 2)
                expected = sign * matrix_unit(two_k, -two_s, -two_r)
                worst = max(worst, (image - expected).norm())
    checks.append(
        make_check("dqg/flip-closed-form", "R(e_(r,s)) = (-1)^(s-r) e_(-s,-r)", worst, tol)
    )

    g_ok = True
    for two_k in range(0, min(cap, 3) + 1):
        g = conjugate_unitary(two_k)
        basis = np.eye(two_k + 1, dtype=complex)
        square_sign = (-1.0) ** two_k
        for i in range(two_k + 1):
            twice = g.apply(g.apply(basis[i]))
            g_ok = g_ok and max_abs(twice - square_sign * basis[i]) < 1e-14
            lin = g.matrix @ np.conj(basis[i])
            g_ok = g_ok and max_abs(g.apply(basis[i]) - lin) < 1e-14
    checks.append(bool_check("dqg/flip-unitary", "G^2 = (-1)^(2n), conjugate linear", g_ok))

    worst = 0.0
    for a in random_elements:
        worst = max(worst, (unitary_antipode(unitary_antipode(a)) - a).norm())
        worst = max(worst, (unitary_antipode(a.star()) - unitary_antipode(a).star()).norm())
    b = random_elements[0] * random_elements[1]
    worst = max(
        worst,
        (unitary_antipode(b) - unitary_antipode(random_elements[1]) * unitary_antipode(random_elements[0])).norm(),
    )
    worst = max(worst, (unitary_antipode(word_elements["q"]) - word_elements["q^-1"]).norm())
    worst = max(worst, (unitary_antipode(word_elements["e"]) + word_elements["e"]).norm())
    worst = max(worst, (unitary_antipode(word_elements["f"]) + word_elements["f"]).norm())
    checks.append(
        make_check(
            "dqg/flip-antiautomorphism",
            "R is an involutive *-antiautomorphism with R(q) = q^-1, R(e) = -e",
            worst,
            tol,
        )
    )

    worst = 0.0
    for a in random_elements:
        for two_n in window:
            for two_m in window:
                worst = max(worst, flip_residual(params, a, two_n, two_m))
    checks.append(
        make_check("dqg/flip-coproduct", "D(R(a)) = flip (R(x)R) D(a)", worst, tol)
    )

    # antipode against the symbolic layer and closed forms
    worst = 0.0
    for name, x in WORD_BATTERY.items():
        lhs = antipode(params, word_elements[name])
        rhs = embed(params, formal_antipode(x, params.lam), window)
        worst = max(worst, (lhs - rhs).norm())
    for two_k in range(0, min(cap, 3) + 1):
        for two_r in weights(two_k):
            for two_s in weights(two_k):
                image = antipode(params, matrix_unit(two_k, two_r, two_s))
                factor = (-1.0) ** ((two_s - two_r) // 2) * params.lam_pow(two_s - two_r)
                expected = factor * matrix_unit(two_k, -two_s, -two_r)
                worst = max(worst, (image - expected).norm())
    checks.append(
        make_check(
            "dqg/antipode-closed-form",
            "S matches the symbolic antipode and S(e_(r,s)) = (-1)^(s-r) lam^(s-r) e_(-s,-r)",
            worst,
            tol,
        )
    )

    worst = 0.0
    for a in random_elements:
        worst = max(worst, (antipode_inv(params, antipode(params, a)) - a).norm())
        worst = max(
            worst,
            (antipode(params, antipode(params, a)) - scaling_imag(params, a, -1.0)).norm(),
        )
    checks.append(
        make_check("dqg/antipode-squared", "S^-1 S = id and S^2 = tau_(-i)", worst, tol)
    )

    s_values = [0.7, -1.3] + list(rng.uniform(-2.0, 2.0, size=2))
    worst = 0.0
    for a in random_elements:
        for s in s_values:
            for two_n in window[: min(len(window), 4)]:
                for two_m in window[: min(len(window), 4)]:
                    worst = max(worst, scaling_compat_residual(params, a, two_n, two_m, s))
    checks.append(
        make_check("dqg/scaling-coproduct", "D tau_s = (tau_s (x) tau_s) D", worst, tol)
    )

    worst = 0.0
    s1, s2 = 0.9, -0.4
    for a in random_elements:
        worst = max(
            worst,
            (scaling(params, scaling(params, a, s1), s2) - scaling(params, a, s1 + s2)).norm(),
        )
        worst = max(worst, (scaling(params, a.star(), s1) - scaling(params, a, s1).star()).norm())
        worst = max(
            worst,
            (
                unitary_antipode(scaling(params, a, s1))
                - scaling(params, unitary_antipode(a), s1)
            ).norm(),
        )
    checks.append(
        make_check(
            "dqg/scaling-group",
            "tau is a one-parameter *-automorphism group commuting with R",
            worst,
            tol,
        )
    )

    return checks


def cointegral_battery(params: Params, nmax2: int) -> list:
    tol = params.tol_abs
    checks = []
    cap = min(nmax2, 6)
    h = cointegral()

    two_routes = idempotent = selfadjoint = rank_one = range_vec = 0.0
    for two_n in range(0, cap + 1):
        dim = two_n + 1
        closed = cointegral_coproduct(params, two_n)
        via_cg = coproduct_component(params, h, two_n, two_n)
        two_routes = max(two_routes, max_abs(closed - via_cg))
        idempotent = max(idempotent, max_abs(closed @ closed - closed))
        selfadjoint = max(selfadjoint, max_abs(closed - closed.conj().T))
        sing = np.linalg.svd(closed, compute_uv=False)
        rank_one = max(rank_one, abs(float(sing[0]) - 1.0))
        if sing.size > 1:
            rank_one = max(rank_one, float(sing[1]))
        vec = invariant_vector(params, two_n)
        range_vec = max(range_vec, max_abs(closed - np.outer(vec, vec.conj())))
    checks.append(
        make_check("coint/two-routes", "closed form of D(h) equals the summand route", two_routes, tol)
    )
    checks.append(make_check("coint/idempotent", "D(h)_(n,n)^2 = D(h)_(n,n)", idempotent, tol))
    checks.append(make_check("coint/self-adjoint", "D(h)_(n,n)* = D(h)_(n,n)", selfadjoint, tol))
    checks.append(make_check("coint/rank-one", "D(h)_(n,n) is a rank 1 projection", rank_one, tol))
    checks.append(
        make_check("coint/invariant-vector", "range spanned by the canonical invariant vector", range_vec, tol)
    )

    absorb = 0.0
    for a in [matrix_unit(0, 0, 0), matrix_unit(2, 2, 0), one_window([0, 1, 2])]:
        absorb = max(absorb, (a * h - counit(a) * h).norm(), (h * a - counit(a) * h).norm())
    checks.append(make_check("coint/absorbing", "a h = eps(a) h = h a", absorb, tol))
    checks.append(bool_check("coint/counit", "eps(h) = 1", abs(counit(h) - 1.0) < 1e-15))

    left_char = right_char = mod_elem = trace_form = 0.0
    for two_n in range(0, cap + 1):
        dim = two_n + 1
        block = cointegral_coproduct(params, two_n)
        eye = np.eye(dim, dtype=complex)
        w_left = integral_weight_matrix(params, two_n, "left")
        w_right = integral_weight_matrix(params, two_n, "right")
        left_char = max(left_char, max_abs(contract_second(block, dim, dim, w_left) - eye))
        right_char = max(right_char, max_abs(contract_first(block, dim, dim, w_right) - eye))
        mod_elem = max(
            mod_elem,
            max_abs(
                contract_first(block, dim, dim, w_left) - modular_element_block(params, two_n)
            ),
        )
        trace_form = max(
            trace_form,
            max_abs(
                contract_first(block, dim, dim, np.eye(dim, dtype=complex))
                - np.diag(np.exp(params.t * weights(two_n))) / quantum_dimension(params, two_n)
            ),
        )
    checks.append(make_check("coint/left-integral", "(id (x) phi) D(h) = 1", left_char, tol))
    checks.append(make_check("coint/right-integral", "(psi (x) id) D(h) = 1", right_char, tol))
    checks.append(
        make_check("coint/modular-element", "(phi (x) id) D(h) = q^4", mod_elem, tol)
    )
    checks.append(
        make_check("coint/trace-contraction", "(trace (x) id) D(h) = q^2 / c", trace_form, tol)
    )

    worst = 0.0
    for two_n in range(0, min(cap, 4) + 1):
        c_n = quantum_dimension(params, two_n)
        for two_r in weights(two_n):
            unit = matrix_unit(two_n, two_r, two_r)
            worst = max(
                worst,
                abs(left_integral(params, unit) - c_n * params.lam_pow(-2 * two_r)),
                abs(right_integral(params, unit) - c_n * params.lam_pow(2 * two_r)),
            )
        off = matrix_unit(two_n, two_n, -two_n) if two_n else None
        if off is not None:
            worst = max(worst, abs(left_integral(params, off)), abs(right_integral(params, off)))
    worst = max(worst, abs(left_integral(params, h) - 1.0), abs(right_integral(params, h) - 1.0))
    checks.append(
        make_check(
            "coint/integral-values",
            "phi(e_(r,r)) = c lam^(-2r), psi(e_(r,r)) = c lam^(2r), phi(h) = 1",
            worst,
            tol,
        )
    )

    left_worst = right_worst = 0.0
    for two_k in range(0, min(cap, 4) + 1):
        for two_r in weights(two_k):
            for two_s in weights(two_k):
                a = matrix_unit(two_k, two_r, two_s)
                for two_n in range(0, min(cap, 4) + 1):
                    l, r = invariance_residual(params, a, two_n)
                    left_worst = max(left_worst, l)
                    right_worst = max(right_worst, r)
    checks.append(
        make_check("coint/left-invariance", "(id (x) phi) D(a) = phi(a) 1", left_worst, tol)
    )
    checks.append(
        make_check("coint/right-invariance", "(psi (x) id) D(a) = psi(a) 1", right_worst, tol)
    )

    worst = 0.0
    q4 = words.Q * words.Q * words.Q * words.Q
    window = list(range(0, min(cap, 4) + 1))
    # the (n, m) coproduct block draws on summands up to spin n + m, so the
    # embedded multiplier must cover twice the pair window
    delta = embed(params, q4, list(range(0, 2 * min(cap, 4) + 1)))
    for two_n in window:
        worst = max(
            worst, max_abs(delta.block(two_n) - modular_element_block(params, two_n))
        )
        for two_m in window:
            grouplike = np.kron(
                modular_element_block(params, two_n), modular_element_block(params, two_m)
            )
            diff = max_abs(coproduct_component(params, delta, two_n, two_m) - grouplike)
            worst = max(worst, diff / max(1.0, max_abs(grouplike)))
    checks.append(
        make_check("coint/modular-grouplike", "delta = q^4 with D(delta) = delta (x) delta", worst, tol)
    )

    return checks


def modular_battery(params: Params, nmax2: int) -> list:
    tol = params.tol_abs
    checks = []
    cap = min(nmax2, 4)

    left_worst = right_worst = 0.0
    for two_n in range(0, cap + 1):
        left_worst = max(left_worst, modular_certificate_residual(params, two_n, "left"))
        right_worst = max(right_worst, modular_certificate_residual(params, two_n, "right"))
    checks.append(
        make_check(
            "modular/left-certificate",
            "phi(a b) = phi(b sigma_phi(a)) over all matrix-unit pairs",
            left_worst,
            tol,
        )
    )
    checks.append(
        make_check(
            "modular/right-certificate",
            "psi(a b) = psi(b sigma_psi(a)) over all matrix-unit pairs",
            right_worst,
            tol,
        )
    )

    worst = 0.0
    for two_n in range(0, cap + 1):
        for two_r in weights(two_n):
            for two_s in weights(two_n):
                a = matrix_unit(two_n, two_r, two_s)
                round_trip = modular_automorphism(
                    params, modular_automorphism(params, a, "left"), "right"
                )
                worst = max(worst, (round_trip - a).norm())
                worst = max(
                    worst,
                    abs(
                        left_integral(params, modular_automorphism(params, a, "left"))
                        - left_integral(params, a)
                    ),
                )
    checks.append(
        make_check(
            "modular/inverse-pair",
            "sigma_psi sigma_phi = id and phi sigma_phi = phi",
            worst,
            tol,
        )
    )
    return checks


def dual_battery(params: Params, nmax2: int, rng) -> list:
    tol = params.tol_abs
    lam = params.lam
    checks = []

    half = build_rep(params, 1, +1)
    table = max(
        max_abs(
            np.array([[pair(AlgElement({1: half.q}), u_entry(i, j)) for j in U_LABELS] for i in U_LABELS])
            - np.diag([lam**0.5, lam**-0.5])
        ),
        max_abs(
            np.array([[pair(AlgElement({1: half.e}), u_entry(i, j)) for j in U_LABELS] for i in U_LABELS])
            - np.array([[0.0, 1.0], [0.0, 0.0]])
        ),
        max_abs(
            np.array([[pair(AlgElement({1: half.f}), u_entry(i, j)) for j in U_LABELS] for i in U_LABELS])
            - np.array([[0.0, 0.0], [1.0, 0.0]])
        ),
    )
    checks.append(
        make_check("dual/pairing-table", "<pi(q), u>, <pi(e), u>, <pi(f), u> closed forms", table, tol)
    )

    one = dual_unit()
    worst = 0.0
    for i in U_LABELS:
        for j in U_LABELS:
            u = u_entry(i, j)
            worst = max(worst, (dual_mul(params, one, u) - u).norm())
            worst = max(worst, (dual_mul(params, u, one) - u).norm())
    checks.append(make_check("dual/unit", "1 b = b = b 1 in the dual", worst, tol))

    ok = abs(dual_counit(one) - 1.0) < 1e-15
    for i in U_LABELS:
        for j in U_LABELS:
            expected = 1.0 if i == j else 0.0
            ok = ok and abs(dual_counit(u_entry(i, j)) - expected) < 1e-15
    checks.append(bool_check("dual/counit-values", "eps(u[i,j]) = delta(i,j), eps(1) = 1", ok))

    checks.append(
        make_check(
            "dual/coproduct-battery",
            "<a a', u[i,j]> = sum_k <a, u[i,k]><a', u[k,j]>",
            dual_coproduct_residual(params),
            tol,
        )
    )

    entries = [u_entry(i, j) for i in U_LABELS for j in U_LABELS]
    coeffs = rng.standard_normal(len(entries)) + 1j * rng.standard_normal(len(entries))
    x = DualElement()
    for cf, u in zip(coeffs, entries):
        x = x + cf * u
    y = dual_mul(params, entries[0], entries[3]) + entries[1]
    z = entries[2]
    assoc = (
        dual_mul(params, dual_mul(params, x, y), z) - dual_mul(params, x, dual_mul(params, y, z))
    ).norm()
    checks.append(make_check("dual/associativity", "(x y) z = x (y z)", assoc, tol))

    worst = 0.0
    for i in U_LABELS:
        for j in U_LABELS:
            factor, (ti, tj) = dual_antipode_expected(params, i, j)
            worst = max(worst, (dual_antipode(params, u_entry(i, j)) - factor * u_entry(ti, tj)).norm())
    worst = max(worst, (dual_antipode(params, one) - one).norm())
    checks.append(
        make_check(
            "dual/antipode-table",
            "S(u[r,s]) = (-1)^(r-s) lam^(r-s) u[-s,-r]; S(u11) = u22, S(u12) = -lam u12",
            worst,
            tol,
        )
    )

    worst = 0.0
    for i in U_LABELS:
        for j in U_LABELS:
            u = u_entry(i, j)
            worst = max(worst, (dual_antipode_inv(params, dual_antipode(params, u)) - u).norm())
            expected = params.lam_pow(2 * (i - j)) * u
            twice = dual_antipode(params, dual_antipode(params, u))
            worst = max(worst, (twice - expected).norm())
    checks.append(
        make_check("dual/antipode-squared", "S^2(u[r,j]) = lam^(2r-2j) u[r,j]", worst, tol)
    )

    worst = 0.0
    for i in U_LABELS:
        for j in U_LABELS:
            lhs = dual_star(params, u_entry(i, j))
            rhs = dual_antipode(params, u_entry(j, i))
            worst = max(worst, (lhs - rhs).norm())
    alpha = u_entry(1, 1)
    gamma = u_entry(-1, 1)
    worst = max(worst, (dual_star(params, alpha) - u_entry(-1, -1)).norm())
    worst = max(
        worst,
        (u_entry(1, -1) + (1.0 / lam) * dual_star(params, gamma)).norm(),
    )
    star_sq = dual_star(params, dual_star(params, alpha + 1j * gamma))
    worst = max(worst, (star_sq - (alpha + 1j * gamma)).norm())
    checks.append(
        make_check(
            "dual/star-structure",
            "u[i,j]* = S(u[j,i]); u22 = u11*, u12 = -gamma*/lam; ** = id",
            worst,
            tol,
        )
    )

    from .dual import unitarity_residuals, woronowicz_residuals

    for law, value in unitarity_residuals(params).items():
        slug = "left" if law.startswith("S(u)") else "right"
        checks.append(make_check(f"dual/unitarity-{slug}", law, value, tol))
    woro_ids = {
        "alpha gamma = gamma alpha / lam": "dual/relation-alpha-gamma",
        "alpha gamma* = gamma* alpha / lam": "dual/relation-alpha-gamma-star",
        "gamma gamma* = gamma* gamma": "dual/relation-gamma-normal",
        "alpha* alpha + gamma* gamma = 1": "dual/relation-isometry",
        "alpha alpha* + gamma* gamma / lam^2 = 1": "dual/relation-coisometry",
    }
    for law, value in woronowicz_residuals(params).items():
        checks.append(make_check(woro_ids[law], law, value, tol))

    haar_ok = abs(dual_haar(one) - 1.0) < 1e-15 and all(
        abs(dual_haar(u_entry(i, j))) < 1e-15 for i in U_LABELS for j in U_LABELS
    )
    checks.append(bool_check("dual/haar-unit", "haar(1) = 1 and haar(u[i,j]) = 0", haar_ok))

    worst = 0.0
    for k in U_LABELS:
        for l in U_LABELS:
            for i in U_LABELS:
                for j in U_LABELS:
                    prod = dual_mul(params, u_entry(k, l), u_entry(i, j))
                    expected = dual_haar_quadratic_expected(params, k, l, i, j)
                    worst = max(worst, abs(dual_haar(prod) - expected))
    checks.append(
        make_check(
            "dual/haar-quadratic",
            "haar(u[k,l] u[i,j]) = d(i,-k) d(j,-l) (-1)^(k-l) lam^(k+l)/(lam + 1/lam)",
            worst,
            tol,
        )
    )

    worst = 0.0
    quadratics = [
        dual_mul(params, u_entry(k, l), u_entry(i, j))
        for k in U_LABELS
        for l in U_LABELS
        for i in U_LABELS
        for j in U_LABELS
    ]
    for b in quadratics:
        worst = max(worst, abs(dual_haar(dual_antipode(params, b)) - dual_haar(b)))
    checks.append(make_check("dual/haar-antipode", "haar(S(b)) = haar(b)", worst, tol))

    worst = 0.0
    for i in U_LABELS:
        for j in U_LABELS:
            for k in U_LABELS:
                for l in U_LABELS:
                    target = dual_haar(dual_mul(params, u_entry(i, j), u_entry(k, l))) * one
                    acc = DualElement()
                    for r in U_LABELS:
                        for s in U_LABELS:
                            haar_val = dual_haar(dual_mul(params, u_entry(r, j), u_entry(s, l)))
                            if haar_val != 0:
                                acc = acc + haar_val * dual_mul(params, u_entry(i, r), u_entry(k, s))
                    worst = max(worst, (acc - target).norm())
    checks.append(
        make_check(
            "dual/haar-left-invariance",
            "(id (x) haar) D(b) = haar(b) 1 on quadratics",
            worst,
            tol,
        )
    )

    worst = 0.0
    for i in U_LABELS:
        for j in U_LABELS:
            u = u_entry(i, j)
            expected = params.lam_pow(2 * (i + j)) * u
            worst = max(worst, (dual_modular(params, u) - expected).norm())
            worst = max(worst, (dual_modular_inv(params, dual_modular(params, u)) - u).norm())
            star_twist = (
                dual_modular(params, dual_star(params, u))
                - dual_star(params, dual_modular_inv(params, u))
            ).norm()
            worst = max(worst, star_twist)
    for b in quadratics[:6]:
        worst = max(worst, abs(dual_haar(dual_modular(params, b)) - dual_haar(b)))
    checks.append(
        make_check(
            "dual/modular-automorphism",
            "sigma(u[p,q]) = lam^(2p+2q) u[p,q]; sigma(b*) = sigma^-1(b)*; haar sigma = haar",
            worst,
            tol,
        )
    )

    worst = 0.0
    units_half = [matrix_unit(1, r, s) for r in (1, -1) for s in (1, -1)]
    for i in U_LABELS:
        for j in U_LABELS:
            sigma_b = dual_modular(params, u_entry(i, j))
            for a in units_half:
                for a2 in units_half:
                    lhs = pair(a * a2, sigma_b)
                    rhs = sum(
                        pair(a, dual_antipode(params, dual_antipode(params, u_entry(i, k))))
                        * pair(a2, dual_modular(params, u_entry(k, j)))
                        for k in U_LABELS
                    )
                    worst = max(worst, abs(lhs - rhs))
    checks.append(
        make_check(
            "dual/modular-coproduct",
            "D sigma = (S^2 (x) sigma) D, tested legwise through the pairing",
            worst,
            tol,
        )
    )

    span = span_check(params, min(nmax2, 2))
    ok = all(entry["rank"] == entry["expected"] for entry in span.values())
    gap = min(entry["gap"] for entry in span.values())
    checks.append(
        bool_check("dual/span-rank", "u-entry products have full rank on every block", ok)
    )
    checks.append(
        make_check("dual/span-gap", "smallest retained singular value >= 1e-6", 1e-6 - min(gap, 1e-6), 0.0)
    )

    return checks


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------


SUITES = ("hopf", "dqg", "dual", "all")


def run_suite(config: RunConfig, suite: str) -> Report:
    """Run one named battery and return its report."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; expected one of {SUITES}")
    params = config.params()
    checks = []
    if suite in ("hopf", "all"):
        checks.extend(formal_battery(params))
    if suite in ("dqg", "all"):
        rng = np.random.default_rng(config.seed)
        checks.extend(rep_battery(params, config.nmax2, rng))
        checks.extend(clebsch_battery(params, config.nmax2))
        checks.extend(hopf_battery(params, config.nmax2, rng))
        checks.extend(cointegral_battery(params, config.nmax2))
        checks.extend(modular_battery(params, config.nmax2))
    if suite in ("dual", "all"):
        rng = np.random.default_rng(config.seed + 1)
        checks.extend(dual_battery(params, config.nmax2, rng))
    return build_report(suite, config, checks)
