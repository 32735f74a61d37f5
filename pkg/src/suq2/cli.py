"""Command line interface.

Subcommands:

    suq2 rep --n 2 [--sign -1]     irreducible representation matrices
    suq2 cg --n 1 --m 1            tensor product decomposition data
    suq2 verify [--suite all]      run the check batteries
    suq2 tables                    closed-form structure tables

Common options resolve in the order: command line flag, then SUQ2_*
environment variable, then built-in default.  JSON goes to stdout unless
--out is given; csv output requires --out.  Exit codes: 0 success,
1 failed checks, 2 invalid configuration.
"""

import argparse
import os
import sys

import numpy as np

from .clebsch import decompose, decomposition_residuals, index_set
from .discrete import integral_weight_matrix, quantum_dimension
from .params import Params
from .reps import (
    build_rep,
    casimir_matrix,
    casimir_scalar,
    classify_by_highest_weight,
    relation_residuals,
)
from .util import max_abs, weights
from .verify import (
    RunConfig,
    SUITES,
    config_doc,
    dual_antipode_expected,
    dual_haar_quadratic_expected,
    dump_json,
    report_csv,
    report_doc,
    run_suite,
)
from .dual import U_LABELS


_ENV_PREFIX = "SUQ2_"


def _env(name: str, cast, default):
    raw = os.environ.get(_ENV_PREFIX + name)
    if raw is None:
        return default
    try:
        return cast(raw)
    except ValueError:
        sys.stderr.write(f"suq2: invalid {_ENV_PREFIX + name}={raw!r}\n")
        raise SystemExit(2)


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--t",
        type=float,
        default=_env("T", float, 0.3),
        help="deformation parameter t > 0 (lam = exp(t))",
    )
    parser.add_argument(
        "--nmax",
        type=int,
        default=_env("NMAX", int, 4),
        help="largest doubled spin 2n covered by batteries and tables",
    )
    parser.add_argument(
        "--tol-abs",
        type=float,
        default=_env("TOL_ABS", float, 1e-9),
        help="absolute tolerance for residual checks",
    )
    parser.add_argument(
        "--tol-rel",
        type=float,
        default=_env("TOL_REL", float, 1e-9),
        help="relative tolerance for rank decisions",
    )
    parser.add_argument(
        "--format",
        choices=("json", "csv"),
        default=_env("FORMAT", str, "json"),
        dest="fmt",
        help="output format",
    )
    parser.add_argument(
        "--out",
        default=_env("OUT", str, ""),
        help="output file path (csv requires this; json defaults to stdout)",
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=_env("SEED", int, 0),
        help="seed for the randomized battery elements",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="suq2",
        description="numerical discrete quantum group su_q(2) and its compact dual",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_rep = sub.add_parser("rep", help="build one irreducible representation")
    _add_common(p_rep)
    p_rep.add_argument("--n", type=int, required=True, help="doubled spin 2n >= 0")
    p_rep.add_argument("--sign", type=int, choices=(1, -1), default=1, help="sign twist of q")
    p_rep.set_defaults(func=cmd_rep)

    p_cg = sub.add_parser("cg", help="decompose a tensor product of irreducibles")
    _add_common(p_cg)
    p_cg.add_argument("--n", type=int, required=True, help="left doubled spin 2n >= 0")
    p_cg.add_argument("--m", type=int, required=True, help="right doubled spin 2m >= 0")
    p_cg.set_defaults(func=cmd_cg)

    p_verify = sub.add_parser("verify", help="run the named check battery")
    _add_common(p_verify)
    p_verify.add_argument("--suite", choices=SUITES, default="all", help="battery to run")
    p_verify.set_defaults(func=cmd_verify)

    p_tables = sub.add_parser("tables", help="emit closed-form structure tables")
    _add_common(p_tables)
    p_tables.set_defaults(func=cmd_tables)

    return parser


def _config(args) -> RunConfig:
    return RunConfig(
        t=args.t,
        nmax2=args.nmax,
        tol_abs=args.tol_abs,
        tol_rel=args.tol_rel,
        fmt=args.fmt,
        out=args.out,
        seed=args.seed,
    )


def _flatten(doc, prefix=""):
    if isinstance(doc, dict):
        for k, v in doc.items():
            yield from _flatten(v, f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(doc, (list, tuple)):
        for i, v in enumerate(doc):
            yield from _flatten(v, f"{prefix}[{i}]")
    elif isinstance(doc, bool):
        yield prefix, "true" if doc else "false"
    elif isinstance(doc, (int, np.integer)):
        yield prefix, str(int(doc))
    elif isinstance(doc, (float, np.floating)):
        yield prefix, format(float(doc), ".17g")
    elif isinstance(doc, (complex, np.complexfloating)):
        yield prefix + ".re", format(float(doc.real), ".17g")
        yield prefix + ".im", format(float(doc.imag), ".17g")
    elif isinstance(doc, str):
        yield prefix, '"' + doc.replace('"', '""') + '"'
    else:
        raise TypeError(f"cannot flatten {type(doc)!r}")


def doc_csv(doc) -> str:
    lines = ["key,value"]
    lines.extend(f"{key},{value}" for key, value in _flatten(doc))
    return "\n".join(lines) + "\n"


def _emit(parser, args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        return
    if args.fmt == "csv":
        parser.error("--format csv requires --out")
    sys.stdout.write(text)


def _render(doc, fmt: str) -> str:
    if fmt == "json":
        return dump_json(doc) + "\n"
    return doc_csv(doc)


def _matrix_doc(mat: np.ndarray):
    return [[complex(v) for v in row] for row in np.asarray(mat, dtype=complex)]


def cmd_rep(args, parser) -> int:
    config = _config(args)
    params = config.params()
    if args.n < 0:
        parser.error("--n must be a doubled spin >= 0")
    rep = build_rep(params, args.n, args.sign)
    residuals = relation_residuals(params, rep.q, rep.q_inv, rep.e, rep.f)
    expected = casimir_scalar(params, args.n)
    cas = max_abs(casimir_matrix(params, rep) - expected * np.eye(rep.dim))
    two_n, sign = classify_by_highest_weight(params, rep.q, rep.e, rep.f)
    doc = {
        "schema": 1,
        "kind": "rep",
        "config": config_doc(config),
        "two_n": args.n,
        "sign": args.sign,
        "dim": rep.dim,
        "weights": [int(w) for w in weights(args.n)],
        "amplitudes": [float(r) for r in rep.r],
        "matrices": {
            "q": _matrix_doc(rep.q),
            "q_inv": _matrix_doc(rep.q_inv),
            "e": _matrix_doc(rep.e),
            "f": _matrix_doc(rep.f),
        },
        "residuals": {law: float(v) for law, v in residuals.items()},
        "casimir": {"value": float(expected), "residual": float(cas)},
        "classified": {"two_n": two_n, "sign": sign},
    }
    _emit(parser, args, _render(doc, args.fmt))
    return 0


def cmd_cg(args, parser) -> int:
    config = _config(args)
    params = config.params()
    if args.n < 0 or args.m < 0:
        parser.error("--n and --m must be doubled spins >= 0")
    dec = decompose(params, args.n, args.m)
    residuals = decomposition_residuals(params, args.n, args.m)
    doc = {
        "schema": 1,
        "kind": "cg",
        "config": config_doc(config),
        "two_n": args.n,
        "two_m": args.m,
        "index_set": index_set(args.n, args.m),
        "isometries": {str(piece.two_k): _matrix_doc(piece.v) for piece in dec.pieces},
        "residuals": {law: float(v) for law, v in residuals.items()},
    }
    _emit(parser, args, _render(doc, args.fmt))
    return 0


def cmd_verify(args, parser) -> int:
    config = _config(args)
    config.params()  # validate early so bad configs exit 2
    report = run_suite(config, args.suite)
    if args.fmt == "json":
        text = dump_json(report_doc(report)) + "\n"
    else:
        text = report_csv(report)
    _emit(parser, args, text)
    summary = f"suite {report.suite}: {len(report.checks)} checks, {len(report.failures)} failed\n"
    sys.stderr.write(summary)
    for check in report.failures:
        sys.stderr.write(f"  FAIL {check.id}: residual {check.residual:.3e} > {check.tolerance:.3e}\n")
    return 0 if report.passed else 1


def cmd_tables(args, parser) -> int:
    config = _config(args)
    params = config.params()
    lam = params.lam
    nmax2 = max(0, args.nmax)

    pairing = {}
    for name, mat in (
        ("q", build_rep(params, 1, +1).q),
        ("e", build_rep(params, 1, +1).e),
        ("f", build_rep(params, 1, +1).f),
    ):
        pairing[name] = _matrix_doc(mat)

    antipode_table = {}
    for i in U_LABELS:
        for j in U_LABELS:
            factor, (ti, tj) = dual_antipode_expected(params, i, j)
            antipode_table[f"u[{i},{j}]"] = {
                "factor": float(factor),
                "target": f"u[{ti},{tj}]",
            }

    haar_table = {}
    for k in U_LABELS:
        for l in U_LABELS:
            for i in U_LABELS:
                for j in U_LABELS:
                    value = dual_haar_quadratic_expected(params, k, l, i, j)
                    if value != 0:
                        haar_table[f"u[{k},{l}]u[{i},{j}]"] = complex(value)

    blocks = {}
    for two_n in range(0, nmax2 + 1):
        blocks[str(two_n)] = {
            "dim": two_n + 1,
            "quantum_dimension": float(quantum_dimension(params, two_n)),
            "casimir": float(casimir_scalar(params, two_n)),
            "left_integral_weights": [
                float(v) for v in np.diag(integral_weight_matrix(params, two_n, "left")).real
            ],
            "right_integral_weights": [
                float(v) for v in np.diag(integral_weight_matrix(params, two_n, "right")).real
            ],
        }

    doc = {
        "schema": 1,
        "kind": "tables",
        "config": config_doc(config),
        "lam": float(lam),
        "c": float(params.c),
        "pairing_spin_half": pairing,
        "dual_antipode": antipode_table,
        "dual_haar_quadratic": haar_table,
        "blocks": blocks,
    }
    _emit(parser, args, _render(doc, args.fmt))
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except ValueError as exc:
        parser.exit(2, f"suq2: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
