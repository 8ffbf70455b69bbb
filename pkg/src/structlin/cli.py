"""Command line front end.

Exit status is 0 on success, 1 when a verification fails and 2 on bad input.
Input errors are reported on stderr as one JSON object; malformed JSON files
include the line and column of the syntax error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
import scipy.linalg

from . import io, scalars
from .basiskit import KINDS, BasisKind, is_minimal_basis, make_basis, minimal_nullspace_basis
from .evenlin import solve_even_structured, trailing_variant
from .oddlin import TEMPLATES, build_from_template, build_structured, template_library
from .polycore import MatPoly, evaluate, rev
from .recovery import (DIRECT, REVERSED, polynomial_of, recover_eigenpairs,
                       recover_eigvec_even, recover_eigvec_odd, recover_minimal_data)
from .verify import INF, certificate, residual

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    def __init__(self, message, **info):
        super().__init__(message)
        self.info = info


@dataclass
class RunConfig:
    command: str
    inputs: dict = field(default_factory=dict)
    outputs: dict = field(default_factory=dict)
    sigma: int = 1
    involution: str = "transpose"
    template: str | None = None
    tol: float = 1e-10
    seed: int = 0
    options: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.tol > 0:
            raise InputError("tolerance must be positive")
        if self.sigma not in (1, -1):
            raise InputError("sigma must be +1 or -1")
        for name, path in self.inputs.items():
            if path is not None and not Path(path).is_file():
                raise InputError(f"{name}: no such file", path=str(path))


def _load(path):
    try:
        return io.read_json(path)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc.msg}", path=str(path),
                         line=exc.lineno, column=exc.colno) from None


def _load_poly(path) -> MatPoly:
    try:
        return io.matpoly_from_json(_load(path))
    except (ValueError, TypeError) as exc:
        raise InputError(str(exc), path=str(path)) from None


def _tol_for(*polys, tol):
    return None if all(p.exact for p in polys) else tol


def _emit(obj, path):
    if path is None:
        print(json.dumps(obj, indent=1))
    else:
        io.write_json(obj, path)


def _write_mm(L: MatPoly, paths):
    if paths:
        io.write_matrix_market(L.coeff(0), paths[0])
        io.write_matrix_market(L.coeff(1), paths[1])


def cmd_build_odd(cfg: RunConfig) -> int:
    P = _load_poly(cfg.inputs["poly"])
    free = io.free_from_json(_load(cfg.inputs["free"])) if cfg.inputs.get("free") else None
    tol = _tol_for(P, tol=cfg.tol)
    if cfg.template:
        T = template_library(cfg.template, P.grade, cfg.sigma)
        L = build_from_template(T, P, cfg.sigma, free, cfg.involution)
    else:
        L = build_structured(P, cfg.sigma, cfg.involution, free, tol)
    io.write_json(io.pencil_to_json(L), cfg.outputs["out"])
    _write_mm(L.assembled, cfg.options.get("mm"))
    return EXIT_OK


def cmd_build_even(cfg: RunConfig) -> int:
    P = _load_poly(cfg.inputs["poly"])
    W = io.w_from_json(_load(cfg.inputs["W"])) if cfg.inputs.get("W") else None
    free = io.free_from_json(_load(cfg.inputs["free"])) if cfg.inputs.get("free") else None
    tol = _tol_for(P, tol=cfg.tol)
    if cfg.options.get("trailing"):
        L, src = trailing_variant(P, cfg.sigma, cfg.involution, W, free, tol, return_source=True)
        obj = io.pencil_to_json(("trailing", src))
    else:
        src = solve_even_structured(P, cfg.sigma, cfg.involution, W, free, tol)
        L, obj = src.assembled, io.pencil_to_json(src)
    io.write_json(obj, cfg.outputs["out"])
    _write_mm(L, cfg.options.get("mm"))
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    L = _load_poly(cfg.inputs["pencil"])
    P = _load_poly(cfg.inputs["poly"])
    cert = certificate(L, P, cfg.options.get("grade"), _tol_for(L, P, tol=cfg.tol))
    _emit(cert.to_json(), cfg.outputs.get("report"))
    return EXIT_OK if cert.is_strong else EXIT_FAIL


def _parse_lambda(text, field):
    if text is None:
        return None
    if text.strip().lower() in ("inf", "infinity", "∞"):
        return INF
    return scalars.parse_scalar(text, field)


def _vec_json(x, field):
    return [scalars.to_json(v, field) for v in np.asarray(x).reshape(-1)]


def cmd_recover(cfg: RunConfig) -> int:
    obj = _load(cfg.inputs["pencil"])
    try:
        kind, L = io.pencil_from_json(obj)
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(str(exc), path=str(cfg.inputs["pencil"])) from None
    field = L.inner.field
    mode = REVERSED if kind == "trailing" else DIRECT
    P = polynomial_of(L)
    if kind == "trailing":
        P = rev(P, P.grade)
    tol = _tol_for(P, tol=cfg.tol)
    if cfg.options["mode"] == "minbasis":
        if kind != "odd":
            raise InputError("minimal-basis recovery needs an odd-grade pencil")
        basis, idx = minimal_nullspace_basis(L.assembled, seed=cfg.seed)
        res = recover_minimal_data(L, basis, idx, P, cfg.seed)
        out = {"kind": res.kind, "indices": res.indices, "notes": res.notes,
               "vectors": [io.matpoly_to_json(v) for v in res.vectors]}
        _emit(out, cfg.outputs.get("out"))
        return EXIT_OK if not res.notes else EXIT_FAIL
    lam0 = _parse_lambda(cfg.options.get("lambda"), field)
    if lam0 is None:
        pairs = _float_eigenpairs(L, kind, mode)
        items = [{"lambda": _lam_json(lam), "vector": _vec_json(x, "c64"),
                  "residual": residual(P.astype("c64"), lam, x)} for lam, x in pairs]
        ok = all(it["residual"] <= cfg.tol for it in items)
    else:
        res = recover_eigenpairs(L, P, lam0, mode, tol)
        items = [{"lambda": _lam_json(lam0, field), "vector": _vec_json(x, field), "residual": r}
                 for x, r in zip(res.vectors, res.residuals)]
        ok = bool(items) and all(r <= (0.0 if P.exact else cfg.tol) for r in res.residuals)
    _emit({"kind": "eigenpairs", "pairs": items}, cfg.outputs.get("out"))
    return EXIT_OK if ok else EXIT_FAIL


def _lam_json(lam, field="c64"):
    return INF if isinstance(lam, str) else scalars.to_json(lam, field)


def _float_eigenpairs(L, kind, mode):
    """All eigenpairs of the pencil in floating point (QZ), mapped back to ``P``."""
    A = L.assembled if kind != "trailing" else rev(L.assembled, 1)
    A = A.astype("c64")
    w, V = scipy.linalg.eig(-A.coeff(0), A.coeff(1), homogeneous_eigvals=True)
    alpha, beta = w
    out = []
    for a, b, z in zip(alpha, beta, V.T):
        if abs(b) <= 1e-14 * max(abs(a), 1.0):
            lam = INF
        else:
            lam = a / b
        if kind == "odd":
            x = recover_eigvec_odd(L, z, "infinite" if lam == INF else "finite")
        else:
            x = recover_eigvec_even(L, z, mode, "infinite" if lam == INF else "finite")
        out.append((lam, x))
    return out


def cmd_bases(cfg: RunConfig) -> int:
    if cfg.options["action"] == "make":
        Q = make_basis(BasisKind(cfg.options["kind"], cfg.options["k"], cfg.options["n"]))
        _emit(io.matpoly_to_json(Q), cfg.outputs.get("out"))
        return EXIT_OK
    Q = _load_poly(cfg.inputs["matrix"])
    try:
        rep = is_minimal_basis(Q, cfg.seed)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit({"verdict": rep.verdict, "rowDegrees": list(rep.row_degrees),
           "rowReduced": rep.row_reduced, "fullRankEverywhere": rep.full_rank_everywhere,
           "minorGcd": None if rep.minor_gcd is None else str(rep.minor_gcd),
           "notes": rep.notes}, cfg.outputs.get("out"))
    return EXIT_OK if rep.verdict else EXIT_FAIL


COMMANDS = {"build-odd": cmd_build_odd, "build-even": cmd_build_even, "verify": cmd_verify,
            "recover": cmd_recover, "bases": cmd_bases}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="structlin",
                                 description="Structured linearizations of matrix polynomials.")
    ap.add_argument("--tol", type=float, default=1e-10, help="relative tolerance for float kinds")
    ap.add_argument("--seed", type=int, default=0, help="seed (STRUCTLIN_SEED overrides)")
    sub = ap.add_subparsers(dest="command", required=True)

    def structured(p):
        p.add_argument("--poly", required=True)
        p.add_argument("--sigma", type=int, choices=(1, -1), default=1)
        p.add_argument("--involution", default="transpose",
                       choices=("transpose", "conjugate-transpose"))
        p.add_argument("--free")
        p.add_argument("--out", required=True)
        p.add_argument("--mm", nargs=2, metavar=("A.mtx", "B.mtx"),
                       help="also write the constant and linear coefficients")

    p = sub.add_parser("build-odd", help="structured pencil for an odd-grade polynomial")
    structured(p)
    p.add_argument("--template", choices=TEMPLATES)

    p = sub.add_parser("build-even", help="modified pencil for an even-grade polynomial")
    structured(p)
    p.add_argument("--trailing", action="store_true", help="use the nonsingular trailing coefficient")
    p.add_argument("--W")

    p = sub.add_parser("verify", help="determinant certificate of a pencil against a polynomial")
    p.add_argument("--pencil", required=True)
    p.add_argument("--poly", required=True)
    p.add_argument("--grade", type=int)
    p.add_argument("--report")

    p = sub.add_parser("recover", help="eigenvectors or minimal bases from a built pencil")
    p.add_argument("--pencil", required=True)
    p.add_argument("--mode", choices=("eig", "minbasis"), default="eig")
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--out")

    p = sub.add_parser("bases", help="fixed bases and the minimal-basis checker")
    bsub = p.add_subparsers(dest="action", required=True)
    m = bsub.add_parser("make")
    m.add_argument("--kind", choices=KINDS, required=True)
    m.add_argument("--k", type=int, required=True)
    m.add_argument("--n", type=int, default=1)
    m.add_argument("--out")
    c = bsub.add_parser("check")
    c.add_argument("--matrix", required=True)
    c.add_argument("--out")
    return ap


def config_from_args(args) -> RunConfig:
    seed = int(os.environ.get("STRUCTLIN_SEED", args.seed))
    a = vars(args)
    names = {"build-odd": ("poly", "free"), "build-even": ("poly", "free", "W"),
             "verify": ("pencil", "poly"), "recover": ("pencil",)}
    if args.command == "bases":
        inputs = {"matrix": args.matrix} if args.action == "check" else {}
    else:
        inputs = {k: a[k] for k in names[args.command]}
    outputs = {k: a[k] for k in ("out", "report") if k in a}
    options = {k: a[k] for k in ("mm", "trailing", "grade", "mode", "action", "kind", "k", "n")
               if k in a}
    if "lam" in a:
        options["lambda"] = a["lam"]
    involution = a.get("involution", "transpose")
    return RunConfig(args.command, inputs, outputs, a.get("sigma", 1), involution,
                     a.get("template"), args.tol, seed, options)


def run(cfg: RunConfig) -> int:
    return COMMANDS[cfg.command](cfg)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(config_from_args(args))
    except InputError as exc:
        print(json.dumps({"error": str(exc), **exc.info}), file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, np.linalg.LinAlgError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
