"""JSON exchange formats and Matrix Market output.

A matrix polynomial is ``{"field", "rows", "cols", "grade", "coeffs"}`` with
``coeffs[k][i][j]`` the ``(i, j)`` entry of the coefficient of ``lam^k``.
Rational entries are ``"p/q"`` strings and complex entries ``[re, im]`` pairs.
Pencils add a ``"meta"`` object recording how they were built, so recovery
can find the block layout again.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np
import scipy.io

from . import scalars
from .evenlin import ModifiedBlockKroneckerPencil, assemble_modified
from .oddlin import BlockKroneckerPencil, assemble
from .polycore import MatPoly, rev


def matpoly_to_json(P: MatPoly) -> dict:
    return {
        "field": P.field, "rows": P.rows, "cols": P.cols, "grade": P.grade,
        "coeffs": [[[scalars.to_json(v, P.field) for v in row] for row in C] for C in P.coeffs],
    }


def matpoly_from_json(obj: dict) -> MatPoly:
    try:
        field = scalars.check_field(obj["field"])
        rows, cols, grade = int(obj["rows"]), int(obj["cols"]), int(obj["grade"])
        raw = obj["coeffs"]
    except KeyError as exc:
        raise ValueError(f"missing key {exc.args[0]!r} in matrix polynomial") from None
    if len(raw) != grade + 1:
        raise ValueError(f"expected {grade + 1} coefficients, found {len(raw)}")
    c = scalars.zeros((grade + 1, rows, cols), field)
    for k, C in enumerate(raw):
        if len(C) != rows or any(len(r) != cols for r in C):
            raise ValueError(f"coefficient {k} is not {rows}x{cols}")
        for i, r in enumerate(C):
            for j, v in enumerate(r):
                c[k, i, j] = scalars.from_json(v, field)
    return MatPoly(c, field)


def matrix_to_json(M, field: str) -> list:
    return [[scalars.to_json(v, field) for v in row] for row in np.asarray(M)]


def matrix_from_json(rows, field: str) -> np.ndarray:
    return scalars.as_array([[scalars.from_json(v, field) for v in r] for r in rows], field)


def pencil_to_json(L) -> dict:
    """Assembled pencil plus the layout needed to rebuild the structured object.

    ``L`` is an odd or even pencil, or ``("trailing", source)`` for the
    reversal of an even source pencil.
    """
    if isinstance(L, tuple) and L[0] == "trailing":
        src = L[1]
        out = matpoly_to_json(rev(src.assembled, 1))
        out["meta"] = _meta("trailing", src, t=src.t)
        return out
    out = matpoly_to_json(L.assembled)
    if isinstance(L, BlockKroneckerPencil):
        out["meta"] = _meta("odd", L, s=L.s)
    elif isinstance(L, ModifiedBlockKroneckerPencil):
        out["meta"] = _meta("even", L, t=L.t)
    else:
        raise TypeError("unsupported pencil type")
    return out


def _meta(kind, L, **extra):
    return {"kind": kind, "sigma": L.sigma, "n": L.n, "involution": L.involution,
            "inner": matpoly_to_json(L.inner), **extra}


def pencil_from_json(obj: dict):
    """``(kind, structured pencil)``; for ``"trailing"`` the even source is returned."""
    meta = obj.get("meta")
    if meta is None:
        raise ValueError("pencil JSON lacks the 'meta' block")
    inner = matpoly_from_json(meta["inner"])
    kind = meta["kind"]
    if kind == "odd":
        L = assemble(inner, int(meta["sigma"]), int(meta["s"]), int(meta["n"]), meta["involution"])
        stored = L.assembled
    elif kind in ("even", "trailing"):
        L = assemble_modified(inner, int(meta["sigma"]), int(meta["t"]), int(meta["n"]),
                              meta["involution"])
        stored = L.assembled if kind == "even" else rev(L.assembled, 1)
    else:
        raise ValueError(f"unknown pencil kind {kind!r}")
    if not stored.equals(matpoly_from_json(obj)):
        raise ValueError("stored pencil disagrees with its meta block")
    return kind, L


def free_to_json(free: dict, field: str) -> dict:
    return {"field": field, "blocks": [
        {"i": i, "j": j, "A": matrix_to_json(A, field), "B": matrix_to_json(B, field)}
        for (i, j), (A, B) in sorted(free.items())]}


def free_from_json(obj: dict) -> dict:
    field = scalars.check_field(obj["field"])
    return {(int(b["i"]), int(b["j"])): (matrix_from_json(b["A"], field),
                                         matrix_from_json(b["B"], field))
            for b in obj["blocks"]}


def w_to_json(W, field: str) -> dict:
    return {"field": field, "mats": [matrix_to_json(M, field) for M in W]}


def w_from_json(obj: dict) -> list:
    field = scalars.check_field(obj["field"])
    return [matrix_from_json(M, field) for M in obj["mats"]]


def read_json(path) -> dict:
    """Parse a JSON file; syntax errors keep their line and column."""
    return json.loads(Path(path).read_text())


def write_json(obj, path) -> None:
    Path(path).write_text(json.dumps(obj, indent=1) + "\n")


def write_matrix_market(M, path, precision: int = 17) -> None:
    """Dense Matrix Market array file.  Exact entries are rounded to floats,
    so the JSON output stays the source of truth."""
    M = np.asarray(M)
    if M.dtype == object:
        cplx = any(isinstance(v, scalars.GaussianRational) for v in M.reshape(-1))
        M = np.vectorize(complex if cplx else float, otypes=[complex if cplx else float])(M)
    scipy.io.mmwrite(str(path), M, precision=precision)
