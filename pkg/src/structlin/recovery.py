"""Eigenvector and minimal-basis recovery from (modified) block Kronecker pencils.

Null vectors of the pencil are partitioned into ``d`` blocks of length ``n``.
The eigenvector of ``P`` sits in block ``s + 1`` (odd grade, finite
eigenvalue), block ``1`` (odd grade, infinite eigenvalue) or block ``t + 1``
(even grade).  Vectors are never normalized: eigenvectors are rays, and the
tests compare up to a scalar multiple.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from . import scalars
from .basiskit import gamma, is_minimal_basis, lambda_col, n_hat, stack_rows
from .evenlin import ModifiedBlockKroneckerPencil
from .oddlin import BlockKroneckerPencil
from .polycore import (BlockShape, MatPoly, block_hadamard, evaluate, get_block, poly_matmul,
                       rev, su)
from .verify import INF, nullspace_at, residual

FINITE, INFINITE = "finite", "infinite"
DIRECT, REVERSED = "direct", "reversed"


@dataclass
class RecoveryResult:
    kind: str
    lam0: object
    vectors: list
    indices: list = dc_field(default_factory=list)
    residuals: list = dc_field(default_factory=list)
    notes: list = dc_field(default_factory=list)


def _is_inf(lam0) -> bool:
    return isinstance(lam0, str) and lam0 == INF


def _block(z, k: int, n: int, count: int):
    z = np.asarray(z).reshape(-1)
    if z.shape[0] != count * n:
        raise ValueError(f"vector length {z.shape[0]} does not match {count} blocks of size {n}")
    return z[k * n:(k + 1) * n].copy()


def recover_eigvec_odd(L: BlockKroneckerPencil, z, which: str = FINITE):
    """Block ``s + 1`` (finite) or block ``1`` (infinite) of a null vector ``z``."""
    if which not in (FINITE, INFINITE):
        raise ValueError("which must be 'finite' or 'infinite'")
    return _block(z, L.s if which == FINITE else 0, L.n, L.d)


def recover_eigvec_even(L: ModifiedBlockKroneckerPencil, z, mode: str = DIRECT,
                        which: str = FINITE, lam0=None):
    """Block ``t + 1`` of ``z``.

    ``mode='direct'`` is for pencils with nonsingular leading coefficient,
    which have no infinite eigenvalues.  ``mode='reversed'`` is for trailing
    variants, which have no zero eigenvalue.
    """
    if mode not in (DIRECT, REVERSED):
        raise ValueError("mode must be 'direct' or 'reversed'")
    if which not in (FINITE, INFINITE):
        raise ValueError("which must be 'finite' or 'infinite'")
    if mode == DIRECT and which == INFINITE:
        raise ValueError("a nonsingular leading coefficient admits no infinite eigenvalue")
    if mode == REVERSED and which == FINITE and lam0 is not None and lam0 == 0:
        raise ValueError("a nonsingular trailing coefficient admits no zero eigenvalue")
    return _block(z, L.t, L.n, L.d)


def polynomial_of(L) -> MatPoly:
    """The polynomial a pencil linearizes: ``su(inner ⊙ Gamma_s)`` for odd pencils and
    block ``t + 1`` of ``L F`` (see :func:`right_factor`) for even ones."""
    if isinstance(L, BlockKroneckerPencil):
        shape = BlockShape.square(L.s + 1, L.n)
        return su(block_hadamard(L.inner, gamma(L.s, L.n).astype(L.inner.field), shape), shape)
    if isinstance(L, ModifiedBlockKroneckerPencil):
        LF = poly_matmul(L.assembled, right_factor(L))
        return get_block(LF, L.t, 0, L.n).regrade(L.d)
    raise TypeError("unsupported pencil type")


def right_factor(L: ModifiedBlockKroneckerPencil) -> MatPoly:
    """``[Lambda_t (x) I; N_hat_t (lam B + A)(Lambda_t (x) I)]``."""
    f = L.inner.field
    col = lambda_col(L.t, L.n).astype(f)
    bottom = poly_matmul(poly_matmul(n_hat(L.t, L.n).astype(f), L.inner), col)
    g = max(col.grade, bottom.grade)
    return MatPoly(np.concatenate([col.regrade(g).coeffs, bottom.regrade(g).coeffs], axis=1), f)


def right_factorization_check(L: ModifiedBlockKroneckerPencil, P: MatPoly, tol=None) -> bool:
    """``L(lam) F(lam) = e_{t+1} (x) P(lam)`` with ``F`` from :func:`right_factor`."""
    if P.shape != (L.n, L.n) or P.grade != L.d:
        raise ValueError("polynomial does not match the pencil")
    f = scalars.common_field(L.assembled.field, P.field)
    lhs = poly_matmul(L.assembled.astype(f), right_factor(L).astype(f))
    c = scalars.zeros((P.grade + 1, L.d * L.n, L.n), f)
    c[:, L.t * L.n:(L.t + 1) * L.n, :] = P.astype(f).coeffs
    return lhs.equals(MatPoly(c, f), tol)


def _as_vector_poly(x, field: str) -> MatPoly:
    if isinstance(x, MatPoly):
        return x.astype(field)
    x = scalars.as_array(np.asarray(x, dtype=object).reshape(-1, 1), field)
    return MatPoly.constant(x, field)


def _odd_top_and_star(L: BlockKroneckerPencil, x: MatPoly) -> MatPoly:
    """``[Lambda_s (x) I; w] x`` with ``w`` solving the top block rows.

    ``L_s`` has rows ``-e_i + lam e_{i+1}``, so ``L_s^T w = -r`` unrolls to
    ``w_1 = r_1`` and ``w_i = r_i + lam w_{i-1}``.
    """
    f, n, s = L.inner.field, L.n, L.s
    top = poly_matmul(lambda_col(s, n).astype(f), x)
    r = poly_matmul(L.inner, top)
    ws = []
    for i in range(s):
        ri = get_block(r, i, 0, n, 1)
        ws.append(ri if i == 0 else _add(ri, ws[-1].shift(1)))
    return _vstack([top] + ws, f)


def _add(a: MatPoly, b: MatPoly) -> MatPoly:
    g = max(a.grade, b.grade)
    return a.regrade(g) + b.regrade(g)


def _vstack(parts, field) -> MatPoly:
    g = max(p.grade for p in parts)
    return MatPoly(np.concatenate([p.astype(field).regrade(g).coeffs for p in parts], axis=1), field)


def _check_null(M, z, tol):
    r = M @ z
    if r.dtype == object:
        ok = not any(bool(v) for v in r)
    else:
        scale = max(float(np.max(np.abs(np.asarray(M, dtype=complex)))), 1.0)
        scale *= max(float(np.max(np.abs(np.asarray(z, dtype=complex)))), 1.0)
        ok = float(np.max(np.abs(np.asarray(r, dtype=complex)), initial=0.0)) \
            <= (1e-10 if tol is None else tol) * scale
    if not ok:
        raise AssertionError("embedding inconsistent")


def embed_nullvector(L, x, lam0=None, mode: str = DIRECT, tol=None):
    """Null vector of the pencil built from a null vector of ``P``.

    ``x`` is a vector polynomial with ``P x = 0`` (then ``lam0`` is ``None``
    and a vector polynomial is returned) or a constant vector with
    ``P(lam0) x = 0``; ``lam0 = "inf"`` selects the infinite eigenvalue.  For
    a trailing variant pass its source pencil with ``mode='reversed'``; the
    result is then a null vector of ``rev_1`` of that source.
    """
    if isinstance(L, BlockKroneckerPencil):
        return _embed_odd(L, x, lam0, tol)
    if isinstance(L, ModifiedBlockKroneckerPencil):
        return _embed_even(L, x, lam0, mode, tol)
    raise TypeError("unsupported pencil type")


def _embed_odd(L, x, lam0, tol):
    f = scalars.common_field(L.inner.field, *([] if isinstance(x, MatPoly) else
                                              [_field_of_vector(x)]))
    L = _with_field(L, f)
    if _is_inf(lam0):
        xv = scalars.as_array(np.asarray(x, dtype=object).reshape(-1), f)
        n = L.n
        z = scalars.zeros((L.d * n,), f)
        z[:n] = xv
        B = L.inner.coeff(1)
        for i in range(L.s):
            z[(L.s + 1 + i) * n:(L.s + 2 + i) * n] = -(B[(i + 1) * n:(i + 2) * n, :n] @ xv)
        _check_null(L.assembled.coeff(1), z, tol)
        return z
    Z = _odd_top_and_star(L, _as_vector_poly(x, f))
    if lam0 is None:
        if not poly_matmul(L.assembled, Z).is_zero(tol):
            raise AssertionError("embedding inconsistent")
        return Z
    z = evaluate(Z, lam0).reshape(-1)
    _check_null(evaluate(L.assembled, lam0), z, tol)
    return z


def _embed_even(L, x, lam0, mode, tol):
    if lam0 is None:
        raise ValueError("even pencils support the regular case only; lam0 is required")
    f = scalars.common_field(L.inner.field, _field_of_vector(x))
    L = _with_field(L, f)
    xv = scalars.as_array(np.asarray(x, dtype=object).reshape(-1, 1), f)
    if mode == DIRECT:
        if _is_inf(lam0):
            raise ValueError("a nonsingular leading coefficient admits no infinite eigenvalue")
        at = lam0
        target = evaluate(L.assembled, lam0)
    elif mode == REVERSED:
        if _is_inf(lam0):
            at = 0
            target = L.assembled.coeff(0)
        else:
            if lam0 == 0:
                raise ValueError("a nonsingular trailing coefficient admits no zero eigenvalue")
            at = 1 / lam0
            target = evaluate(rev(L.assembled, 1), lam0)
    else:
        raise ValueError("mode must be 'direct' or 'reversed'")
    z = (evaluate(right_factor(L), at) @ xv).reshape(-1)
    _check_null(target, z, tol)
    return z


def _field_of_vector(x) -> str:
    arr = np.asarray(x, dtype=object).reshape(-1)
    return scalars.common_field(*(scalars.infer_field(v) for v in arr)) if arr.size else "rational"


def _with_field(L, f):
    if L.inner.field == f:
        return L
    kw = dict(L.__dict__)
    kw["inner"] = L.inner.astype(f)
    kw["assembled"] = L.assembled.astype(f)
    return type(L)(**kw)


def recover_minimal_data(L: BlockKroneckerPencil, basis, indices, P: MatPoly | None = None,
                         seed: int = 0) -> RecoveryResult:
    """Right minimal basis and indices of ``P`` from those of its odd pencil.

    Each index of ``L`` exceeds the matching index of ``P`` by ``s``; the
    extracted rows are re-checked with ``is_minimal_basis`` and any failure
    is reported in ``notes``.
    """
    s, n = L.s, L.n
    if any(e < s for e in indices):
        raise ValueError("inconsistent with shift rule")
    if len(basis) != len(indices):
        raise ValueError("basis and indices differ in length")
    P = polynomial_of(L) if P is None else P
    vectors, res, notes = [], [], []
    for z, e in zip(basis, indices):
        if z.shape != (L.d * n, 1):
            raise ValueError("basis vector has the wrong length")
        x = get_block(z, s, 0, n, 1)
        deg = x.degree
        x = x.regrade(e - s) if deg is not None and deg <= e - s else x
        vectors.append(x)
        prod = poly_matmul(P.astype(x.field), x)
        res.append(0.0 if prod.is_zero() else float(np.max(np.abs(
            np.asarray(prod.coeffs, dtype=complex)))))
        if deg != e - s:
            notes.append(f"extracted block has degree {deg}, expected {e - s}")
    out = [e - s for e in indices]
    if vectors:
        report = is_minimal_basis(stack_rows(vectors), seed)
        if not report.verdict:
            notes.append("extracted vectors fail the minimal basis check")
    if any(r != 0 for r in res):
        notes.append("extracted vectors do not annihilate P")
    return RecoveryResult("minimal-basis", None, vectors, out, res, notes)


def recover_eigenpairs(L, P: MatPoly, lam0, mode: str = DIRECT, tol=None) -> RecoveryResult:
    """Every eigenvector of ``P`` at ``lam0`` read off the nullspace of the pencil.

    ``L`` is an odd pencil, an even pencil (``mode='direct'``) or the source
    of a trailing variant (``mode='reversed'``).
    """
    which = INFINITE if _is_inf(lam0) else FINITE
    if isinstance(L, BlockKroneckerPencil):
        M = L.assembled.coeff(1) if which == INFINITE else evaluate(L.assembled, lam0)
        get = lambda z: recover_eigvec_odd(L, z, which)  # noqa: E731
    elif isinstance(L, ModifiedBlockKroneckerPencil):
        A = L.assembled if mode == DIRECT else rev(L.assembled, 1)
        M = A.coeff(1) if which == INFINITE else evaluate(A, lam0)
        get = lambda z: recover_eigvec_even(L, z, mode, which, lam0)  # noqa: E731
    else:
        raise TypeError("unsupported pencil type")
    N = nullspace_at(M, tol)
    vectors = [get(N[:, k]) for k in range(N.shape[1])]
    res = [residual(P, lam0, x) for x in vectors]
    kind = "infinite-eigvec" if which == INFINITE else "finite-eigvec"
    return RecoveryResult(kind, lam0, vectors, [], res, [])
