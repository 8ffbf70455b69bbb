"""Modified block Kronecker pencils for even-grade polynomials.

The body ``lam B + A`` has size ``(t+1)n`` with ``d = 2t`` and is bordered by
``L_hat_t``, whose first block column vanishes.  The body splits as
``[[M11, M12], [M21, M22]]`` with ``M11`` of size ``n``.  A nonsingular leading
coefficient is required; the reversal construction covers a nonsingular
trailing coefficient instead.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from . import linalg, scalars
from .basiskit import gamma, lambda_col, lambda_hat_col, lk_hat
from .oddlin import _invol, kronecker_border, solve_structured
from .polycore import (BlockShape, MatPoly, arrays_close, block_hadamard, block_matrix,
                       get_block, involute, normalize_involution, permute_blocks,
                       poly_matmul, rev, structure_check, structure_class, su)
from .templates import BlockPencilTemplate, bordered_grid, parse_grid, permute_grid


@dataclass(frozen=True)
class ModifiedBlockKroneckerPencil:
    inner: MatPoly
    sigma: int
    t: int
    n: int
    involution: str
    assembled: MatPoly

    @property
    def d(self) -> int:
        return 2 * self.t

    @property
    def M11(self) -> MatPoly:
        return self.inner[: self.n, : self.n]

    @property
    def M12(self) -> MatPoly:
        return self.inner[: self.n, self.n:]

    @property
    def M21(self) -> MatPoly:
        return self.inner[self.n:, : self.n]

    @property
    def M22(self) -> MatPoly:
        return self.inner[self.n:, self.n:]


def assemble_modified(inner: MatPoly, sigma: int, t: int, n: int,
                      involution: str = "transpose") -> ModifiedBlockKroneckerPencil:
    if sigma not in (1, -1):
        raise ValueError("sigma must be +1 or -1")
    if t < 1:
        raise ValueError("t must be at least 1")
    inner = inner.regrade(1)
    if inner.shape != ((t + 1) * n, (t + 1) * n):
        raise ValueError(f"inner pencil must be {(t + 1) * n}x{(t + 1) * n}, got {inner.shape}")
    L = kronecker_border(inner, lk_hat(t, n), sigma)
    return ModifiedBlockKroneckerPencil(inner, sigma, t, n, normalize_involution(involution), L)


def q_part(P: MatPoly) -> MatPoly:
    """``P - lam^d P_d`` stored at grade ``d - 1``."""
    return MatPoly(P.coeffs[:-1], P.field)


@dataclass(frozen=True)
class EvenConditionReport:
    m11: bool
    m12: bool
    m21: bool
    m22: bool
    leading_nonsingular: bool

    @property
    def holds(self) -> bool:
        return self.m11 and self.m12 and self.m21 and self.m22


def even_conditions(pencil: ModifiedBlockKroneckerPencil, P: MatPoly, tol=None) -> EvenConditionReport:
    t, n = pencil.t, pencil.n
    if P.grade != 2 * t or P.shape != (n, n):
        raise ValueError("polynomial does not match the pencil (grade 2t, size n)")
    f = scalars.common_field(pencil.inner.field, P.field)
    P = P.astype(f)
    Pd = P.coeffs[-1]
    lam_t_Pd = MatPoly.constant(Pd, f).shift(t)
    m11 = pencil.M11.equals(MatPoly.constant(-Pd, f), tol)
    row = lambda_col(t - 1, n)
    m12 = su(block_hadamard(pencil.M12, involute(row), BlockShape(1, t, n)),
             BlockShape(1, t, n)).equals(lam_t_Pd, tol)
    m21 = su(block_hadamard(pencil.M21, row, BlockShape(t, 1, n)),
             BlockShape(t, 1, n)).equals(lam_t_Pd, tol)
    shape = BlockShape.square(t, n)
    m22 = su(block_hadamard(pencil.M22, gamma(t - 1, n), shape), shape).equals(q_part(P), tol)
    return EvenConditionReport(m11, m12, m21, m22, linalg.is_nonsingular(Pd, tol))


def check_conditions_even(pencil: ModifiedBlockKroneckerPencil, P: MatPoly, tol=None) -> bool:
    return even_conditions(pencil, P, tol).holds


def solve_M12(Pd, t: int, n: int, W=None) -> MatPoly:
    """``[lam P_d + W_1, -lam W_1 + W_2, ..., -lam W_{t-1}]``.

    ``W`` holds ``t - 1`` free matrices; a list of length ``t`` is accepted when
    its last entry is zero, since that entry cannot appear in a pencil
    solution of size ``n x tn``.
    """
    field = scalars.infer_field(Pd)
    W = [] if W is None else list(W)
    if W:
        field = scalars.common_field(field, *(scalars.infer_field(w) for w in W))
    W = [scalars.as_array(w, field).reshape(n, n) for w in W]
    if len(W) == t and not any(bool(v) for v in W[-1].reshape(-1)):
        W = W[:-1]
    if not W:
        W = [scalars.zeros((n, n), field) for _ in range(t - 1)]
    if len(W) != t - 1:
        raise ValueError(f"expected {t - 1} W matrices, got {len(W)}")
    c = scalars.zeros((2, n, t * n), field)
    c[1, :, :n] = scalars.as_array(Pd, field)
    for j, Wj in enumerate(W):
        c[0, :, j * n:(j + 1) * n] += Wj
        c[1, :, (j + 1) * n:(j + 2) * n] -= Wj
    return MatPoly(c, field)


def _nonsingular_or_raise(M, what, tol):
    if not linalg.is_nonsingular(M, tol):
        raise ValueError(f"nonsingular {what} coefficient required")


def solve_even_structured(P: MatPoly, sigma: int, involution: str = "transpose", W=None,
                          free=None, tol=None) -> ModifiedBlockKroneckerPencil:
    """Structured modified block Kronecker pencil for an even-grade ``P`` with
    nonsingular ``P_d``.  ``free`` parametrizes ``M22`` exactly as in the odd
    solver (one-based keys within ``M22``)."""
    mode = normalize_involution(involution)
    d = P.grade
    if d % 2 or d < 2:
        raise ValueError("even grade required")
    t, n = d // 2, P.rows
    _nonsingular_or_raise(P.coeffs[-1], "leading", tol)
    if not structure_check(P, structure_class(sigma, mode), tol):
        raise ValueError("structure mismatch")
    M12 = solve_M12(P.coeffs[-1], t, n, W)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        M22 = solve_structured(q_part(P), sigma, mode, free, tol, check_structure=False)
    f = scalars.common_field(P.field, M12.field, M22.field)
    M12 = M12.astype(f)
    M21 = MatPoly(np.stack([_invol(c, mode) for c in M12.coeffs]), f) * sigma
    M11 = MatPoly.constant(-P.astype(f).coeffs[-1], f).regrade(1)
    inner = block_matrix([[M11, M12], [M21.astype(f), M22.astype(f)]], f)
    return assemble_modified(inner, sigma, t, n, mode)


def banded_permutation_even(t: int):
    """Zero-based ``0, 1, t+1, 2, t+2, ..., 2t-1, t``."""
    perm = [0]
    for k in range(1, t):
        perm += [k, t + k]
    return perm + [t]


def permute_even_banded(pencil: ModifiedBlockKroneckerPencil):
    perm = banded_permutation_even(pencil.t)
    out = permute_blocks(pencil.assembled, perm, pencil.n)
    p = 2 * pencil.t
    for i in range(p):
        for j in range(p):
            if abs(i - j) > 1 and not get_block(out, i, j, pencil.n).is_zero(0.0):
                raise ValueError("permuted pencil is not block tridiagonal")
    return perm, out


def trailing_variant(P: MatPoly, sigma: int, involution: str = "transpose", W=None, free=None,
                     tol=None, return_source: bool = False):
    """``rev`` of the structured pencil built for ``rev_d P``; needs ``P_0`` nonsingular."""
    _nonsingular_or_raise(P.coeffs[0], "trailing", tol)
    source = solve_even_structured(rev(P, P.grade), sigma, involution, W, free, tol)
    L = rev(source.assembled, 1)
    return (L, source) if return_source else L


def check_condition_new(pencil: ModifiedBlockKroneckerPencil, tol=None):
    """Match ``(Lh^T (x) I)(lam B + A)(Lh (x) I)`` against ``[[-P, lam^t P], [lam^t P, Q]]``.

    Returns ``(holds, P, Q)``; ``P`` and ``Q`` are ``None`` when the block
    pattern itself fails, and ``holds`` also requires ``P`` nonsingular.
    """
    t, n = pencil.t, pencil.n
    H = lambda_hat_col(t, n).astype(pencil.inner.field)
    X = poly_matmul(poly_matmul(involute(H), pencil.inner), H)
    X11, X12 = X[:n, :n], X[:n, n:]
    X21, Q = X[n:, :n], X[n:, n:]
    Pblock = -X11.coeff(0)
    zero = scalars.zeros((n, n), X.field)

    def only(M, k, value):
        return all(arrays_close(M.coeff(j), value if j == k else zero, tol)
                   for j in range(M.grade + 1)) and (k <= M.grade)

    pattern = (only(X11, 0, -Pblock) and only(X12, t, Pblock) and only(X21, t, Pblock))
    if not pattern:
        return False, None, None
    Q = Q.regrade(2 * t - 1)
    return linalg.is_nonsingular(Pblock, tol), Pblock, Q


# -- reduction of the 2x2 block polynomial ------------------------------------------

def reduction_factors(Pmat, t: int):
    """Unimodular ``(U, V)`` with ``U [[-P, lam^t P], [lam^t P, Q]] V = diag(I, lam^{2t} P + Q)``:
    ``U = [[-P^{-1}, 0], [lam^t I, I]]`` and ``V = [[I, lam^t I], [0, I]]``."""
    field = scalars.infer_field(Pmat)
    Pm = scalars.as_array(Pmat, field)
    n = Pm.shape[0]
    I = scalars.eye(n, field)
    U = scalars.zeros((t + 1, 2 * n, 2 * n), field)
    U[0, :n, :n] = -linalg.inverse(Pm)
    U[0, n:, n:] = I
    U[t, n:, :n] = I
    V = scalars.zeros((t + 1, 2 * n, 2 * n), field)
    V[0, :n, :n] = I
    V[0, n:, n:] = I
    V[t, :n, n:] = I
    return MatPoly(U, field), MatPoly(V, field)


def reduction_factors_rev(Pmat, revQ: MatPoly):
    """``(U, V)`` with ``U [[-lam P, P], [P, rev Q]] V = diag(I, P + lam rev Q)``."""
    field = revQ.field
    Pm = scalars.as_array(Pmat, field)
    n = Pm.shape[0]
    Pinv = linalg.inverse(Pm)
    g = revQ.grade
    U = scalars.zeros((g + 1, 2 * n, 2 * n), field)
    U[0, :n, :n] = Pinv
    U[0, n:, n:] = scalars.eye(n, field)
    for k in range(g + 1):
        U[k, n:, :n] = -(revQ.coeffs[k] @ Pinv)
    V = scalars.zeros((2, 2 * n, 2 * n), field)
    V[0, :n, n:] = scalars.eye(n, field)
    V[0, n:, :n] = scalars.eye(n, field)
    V[1, n:, n:] = scalars.eye(n, field)
    return MatPoly(U, field), MatPoly(V, field)


def two_by_two(Pmat, Q: MatPoly, t: int, reversed_form: bool = False) -> MatPoly:
    """``[[-P, lam^t P], [lam^t P, Q]]`` or its reversed companion ``[[-lam P, P], [P, rev Q]]``."""
    field = Q.field
    Pm = scalars.as_array(Pmat, field)
    n = Pm.shape[0]
    if reversed_form:
        revQ = rev(Q, Q.grade)
        g = max(1, revQ.grade)
        c = scalars.zeros((g + 1, 2 * n, 2 * n), field)
        c[1, :n, :n] = -Pm
        c[0, :n, n:] = Pm
        c[0, n:, :n] = Pm
        c[: revQ.grade + 1, n:, n:] = revQ.coeffs
        return MatPoly(c, field)
    g = max(t, Q.grade)
    c = scalars.zeros((g + 1, 2 * n, 2 * n), field)
    c[0, :n, :n] = -Pm
    c[t, :n, n:] = Pm
    c[t, n:, :n] = Pm
    c[: Q.grade + 1, n:, n:] = Q.coeffs
    return MatPoly(c, field)


# -- symbolic fixtures -------------------------------------------------------------

def even_blockdiag_template(d: int) -> BlockPencilTemplate:
    """Body ``[[-P_d, lam P_d, 0...], [lam P_d, diag(lam P_{d-1} + P_{d-2}, ...)]]``."""
    if d % 2 or d < 2:
        raise ValueError("even grade required")
    t = d // 2
    rows = [["0"] * (t + 1) for _ in range(t + 1)]
    rows[0][0] = f"-P_{d}"
    rows[0][1] = rows[1][0] = f"λP_{d}"
    for k in range(1, t + 1):
        rows[k][k] = f"λP_{d - 2 * k + 1}+P_{d - 2 * k}"
    return BlockPencilTemplate("even-blockdiag", parse_grid(rows))


def symbolic_modified(T, sigma: int):
    grid = T.grid if isinstance(T, BlockPencilTemplate) else T
    return bordered_grid(grid, sigma, len(grid) - 1, hat=True)


def symbolic_even_banded(T, sigma: int):
    grid = symbolic_modified(T, sigma)
    return permute_grid(grid, banded_permutation_even(len(grid) // 2))
