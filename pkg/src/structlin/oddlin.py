"""Block Kronecker pencils for odd-grade matrix polynomials.

The pencil has the body ``lam B + A`` of size ``(s+1)n`` bordered by
``L_s^T (x) I_n`` on the right and ``sigma L_s (x) I_n`` below, with
``d = 2s + 1``.  Free parameters of the structured solution are the upper
off-diagonal blocks ``A_ij, B_ij`` (``i < j``), keyed with one-based block
indices so they read like the usual ``A_12`` notation.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from . import scalars
from .basiskit import gamma, lk
from .polycore import (BlockShape, MatPoly, arrays_close, block_hadamard, block_matrix,
                       get_block, normalize_involution, permute_blocks, structure_check,
                       structure_class, su)
from .templates import (BlockPencilTemplate, I_block, P_block, ZERO, bordered_grid,
                        instantiate, is_companion_grid, parse_grid, permute_grid)


@dataclass(frozen=True)
class BlockKroneckerPencil:
    inner: MatPoly
    sigma: int
    s: int
    n: int
    involution: str
    assembled: MatPoly

    @property
    def d(self) -> int:
        return 2 * self.s + 1

    @property
    def L1(self) -> np.ndarray:
        return self.assembled.coeff(1)

    @property
    def L0(self) -> np.ndarray:
        return self.assembled.coeff(0)

    def block(self, i: int, j: int):
        """``(A_ij, B_ij)`` with one-based block indices."""
        b = get_block(self.inner, i - 1, j - 1, self.n)
        return b.coeff(0), b.coeff(1)


def _check_sigma(sigma):
    if sigma not in (1, -1):
        raise ValueError("sigma must be +1 or -1")


def _as_pencil(inner: MatPoly) -> MatPoly:
    return inner.regrade(1)


def kronecker_border(inner: MatPoly, K: MatPoly, sigma: int) -> MatPoly:
    """``[[inner, K^T], [sigma K, 0]]`` (``K^T`` is always a plain transpose)."""
    K = K.astype(inner.field)
    Kt = MatPoly(np.transpose(K.coeffs, (0, 2, 1)), inner.field)
    zero = MatPoly.zeros(K.rows, K.rows, 1, inner.field)
    return block_matrix([[inner, Kt], [K * sigma, zero]], inner.field)


def assemble(inner: MatPoly, sigma: int, s: int, n: int,
             involution: str = "transpose") -> BlockKroneckerPencil:
    _check_sigma(sigma)
    inner = _as_pencil(inner)
    if inner.shape != ((s + 1) * n, (s + 1) * n):
        raise ValueError(f"inner pencil must be {(s + 1) * n}x{(s + 1) * n}, got {inner.shape}")
    if s == 0:
        warnings.warn("grade 1: the Kronecker border is empty", stacklevel=2)
    L = kronecker_border(inner, lk(s, n), sigma)
    return BlockKroneckerPencil(inner, sigma, s, n, normalize_involution(involution), L)


def _grade_check(P: MatPoly, s: int, n: int):
    if P.grade != 2 * s + 1:
        raise ValueError(f"polynomial grade {P.grade} does not match s={s}")
    if P.shape != (n, n):
        raise ValueError("polynomial size does not match n")


def check_condition_coeff(inner: MatPoly, P: MatPoly, s: int, n: int, tol=None) -> bool:
    """The affine block equations linking the coefficients of ``P`` to the blocks
    of ``A`` and ``B`` (anti-diagonal sums of the block grid)."""
    _grade_check(P, s, n)
    inner = _as_pencil(inner)
    if inner.shape != ((s + 1) * n,) * 2:
        raise ValueError("inner pencil has the wrong size")
    d = 2 * s + 1
    m = s + 1
    for k in range(d + 1):
        total = scalars.zeros((n, n), inner.field)
        for i in range(1, m + 1):
            for j in range(1, m + 1):
                blk = get_block(inner, i - 1, j - 1, n)
                if i + j == d + 2 - k:
                    total = total + blk.coeff(1)
                if i + j == d + 1 - k:
                    total = total + blk.coeff(0)
        f = scalars.common_field(inner.field, P.field)
        if not arrays_close(scalars.as_array(total, f), P.astype(f).coeffs[k], tol):
            return False
    return True


def check_condition_M(inner: MatPoly, P: MatPoly, s: int, n: int, tol=None) -> bool:
    """``P = su((lam B + A) ⊙ Gamma_s)``."""
    _grade_check(P, s, n)
    inner = _as_pencil(inner)
    shape = BlockShape.square(s + 1, n)
    return su(block_hadamard(inner, gamma(s, n), shape), shape).equals(P, tol)


def _invol(M: np.ndarray, mode: str) -> np.ndarray:
    M = np.asarray(M).T
    return scalars.conj_array(M) if mode == "conjugate-transpose" else M


def solve_structured(P: MatPoly, sigma: int, involution: str = "transpose", free=None,
                     tol=None, check_structure: bool = True) -> MatPoly:
    """Structured body ``lam B + A`` of a block Kronecker pencil for ``P``.

    ``free`` maps one-based ``(i, j)`` with ``i < j`` to ``(A_ij, B_ij)``;
    missing blocks are zero.  Lower blocks are ``sigma`` times the involution
    of the upper ones and the diagonal blocks are fixed by the block equations.
    """
    _check_sigma(sigma)
    mode = normalize_involution(involution)
    d = P.grade
    if d % 2 == 0:
        raise ValueError("odd grade required")
    if check_structure and not structure_check(P, structure_class(sigma, mode), tol):
        raise ValueError("structure mismatch")
    s = (d - 1) // 2
    m, n = s + 1, P.rows
    free = dict(free or {})
    field = scalars.common_field(P.field, *(scalars.infer_field(x) for ab in free.values() for x in ab))
    Pc = P.astype(field).coeffs
    Z = lambda: scalars.zeros((n, n), field)  # noqa: E731
    A = [[Z() for _ in range(m)] for _ in range(m)]
    B = [[Z() for _ in range(m)] for _ in range(m)]
    for (i, j), (Aij, Bij) in free.items():
        if not 1 <= i < j <= m:
            raise ValueError(f"free parameter ({i},{j}) is not an upper off-diagonal block")
        A[i - 1][j - 1] = scalars.as_array(Aij, field).reshape(n, n)
        B[i - 1][j - 1] = scalars.as_array(Bij, field).reshape(n, n)
    for i in range(m):
        for j in range(i + 1, m):
            A[j][i] = _invol(A[i][j], mode) * sigma
            B[j][i] = _invol(B[i][j], mode) * sigma

    def pair_sum(X, total):
        acc = Z()
        for i in range(1, m + 1):
            j = total - i
            if i < j <= m:
                acc = acc + X[i - 1][j - 1] + X[j - 1][i - 1]
        return acc

    for k in range(1, m + 1):
        B[k - 1][k - 1] = Pc[d - 2 * k + 2] - pair_sum(B, 2 * k) - pair_sum(A, 2 * k - 1)
        A[k - 1][k - 1] = Pc[d - 2 * k + 1] - pair_sum(B, 2 * k + 1) - pair_sum(A, 2 * k)
    Am, Bm = np.block(A), np.block(B)
    return MatPoly(np.stack([Am, Bm]), field)


def build_structured(P: MatPoly, sigma: int, involution: str = "transpose", free=None,
                     tol=None) -> BlockKroneckerPencil:
    s = (P.grade - 1) // 2
    inner = solve_structured(P, sigma, involution, free, tol)
    return assemble(inner, sigma, s, P.rows, involution)


# -- template library ------------------------------------------------------

TEMPLATES = ("blockdiag", "pentadiagonal", "ex1", "ex2", "ex3", "ecoupled")


def _diag_tail(grid, d, start):
    m = len(grid)
    for k in range(start, m + 1):
        grid[k - 1][k - 1] = P_block(d - 2 * k + 2, 1, 1) + P_block(d - 2 * k + 1)
    return grid


def _shift_rows(rows, o):
    """Shift every ``P_k`` index in a list of strings by ``o``."""
    import re
    return [[re.sub(r"P_(\d+)", lambda mt: f"P_{int(mt.group(1)) + o}", c) for c in r] for r in rows]


_TOP = {
    "ex1": [["λP_5", "λP_4", "0"], ["0", "P_2", "0"], ["λP_3", "0", "λP_1+P_0"]],
    "ex2": [["λP_5+P_4", "P_3", "0"], ["0", "0", "λP_2"], ["0", "P_1", "P_0"]],
    "ex3": [["λP_5", "E", "-λE"], ["λP_4", "λF", "λP_2"], ["λ(P_3-F)", "P_1", "P_0"]],
    "ecoupled": [["λP_5+P_4", "0", "E"], ["0", "λP_3+P_2-E-σE^T", "0"], ["σE^T", "0", "λP_1+P_0"]],
}


def template_library(name: str, d: int, sigma: int = 1) -> BlockPencilTemplate:
    """Named bodies ``lam B + A`` for grade ``d``.

    ``blockdiag`` and ``pentadiagonal`` exist for every odd ``d >= 3``.  The
    3x3 patterns ``ex1``, ``ex2``, ``ex3`` and ``ecoupled`` are defined for
    ``d = 5`` and extended to larger odd ``d`` by shifting their ``P`` indices
    by ``d - 5`` and continuing with diagonal blocks ``lam P_{2k-1} + P_{2k-2}``.
    ``sigma`` only matters for ``ecoupled``.
    """
    if name not in TEMPLATES:
        raise ValueError(f"unknown template {name!r}")
    if d < 3 or d % 2 == 0:
        raise ValueError("templates need an odd grade d >= 3")
    m = (d + 1) // 2
    grid = [[ZERO] * m for _ in range(m)]
    if name == "blockdiag":
        _diag_tail(grid, d, 1)
    elif name == "pentadiagonal":
        for k in range(1, m):
            grid[k - 1][k - 1] = P_block(d - 2 * k + 2, 1, 1) + P_block(d - 2 * k + 1, -1)
            off = P_block(d - 2 * k + 1, 1, 1)
            grid[k - 1][k] = off
            grid[k][k - 1] = off
        grid[m - 1][m - 1] = P_block(1, 1, 1) + P_block(0)
    else:
        if d < 5:
            raise ValueError(f"template {name} needs d >= 5")
        top = parse_grid(_shift_rows(_TOP[name], d - 5), sigma)
        for i in range(3):
            grid[i][:3] = top[i]
        _diag_tail(grid, d, 4)
    return BlockPencilTemplate(name, grid)


def is_companion_template(T: BlockPencilTemplate) -> bool:
    return is_companion_grid(T.grid)


def banded_permutation(s: int):
    """Zero-based interleaving ``0, s+1, 1, s+2, ..., 2s, s`` of body and border blocks."""
    perm = []
    for k in range(s):
        perm += [k, s + 1 + k]
    return perm + [s]


def symbolic_pencil(T, sigma: int):
    """Full symbolic block Kronecker pencil for a body template."""
    grid = T.grid if isinstance(T, BlockPencilTemplate) else T
    return bordered_grid(grid, sigma, len(grid) - 1)


def symbolic_banded(T, sigma: int):
    grid = symbolic_pencil(T, sigma)
    return permute_grid(grid, banded_permutation(len(grid) // 2))


def _bandwidth(M: MatPoly, n: int) -> int:
    p = M.rows // n
    width = 0
    for i in range(p):
        for j in range(p):
            if not get_block(M, i, j, n).is_zero(0.0):
                width = max(width, abs(i - j))
    return width


def permute_to_banded(L: BlockKroneckerPencil, name: str = "blockdiag"):
    """Block interleaving that turns the ``blockdiag`` pencil block tridiagonal
    and the ``pentadiagonal`` pencil block pentadiagonal."""
    want = {"blockdiag": 1, "pentadiagonal": 2}
    if name not in want:
        raise ValueError(f"no banded form for template {name!r}")
    perm = banded_permutation(L.s)
    out = permute_blocks(L.assembled, perm, L.n)
    if _bandwidth(out, L.n) > want[name]:
        raise ValueError("template mismatch: permuted pencil is not banded")
    return perm, out


def build_from_template(T: BlockPencilTemplate, P: MatPoly, sigma: int, free=None,
                        involution: str = "transpose") -> BlockKroneckerPencil:
    inner = instantiate(T, P, free)
    return assemble(inner, sigma, T.size - 1, P.rows, involution)


# -- FPR companion forms of grade 5 ----------------------------------------------

FPR_PENCILS = {
    "L3prime": [
        ["0", "λI", "-I", "0", "0"],
        ["λI", "-λP_1+P_0", "P_1", "0", "0"],
        ["-I", "P_1", "λP_3+P_2", "λP_4", "λI"],
        ["0", "0", "λP_4", "λP_5-P_4", "-I"],
        ["0", "0", "λI", "-I", "0"],
    ],
    "L5prime": [
        ["0", "0", "λI", "-I", "0"],
        ["0", "0", "0", "λI", "-I"],
        ["λI", "0", "-λP_1+P_0", "-λP_2+P_1", "P_2"],
        ["-I", "λI", "-λP_2+P_1", "-λP_3+P_2", "P_3"],
        ["0", "-I", "P_2", "P_3", "λP_5+P_4"],
    ],
}

# zero-based: block i of the Kronecker form is block FPR_PERMS[name][i] of the FPR pencil
FPR_PERMS = {"L3prime": (3, 2, 1, 4, 0), "L5prime": (4, 3, 2, 1, 0)}


def fpr_body(name: str) -> BlockPencilTemplate:
    """The body ``lam B + A`` of a permuted FPR pencil."""
    grid = permute_grid(parse_grid(FPR_PENCILS[name]), FPR_PERMS[name])
    return BlockPencilTemplate(name, [row[:3] for row in grid[:3]])


def fpr_fixtures(name: str, P: MatPoly):
    """The FPR pencil for a grade-5 ``P`` and the permutation onto Kronecker form."""
    if name not in FPR_PENCILS:
        raise ValueError(f"unknown FPR pencil {name!r}")
    if P.grade != 5:
        raise ValueError("FPR fixtures are defined for grade 5")
    return instantiate(parse_grid(FPR_PENCILS[name]), P), FPR_PERMS[name]
