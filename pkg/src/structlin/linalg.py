"""Dense linear algebra on constant matrices, exact or floating point.

Exact matrices are numpy object arrays of ``Fraction`` or
``GaussianRational``; anything else is treated as floating point and every
rank decision takes an explicit relative tolerance.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

import numpy as np

from .scalars import GaussianRational


def is_exact_array(M: np.ndarray) -> bool:
    return np.asarray(M).dtype == object


def _scale(M: np.ndarray) -> float:
    return float(np.max(np.abs(M))) if M.size else 0.0


def rref(M: np.ndarray, tol: float | None = None):
    """Reduced row echelon form and pivot columns.

    For float input, entries below ``tol * max|M|`` are treated as zero and the
    largest remaining entry of each column is used as pivot.
    """
    M = np.array(M, copy=True)
    rows, cols = M.shape
    exact = is_exact_array(M)
    if not exact:
        M = M.astype(np.complex128 if np.iscomplexobj(M) else np.float64)
        thresh = (1e-12 if tol is None else tol) * max(_scale(M), 1e-300)
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        if exact:
            piv = next((i for i in range(r, rows) if M[i, c] != 0), None)
        else:
            i = r + int(np.argmax(np.abs(M[r:, c])))
            piv = i if abs(M[i, c]) > thresh else None
            if piv is None:
                M[r:, c] = 0
        if piv is None:
            continue
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        M[r] = M[r] / M[r, c]
        for i in range(rows):
            if i != r and M[i, c] != 0:
                M[i] = M[i] - M[i, c] * M[r]
        pivots.append(c)
        r += 1
    return M, pivots


def rank(M: np.ndarray, tol: float | None = None) -> int:
    M = np.asarray(M)
    if M.size == 0:
        return 0
    return len(rref(M, tol)[1])


def nullspace(M: np.ndarray, tol: float | None = None) -> np.ndarray:
    """Basis of the right nullspace as the columns of a matrix."""
    M = np.asarray(M)
    rows, cols = M.shape
    exact = is_exact_array(M)
    if rows == 0:
        basis = np.eye(cols, dtype=int)
        return _like(basis, M)
    R, pivots = rref(M, tol)
    free = [c for c in range(cols) if c not in pivots]
    if exact:
        N = np.empty((cols, len(free)), dtype=object)
        N[...] = _zero_like(M)
    else:
        N = np.zeros((cols, len(free)), dtype=R.dtype)
    for k, f in enumerate(free):
        N[f, k] = _one_like(M)
        for r, p in enumerate(pivots):
            N[p, k] = -R[r, f]
    return N


def _zero_like(M):
    sample = next((v for v in np.asarray(M).reshape(-1) if isinstance(v, GaussianRational)), None)
    return GaussianRational(0) if sample is not None else Fraction(0)


def _one_like(M):
    if not is_exact_array(M):
        return 1.0
    return _zero_like(M) + 1


def _like(intmat, M):
    if is_exact_array(M):
        z = _zero_like(M)
        out = np.empty(intmat.shape, dtype=object)
        for idx, v in np.ndenumerate(intmat):
            out[idx] = z + v
        return out
    return intmat.astype(np.asarray(M).dtype)


def det(M: np.ndarray):
    """Determinant. Exact rational input uses fraction-free Bareiss elimination."""
    M = np.asarray(M)
    n = M.shape[0]
    if M.shape != (n, n):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return _one_like(M) if is_exact_array(M) else 1.0
    if not is_exact_array(M):
        return np.linalg.det(M)
    if any(isinstance(v, GaussianRational) for v in M.reshape(-1)):
        return _det_elimination(M)
    # clear denominators row by row, then Bareiss over the integers
    scale = Fraction(1)
    rows = []
    for i in range(n):
        fr = [Fraction(v) for v in M[i]]
        m = lcm(*(f.denominator for f in fr))
        scale *= m
        rows.append([f.numerator * (m // f.denominator) for f in fr])
    return Fraction(_bareiss(rows), 1) / scale


def _bareiss(a: list) -> int:
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (akk * ri[j] - aik * rk[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def _det_elimination(M: np.ndarray):
    A = [list(r) for r in M]
    n = len(A)
    out = A[0][0] * 0 + 1
    for k in range(n):
        piv = next((i for i in range(k, n) if A[i][k] != 0), None)
        if piv is None:
            return out * 0
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
            out = -out
        out = out * A[k][k]
        inv = 1 / A[k][k]
        for i in range(k + 1, n):
            f = A[i][k] * inv
            if f != 0:
                A[i] = [a - f * b for a, b in zip(A[i], A[k])]
    return out


def inverse(M: np.ndarray) -> np.ndarray:
    M = np.asarray(M)
    n = M.shape[0]
    if not is_exact_array(M):
        return np.linalg.inv(M)
    aug = np.concatenate([M, _like(np.eye(n, dtype=int), M)], axis=1)
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise np.linalg.LinAlgError("singular matrix")
    return R[:, n:]


def is_nonsingular(M: np.ndarray, tol: float | None = None) -> bool:
    M = np.asarray(M)
    return M.shape[0] == M.shape[1] and rank(M, tol) == M.shape[0]
