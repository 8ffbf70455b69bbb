"""Seeded random test data: matrices, structured polynomials, free parameters."""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np

from . import scalars
from .polycore import MatPoly, normalize_involution


def rng_from(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_scalar(rng: random.Random, field: str = "rational", bound: int = 9):
    num = lambda: Fraction(rng.randint(-bound, bound), rng.choice((1, 1, 1, 2, 3)))  # noqa: E731
    if field == "rational":
        return num()
    if field == "gaussian":
        return scalars.GaussianRational(num(), num())
    if field == "f64":
        return rng.uniform(-1, 1)
    return complex(rng.uniform(-1, 1), rng.uniform(-1, 1))


def random_matrix(n: int, m: int | None = None, field: str = "rational", seed=0) -> np.ndarray:
    rng = rng_from(seed)
    m = n if m is None else m
    out = scalars.zeros((n, m), field)
    for i in range(n):
        for j in range(m):
            out[i, j] = random_scalar(rng, field)
    return out


def structured_part(M: np.ndarray, sigma: int, involution: str = "transpose") -> np.ndarray:
    """``(M + sigma M^#) / 2`` where ``#`` is the involution."""
    Mt = M.T if normalize_involution(involution) == "transpose" else scalars.conj_array(M.T)
    half = Fraction(1, 2) if M.dtype == object else 0.5
    return (M + Mt * sigma) * half


def random_structured_poly(n: int, d: int, sigma: int = 1, involution: str = "transpose",
                           field: str = "rational", seed=0,
                           nonsingular_leading: bool = False,
                           nonsingular_trailing: bool = False) -> MatPoly:
    """Random ``P`` with ``P_k^# = sigma P_k`` for every ``k``.

    The requested nonsingularity is enforced by redrawing the relevant
    coefficient; skew-symmetric real matrices of odd size are always singular,
    so that combination is rejected.
    """
    from .linalg import is_nonsingular
    if (nonsingular_leading or nonsingular_trailing) and sigma == -1 \
            and normalize_involution(involution) == "transpose" and n % 2 == 1:
        raise ValueError("odd-size skew-symmetric matrices are singular")
    rng = rng_from(seed)
    coeffs = []
    for k in range(d + 1):
        need = (k == d and nonsingular_leading) or (k == 0 and nonsingular_trailing)
        while True:
            C = structured_part(random_matrix(n, n, field, rng), sigma, involution)
            if not need or is_nonsingular(C, 1e-8):
                break
        coeffs.append(C)
    return MatPoly(np.stack(coeffs), field)


def random_poly(rows: int, cols: int, d: int, field: str = "rational", seed=0) -> MatPoly:
    rng = rng_from(seed)
    return MatPoly(np.stack([random_matrix(rows, cols, field, rng) for _ in range(d + 1)]), field)


def random_free(n: int, m: int, field: str = "rational", seed=0):
    """Random ``(A_ij, B_ij)`` for every one-based ``i < j <= m``."""
    rng = rng_from(seed)
    return {(i, j): (random_matrix(n, n, field, rng), random_matrix(n, n, field, rng))
            for i in range(1, m + 1) for j in range(i + 1, m + 1)}


def plant_eigenpair(P: MatPoly, lam0, x, sigma: int = 1, involution: str = "transpose",
                    k: int = 0) -> MatPoly:
    """Adjust coefficient ``k`` by a structured rank-two term so that
    ``P(lam0) x = 0`` (``lam0 = "inf"`` targets the leading coefficient).

    With ``y = P(lam0) x`` the correction is
    ``R = (y x# + sigma x y#) / (x# x) - sigma (y# x) x x# / (x# x)^2``, which
    satisfies ``R# = sigma R`` and ``R x = y`` whenever ``x# P(lam0) x`` is
    compatible with the structure (always for real ``lam0``).
    """
    from .polycore import evaluate
    mode = normalize_involution(involution)
    f = P.field
    x = scalars.as_array(np.asarray(x, dtype=object).reshape(-1, 1), f)
    inf = isinstance(lam0, str)
    if inf:
        k, y, w = P.grade, P.coeffs[P.grade] @ x, 1
    else:
        y, w = evaluate(P, lam0) @ x, lam0 ** k
    xh = scalars.conj_array(x.T) if mode == "conjugate-transpose" else x.T
    yh = scalars.conj_array(y.T) if mode == "conjugate-transpose" else y.T
    nx = (xh @ x)[0, 0]
    R = (y @ xh + sigma * (x @ yh)) / nx - sigma * (yh @ x)[0, 0] * (x @ xh) / (nx * nx)
    c = np.array(P.coeffs, copy=True)
    c[k] = c[k] - R / w
    return MatPoly(c, f)
