"""Independent oracles: determinants of matrix polynomials, linearization
certificates, pointwise nullspaces, residuals and singular test polynomials."""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

import numpy as np

from . import linalg, scalars
from .basiskit import lk, minimal_nullspace_basis
from .polycore import MatPoly, block_matrix, evaluate, rev
from .upoly import UPoly, interpolate

INF = "inf"


def exact_nodes(count: int):
    """``0, 1, -1, 2, -2, ...``"""
    out = [0]
    k = 1
    while len(out) < count:
        out += [k, -k]
        k += 1
    return out[:count]


def detpoly(P: MatPoly, tol: float | None = None) -> UPoly:
    """``det P(lam)`` by evaluation at ``n * grade + 1`` nodes and interpolation."""
    if not P.is_square():
        raise ValueError("determinant of a non-square matrix polynomial")
    n = P.rows
    count = n * P.grade + 1
    if n == 0:
        return UPoly.const(Fraction(1) if P.exact else 1.0)
    if P.exact:
        xs = exact_nodes(count)
        ys = [linalg.det(evaluate(P, Fraction(x))) for x in xs]
        return interpolate([Fraction(x) for x in xs], ys)
    # Chebyshev points on [-2, 2] keep the Vandermonde system well conditioned
    k = np.arange(count)
    xs = 2.0 * np.cos((2 * k + 1) * np.pi / (2 * count))
    ys = np.array([np.linalg.det(evaluate(P, x)) for x in xs])
    V = np.vander(xs, count, increasing=True)
    coef = np.linalg.lstsq(V.astype(ys.dtype), ys, rcond=None)[0]
    big = np.max(np.abs(coef)) if coef.size else 0.0
    cut = (1e-10 if tol is None else tol) * big
    coef = np.where(np.abs(coef) <= cut, 0, coef)
    return UPoly(coef.tolist())


@dataclass
class Certificate:
    is_linearization: bool
    is_strong: bool
    ratio: object
    ratio_rev: object
    det_p: UPoly
    det_l: UPoly
    det_rev_p: UPoly
    det_rev_l: UPoly
    notes: list = dc_field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "isLinearization": self.is_linearization,
            "isStrong": self.is_strong,
            "ratio": _scalar_text(self.ratio),
            "ratioRev": _scalar_text(self.ratio_rev),
            "detP": str(self.det_p), "detL": str(self.det_l),
            "detRevP": str(self.det_rev_p), "detRevL": str(self.det_rev_l),
            "notes": list(self.notes),
        }


def _scalar_text(v):
    return None if v is None else str(v)


def _constant_ratio(num: UPoly, den: UPoly, exact: bool, tol):
    """``c`` with ``num = c * den`` and ``c != 0``, else ``None``."""
    if not num:
        return None
    if exact:
        q, r = num.divmod(den)
        return q.c[0] if (not r and q.is_constant() and q) else None
    a = np.array(num.coeffs(max(len(num.c), len(den.c))), dtype=complex)
    b = np.array(den.coeffs(len(a)), dtype=complex)
    c = np.vdot(b, a) / np.vdot(b, b)
    ok = np.linalg.norm(a - c * b) <= (1e-10 if tol is None else tol) * np.linalg.norm(a)
    return c if ok and abs(c) > 0 else None


def certificate(L: MatPoly, P: MatPoly, grade_p: int | None = None, tol=None) -> Certificate:
    """Compare ``det L`` with ``det P`` and ``det rev L`` with ``det rev_g P``."""
    g = P.grade if grade_p is None else grade_p
    P = P.regrade(g)
    if L.shape != (P.rows * g, P.rows * g):
        raise ValueError(f"pencil must be {P.rows * g} square for grade {g}, got {L.shape}")
    det_p = detpoly(P, tol)
    if not det_p:
        raise ValueError("regular input required; use minimal-index comparison")
    exact = L.exact and P.exact
    det_l = detpoly(L.regrade(max(1, L.grade)), tol)
    det_rev_p = detpoly(rev(P, g), tol)
    det_rev_l = detpoly(rev(L, max(1, L.grade)), tol)
    c = _constant_ratio(det_l, det_p, exact, tol)
    c_rev = _constant_ratio(det_rev_l, det_rev_p, exact, tol)
    notes = []
    if c is None:
        notes.append("det L is not a nonzero constant multiple of det P")
    if c_rev is None:
        notes.append("det rev L is not a nonzero constant multiple of det rev P")
    return Certificate(c is not None, c is not None and c_rev is not None, c, c_rev,
                       det_p, det_l, det_rev_p, det_rev_l, notes)


def nullspace_at(M, tol=None) -> np.ndarray:
    """Right nullspace basis (columns) of a constant matrix."""
    return linalg.nullspace(np.asarray(M), tol)


def _norm_inf(M) -> float:
    M = np.asarray(M)
    if M.size == 0:
        return 0.0
    mags = np.vectorize(scalars.magnitude, otypes=[float])(M) if M.dtype == object else np.abs(M)
    return float(np.max(mags.sum(axis=-1))) if mags.ndim > 1 else float(np.max(mags))


def residual(P: MatPoly, lam0, x, tol=None) -> float:
    """``|P(lam0) x| / (|x| * sum_k |P_k| |lam0|^k)`` in the infinity norm; ``lam0 = "inf"``
    uses the leading coefficient only.  An exactly zero product gives 0."""
    x = np.asarray(x).reshape(-1)
    if not any(bool(v) for v in x):
        raise ValueError("residual of a zero vector")
    if isinstance(lam0, str) and lam0 == INF:
        M = P.coeffs[P.grade]
        denom = _norm_inf(M)
    else:
        M = evaluate(P, lam0)
        a = scalars.magnitude(lam0)
        denom = sum(_norm_inf(P.coeffs[k]) * a ** k for k in range(P.grade + 1))
    r = M @ x
    if not any(bool(v) for v in r.reshape(-1)):
        return 0.0
    num = _norm_inf(r)
    denom *= _norm_inf(x)
    return num / denom if denom else 0.0


def make_singular_example(n: int, d: int, indices, seed: int = 0, certify: bool = True) -> MatPoly:
    """Square ``n x n`` polynomial of grade ``d`` whose right minimal indices are
    exactly ``indices``.

    The core is ``diag(L_{e_1}, ..., L_{e_k}, R(lam))`` padded with ``k`` zero
    rows, with ``R`` regular.  It is then multiplied on the left by random
    elementary polynomial row operations (unimodular, degree kept within
    ``d``) and on the right by a random constant unimodular integer matrix;
    neither changes the right minimal indices.
    """
    indices = sorted(int(e) for e in indices)
    k = len(indices)
    r = n - sum(indices) - k
    if r < 0 or any(e < 0 for e in indices) or (d < 1 and any(indices)) or d < 0:
        raise ValueError("unrealizable request")
    rng = random.Random(seed)
    # L_e is e x (e+1); one zero row squares it up, so e = 0 is a zero 1 x 1 block
    blocks = [MatPoly.zeros(1, 1, d) if e == 0 else _padded(lk(e, 1), d) for e in indices]
    c = scalars.zeros((d + 1, n, n), "rational")
    row = col = 0
    for e, blk in zip(indices, blocks):
        h, w = blk.shape
        c[:, row:row + h, col:col + w] = blk.coeffs
        row += h
        col += w
    for i in range(r):
        c[d, row + i, col + i] = Fraction(1)
        c[0, row + i, col + i] = Fraction(rng.choice((-3, -2, -1, 1, 2, 3)))
    P = MatPoly(c, "rational")
    P = _row_operations(P, rng, 3 * n)
    V = _unimodular_integer(n, rng)
    P = MatPoly(np.stack([Pk @ V for Pk in P.coeffs]), "rational")
    if certify:
        _, got = minimal_nullspace_basis(P, max_degree=max(indices, default=0) + 2, seed=seed)
        if got != indices:
            raise AssertionError(f"construction produced indices {got}, wanted {indices}")
    return P


def _padded(M: MatPoly, d: int) -> MatPoly:
    """``M`` at grade ``d`` with one zero row appended."""
    M = M.regrade(d)
    return block_matrix([[M], [MatPoly.zeros(1, M.cols, d)]])


def _row_operations(P: MatPoly, rng: random.Random, count: int) -> MatPoly:
    c = np.array(P.coeffs, copy=True)
    n, d = P.rows, P.grade
    for _ in range(count):
        if n < 2:
            break
        i, j = rng.sample(range(n), 2)
        dj = MatPoly(c, "rational")[j:j + 1, :].degree
        if dj is None:
            continue
        shift = rng.randint(0, d - dj)
        coef = Fraction(rng.choice((-2, -1, 1, 2)))
        for k in range(dj + 1):
            c[k + shift, i] = c[k + shift, i] + coef * c[k, j]
    return MatPoly(c, "rational")


def _unimodular_integer(n: int, rng: random.Random) -> np.ndarray:
    V = scalars.eye(n, "rational")
    for _ in range(4 * n):
        if n < 2:
            break
        i, j = rng.sample(range(n), 2)
        V[:, i] = V[:, i] + V[:, j] * rng.choice((-1, 1))
    perm = list(range(n))
    rng.shuffle(perm)
    return V[:, perm]
