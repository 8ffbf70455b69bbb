"""The fixed dual minimal bases used by block Kronecker pencils, a minimal
basis checker and a polynomial nullspace oracle.

All functions here work in exact arithmetic only.  Rank-everywhere questions
are decided through the gcd of the maximal minors, never by sampling.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

import numpy as np

from . import linalg, scalars
from .polycore import MatPoly, evaluate, involute, kron_identity, poly_matmul, rev
from .upoly import UPoly, gcd

KINDS = ("Lk", "Lambda", "LkHat", "LambdaHat", "LambdaTilde", "Gamma", "Nhat")


@dataclass(frozen=True)
class BasisKind:
    tag: str
    k: int
    n: int = 1

    def __post_init__(self):
        if self.tag not in KINDS:
            raise ValueError(f"unknown basis kind {self.tag!r}")
        low = 0 if self.tag == "Gamma" else 1
        if self.k < low:
            raise ValueError(f"{self.tag} needs k >= {low}, got {self.k}")
        if self.n < 1:
            raise ValueError("block size n must be positive")


# -- scalar (n = 1) patterns --------------------------------------------------

def _entries(rows, cols, fill):
    c = scalars.zeros((2, rows, cols), "rational")
    for (i, j), (a0, a1) in fill.items():
        c[0, i, j] = Fraction(a0)
        c[1, i, j] = Fraction(a1)
    return c


def _lk(k: int) -> MatPoly:
    fill = {}
    for i in range(k):
        fill[(i, i)] = (-1, 0)
        fill[(i, i + 1)] = (0, 1)
    return MatPoly(_entries(k, k + 1, fill), "rational")


def _monomials_column(powers) -> MatPoly:
    """Column whose entries are ``lam**p`` (``None`` for a zero entry)."""
    g = max([p for p in powers if p is not None] + [0])
    c = scalars.zeros((g + 1, len(powers), 1), "rational")
    for i, p in enumerate(powers):
        if p is not None:
            c[p, i, 0] = Fraction(1)
    return MatPoly(c, "rational")


def _hstack(a: MatPoly, b: MatPoly) -> MatPoly:
    g = max(a.grade, b.grade)
    return MatPoly(np.concatenate([a.regrade(g).coeffs, b.regrade(g).coeffs], axis=2), a.field)


def _vstack(a: MatPoly, b: MatPoly) -> MatPoly:
    g = max(a.grade, b.grade)
    return MatPoly(np.concatenate([a.regrade(g).coeffs, b.regrade(g).coeffs], axis=1), a.field)


# -- public factories ------------------------------------------------------

def lk(k: int, n: int = 1) -> MatPoly:
    """``L_k(lam) (x) I_n``, of size ``kn x (k+1)n``."""
    return kron_identity(_lk(k), n)


def lambda_col(k: int, n: int = 1) -> MatPoly:
    """``Lambda_k(lam) (x) I_n``: the column ``[lam^k, ..., lam, 1]`` of grade ``k``."""
    return kron_identity(_monomials_column(list(range(k, -1, -1))), n)


def lk_hat(k: int, n: int = 1) -> MatPoly:
    """``[0 | L_{k-1}] (x) I_n`` of size ``(k-1)n x (k+1)n``; empty when ``k = 1``."""
    if k == 1:
        return MatPoly.zeros(0, 2 * n, 1)
    core = _lk(k - 1)
    return kron_identity(_hstack(MatPoly.zeros(k - 1, 1, 1), core), n)


def lambda_hat_col(k: int, n: int = 1) -> MatPoly:
    """``Lambda_hat_k (x) I_n``: columns ``e_1`` and ``[0, lam^{k-1}, ..., 1]``."""
    first = _monomials_column([0] + [None] * k)
    second = _monomials_column([None] + list(range(k - 1, -1, -1)))
    return kron_identity(_hstack(first, second), n)


def lambda_tilde_col(k: int, n: int = 1) -> MatPoly:
    """``Lambda_tilde_k (x) I_n``: columns ``e_1`` and ``[0, 1, lam, ..., lam^{k-1}]``."""
    first = _monomials_column([0] + [None] * k)
    second = _monomials_column([None] + list(range(k)))
    return kron_identity(_hstack(first, second), n)


def gamma(s: int, n: int = 1) -> MatPoly:
    """``(Lambda_s (x) I_n)(Lambda_s^T (x) I_n)``, a block Hankel matrix of grade ``2s``."""
    col = lambda_col(s, n)
    return poly_matmul(col, involute(col))


def n_hat(t: int, n: int = 1) -> MatPoly:
    """The ``(t-1)n x (t+1)n`` matrix whose row ``i`` holds ``lam^{i-1}, ..., 1`` in
    block columns ``2..i+1``; first and last block columns are zero."""
    if t == 1:
        return MatPoly.zeros(0, 2 * n, 0)
    g = t - 2
    c = scalars.zeros((g + 1, t - 1, t + 1), "rational")
    for i in range(t - 1):
        for j in range(i + 1):
            c[i - j, i, 1 + j] = Fraction(1)
    return kron_identity(MatPoly(c, "rational"), n)


def make_basis(kind: BasisKind) -> MatPoly:
    """Instantiate a fixed basis.  The Lambda family is returned in row form
    (the transpose of the column factories above), matching how those bases
    are usually displayed."""
    k, n = kind.k, kind.n
    if kind.tag == "Lk":
        return lk(k, n)
    if kind.tag == "LkHat":
        return lk_hat(k, n)
    if kind.tag == "Lambda":
        return involute(lambda_col(k, n))
    if kind.tag == "LambdaHat":
        return involute(lambda_hat_col(k, n))
    if kind.tag == "LambdaTilde":
        return involute(lambda_tilde_col(k, n))
    if kind.tag == "Gamma":
        return gamma(k, n)
    return n_hat(k, n)


# -- minimal basis checker ---------------------------------------------------

@dataclass
class MinimalBasisReport:
    row_degrees: tuple
    highest_row_coeff: np.ndarray
    row_reduced: bool
    full_rank_everywhere: bool
    minor_gcd: UPoly | None = None
    notes: list = dc_field(default_factory=list)

    @property
    def verdict(self) -> bool:
        return self.row_reduced and self.full_rank_everywhere


def _entry_matrix(Q: MatPoly):
    return [[Q.entry(i, j) for j in range(Q.cols)] for i in range(Q.rows)]


def poly_det(rows) -> UPoly:
    """Determinant of a square matrix of :class:`UPoly` by fraction-free elimination."""
    a = [list(r) for r in rows]
    m = len(a)
    if m == 0:
        return UPoly.const(Fraction(1))
    sign = 1
    prev = UPoly.const(Fraction(1))
    for k in range(m - 1):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, m) if a[i][k]), None)
            if swap is None:
                return UPoly()
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, m):
            for j in range(k + 1, m):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(prev)
        prev = a[k][k]
    d = a[m - 1][m - 1]
    return -d if sign < 0 else d


def _derivative(p: UPoly) -> UPoly:
    return UPoly([k * a for k, a in enumerate(p.c)][1:])


def _squarefree(p: UPoly) -> UPoly:
    return p.exact_div(gcd(p, _derivative(p))).monic()


def _full_rank_modulo(M, h: UPoly) -> bool:
    """Whether the matrix of UPoly ``M`` has full row rank at every root of the
    squarefree ``h``.  Elimination runs in ``F[lam]/(h)``; a pivot sharing a
    factor with ``h`` splits the modulus and both branches are examined."""
    if h.is_constant():
        return True
    m = [[e % h for e in row] for row in M]
    rows, cols = len(m), len(m[0]) if m else 0
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if m[i][c]), None)
        if piv is None:
            continue
        g = gcd(m[piv][c], h)
        if not g.is_constant():
            other = h.exact_div(g)
            return _full_rank_modulo(M, g) and _full_rank_modulo(M, other)
        m[r], m[piv] = m[piv], m[r]
        inv = _inverse_mod(m[r][c], h)
        m[r] = [(e * inv) % h for e in m[r]]
        for i in range(r + 1, rows):
            if m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % h for a, b in zip(m[i], m[r])]
        r += 1
    return r == rows


def _inverse_mod(a: UPoly, h: UPoly) -> UPoly:
    r0, r1 = h, a
    s0, s1 = UPoly(), UPoly.const(Fraction(1))
    while r1:
        q, rem = r0.divmod(r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - q * s1
    if not r0.is_constant():
        raise ArithmeticError("not invertible modulo h")
    return (s0 * (Fraction(1) / r0.lead)) % h


def _pivot_columns(Q: MatPoly, rng: random.Random, reverse: bool):
    x = Fraction(rng.randint(-97, 97), rng.randint(1, 13))
    M = evaluate(Q, x)
    order = list(range(Q.cols))[::-1] if reverse else list(range(Q.cols))
    _, piv = linalg.rref(M[:, order])
    return sorted(order[p] for p in piv)


def maximal_minor_gcd(Q: MatPoly, seed: int = 0, budget: int = 24) -> UPoly:
    """gcd of a sample of maximal minors; equals the full gcd whenever it is constant.

    Column sets come from pivots at random points (each gives a nonzero
    minor) plus the lexicographically first and last sets.
    """
    E = _entry_matrix(Q)
    m = Q.rows
    rng = random.Random(seed)
    seen = set()
    candidates = []
    for k in range(budget):
        cols = tuple(_pivot_columns(Q, rng, reverse=bool(k % 2)))
        if len(cols) == m and cols not in seen:
            seen.add(cols)
            candidates.append(cols)
    g = UPoly()
    for cols in candidates:
        minor = poly_det([[row[j] for j in cols] for row in E])
        g = gcd(g, minor)
        if g.is_constant() and g:
            break
    return g


def is_minimal_basis(Q: MatPoly, seed: int = 0) -> MinimalBasisReport:
    """Row reducedness plus full row rank at every point of the algebraic closure."""
    if not Q.exact:
        raise ValueError("exact arithmetic required")
    if Q.rows > Q.cols:
        raise ValueError("a minimal basis cannot have more rows than columns")
    m = Q.rows
    degs, lead = [], scalars.zeros((m, Q.cols), Q.field)
    for i in range(m):
        row = Q[i:i + 1, :]
        d = row.degree
        degs.append(d)
        if d is not None:
            lead[i] = row.coeffs[d, 0]
    notes = []
    if m == 0:
        return MinimalBasisReport((), lead, True, True, UPoly.const(Fraction(1)), notes)
    row_reduced = None not in degs and linalg.rank(lead) == m
    if None in degs:
        notes.append("zero row")
        return MinimalBasisReport(tuple(degs), lead, False, False, UPoly(), notes)
    g = maximal_minor_gcd(Q, seed)
    if not g:
        notes.append("not of full normal rank")
        full = False
    elif g.is_constant():
        full = True
    else:
        full = _full_rank_modulo(_entry_matrix(Q), _squarefree(g))
        if not full:
            notes.append(f"rank drops at a root of {g}")
    return MinimalBasisReport(tuple(degs), lead, row_reduced, full, g, notes)


def are_dual_minimal_bases(L: MatPoly, N: MatPoly) -> bool:
    """``L`` and ``N`` are minimal bases with complementary sizes and ``L N^T = 0``."""
    if L.cols != N.cols:
        raise ValueError("dual bases must have the same number of columns")
    if L.rows + N.rows != L.cols:
        return False
    if not poly_matmul(L, involute(N)).is_zero():
        return False
    return is_minimal_basis(L).verdict and is_minimal_basis(N).verdict


# -- polynomial nullspace oracle -------------------------------------------------

def _random_point(rng: random.Random, field: str):
    x = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**3))
    if field == "gaussian":
        return scalars.GaussianRational(x, Fraction(rng.randint(-999, 999), rng.randint(1, 97)))
    return x


def normal_rank(P: MatPoly, seed: int = 0) -> int:
    """Rank at random exact points; two draws must agree (retry otherwise)."""
    if not P.exact:
        raise ValueError("exact arithmetic required")
    rng = random.Random(seed)
    for _ in range(8):
        r1 = linalg.rank(evaluate(P, _random_point(rng, P.field)))
        r2 = linalg.rank(evaluate(P, _random_point(rng, P.field)))
        if r1 == r2:
            return r1
    return max(r1, r2)


def _convolution_matrix(P: MatPoly, delta: int) -> np.ndarray:
    """Matrix of ``x -> P x`` on vector polynomials of degree <= delta,
    unknowns ordered ``x_0, ..., x_delta``."""
    g, r, c = P.grade, P.rows, P.cols
    T = scalars.zeros(((g + delta + 1) * r, (delta + 1) * c), P.field)
    for j in range(delta + 1):
        for k in range(g + 1):
            T[(j + k) * r:(j + k + 1) * r, j * c:(j + 1) * c] = P.coeffs[k]
    return T


def _vector_poly(v: np.ndarray, cols: int, delta: int, field: str) -> MatPoly:
    return MatPoly(v.reshape(delta + 1, cols, 1), field)


def minimal_nullspace_basis(P: MatPoly, max_degree: int = 20, seed: int = 0):
    """A minimal basis of the right rational nullspace of ``P`` and its degrees.

    Returns ``(basis, indices)`` with ``basis`` a list of ``cols x 1`` vector
    polynomials (each at grade equal to its degree) and nondecreasing
    ``indices``.
    """
    if not P.exact:
        raise ValueError("exact arithmetic required")
    cols = P.cols
    target = cols - normal_rank(P, seed)
    basis, indices = [], []
    if target == 0:
        return basis, indices
    lead_rows = []
    for delta in range(max_degree + 1):
        N = linalg.nullspace(_convolution_matrix(P, delta))
        for k in range(N.shape[1]):
            v = N[:, k]
            top = v[delta * cols:]
            if not any(bool(a) for a in top):
                continue
            trial = lead_rows + [top]
            if linalg.rank(np.array(trial, dtype=object)) == len(trial):
                lead_rows.append(top)
                basis.append(_vector_poly(v, cols, delta, P.field))
                indices.append(delta)
                if len(basis) == target:
                    return basis, indices
    raise ValueError("degree cap exceeded")


def stack_rows(vectors) -> MatPoly:
    """Stack column vector polynomials as the rows of one matrix polynomial."""
    g = max(v.grade for v in vectors)
    return MatPoly(np.concatenate([involute(v.regrade(g)).coeffs for v in vectors], axis=1),
                   vectors[0].field)


def reversal_pair(k: int, n: int = 1):
    """``(rev L_hat_k, rev Lambda_hat_k^T)``, which is not a dual pair for ``k >= 2``."""
    return rev(lk_hat(k, n), 1), rev(make_basis(BasisKind("LambdaHat", k, n)), k - 1)
