"""Matrix polynomials and the block calculus used by the constructions.

A :class:`MatPoly` stores an explicit *grade*: the coefficient list always has
``grade + 1`` entries even when the top ones vanish.  Every construction in
the package is quantified over the grade, never over the observed degree.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import scalars
from .scalars import as_array, coerce, common_field, is_exact
from .upoly import UPoly

TRANSPOSE = "transpose"
CONJUGATE = "conjugate-transpose"
STRUCTURES = ("symmetric", "skew-symmetric", "hermitian", "skew-hermitian")


def normalize_involution(mode: str) -> str:
    if mode in ("transpose", "T"):
        return TRANSPOSE
    if mode in ("conjugate-transpose", "conjugate", "conj", "*", "H"):
        return CONJUGATE
    raise ValueError(f"unknown involution {mode!r}")


@dataclass(frozen=True)
class BlockShape:
    """A ``block_rows x block_cols`` grid of ``n x n`` blocks."""

    block_rows: int
    block_cols: int
    n: int

    def check(self, rows: int, cols: int):
        if self.n <= 0 or rows != self.block_rows * self.n or cols != self.block_cols * self.n:
            raise ValueError(
                f"{rows}x{cols} matrix does not split into {self.block_rows}x{self.block_cols} "
                f"blocks of size {self.n}")

    @classmethod
    def square(cls, p: int, n: int):
        return cls(p, p, n)


@dataclass(frozen=True, eq=False)
class MatPoly:
    """``P(lam) = sum_k coeffs[k] * lam**k`` with ``coeffs`` of shape (grade+1, rows, cols)."""

    coeffs: np.ndarray
    field: str = "rational"

    def __post_init__(self):
        scalars.check_field(self.field)
        c = np.asarray(self.coeffs)
        if c.ndim != 3 or c.shape[0] < 1:
            raise ValueError("coeffs must have shape (grade+1, rows, cols)")
        if is_exact(self.field):
            needs = c.dtype != object or any(
                not _is_kind(v, self.field) for v in c.reshape(-1))
            c = as_array(c, self.field) if needs else c.copy()
        else:
            c = as_array(c, self.field).copy()
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    # -- construction -------------------------------------------------
    @classmethod
    def from_coeffs(cls, mats, field: str = "rational", shape=None):
        mats = list(mats)
        if not mats:
            raise ValueError("need at least one coefficient")
        arrs = [np.asarray(m, dtype=object) for m in mats]
        if shape is None:
            shape = arrs[0].shape
        stacked = np.empty((len(arrs),) + tuple(shape), dtype=object)
        for k, a in enumerate(arrs):
            stacked[k] = a.reshape(shape)
        return cls(stacked, field)

    @classmethod
    def zeros(cls, rows: int, cols: int, grade: int = 0, field: str = "rational"):
        return cls(scalars.zeros((grade + 1, rows, cols), field), field)

    @classmethod
    def identity(cls, n: int, field: str = "rational", grade: int = 0):
        c = scalars.zeros((grade + 1, n, n), field)
        c[0] = scalars.eye(n, field)
        return cls(c, field)

    @classmethod
    def constant(cls, M, field: str = "rational"):
        M = np.asarray(M, dtype=object)
        return cls(M.reshape((1,) + M.shape), field)

    @classmethod
    def pencil(cls, A, B, field: str = "rational"):
        """``lam * B + A``."""
        return cls.from_coeffs([A, B], field)

    @classmethod
    def from_entries(cls, entries, field: str = "rational", grade: int | None = None):
        """Build from a nested list whose entries are coefficient lists (low degree first)
        or :class:`UPoly` objects."""
        rows = len(entries)
        cols = len(entries[0]) if rows else 0
        polys = [[e.c if isinstance(e, UPoly) else
                  (tuple(e) if isinstance(e, (list, tuple)) else (e,)) for e in r] for r in entries]
        deg = max([len(p) - 1 for r in polys for p in r] + [0])
        g = deg if grade is None else grade
        if g < deg:
            raise ValueError("grade smaller than degree")
        c = scalars.zeros((g + 1, rows, cols), field)
        for i, r in enumerate(polys):
            for j, p in enumerate(r):
                for k, a in enumerate(p):
                    c[k, i, j] = coerce(a, field)
        return cls(c, field)

    # -- basic properties ---------------------------------------------
    @property
    def rows(self) -> int:
        return self.coeffs.shape[1]

    @property
    def cols(self) -> int:
        return self.coeffs.shape[2]

    @property
    def shape(self):
        return self.coeffs.shape[1:]

    @property
    def grade(self) -> int:
        return self.coeffs.shape[0] - 1

    @property
    def exact(self) -> bool:
        return is_exact(self.field)

    @property
    def degree(self):
        """Largest k with a nonzero coefficient; ``None`` for the zero polynomial."""
        for k in range(self.grade, -1, -1):
            if _nonzero(self.coeffs[k]):
                return k
        return None

    def coeff(self, k: int) -> np.ndarray:
        if 0 <= k <= self.grade:
            return self.coeffs[k]
        return scalars.zeros(self.shape, self.field)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self, tol: float | None = None) -> bool:
        if self.exact:
            return not _nonzero(self.coeffs)
        return float(np.max(np.abs(self.coeffs), initial=0.0)) <= (tol or 0.0)

    def entry(self, i: int, j: int) -> UPoly:
        return UPoly(self.coeffs[:, i, j])

    # -- conversions --------------------------------------------------
    def astype(self, field: str) -> "MatPoly":
        if field == self.field:
            return self
        return MatPoly(as_array(self.coeffs, field), field)

    def regrade(self, grade: int) -> "MatPoly":
        deg = self.degree
        if deg is not None and grade < deg:
            raise ValueError(f"grade {grade} below degree {deg}")
        if grade <= self.grade:
            return MatPoly(self.coeffs[: grade + 1], self.field)
        pad = scalars.zeros((grade - self.grade,) + self.shape, self.field)
        return MatPoly(np.concatenate([self.coeffs, pad]), self.field)

    def __getitem__(self, idx) -> "MatPoly":
        r, c = idx
        sub = self.coeffs[:, r, c]
        if sub.ndim != 3:
            raise IndexError("use slices to extract sub-matrix polynomials")
        return MatPoly(sub, self.field)

    # -- arithmetic ---------------------------------------------------
    def _align(self, other):
        if not isinstance(other, MatPoly):
            other = MatPoly.constant(np.asarray(other, dtype=object), self.field) \
                if is_exact(self.field) else MatPoly.constant(other, self.field)
        f = common_field(self.field, other.field)
        a, b = self.astype(f), other.astype(f)
        g = max(a.grade, b.grade)
        if a.shape != b.shape:
            raise ValueError(f"shape mismatch {a.shape} vs {b.shape}")
        return a.regrade(g) if a.grade < g else a, b.regrade(g) if b.grade < g else b

    def __add__(self, other):
        a, b = self._align(other)
        return MatPoly(a.coeffs + b.coeffs, a.field)

    def __sub__(self, other):
        a, b = self._align(other)
        return MatPoly(a.coeffs - b.coeffs, a.field)

    def __neg__(self):
        return MatPoly(-self.coeffs, self.field)

    def __mul__(self, scalar):
        if isinstance(scalar, MatPoly):
            raise TypeError("use @ for matrix products")
        f = self.field
        if isinstance(scalar, scalars.GaussianRational) and f == "rational":
            f = "gaussian"
        elif isinstance(scalar, (complex, np.complexfloating)) and f in ("rational", "f64"):
            f = "c64"
        src = self.astype(f)
        return MatPoly(src.coeffs * coerce(scalar, f), f)

    __rmul__ = __mul__

    def __matmul__(self, other):
        return poly_matmul(self, other)

    def shift(self, k: int = 1) -> "MatPoly":
        """Multiply by ``lam**k``."""
        pad = scalars.zeros((k,) + self.shape, self.field)
        return MatPoly(np.concatenate([pad, self.coeffs]), self.field)

    def __call__(self, lam0):
        return evaluate(self, lam0)

    @property
    def T(self) -> "MatPoly":
        return involute(self, TRANSPOSE)

    @property
    def H(self) -> "MatPoly":
        return involute(self, CONJUGATE)

    # -- comparisons --------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, MatPoly):
            return NotImplemented
        return (self.field == other.field and self.coeffs.shape == other.coeffs.shape
                and arrays_close(self.coeffs, other.coeffs, 0.0))

    __hash__ = None

    def equals(self, other, tol: float | None = None) -> bool:
        """Same polynomial (grades may differ); ``tol`` applies to float kinds only."""
        try:
            a, b = self._align(other)
        except ValueError:
            return False
        return arrays_close(a.coeffs, b.coeffs, tol)

    def __repr__(self):
        return f"MatPoly(field={self.field!r}, shape={self.shape}, grade={self.grade})"

    def pretty(self) -> str:
        lines = []
        for i in range(self.rows):
            lines.append("[" + ", ".join(str(self.entry(i, j)) for j in range(self.cols)) + "]")
        return "\n".join(lines)


def _is_kind(v, field):
    if field == "rational":
        from fractions import Fraction
        return type(v) is Fraction
    return isinstance(v, scalars.GaussianRational)


def _nonzero(a: np.ndarray) -> bool:
    return any(bool(v) for v in np.asarray(a).reshape(-1))


def arrays_close(a, b, tol: float | None) -> bool:
    """Exact equality for object arrays, ``max|a-b| <= tol * max(|a|,|b|)`` otherwise."""
    a, b = np.asarray(a), np.asarray(b)
    if a.shape != b.shape:
        return False
    if a.dtype == object and b.dtype == object:
        return all(x == y for x, y in zip(a.reshape(-1), b.reshape(-1)))
    a = a.astype(np.complex128) if a.dtype == object else a
    b = b.astype(np.complex128) if b.dtype == object else b
    if a.size == 0:
        return True
    if tol is None:
        raise ValueError("float comparison requires an explicit tolerance")
    scale = max(float(np.max(np.abs(a))), float(np.max(np.abs(b))))
    return float(np.max(np.abs(a - b))) <= tol * scale


# -- core operations ---------------------------------------------------------

def evaluate(P: MatPoly, lam0) -> np.ndarray:
    """Horner evaluation of ``P`` at ``lam0``."""
    field = P.field
    if isinstance(lam0, scalars.GaussianRational) and field == "rational":
        field = "gaussian"
    elif isinstance(lam0, (complex, np.complexfloating)) and field in ("rational", "f64"):
        field = "c64"
    c = P.astype(field).coeffs
    x = coerce(lam0, field)
    acc = c[P.grade].copy()
    for k in range(P.grade - 1, -1, -1):
        acc = acc * x + c[k]
    return acc


def rev(P: MatPoly, k: int | None = None) -> MatPoly:
    """``lam**k * P(1/lam)`` as a grade-``k`` polynomial (``k`` defaults to the grade)."""
    if k is None:
        k = P.grade
    deg = P.degree
    if deg is not None and k < deg:
        raise ValueError("grade too small for reversal")
    padded = P.regrade(max(k, P.grade)) if k >= P.grade else P.regrade(k)
    return MatPoly(padded.coeffs[::-1], P.field)


def involute(P: MatPoly, mode: str = TRANSPOSE) -> MatPoly:
    mode = normalize_involution(mode)
    c = np.transpose(P.coeffs, (0, 2, 1))
    if mode == CONJUGATE:
        c = scalars.conj_array(c)
    return MatPoly(c, P.field)


def structure_check(P: MatPoly, cls: str, tol: float | None = None) -> bool:
    """Coefficientwise structure test: ``P_k = +-P_k^T`` or ``P_k = +-P_k^*``."""
    if not P.is_square():
        raise ValueError("structure check needs a square matrix polynomial")
    sign, mode = {
        "symmetric": (1, TRANSPOSE),
        "skew-symmetric": (-1, TRANSPOSE),
        "hermitian": (1, CONJUGATE),
        "skew-hermitian": (-1, CONJUGATE),
    }[cls]
    image = involute(P, mode)
    return arrays_close(P.coeffs, (image * sign).astype(P.field).coeffs, tol)


def structure_class(sigma: int, involution: str) -> str:
    herm = normalize_involution(involution) == CONJUGATE
    if sigma == 1:
        return "hermitian" if herm else "symmetric"
    if sigma == -1:
        return "skew-hermitian" if herm else "skew-symmetric"
    raise ValueError("sigma must be +1 or -1")


def get_block(P: MatPoly, i: int, j: int, n: int, m: int | None = None) -> MatPoly:
    """Zero-based ``(i, j)`` block of size ``n x m``."""
    m = n if m is None else m
    return P[i * n:(i + 1) * n, j * m:(j + 1) * m]


def block_grid(P: MatPoly, shape: BlockShape):
    shape.check(P.rows, P.cols)
    return [[get_block(P, i, j, shape.n) for j in range(shape.block_cols)]
            for i in range(shape.block_rows)]


def block_matrix(grid, field: str | None = None) -> MatPoly:
    """Assemble a MatPoly from a nested list of MatPoly blocks (same grade not required)."""
    flat = [b for row in grid for b in row]
    field = field or common_field(*(b.field for b in flat))
    g = max(b.grade for b in flat)
    rows = []
    for row in grid:
        rows.append(np.concatenate([b.astype(field).regrade(g).coeffs for b in row], axis=2))
    return MatPoly(np.concatenate(rows, axis=1), field)


def block_transpose(H: MatPoly, shape: BlockShape) -> MatPoly:
    """Swap blocks ``(i, j)`` and ``(j, i)`` without transposing them."""
    grid = block_grid(H, shape)
    return block_matrix([[grid[i][j] for i in range(shape.block_rows)]
                         for j in range(shape.block_cols)], H.field)


def _as_poly(X, field="rational") -> MatPoly:
    if isinstance(X, MatPoly):
        return X
    return MatPoly.constant(X, field)


def block_hadamard(A, B, shape: BlockShape) -> MatPoly:
    """Blockwise products ``A_ij B_ij`` over a common block grid."""
    A, B = _as_poly(A), _as_poly(B)
    if A.shape != B.shape:
        raise ValueError("block Hadamard product needs conformable partitions")
    shape.check(A.rows, A.cols)
    ga, gb = block_grid(A, shape), block_grid(B, shape)
    return block_matrix([[poly_matmul(ga[i][j], gb[i][j]) for j in range(shape.block_cols)]
                         for i in range(shape.block_rows)])


def su(A, shape: BlockShape) -> MatPoly:
    """Sum of all blocks of a (possibly rectangular) block grid."""
    A = _as_poly(A)
    shape.check(A.rows, A.cols)
    n = shape.n
    c = A.coeffs.reshape(A.grade + 1, shape.block_rows, n, shape.block_cols, n)
    total = c.sum(axis=(1, 3)) if c.size else scalars.zeros((A.grade + 1, n, n), A.field)
    return MatPoly(total, A.field)


def kron_identity(Q: MatPoly, n: int) -> MatPoly:
    """``Q(lam) (x) I_n`` coefficientwise."""
    if n <= 0:
        raise ValueError("identity size must be positive")
    I = scalars.eye(n, Q.field)
    out = scalars.zeros((Q.grade + 1, Q.rows * n, Q.cols * n), Q.field)
    for k in range(Q.grade + 1):
        for i in range(Q.rows):
            for j in range(Q.cols):
                a = Q.coeffs[k, i, j]
                if a:
                    out[k, i * n:(i + 1) * n, j * n:(j + 1) * n] = I * a
    return MatPoly(out, Q.field)


def poly_matmul(A: MatPoly, B: MatPoly) -> MatPoly:
    """Product of matrix polynomials; the result has grade ``grade(A) + grade(B)``."""
    A, B = _as_poly(A), _as_poly(B, A.field)
    if A.cols != B.rows:
        raise ValueError(f"inner dimensions differ: {A.shape} @ {B.shape}")
    f = common_field(A.field, B.field)
    a, b = A.astype(f).coeffs, B.astype(f).coeffs
    g = A.grade + B.grade
    out = scalars.zeros((g + 1, A.rows, B.cols), f)
    for i in range(A.grade + 1):
        if not _nonzero(a[i]):
            continue
        for j in range(B.grade + 1):
            out[i + j] = out[i + j] + a[i] @ b[j]
    return MatPoly(out, f)


def permute_blocks(P: MatPoly, perm, n: int) -> MatPoly:
    """``Pi^T P Pi`` where new block ``i`` is old block ``perm[i]`` (zero-based)."""
    p = P.rows // n
    if sorted(perm) != list(range(p)) or P.rows != P.cols or P.rows != p * n:
        raise ValueError("permutation does not match the block grid")
    idx = np.concatenate([np.arange(q * n, (q + 1) * n) for q in perm]) if p else np.arange(0)
    return MatPoly(P.coeffs[:, idx][:, :, idx], P.field)


def scale_blocks(P: MatPoly, signs, n: int) -> MatPoly:
    """``D P D`` with ``D = diag(signs) (x) I_n``."""
    d = np.repeat(np.asarray(signs, dtype=int), n)
    c = P.coeffs * d[None, :, None] * d[None, None, :]
    return MatPoly(c, P.field)


def lam(field: str = "rational") -> MatPoly:
    """The 1x1 polynomial ``lam``."""
    return MatPoly.from_coeffs([[[0]], [[1]]], field)
