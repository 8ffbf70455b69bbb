"""Symbolic block pencils.

A block is a formal combination of terms ``c * lam**p * X`` with ``p`` in
{0, 1} and ``X`` one of ``P_k``, the identity, or a named free matrix
(optionally transposed).  Grids of such blocks describe whole families of
pencils independently of ``n`` and can be compared exactly, permuted, and
instantiated on a concrete polynomial.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import scalars
from .polycore import MatPoly, block_matrix

IDENT = ("I",)


def ptok(k: int):
    return ("P", k)


def ftok(name: str, transposed: bool = False):
    return ("F", name, transposed)


@dataclass(frozen=True)
class Block:
    """Immutable formal block; ``terms`` maps ``(lam_power, token)`` to a nonzero coefficient."""

    terms: tuple = ()

    @classmethod
    def of(cls, mapping):
        items = sorted(((k, Fraction(v)) for k, v in mapping.items() if v), key=lambda kv: _key(kv[0]))
        return cls(tuple(items))

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def term(cls, coef, power, token):
        return cls.of({(power, token): coef})

    def as_dict(self):
        return dict(self.terms)

    def __add__(self, other):
        d = self.as_dict()
        for k, v in other.terms:
            d[k] = d.get(k, 0) + v
        return Block.of(d)

    def __neg__(self):
        return Block(tuple((k, -v) for k, v in self.terms))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return Block.of({k: v * c for k, v in self.terms})

    def is_zero(self) -> bool:
        return not self.terms

    def tokens(self):
        return {tok for (_, tok), _ in self.terms}

    def __str__(self):
        return render_block(self)


def _key(k):
    power, tok = k
    order = {"P": 0, "I": 1, "F": 2}[tok[0]]
    return (-power, order, -tok[1] if tok[0] == "P" else 0, repr(tok))


ZERO = Block.zero()


def I_block(coef=1, power=0) -> Block:
    return Block.term(coef, power, IDENT)


def P_block(k: int, coef=1, power=0) -> Block:
    return Block.term(coef, power, ptok(k))


# -- parsing ---------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?P<num>\d+(?:/\d+)?)?\s*(?P<sig>σ)?\s*(?P<lam>λ)?\s*(?P<sig2>σ)?\s*"
    r"(?:(?P<paren>\()|(?P<sym>P_?\{?\d+\}?|I(?:_n)?|[A-HJ-OQ-Z](?:\^T|\^\*)?|0))")


def parse_block(text: str, sigma: int = 1) -> Block:
    """Parse a display-style block such as ``"λP_5-P_4"``, ``"-σI"``, ``"λ(P_3-F)"``
    or ``"λP_3+P_2-E-E^T"``.  The symbol σ is replaced by ``sigma``."""
    text = text.replace("−", "-").replace(" ", "")
    if text in ("", "0"):
        return ZERO
    block, pos = _parse_sum(text, 0, sigma)
    if pos != len(text):
        raise ValueError(f"cannot parse block {text!r} at position {pos}")
    return block


def _parse_sum(text, pos, sigma):
    total = ZERO
    first = True
    while pos < len(text) and text[pos] != ")":
        m = _TOKEN.match(text, pos)
        if not m or (not first and not m.group("sign")):
            raise ValueError(f"cannot parse block {text!r} at position {pos}")
        first = False
        coef = Fraction(m.group("num") or 1)
        if m.group("sign") == "-":
            coef = -coef
        if m.group("sig") or m.group("sig2"):
            coef *= sigma
        power = 1 if m.group("lam") else 0
        pos = m.end()
        if m.group("paren"):
            inner, pos = _parse_sum(text, pos, sigma)
            if pos >= len(text) or text[pos] != ")":
                raise ValueError(f"unbalanced parenthesis in {text!r}")
            pos += 1
            sub = Block.of({(p + power, tok): v * coef for (p, tok), v in inner.terms})
        else:
            tok = _symbol(m.group("sym"))
            sub = ZERO if tok is None else Block.term(coef, power, tok)
        if any(p > 1 for (p, _), _ in sub.terms):
            raise ValueError("templates are pencils: λ powers above 1 are not allowed")
        total = total + sub
    return total, pos


def _symbol(sym: str):
    if sym == "0":
        return None
    if sym.startswith("I"):
        return IDENT
    if sym.startswith("P"):
        return ptok(int(re.sub(r"\D", "", sym)))
    return ftok(sym[0], len(sym) > 1)


def parse_grid(rows, sigma: int = 1):
    """Parse a nested list of block strings."""
    grid = [[parse_block(c, sigma) if isinstance(c, str) else c for c in row] for row in rows]
    if any(len(r) != len(grid[0]) for r in grid):
        raise ValueError("ragged block grid")
    return grid


# -- rendering -------------------------------------------------------------

def _tok_str(tok):
    if tok == IDENT:
        return "I"
    if tok[0] == "P":
        return f"P_{tok[1]}"
    return tok[1] + ("^T" if tok[2] else "")


def render_block(b: Block) -> str:
    if b.is_zero():
        return "0"
    out = ""
    for (power, tok), c in b.terms:
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        coef = "" if mag == 1 else str(mag)
        out += f"{sign}{coef}{'λ' if power else ''}{_tok_str(tok)}"
    return out[1:] if out.startswith("+") else out


def render(grid) -> str:
    cells = [[render_block(b) for b in row] for row in grid]
    width = max((len(c) for row in cells for c in row), default=1)
    return "\n".join("[" + "  ".join(c.rjust(width) for c in row) + "]" for row in cells)


# -- templates -------------------------------------------------------------

@dataclass(frozen=True)
class BlockPencilTemplate:
    """Square grid of formal blocks describing the body ``lam B + A`` of a pencil."""

    name: str
    grid: tuple

    def __post_init__(self):
        g = tuple(tuple(r) for r in self.grid)
        if any(len(r) != len(g) for r in g):
            raise ValueError("template grid must be square")
        object.__setattr__(self, "grid", g)

    @classmethod
    def from_strings(cls, name, rows, sigma: int = 1):
        return cls(name, parse_grid(rows, sigma))

    @property
    def size(self) -> int:
        return len(self.grid)

    def tokens(self):
        return set().union(*(b.tokens() for row in self.grid for b in row)) if self.grid else set()

    def is_block_symmetric(self) -> bool:
        m = self.size
        return all(self.grid[i][j] == self.grid[j][i] for i in range(m) for j in range(m))

    def __str__(self):
        return render(self.grid)


def is_companion_grid(grid) -> bool:
    """Blocks use only ``P_k`` and identity tokens, at most one term per power of λ."""
    for row in grid:
        for b in row:
            if any(tok[0] == "F" for tok in b.tokens()):
                return False
            powers = [p for (p, _), _ in b.terms]
            if len(powers) != len(set(powers)):
                return False
    return True


def instantiate_block(b: Block, P: MatPoly, n: int, free=None, field=None):
    field = field or P.field
    c = scalars.zeros((2, n, n), field)
    free = free or {}
    for (power, tok), coef in b.terms:
        if tok == IDENT:
            M = scalars.eye(n, field)
        elif tok[0] == "P":
            k = tok[1]
            if not 0 <= k <= P.grade:
                raise ValueError(f"template refers to P_{k} beyond grade {P.grade}")
            M = P.astype(field).coeffs[k]
        else:
            if tok[1] not in free:
                raise ValueError(f"no value supplied for free matrix {tok[1]}")
            M = scalars.as_array(free[tok[1]], field)
            if tok[2]:
                M = M.T
        c[power] = c[power] + M * scalars.coerce(coef, field)
    return MatPoly(c, field)


def instantiate(grid, P: MatPoly, free=None) -> MatPoly:
    """Substitute the coefficients of ``P`` (and named free matrices) into a grid."""
    if isinstance(grid, BlockPencilTemplate):
        grid = grid.grid
    n = P.rows
    field = P.field
    if free:
        field = scalars.common_field(field, *(scalars.infer_field(M) for M in free.values()))
    return block_matrix([[instantiate_block(b, P, n, free, field) for b in row] for row in grid], field)


# -- Kronecker borders and permutations ------------------------------------

def _l_entry(row: int, col: int, sigma: int = 1, offset: int = 0) -> Block:
    """Entry of ``sigma * L_k`` (shifted right by ``offset`` columns)."""
    j = col - offset
    if j == row:
        return I_block(-sigma)
    if j == row + 1:
        return I_block(sigma, 1)
    return ZERO


def bordered_grid(inner, sigma: int, k: int, hat: bool = False):
    """``[[inner, K^T], [sigma K, 0]]`` with ``K = L_k`` (or ``L_hat_k`` when ``hat``).

    ``inner`` has ``k+1`` block rows; the border has ``k`` rows for ``L_k`` and
    ``k-1`` rows for ``L_hat_k``.
    """
    if isinstance(inner, BlockPencilTemplate):
        inner = inner.grid
    m = len(inner)
    if m != k + 1:
        raise ValueError("inner grid size does not match the Kronecker border")
    rows = k - 1 if hat else k
    off = 1 if hat else 0
    K = [[_l_entry(i, j, 1, off) for j in range(m)] for i in range(rows)]
    top = [list(inner[i]) + [K[r][i] for r in range(rows)] for i in range(m)]
    bottom = [[K[r][j].scale(sigma) for j in range(m)] + [ZERO] * rows for r in range(rows)]
    return top + bottom


def permute_grid(grid, perm):
    """New block ``(i, j)`` is old block ``(perm[i], perm[j])`` (zero-based)."""
    return [[grid[p][q] for q in perm] for p in perm]


def scale_grid(grid, signs):
    return [[b.scale(signs[i] * signs[j]) for j, b in enumerate(row)] for i, row in enumerate(grid)]


def reverse_grid(grid):
    """Formal reversal of a pencil grid: swap the λ and constant parts of every block."""
    return [[Block.of({(1 - p, tok): c for (p, tok), c in b.terms}) for b in row] for row in grid]


def grid_equal(a, b) -> bool:
    return len(a) == len(b) and all(
        len(ra) == len(rb) and all(x == y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def substitute_p(grid, mapping):
    """Rename ``P_k`` tokens by ``mapping[k]`` (used for reversal of the polynomial)."""
    def sub(b):
        return Block.of({(p, ptok(mapping[tok[1]]) if tok[0] == "P" else tok): c
                         for (p, tok), c in b.terms})
    return [[sub(b) for b in row] for row in grid]
