"""Univariate scalar polynomials over an exact field.

Coefficients are stored low degree first and trailing zeros are trimmed, so
the zero polynomial is the empty tuple and its degree is ``None``.
"""

from __future__ import annotations

from fractions import Fraction


class UPoly:
    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        c = list(coeffs)
        while c and not c[-1]:
            c.pop()
        self.c = tuple(c)

    @classmethod
    def const(cls, a):
        return cls((a,))

    @classmethod
    def monomial(cls, k: int, a=1):
        return cls([0] * k + [a])

    @property
    def degree(self):
        return len(self.c) - 1 if self.c else None

    @property
    def lead(self):
        return self.c[-1] if self.c else 0

    def is_zero(self) -> bool:
        return not self.c

    def is_constant(self) -> bool:
        return len(self.c) <= 1

    def __bool__(self):
        return bool(self.c)

    def __call__(self, x):
        acc = 0
        for a in reversed(self.c):
            acc = acc * x + a
        return acc

    def __add__(self, other):
        other = _lift(other)
        n = max(len(self.c), len(other.c))
        a = self.c + (0,) * (n - len(self.c))
        b = other.c + (0,) * (n - len(other.c))
        return UPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return UPoly(-a for a in self.c)

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        if not self.c or not other.c:
            return UPoly()
        out = [0] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            if not a:
                continue
            for j, b in enumerate(other.c):
                out[i + j] = out[i + j] + a * b
        return UPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = UPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        try:
            other = _lift(other)
        except TypeError:
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def divmod(self, other):
        """Euclidean division; requires a field of coefficients."""
        other = _lift(other)
        if not other.c:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.c)
        dq = len(rem) - len(other.c)
        if dq < 0:
            return UPoly(), self
        quo = [0] * (dq + 1)
        lead = other.c[-1]
        for k in range(dq, -1, -1):
            coef = rem[k + len(other.c) - 1]
            if coef:
                q = _div(coef, lead)
                quo[k] = q
                for j, b in enumerate(other.c):
                    rem[k + j] = rem[k + j] - q * b
        return UPoly(quo), UPoly(rem[: len(other.c) - 1])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other):
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self):
        if not self.c:
            return self
        lead = self.c[-1]
        return UPoly(_div(a, lead) for a in self.c)

    def reversed(self, k: int):
        """``lambda^k p(1/lambda)``; requires ``k >= degree``."""
        if self.c and len(self.c) - 1 > k:
            raise ValueError("grade too small for reversal")
        padded = self.c + (0,) * (k + 1 - len(self.c))
        return UPoly(reversed(padded))

    def coeffs(self, length: int):
        """Coefficient list padded with zeros to ``length``."""
        return list(self.c) + [0] * (length - len(self.c))

    def __repr__(self):
        return f"UPoly({list(self.c)!r})"

    def __str__(self):
        if not self.c:
            return "0"
        parts = []
        for k in range(len(self.c) - 1, -1, -1):
            a = self.c[k]
            if not a:
                continue
            mono = "" if k == 0 else ("λ" if k == 1 else f"λ^{k}")
            if mono and a == 1:
                parts.append(mono)
            elif mono and a == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{a}{'*' + mono if mono else ''}")
        return " + ".join(parts).replace("+ -", "- ")


def _lift(x) -> UPoly:
    if isinstance(x, UPoly):
        return x
    return UPoly.const(x)


def _div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        return Fraction(a, b)
    return a / b


def gcd(a: UPoly, b: UPoly) -> UPoly:
    """Monic greatest common divisor (zero if both are zero)."""
    while b:
        a, b = b, a % b
    return a.monic()


def interpolate(xs, ys) -> UPoly:
    """Exact Newton interpolation through the points ``(xs[k], ys[k])``."""
    n = len(xs)
    table = list(ys)
    coefs = [table[0]] if n else []
    for level in range(1, n):
        table = [_div(table[k + 1] - table[k], xs[k + level] - xs[k])
                 for k in range(n - level)]
        coefs.append(table[0])
    out = UPoly()
    for k in range(len(coefs) - 1, -1, -1):
        out = out * UPoly((-xs[k], 1)) + coefs[k]
    return out
