"""Scalar kinds for matrix polynomials.

Four kinds are supported:

* ``rational``  -- :class:`fractions.Fraction`
* ``gaussian``  -- :class:`GaussianRational`, a pair of fractions
* ``f64``       -- numpy float64
* ``c64``       -- numpy complex128

Exact kinds live in numpy ``object`` arrays, float kinds in native arrays.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

import numpy as np

FIELDS = ("rational", "gaussian", "f64", "c64")
EXACT_FIELDS = ("rational", "gaussian")

# promotion order used when two operands disagree
_RANK = {"rational": 0, "gaussian": 1, "f64": 2, "c64": 3}


class GaussianRational:
    """Exact complex number ``re + i*im`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            re, im = re.re, re.im + Fraction(im)
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def _lift(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Rational)):
            return GaussianRational(other)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        den = o.re * o.re + o.im * o.im
        if den == 0:
            raise ZeroDivisionError("GaussianRational division by zero")
        num = self * o.conjugate()
        return GaussianRational(num.re / den, num.im / den)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return GaussianRational(1) / (self ** -k)
        out, base = GaussianRational(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __abs__(self):
        return abs(complex(self))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            if isinstance(other, complex):
                return complex(self) == other
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        sign = "-" if self.im < 0 else "+"
        return f"({self.re}{sign}{abs(self.im)}i)"


I = GaussianRational(0, 1)


def is_exact(field: str) -> bool:
    return field in EXACT_FIELDS


def check_field(field: str) -> str:
    if field not in FIELDS:
        raise ValueError(f"unknown field {field!r}; expected one of {FIELDS}")
    return field


def common_field(*fields: str) -> str:
    """Smallest kind that holds values of every given kind."""
    best = max(fields, key=_RANK.__getitem__)
    if best == "f64" and "gaussian" in fields:
        return "c64"
    return best


def dtype_for(field: str):
    return {"rational": object, "gaussian": object,
            "f64": np.float64, "c64": np.complex128}[check_field(field)]


def coerce(value, field: str):
    """Convert a Python/numpy scalar into the representation of ``field``."""
    if field == "rational":
        if isinstance(value, GaussianRational):
            if value.im != 0:
                raise ValueError(f"{value} is not real")
            return value.re
        if isinstance(value, (float, np.floating)):
            return Fraction(float(value))
        if isinstance(value, (complex, np.complexfloating)):
            raise TypeError("complex value in rational field")
        if isinstance(value, np.integer):
            value = int(value)
        return Fraction(value)
    if field == "gaussian":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (complex, np.complexfloating)):
            return GaussianRational(Fraction(value.real), Fraction(value.imag))
        if isinstance(value, (float, np.floating)):
            return GaussianRational(Fraction(float(value)))
        if isinstance(value, np.integer):
            value = int(value)
        return GaussianRational(value)
    if field == "f64":
        if isinstance(value, GaussianRational):
            if value.im != 0:
                raise ValueError(f"{value} is not real")
            value = value.re
        return np.float64(value)
    if field == "c64":
        if isinstance(value, GaussianRational):
            return np.complex128(complex(value))
        return np.complex128(value)
    raise ValueError(f"unknown field {field!r}")


def as_array(data, field: str) -> np.ndarray:
    """Array of ``data`` converted entrywise to ``field``."""
    arr = np.asarray(data, dtype=object if is_exact(field) else None)
    if is_exact(field):
        out = np.empty(arr.shape, dtype=object)
        flat_in, flat_out = arr.reshape(-1), out.reshape(-1)
        for k in range(flat_in.size):
            flat_out[k] = coerce(flat_in[k], field)
        return out
    if arr.dtype == object:
        arr = np.vectorize(lambda v: coerce(v, field), otypes=[dtype_for(field)])(arr) \
            if arr.size else arr.astype(dtype_for(field))
    return np.asarray(arr, dtype=dtype_for(field))


def zeros(shape, field: str) -> np.ndarray:
    if is_exact(field):
        return as_array(np.zeros(shape, dtype=int), field)
    return np.zeros(shape, dtype=dtype_for(field))


def eye(n: int, field: str) -> np.ndarray:
    return as_array(np.eye(n, dtype=int), field)


def conj_array(a: np.ndarray) -> np.ndarray:
    """Entrywise conjugate; identity on real kinds."""
    if a.dtype == object:
        out = np.empty(a.shape, dtype=object)
        flat_in, flat_out = a.reshape(-1), out.reshape(-1)
        for k in range(flat_in.size):
            flat_out[k] = flat_in[k].conjugate()
        return out
    return np.conjugate(a)


def parse_scalar(text: str, field: str):
    """Parse ``"p/q"``, ``"1.5"``, ``"2+3i"`` style text into ``field``."""
    s = text.strip().replace(" ", "")
    if field in ("gaussian", "c64") and s.endswith(("i", "j")):
        body = s[:-1]
        # split on the last sign that is not the leading one nor part of an exponent
        cut = max(body.rfind("+", 1), body.rfind("-", 1))
        while cut > 0 and body[cut - 1] in "eE":
            cut = max(body.rfind("+", 1, cut), body.rfind("-", 1, cut))
        if cut <= 0:
            re_txt, im_txt = "0", body
        else:
            re_txt, im_txt = body[:cut], body[cut:]
        if im_txt in ("", "+"):
            im_txt = "1"
        elif im_txt == "-":
            im_txt = "-1"
        if field == "gaussian":
            return GaussianRational(Fraction(re_txt), Fraction(im_txt))
        return np.complex128(complex(float(Fraction(re_txt)), float(Fraction(im_txt))))
    if is_exact(field):
        return coerce(Fraction(s), field)
    return coerce(float(Fraction(s)) if "/" in s else float(s), field)


def to_json(value, field: str):
    """JSON-ready encoding of one entry."""
    if field == "rational":
        return _frac_str(value)
    if field == "gaussian":
        g = coerce(value, "gaussian")
        return [_frac_str(g.re), _frac_str(g.im)]
    if field == "f64":
        return float(value)
    c = complex(value)
    return [c.real, c.imag]


def from_json(entry, field: str):
    if field == "rational":
        if isinstance(entry, str):
            return Fraction(entry)
        if isinstance(entry, int):
            return Fraction(entry)
        raise ValueError(f"rational entries must be strings 'p/q', got {entry!r}")
    if field == "gaussian":
        if not (isinstance(entry, list) and len(entry) == 2):
            raise ValueError(f"gaussian entries must be [re, im] pairs, got {entry!r}")
        return GaussianRational(Fraction(str(entry[0])), Fraction(str(entry[1])))
    if field == "f64":
        return np.float64(entry)
    if not (isinstance(entry, list) and len(entry) == 2):
        raise ValueError(f"c64 entries must be [re, im] pairs, got {entry!r}")
    return np.complex128(complex(entry[0], entry[1]))


def _frac_str(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def magnitude(value) -> float:
    return float(abs(complex(value))) if isinstance(value, GaussianRational) else float(abs(value))


def infer_field(value) -> str:
    """Smallest field holding every entry of ``value``."""
    flat = np.asarray(value, dtype=object).reshape(-1)
    if any(isinstance(v, GaussianRational) for v in flat):
        return "gaussian"
    if any(isinstance(v, (complex, np.complexfloating)) for v in flat):
        return "c64"
    if any(isinstance(v, (float, np.floating)) for v in flat):
        return "f64"
    return "rational"
