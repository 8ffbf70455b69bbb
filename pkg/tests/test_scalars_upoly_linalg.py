from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import rational_matrices, small_fractions
from structlin import linalg, scalars
from structlin.scalars import GaussianRational
from structlin.upoly import UPoly, gcd, interpolate

gaussians = st.builds(GaussianRational, small_fractions, small_fractions)


@given(gaussians, gaussians, gaussians)
def test_gaussian_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    if b != 0:
        assert (a / b) * b == a
    assert a.conjugate().conjugate() == a


@pytest.mark.parametrize("field,text,value", [
    ("rational", "3/4", Fraction(3, 4)),
    ("rational", "-2", Fraction(-2)),
    ("f64", "0.5", 0.5),
    ("gaussian", "1/2+3i", GaussianRational(Fraction(1, 2), 3)),
])
def test_parse_scalar(field, text, value):
    assert scalars.parse_scalar(text, field) == value


@given(st.one_of(small_fractions.map(lambda v: ("rational", v)),
                 gaussians.map(lambda v: ("gaussian", v))))
def test_scalar_json_round_trip(item):
    field, v = item
    assert scalars.from_json(scalars.to_json(v, field), field) == v


def test_common_field():
    assert scalars.common_field("rational", "gaussian") == "gaussian"
    assert scalars.common_field("rational", "f64") == "f64"
    assert scalars.common_field("gaussian", "f64") == "c64"
    with pytest.raises(ValueError):
        scalars.check_field("quaternion")


@given(st.lists(small_fractions, max_size=5), st.lists(small_fractions, min_size=1, max_size=4))
def test_upoly_divmod(a, b):
    A, B = UPoly(a), UPoly(b)
    if not B:
        return
    q, r = A.divmod(B)
    assert q * B + r == A
    assert (r.degree is None) or r.degree < B.degree


def test_upoly_gcd_and_interpolate():
    x = UPoly([0, 1])
    p = (x - UPoly.const(1)) * (x - UPoly.const(2))
    q = (x - UPoly.const(1)) * (x + UPoly.const(3))
    assert gcd(p, q).monic() == x - UPoly.const(1)
    xs = [Fraction(k) for k in (0, 1, -1)]
    assert interpolate(xs, [p(v) for v in xs]) == p
    assert p.reversed(2) == UPoly([1, -3, 2])


@given(rational_matrices(3, 3), rational_matrices(3, 3))
def test_det_multiplicative(A, B):
    assert linalg.det(A @ B) == linalg.det(A) * linalg.det(B)


@given(rational_matrices(3, 4))
def test_rank_nullity(M):
    N = linalg.nullspace(M)
    assert linalg.rank(M) + N.shape[1] == 4
    assert not any(bool(v) for v in (M @ N).reshape(-1))


@given(rational_matrices(3, 3))
def test_inverse(M):
    if linalg.det(M) == 0:
        assert not linalg.is_nonsingular(M)
        return
    I = M @ linalg.inverse(M)
    assert (I == np.eye(3, dtype=object)).all()


def test_float_rank_uses_tolerance():
    M = np.array([[1.0, 1.0], [1.0, 1.0 + 1e-14]])
    assert linalg.rank(M, 1e-10) == 1
    assert linalg.rank(M, 1e-16) == 2
