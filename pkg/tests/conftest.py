import os
import sys
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from structlin.polycore import MatPoly  # noqa: E402

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

small_fractions = st.builds(Fraction, st.integers(-6, 6), st.sampled_from([1, 1, 2, 3]))


@st.composite
def rational_matrices(draw, rows, cols):
    vals = draw(st.lists(small_fractions, min_size=rows * cols, max_size=rows * cols))
    return np.array(vals, dtype=object).reshape(rows, cols)


@st.composite
def rational_polys(draw, rows=None, cols=None, grade=None, max_size=3, max_grade=3):
    r = draw(st.integers(1, max_size)) if rows is None else rows
    c = draw(st.integers(1, max_size)) if cols is None else cols
    g = draw(st.integers(0, max_grade)) if grade is None else grade
    mats = [draw(rational_matrices(r, c)) for _ in range(g + 1)]
    return MatPoly(np.stack(mats), "rational")


def F(x):
    return Fraction(x)


def frac_array(rows):
    return np.array([[Fraction(v) for v in r] for r in rows], dtype=object)


def is_multiple(a, b) -> bool:
    """``a`` is a nonzero scalar multiple of ``b`` (exact)."""
    a, b = np.asarray(a).reshape(-1), np.asarray(b).reshape(-1)
    k = next(i for i, v in enumerate(b) if v != 0)
    if a[k] == 0:
        return False
    c = a[k] / b[k]
    return all(x == c * y for x, y in zip(a, b))


@pytest.fixture
def rng_seed():
    return 12345
