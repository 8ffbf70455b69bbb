import warnings

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import frac_array
from printed_displays import ECOUPLED_SKEW, ECOUPLED_SYM
from structlin.fixtures import random_free, random_matrix, random_poly, random_structured_poly
from structlin.oddlin import (BlockKroneckerPencil, assemble, banded_permutation,
                              build_from_template, build_structured, check_condition_M,
                              check_condition_coeff, fpr_body, fpr_fixtures,
                              is_companion_template, permute_to_banded, solve_structured,
                              template_library)
from structlin.polycore import MatPoly, get_block, permute_blocks, structure_check
from structlin.templates import (BlockPencilTemplate, P_block, grid_equal, instantiate,
                                 parse_block, parse_grid)


def blk(inner, i, j, n):
    b = get_block(inner, i - 1, j - 1, n)
    return b.coeff(0), b.coeff(1)


def test_assemble_layout():
    inner = MatPoly.from_entries([[[2, 1], [0]], [[0], [4, 3]]])
    L = assemble(inner, 1, 1, 1)
    expect = MatPoly.from_entries([[[2, 1], [0], [-1]], [[0], [4, 3], [0, 1]], [[-1], [0, 1], [0]]])
    assert L.assembled.equals(expect)
    Lm = assemble(inner, -1, 1, 1)
    assert Lm.assembled.equals(MatPoly.from_entries(
        [[[2, 1], [0], [-1]], [[0], [4, 3], [0, 1]], [[1], [0, -1], [0]]]))
    with pytest.raises(ValueError):
        assemble(inner, 1, 2, 1)


def test_grade_one_warns():
    P = MatPoly.from_entries([[[1, 2]]])
    with pytest.warns(UserWarning):
        L = build_structured(P, 1)
    assert L.assembled.equals(P)


def test_condition_coeff_example():
    P = MatPoly.from_entries([[[4, 3, 2, 1]]])
    inner = MatPoly.pencil(frac_array([[0, 3], [0, 4]]), frac_array([[1, 2], [0, 0]]))
    assert check_condition_coeff(inner, P, 1, 1)
    assert check_condition_M(inner, P, 1, 1)
    for idx in np.ndindex(2, 2, 2):
        c = np.array(inner.coeffs, copy=True)
        c[idx] += 1
        bad = MatPoly(c, "rational")
        assert not check_condition_coeff(bad, P, 1, 1)
        assert not check_condition_M(bad, P, 1, 1)


@pytest.mark.parametrize("d", [3, 5, 7])
def test_blockdiag_passes_for_any_P(d):
    P = random_poly(2, 2, d, seed=d)
    inner = instantiate(template_library("blockdiag", d), P)
    assert check_condition_coeff(inner, P, (d - 1) // 2, 2)


@given(st.integers(0, 10_000), st.integers(1, 3), st.sampled_from([3, 5]))
def test_condition_M_agrees_with_coeff(seed, s_n, d):
    P = random_poly(s_n, s_n, d, seed=seed)
    m = (d + 1) // 2 * s_n
    inner = random_poly(m, m, 1, seed=seed + 1)
    if seed % 2:
        inner = solve_structured(P, 1, free=random_free(s_n, (d + 1) // 2, seed=seed),
                                 check_structure=False)
    s = (d - 1) // 2
    assert check_condition_M(inner, P, s, s_n) == check_condition_coeff(inner, P, s, s_n)


def test_solve_zero_free_is_blockdiag():
    P = random_structured_poly(2, 5, 1, seed=3)
    inner = solve_structured(P, 1)
    assert inner.equals(instantiate(template_library("blockdiag", 5), P))


def test_solve_general_free_symmetric():
    n = 2
    P = random_structured_poly(n, 5, 1, seed=4)
    free = random_free(n, 3, seed=5)
    inner = solve_structured(P, 1, free=free)
    A12, B12 = free[(1, 2)]
    A13, B13 = free[(1, 3)]
    A23, B23 = free[(2, 3)]
    Pk = P.coeffs
    assert (blk(inner, 1, 1, n)[1] == Pk[5]).all()
    assert (blk(inner, 1, 1, n)[0] == Pk[4] - (B12 + B12.T)).all()
    assert (blk(inner, 2, 2, n)[1] == Pk[3] - (B13 + B13.T) - (A12 + A12.T)).all()
    assert (blk(inner, 2, 2, n)[0] == Pk[2] - (B23 + B23.T) - (A13 + A13.T)).all()
    assert (blk(inner, 3, 3, n)[1] == Pk[1] - (A23 + A23.T)).all()
    assert (blk(inner, 3, 3, n)[0] == Pk[0]).all()
    assert (blk(inner, 2, 1, n)[0] == A12.T).all() and (blk(inner, 3, 2, n)[1] == B23.T).all()


def test_solve_skew_single_free():
    n = 2
    P = random_structured_poly(n, 3, -1, seed=6)
    E = random_matrix(n, seed=7)
    Z = 0 * E
    inner = solve_structured(P, -1, free={(1, 2): (E, Z)})
    Pk = P.coeffs
    assert (blk(inner, 1, 1, n)[0] == Pk[2]).all()
    assert (blk(inner, 1, 1, n)[1] == Pk[3]).all()
    assert (blk(inner, 2, 2, n)[1] == Pk[1] - (E - E.T)).all()
    assert (blk(inner, 2, 2, n)[0] == Pk[0]).all()
    assert (blk(inner, 2, 1, n)[0] == -E.T).all()


def test_solve_errors():
    with pytest.raises(ValueError, match="odd grade required"):
        solve_structured(random_structured_poly(2, 4, 1), 1)
    with pytest.raises(ValueError, match="structure mismatch"):
        solve_structured(random_poly(2, 2, 3, seed=1), 1)
    with pytest.raises(ValueError):
        solve_structured(random_structured_poly(2, 3, 1), 1, free={(2, 1): (np.eye(2), np.eye(2))})


@pytest.mark.parametrize("sigma", [1, -1])
@pytest.mark.parametrize("d", [3, 5, 7, 9])
def test_structure_and_conditions(sigma, d):
    for seed in range(3):
        n = 1 + seed
        P = random_structured_poly(n, d, sigma, seed=seed)
        L = build_structured(P, sigma, free=random_free(n, (d + 1) // 2, seed=seed + 9))
        cls = "symmetric" if sigma == 1 else "skew-symmetric"
        assert structure_check(L.assembled, cls)
        assert check_condition_coeff(L.inner, P, L.s, n) and check_condition_M(L.inner, P, L.s, n)


def test_general_solution_for_unstructured_P():
    P = random_poly(2, 2, 5, seed=2)
    inner = solve_structured(P, 1, free=random_free(2, 3, seed=1), check_structure=False)
    assert check_condition_coeff(inner, P, 2, 2)


def test_template_library_examples():
    T = template_library("blockdiag", 7)
    expect = [["λP_7+P_6", "0", "0", "0"], ["0", "λP_5+P_4", "0", "0"],
              ["0", "0", "λP_3+P_2", "0"], ["0", "0", "0", "λP_1+P_0"]]
    assert grid_equal(T.grid, parse_grid(expect))
    T = template_library("pentadiagonal", 7)
    expect = [["λP_7-P_6", "λP_6", "0", "0"], ["λP_6", "λP_5-P_4", "λP_4", "0"],
              ["0", "λP_4", "λP_3-P_2", "λP_2"], ["0", "0", "λP_2", "λP_1+P_0"]]
    assert grid_equal(T.grid, parse_grid(expect))
    with pytest.raises(ValueError):
        template_library("nope", 5)
    with pytest.raises(ValueError):
        template_library("blockdiag", 4)


@pytest.mark.parametrize("name", ["blockdiag", "pentadiagonal", "ex1", "ex2", "ex3", "ecoupled"])
@pytest.mark.parametrize("d", [5, 7, 9])
def test_templates_satisfy_condition_M(name, d):
    P = random_poly(2, 2, d, seed=d)
    free = {"E": random_matrix(2, seed=1), "F": random_matrix(2, seed=2)}
    inner = instantiate(template_library(name, d), P, free)
    assert check_condition_M(inner, P, (d - 1) // 2, 2)


def test_companion_flags():
    assert is_companion_template(template_library("ex1", 5))
    assert is_companion_template(template_library("ex2", 5))
    assert is_companion_template(template_library("blockdiag", 7))
    assert is_companion_template(template_library("pentadiagonal", 7))
    assert not is_companion_template(template_library("ex3", 5))
    assert not is_companion_template(template_library("ecoupled", 5))
    assert not is_companion_template(BlockPencilTemplate("x", [[parse_block("λP_3+P_2-E-E^T")]]))


@pytest.mark.parametrize("sigma", [1, -1])
def test_block_symmetric_templates_preserve_skew(sigma):
    for name in ("blockdiag", "pentadiagonal"):
        T = template_library(name, 7)
        assert T.is_block_symmetric()
        P = random_structured_poly(2, 7, sigma, seed=11)
        L = build_from_template(T, P, sigma)
        assert structure_check(L.assembled, "symmetric" if sigma == 1 else "skew-symmetric")
    for name in ("fpr3", "fpr5"):
        T = fpr_body("L3prime" if name == "fpr3" else "L5prime")
        assert T.is_block_symmetric()
        P = random_structured_poly(2, 5, sigma, seed=12)
        L = build_from_template(T, P, sigma)
        assert structure_check(L.assembled, "symmetric" if sigma == 1 else "skew-symmetric")


@pytest.mark.parametrize("sigma", [1, -1])
def test_coupled_template_structure(sigma):
    P = random_structured_poly(2, 5, sigma, seed=13)
    E = random_matrix(2, seed=14)
    L = build_from_template(template_library("ecoupled", 5, sigma), P, sigma, {"E": E})
    assert structure_check(L.assembled, "symmetric" if sigma == 1 else "skew-symmetric")
    printed = ECOUPLED_SYM if sigma == 1 else ECOUPLED_SKEW
    assert L.assembled.equals(instantiate(parse_grid(printed), P, {"E": E}))


def test_banded_permutation():
    assert banded_permutation(3) == [0, 4, 1, 5, 2, 6, 3]
    assert sorted(banded_permutation(5)) == list(range(11))


@pytest.mark.parametrize("d", [3, 5, 7, 9])
def test_permute_to_banded(d):
    P = random_structured_poly(2, d, 1, seed=d)
    perm, M = permute_to_banded(build_from_template(template_library("blockdiag", d), P, 1))
    assert structure_check(M, "symmetric")
    perm2, M2 = permute_to_banded(build_from_template(template_library("pentadiagonal", d), P, 1),
                                  "pentadiagonal")
    assert perm == perm2
    with pytest.raises(ValueError, match="template mismatch"):
        permute_to_banded(build_from_template(template_library("ex2", d) if d >= 5 else
                                              template_library("pentadiagonal", d), P, 1))


@pytest.mark.parametrize("name", ["L3prime", "L5prime"])
def test_fpr_fixtures(name):
    P = random_structured_poly(2, 5, 1, seed=21)
    pencil, perm = fpr_fixtures(name, P)
    permuted = permute_blocks(pencil, perm, 2)
    inner = permuted[:6, :6]
    assert check_condition_M(inner, P, 2, 2)
    assert permuted.equals(assemble(inner, 1, 2, 2).assembled)
    first = get_block(inner, 0, 0, 2)
    if name == "L3prime":
        assert first.equals(instantiate([[P_block(5, 1, 1) + P_block(4, -1)]], P))
        assert get_block(inner, 0, 1, 2).equals(instantiate([[P_block(4, 1, 1)]], P))
    else:
        assert first.equals(instantiate([[P_block(5, 1, 1) + P_block(4)]], P))
        assert get_block(inner, 0, 1, 2).equals(instantiate([[P_block(3)]], P))
    with pytest.raises(ValueError):
        fpr_fixtures(name, random_poly(2, 2, 3))


def test_pencil_type():
    P = random_structured_poly(1, 3, 1)
    L = build_structured(P, 1)
    assert isinstance(L, BlockKroneckerPencil) and L.d == 3 and L.assembled.shape == (3, 3)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        build_structured(P, 1)
