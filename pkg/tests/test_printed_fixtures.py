"""Symbolic comparison of generated pencils with the transcribed reference displays."""

import pytest

from printed_displays import (ECOUPLED_SKEW, ECOUPLED_SYM, EVEN_D8, EVEN_D8_TRIDIAGONAL, EX1,
                              EX2, EX3, FPR3_PERMUTED, FPR5_PERMUTED, FPR_L5, FPR_L5_PERMUTED,
                              L1_SKEW_D7, L1_SKEW_D7_TRIDIAGONAL, L1_SYM_D7,
                              L1_SYM_D7_TRIDIAGONAL, L2_SYM_D7, L2_SYM_D7_PENTADIAGONAL,
                              TRAILING_D8, TRAILING_D8_TRIDIAGONAL)
from structlin.evenlin import (banded_permutation_even, even_blockdiag_template,
                               symbolic_even_banded, symbolic_modified)
from structlin.oddlin import fpr_body, symbolic_banded, symbolic_pencil, template_library
from structlin.templates import (BlockPencilTemplate, grid_equal, parse_grid, permute_grid,
                                 render, render_block, reverse_grid, substitute_p)

SIGMAS = [1, -1]


@pytest.mark.parametrize("sigma", SIGMAS)
@pytest.mark.parametrize("name,printed", [("ex1", EX1), ("ex2", EX2), ("ex3", EX3)])
def test_five_examples(sigma, name, printed):
    got = symbolic_pencil(template_library(name, 5, sigma), sigma)
    assert grid_equal(got, parse_grid(printed, sigma)), render(got)


@pytest.mark.parametrize("sigma,printed", [(1, ECOUPLED_SYM), (-1, ECOUPLED_SKEW)])
def test_coupled(sigma, printed):
    got = symbolic_pencil(template_library("ecoupled", 5, sigma), sigma)
    assert grid_equal(got, parse_grid(printed, sigma)), render(got)


@pytest.mark.parametrize("sigma", SIGMAS)
@pytest.mark.parametrize("body,printed", [("L3prime", FPR3_PERMUTED), ("L5prime", FPR5_PERMUTED)])
def test_fpr_bodies(sigma, body, printed):
    assert grid_equal(symbolic_pencil(fpr_body(body), sigma), parse_grid(printed, sigma))


@pytest.mark.parametrize("sigma,name,plain,banded", [
    (1, "blockdiag", L1_SYM_D7, L1_SYM_D7_TRIDIAGONAL),
    (1, "pentadiagonal", L2_SYM_D7, L2_SYM_D7_PENTADIAGONAL),
    (-1, "blockdiag", L1_SKEW_D7, L1_SKEW_D7_TRIDIAGONAL),
])
def test_degree_seven(sigma, name, plain, banded):
    T = template_library(name, 7, sigma)
    assert grid_equal(symbolic_pencil(T, sigma), parse_grid(plain, sigma))
    assert grid_equal(symbolic_banded(T, sigma), parse_grid(banded, sigma))


@pytest.mark.parametrize("sigma", SIGMAS)
def test_even_degree_eight(sigma):
    T = even_blockdiag_template(8)
    assert grid_equal(symbolic_modified(T, sigma), parse_grid(EVEN_D8, sigma))
    assert grid_equal(symbolic_even_banded(T, sigma), parse_grid(EVEN_D8_TRIDIAGONAL, sigma))


@pytest.mark.parametrize("sigma", SIGMAS)
def test_trailing_degree_eight(sigma):
    src = substitute_p(symbolic_modified(even_blockdiag_template(8), sigma),
                       {k: 8 - k for k in range(9)})
    L = reverse_grid(src)
    assert grid_equal(L, parse_grid(TRAILING_D8, sigma))
    assert grid_equal(permute_grid(L, banded_permutation_even(4)),
                      parse_grid(TRAILING_D8_TRIDIAGONAL, sigma))


def test_fpr_l5_permutation():
    assert grid_equal(permute_grid(parse_grid(FPR_L5), (1, 2, 3, 0)), parse_grid(FPR_L5_PERMUTED))


@pytest.mark.parametrize("printed", [EX1, EX2])
def test_companion_examples_not_block_symmetric(printed):
    body = [row[:3] for row in parse_grid(printed)[:3]]
    assert not BlockPencilTemplate("x", body).is_block_symmetric()


def test_render_roundtrip():
    for printed in (EVEN_D8, L2_SYM_D7, ECOUPLED_SKEW):
        g = parse_grid(printed, -1)
        assert grid_equal(g, parse_grid([[render_block(b) for b in row] for row in g]))
        assert len(render(g).splitlines()) == len(g)
