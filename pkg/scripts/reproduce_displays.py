"""Render the symbolic block pencils produced by the template machinery.

Useful for eyeballing constructions against reference tables: every grid is
built from templates and block permutations only, never typed in by hand.
"""

import argparse

from structlin.evenlin import (banded_permutation_even, even_blockdiag_template,
                               symbolic_even_banded, symbolic_modified)
from structlin.oddlin import fpr_body, symbolic_banded, symbolic_pencil, template_library
from structlin.templates import permute_grid, render, reverse_grid, substitute_p


def grids(sigma):
    yield "block diagonal, d=7", symbolic_pencil(template_library("blockdiag", 7, sigma), sigma)
    yield "block diagonal, d=7, tridiagonal order", \
        symbolic_banded(template_library("blockdiag", 7, sigma), sigma)
    yield "pentadiagonal body, d=7", \
        symbolic_pencil(template_library("pentadiagonal", 7, sigma), sigma)
    yield "pentadiagonal body, d=7, banded order", \
        symbolic_banded(template_library("pentadiagonal", 7, sigma), sigma)
    for name in ("ex1", "ex2", "ex3", "ecoupled"):
        yield f"template {name}, d=5", symbolic_pencil(template_library(name, 5, sigma), sigma)
    for body in ("L3prime", "L5prime"):
        yield f"companion body {body}, d=5", symbolic_pencil(fpr_body(body), sigma)
    T = even_blockdiag_template(8)
    yield "even block diagonal, d=8", symbolic_modified(T, sigma)
    yield "even block diagonal, d=8, tridiagonal order", symbolic_even_banded(T, sigma)
    src = substitute_p(symbolic_modified(T, sigma), {k: 8 - k for k in range(9)})
    yield "trailing variant, d=8", reverse_grid(src)
    yield "trailing variant, d=8, tridiagonal order", \
        permute_grid(reverse_grid(src), banded_permutation_even(4))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sigma", type=int, choices=(1, -1), default=1)
    args = ap.parse_args(argv)
    for title, grid in grids(args.sigma):
        print(f"== {title} (sigma={args.sigma:+d})")
        print(render(grid))
        print()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
