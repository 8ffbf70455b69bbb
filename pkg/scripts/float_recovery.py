"""Floating point eigenpairs of P through its structured pencil.

Builds the pencil for random real symmetric (or skew) polynomials, solves the
generalized eigenproblem with QZ, reads eigenvectors of ``P`` off the
pencil's eigenvectors and reports the largest relative residual.  The
numbers are measurements, not guarantees.
"""

import argparse

import numpy as np
import scipy.linalg

from structlin.evenlin import solve_even_structured
from structlin.fixtures import random_structured_poly
from structlin.oddlin import build_structured
from structlin.recovery import recover_eigvec_even, recover_eigvec_odd
from structlin.verify import INF, residual


def eigen_residuals(P, sigma, tol):
    if P.grade % 2:
        L = build_structured(P, sigma, tol=tol)
        extract = lambda z, w: recover_eigvec_odd(L, z, w)  # noqa: E731
    else:
        L = solve_even_structured(P, sigma, tol=tol)
        extract = lambda z, w: recover_eigvec_even(L, z, "direct", w)  # noqa: E731
    A = L.assembled
    (alpha, beta), V = scipy.linalg.eig(-A.coeff(0), A.coeff(1), homogeneous_eigvals=True)
    out = []
    for a, b, z in zip(alpha, beta, V.T):
        inf = abs(b) <= 1e-14 * max(abs(a), 1.0)
        if inf and P.grade % 2 == 0:
            continue
        lam = INF if inf else a / b
        x = extract(z, "infinite" if inf else "finite")
        if np.linalg.norm(x) == 0:
            continue
        out.append(residual(P.astype("c64"), lam, x.astype(complex)))
    return out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--grades", type=int, nargs="+", default=[3, 4, 5, 6])
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--samples", type=int, default=5)
    ap.add_argument("--sigma", type=int, choices=(1, -1), default=1)
    ap.add_argument("--tol", type=float, default=1e-10)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    worst_all = 0.0
    for d in args.grades:
        worst = 0.0
        count = 0
        for k in range(args.samples):
            P = random_structured_poly(args.n, d, args.sigma, "transpose", "f64",
                                       seed=args.seed + 100 * d + k, nonsingular_leading=d % 2 == 0)
            res = eigen_residuals(P, args.sigma, args.tol)
            count += len(res)
            worst = max([worst] + res)
        worst_all = max(worst_all, worst)
        print(f"d={d} n={args.n}: {count} eigenpairs, max relative residual {worst:.2e}")
    return 0 if worst_all <= args.tol else 1


if __name__ == "__main__":
    raise SystemExit(main())
