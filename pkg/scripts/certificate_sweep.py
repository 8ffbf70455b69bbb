"""Determinant certificates for structured pencils over a grid of grades and sizes.

Prints one row per (construction, sigma, d, n) with the number of strong
certificates and the elapsed time; ``--json`` also writes the rows to a file.
"""

import argparse
import itertools
import json
import time

from structlin.evenlin import solve_even_structured, trailing_variant
from structlin.fixtures import random_free, random_matrix, random_structured_poly
from structlin.oddlin import build_structured
from structlin.verify import certificate


def odd_case(sigma, d, n, seed):
    P = random_structured_poly(n, d, sigma, seed=seed)
    L = build_structured(P, sigma, free=random_free(n, (d + 1) // 2, seed=seed + 1))
    return certificate(L.assembled, P)


def even_case(sigma, d, n, seed, trailing):
    t = d // 2
    P = random_structured_poly(n, d, sigma, seed=seed, nonsingular_leading=not trailing,
                               nonsingular_trailing=trailing)
    W = [random_matrix(n, seed=seed + k) for k in range(t - 1)]
    free = random_free(n, t, seed=seed + 1)
    if trailing:
        return certificate(trailing_variant(P, sigma, W=W, free=free), P)
    return certificate(solve_even_structured(P, sigma, W=W, free=free).assembled, P)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-grade", type=int, default=8)
    ap.add_argument("--max-n", type=int, default=3)
    ap.add_argument("--samples", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", help="write the rows to this file")
    args = ap.parse_args(argv)

    rows = []
    grades = range(2, args.max_grade + 1)
    for sigma, d, n in itertools.product((1, -1), grades, range(1, args.max_n + 1)):
        singular_skew = sigma == -1 and n % 2 == 1
        kinds = ["odd"] if d % 2 else ["even", "trailing"]
        for kind in kinds:
            if singular_skew:
                continue  # odd-size real skew polynomials are never regular
            start = time.perf_counter()
            strong = 0
            for k in range(args.samples):
                seed = args.seed + 1000 * d + 100 * n + k
                cert = odd_case(sigma, d, n, seed) if kind == "odd" else \
                    even_case(sigma, d, n, seed, kind == "trailing")
                strong += cert.is_strong
            rows.append({"kind": kind, "sigma": sigma, "d": d, "n": n, "samples": args.samples,
                         "strong": strong, "seconds": round(time.perf_counter() - start, 3)})
            r = rows[-1]
            print(f"{kind:9s} sigma={sigma:+d} d={d} n={n}  strong {strong}/{args.samples}"
                  f"  {r['seconds']:.2f}s")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=1)
    return 0 if all(r["strong"] == r["samples"] for r in rows) else 1


if __name__ == "__main__":
    raise SystemExit(main())
