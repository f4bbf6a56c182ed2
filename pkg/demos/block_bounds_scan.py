"""Audit block counts against the M*N threshold and the closed-form bounds.

The scan reports a verdict per block size: ExceedsMN is a proof (counts are
certified lower bounds), Inconclusive only says the sample was exhausted.

Run:  python3 demos/block_bounds_scan.py
"""

from nivatk import (
    LaurentPolynomial as LP,
    Mechanical,
    QuadraticReal,
    Sum,
    Window,
    bound_two_directions,
    corollary_report,
    line_factorization,
    nivat_scan,
    scan_csv,
)


def main():
    r2 = QuadraticReal.sqrt(2)
    c = Sum([
        (1, Mechanical((1, 1), r2)),
        (-1, Mechanical((1, 0), r2)),
        (-1, Mechanical((0, 1), r2)),
    ])
    sample = Window.box((0, 0), (199, 199))
    rows = nivat_scan(c, range(2, 6), range(2, 6), sample)
    print("binary mechanical sum, 200x200 sample:")
    print(scan_csv(rows), end="")

    print("closed-form thresholds for axis-aligned periods:")
    for M, N in ((3, 3), (5, 4), (8, 8)):
        b = bound_two_directions((1, 0), (0, 1), M, N)
        print(f"  M={M} N={N}: {b}")

    print("bound report for a product of three differences:")
    f = LP.difference((1, 0)) * LP.difference((0, 1)) * LP.difference((1, -1))
    rep = corollary_report(f, line_factorization(f), 5, 5)
    for name, value in rep.bounds:
        print(f"  {name}: {value}")
    print(f"  best: {rep.best[0]} = {rep.best[1]}")


if __name__ == "__main__":
    main()
