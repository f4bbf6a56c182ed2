"""Discover and verify annihilating polynomials for low-complexity configurations.

A configuration whose pattern count never beats the window size carries a
linear dependence among its translates; the pipeline below finds one,
packages it as a Laurent polynomial certificate, and re-checks it.

Run:  python3 demos/annihilator_pipeline.py
"""

from nivatk import (
    CosetIndicator,
    Lattice,
    Periodic,
    Sum,
    Window,
    annihilates,
    apply,
    find_annihilator,
    format_poly,
    search_difference_annihilator,
)


def main():
    board = Periodic(Lattice([(2, 0), (1, 1)]), {(0, 0): 0, (1, 0): 1})
    shape = Window.box((0, 0), (1, 1))
    sample = Window.box((0, 0), (9, 9))
    verify = Window.box((0, 0), (13, 13))

    print("checkerboard, 2x2 shape:")
    rep = find_annihilator(board, shape, sample, verify)
    print(f"  g = {format_poly(rep.g)}")
    print(f"  g*c = {rep.constant} everywhere")
    print(f"  f = {format_poly(rep.f)}")
    res = annihilates(rep.f, board, Window.box((-8, -8), (20, 20)))
    print(f"  re-check: {res.status}")

    print("two perpendicular lines in 3D, bounded difference search:")
    lines = Sum([
        (1, CosetIndicator((0, 0, 0), [(1, 0, 0)], 1)),
        (1, CosetIndicator((0, 0, 3), [(0, 1, 0)], 1)),
    ])
    window = Window.box((-6, -6, -6), (6, 6, 6))
    steps = search_difference_annihilator(lines, 2, 1, window)
    print(f"  steps = {sorted(steps)}")
    # each step flattens one of the two lines; the product kills both
    from nivatk import LaurentPolynomial as LP
    f = LP.difference(steps[0]) * LP.difference(steps[1])
    pat = apply(f, lines, Window.box((-4, -4, -4), (4, 4, 4)))
    print(f"  product wipes the sample: {all(v == 0 for v in pat.values.values())}")


if __name__ == "__main__":
    main()
