"""Count distinct finite patterns in a few hand-built configurations.

Run:  python3 demos/complexity_counting.py
"""

from nivatk import (
    CosetIndicator,
    Lattice,
    Mechanical,
    Periodic,
    QuadraticReal,
    Sum,
    Window,
    pattern_complexity,
)


def show(label, result):
    tag = "exact" if result.exact else "sampled lower bound"
    print(f"  {label}: {result.count} distinct patterns ({tag})")


def main():
    print("2D checkerboard, 2x2 window:")
    board = Periodic(Lattice([(2, 0), (1, 1)]), {(0, 0): 0, (1, 0): 1})
    show("2x2", pattern_complexity(board, Window.box((0, 0), (1, 1))))
    # doubling the window cannot help: two alternating colors, two phases
    show("4x4", pattern_complexity(board, Window.box((0, 0), (3, 3))))

    print("two perpendicular lines in 3D, n x n x n cubes:")
    c = Sum([
        (1, CosetIndicator((0, 0, 0), [(1, 0, 0)], 1)),
        (1, CosetIndicator((0, 0, 3), [(0, 1, 0)], 1)),
    ])
    sample = Window.box((-12, -12, -12), (9, 9, 9))
    # the lines sit 3 apart, so cubes with n <= 3 meet at most one of them
    for n in (2, 3):
        shape = Window.box((0, 0, 0), (n - 1, n - 1, n - 1))
        res = pattern_complexity(c, shape, sample)
        print(f"  n={n}: {res.count} (2n^2+1 = {2 * n * n + 1})")
    res4 = pattern_complexity(c, Window.box((0, 0, 0), (3, 3, 3)), sample)
    print(f"  n=4: {res4.count} (window now spans both lines)")

    print("mechanical word from sqrt(2), growing segments:")
    word = Sum([
        (1, Mechanical((1, 1), QuadraticReal.sqrt(2))),
        (-1, Mechanical((1, 0), QuadraticReal.sqrt(2))),
    ])
    anchors = Window.box((0, 1), (2000, 1))
    for n in (1, 2, 5, 10):
        res = pattern_complexity(word, Window.box((0, 0), (n - 1, 0)), anchors)
        print(f"  length {n}: {res.count} segments (n+1 = {n + 1})")


if __name__ == "__main__":
    main()
