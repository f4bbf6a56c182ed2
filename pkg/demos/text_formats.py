"""Round-trip the text formats used by the command line tool.

Run:  python3 demos/text_formats.py
"""

from nivatk import (
    Window,
    format_config,
    format_poly,
    parse_config,
    parse_poly,
    parse_window,
    pattern_complexity,
)

CONFIGS = [
    "periodic lattice{(2,0) (1,1)} values{(0,0):0 (1,0):1}",
    "mechanical weights(1,1) alpha sqrt(2)",
    "sum { +coset offset(0,0,0) gens{(1,0,0)} value 1 "
    "+coset offset(0,0,3) gens{(0,1,0)} value 1 }",
    "finite dim 2 cells{(0,0):5 (2,1):-3}",
]


def main():
    print("configurations (parse, print, parse again):")
    for text in CONFIGS:
        c = parse_config(text)
        canon = format_config(c)
        again = format_config(parse_config(canon))
        print(f"  {canon}")
        assert canon == again
        print(f"    value at origin: {c.value((0,) * c.dim)}")

    print("polynomials normalize to a fixed term order:")
    for text in ("y + x - 1 + X^(1,1)", "3/2*X^(2,0) - X^(0,-1)", "2 - 2 + x"):
        f = parse_poly(text)
        print(f"  {text!r} -> {format_poly(f)}")

    print("window shorthand:")
    for text in ("3x4", "-2..2,-2..2", "10x10x10"):
        w = parse_window(text)
        print(f"  {text!r} -> {len(w)} cells, corner {w.lo}")

    c = parse_config(CONFIGS[0])
    res = pattern_complexity(c, parse_window("2x2"))
    print(f"checkerboard 2x2 count from parsed text: {res.count}")


if __name__ == "__main__":
    main()
