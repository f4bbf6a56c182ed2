import pytest

from nivatk.configurations import CosetIndicator, Mechanical, Periodic, Sum
from nivatk.errors import ConfigSyntaxError, NonSquarefreeRadicandError
from nivatk.lattice import Lattice
from nivatk.laurent import LaurentPolynomial as LP
from nivatk.quadratic import QuadraticReal
from nivatk.textio import (
    format_config,
    format_poly,
    format_tile,
    parse_config,
    parse_poly,
    parse_tile,
    parse_vectors,
    parse_window,
)
from nivatk.tiling import ClusterTile

CANONICAL_CONFIGS = [
    "periodic lattice{(2,0) (0,2)} values{(0,0):0 (0,1):1 (1,0):1 (1,1):0}",
    "coset offset(0,0,0) gens{(1,0,0)} value 1",
    "mechanical weights(1,1) alpha sqrt(2)",
    "finite dim 2 cells{(0,0):1 (2,3):-4}",
    ("sum { +mechanical weights(1,1) alpha sqrt(2) "
     "-mechanical weights(1,0) alpha sqrt(2) "
     "-mechanical weights(0,1) alpha sqrt(2) }"),
    "valuemap map{0:5 1:7} default 0 of coset offset(0,0) gens{(1,0)} value 1",
    "sum { +2*finite dim 1 cells{(0):3} -coset offset(5) gens{(2)} value 1 }",
    "mechanical weights(1,0) alpha 3/7",
    "mechanical weights(1,0) alpha quad(1,1,5,2)",
]


@pytest.mark.parametrize("text", CANONICAL_CONFIGS)
def test_config_round_trip(text):
    assert format_config(parse_config(text)) == text


def test_parse_checkerboard_values():
    c = parse_config(CANONICAL_CONFIGS[0])
    assert isinstance(c, Periodic)
    assert [[c.value((i, j)) for j in range(4)] for i in range(2)] == [
        [0, 1, 0, 1], [1, 0, 1, 0]]


def test_parse_coset_line():
    c = parse_config("coset offset(0,0,0) gens{(1,0,0)} value 1")
    assert isinstance(c, CosetIndicator)
    assert c.value((7, 0, 0)) == 1
    assert c.value((7, 1, 0)) == 0


def test_parse_accepts_typeset_minus():
    text = ("sum { +mechanical weights(1,1) alpha sqrt(2) "
            "−mechanical weights(1,0) alpha sqrt(2) "
            "−mechanical weights(0,1) alpha sqrt(2) }")
    c = parse_config(text)
    assert isinstance(c, Sum)
    values = {c.value((i, j)) for i in range(20) for j in range(20)}
    assert values == {0, 1}


def test_parse_mechanical_matches_direct_construction():
    c = parse_config("mechanical weights(1,1) alpha sqrt(2)")
    d = Mechanical((1, 1), QuadraticReal.sqrt(2))
    assert all(c.value((i, j)) == d.value((i, j))
               for i in range(6) for j in range(6))


def test_parse_periodic_noncanonical_generators_normalize():
    c = parse_config("periodic lattice{(0,2) (2,0)} values{(1,1):0 (0,0):0 (1,0):1 (0,1):1}")
    assert format_config(c) == CANONICAL_CONFIGS[0]


def test_whitespace_and_newlines_are_flexible():
    text = """periodic
        lattice{ (2,0)
                 (0,2) }
        values{ (0,0):0 (0,1):1
                (1,0):1 (1,1):0 }"""
    assert format_config(parse_config(text)) == CANONICAL_CONFIGS[0]


def test_rejected_radicands():
    with pytest.raises(NonSquarefreeRadicandError):
        parse_config("mechanical weights(1,1) alpha sqrt(8)")
    with pytest.raises(NonSquarefreeRadicandError):
        parse_config("mechanical weights(1,1) alpha sqrt(-2)")


def test_syntax_errors_carry_position():
    with pytest.raises(ConfigSyntaxError) as exc:
        parse_config("periodic lattice{(2,0)} values{")
    assert exc.value.position == (1, 31)
    with pytest.raises(ConfigSyntaxError) as exc:
        parse_config("blah x")
    assert exc.value.position == (1, 1)
    with pytest.raises(ConfigSyntaxError) as exc:
        parse_config("periodic\nlattice{(2,0) %}")
    assert exc.value.position == (2, 15)


def test_empty_finite_needs_dim():
    with pytest.raises(ConfigSyntaxError):
        parse_config("finite cells{}")
    c = parse_config("finite dim 2 cells{}")
    assert c.value((0, 0)) == 0


def test_poly_sugar_and_round_trip():
    assert dict(parse_poly("x - y").terms) == dict(parse_poly("X^(1,0) - 1*X^(0,1)").terms)
    s = format_poly(parse_poly("3/2*X^(2,0) + x - 4"))
    assert s == "3/2*X^(2,0) + X^(1,0) - 4"
    assert format_poly(parse_poly(s)) == s


def test_poly_ordering_and_signs():
    assert format_poly(parse_poly("-X^(1,1) + 2")) == "-X^(1,1) + 2"
    f = parse_poly("X^(1,-1) + X^(-2,0)")
    assert format_poly(f) == "X^(1,-1) + X^(-2,0)"
    assert format_poly(parse_poly(format_poly(f))) == format_poly(f)


def test_poly_zero_and_constants():
    assert format_poly(LP.zero(2)) == "0"
    c = parse_poly("7", dim=2)
    assert dict(c.terms) == {(0, 0): 7}
    assert format_poly(c) == "7"


def test_poly_laurent_exponents():
    f = parse_poly("X^(0,-1) + 1")
    assert sorted(f.terms) == [(-0, -1), (0, 0)]


def test_poly_errors():
    with pytest.raises(ConfigSyntaxError):
        parse_poly("")
    with pytest.raises(ConfigSyntaxError):
        parse_poly("x +")
    with pytest.raises(ConfigSyntaxError):
        parse_poly("z + 1")
    with pytest.raises(ConfigSyntaxError):
        parse_poly("X^(1,0) + X^(1,0,0)")


def test_tile_round_trip_and_canonicalization():
    t = parse_tile("tile { (0,0) (1,0) (0,1) }")
    assert isinstance(t, ClusterTile)
    out = format_tile(t)
    assert out == "tile { (0,0) (0,1) (1,0) }"
    assert format_tile(parse_tile(out)) == out
    assert format_tile(parse_tile("tile { (5,7) (6,7) }")) == "tile { (0,0) (1,0) }"


def test_window_specs():
    assert parse_window("3x4").bounds() == ((0, 0), (2, 3))
    assert parse_window("3x3x3").bounds() == ((0, 0, 0), (2, 2, 2))
    assert parse_window("-2..2,0..5").bounds() == ((-2, 0), (2, 5))
    assert parse_window("500", dim=2).bounds() == ((0, 0), (499, 499))
    assert parse_window("−2..2,0..5").bounds() == ((-2, 0), (2, 5))
    with pytest.raises(ConfigSyntaxError):
        parse_window("0x4")
    with pytest.raises(ConfigSyntaxError):
        parse_window("axb")


def test_vector_lists():
    assert parse_vectors("(1,0) (0,1)") == [(1, 0), (0, 1)]
    assert parse_vectors("(1,0);(0,-1)") == [(1, 0), (0, -1)]
    assert parse_vectors("(1,0,−3)") == [(1, 0, -3)]
    with pytest.raises(ConfigSyntaxError):
        parse_vectors("  ")
