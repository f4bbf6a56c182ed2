import random
from fractions import Fraction

import pytest

from nivatk.configurations import CosetIndicator, Mechanical, Periodic, Sum
from nivatk.errors import ZeroPolynomialError
from nivatk.lattice import Lattice, Window
from nivatk.laurent import (
    LaurentPolynomial as LP,
    annihilates,
    apply,
    line_content,
    line_factorization,
    newton_polygon_directions,
    normalize_integer_primitive,
    substitute_power,
)
from nivatk.quadratic import QuadraticReal


def checkerboard():
    return Periodic(
        Lattice([(2, 0), (0, 2)]),
        {(0, 0): 0, (1, 0): 1, (0, 1): 1, (1, 1): 0},
    )


def rand_poly(rng, dim=2, max_terms=6, coord=3, coeff=9):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        e = tuple(rng.randint(-coord, coord) for _ in range(dim))
        c = rng.randint(-coeff, coeff)
        if c:
            terms[e] = terms.get(e, 0) + c
    return LP(dim, {e: Fraction(c) for e, c in terms.items() if c})


def test_constructors():
    assert LP.zero(2).is_zero
    assert LP.one(2).is_constant
    assert LP.monomial((1, -2), 3).terms == {(1, -2): Fraction(3)}
    assert LP.variable(0, 2).terms == {(1, 0): Fraction(1)}
    assert LP.difference((1, 0)).terms == {(1, 0): Fraction(1), (0, 0): Fraction(-1)}


def test_ring_axioms_on_random_inputs():
    rng = random.Random(3)
    for _ in range(50):
        f, g, h = (rand_poly(rng) for _ in range(3))
        assert (f + g).terms == (g + f).terms
        assert (f * g).terms == (g * f).terms
        assert ((f + g) * h).terms == (f * h + g * h).terms
        assert (f - f).is_zero


def test_shift_and_scale():
    x = LP.variable(0, 2)
    assert x.shift((-2, 5)).terms == {(-1, 5): Fraction(1)}
    assert x.scale(Fraction(3, 2)).terms == {(1, 0): Fraction(3, 2)}


def test_leading_term_is_graded_lex_max():
    x = LP.variable(0, 2)
    y = LP.variable(1, 2)
    assert (x + y).leading_term() == ((1, 0), Fraction(1))
    assert (y * y + x).leading_term() == ((0, 2), Fraction(1))


def test_line_direction():
    assert LP.difference((2, -4)).line_direction() == (1, -2)
    x = LP.variable(0, 2)
    y = LP.variable(1, 2)
    assert (x + y).line_direction() == (1, -1)
    assert (x + y + LP.one(2)).line_direction() is None


def test_normalize_integer_primitive():
    g = LP(2, {(0, 0): Fraction(2, 3), (1, 0): Fraction(-4, 3)})
    assert sorted(normalize_integer_primitive(g).terms.items()) == [
        ((0, 0), Fraction(-1)), ((1, 0), Fraction(2))]
    # sign: the graded-lex leading coefficient comes out positive
    g2 = LP(2, {(0, 0): Fraction(2), (1, 0): Fraction(-4)})
    assert normalize_integer_primitive(g2).leading_term()[1] > 0


def test_substitute_power():
    f = LP.difference((1, 0))
    assert substitute_power(f, 3).terms == {(3, 0): Fraction(1), (0, 0): Fraction(-1)}


def test_coefficients_mod_drops_multiples():
    f = LP(1, {(0,): Fraction(6), (1,): Fraction(5), (2,): Fraction(-1)})
    assert f.coefficients_mod(3) == {(1,): 2, (2,): 2}


def test_power_substitution_congruence_small():
    # (f mod p)^p and f(X^p) agree coefficientwise mod p
    rng = random.Random(9)
    for p in (2, 3, 5):
        for _ in range(10):
            f = rand_poly(rng, max_terms=4, coord=2, coeff=5)
            if f.is_zero:
                continue
            fp = f
            for _ in range(p - 1):
                fp = fp * f
            assert fp.coefficients_mod(p) == f.substitute_power(p).coefficients_mod(p)


def test_apply_convention_subtracts_exponent():
    # (f*c)(v) = sum_e f_e * c(v - e)
    c = checkerboard()
    f = LP.monomial((1, 0))
    pat = apply(f, c, Window.box((0, 0), (2, 2)))
    for v in Window.box((0, 0), (2, 2)):
        assert pat.values[v] == c.value((v[0] - 1, v[1]))


def test_annihilates_periodic_is_exact():
    c = checkerboard()
    f = LP.difference((1, 1))
    res = annihilates(f, c, Window.box((0, 0), (5, 5)))
    assert res.status == "exact"
    assert bool(res)


def test_annihilates_reports_witness():
    c = checkerboard()
    f = LP.difference((1, 0))
    res = annihilates(f, c, Window.box((0, 0), (5, 5)))
    assert res.status == "no"
    assert res.witness is not None
    assert not bool(res)


def test_annihilates_window_only_for_aperiodic():
    r2 = QuadraticReal.sqrt(2)
    c = Sum([
        (1, Mechanical((1, 1), r2)),
        (-1, Mechanical((1, 0), r2)),
        (-1, Mechanical((0, 1), r2)),
    ])
    f = (LP.difference((1, 0)) * LP.difference((0, 1))
         * LP.difference((1, -1)))
    res = annihilates(f, c, Window.box((0, 0), (40, 40)))
    assert res.status == "window"


def test_newton_polygon_directions_square():
    f = LP.difference((1, 0)) * LP.difference((0, 1))
    assert newton_polygon_directions(f) == ((0, 1), (1, 0))


def test_line_content_extracts_full_direction_factor():
    f = LP.difference((1, 0)) * LP.difference((0, 1))
    phi = line_content(f, (1, 0))
    assert sorted(phi.terms.items()) == [
        ((0, 0), Fraction(-1)), ((1, 0), Fraction(1))]


def test_line_factorization_two_differences():
    f = LP.difference((1, 0)) * LP.difference((0, 1))
    lf = line_factorization(f)
    assert lf.monomial == (0, 0)
    assert lf.directions == ((0, 1), (1, 0))
    assert lf.remainder.is_constant
    assert (lf.product() - f).is_zero


def test_line_factorization_line_free_remainder():
    h = LP.variable(0, 2) + LP.variable(1, 2) + LP.one(2)
    lf = line_factorization(h)
    assert lf.factors == ()
    assert (lf.remainder - h).is_zero


def test_line_factorization_strips_monomial_shift():
    f = LP.monomial((-1, 2)) * LP.difference((1, 0))
    lf = line_factorization(f)
    assert lf.monomial == (-1, 2)
    assert lf.directions == ((1, 0),)
    assert (lf.product() - f).is_zero


def test_line_factorization_triple_product():
    f = (LP.difference((1, 0)) * LP.difference((0, 1))
         * LP.difference((1, -1)))
    lf = line_factorization(f)
    assert lf.directions == ((0, 1), (1, -1), (1, 0))
    assert lf.line_direction_count == 3
    assert (lf.product() - f).is_zero


def test_line_factorization_random_reconstruction():
    rng = random.Random(17)
    dirs_pool = [(1, 0), (0, 1), (1, -1), (1, 1), (2, 1), (1, -2)]
    for _ in range(40):
        k = rng.randint(1, 3)
        dirs = sorted(rng.sample(dirs_pool, k))
        f = LP.one(2)
        for v in dirs:
            # a nontrivial line polynomial along v
            f = f * (LP.monomial((2 * v[0], 2 * v[1]))
                     + rng.randint(1, 4) * LP.monomial(v)
                     + LP.one(2) * rng.randint(1, 4))
        lf = line_factorization(f)
        assert set(dirs) <= set(lf.directions)
        assert (lf.product() - f).is_zero


def test_line_factorization_rejects_zero():
    with pytest.raises(ZeroPolynomialError):
        line_factorization(LP.zero(2))


def test_coset_line_killed_by_matching_difference():
    c = CosetIndicator((0, 0, 3), [(0, 1, 0)], 1)
    f = LP.difference((0, 1, 0))
    assert annihilates(f, c, Window.box((-3, -3, 0), (3, 3, 5)))
