import math
import random
from fractions import Fraction

import pytest

from nivatk.quadratic import QuadraticReal, is_prime, is_squarefree, squarefree_part


def test_squarefree_part_splits_square_factor():
    # returns (k, m) with n = k^2 * m and m squarefree
    assert squarefree_part(12) == (2, 3)
    assert squarefree_part(50) == (5, 2)
    assert squarefree_part(1) == (1, 1)
    assert squarefree_part(0) == (1, 0)
    with pytest.raises(ValueError):
        squarefree_part(-8)


def test_is_squarefree():
    assert is_squarefree(1)
    assert is_squarefree(2)
    assert is_squarefree(30)
    assert not is_squarefree(4)
    assert not is_squarefree(18)


def test_is_prime_small_values():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29}
    for n in range(-3, 31):
        assert is_prime(n) == (n in primes)


def test_rational_embedding():
    x = QuadraticReal.from_fraction(Fraction(3, 7))
    assert x.is_rational
    assert x.as_fraction() == Fraction(3, 7)
    assert x.floor() == 0
    assert QuadraticReal.from_fraction(Fraction(-3, 7)).floor() == -1


def test_floor_matches_float_reference_away_from_ties():
    # integer floors of a*sqrt(n)/q; float math is a safe oracle at this scale
    rng = random.Random(5)
    for _ in range(300):
        n = rng.choice([2, 3, 5, 7])
        a = rng.randint(-50, 50)
        b = rng.randint(-50, 50)
        q = rng.randint(1, 9)
        x = QuadraticReal(a, b, n, q)
        approx = (a + b * math.sqrt(n)) / q
        assert x.floor() == math.floor(approx)


def test_known_floors():
    r2 = QuadraticReal.sqrt(2)
    ten = QuadraticReal.from_fraction(10)
    assert (r2 * ten).floor() == 14
    assert (r2 + r2).floor() == 2
    assert (-r2).floor() == -2


def test_arithmetic_is_exact():
    r2 = QuadraticReal.sqrt(2)
    two = r2 * r2
    assert two.is_rational
    assert two.as_fraction() == 2
    zero = r2 - r2
    assert zero.sign() == 0
    assert (r2 - QuadraticReal(3, 0, 0, 2)).sign() == -1  # sqrt(2) < 3/2
    assert (r2 - QuadraticReal(7, 0, 0, 5)).sign() == 1   # sqrt(2) > 7/5


def test_compare_total_order():
    r2 = QuadraticReal.sqrt(2)
    one = QuadraticReal.from_fraction(1)
    assert r2.compare(one) == 1
    assert one.compare(r2) == -1
    assert r2.compare(QuadraticReal.sqrt(2)) == 0


def test_mixed_radicands_rejected():
    with pytest.raises(ValueError):
        QuadraticReal.sqrt(2) + QuadraticReal.sqrt(3)


def test_irrational_has_no_fraction_form():
    with pytest.raises(ValueError):
        QuadraticReal.sqrt(5).as_fraction()
