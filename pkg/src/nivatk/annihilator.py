"""Discovery and certification of annihilating Laurent polynomials.

The central construction: when a configuration shows at most as many
distinct patterns of some shape as the shape has cells, the augmented
pattern vectors are linearly dependent and the dependency coefficients
assemble into a polynomial g with g*c constant, hence (X^e - 1)g
annihilates c.  The rest of the module turns such certificates around:
power-substitution bounds, radical witnesses built from a support set,
and bounded exhaustive search for pure products of difference factors.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .configurations import Configuration, extract_pattern
from .decomposition import difference as pattern_difference
from .errors import (
    DimensionMismatchError,
    EmptyResultError,
    EmptySampleError,
    NonIntegerCoefficientsError,
    NotPrimeError,
    V0NotInSupportError,
    VerificationFailedError,
    WindowTooSmallError,
    ZeroPolynomialError,
)
from .lattice import Window, canonical_sign, vec_add, vec_neg, vec_scale, vec_sub
from .laurent import (
    AnnihilationResult,
    LaurentPolynomial,
    annihilates,
    apply,
    substitute_power,
)
from .linalg import integer_primitive, nullspace_basis
from .quadratic import is_prime


@dataclass
class AnnihilatorReport:
    """Certified pair (g, f): g*c is the constant below, f*c vanishes."""

    g: LaurentPolynomial
    constant: int
    f: LaurentPolynomial
    shape: Window
    sample: Window
    verified_on: Window


def find_annihilator(c: Configuration, shape: Window, sample: Window,
                     verify: Window) -> AnnihilatorReport | None:
    """Look for a dependency among the sampled patterns of the given shape.

    Builds one augmented row (1, values of c on v + shape) per sample
    anchor v, takes the exact rational kernel, and keeps the canonical
    kernel vector: first in the reduced-echelon kernel basis, scaled to
    coprime integers, sign chosen so g's graded-lex leading coefficient is
    positive.  Returns None when the kernel is trivial, which certifies
    that the sampled pattern count exceeds the shape size.
    """
    if shape.dim != c.dim or sample.dim != c.dim or verify.dim != c.dim:
        raise DimensionMismatchError("shape/sample/verify vs configuration")
    shape_pts = list(shape)
    anchors = list(sample)
    if not anchors:
        raise EmptySampleError("empty sample window")

    rows = sorted({
        (1,) + tuple(c.value(vec_add(u, v)) for u in shape_pts)
        for v in anchors
    })
    kernel = nullspace_basis([list(r) for r in rows])
    if len(rows) <= len(shape_pts):
        # n+1 columns and at most n independent rows force a dependency
        assert kernel, "trivial kernel despite pattern count <= shape size"
    if not kernel:
        return None

    a = integer_primitive(kernel[0])
    g = LaurentPolynomial(
        c.dim, {vec_neg(u): a[i + 1] for i, u in enumerate(shape_pts) if a[i + 1]})
    assert not g.is_zero, "kernel vector supported on the augmentation only"
    if g.leading_term()[1] < 0:
        a = [-x for x in a]
        g = -g
    constant = -a[0]

    e1 = (1,) + (0,) * (c.dim - 1)
    f = LaurentPolynomial.difference(e1) * g

    got = apply(g, c, verify).constant_value()
    if got != constant:
        raise VerificationFailedError(
            f"g*c is not the constant {constant} on the verify window (got {got})")
    ver = annihilates(f, c, verify)
    if not ver:
        raise VerificationFailedError(
            f"f*c is nonzero on the verify window at {ver.witness}")
    return AnnihilatorReport(
        g=g, constant=constant, f=f,
        shape=shape, sample=sample, verified_on=verify)


def expansion_bound(f: LaurentPolynomial, c_max: int):
    """Coefficient-mass threshold s and modulus r = s! for power substitution.

    For an integer annihilator f of a configuration bounded by c_max, every
    power substitution X -> X^n with n coprime to r again annihilates.  The
    claim is exported for checking, not recomputed here.
    """
    if f.is_zero:
        raise ZeroPolynomialError("expansion bound needs a nonzero polynomial")
    if not f.has_integer_coefficients():
        raise NonIntegerCoefficientsError("expansion bound needs integer coefficients")
    if c_max < 0:
        raise ValueError("c_max must be nonnegative")
    s = int(c_max * f.coefficient_abs_sum())
    return s, math.factorial(s)


@dataclass
class ExpansionCheck:
    prime: int
    threshold: int
    above_bound: bool
    modp_ok: bool
    exact: AnnihilationResult | None


def verify_expansion(f: LaurentPolynomial, c: Configuration, primes,
                     window: Window) -> list:
    """Check power substitutions f(X^p) against c on a window.

    f must annihilate c on the window to begin with.  Every prime gets the
    mod-p congruence check f(X^p)*c = 0 (mod p); primes above the
    coefficient-mass threshold get the exact annihilation check too, and a
    failing exact check is reported in the entry rather than raised.
    """
    base = annihilates(f, c, window)
    if not base:
        raise VerificationFailedError(
            f"f*c is nonzero on the window at {base.witness}")
    c_max = max(abs(c.value(u)) for u in window)
    s, _ = expansion_bound(f, int(c_max))

    out = []
    for p in primes:
        p = int(p)
        if not is_prime(p):
            raise NotPrimeError(f"{p} is not prime")
        fp = substitute_power(f, p)
        pat = apply(fp, c, window)
        modp_ok = all(_as_int(v) % p == 0 for v in pat.values.values())
        exact = annihilates(fp, c, window) if p > s else None
        out.append(ExpansionCheck(
            prime=p, threshold=s, above_bound=p > s,
            modp_ok=modp_ok, exact=exact))
    return out


def _as_int(v):
    if isinstance(v, int):
        return v
    if v.denominator != 1:
        raise NonIntegerCoefficientsError("mod-p check needs integer values")
    return int(v)


def build_radical_witness(f: LaurentPolynomial, r: int, v0) -> LaurentPolynomial:
    """Product of all variables times prod over v in support, v != v0,
    of (X^(r*v) - X^(r*v0)).

    A witness of this shape lies in the annihilator ideal whenever f does
    and r is the matching substitution modulus; it reduces to a pure
    product of difference factors after monomial division.
    """
    if f.is_zero:
        raise ZeroPolynomialError("radical witness needs a nonzero polynomial")
    if r < 1:
        raise ValueError("substitution modulus must be >= 1")
    v0 = tuple(int(x) for x in v0)
    supp = f.support()
    if v0 not in supp:
        raise V0NotInSupportError(f"{v0} is not in the support of f")
    g = LaurentPolynomial.monomial((1,) * f.dim)
    rv0 = vec_scale(r, v0)
    for v in supp:
        if v == v0:
            continue
        g = g * LaurentPolynomial(f.dim, {vec_scale(r, v): 1, rv0: -1})
    return g


def radical_witness_normal_form(f: LaurentPolynomial, r: int, v0):
    """Difference-product shape of the radical witness.

    Returns (monomial_exponent, vectors) with
    build_radical_witness(f, r, v0) = X^monomial * prod (X^w - 1) over the
    vectors w = r*(v - v0), v running over the support minus v0.
    """
    if f.is_zero:
        raise ZeroPolynomialError("radical witness needs a nonzero polynomial")
    if r < 1:
        raise ValueError("substitution modulus must be >= 1")
    v0 = tuple(int(x) for x in v0)
    supp = f.support()
    if v0 not in supp:
        raise V0NotInSupportError(f"{v0} is not in the support of f")
    others = [v for v in supp if v != v0]
    vectors = [vec_scale(r, vec_sub(v, v0)) for v in others]
    monomial = tuple(1 + r * x * len(others) for x in v0)
    return monomial, vectors


def search_difference_annihilator(c: Configuration, max_factors: int,
                                  coord_bound: int, window: Window):
    """Bounded exhaustive search for a vanishing chain of difference steps.

    Candidate steps are the sign-canonical nonzero vectors with coordinates
    in [-coord_bound, coord_bound], in lexicographic order; sequences are
    nondecreasing to kill permutation symmetry, and each step shrinks the
    valid window by the step's extent.  Returns the first certificate in
    shortest-then-lex order, re-verified before reporting, or None.
    """
    if max_factors < 1:
        raise ValueError("max_factors must be >= 1")
    if coord_bound < 1:
        raise ValueError("coord_bound must be >= 1")
    if window.dim != c.dim:
        raise DimensionMismatchError("window vs configuration dimension")

    zero = (0,) * c.dim
    steps = sorted({
        canonical_sign(v)
        for v in itertools.product(range(-coord_bound, coord_bound + 1), repeat=c.dim)
        if v != zero
    })
    base = extract_pattern(c, zero, window)

    def dfs(pat, start: int, depth: int):
        for idx in range(start, len(steps)):
            v = steps[idx]
            try:
                nxt = pattern_difference(pat, v)
            except EmptyResultError:
                raise WindowTooSmallError(
                    f"window exhausted after shrinking by step {v}") from None
            if depth == 1:
                if nxt.is_zero():
                    return [v]
            else:
                found = dfs(nxt, idx, depth - 1)
                if found is not None:
                    return [v, *found]
        return None

    for length in range(1, max_factors + 1):
        found = dfs(base, 0, length)
        if found is not None:
            product = LaurentPolynomial.one(c.dim)
            dom = window
            for v in found:
                product = product * LaurentPolynomial.difference(v)
                dom = dom.intersect(dom.shift(v))
            ver = annihilates(product, c, dom)
            if not ver:
                raise VerificationFailedError(
                    f"search certificate fails re-verification at {ver.witness}")
            return found
    return None
