"""Laurent polynomials with rational coefficients and their action on
configurations.

Exponents are integer tuples of either sign.  The module also carries the
line polynomial machinery: Newton polygon edge directions, extraction of
the full content of line factors in a given direction, and the resulting
factorization f = X^m * phi_1 * ... * phi_k * remainder where each phi_i
collects every line factor of one primitive direction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DimensionMismatchError,
    ZeroPolynomialError,
    ZeroVectorError,
)
from .configurations import Configuration, Pattern, Periodic
from .lattice import (
    Window,
    canonical_sign,
    primitive_vector,
    unimodular_complement,
    vec_add,
    vec_neg,
    vec_scale,
    vec_sub,
)


def box(v):
    """Componentwise absolute extents of a single vector."""
    return tuple(abs(a) for a in v)


class LaurentPolynomial:
    """Finite rational combination of monomials X^e, e in Z^d."""

    __slots__ = ("dim", "terms")

    def __init__(self, dim: int, terms=None):
        self.dim = dim
        clean = {}
        for e, a in (terms or {}).items():
            a = Fraction(a)
            if a != 0:
                e = tuple(int(x) for x in e)
                if len(e) != dim:
                    raise DimensionMismatchError(f"exponent {e} vs dimension {dim}")
                clean[e] = a
        self.terms = clean

    # --- constructors ---

    @classmethod
    def zero(cls, dim):
        return cls(dim, {})

    @classmethod
    def one(cls, dim):
        return cls(dim, {(0,) * dim: 1})

    @classmethod
    def constant(cls, dim, c):
        return cls(dim, {(0,) * dim: Fraction(c)})

    @classmethod
    def monomial(cls, exponent, coeff=1):
        exponent = tuple(int(x) for x in exponent)
        return cls(len(exponent), {exponent: Fraction(coeff)})

    @classmethod
    def variable(cls, index, dim):
        e = [0] * dim
        e[index] = 1
        return cls.monomial(tuple(e))

    @classmethod
    def difference(cls, v):
        """X^v - 1."""
        v = tuple(int(x) for x in v)
        return cls(len(v), {v: 1, (0,) * len(v): -1})

    # --- predicates and views ---

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return all(all(x == 0 for x in e) for e in self.terms)

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def support(self):
        return tuple(sorted(self.terms))

    def constant_coefficient(self) -> Fraction:
        return self.terms.get((0,) * self.dim, Fraction(0))

    def min_exponent(self):
        if self.is_zero:
            raise ZeroPolynomialError("zero polynomial has no support")
        return tuple(min(e[i] for e in self.terms) for i in range(self.dim))

    def max_exponent(self):
        if self.is_zero:
            raise ZeroPolynomialError("zero polynomial has no support")
        return tuple(max(e[i] for e in self.terms) for i in range(self.dim))

    def bbox(self):
        """Componentwise extents of the support box."""
        return vec_sub(self.max_exponent(), self.min_exponent())

    def has_integer_coefficients(self) -> bool:
        return all(a.denominator == 1 for a in self.terms.values())

    def coefficient_abs_sum(self) -> Fraction:
        return sum((abs(a) for a in self.terms.values()), Fraction(0))

    def leading_term(self):
        """(exponent, coefficient) maximal in graded lexicographic order."""
        if self.is_zero:
            raise ZeroPolynomialError("zero polynomial has no leading term")
        e = max(self.terms, key=lambda t: (sum(t), t))
        return e, self.terms[e]

    def line_direction(self):
        """Primitive canonical direction when the support is collinear with
        at least two points, else None."""
        pts = self.support()
        if len(pts) < 2:
            return None
        d = primitive_vector(vec_sub(pts[1], pts[0]))
        for p in pts[2:]:
            dp = vec_sub(p, pts[0])
            if any(
                dp[i] * d[j] != dp[j] * d[i]
                for i in range(self.dim)
                for j in range(i + 1, self.dim)
            ):
                return None
        return canonical_sign(d)

    # --- arithmetic ---

    def _coerce(self, other):
        if isinstance(other, LaurentPolynomial):
            if other.dim != self.dim:
                raise DimensionMismatchError("mixed dimensions")
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPolynomial.constant(self.dim, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, a in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + a
        return LaurentPolynomial(self.dim, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial(self.dim, {e: -a for e, a in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = {}
        for e1, a1 in self.terms.items():
            for e2, a2 in other.terms.items():
                e = vec_add(e1, e2)
                c = out.get(e)
                out[e] = a1 * a2 if c is None else c + a1 * a2
        return LaurentPolynomial(self.dim, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined here")
        result = LaurentPolynomial.one(self.dim)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def scale(self, c):
        c = Fraction(c)
        return LaurentPolynomial(self.dim, {e: a * c for e, a in self.terms.items()})

    def shift(self, v):
        """Multiply by the monomial X^v."""
        return LaurentPolynomial(
            self.dim, {vec_add(e, v): a for e, a in self.terms.items()}
        )

    def substitute_power(self, n: int):
        """f(X^n): every exponent scaled by n."""
        n = int(n)
        if n <= 0:
            raise ValueError("substitution power must be positive")
        return LaurentPolynomial(
            self.dim, {vec_scale(n, e): a for e, a in self.terms.items()}
        )

    def coefficients_mod(self, p: int):
        """Termwise residues of the (integer) coefficients."""
        out = {}
        for e, a in self.terms.items():
            if a.denominator != 1:
                raise ValueError("mod reduction needs integer coefficients")
            out[e] = a.numerator % p
        return {e: r for e, r in out.items() if r}

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPolynomial.constant(self.dim, other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.dim == other.dim and self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        try:
            from .textio import format_poly
        except ImportError:
            return f"LaurentPolynomial({self.terms!r})"
        return format_poly(self)


def substitute_power(f: LaurentPolynomial, n: int) -> LaurentPolynomial:
    return f.substitute_power(n)


def normalize_integer_primitive(f: LaurentPolynomial) -> LaurentPolynomial:
    """Scale by a rational so coefficients are coprime integers and the
    graded lexicographic leading coefficient is positive."""
    if f.is_zero:
        raise ZeroPolynomialError("cannot normalize the zero polynomial")
    denom_lcm = 1
    for a in f.terms.values():
        denom_lcm = denom_lcm * a.denominator // _gcd(denom_lcm, a.denominator)
    nums = [a.numerator * (denom_lcm // a.denominator) for a in f.terms.values()]
    g = 0
    for n in nums:
        g = _gcd(g, abs(n))
    factor = Fraction(denom_lcm, g)
    out = f.scale(factor)
    if out.leading_term()[1] < 0:
        out = -out
    return out


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


# --- action on configurations ------------------------------------------------


def apply(f: LaurentPolynomial, c: Configuration, window: Window) -> Pattern:
    """Pattern of f*c on the window, where (f*c)_u = sum_v a_v c_{u-v}."""
    if f.dim != c.dim or window.dim != c.dim:
        raise DimensionMismatchError("polynomial/configuration/window dimensions")
    if f.is_zero:
        return Pattern(window, {u: 0 for u in window})
    integral = f.has_integer_coefficients()
    items = [
        (e, a.numerator if integral else a) for e, a in sorted(f.terms.items())
    ]
    cache = {}
    val = c.value
    values = {}
    for u in window:
        s = 0
        for e, a in items:
            p = vec_sub(u, e)
            x = cache.get(p)
            if x is None:
                x = val(p)
                cache[p] = x
            s += a * x
        values[u] = s
    return Pattern(window, values)


@dataclass
class AnnihilationResult:
    status: str  # "exact" | "window" | "no"
    witness: tuple | None = None

    def __bool__(self):
        return self.status != "no"


def annihilates(f: LaurentPolynomial, c: Configuration, window: Window) -> AnnihilationResult:
    """Does f*c vanish?

    For Periodic configurations f*c inherits the lattice periods, so
    checking one fundamental domain settles the whole of Z^d and the answer
    is exact.  Otherwise the window is scanned and a clean pass only
    certifies the window itself.
    """
    if isinstance(c, Periodic):
        domain = Window.from_points(c.lattice.residues())
        pat = apply(f, c, domain)
        for u in domain:
            if pat.values[u] != 0:
                return AnnihilationResult("no", witness=u)
        return AnnihilationResult("exact")
    pat = apply(f, c, window)
    for u in window:
        if pat.values[u] != 0:
            return AnnihilationResult("no", witness=u)
    return AnnihilationResult("window")


# --- Newton polygon and line factors -----------------------------------------


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _convex_hull(points):
    """Monotone chain; returns hull vertices counterclockwise, no repeats.

    Collinear input collapses to its two endpoints.
    """
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def newton_polygon_directions(f: LaurentPolynomial):
    """Primitive edge directions of the support hull, deduplicated up to
    sign (first nonzero coordinate positive) and sorted.  Monomials give
    the empty tuple."""
    if f.dim != 2:
        raise DimensionMismatchError("Newton polygon directions need d = 2")
    if f.is_zero:
        raise ZeroPolynomialError("zero polynomial has no Newton polygon")
    hull = _convex_hull(list(f.terms))
    if len(hull) == 1:
        return ()
    dirs = set()
    for i, p in enumerate(hull):
        q = hull[(i + 1) % len(hull)]
        if p == q:
            continue
        dirs.add(canonical_sign(primitive_vector(vec_sub(q, p))))
    return tuple(sorted(dirs))


def _line_coordinates(v):
    """Unimodular coordinates (alpha, beta) with X^e = s^alpha t^beta for
    s = X^v, t = X^w.  Returns the map e -> (alpha, beta) and w."""
    w = unimodular_complement(v)
    v1, v2 = v
    w1, w2 = w

    def coords(e):
        # inverse of the column matrix (v w); its determinant is +1
        return (w2 * e[0] - w1 * e[1], -v2 * e[0] + v1 * e[1])

    return coords, w


def _levels(f, coords):
    """Group terms by the t-level beta; each level is a dense s-poly with
    its own minimal alpha offset."""
    raw = {}
    for e, a in f.terms.items():
        al, be = coords(e)
        raw.setdefault(be, {})[al] = a
    levels = {}
    for be, table in raw.items():
        lo = min(table)
        hi = max(table)
        dense = [table.get(i, Fraction(0)) for i in range(lo, hi + 1)]
        levels[be] = (lo, dense)
    return levels


def _upoly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _upoly_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv = 1 / b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] * inv
        if c:
            q[i] = c
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    return q, _upoly_trim(a)

def _upoly_gcd(a, b):
    a, b = list(a), list(b)
    _upoly_trim(a)
    _upoly_trim(b)
    while b:
        _, r = _upoly_divmod(a, b)
        a, b = b, r
    if not a:
        return a
    inv = 1 / a[-1]
    return [c * inv for c in a]


def line_content(f: LaurentPolynomial, v) -> LaurentPolynomial:
    """Product of all line factors of f in direction v, canonically scaled.

    Rewriting f in unimodular coordinates s = X^v, t = X^w turns every line
    factor of direction v into a polynomial in s alone, so their product is
    the gcd of the t-level coefficient polynomials.  Returns 1 when that
    gcd is trivial.  The result has coprime integer coefficients, positive
    graded lexicographic leading coefficient, and componentwise minimal
    exponent zero.
    """
    if f.dim != 2:
        raise DimensionMismatchError("line content needs d = 2")
    if f.is_zero:
        raise ZeroPolynomialError("zero polynomial")
    v = tuple(int(x) for x in v)
    coords, _ = _line_coordinates(primitive_vector(v))
    levels = _levels(f, coords)
    g = []
    for _, dense in levels.values():
        g = _upoly_gcd(g, dense)
        if len(g) == 1:
            return LaurentPolynomial.one(f.dim)
    if len(g) <= 1:
        return LaurentPolynomial.one(f.dim)
    vv = primitive_vector(v)
    poly = LaurentPolynomial(
        f.dim, {vec_scale(k, vv): a for k, a in enumerate(g) if a}
    )
    poly = poly.shift(vec_neg(poly.min_exponent()))
    return normalize_integer_primitive(poly)


def divide_by_line(f: LaurentPolynomial, phi: LaurentPolynomial, v) -> LaurentPolynomial:
    """Exact quotient f / phi for a line polynomial phi of direction v."""
    if f.dim != 2:
        raise DimensionMismatchError("line division needs d = 2")
    v = primitive_vector(tuple(int(x) for x in v))
    coords, (w1, w2) = _line_coordinates(v)
    phi_levels = _levels(phi, coords)
    if len(phi_levels) != 1:
        raise ValueError(f"{phi} is not a line polynomial of direction {v}")
    beta0, (alpha0, p) = next(iter(phi_levels.items()))
    out = {}
    for be, (lo, dense) in _levels(f, coords).items():
        q, r = _upoly_divmod(dense, p)
        if r:
            raise ValueError("division is not exact")
        qa, qb = lo - alpha0, be - beta0
        for k, a in enumerate(q):
            if a:
                alpha = qa + k
                out[(alpha * v[0] + qb * w1, alpha * v[1] + qb * w2)] = a
    return LaurentPolynomial(f.dim, out)


@dataclass
class LineFactorization:
    """f = X^monomial * prod(factors) * remainder, exactly."""

    monomial: tuple
    factors: tuple  # ((direction, LaurentPolynomial), ...)
    remainder: LaurentPolynomial

    @property
    def line_direction_count(self) -> int:
        return len(self.factors)

    @property
    def directions(self):
        return tuple(d for d, _ in self.factors)

    def product(self) -> LaurentPolynomial:
        out = LaurentPolynomial.monomial(self.monomial)
        for _, phi in self.factors:
            out = out * phi
        return out * self.remainder


def line_factorization(f: LaurentPolynomial) -> LineFactorization:
    """Split off the full line content of every Newton polygon direction.

    One pass suffices: contents in different directions are coprime, so
    extracting one never creates or destroys another.  The remainder has
    trivial line content in every edge direction of its own polygon.
    """
    if f.is_zero:
        raise ZeroPolynomialError("zero polynomial")
    mono = f.min_exponent()
    cur = f.shift(vec_neg(mono))
    factors = []
    if not cur.is_monomial:
        for v in newton_polygon_directions(cur):
            phi = line_content(cur, v)
            if not phi.is_constant:
                factors.append((v, phi))
                cur = divide_by_line(cur, phi, v)
    return LineFactorization(mono, tuple(factors), cur)
