"""Block-complexity lower bounds, empirical scanning, and periodicity classes.

The bound calculators are exact rational formula evaluations keyed by the
extents (m, n) of an annihilator's support box and the block size (M, N).
The scanner counts distinct M x N blocks over a sample with early exit,
reporting per-block verdicts against the M*N threshold; a sampled count is
always a certified lower bound, never an upper one.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .configurations import Configuration, periodicity_test
from .errors import (
    BlockTooSmallError,
    DegenerateDirectionError,
    DimensionMismatchError,
    NonPrimitiveError,
    ParallelDirectionsError,
    ZeroAreaError,
    ZeroDenominatorError,
    ZeroVectorError,
)
from .lattice import (
    Window,
    canonical_sign,
    is_zero_vector,
    primitive_vector,
    vec_add,
    vec_scale,
    vec_sub,
)
from .laurent import LaurentPolynomial, LineFactorization


def bound_disjoint_lines(m: int, n: int, M: int, N: int) -> int:
    """Lower bound M*n + m*N + m*n on the number of disjoint block lines."""
    if m < 0 or n < 0 or M < 0 or N < 0:
        raise ValueError("extents must be nonnegative")
    if m == 0 and n == 0:
        raise DegenerateDirectionError("direction extents are both zero")
    return M * n + m * N + m * n


def bound_line_size(m: int, n: int, M: int, N: int, S: int) -> Fraction:
    """Strict lower bound (M*n + m*N)/S on patterns per block line."""
    if m < 0 or n < 0 or M < 0 or N < 0:
        raise ValueError("extents must be nonnegative")
    if S == 0:
        raise ZeroAreaError("direction pair spans no area")
    if S < 0:
        raise ValueError("S must be positive")
    return Fraction(M * n + m * N, S)


def bound_two_directions(v1, v2, M: int, N: int) -> Fraction:
    """Two-direction block count bound from the box extents of v1 and v2.

    With (m_i, n_i) the extents of v_i, the value is
    (M*n1 + m1*N)(M*n2 + m2*N) / (m1*n2 + m2*n1); it reads as a strict
    lower bound on the complexity of the (M+m1+m2) x (N+n1+n2) block.
    Symmetric in the two directions.
    """
    v1 = tuple(int(x) for x in v1)
    v2 = tuple(int(x) for x in v2)
    if len(v1) != 2 or len(v2) != 2:
        raise DimensionMismatchError("two-direction bound is two-dimensional")
    if M < 0 or N < 0:
        raise ValueError("block extents must be nonnegative")
    for v in (v1, v2):
        if is_zero_vector(v):
            raise ZeroVectorError("direction must be nonzero")
        if primitive_vector(v) not in (v, vec_scale(-1, v)):
            raise NonPrimitiveError(f"{v} is not primitive")
    if v1[0] * v2[1] - v1[1] * v2[0] == 0:
        raise ParallelDirectionsError(f"{v1} and {v2} are parallel")
    m1, n1 = abs(v1[0]), abs(v1[1])
    m2, n2 = abs(v2[0]), abs(v2[1])
    den = m1 * n2 + m2 * n1
    if den == 0:
        raise ZeroDenominatorError("degenerate direction pair")
    return Fraction((M * n1 + m1 * N) * (M * n2 + m2 * N), den)


@dataclass
class BoundReport:
    M: int
    N: int
    bbox_f: tuple
    bounds: list
    applicable: tuple
    directions: tuple
    alpha: Fraction | None = None
    best: tuple | None = None
    conditional: tuple = ()
    pair_bounds: tuple = ()


def corollary_report(f: LaurentPolynomial, lf: LineFactorization | None,
                     M: int, N: int) -> BoundReport:
    """Collect the applicable block-complexity bounds for an M x N block.

    cor-a, value (M-m)(N-n), always applies once the block fits the
    annihilator's support box (m, n).  cor-b-pair applies per pair of line
    factor directions that are both off-axis, re-indexed to the same block
    size.  cor-c, value 2(M-m)(N-n), applies when at least three line
    directions are present; it is conditional on the direction count
    agreeing with the true one-periodic direction count, which this module
    never claims to know exactly.
    """
    if f.dim != 2:
        raise DimensionMismatchError("bound reports are two-dimensional")
    m, n = f.bbox()
    if M < m or N < n:
        raise BlockTooSmallError(
            f"{M}x{N} block cannot contain the (m,n)=({m},{n}) support box")

    base = Fraction((M - m) * (N - n))
    bounds = [("cor-a", base)]
    applicable = ["cor-a"]
    conditional = []
    dirs = tuple(lf.directions) if lf is not None else ()

    pair_bounds = []
    for v1, v2 in itertools.combinations(dirs, 2):
        if v1[0] == 0 or v1[1] == 0 or v2[0] == 0 or v2[1] == 0:
            continue
        m1, n1 = abs(v1[0]), abs(v1[1])
        m2, n2 = abs(v2[0]), abs(v2[1])
        Mp, Np = M - m1 - m2, N - n1 - n2
        val = Fraction((Mp * n1 + m1 * Np) * (Mp * n2 + m2 * Np), m1 * n2 + m2 * n1)
        bounds.append(("cor-b-pair", val))
        pair_bounds.append(((v1, v2), val))
    if pair_bounds:
        applicable.append("cor-b-pair")

    alpha = None
    if pair_bounds and base > 0:
        alpha = max(val for _, val in pair_bounds) / base

    if lf is not None and lf.line_direction_count >= 3:
        bounds.append(("cor-c", 2 * base))
        applicable.append("cor-c")
        conditional.append("cor-c")

    best = max(bounds, key=lambda b: b[1])
    return BoundReport(
        M=M, N=N, bbox_f=(m, n), bounds=bounds,
        applicable=tuple(applicable), directions=dirs,
        alpha=alpha, best=best, conditional=tuple(conditional),
        pair_bounds=tuple(pair_bounds))


@dataclass
class ScanRow:
    M: int
    N: int
    lower_bound_count: int
    threshold: int
    verdict: str  # "ExceedsMN" | "Inconclusive"


def nivat_scan(c: Configuration, M_range, N_range, sample: Window,
               threads: int = 1) -> list:
    """Sampled block-count audit over a grid of block sizes.

    For every (M, N) the count of distinct M x N blocks anchored in the
    sample is accumulated until it exceeds M*N (verdict ExceedsMN) or the
    sample is exhausted (verdict Inconclusive, count = full sampled value).
    Inconclusive never asserts the threshold is met globally.  The value
    grid is computed once and shared across block sizes; worker threads,
    when requested, partition the (M, N) cells and results keep the
    sequential order.
    """
    Ms = [int(M) for M in M_range]
    Ns = [int(N) for N in N_range]
    if not Ms or not Ns:
        raise ValueError("scan ranges must be nonempty")
    if min(Ms) < 1 or min(Ns) < 1:
        raise ValueError("block extents must be positive")
    if c.dim != 2 or sample.dim != 2:
        raise DimensionMismatchError("scan works on two-dimensional data")

    (alo0, alo1), (ahi0, ahi1) = sample.bounds()
    max_m, max_n = max(Ms), max(Ns)
    grid = [
        [c.value((i, j)) for j in range(alo1, ahi1 + max_n)]
        for i in range(alo0, ahi0 + max_m)
    ]
    anchors = None if sample.is_box else sorted(sample)

    def run_cell(MN):
        M, N = MN
        threshold = M * N
        seen = set()
        if anchors is None:
            for i in range(ahi0 - alo0 + 1):
                for j in range(ahi1 - alo1 + 1):
                    seen.add(tuple(tuple(grid[i + a][j:j + N]) for a in range(M)))
                    if len(seen) > threshold:
                        return ScanRow(M, N, len(seen), threshold, "ExceedsMN")
        else:
            for (ai, aj) in anchors:
                i, j = ai - alo0, aj - alo1
                seen.add(tuple(tuple(grid[i + a][j:j + N]) for a in range(M)))
                if len(seen) > threshold:
                    return ScanRow(M, N, len(seen), threshold, "ExceedsMN")
        return ScanRow(M, N, len(seen), threshold, "Inconclusive")

    cells = [(M, N) for M in Ms for N in Ns]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(run_cell, cells))
    return [run_cell(mn) for mn in cells]


def scan_csv(rows) -> str:
    """CSV rendering of scan rows: M,N,count,threshold,verdict."""
    out = ["M,N,count,threshold,verdict"]
    for r in rows:
        out.append(f"{r.M},{r.N},{r.lower_bound_count},{r.threshold},{r.verdict}")
    return "\n".join(out) + "\n"


def _line_rep(anchor, step):
    i0 = next(k for k, x in enumerate(step) if x != 0)
    t = anchor[i0] // step[i0]
    return vec_sub(anchor, vec_scale(t, step))


def line_pattern_census(c: Configuration, shape: Window, v, sample: Window):
    """Distinct shape-pattern counts per anchor line in direction v.

    Anchors of the sample are grouped into lines w + Zv; each line reports
    how many distinct patterns it shows.  Returned sorted by the line's
    canonical representative.
    """
    v = tuple(int(x) for x in v)
    if len(v) != c.dim or shape.dim != c.dim or sample.dim != c.dim:
        raise DimensionMismatchError("direction/shape/sample vs configuration")
    if is_zero_vector(v):
        raise ZeroVectorError("census direction must be nonzero")
    step = canonical_sign(v)
    offsets = list(shape)

    lo, hi = sample.bounds()
    slo = tuple(min(u[k] for u in offsets) for k in range(c.dim))
    shi = tuple(max(u[k] for u in offsets) for k in range(c.dim))
    table = {
        p: c.value(p)
        for p in Window.box(vec_add(lo, slo), vec_add(hi, shi))
    }

    groups: dict = {}
    for a in sample:
        key = tuple(table[vec_add(a, u)] for u in offsets)
        groups.setdefault(_line_rep(a, step), set()).add(key)
    return sorted((rep, len(keys)) for rep, keys in groups.items())


def disjoint_pattern_line_count(c: Configuration, shape: Window, v, sample: Window) -> int:
    """Greedy count of lines with pairwise disjoint pattern sets.

    Lines are visited in canonical order and kept only when their pattern
    set avoids everything already kept, so the result is a deterministic
    lower bound; it is exact whenever distinct lines have identical or
    disjoint pattern sets, the situation the censused bounds address.
    """
    v = tuple(int(x) for x in v)
    if is_zero_vector(v):
        raise ZeroVectorError("census direction must be nonzero")
    step = canonical_sign(v)
    offsets = list(shape)
    lo, hi = sample.bounds()
    slo = tuple(min(u[k] for u in offsets) for k in range(c.dim))
    shi = tuple(max(u[k] for u in offsets) for k in range(c.dim))
    table = {
        p: c.value(p)
        for p in Window.box(vec_add(lo, slo), vec_add(hi, shi))
    }
    groups: dict = {}
    for a in sample:
        key = tuple(table[vec_add(a, u)] for u in offsets)
        groups.setdefault(_line_rep(a, step), set()).add(key)

    used: set = set()
    kept = 0
    for rep in sorted(groups):
        patterns = groups[rep]
        if patterns & used:
            continue
        used |= patterns
        kept += 1
    return kept


@dataclass
class PeriodicityClassReport:
    label: str  # DoublyPeriodicCandidate | OnePeriodicCandidate | NonPeriodicCandidate | Unknown
    certain: bool
    direction_count: int | None
    verified_periods: tuple = ()


def periodicity_class(search_result=None, lf: LineFactorization | None = None,
                      config: Configuration | None = None, periods=(),
                      sample: Window | None = None) -> PeriodicityClassReport:
    """Classify periodicity from direction counts and exact period tests.

    The direction count of an annihilator(s) upper-bounds the number of
    one-periodic directions, so 0 maps to a doubly periodic candidate, 1 to
    one-periodic, 2+ to non-periodic.  Candidate labels only firm up when
    supplied period vectors re-verify exactly against the configuration:
    one exact period upgrades to a certain OnePeriodic call (overriding the
    proxy), two independent ones to a certain DoublyPeriodic call.
    """
    dirs = None
    if search_result is not None:
        dirs = {canonical_sign(primitive_vector(tuple(v))) for v in search_result}
    if lf is not None:
        lf_dirs = set(lf.directions)
        dirs = lf_dirs if dirs is None else dirs & lf_dirs

    confirmed = []
    if periods:
        if config is None:
            raise ValueError("period vectors need the configuration to verify against")
        for v in periods:
            v = tuple(int(x) for x in v)
            if periodicity_test(config, v, sample).status == "periodic":
                confirmed.append(v)

    if confirmed:
        independent = _rank_at_least_2(confirmed)
        if independent:
            return PeriodicityClassReport(
                "DoublyPeriodicCandidate", True,
                len(dirs) if dirs is not None else None, tuple(confirmed))
        return PeriodicityClassReport(
            "OnePeriodicCandidate", True,
            len(dirs) if dirs is not None else None, tuple(confirmed))

    if dirs is None:
        return PeriodicityClassReport("Unknown", False, None)
    count = len(dirs)
    if count == 0:
        label = "DoublyPeriodicCandidate"
    elif count == 1:
        label = "OnePeriodicCandidate"
    else:
        label = "NonPeriodicCandidate"
    return PeriodicityClassReport(label, False, count)


def _rank_at_least_2(vectors) -> bool:
    dirs = {canonical_sign(primitive_vector(v)) for v in vectors if not is_zero_vector(v)}
    return len(dirs) >= 2
