"""Exact rational linear algebra for the solver layers.

Two entry points: a dense reduced row echelon kernel for the small
annihilator systems, and a sparse fraction-free echelon solver for the
larger decomposition systems.  Both scan columns strictly left to right,
so the pivot column set, and with it the canonical free-variables-zero
solution, is independent of row pivoting choices.
"""

from __future__ import annotations

import math
from fractions import Fraction


def rref(rows):
    """Reduced row echelon form over Fraction.  Returns (matrix, pivot_cols)."""
    mat = [[Fraction(x) for x in row] for row in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots = []
    r = 0
    for col in range(ncols):
        sel = None
        for i in range(r, len(mat)):
            if mat[i][col] != 0:
                sel = i
                break
        if sel is None:
            continue
        mat[r], mat[sel] = mat[sel], mat[r]
        inv = 1 / mat[r][col]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col] != 0:
                c = mat[i][col]
                mat[i] = [a - c * b for a, b in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    return mat, pivots


def nullspace_basis(rows):
    """Kernel basis from the reduced echelon parameterization.

    One basis vector per free column, ordered by free column index; vector
    k has a 1 at its free column and the negated echelon entries at the
    pivot columns.
    """
    mat, pivots = rref(rows)
    if not rows:
        return []
    ncols = len(rows[0])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -mat[i][fc]
        basis.append(vec)
    return basis


def integer_primitive(vec):
    """Scale a rational vector to coprime integers (sign preserved)."""
    denom = 1
    for x in vec:
        x = Fraction(x)
        denom = denom * x.denominator // math.gcd(denom, x.denominator)
    ints = [int(Fraction(x) * denom) for x in vec]
    g = 0
    for n in ints:
        g = math.gcd(g, abs(n))
    if g > 1:
        ints = [n // g for n in ints]
    return ints


def solve_sparse(rows, rhs, ncols):
    """Solve a sparse integer system, free variables pinned to zero.

    rows: list of {column: int coefficient}; rhs: rational right hand
    sides.  Forward elimination is fraction-free (integer row combinations
    with gcd stripping); columns are processed left to right so the pivot
    set matches reduced echelon form and the returned solution is the
    canonical one.  Returns (solution, inconsistent) where solution is a
    list of Fractions or None, and inconsistent lists the row indices that
    reduced to 0 = nonzero.
    """
    work = [dict(r) for r in rows]
    b = [Fraction(x) for x in rhs]
    col_rows = {}
    for i, row in enumerate(work):
        for c in row:
            col_rows.setdefault(c, set()).add(i)
    active = set(range(len(work)))
    pivot_of_col = {}

    for col in range(ncols):
        members = col_rows.get(col)
        if not members:
            continue
        cand = [i for i in members if i in active]
        if not cand:
            continue
        piv = min(cand, key=lambda i: (len(work[i]), i))
        active.discard(piv)
        pivot_of_col[col] = piv
        prow, pval = work[piv], work[piv][col]
        for i in cand:
            if i == piv:
                continue
            row = work[i]
            rval = row[col]
            g = math.gcd(abs(pval), abs(rval))
            a, c = pval // g, rval // g
            # row <- a*row - c*prow, eliminating col
            for pc, pv in prow.items():
                nv = a * row.get(pc, 0) - c * pv
                if nv:
                    row[pc] = nv
                    col_rows.setdefault(pc, set()).add(i)
                elif pc in row:
                    del row[pc]
                    col_rows[pc].discard(i)
            for rc in list(row):
                if rc not in prow:
                    row[rc] = a * row[rc]
            b[i] = a * b[i] - c * b[piv]
            _strip_content(row, b, i)
        members.clear()
        members.add(piv)

    inconsistent = [i for i in active if not work[i] and b[i] != 0]
    if inconsistent:
        return None, inconsistent

    solution = [Fraction(0)] * ncols
    for col in sorted(pivot_of_col, reverse=True):
        i = pivot_of_col[col]
        row = work[i]
        acc = b[i]
        for c, v in row.items():
            if c != col:
                acc -= v * solution[c]
        solution[col] = acc / row[col]
    return solution, []


def _strip_content(row, b, i):
    g = 0
    for v in row.values():
        g = math.gcd(g, abs(v))
        if g == 1:
            return
    if g > 1:
        bi = b[i] / g
        for c in row:
            row[c] //= g
        b[i] = bi
