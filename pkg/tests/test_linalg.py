import random
from fractions import Fraction

from nivatk.linalg import integer_primitive, nullspace_basis, rref, solve_sparse


def test_rref_identity_block():
    mat, pivots = rref([[2, 0, 4], [0, 3, 6]])
    assert pivots == [0, 1]
    assert mat == [[Fraction(1), Fraction(0), Fraction(2)],
                   [Fraction(0), Fraction(1), Fraction(2)]]


def test_rref_dependent_rows_drop():
    mat, pivots = rref([[1, 2], [2, 4], [3, 6]])
    assert pivots == [0]
    assert mat[0] == [Fraction(1), Fraction(2)]


def test_nullspace_of_augmented_pattern_rows():
    # rows (1, p(u1+a), p(u2+a)): two distinct augmented patterns
    rows = [[1, 0, 1, 1, 0], [1, 1, 0, 0, 1]]
    basis = nullspace_basis(rows)
    assert len(basis) == 3
    first = integer_primitive(basis[0])
    assert first == [-1, 1, 1, 0, 0]
    for vec in basis:
        for row in rows:
            assert sum(a * b for a, b in zip(row, vec)) == 0


def test_nullspace_full_rank_is_empty():
    assert nullspace_basis([[1, 0], [0, 1]]) == []


def test_integer_primitive():
    assert integer_primitive([Fraction(2, 3), Fraction(-4, 3), 0]) == [1, -2, 0]
    assert integer_primitive([Fraction(6), Fraction(9)]) == [2, 3]


def test_solve_sparse_simple_system():
    rows = [{0: 1, 1: 1}, {1: 2}]
    sol, bad = solve_sparse(rows, [3, 4], 2)
    assert bad == []
    assert sol == [Fraction(1), Fraction(2)]


def test_solve_sparse_reports_inconsistency():
    sol, bad = solve_sparse([{0: 1}, {0: 1}], [1, 2], 1)
    assert sol is None
    assert bad == [1]


def test_solve_sparse_free_variables_default_to_zero():
    sol, bad = solve_sparse([{0: 1, 2: 1}], [5], 3)
    assert bad == []
    assert sol == [Fraction(5), Fraction(0), Fraction(0)]


def _dense_reference(rows_dense, rhs, ncols):
    """Textbook RREF on the augmented matrix, free variables pinned to 0."""
    aug = [[Fraction(x) for x in row] + [Fraction(b)]
           for row, b in zip(rows_dense, rhs)]
    mat, pivots = rref(aug)
    for row in mat:
        if all(x == 0 for x in row[:ncols]) and row[ncols] != 0:
            return None
    # pivots beyond ncols mean the rhs column is independent: inconsistent
    if any(p == ncols for p in pivots):
        return None
    # in reduced form with free variables pinned to 0 the pivot value is
    # just the rhs entry
    sol = [Fraction(0)] * ncols
    for i, pc in enumerate(pivots):
        sol[pc] = mat[i][ncols]
    return sol


def test_solve_sparse_matches_dense_reference():
    rng = random.Random(23)
    for _ in range(60):
        nrows = rng.randint(1, 8)
        ncols = rng.randint(1, 6)
        rows = []
        dense = []
        for _ in range(nrows):
            row = {}
            for j in range(ncols):
                if rng.random() < 0.5:
                    v = rng.randint(-4, 4)
                    if v:
                        row[j] = v
            rows.append(row)
            dense.append([row.get(j, 0) for j in range(ncols)])
        rhs = [rng.randint(-6, 6) for _ in range(nrows)]
        expected = _dense_reference(dense, rhs, ncols)
        sol, bad = solve_sparse(rows, rhs, ncols)
        if expected is None:
            assert sol is None
            assert bad
        else:
            assert sol == expected
            # and it really solves the system
            for row, b in zip(rows, rhs):
                assert sum(c * sol[j] for j, c in row.items()) == b
