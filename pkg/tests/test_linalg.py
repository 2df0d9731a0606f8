import random
from fractions import Fraction

from homfilt.linalg import (
    Matrix,
    echelon_with_pivot_order,
    echelon_with_pivots,
    inverse,
    kernel_basis,
    kronecker,
    rank,
    solve_affine,
)


def M(rows):
    return Matrix.from_rows(rows)


def test_rank_examples():
    assert rank(Matrix.identity(2)) == 2
    assert rank(Matrix.zero(2, 2)) == 0
    assert rank(M([[1, 2], [2, 4]])) == 1


def test_kernel_examples():
    assert kernel_basis(Matrix.identity(3)).cols == 0
    z = kernel_basis(Matrix.zero(2, 2))
    assert z.cols == 2 and rank(z) == 2
    k = kernel_basis(M([[1, 2], [2, 4]]))
    assert k.cols == 1
    assert (M([[1, 2], [2, 4]]) @ k).is_zero()
    # proportional to (2, -1)
    assert k.entries[0][0] * Fraction(-1) == k.entries[1][0] * Fraction(2)


def test_solve_examples():
    sol, ker = solve_affine(Matrix.identity(3), [1, 2, 3])
    assert sol == (1, 2, 3) and ker.cols == 0
    sol, _ = solve_affine(Matrix.zero(2, 2), [1, 0])
    assert sol is None
    sol, ker = solve_affine(M([[1, 1]]), [3])
    assert sol == (3, 0)
    assert ker.cols == 1
    assert ker.entries[0][0] == -ker.entries[1][0]


def test_echelon_with_pivot_order():
    assert echelon_with_pivot_order(Matrix.identity(2), [0, 1]) == Matrix.identity(2)
    m = M([[0, 1], [1, 0]])
    red, pivots = echelon_with_pivots(m, [1, 0])
    assert pivots[0][1] == 1  # column 2 scanned first
    assert red == m
    # natural order gives the standard reduced echelon form
    red2 = echelon_with_pivot_order(M([[2, 4], [1, 3]]), [0, 1])
    assert red2 == Matrix.identity(2)


def test_echelon_rejects_bad_permutation():
    import pytest
    with pytest.raises(ValueError):
        echelon_with_pivot_order(Matrix.identity(2), [0, 0])


def test_rank_nullity_and_kernel_exactness_random():
    rng = random.Random(7)
    for _ in range(60):
        r, c = rng.randint(0, 4), rng.randint(0, 4)
        m = Matrix(r, c, [[Fraction(rng.randint(-3, 3), rng.randint(1, 3))
                           for _ in range(c)] for _ in range(r)])
        k = kernel_basis(m)
        assert rank(m) + k.cols == c
        assert (m @ k).is_zero()


def test_solve_consistency_matches_augmented_rank():
    rng = random.Random(11)
    for _ in range(60):
        r, c = rng.randint(1, 4), rng.randint(1, 4)
        m = Matrix(r, c, [[rng.randint(-2, 2) for _ in range(c)] for _ in range(r)])
        b = [rng.randint(-2, 2) for _ in range(r)]
        aug = m.hstack(Matrix(r, 1, [[x] for x in b]))
        sol, _ = solve_affine(m, b)
        assert (sol is not None) == (rank(aug) == rank(m))
        if sol is not None:
            assert list(m.apply(sol)) == [Fraction(x) for x in b]


def test_exactness_independent_evaluation_orders():
    # one hundred random products summed three ways: left-to-right, reversed,
    # and by pairwise tree reduction; exact arithmetic must give bit-identical
    # reduced fractions
    rng = random.Random(13)
    terms = [Fraction(rng.randint(-9, 9), rng.randint(1, 9))
             * Fraction(rng.randint(-9, 9), rng.randint(1, 9))
             for _ in range(100)]
    left = Fraction(0)
    for t in terms:
        left = left + t
    right = Fraction(0)
    for t in reversed(terms):
        right = right + t
    work = list(terms)
    while len(work) > 1:
        work = [work[i] + work[i + 1] for i in range(0, len(work) - 1, 2)] + (
            [work[-1]] if len(work) % 2 else [])
    tree = work[0]
    assert (left.numerator, left.denominator) == (right.numerator, right.denominator)
    assert (left.numerator, left.denominator) == (tree.numerator, tree.denominator)


def test_inverse_and_kronecker():
    m = M([[1, 1], [0, 1]])
    assert m @ inverse(m) == Matrix.identity(2)
    a, b = M([[1, 2]]), M([[3], [4]])
    k = kronecker(a, b)
    assert (k.rows, k.cols) == (2, 2)
    assert k.entries[0] == (3, 6)
    assert k.entries[1] == (4, 8)
