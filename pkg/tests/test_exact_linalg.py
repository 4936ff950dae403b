import math
import random
from fractions import Fraction

import pytest
import sympy

from kspt.exact_linalg import (
    determinant,
    gram_schmidt,
    inner_product,
    norm_squared,
    null_space_basis,
    orthocomplement_basis,
    primitive,
    rank,
    row_echelon,
)


def test_inner_product_canonical_orthogonality():
    assert inner_product((1, 0, 0, 0), (0, 1, 0, 0)) == 0


def test_inner_product_tetrad_pair():
    assert inner_product((-1, 1, 1, 1), (1, 1, 1, -1)) == 0


def test_inner_product_plain_arithmetic():
    assert inner_product((1, 1, 0, 0), (1, 1, 1, 1)) == 2


def test_inner_product_dimension_mismatch():
    with pytest.raises(ValueError):
        inner_product((1, 0), (1, 0, 0))


def test_inner_product_rational_entries():
    assert inner_product((Fraction(1, 2), Fraction(1, 3)), (2, 3)) == 2


def test_inner_product_symmetric_bilinear():
    rng = random.Random(7)
    for _ in range(50):
        dim = rng.randint(2, 5)
        u = tuple(Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(dim))
        v = tuple(Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(dim))
        w = tuple(Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(dim))
        c = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        assert inner_product(u, v) == inner_product(v, u)
        lhs = inner_product(tuple(c * ui + wi for ui, wi in zip(u, w)), v)
        assert lhs == c * inner_product(u, v) + inner_product(w, v)


def test_norm_squared():
    assert norm_squared((1, -2, 2)) == 9
    assert norm_squared((Fraction(1, 2), Fraction(1, 2))) == Fraction(1, 2)


def test_primitive_clears_denominators_and_sign():
    assert primitive((Fraction(-1, 2), Fraction(1, 4), 0)) == (2, -1, 0)
    assert primitive((0, -3, 6)) == (0, 1, -2)
    assert primitive((4, 6)) == (2, 3)
    # idempotent
    assert primitive(primitive((Fraction(-3, 7), Fraction(9, 14)))) == primitive(
        (Fraction(-3, 7), Fraction(9, 14))
    )


def test_rank_identity():
    eye = [[1 if i == j else 0 for j in range(4)] for i in range(4)]
    assert rank(eye) == 4


def test_rank_gram_matrix_of_tetrad():
    tetrad = [(-1, 1, 1, 1), (1, 1, 1, -1), (1, 0, 0, 1), (0, 1, -1, 0)]
    gram = [[inner_product(u, v) for v in tetrad] for u in tetrad]
    assert rank(gram) == 4


def test_rank_zero_and_rectangular():
    assert rank([[0, 0, 0], [0, 0, 0]]) == 0
    assert rank([[1, 2, 3]]) == 1


def test_null_space_zero_matrix():
    basis = null_space_basis([[0, 0, 0], [0, 0, 0]])
    assert len(basis) == 3


def test_null_space_and_rank_random_cross_check():
    rng = random.Random(11)
    for _ in range(30):
        nrows = rng.randint(1, 5)
        ncols = rng.randint(1, 6)
        m = [[rng.randint(-4, 4) for _ in range(ncols)] for _ in range(nrows)]
        r = rank(m)
        basis = null_space_basis(m)
        assert r + len(basis) == ncols
        for x in basis:
            for row in m:
                assert sum(a * b for a, b in zip(row, x)) == 0
            g = 0
            for e in x:
                g = math.gcd(g, abs(e))
            assert g == 1
            first = next(e for e in x if e != 0)
            assert first > 0


def test_rank_matches_sympy():
    rng = random.Random(13)
    for _ in range(20):
        nrows = rng.randint(1, 5)
        ncols = rng.randint(1, 5)
        m = [[rng.randint(-5, 5) for _ in range(ncols)] for _ in range(nrows)]
        assert rank(m) == sympy.Matrix(m).rank()


def test_null_space_dimension_matches_sympy():
    rng = random.Random(17)
    for _ in range(15):
        m = [[rng.randint(-3, 3) for _ in range(5)] for _ in range(3)]
        assert len(null_space_basis(m)) == len(sympy.Matrix(m).nullspace())


def test_row_echelon_pivots():
    rows, pivots = row_echelon([[0, 2, 1], [0, 4, 2], [1, 0, 0]])
    assert len(rows) == len(pivots) == 2
    assert pivots[0] == 0


def test_determinant_basics():
    assert determinant([[1, 0], [0, 1]]) == 1
    assert determinant([[1, 2], [1, 2]]) == 0
    assert determinant([[0, 1], [1, 0]]) == -1
    with pytest.raises(ValueError):
        determinant([[1, 2, 3], [4, 5, 6]])


def test_determinant_rational_and_sympy():
    rng = random.Random(19)
    for _ in range(20):
        dim = rng.randint(2, 5)
        m = [[rng.randint(-4, 4) for _ in range(dim)] for _ in range(dim)]
        assert determinant(m) == sympy.Matrix(m).det()
    m = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 5), Fraction(1, 7)]]
    assert determinant(m) == Fraction(1, 14) - Fraction(1, 15)


def test_orthocomplement_of_two_canonical():
    basis = orthocomplement_basis([(1, 0, 0, 0), (0, 1, 0, 0)], 4)
    assert basis == [(0, 0, 0, 1), (0, 0, 1, 0)]


def test_orthocomplement_of_single_vector():
    basis = orthocomplement_basis([(0, 1, 1)], 3)
    assert (1, 0, 0) in basis
    assert (0, 1, -1) in basis
    assert len(basis) == 2


def test_orthocomplement_of_full_basis_is_empty():
    assert orthocomplement_basis([(1, 0), (0, 1)], 2) == []


def test_orthocomplement_of_empty_input():
    basis = orthocomplement_basis([], 3)
    assert basis == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]


def test_orthocomplement_properties_random():
    rng = random.Random(23)
    for _ in range(25):
        dim = rng.randint(2, 5)
        k = rng.randint(1, dim)
        vs = [tuple(rng.randint(-3, 3) for _ in range(dim)) for _ in range(k)]
        vs = [v for v in vs if any(v)]
        if not vs:
            continue
        basis = orthocomplement_basis(vs, dim)
        for b in basis:
            for v in vs:
                assert inner_product(b, v) == 0
        for i in range(len(basis)):
            for j in range(i + 1, len(basis)):
                assert inner_product(basis[i], basis[j]) == 0
        assert rank([list(v) for v in vs] + [list(b) for b in basis]) == dim
        assert basis == sorted(basis)


def test_gram_schmidt_orthogonalizes():
    out = gram_schmidt([(1, 1, 0), (1, 0, 0), (2, 2, 0)])
    assert len(out) == 2
    assert inner_product(out[0], out[1]) == 0
