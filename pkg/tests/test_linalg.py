"""Exact linear algebra: rank, kernels, cross-oracle agreement."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from beltrami_jets.linalg import (
    ConstraintMatrix,
    format_rational,
    is_consistent,
    kernel_basis,
    kernel_basis_dense,
    kernel_dimension_dense,
    parse_rational,
    rank,
    rank_dense,
    rank_of_vectors,
)


def _matrix(rows, cols, data):
    entries = {pos: Fraction(v) for pos, v in data.items() if v != 0}
    return ConstraintMatrix(
        rows=rows,
        cols=cols,
        entries=entries,
        col_labels=tuple(range(cols)),
        row_labels=tuple(range(rows)),
    )


def _random_matrix(rng, rows, cols, density=0.35):
    data = {}
    for r in range(rows):
        for c in range(cols):
            if rng.random() < density:
                v = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
                if v:
                    data[(r, c)] = v
    return _matrix(rows, cols, data)


def test_rank_zero_matrix():
    assert rank(_matrix(3, 3, {})) == 0


def test_rank_identity():
    m = _matrix(3, 3, {(i, i): 1 for i in range(3)})
    assert rank(m) == 3
    assert kernel_basis(m).dimension == 0


def test_kernel_of_difference_row():
    m = _matrix(1, 2, {(0, 0): 1, (0, 1): -1})
    basis = kernel_basis(m)
    assert basis.vectors == ((Fraction(1), Fraction(1)),)


def test_degree_one_curl_block_has_rank_three():
    # hand row-reduction: the three coefficient equations of a curl-free
    # linear field are independent; columns a(100..001), b(...), c(...)
    a, b, c = 0, 3, 6
    rows = {
        (0, b + 2): -1, (0, c + 1): 1,   # -b(001) + c(010)
        (1, a + 2): 1, (1, c + 0): -1,   # a(001) - c(100)
        (2, a + 1): -1, (2, b + 0): 1,   # -a(010) + b(100)
    }
    assert rank(_matrix(3, 9, rows)) == 3


def test_stacked_degree_one_system_kernel_dimension():
    # full degree-1 system at sigma = (1,1,-1), written out by hand:
    # curl rows, div row, and the six halved first-integral rows
    s1, s2, s3 = Fraction(1), Fraction(1), Fraction(-1)
    a, b, c = 0, 3, 6  # column offsets for components; order (100),(010),(001)
    rows = [
        {b + 2: -1, c + 1: 1},
        {a + 2: 1, c + 0: -1},
        {a + 1: -1, b + 0: 1},
        {a + 0: 1, b + 1: 1, c + 2: 1},
        {a + 1: s1, b + 0: s2},
        {b + 2: s2, c + 1: s3},
        {a + 2: s1, c + 0: s3},
        {c + 2: s3},
        {b + 1: s2},
        {a + 0: s1},
    ]
    data = {(r, col): v for r, row in enumerate(rows) for col, v in row.items()}
    m = _matrix(10, 9, data)
    basis = kernel_basis(m)
    assert basis.dimension == 2
    # kernel is span{(z,0,x), (0,z,y)}: columns a(001)=2, c(100)=6 / b(001)=5, c(010)=7
    expected = [
        [0, 0, 1, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 1, 0, 1, 0],
    ]
    stacked = [list(v) for v in basis.vectors]
    assert rank_of_vectors(stacked + expected) == 2


def test_rank_nullity_and_cross_oracle_on_random_matrices():
    rng = random.Random(101)
    for _ in range(60):
        nrows = rng.randint(1, 8)
        ncols = rng.randint(1, 8)
        m = _random_matrix(rng, nrows, ncols)
        r = rank(m)
        assert r == rank_dense(m)
        basis = kernel_basis(m)
        assert r + basis.dimension == ncols
        assert basis.dimension == kernel_dimension_dense(m)
        for vec in basis.vectors:
            assert all(v == 0 for v in m.multiply(vec))
        if basis.dimension:
            assert rank_of_vectors([list(v) for v in basis.vectors]) == basis.dimension
        # both kernels span the same space
        dense = kernel_basis_dense(m)
        both = [list(v) for v in basis.vectors] + [list(v) for v in dense]
        assert rank_of_vectors(both) == basis.dimension


def test_kernel_vectors_normalized_to_leading_one():
    rng = random.Random(7)
    for _ in range(20):
        m = _random_matrix(rng, rng.randint(1, 6), rng.randint(2, 7))
        for vec in kernel_basis(m).vectors:
            lead = next(v for v in vec if v != 0)
            assert lead == 1


def test_empty_matrix_kernel_is_full_space():
    m = _matrix(0, 4, {})
    basis = kernel_basis(m)
    assert basis.dimension == 4
    assert rank(m) == 0


def test_consistency_by_rank_comparison():
    m = _matrix(2, 2, {(0, 0): 1, (0, 1): 1, (1, 0): 2, (1, 1): 2})
    assert is_consistent(m, [Fraction(1), Fraction(2)])
    assert not is_consistent(m, [Fraction(1), Fraction(3)])
    # zero-column system: consistent iff rhs vanishes
    m0 = _matrix(2, 0, {})
    assert is_consistent(m0, [Fraction(0), Fraction(0)])
    assert not is_consistent(m0, [Fraction(0), Fraction(1)])


def test_labels_must_match_dimensions():
    with pytest.raises(ValueError):
        ConstraintMatrix(rows=1, cols=2, entries={}, col_labels=("a",), row_labels=("r",))
    with pytest.raises(ValueError):
        ConstraintMatrix(
            rows=1, cols=1, entries={(0, 0): Fraction(0)},
            col_labels=("a",), row_labels=("r",),
        )


def test_rational_round_trip():
    assert format_rational(Fraction(-3, 4)) == "-3/4"
    assert format_rational(Fraction(5)) == "5"
    assert parse_rational("7/2") == Fraction(7, 2)
    assert parse_rational("-8") == Fraction(-8)
    with pytest.raises(ValueError):
        parse_rational("1/0")
    with pytest.raises(ValueError):
        parse_rational("three")
