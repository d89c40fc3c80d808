"""Test defect_topology.intlin
"""
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from defect_topology.exceptions import DimensionMismatch, NonIntegerEntry
from defect_topology.intlin import (IntMat, det, inverse_unimodular, mat_mul, mat_pow,
                                    quotient, snf)

M_HEX = IntMat([[1, 1], [-1, 0]])
M_SQ = IntMat([[0, 1], [-1, 0]])


def test_mat_mul():
    assert mat_mul(IntMat.identity(2), M_HEX) == M_HEX
    assert M_HEX @ M_HEX == IntMat([[0, 1], [-1, -1]])
    assert IntMat.identity(2) - M_HEX @ M_HEX == IntMat([[1, -1], [1, 2]])
    assert mat_pow(M_SQ, 4) == IntMat.identity(2)
    assert mat_pow(M_HEX, 6) == IntMat.identity(2)


def test_mat_mul_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        mat_mul(IntMat([[1, 2, 3]]), IntMat([[1, 2]]))
    with pytest.raises(DimensionMismatch):
        IntMat([[1, 2], [3]])


def test_exact_entries():
    big = IntMat([[10 ** 30, 1], [0, 1]])
    assert (big @ big)[0, 0] == 10 ** 60


def test_negative_power():
    inv = mat_pow(M_HEX, -1)
    assert inv @ M_HEX == IntMat.identity(2)
    assert inverse_unimodular(M_HEX) == inv
    assert mat_pow(M_HEX, -2) == mat_pow(M_HEX, 4)


def test_det():
    assert det(M_HEX) == 1
    assert det(IntMat([[1, -1], [1, 1]])) == 2
    assert det(IntMat([[0, 1, 2], [1, 0, 3], [4, -3, 8]])) == -2
    assert det(IntMat.zeros(2, 2)) == 0


def _check_snf(a):
    dec = snf(a)
    assert dec.U @ a @ dec.V == dec.D
    assert abs(det(dec.U)) == 1
    assert abs(det(dec.V)) == 1
    assert dec.D.is_diagonal()
    diag = dec.diagonal
    assert all(x >= 0 for x in diag)
    for x, y in zip(diag, diag[1:]):
        assert (y == 0) if x == 0 else (y % x == 0)
    return diag


@pytest.mark.parametrize("entries,diag", [
    ([[1, 0], [0, 1]], [1, 1]),
    ([[1, -1], [1, 1]], [1, 2]),
    ([[1, -1], [1, 2]], [1, 3]),
    ([[2, 0], [0, 2]], [2, 2]),
    ([[2, 0], [0, 3]], [1, 6]),
    ([[0, 0], [0, 0]], [0, 0]),
    ([[2, 4, 4], [-6, 6, 12], [10, -4, -16]], [2, 6, 12]),
])
def test_snf_examples(entries, diag):
    assert _check_snf(IntMat(entries)) == diag


def test_snf_is_deterministic():
    a = IntMat([[4, 6], [10, -8]])
    assert snf(a) == snf(a)


small = st.integers(min_value=-12, max_value=12)


@settings(max_examples=200, deadline=None)
@given(st.lists(small, min_size=4, max_size=4))
def test_snf_random_2x2(xs):
    a = IntMat([xs[:2], xs[2:]])
    diag = _check_snf(a)
    prod = diag[0] * diag[1]
    assert prod == abs(det(a))


@settings(max_examples=50, deadline=None)
@given(st.lists(small, min_size=6, max_size=6))
def test_snf_random_rectangular(xs):
    _check_snf(IntMat([xs[:3], xs[3:]]))
    _check_snf(IntMat([xs[:2], xs[2:4], xs[4:]]))


def test_quotient_finite():
    q = quotient(IntMat([[2, 0], [0, 2]]))
    assert q.invariant_factors == (2, 2)
    assert q.order() == 4
    assert q.coset_representatives() == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert q.coordinates((3, 5)) == q.coordinates((1, 1))
    assert q.coordinates((0, 1)) != q.coordinates((1, 0))


def test_quotient_cyclic():
    q = quotient(IntMat([[1, -1], [1, 1]]))
    assert q.invariant_factors == (2,)
    assert q.coset_representatives() == [(0, 0), (0, 1)]
    assert q.representative((1, 0)) == (0, 1)
    assert q.representative((1, 1)) == (0, 0)

    q = quotient(IntMat([[1, -1], [1, 2]]))
    assert q.invariant_factors == (3,)
    assert len(q.coset_representatives()) == 3


def test_quotient_infinite():
    q = quotient(IntMat.zeros(2, 2))
    assert q.invariant_factors == (0, 0)
    assert q.free_rank == 2
    assert not q.is_finite()
    assert q.order() is None
    assert q.representative((3, -7)) == (3, -7)
    with pytest.raises(ValueError):
        q.coset_representatives()


def test_quotient_trivial():
    q = quotient(IntMat.identity(2))
    assert q.invariant_factors == ()
    assert q.coset_representatives() == [(0, 0)]
    assert q.representative((5, 9)) == (0, 0)


@settings(max_examples=100, deadline=None)
@given(st.lists(small, min_size=4, max_size=4),
       st.tuples(small, small), st.tuples(small, small))
def test_quotient_coordinates_respect_image(xs, x, m):
    l = IntMat([xs[:2], xs[2:]])
    q = quotient(l)
    shifted = tuple(a + b for a, b in zip(x, l.apply(m)))
    assert q.coordinates(x) == q.coordinates(shifted)
    assert q.coordinates(x) == q.coordinates(q.representative(x))
    zero_factors = sum(1 for d in q.invariant_factors if d == 0)
    assert zero_factors == (2 if l == IntMat.zeros(2, 2) else (1 if det(l) == 0 else 0))


@pytest.mark.parametrize("entries", [
    [[0.5, 1], [-1, 0]],
    [[1.0, 0], [0, 1]],
    [["a", 0], [0, 1]],
    [[True, 0], [0, 1]],
])
def test_non_integer_entries(entries):
    with pytest.raises(NonIntegerEntry):
        IntMat(entries)


def test_integral_entries_are_accepted():
    assert IntMat([[Fraction(4, 2), np.int64(3)]]).to_list() == [[2, 3]]
    assert IntMat.from_array(np.array([[1, 2]], dtype=object)) == IntMat([[1, 2]])


matrix_2x2 = st.lists(small, min_size=4, max_size=4).map(lambda xs: IntMat([xs[:2], xs[2:]]))


@settings(max_examples=100, deadline=None)
@given(matrix_2x2, matrix_2x2, matrix_2x2)
def test_mat_mul_associative(a, b, c):
    assert (a @ b) @ c == a @ (b @ c)


@settings(max_examples=50, deadline=None)
@given(st.lists(small, min_size=3, max_size=3), st.lists(small, min_size=6, max_size=6))
def test_mat_mul_associative_rectangular(xs, ys):
    a = IntMat([xs])
    b = IntMat([ys[:2], ys[2:4], ys[4:]])
    c = IntMat([[ys[0]], [ys[5]]])
    assert (a @ b) @ c == a @ (b @ c)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(min_value=-8, max_value=8), min_size=4, max_size=4)
       .filter(lambda xs: 0 < abs(xs[0] * xs[3] - xs[1] * xs[2]) <= 64))
def test_quotient_coset_count_is_det(xs):
    l = IntMat([xs[:2], xs[2:]])
    q = quotient(l)
    n = abs(det(l))
    assert q.order() == n
    assert len(q.coset_representatives()) == n
    # every residue of the box [0, n)^2 falls in one of the n cosets, and each is hit
    hit = {q.coordinates((a, b)) for a in range(n) for b in range(n)}
    assert len(hit) == n
    reps = q.coset_representatives()
    assert len({q.coordinates(r) for r in reps}) == n
