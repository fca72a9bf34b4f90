from fractions import Fraction as F
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fatbundles import exact
from fatbundles.errors import DimensionError

rationals = st.fractions(min_value=-10, max_value=10, max_denominator=7)


def leibniz(m):
    """Permutation-expansion determinant, the independent oracle."""
    n = len(m)
    total = F(0)
    for perm in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = F(sign)
        for i, j in enumerate(perm):
            term *= m[i][j]
        total += term
    return total


def square(n):
    return st.lists(st.lists(rationals, min_size=n, max_size=n), min_size=n, max_size=n)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5).flatmap(square))
def test_bareiss_matches_leibniz(m):
    assert exact.determinant(m) == leibniz(m)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(square))
def test_determinant_of_singular_matrix(m):
    # repeat a row: determinant must vanish
    m = m + [m[0]]
    m = [row + [row[0]] for row in m]
    assert exact.determinant(m) == 0


def test_determinant_examples():
    assert exact.determinant([[0, -16], [16, 0]]) == 256
    assert exact.determinant([]) == 1
    assert exact.determinant([[0, 1], [1, 0]]) == -1
    assert exact.determinant([[F(1, 2), F(1, 3)], [F(1, 4), F(1, 5)]]) == F(1, 10) - F(1, 12)
    with pytest.raises(DimensionError):
        exact.determinant([[1, 2]])


def test_pivots_and_definiteness():
    assert exact.symmetric_pivots([[2, 1], [1, 2]]) == [2, F(3, 2)]
    assert exact.is_negative_definite([[-2, 1], [1, -2]])
    assert not exact.is_negative_definite([[-1, 2], [2, -1]])
    assert not exact.is_negative_definite([[0, 0], [0, -1]])
    assert not exact.is_negative_definite([[-1, 1], [0, -1]])  # not symmetric


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 4).flatmap(square), st.data())
def test_solve_returns_a_solution(m, data):
    x0 = data.draw(st.lists(rationals, min_size=len(m), max_size=len(m)))
    b = exact.matvec(m, x0)
    x = exact.solve(m, b)
    assert x is not None
    assert exact.matvec(m, x) == b


def test_solve_inconsistent():
    assert exact.solve([[1, 1], [2, 2]], [1, 3]) is None
    assert exact.solve([[1, 1], [2, 2]], [1, 2]) is not None


def test_inverse_and_rank():
    a = [[F(2), F(1)], [F(1), F(1)]]
    assert exact.matmul(a, exact.inverse(a)) == exact.identity(2)
    assert exact.rank([[1, 2], [2, 4]]) == 1
    with pytest.raises(ZeroDivisionError):
        exact.inverse([[1, 2], [2, 4]])


def test_rational_io():
    assert exact.parse_vector("1/2, -3") == (F(1, 2), F(-3))
    assert exact.format_rational(F(256)) == "256/1"
    assert exact.format_rational(F(-1, 2)) == "-1/2"
    with pytest.raises(TypeError):
        exact.as_fraction(0.5)
    with pytest.raises(DimensionError):
        exact.dot((1,), (1, 2))
