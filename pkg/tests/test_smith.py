import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bcinv.smith import LinearSystemMod, smith_normal_form, solve_linear_mod


def _det(M):
    return round(np.linalg.det(np.array(M, dtype=float))) if len(M) else 1


def _check_snf(A):
    U, D, V = smith_normal_form(A)
    A_, U_, D_, V_ = (np.array(x, dtype=object) for x in (A, U, D, V))
    assert (U_.dot(A_).dot(V_) == D_).all()
    assert abs(_det(U)) == 1 and abs(_det(V)) == 1
    rows, cols = len(A), len(A[0])
    diag = [D[i][i] for i in range(min(rows, cols))]
    for i in range(rows):
        for j in range(cols):
            if i != j:
                assert D[i][j] == 0
    assert all(d >= 0 for d in diag)
    nz = [d for d in diag if d]
    assert diag[:len(nz)] == nz  # zeros trail
    for x, y in zip(nz, nz[1:]):
        assert y % x == 0


def test_known_form():
    U, D, V = smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert [D[i][i] for i in range(3)] == [2, 6, 12]


def test_zero_and_rectangular():
    _check_snf([[0, 0], [0, 0]])
    _check_snf([[3, 6, 9]])
    _check_snf([[4], [6]])
    U, D, V = smith_normal_form([[4], [6]])
    assert D[0][0] == 2


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-20, 20), min_size=c, max_size=c), min_size=r, max_size=r))))
def test_snf_properties(A):
    _check_snf(A)


def _brute_solutions(A, v, n):
    cols = len(A[0])
    A_ = np.array(A)
    out = []
    for x in itertools.product(range(n), repeat=cols):
        if ((A_ @ np.array(x)) % n == np.array(v) % n).all():
            out.append(x)
    return out


@settings(max_examples=120, deadline=None)
@given(st.integers(2, 6), st.integers(1, 3), st.integers(1, 3), st.data())
def test_solver_matches_brute_force(n, rows, cols, data):
    A = data.draw(st.lists(st.lists(st.integers(0, n - 1), min_size=cols, max_size=cols),
                           min_size=rows, max_size=rows))
    v = data.draw(st.lists(st.integers(0, n - 1), min_size=rows, max_size=rows))
    brute = _brute_solutions(A, v, n)
    got = solve_linear_mod(A, v, n)
    assert (got is None) == (not brute)
    system = LinearSystemMod(A, n)
    coset = system.coset(v)
    if brute:
        assert tuple(x % n for x in got) in set(brute)
        assert coset.count() == len(brute)
        assert {tuple(int(t) % n for t in row) for row in coset.all()} == set(brute)
    else:
        assert coset is None


def test_dimension_errors():
    with pytest.raises(ValueError):
        solve_linear_mod([[1, 2]], [1, 2], 5)
