from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sysroots import linalg as la
from sysroots.linalg import LinalgError, Matrix


def naive_rank(vectors):
    """Plain Fraction Gaussian elimination, kept independent of the library code."""
    m = [list(map(Fraction, r)) for r in vectors]
    r = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, len(m)):
            f = m[i][c] / m[r][c]
            m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
    return r


fractions = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def vector_lists(draw):
    d = draw(st.integers(1, 4))
    n = draw(st.integers(0, 6))
    return [tuple(draw(fractions) for _ in range(d)) for _ in range(n)]


def test_rational_refuses_floats():
    with pytest.raises(TypeError):
        la.rational(0.5)
    assert la.rational("2/4") == Fraction(1, 2)
    assert la.format_scalar(Fraction(-6, 4)) == "-3/2"
    assert la.format_scalar(Fraction(0)) == "0"


def test_rank_examples():
    assert la.rank([]) == 0
    assert la.rank([la.vec(1, 0), la.vec(0, 1), la.vec(1, 1)]) == 2
    assert la.rank([la.vec(x) for x in (-3, -1, 1, 3)]) == 1


def test_rank_dimension_mismatch():
    with pytest.raises(LinalgError):
        la.rank([la.vec(1, 0), la.vec(1)])


@settings(max_examples=200, deadline=None)
@given(vector_lists())
def test_rank_matches_naive_elimination(vs):
    r = la.rank(vs)
    assert r == naive_rank(vs)
    if vs:
        assert r <= min(len(vs), len(vs[0]))


def test_nilpotency_examples():
    assert la.nilpotency_index(Matrix.zeros(3)) == 1
    assert la.nilpotency_index(Matrix.lower_jordan_block(2)) == 2
    with pytest.raises(LinalgError):
        la.nilpotency_index(Matrix.identity(2))
    with pytest.raises(LinalgError):
        la.nilpotency_index(Matrix.zeros(2, 3))


def test_jordan_chain_examples():
    assert la.jordan_type(Matrix.zeros(2)) == [1, 1]
    chains = la.jordan_chains(Matrix.lower_jordan_block(3))
    assert [len(c) for c in chains] == [3]
    assert chains[0][0] == la.vec(1, 0, 0)


def _check_chains(m: Matrix):
    chains = la.jordan_chains(m)
    n = m.shape[0]
    flat = [w for ch in chains for w in ch]
    assert len(flat) == n
    assert la.rank(flat) == n
    for ch in chains:
        for a, b in zip(ch, ch[1:]):
            assert m.apply(a) == b
        assert la.is_zero(m.apply(ch[-1]))
    lengths = [len(c) for c in chains]
    assert lengths == sorted(lengths, reverse=True)
    assert (lengths[0] if lengths else 0) == la.nilpotency_index(m)


@st.composite
def nilpotent_matrices(draw):
    """Strictly lower-triangular matrices conjugated by a unipotent upper-triangular one."""
    n = draw(st.integers(1, 5))
    small = st.integers(-2, 2)
    low = [[draw(small) if i > j else 0 for j in range(n)] for i in range(n)]
    up = [[1 if i == j else (draw(small) if j > i else 0) for j in range(n)] for i in range(n)]
    # inverse of a unipotent upper-triangular matrix by back substitution
    inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for c in range(n):
        for i in range(n - 1, -1, -1):
            inv[i][c] -= sum(up[i][k] * inv[k][c] for k in range(i + 1, n))
    return Matrix.from_rows(up) @ Matrix.from_rows(low) @ Matrix.from_rows(inv)


@settings(max_examples=100, deadline=None)
@given(nilpotent_matrices())
def test_jordan_chains_properties(m):
    _check_chains(m)


def test_matrix_ops():
    a = Matrix.from_rows([[1, 2], [3, 4]])
    assert (a @ Matrix.identity(2)) == a
    assert (a - a).is_zero()
    assert a.transpose().rows == Matrix.from_rows([[1, 3], [2, 4]]).rows
    assert (a ** 2).rows == (a @ a).rows
    assert la.commutator(a, a).is_zero()
    with pytest.raises(LinalgError):
        Matrix.from_rows([[1, 2], [3]])
    with pytest.raises(LinalgError):
        a @ Matrix.zeros(3)
    assert Matrix.from_rows([["1/2", 0]]).to_json() == [["1/2", "0"]]
