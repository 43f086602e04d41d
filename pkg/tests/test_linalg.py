from gmpy2 import mpq
from hypothesis import given, strategies as st

from centerfocus import linalg

entries = st.fractions(min_value=-5, max_value=5, max_denominator=4).map(
    lambda f: mpq(f.numerator, f.denominator))


@st.composite
def matrices(draw):
    m = draw(st.integers(1, 5))
    n = draw(st.integers(1, 5))
    rows = draw(st.lists(st.lists(entries, min_size=n, max_size=n), min_size=m, max_size=m))
    # low-rank products show up often
    if draw(st.booleans()) and m > 1:
        rows[-1] = [a + 2 * b for a, b in zip(rows[0], rows[1 % m])]
    return rows


@given(matrices())
def test_bareiss_matches_rref(a):
    r = linalg.bareiss_rank(a)
    _, piv = linalg.rref(a)
    assert r == len(piv)
    assert r <= min(len(a), len(a[0]))


@given(matrices(), st.lists(entries, min_size=5, max_size=5))
def test_rank_monotone(a, row):
    b = a + [row[:len(a[0])]]
    assert linalg.bareiss_rank(b) >= linalg.bareiss_rank(a)


@given(matrices())
def test_nullspace(a):
    ns = linalg.nullspace(a)
    assert len(ns) + linalg.bareiss_rank(a) == len(a[0])
    for v in ns:
        assert all(sum(x * y for x, y in zip(row, v)) == 0 for row in a)


def test_examples():
    assert linalg.bareiss_rank([[0, 0], [0, 0]]) == 0
    assert linalg.bareiss_rank([[1 if i == j else 0 for j in range(4)] for i in range(4)]) == 4
    a = [[2, 1], [1, 1]]
    assert linalg.matmul(linalg.to_q(a), linalg.inverse(a)) == [[1, 0], [0, 1]]
