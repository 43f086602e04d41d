"""Small exact matrix routines over the rationals (lists of lists of mpq)."""

from __future__ import annotations

from gmpy2 import mpq


def to_q(a):
    return [[mpq(v) for v in row] for row in a]


def bareiss_rank(a):
    """Rank by fraction-free (Bareiss) elimination.

    Entries are scaled to integers row by row first, so every division in the
    elimination is exact.
    """
    rows = []
    for row in a:
        row = [mpq(v) for v in row]
        den = 1
        for v in row:
            den = den * v.denominator // _gcd(den, v.denominator)
        rows.append([int(v * den) for v in row])
    if not rows or not rows[0]:
        return 0
    m, n = len(rows), len(rows[0])
    rank = 0
    prev = 1
    for col in range(n):
        if rank == m:
            break
        piv = next((r for r in range(rank, m) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank][col]
        for r in range(rank + 1, m):
            f = rows[r][col]
            rows[r] = [(p * rows[r][c] - f * rows[rank][c]) // prev for c in range(n)]
        prev = p
        rank += 1
    return rank


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def rref(a):
    """Reduced row echelon form and pivot columns."""
    m = to_q(a)
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((k for k in range(r, rows) if m[k][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for k in range(rows):
            if k != r and m[k][c]:
                f = m[k][c]
                m[k] = [x - f * y for x, y in zip(m[k], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def nullspace(a):
    """Basis of the right kernel ``{v : a v = 0}``."""
    if not a:
        return []
    m, pivots = rref(a)
    n = len(a[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [mpq(0)] * n
        v[f] = mpq(1)
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][f]
        basis.append(v)
    return basis


def transpose(a):
    return [list(col) for col in zip(*a)]


def inverse(a):
    n = len(a)
    aug = [list(row) + [mpq(int(i == j)) for j in range(n)] for i, row in enumerate(to_q(a))]
    m, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in m]


def matmul(a, b):
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col)), mpq(0)) for col in bt] for row in a]
