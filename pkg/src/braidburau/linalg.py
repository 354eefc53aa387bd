"""Exact dense linear algebra over a field-like element type.

Works for any elements supporting +, -, *, / and == (RatFn, Fraction).
Pivoting is deterministic (first nonzero entry in column order), so kernel
bases and reduced forms are reproducible.
"""

from __future__ import annotations

from typing import Sequence


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]):
    if not a or not b:
        return []
    if len(a[0]) != len(b):
        raise ValueError("shape mismatch")
    return [
        [sum_entries([a[r][k] * b[k][c] for k in range(len(b))]) for c in range(len(b[0]))]
        for r in range(len(a))
    ]


def sum_entries(xs):
    out = xs[0]
    for x in xs[1:]:
        out = out + x
    return out


def mat_identity(n: int, one, zero):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def transpose(a: Sequence[Sequence]):
    if not a:
        return []
    return [[a[r][c] for r in range(len(a))] for c in range(len(a[0]))]


def rref(rows: Sequence[Sequence], zero) -> tuple[list[list], list[int]]:
    """Reduced row echelon form and the pivot column indices."""
    a = [list(r) for r in rows]
    m = len(a)
    k = len(a[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(k):
        p = next((i for i in range(r, m) if not (a[i][c] == zero)), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = a[r][c]
        a[r] = [x / inv for x in a[r]]
        for i in range(m):
            if i != r and not (a[i][c] == zero):
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return a, pivots


def rank(rows: Sequence[Sequence], zero) -> int:
    return len(rref(rows, zero)[1])


def nullspace(rows: Sequence[Sequence], zero, one) -> list[list]:
    """Basis of the right kernel {x : A x = 0}, one vector per free column."""
    if not rows:
        return []
    a, pivots = rref(rows, zero)
    k = len(rows[0])
    free = [c for c in range(k) if c not in pivots]
    basis = []
    for fc in free:
        v = [zero] * k
        v[fc] = one
        for r, pc in enumerate(pivots):
            v[pc] = zero - a[r][fc]
        basis.append(v)
    return basis


def solve(rows: Sequence[Sequence], b: Sequence, zero, one) -> list:
    """One exact solution of A x = b; raises ValueError if inconsistent.

    Free variables, if any, are set to zero.
    """
    m = len(rows)
    if m != len(b):
        raise ValueError("shape mismatch")
    k = len(rows[0]) if m else 0
    aug = [list(rows[i]) + [b[i]] for i in range(m)]
    a, pivots = rref(aug, zero)
    if k in pivots:
        raise ValueError("inconsistent linear system")
    x = [zero] * k
    for r, pc in enumerate(pivots):
        x[pc] = a[r][k]
    return x


def charpoly(m: Sequence[Sequence], zero, one) -> list:
    """Monic characteristic polynomial of a square matrix, leading first.

    Faddeev-LeVerrier: returns [1, c_1, ..., c_n] with
    det(xI - M) = x^n + c_1 x^(n-1) + ... + c_n.
    """
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("matrix must be square")
    coeffs = [one]
    mk = [list(r) for r in m]
    for k in range(1, n + 1):
        tr = sum_entries([mk[i][i] for i in range(n)]) if n else zero
        c = (zero - tr) / k
        coeffs.append(c)
        if k == n:
            break
        for i in range(n):
            mk[i][i] = mk[i][i] + c
        mk = mat_mul(m, mk)
    return coeffs
