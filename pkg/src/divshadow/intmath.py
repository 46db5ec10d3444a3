"""Exact integer matrices and polynomials.

Matrices are tuples of row tuples, polynomials are coefficient tuples in
ascending degree.
"""

from __future__ import annotations

from fractions import Fraction


def identity(n: int) -> tuple:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def matmul(a, b) -> tuple:
    bt = list(zip(*b)) if b else []
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def transpose(a) -> tuple:
    return tuple(zip(*a)) if a else ()


def matvec(a, v) -> tuple:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def det(a) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(r) for r in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def charpoly(a) -> tuple:
    """Characteristic polynomial det(tI - A) by Berkowitz's algorithm.

    Division free, so every intermediate value is an integer.
    """
    n = len(a)
    if n == 0:
        return (1,)
    # vect holds the coefficients of the leading principal submatrices,
    # highest degree first.
    vect = [1, -a[0][0]]
    for r in range(1, n):
        # Toeplitz column for the (r+1)x(r+1) leading block
        R = [a[r][j] for j in range(r)]  # row below the block
        C = [a[i][r] for i in range(r)]  # column right of the block
        A = [row[:r] for row in a[:r]]
        col = [1, -a[r][r]]
        x = C[:]
        for _ in range(r):
            col.append(-sum(ri * xi for ri, xi in zip(R, x)))
            x = [sum(A[i][j] * x[j] for j in range(r)) for i in range(r)]
        # multiply the (r+2) x (r+1) lower-triangular Toeplitz matrix by vect
        new = []
        for i in range(r + 2):
            new.append(sum(col[i - j] * vect[j] for j in range(min(i, r) + 1) if i - j < len(col)))
        vect = new
    return tuple(reversed(vect))


def poly_eval(p, t):
    return sum(c * t ** k for k, c in enumerate(p))


def poly_trim(p) -> tuple:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return tuple(p)


def poly_mul(p, q) -> tuple:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return poly_trim(out)


def poly_divmod(p, q):
    """Division by a polynomial with leading coefficient +-1."""
    p, q = list(poly_trim(p)), list(poly_trim(q))
    if q[-1] not in (1, -1):
        raise ValueError("divisor must be monic up to sign")
    out = [0] * max(len(p) - len(q) + 1, 1)
    while len(p) >= len(q) and any(p):
        k = len(p) - len(q)
        c = p[-1] * q[-1]
        out[k] = c
        for i, b in enumerate(q):
            p[i + k] -= c * b
        p = list(poly_trim(p))
        if len(p) == 1 and p[0] == 0:
            break
    return poly_trim(out), poly_trim(p)


def normalize_unit(p) -> tuple:
    """Strip powers of t and fix the sign so the lowest coefficient is positive."""
    p = list(poly_trim(p))
    while len(p) > 1 and p[0] == 0:
        p.pop(0)
    if p[0] < 0:
        p = [-c for c in p]
    return tuple(p)


def equal_up_to_units(p, q) -> bool:
    return normalize_unit(p) == normalize_unit(q)


def is_palindromic_up_to_sign(p) -> bool:
    p = normalize_unit(p)
    r = tuple(reversed(p))
    return p == r or p == tuple(-c for c in r)


def solve_rational(a, b):
    """Solve a x = b over the rationals; None if inconsistent.

    Free variables are set to zero.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    m = [[Fraction(x) for x in a[i]] + [Fraction(b[i])] for i in range(rows)]
    piv, r = [], 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        piv.append(c)
        r += 1
    if any(m[i][cols] != 0 for i in range(r, rows)):
        return None
    x = [Fraction(0)] * cols
    for i, c in enumerate(piv):
        x[c] = m[i][cols]
    return x
