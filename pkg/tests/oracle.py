"""Alexander polynomial of the (p, q) torus knot, computed without the package.

Uses the factorisation into cyclotomic polynomials Phi_d over the divisors
d of pq dividing neither p nor q, so it shares no code path with the
quotient formula used by ``divshadow.fibration.torus_alexander``.
"""

from __future__ import annotations


def _mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _exact_div(a, b):
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(q) - 1, -1, -1):
        c, r = divmod(a[i + len(b) - 1], b[-1])
        assert r == 0
        q[i] = c
        for j, y in enumerate(b):
            a[i + j] -= c * y
    assert not any(a)
    return q


def cyclotomic(n: int, _cache={}):
    if n not in _cache:
        p = [-1] + [0] * (n - 1) + [1]  # t^n - 1
        for d in range(1, n):
            if n % d == 0:
                p = _exact_div(p, cyclotomic(d))
        _cache[n] = p
    return _cache[n]


def torus_alexander_oracle(p: int, q: int) -> tuple:
    out = [1]
    for d in range(2, p * q + 1):
        if (p * q) % d == 0 and p % d and q % d:
            out = _mul(out, cyclotomic(d))
    return tuple(out)
