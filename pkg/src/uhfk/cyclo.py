"""Sums of e-th roots of unity stored as multiplicity vectors.

A vector ``(m_0, ..., m_{e-1})`` stands for ``sum m_j * zeta_e**j``. Addition
and multiplication happen in ``Z[x]/(x^e - 1)``; equality as complex numbers
is decided after reducing modulo the cyclotomic polynomial ``Phi_e``.
"""
from functools import lru_cache

from sympy import divisors


def _divide_exact(num, den):
    """Quotient of integer polynomials (constant term first) with monic ``den``."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n):
    """Coefficients of ``Phi_n``, constant term first."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        poly = _divide_exact(poly, cyclotomic_poly(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def reduction_rows(e):
    """``rows[j]`` is ``x**j mod Phi_e`` as a coefficient tuple of length ``phi(e)``."""
    phi = cyclotomic_poly(e)
    deg = len(phi) - 1
    rows = []
    cur = [1] + [0] * (deg - 1) if deg else []
    for _ in range(e):
        rows.append(tuple(cur))
        if deg == 0:
            continue
        # multiply by x, then subtract the overflow times Phi_e
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * phi[i] for i, c in enumerate(cur)]
    return tuple(rows)


def reduce(vec):
    e = len(vec)
    rows = reduction_rows(e)
    deg = len(cyclotomic_poly(e)) - 1
    out = [0] * deg
    for m, row in zip(vec, rows):
        if m:
            for i, c in enumerate(row):
                if c:
                    out[i] += m * c
    return tuple(out)


def from_int(n, e):
    return (n,) + (0,) * (e - 1)


def equal(u, v):
    return reduce(tuple(a - b for a, b in zip(u, v))) == (0,) * (len(cyclotomic_poly(len(u))) - 1)


def equals_int(u, n):
    return equal(u, from_int(n, len(u)))


def add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def scale(u, c):
    return tuple(c * a for a in u)


def mul(u, v):
    e = len(u)
    out = [0] * e
    for i, a in enumerate(u):
        if a:
            for j, b in enumerate(v):
                if b:
                    out[(i + j) % e] += a * b
    return tuple(out)


def conj(u):
    e = len(u)
    return tuple(u[(-j) % e] for j in range(e))


def eval_mod(u, z, p):
    acc = 0
    zj = 1
    for m in u:
        acc = (acc + m * zj) % p
        zj = zj * z % p
    return acc


def l1(u):
    return sum(abs(a) for a in u)
