"""Closed forms for the extremal families, in exact arithmetic.

Characteristic polynomials are returned as coefficient tuples
``(c3, c2, c1, c0)`` of ``c3 x^3 + c2 x^2 + c1 x + c0``.
"""

from fractions import Fraction as F


def charpoly_rdelta(n, a):
    """Quotient of ``K_a ∨ (K_{n-2a} + aK_1)``; ``a`` is the minimum degree."""
    n, a = F(n), F(a)
    return (
        F(1),
        -(n + a - 4),
        -(2 * a * n + 3 * n - 5 * a**2 + a - 5),
        a**2 * n - 2 * a * n - 2 * n - 2 * a**3 + 5 * a**2 + 2,
    )


def charpoly_rsdelta(n, s, d):
    n, s, d = F(n), F(s), F(d)
    return (
        F(1),
        s**2 - (d + 2) * s + d - n + 4,
        2 * s**4 - (4 * d + 6) * s**3 + (2 * d**2 + 5 * d + 2 * n + 5) * s**2
        + (d**2 - 2 * n * d - n - 3) * s - n * d + 2 * d - 3 * n + 5,
        -s**5 + (2 * d + 5) * s**4 - (d**2 + 7 * d + n + 8) * s**3
        + (2 * d**2 + n * d + 5 * d + 3 * n + 4) * s**2
        + (d**2 - 2 * n * d + d - n - 1) * s - n * d + d - 2 * n + 2,
    )


def charpoly_rts(n, t, s):
    n, t, s = F(n), F(t), F(s)
    return (
        F(1),
        -(t * n + s - 4 * t) / t,
        -(3 * t**2 * n + 2 * s * t * n - 5 * t**2 - 3 * s**2 * t + s * t - 2 * s**2) / t**2,
        (-2 * t**2 * n + s**2 * t * n - 2 * s * t * n + 2 * t**2 - s**3 * t
         + 3 * s**2 * t - s**3 + 2 * s**2) / t**2,
    )


def wiener_one_tough(n, delta):
    """W of ``K_δ ∨ (K_{n-2δ} + δK_1)``."""
    n, d = F(n), F(delta)
    return n**2 / 2 + (d - F(1, 2)) * n - F(3, 2) * d**2 - d / 2


def wiener_split_isolated(n, t, c):
    """W of ``K_{tc-1} ∨ (K_{n-(t+1)c+2} + (c-1)K_1)``."""
    n, t, c = F(n), F(t), F(c)
    return -(2 * t + 1) / 2 * c**2 + (2 * n + 2 * t + 3) / 2 * c + n**2 / 2 - F(3, 2) * n - 1


def wiener2_int_tough(n, t):
    """W2 (sum of squared distances) of ``K_{2t-1} ∨ (K_{n-2t} + K_1)``."""
    n, t = F(n), F(t)
    return n**2 / 2 + F(5, 2) * n - 6 * t


def perron_ratio(lam, n, s, c, p):
    """Small-part to big-clique Perron entry ratio of ``K_s ∨ (K_{n-s-p(c-1)} + (c-1)K_p)``."""
    return 1 + (n - s - c * p) / (lam + p + 1)


def evaluate(coeffs, x):
    c3, c2, c1, c0 = (float(c) for c in coeffs)
    return ((c3 * x + c2) * x + c1) * x + c0
