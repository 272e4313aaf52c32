"""Closed-form counts for the two avoidance classes with explicit formulas.

For {1-12, 2-21}: alpha_{n,k} = k*k! when k < n and n! when k = n (zero
beyond the alphabet cap), so the total over an m-letter alphabet is
sum_{k<n} k*(m)_k + (m)_n for n <= m and sum_{k<=m} k*(m)_k for n > m.
The k = m term of the stabilized sum is nonzero and required: dropping it
(``short_tail=True``) undercounts, e.g. 2 instead of 6 at m=2, n=3. That
knowingly wrong variant is kept only so the verification grid can
demonstrate how a mismatch gets caught and reported.

For {1-21, 2-12}: alpha_{n,k} = k*(n-1)_{k-1} = (n)_k - (n-1)_k, and the
total is sum_k C(m,k) k*(n-1)_{k-1}. The helper p_n(x) = sum_k (n-1)_k x^k
is the level polynomial of the arrangement tree that this class's
generating tree embeds into.

Totals follow the convention that length 0 counts the empty word once.
"""

from __future__ import annotations

import math

from .series import Poly, falling_factorial, binomial, poly_normalize


def alpha_1_12__2_21(n: int, k: int, m: int) -> int:
    """Reduced {1-12, 2-21}-avoiding words of length n on exactly k
    letters: k*k! for k < n, n! for k = n, zero for k > n or k > m.

    >>> alpha_1_12__2_21(5, 3, 5)
    18
    """
    if n < 0 or k < 0:
        raise ValueError("n and k must be >= 0")
    if k > m or k > n:
        return 0
    if k == 0:
        return 1 if n == 0 else 0
    if k == n:
        return math.factorial(n)
    return k * math.factorial(k)


def count_by_k_1_12__2_21(n: int, k: int, m: int) -> int:
    """Words of length n over an m-letter alphabet avoiding {1-12, 2-21}
    and using exactly k distinct letters: k*(m)_k for k < n, (m)_n for
    k = n (zero beyond n or m)."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be >= 0")
    if k > m or k > n:
        return 0
    if k == n:
        return falling_factorial(m, n)
    return k * falling_factorial(m, k)


def total_1_12__2_21(n: int, m: int, *, short_tail: bool = False) -> int:
    """Number of {1-12, 2-21}-avoiding words of length n over an m-letter
    alphabet. Constant in n once n > m.

    ``short_tail=True`` stops the stabilized (n > m) sum at k = m-1 instead
    of k = m, which is wrong (it undercounts by m*(m)_m); the variant is
    retained for the verification grid's mismatch demonstration.

    >>> total_1_12__2_21(3, 2)
    6
    >>> total_1_12__2_21(3, 2, short_tail=True)
    2
    """
    if n < 0:
        raise ValueError("length must be >= 0")
    if m < 1:
        raise ValueError("alphabet size must be >= 1")
    if n <= m:
        return sum(k * falling_factorial(m, k) for k in range(n)) + falling_factorial(m, n)
    top = m - 1 if short_tail else m
    return sum(k * falling_factorial(m, k) for k in range(top + 1))


def alpha_1_21__2_12(n: int, k: int, m: int) -> int:
    """Reduced {1-21, 2-12}-avoiding words of length n on exactly k
    letters: k*(n-1)_{k-1}, zero beyond the cap.

    >>> alpha_1_21__2_12(5, 2, 5)
    8
    """
    if n < 0 or k < 0:
        raise ValueError("n and k must be >= 0")
    if k > m:
        return 0
    if k == 0:
        return 1 if n == 0 else 0
    if n == 0:
        return 0
    return k * falling_factorial(n - 1, k - 1)


def total_1_21__2_12(n: int, m: int) -> int:
    """Number of {1-21, 2-12}-avoiding words of length n over an m-letter
    alphabet: sum_{k} C(m,k) k*(n-1)_{k-1}, plus the empty word at n = 0.

    >>> total_1_21__2_12(3, 2)
    6
    """
    if n < 0:
        raise ValueError("length must be >= 0")
    if m < 1:
        raise ValueError("alphabet size must be >= 1")
    if n == 0:
        return 1
    return sum(binomial(m, k) * k * falling_factorial(n - 1, k - 1) for k in range(1, n + 1))


def arrangements_level_poly(n: int) -> Poly:
    """Level polynomial p_n(x) = sum_k (n-1)_k x^k of the arrangement
    tree; the terms vanish beyond k = n-1.

    >>> arrangements_level_poly(3)
    [1, 2, 2]
    """
    if n < 1:
        raise ValueError("level must be >= 1")
    return poly_normalize([falling_factorial(n - 1, k) for k in range(n)])
