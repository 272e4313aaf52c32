"""Exact integer polynomials, truncated power series, and the generating
functions attached to the avoidance classes with a column structure.

A polynomial is a list of int coefficients indexed by exponent, trailing
zeros stripped; the zero polynomial is the empty list. A truncated series
of order N is a list of exactly N+1 int coefficients. Every operation is
exact: the only denominators that ever appear have constant term 1, so all
expansions stay in the integers.
"""

from __future__ import annotations

import math
from itertools import product
from typing import Iterable, Sequence

Poly = list[int]


def poly_normalize(p: Sequence[int]) -> Poly:
    # Strip trailing zero coefficients.
    n = len(p)
    while n and p[n - 1] == 0:
        n -= 1
    return list(p[:n])


def poly_add(a: Sequence[int], b: Sequence[int]) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return poly_normalize(out)


def poly_sub(a: Sequence[int], b: Sequence[int]) -> Poly:
    return poly_add(a, [-c for c in b])


def poly_scale(a: Sequence[int], c: int) -> Poly:
    return poly_normalize([c * x for x in a])


def poly_shift(a: Sequence[int], s: int) -> Poly:
    """Multiply by x**s."""
    if s < 0:
        raise ValueError("poly_shift wants s >= 0")
    return poly_normalize([0] * s + list(a))


def poly_mul(a: Sequence[int], b: Sequence[int]) -> Poly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return poly_normalize(out)


def poly_pow(a: Sequence[int], e: int) -> Poly:
    if e < 0:
        raise ValueError("poly_pow wants e >= 0")
    out: Poly = [1]
    for _ in range(e):
        out = poly_mul(out, a)
    return out


def poly_coeff(a: Sequence[int], i: int) -> int:
    return a[i] if 0 <= i < len(a) else 0


def series_truncate(p: Sequence[int], order: int) -> list[int]:
    """First order+1 coefficients, zero padded."""
    if order < 0:
        raise ValueError("series order must be >= 0")
    return [poly_coeff(p, i) for i in range(order + 1)]


def series_inverse_product(factors: Iterable[Sequence[int]], order: int) -> list[int]:
    """Coefficients of prod 1/f for polynomials f with constant term 1,
    up to the given order. Exact: the inverse of a constant-term-1 integer
    polynomial has integer coefficients.

    >>> series_inverse_product([[1, -1]], 3)
    [1, 1, 1, 1]
    >>> series_inverse_product([], 2)
    [1, 0, 0]
    """
    denom: Poly = [1]
    for f in factors:
        f = poly_normalize(f)
        if not f or f[0] != 1:
            raise ValueError(f"inverse needs constant term 1, got {list(f)}")
        denom = series_truncate(poly_mul(denom, f), order)
    inv = [0] * (order + 1)
    inv[0] = 1
    for n in range(1, order + 1):
        acc = 0
        for j in range(1, min(n, len(denom) - 1) + 1):
            acc += denom[j] * inv[n - j]
        inv[n] = -acc
    return inv


def series_from_rational(
    numerator: Sequence[int], denominator_factors: Iterable[Sequence[int]], order: int
) -> list[int]:
    """Expand numerator / prod(factors) to the given order; every factor
    must have constant term 1."""
    inv = series_inverse_product(denominator_factors, order)
    return series_truncate(poly_mul(numerator, inv), order)


def binomial(m: int, k: int) -> int:
    """C(m, k), zero outside 0 <= k <= m.

    >>> binomial(5, 3)
    10
    """
    if k < 0 or k > m:
        return 0
    return math.comb(m, k)


def falling_factorial(a: int, b: int) -> int:
    """(a)_b = a (a-1) ... (a-b+1), with (a)_0 = 1.

    >>> falling_factorial(5, 3)
    60
    """
    if b < 0:
        raise ValueError("falling_factorial wants b >= 0")
    out = 1
    for i in range(b):
        out *= a - i
    return out


def falling_factorial_poly(k: int) -> Poly:
    """The polynomial (x+k)_k = (x+k)(x+k-1)...(x+1), with k factors.

    >>> falling_factorial_poly(2)
    [2, 3, 1]
    """
    if k < 0:
        raise ValueError("falling_factorial_poly wants k >= 0")
    out: Poly = [1]
    for i in range(1, k + 1):
        out = poly_mul(out, [i, 1])
    return out


def c_poly(k: int) -> Poly:
    """Generating function C_k of the special column k_(k+1) of the label
    table for the class {1-11, 1-12}: C_0 = 1 and
    C_k = (sum_{j=1..k} C(k,j) x^j) * C_{k-1}.

    >>> c_poly(2)
    [0, 0, 2, 1]
    """
    if k < 0:
        raise ValueError("c_poly wants k >= 0")
    out: Poly = [1]
    for t in range(1, k + 1):
        inner = [0] + [binomial(t, j) for j in range(1, t + 1)]
        out = poly_mul(out, inner)
    return out


def c_poly_explicit(k: int) -> Poly:
    """C_k evaluated from the explicit composition sum: the coefficient of
    x^i is the sum over (j_1, ..., j_k) with all j_t >= 1 and sum i of
    C(k, j_k) C(k-1, j_{k-1}) ... C(1, j_1). Independent route used to
    cross-check c_poly.
    """
    if k < 0:
        raise ValueError("c_poly_explicit wants k >= 0")
    if k == 0:
        return [1]
    coeffs = [0] * (k * (k + 1) // 2 + 1)
    for js in product(*(range(1, t + 1) for t in range(1, k + 1))):
        term = 1
        for t, j in enumerate(js, start=1):
            term *= binomial(t, j)
        coeffs[sum(js)] += term
    return poly_normalize(coeffs)


def c_column(k: int, h: int) -> Poly:
    """Generating function of column k_h (h <= k) of the label table for
    {1-11, 1-12}: x (1+x)^(k-h) C_k(x)."""
    if not 1 <= h <= k:
        raise ValueError(f"c_column wants 1 <= h <= k, got h={h}, k={k}")
    return poly_mul(poly_shift(poly_pow([1, 1], k - h), 1), c_poly(k))


def f_k_1_11__1_12(k: int) -> Poly:
    """Generating function of reduced {1-11, 1-12}-avoiding words on
    exactly k letters, by length: (1+x)^k C_k(x).

    >>> f_k_1_11__1_12(1)
    [0, 1, 1]
    """
    if k < 0:
        raise ValueError("f_k_1_11__1_12 wants k >= 0")
    return poly_mul(poly_pow([1, 1], k), c_poly(k))


def gf_total_1_11__1_12(m: int, order: int) -> list[int]:
    """Series counting {1-11, 1-12}-avoiding words over an m-letter
    alphabet by length: sum_{k=0..m} C(m,k) (1+x)^k C_k(x)."""
    if m < 1:
        raise ValueError("alphabet size must be >= 1")
    total: Poly = []
    for k in range(m + 1):
        total = poly_add(total, poly_scale(f_k_1_11__1_12(k), binomial(m, k)))
    return series_truncate(total, order)


def gf_1_11__1_21(m: int, order: int) -> list[int]:
    """Series counting {1-11, 1-21}-avoiding words over an m-letter
    alphabet: 1 + sum_{k=1..m} C(m,k) x (1+x)^k prod_{i=0..k-2}((1+x)^{k-i} - 1).

    The k=0 summand is the constant 1 (the empty word); the product bounds
    alone would give x there, which disagrees with direct enumeration.
    """
    if m < 1:
        raise ValueError("alphabet size must be >= 1")
    total: Poly = [1]
    for k in range(1, m + 1):
        prod_part: Poly = [1]
        for i in range(k - 1):
            prod_part = poly_mul(prod_part, poly_sub(poly_pow([1, 1], k - i), [1]))
        term = poly_mul(poly_shift(poly_pow([1, 1], k), 1), prod_part)
        total = poly_add(total, poly_scale(term, binomial(m, k)))
    return series_truncate(total, order)


def gf_1_11__1_22(m: int, order: int) -> list[int]:
    """Series counting {1-11, 1-22}-avoiding words over an m-letter
    alphabet: sum_{k=0..m} C(m,k) x^k (x+k)_k / prod_{i=1..k-1}(1-ix)."""
    if m < 1:
        raise ValueError("alphabet size must be >= 1")
    total = [0] * (order + 1)
    for k in range(m + 1):
        numerator = poly_shift(falling_factorial_poly(k), k)
        denominators = [[1, -i] for i in range(1, k)]
        coeffs = series_from_rational(numerator, denominators, order)
        c = binomial(m, k)
        for n in range(order + 1):
            total[n] += c * coeffs[n]
    return total


def gf_2_11__1_22(m: int, order: int) -> list[int]:
    """Series counting {2-11, 1-22}-avoiding words over an m-letter
    alphabet: 1 + sum_{k=1..m} (m)_k x^k / ((1-x) prod_{i=1..k-1}(1-ix)).

    The low-order convention is calibrated against direct enumeration: the
    k=0 summand is the constant 1 and the k-th summand carries x^k (one
    power higher than the raw summation bounds would suggest, which fails
    the enumeration cross-check at every length).
    """
    if m < 1:
        raise ValueError("alphabet size must be >= 1")
    total = [0] * (order + 1)
    total[0] = 1
    for k in range(1, m + 1):
        numerator = poly_shift([1], k)
        denominators = [[1, -1]] + [[1, -i] for i in range(1, k)]
        coeffs = series_from_rational(numerator, denominators, order)
        c = falling_factorial(m, k)
        for n in range(order + 1):
            total[n] += c * coeffs[n]
    return total
