"""Digit-level primitives: extraction, reconstruction, reversal, concatenation,
digit sums/products, generalized period, and two classroom algorithms
(multiply-by-halving with an arbitrary factor, division by k**n).

All functions treat numbers as arbitrary-precision non-negative integers.
Digit vectors are most-significant-first lists for a radix b >= 2.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple


def nrd(n: int, b: int = 10) -> int:
    """Number of digits of n in base b; nrd(0, b) = 1 by convention."""
    if b < 2:
        raise ValueError("radix must be >= 2")
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 1
    count = 0
    while n:
        n //= b
        count += 1
    return count


def dn(n: int, b: int = 10) -> list[int]:
    """Digits of n in base b, most significant first; dn(0, b) = [0]."""
    if b < 2:
        raise ValueError("radix must be >= 2")
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return [0]
    digits = []
    while n:
        n, d = divmod(n, b)
        digits.append(d)
    digits.reverse()
    return digits


def from_digits(digits: Iterable[int], b: int = 10) -> int:
    """Rebuild the integer from most-significant-first digits in base b."""
    if b < 2:
        raise ValueError("radix must be >= 2")
    n = 0
    for d in digits:
        if not 0 <= d < b:
            raise ValueError(f"digit {d} out of range for radix {b}")
        n = n * b + d
    return n


def reverse_number(n: int, b: int = 10) -> int:
    """Reverse the base-b digits of n (leading zeros of the reverse drop)."""
    return from_digits(reversed(dn(n, b)), b)


def concat(n: int, m: int) -> int:
    """Base-10 concatenation of n and m; concat(n, 0) = n*10 by convention."""
    if m == 0:
        return n * 10
    return n * 10 ** nrd(m, 10) + m


def dks(n: int, b: int = 10, k: int = 1) -> int:
    """Sum of the k-th powers of the base-b digits of n."""
    if k < 1:
        raise ValueError("power must be >= 1")
    return sum(d**k for d in dn(n, b))


def dp(n: int, b: int = 10) -> int:
    """Product of the base-b digits of n (0 whenever a digit is 0)."""
    p = 1
    for d in dn(n, b):
        p *= d
    return p


class GeneralizedPeriod(NamedTuple):
    digit_set: frozenset[int]
    group_count: int
    length: int


def generalized_period(m: int, b: int = 10) -> GeneralizedPeriod:
    """Distinct digits of m plus the greedy count of contiguous groups each
    containing every distinct digit, and the cardinality of the digit set.
    """
    digits = dn(m, b)
    full = frozenset(digits)
    groups = 0
    seen: set[int] = set()
    for d in digits:
        seen.add(d)
        if seen == full:
            groups += 1
            seen.clear()
    return GeneralizedPeriod(full, groups, len(full))


class MultiplyTrace(NamedTuple):
    product: int
    rows: list[tuple[int, int, int, int]]  # (a_i, b_i, r_i, a_i*r_i)


def romanian_multiply(a: int, b: int, k: int = 2) -> MultiplyTrace:
    """Multiply a*b using only scaling by k, integer division by k and sums.

    Each trace row is (a_i, b_i, b_i mod k, a_i*(b_i mod k)); the product is
    the sum of the last column.  k = 2 is the classic halving method.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    rows = []
    ai, bi = a, b
    r = bi % k
    rows.append((ai, bi, r, ai * r))
    while bi > 1:
        ai *= k
        bi //= k
        r = bi % k
        rows.append((ai, bi, r, ai * r))
    total = sum(row[3] for row in rows)
    return MultiplyTrace(total, rows)


class DivisionTrace(NamedTuple):
    quotient: int
    remainder: int
    rows: list[tuple[int, int, int]]  # (a_j, r_j, k**(j-1)*r_j)


def divide_power(a: int, k: int, n: int) -> DivisionTrace:
    """Divide a by k**n using n single divisions by k.

    The remainder is accumulated as sum(k**(j-1) * r_j); satisfies
    quotient*k**n + remainder == a with 0 <= remainder < k**n.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if n < 1:
        raise ValueError("n must be >= 1")
    rows = []
    remainder = 0
    for j in range(1, n + 1):
        q, r = divmod(a, k)
        part = k ** (j - 1) * r
        remainder += part
        rows.append((a, r, part))
        a = q
    return DivisionTrace(a, remainder, rows)
