"""High-precision evaluation of constant families.

Eleven partial-sum families applied to any finite integer sequence (entries
may be the UNDEFINED sentinel, which every family skips), the root of the
power-gap equation attached to each maximal prime gap, and the metallic
means.  Families with factorial denominators are summed in exact rationals
and rendered to any number of significant digits; the square-root families
evaluate at 256-bit precision.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import NamedTuple, Sequence

import mpmath

from .primes import UNDEFINED, Undefined

SeqEntry = int  # or Undefined


class SeriesEstimate(NamedTuple):
    partial_sum: Fraction | float
    last_term_magnitude: float
    terms_included: int

    def decimals(self, digits: int = 20) -> str:
        return render_decimal(self.partial_sum, digits)


def render_decimal(value, digits: int = 20) -> str:
    """Deterministic decimal rendering to `digits` significant digits
    (truncated, matching fixed-precision display of exact partial sums)."""
    if isinstance(value, Fraction):
        neg = value < 0
        v = -value if neg else value
        if v == 0:
            return "0." + "0" * (digits - 1)
        ip = int(v)
        int_digits = len(str(ip)) if ip > 0 else 0
        frac_digits = digits - int_digits
        scaled = (v.numerator * 10**frac_digits * 2 + v.denominator) // (2 * v.denominator)
        # rounding may gain an integer digit (e.g. 0.9999 -> 1.00)
        if len(str(scaled)) > (digits if ip > 0 else frac_digits):
            frac_digits -= 1
            scaled = (v.numerator * 10**frac_digits * 2 + v.denominator) // (2 * v.denominator)
        s = str(scaled)
        if frac_digits > 0:
            s = s.rjust(frac_digits + 1, "0")
            s = s[:-frac_digits] + "." + s[-frac_digits:]
        return ("-" if neg else "") + s
    return mpmath.nstr(mpmath.mpf(value), digits)


def _factorial(n: int) -> int:
    f = 1
    for j in range(2, n + 1):
        f *= j
    return f


def _defined(seq: Sequence) -> list[tuple[int, int]]:
    """(1-based index, value) for the defined entries."""
    return [(k, v) for k, v in enumerate(seq, start=1)
            if not isinstance(v, Undefined) and v != -1]


def series_family(seq: Sequence, family: int, alpha: int = 1, r: int = 1,
                  start: int = 1) -> SeriesEstimate:
    """Partial sum of family 1..11 over the finite sequence.

    1: sum 1/s_k!                 2: sum s_k/k!
    3: sum 1/prod_{j<=k} s_j      4: sum k^alpha/prod_{j<=k} s_j
    5: sum (-1)^(k+1) s_k/k!      6: sum s_k/(k+1)!
    7: sum_{k>=r} s_k/(k+r)!      8: sum_{k>=r} s_k/(k-r)!
    9: sum 1/(sum_{j<=k} s_j!)   10: sum 1/(s_k^alpha sqrt(s_k!))
    11: sum 1/(s_k^alpha sqrt((s_k+1)!))

    Undefined (or -1) entries are skipped everywhere: in the terms, in the
    running products and in the factorial sums.  `start` shifts the summation
    index base for families whose references start at k = 2 (pass start=2
    with the sequence aligned accordingly).
    """
    entries = _defined(seq)
    if not entries:
        raise ValueError("no defined entries")
    if family in (1, 2, 3, 4, 5, 6, 9):
        total = Fraction(0)
        last = Fraction(0)
        count = 0
        prod = 1
        fact_sum = 0
        running: dict[int, int] = {}
        for k, v in entries:
            if family == 1:
                term = Fraction(1, _factorial(v))
            elif family == 2:
                term = Fraction(v, _factorial(k))
            elif family == 3:
                prod *= v
                term = Fraction(1, prod)
            elif family == 4:
                prod *= v
                term = Fraction(k**alpha, prod)
            elif family == 5:
                term = Fraction((-1) ** (k + 1) * v, _factorial(k))
            elif family == 6:
                term = Fraction(v, _factorial(k + 1))
            else:  # family 9
                fact_sum += _factorial(v)
                term = Fraction(1, fact_sum)
            total += term
            last = term
            count += 1
        return SeriesEstimate(total, float(abs(last)), count)
    if family in (7, 8):
        total = Fraction(0)
        last = Fraction(0)
        count = 0
        for k, v in entries:
            if k < r:
                continue
            denom = _factorial(k + r) if family == 7 else _factorial(k - r)
            term = Fraction(v, denom)
            total += term
            last = term
            count += 1
        if count == 0:
            raise ValueError("no terms at or past r")
        return SeriesEstimate(total, float(abs(last)), count)
    if family in (10, 11):
        with mpmath.workprec(256):
            total = mpmath.mpf(0)
            last = mpmath.mpf(0)
            count = 0
            for _, v in entries:
                f = _factorial(v) if family == 10 else _factorial(v + 1)
                term = 1 / (mpmath.mpf(v) ** alpha * mpmath.sqrt(mpmath.mpf(f)))
                total += term
                last = term
                count += 1
            return SeriesEstimate(float(total), float(abs(last)), count)
    raise ValueError(f"family must be 1..11, got {family}")


def series_family_hp(seq: Sequence, family: int, alpha: int = 1, r: int = 1,
                     digits: int = 25):
    """Families 10/11 at explicit precision, returned as an mpmath string."""
    entries = _defined(seq)
    with mpmath.workprec(max(4 * digits, 256)):
        total = mpmath.mpf(0)
        for _, v in entries:
            f = _factorial(v) if family == 10 else _factorial(v + 1)
            total += 1 / (mpmath.mpf(v) ** alpha * mpmath.sqrt(mpmath.mpf(f)))
        return mpmath.nstr(total, digits)


# ---------------------------------------------------------------------------
# Root of the power-gap equation per maximal-gap pair


def andrica_root(p: int, g: int, precision: float = 1e-16) -> float:
    """The x in (0, 1] with (p+g)**x - p**x == 1 (bisection; the stated
    equation's printed roots satisfy this orientation)."""
    if p < 2 or g < 1:
        raise ValueError("need p >= 2, g >= 1")
    with mpmath.workprec(128):
        f = lambda x: mpmath.mpf(p + g) ** x - mpmath.mpf(p) ** x - 1
        lo, hi = mpmath.mpf(0), mpmath.mpf(1)
        if f(hi) <= 0:
            return 1.0
        for _ in range(220):
            mid = (lo + hi) / 2
            if f(mid) < 0:
                lo = mid
            else:
                hi = mid
            if (hi - lo) / hi < precision / 16:
                break
        return float((lo + hi) / 2)


# ---------------------------------------------------------------------------
# Metallic means


class Surd(NamedTuple):
    a: int
    b: int
    c: int  # value = (a + sqrt(b)) / c

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a // self.c)
        num = f"sqrt({self.b})" if self.a == 0 else f"{self.a}+sqrt({self.b})"
        return num if self.c == 1 else f"({num})/{self.c}"

    def value(self) -> float:
        return (self.a + self.b**0.5) / self.c


def _reduce_surd(a: int, b: int, c: int) -> Surd:
    """Canonical (a + sqrt(b))/c: square factors pulled out of the radicand
    when the whole expression stays a single surd, fractions reduced."""
    from math import gcd

    d = 1
    k = 2
    while k * k <= b:
        while b % (k * k) == 0:
            b //= k * k
            d *= k
        k += 1
    if b == 1:  # rational
        a, b, d = a + d, 0, 0
        g = gcd(a, c)
        return Surd(a // g, 0, c // g)
    g = gcd(gcd(a, d), c)
    a, d, c = a // g, d // g, c // g
    if d > 1:
        b *= d * d  # keep the single-sqrt form (a + sqrt(d^2 b'))/c
    return Surd(a, b, c)


def metallic_mean(n: int, kind: int = 1) -> tuple[float, Surd]:
    """Positive root of x^2 - n*x - 1 = 0 (kind 1) or x^2 - x - n = 0
    (kind 2), as a float plus an exact (a + sqrt(b))/c form."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if kind == 1:
        disc = n * n + 4
        surd = _reduce_surd(n, disc, 2)
    elif kind == 2:
        disc = 4 * n + 1
        surd = _reduce_surd(1, disc, 2)
    else:
        raise ValueError("kind must be 1 or 2")
    value = surd.a / surd.c if surd.b == 0 else surd.value()
    return value, surd
