"""Multifactorials, primorials, a generalized real factorial, signed
double-run factorials, factorial partial sums, factorial-prime scans and
integer factorization plumbing.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import NamedTuple, Sequence

from .primes import PrimeTable, is_prime, sieve_pritchard


def kf(n: int, k: int = 1) -> int:
    """Multifactorial n!...! (k marks): n*(n-k)*(n-2k)*... down to the least
    positive factor; kf(0, k) = 1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 1
    r = n % k
    start = k if r == 0 else r
    f = 1
    for j in range(start, n + 1, k):
        f *= j
    return f


def factorial(n: int) -> int:
    return kf(n, 1)


def primorial_n(n: int) -> int:
    """Product of all primes <= n (1 when n < 2)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n < 2:
        return 1
    p = 1
    for q in sieve_pritchard(max(n, 2)):
        if q > n:
            break
        p *= q
    return p


def kprimorial(p: int, k: int = 1, table: PrimeTable | None = None) -> int:
    """k-primorial of p: product of primes q <= p with q = p (mod k+1);
    plain primorial for k = 1 (the prime 2 always included there).

    kprimorial(1, k) = 1; composite p is rejected.  For k >= 4 the same
    congruence pattern mod (k+1) is extrapolated.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if p == 1:
        return 1
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    q = p % (k + 1)
    if q == 0:
        return p
    acc = 2 if k == 1 else 1
    if table is None or table.limit < p:
        table = sieve_pritchard(max(p, 2))
    for prime in table:
        if prime > p:
            break
        if prime % (k + 1) == q:
            acc *= prime
    return acc


def gf(x, delta, lam):
    """Generalized factorial: product of x - k*delta over k = 0, 1, ... while
    x - k*delta >= lam, skipping zero factors; gf(0, ., .) = 1.

    Exact Fractions in, exact Fraction out; floats otherwise.
    """
    if delta <= 0:
        raise ValueError("delta must be > 0")
    if x == 0:
        return 1
    exact = not (isinstance(x, float) or isinstance(delta, float) or isinstance(lam, float))
    if exact:
        x, delta, lam = Fraction(x), Fraction(delta), Fraction(lam)
    f = x
    k = 1
    while x - k * delta >= lam:
        term = x - k * delta
        if term != 0:
            f *= term
        k += 1
    return f


def smarandacheial(n: int, k: int = 1) -> int:
    """Signed two-sided multifactorial: product of (n - i*k) over all i >= 0
    with 0 < |n - i*k| <= n (zero factors skipped); may be negative."""
    if not n > k >= 1:
        raise ValueError("need n > k >= 1")
    f = 1
    i = 0
    while True:
        term = n - i * k
        if abs(term) > n:
            break
        if term != 0:
            f *= term
        i += 1
    return f


def smarandacheial_identity_counterexamples(n_max: int = 20) -> list[tuple[int, int]]:
    """Pairs (n, k) where the conjectured sign-squared closed form
    (-1)**((n-1-(n-1)%k)//k + 1) * kf(n, k)**2 fails.

    The conjecture holds exactly when k divides 2n (the negative factors then
    mirror the positive ones); this reports rather than asserts.
    """
    out = []
    for n in range(2, n_max + 1):
        for k in range(1, n):
            expected = (-1) ** ((n - 1 - (n - 1) % k) // k + 1) * kf(n, k) ** 2
            if smarandacheial(n, k) != expected:
                out.append((n, k))
    return out


def sigma_kf(k: int, n: int) -> int:
    """Partial sum of multifactorials: sum of kf(j, k) for j = 1..n."""
    if k < 1:
        raise ValueError("k must be >= 1")
    total = 0
    for j in range(1, n + 1):
        total += kf(j, k)
    return total


class FactorialPrime(NamedTuple):
    n: int
    sign: int  # +1 or -1
    value: int


def factorial_prime_scan(k: int, n_max: int = 30) -> list[FactorialPrime]:
    """Primes of the form kf(n, k) +/- 1 for n <= n_max, ascending by n with
    the -1 form first."""
    out = []
    for n in range(1, n_max + 1):
        base = kf(n, k)
        for sign in (-1, 1):
            v = base + sign
            if v >= 2 and is_prime(v):
                out.append(FactorialPrime(n, sign, v))
    return out


class Factorization:
    """Exact prime factorization as ascending (prime, exponent) pairs."""

    __slots__ = ("n", "factors")

    def __init__(self, n: int, factors: Sequence[tuple[int, int]]):
        self.n = n
        self.factors = list(factors)

    def __iter__(self):
        return iter(self.factors)

    def __eq__(self, other):
        return isinstance(other, Factorization) and self.factors == other.factors

    def __repr__(self):  # pragma: no cover
        return f"Factorization({self.n}, {self.factors})"

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    @property
    def max_prime(self) -> int:
        return self.factors[-1][0] if self.factors else 1

    def product(self) -> int:
        acc = 1
        for p, e in self.factors:
            acc *= p**e
        return acc

    def to_string(self) -> str:
        if self.n == 0:
            return "0"
        if not self.factors:
            return "1"
        return "*".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


_SMALL_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]


def _rho(n: int) -> int:
    """Brent-cycle Pollard rho with a deterministic parameter schedule."""
    if n % 2 == 0:
        return 2
    c = 1
    while True:
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
        if d != n:
            return d
        c += 1  # next polynomial, same starting point: reproducible


def factorize(n: int) -> Factorization:
    """Trial division by small primes, then recursive rho splitting backed by
    the deterministic Miller-Rabin test.  factorize(1) has no factors."""
    if n < 1:
        raise ValueError("n must be >= 1")
    original = n
    counts: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        while n % p == 0:
            counts[p] = counts.get(p, 0) + 1
            n //= p
    # continue trial division a bit further before rho
    p = 49
    while p * p <= n and p < 10_000:
        while n % p == 0:
            counts[p] = counts.get(p, 0) + 1
            n //= p
        p += 2
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            counts[m] = counts.get(m, 0) + 1
            continue
        d = _rho(m)
        stack.append(d)
        stack.append(m // d)
    return Factorization(original, sorted(counts.items()))
