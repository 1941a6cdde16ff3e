"""The least-factorial-multiple function (Kempner's function) and its whole
family of derived searches: multifactorial and powered variants, ceil variant,
left-factorial and factorial-sum indices, near-primorial indices, 2^m -/+ 1
divisibility indices, X-nacci indices, triangular/square/cubic-sum indices
with their analytic lower bounds, self-power indices, divisor products,
power residues, the coprime residual product, and the numbers whose largest
prime factor equals the Kempner value.

Every search that the underlying propositions bound returns the typed
UNDEFINED sentinel when the bounded scan finds nothing.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd, isqrt
from typing import Callable, Iterable, Sequence

from .factorials import Factorization, factorize, kf, kprimorial, sigma_kf
from .primes import UNDEFINED, Undefined, is_prime

# ---------------------------------------------------------------------------
# Kempner function S(n): least m with n | m!


def _legendre(m: int, p: int) -> int:
    """Exponent of p in m!."""
    e = 0
    q = p
    while q <= m:
        e += m // q
        q *= p
    return e


@lru_cache(maxsize=None)
def _kempner_prime_power(p: int, a: int) -> int:
    """Least m with p**a | m!; the minimum is a multiple of p."""
    if a == 1:
        return p
    if a < p:
        return a * p
    lo, hi = 1, a  # m = j*p for j in [1, a]
    while lo < hi:
        mid = (lo + hi) // 2
        if _legendre(mid * p, p) >= a:
            hi = mid
        else:
            lo = mid + 1
    return lo * p


def kempner(n: int) -> int:
    """Least m such that n divides m! (computed from the factorization)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return 1
    return max(_kempner_prime_power(p, a) for p, a in factorize(n))


def kempner_scan(n: int) -> int:
    """Brute-force oracle for kempner(): grows m! modulo n until divisible."""
    if n == 1:
        return 1
    f = 1
    for m in range(1, n + 1):
        f = f * m % n
        if f == 0:
            return m
    raise AssertionError("unreachable: n divides n!")


def kempner_multi(n: int, k: int) -> int:
    """Least m with n | kf(m, k) (multifactorial variant); the running
    products are kept per residue class modulo n."""
    if k < 1:
        raise ValueError("k must be >= 1")
    residues = [1] * k  # kf(m, k) % n for the latest m in each class
    for m in range(1, n + 1):
        r = m % k
        cur = residues[r] * m % n
        residues[r] = cur
        if cur == 0:
            return m
    raise ValueError(f"no m <= {n} with {n} | kf(m, {k})")


def kempner_power(n: int, k: int) -> int:
    """Least m with n | (m!)^k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    f = 1
    for m in range(1, n + 1):
        f = f * m % n
        if pow(f, k, n) == 0:
            return m
    raise AssertionError("unreachable")


def ceil_divisible(n: int, k: int) -> int:
    """Ceil variant: least m with n | m^k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if n == 1:
        return 1
    m = 1
    for p, a in factorize(n):
        m *= p ** (-(-a // k))
    return m


# ---------------------------------------------------------------------------
# Left-factorial / factorial-sum indices over primes


def left_factorial_index(k: int, p: int) -> int | Undefined:
    """Least m in [2, k*p-1] with p | 1 + sigma_kf(k, m-1); the bound is the
    proposition limit past which no m can work."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    s = 0  # sigma_kf(k, m-1), built incrementally
    for m in range(2, max(k * p, 3)):
        s += kf(m - 1, k)
        if (1 + s) % p == 0:
            return m
    return UNDEFINED


def factorial_sum_index(k: int, p: int) -> int | Undefined:
    """Least m in [2, k*p-1] with p | sigma_kf(k, m)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    s = 1  # sigma_kf(k, 1)
    for m in range(2, max(k * p, 3)):
        s += kf(m, k)
        if s % p == 0:
            return m
    return UNDEFINED


def near_primorial(n: int, k: int = 1) -> int | Undefined:
    """Smallest prime p (among the first k*n primes) whose k-primorial is
    within one of a multiple of n; 1 for n = 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return 1
    from .primes import sieve_pritchard

    table = sieve_pritchard(max(k * n, 2))
    for p in table:
        if p > k * n:
            break
        v = kprimorial(p, k, table) % n
        if v == 0 or v == 1 % n or v == n - 1:
            return p
    return UNDEFINED


def mersenne_index_left(w: int) -> int | Undefined:
    """Least m <= w with w | 2^m - 1 (the multiplicative order of 2 mod w)."""
    if w < 1 or w % 2 == 0:
        raise ValueError("w must be odd and >= 1")
    v = 1
    for m in range(1, w + 1):
        v = v * 2 % w
        if v == 1 % w:
            return m
    return UNDEFINED


def mersenne_index_right(w: int) -> int | Undefined:
    """Least m <= w with w | 2^m + 1."""
    if w < 1 or w % 2 == 0:
        raise ValueError("w must be odd and >= 1")
    v = 1
    for m in range(1, w + 1):
        v = v * 2 % w
        if (v + 1) % w == 0:
            return m
    return UNDEFINED


# ---------------------------------------------------------------------------
# X-nacci divisibility indices

_XNACCI_DEFAULT_TERMS = {2: 122, 3: 133, 4: 304}


def xnacci_sequence(order: int, terms: int) -> list[int]:
    """First `terms` values of the order-step additive sequence starting
    1, 1, 2, 4, 8, ... (each term the sum of the previous `order`)."""
    if order < 2:
        raise ValueError("order must be >= 2")
    seq = [1, 1]
    while len(seq) < min(order + 1, terms):
        seq.append(2 ** (len(seq) - 1))
    while len(seq) < terms:
        seq.append(sum(seq[-order:]))
    return seq[:terms]


def xnacci_index(n: int, order: int = 2, horizon: int | None = None) -> int | Undefined:
    """Least index m with n dividing the m-th order-step additive term,
    searched within the horizon (defaults matching the reference tables)."""
    if horizon is None:
        horizon = _XNACCI_DEFAULT_TERMS.get(order, 300)
    seq = xnacci_sequence(order, horizon)
    for m, v in enumerate(seq, start=1):
        if v % n == 0:
            return m
    return UNDEFINED


# ---------------------------------------------------------------------------
# Triangular / square-sum / cube-sum divisibility indices (Z family)


def s1_bound(n: int) -> float:
    """Real root of m(m+1) = 2n: analytic lower bound for z1."""
    return ((8 * n + 1) ** 0.5 - 1) / 2


def tau_bound(n: int) -> float:
    """Helper radical for the z2 lower bound."""
    return (3 * (108 * n + (11664 * n * n - 3) ** 0.5)) ** (1 / 3)


def s2_bound(n: int) -> float:
    """Real root of m(m+1)(2m+1) = 6n: analytic lower bound for z2."""
    t = tau_bound(n)
    return 0.5 * (1 / t + t / 3 - 1)


def s3_bound(n: int) -> float:
    """Real root of (m(m+1))^2 = 4n: analytic lower bound for z3."""
    return ((8 * n**0.5 + 1) ** 0.5 - 1) / 2


def _ceil_f(x: float) -> int:
    i = int(x)
    return i if i >= x else i + 1


def z1(n: int) -> int:
    """Least m with n | 1 + 2 + ... + m.  Fast paths: odd primes give n - 1,
    powers of two give 2n - 1; the scan starts at the analytic bound."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return 1
    if n > 2 and is_prime(n):
        return n - 1
    n2 = 2 * n
    for m in range(max(_ceil_f(s1_bound(n)) - 1, 1), n):
        if m * (m + 1) % n2 == 0:
            return m
    return 2 * n - 1


def z2(n: int) -> int:
    """Least m with n | 1^2 + 2^2 + ... + m^2."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return 1
    n6 = 6 * n
    for m in range(max(_ceil_f(s2_bound(n)) - 1, 1), 2 * n):
        if m * (m + 1) * (2 * m + 1) % n6 == 0:
            return m
    return 2 * n - 1


def z3(n: int) -> int:
    """Least m with n | (1^3 + 2^3 + ... + m^3) = (m(m+1)/2)^2."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return 1
    if n == 2:
        return 3
    if is_prime(n):
        return n - 1
    n4 = 4 * n
    for m in range(max(_ceil_f(s3_bound(n)) - 1, 1), n + 1):
        if (m * (m + 1)) ** 2 % n4 == 0:
            return m
    raise AssertionError("unreachable: z3(n) <= n")


def alternating_index(n: int, k: int = 1) -> int:
    """Least m with n | 1^k - 2^k + 3^k - ... +- m^k (signed sum)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    acc = 0
    sign = 1
    m = 0
    while True:
        m += 1
        acc += sign * m**k
        sign = -sign
        if acc % n == 0:
            return m


def general_index(n: int, k: int = 1, op: str = "sum") -> int:
    """Least m with n dividing the op-accumulation of 1^k, 2^k, ..., m^k.

    op 'product' accumulates (m!)^k, 'sum' the power sum, 'alternating' the
    signed power sum.
    """
    if op == "product":
        return kempner_power(n, k)
    if op == "alternating":
        return alternating_index(n, k)
    if op != "sum":
        raise ValueError(f"unknown op {op!r}")
    acc = 0
    m = 0
    while True:
        m += 1
        acc = (acc + pow(m, k, n)) % n
        if acc == 0:
            return m


# ---------------------------------------------------------------------------
# Self-power indices


def selfpower_index(n: int) -> int:
    """Least m with n | m^m."""
    if n < 1:
        raise ValueError("n must be >= 1")
    for m in range(1, n + 1):
        if pow(m, m, n) == 0:
            return m
    raise AssertionError("unreachable")


def towerpower_index(n: int) -> int:
    """Least m with n | m^(m^m), via modular exponentiation with the exact
    integer exponent m^m (never materializing the tower)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    for m in range(1, n + 1):
        if pow(m, m**m, n) == 0:
            return m
    raise AssertionError("unreachable")


def inverse_factorial(n: int) -> int:
    """Least m with m! >= n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    f = 1
    m = 1
    while f < n:
        m += 1
        f *= m
    return m


def primitive_power_index(n: int, p: int, k: int = 1) -> int | Undefined:
    """Least m <= n*p with p**n | kf(m, k); the proposition bounds the scan."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError("k must be >= 1")
    target = p**n
    for m in range(1, n * p + 1):
        if kf(m, k) % target == 0:
            return m
    return UNDEFINED


def exp_b(b: int, n: int) -> int:
    """Largest k with b**k | n."""
    if b < 2:
        raise ValueError("b must be >= 2")
    if n < 1:
        raise ValueError("n must be >= 1")
    k = 0
    while n % b == 0:
        n //= b
        k += 1
    return k


def m_residue(n: int, m: int) -> int:
    """m-power residue: product of p^min(m-1, a) over the factorization."""
    if m < 2:
        raise ValueError("m must be >= 2")
    acc = 1
    for p, a in factorize(n):
        acc *= p ** min(m - 1, a)
    return acc


# ---------------------------------------------------------------------------
# Divisor products and simple numbers


def sigma0(n: int, fac: Factorization | None = None) -> int:
    """Number of divisors."""
    acc = 1
    for _, a in fac or factorize(n):
        acc *= a + 1
    return acc


def divisor_product(n: int) -> int:
    """Product of all divisors of n: n^(sigma0/2), integer-exact (odd
    divisor counts pair with the integer square root)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    d = sigma0(n)
    if d % 2 == 0:
        return n ** (d // 2)
    return isqrt(n) ** d


def proper_divisor_product(n: int) -> int:
    """Product of the proper divisors: divisor_product(n) / n."""
    return divisor_product(n) // n


def divisor_product_brute(n: int) -> int:
    """Oracle: direct product over all divisors."""
    acc = 1
    for d in range(1, n + 1):
        if n % d == 0:
            acc *= d
    return acc


def is_simple(n: int) -> bool:
    """Simple number: the product of its proper divisors is <= n."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return proper_divisor_product(n) <= n


def simple_census(limit: int) -> tuple[int, int]:
    """Count (simple, complex) numbers in 2..limit using a divisor-count
    sieve: simple means sigma0 <= 4 except n = p^3 (sigma0 = 4, P(n) = n^2... )

    A number is simple iff P(n) = n^(sigma0/2 - 1) <= n, i.e. sigma0 <= 4,
    except sigma0 = 4 works only when it is exactly 4 (n^1 = n); sigma0 > 4
    always fails.
    """
    counts = bytearray(limit + 1)
    for d in range(1, limit // 2 + 1):
        for mult in range(2 * d, limit + 1, d):
            if counts[mult] < 200:
                counts[mult] += 1
    simple = sum(1 for n in range(2, limit + 1) if counts[n] + 1 <= 4)
    return simple, (limit - 1) - simple


def residual_product(x: int, n: int) -> int:
    """Product of (x + c) over residues 1 <= c <= n coprime to n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    acc = 1
    for c in range(1, n + 1):
        if gcd(c, n) == 1:
            acc *= x + c
    return acc


def totient(n: int) -> int:
    acc = n
    for p, _ in factorize(n):
        acc = acc // p * (p - 1)
    return acc


# ---------------------------------------------------------------------------
# Numbers whose largest prime factor is the Kempner value


def kempner_equals_lpf(a: int, b: int, mode: str = "all",
                       factor_count: int | None = None) -> list[int]:
    """Numbers n in [a, b] with kempner(n) equal to the largest prime factor.

    mode 'all' keeps every match, 'nonprime' drops n with kempner(n) == n,
    'factors' keeps matches with exactly `factor_count` distinct primes.
    """
    if mode not in ("all", "nonprime", "factors"):
        raise ValueError(f"unknown mode {mode!r}")
    out = []
    for n in range(max(a, 2), b + 1):
        fac = factorize(n)
        s = max(_kempner_prime_power(p, e) for p, e in fac)
        if s != fac.max_prime:
            continue
        if mode == "nonprime" and s == n:
            continue
        if mode == "factors" and len(fac.factors) != factor_count:
            continue
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# Kind wrappers: the function of the first kind on prime powers, with the
# max rule for composite arguments.


def kempner_first_kind(n: int, a: int) -> int:
    """S_n(a): least m with n**a | m!; max rule over the prime powers of n."""
    if n == 1:
        return 1 if a >= 1 else 0
    return max(_kempner_prime_power(p, e * a) for p, e in factorize(n))


def kempner_second_kind(k: int, n: int) -> int:
    """S^k(n) = S_n(k)."""
    return kempner_first_kind(n, k)


def kempner_third_kind(a_seq: Callable[[int], int], b_seq: Callable[[int], int], n: int) -> int:
    """S_a^b(n) = S_{a(n)}(b(n)) for user-supplied index sequences."""
    return kempner_first_kind(a_seq(n), b_seq(n))


# ---------------------------------------------------------------------------
# Vector builders used by the constants evaluators


def prime_indexed_vector(func: Callable[[int, int], int | Undefined], k: int,
                         primes: Sequence[int]) -> list[int | Undefined]:
    return [func(k, p) for p in primes]


def int_indexed_vector(func: Callable[[int], int | Undefined], count: int) -> list[int | Undefined]:
    return [func(n) for n in range(1, count + 1)]
