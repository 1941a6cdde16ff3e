"""Prime generation and prime-derived analytics.

Three independent sieves (a linear-Eratosthenes variant on an odd-only byte
array, Sundaram, Atkin) that must agree, an immutable prime table with
membership/index lookup and an optional on-disk cache, prime-part functions,
gap statistics, final-digit counts and prime-generating polynomial runs.
"""

from __future__ import annotations

import os
import struct
from bisect import bisect_left, bisect_right
from typing import Callable, NamedTuple, Sequence

_CACHE_ENV = "ARITHFN_CACHE"
_CACHE_MAGIC = b"AFN1"

# Witnesses making Miller-Rabin deterministic for n < 3.3e24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test (exact below 3.3e24; the
    fixed witness set is conjecturally exact far beyond)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Undefined:
    """Typed sentinel for searches that provably cannot succeed.

    Rendered as -1 in text output for table fidelity, as null in JSON.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):  # pragma: no cover
        return "Undefined"

    def __bool__(self):
        return False


UNDEFINED = Undefined()


class PrimeTable:
    """Immutable sorted table of all primes <= limit."""

    __slots__ = ("limit", "primes", "_set")

    def __init__(self, limit: int, primes: Sequence[int]):
        self.limit = limit
        self.primes = list(primes)
        self._set = set(self.primes)

    def __len__(self) -> int:
        return len(self.primes)

    def __iter__(self):
        return iter(self.primes)

    def __getitem__(self, i: int) -> int:
        return self.primes[i]

    def __contains__(self, n: int) -> bool:
        return n in self._set

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeTable) and self.primes == other.primes

    def index(self, p: int) -> int:
        """0-based rank of prime p in the table."""
        i = bisect_left(self.primes, p)
        if i == len(self.primes) or self.primes[i] != p:
            raise ValueError(f"{p} is not in the table")
        return i

    def count_leq(self, x: int) -> int:
        return bisect_right(self.primes, x)


def _cache_path(limit: int) -> str | None:
    root = os.environ.get(_CACHE_ENV)
    if not root:
        return None
    os.makedirs(root, exist_ok=True)
    return os.path.join(root, f"primes-{limit}.tbl")


def _cache_load(limit: int) -> list[int] | None:
    path = _cache_path(limit)
    if not path or not os.path.exists(path):
        return None
    with open(path, "rb") as fh:
        header = fh.read(16)
        if len(header) < 16 or header[:4] != _CACHE_MAGIC:
            return None
        lim, count = struct.unpack("<qI", header[4:])
        if lim != limit:
            return None
        data = fh.read(8 * count)
    return list(struct.unpack(f"<{count}q", data))


def _cache_store(limit: int, primes: Sequence[int]) -> None:
    path = _cache_path(limit)
    if not path:
        return
    with open(path, "wb") as fh:
        fh.write(_CACHE_MAGIC + struct.pack("<qI", limit, len(primes)))
        fh.write(struct.pack(f"<{len(primes)}q", *primes))


def sieve_pritchard(limit: int, cache: bool = True) -> PrimeTable:
    """Primes <= limit via an odd-only byte array (linear-Eratosthenes
    flavour: composites struck only from p*p upward)."""
    if limit < 2:
        raise ValueError("limit must be >= 2")
    if cache:
        cached = _cache_load(limit)
        if cached is not None:
            return PrimeTable(limit, cached)
    # index j <-> odd number 2*j + 1, j >= 1
    half = (limit - 1) // 2
    flags = bytearray([1]) * (half + 1)
    i = 1
    while True:
        p = 2 * i + 1
        if p * p > limit:
            break
        if flags[i]:
            start = (p * p - 1) // 2
            flags[start :: p] = bytearray(len(range(start, half + 1, p)))
        i += 1
    primes = [2] + [2 * j + 1 for j in range(1, half + 1) if flags[j]]
    if cache:
        _cache_store(limit, primes)
    return PrimeTable(limit, primes)


def sieve_sundaram(limit: int) -> PrimeTable:
    """Primes <= limit via Sundaram's i + j + 2ij exclusions."""
    if limit < 2:
        raise ValueError("limit must be >= 2")
    m = limit // 2
    flags = bytearray([1]) * (m + 1)
    i = 1
    while i + i * (2 * i + 1) <= m:
        start = i + i * (2 * i + 1)  # j = i
        step = 2 * i + 1
        flags[start :: step] = bytearray(len(range(start, m + 1, step)))
        i += 1
    primes = [2] + [2 * k + 1 for k in range(1, m + 1) if flags[k] and 2 * k + 1 <= limit]
    return PrimeTable(limit, primes)


def sieve_atkin(limit: int) -> PrimeTable:
    """Primes <= limit via the Atkin quadratic-form toggles mod 12."""
    if limit < 2:
        raise ValueError("limit must be >= 2")
    flags = bytearray(limit + 1)
    sqrt_limit = int(limit**0.5) + 1
    for x in range(1, sqrt_limit + 1):
        xx4 = 4 * x * x
        xx3 = 3 * x * x
        for y in range(1, sqrt_limit + 1):
            yy = y * y
            n = xx4 + yy
            if n <= limit and n % 12 in (1, 5):
                flags[n] ^= 1
            n = xx3 + yy
            if n <= limit and n % 12 == 7:
                flags[n] ^= 1
            n = xx3 - yy
            if x > y and n <= limit and n % 12 == 11:
                flags[n] ^= 1
    for p in range(5, sqrt_limit + 1):
        if flags[p]:
            step = p * p
            flags[step :: step] = bytearray(len(range(step, limit + 1, step)))
    primes = [p for p in (2, 3) if p <= limit]
    primes += [n for n in range(5, limit + 1) if flags[n]]
    return PrimeTable(limit, primes)


_SIEVES: dict[str, Callable[[int], PrimeTable]] = {
    "pritchard": sieve_pritchard,
    "sundaram": sieve_sundaram,
    "atkin": sieve_atkin,
}


def sieve(limit: int, method: str = "pritchard") -> PrimeTable:
    try:
        return _SIEVES[method](limit)
    except KeyError:
        raise ValueError(f"unknown sieve {method!r}") from None


def is_prime_S(n: int, s_func: Callable[[int], int] | None = None) -> bool:
    """Primality via the least-factorial-multiple fixed point: for n > 4 the
    number is prime iff S(n) == n, where S(n) is the least m with n | m!."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n in (1, 4):
        return False
    if n in (2, 3):
        return True
    if s_func is None:
        from .sfn import kempner as s_func  # noqa: PLC0415 (lazy; avoids cycle)
    return s_func(n) == n


def prime_count_S(n: int, s_func: Callable[[int], int] | None = None) -> int:
    """pi(n) computed as -1 + sum(floor(S(k)/k) for k in 2..n) for n >= 4."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return 0
    if n == 2:
        return 1
    if n == 3:
        return 2
    if s_func is None:
        from .sfn import kempner as s_func  # noqa: PLC0415
    return -1 + sum(s_func(k) // k for k in range(2, n + 1))


def ipp(x, table: PrimeTable):
    """Largest prime strictly below x; Undefined outside [2, limit]."""
    if x < 2 or x > table.limit:
        return UNDEFINED
    i = bisect_left(table.primes, x)
    if i == 0:
        return UNDEFINED
    return table.primes[i - 1]


def spp(x, table: PrimeTable):
    """Smallest prime >= x; Undefined outside [1, limit]."""
    if x < 1 or x > table.limit:
        return UNDEFINED
    i = bisect_left(table.primes, x)
    if i == len(table.primes):
        return UNDEFINED
    return table.primes[i]


def ppi(x, table: PrimeTable):
    """Fractional part below: x - ipp(x)."""
    p = ipp(x, table)
    return UNDEFINED if p is UNDEFINED else x - p


def pps(x, table: PrimeTable):
    """Fractional part above: spp(x) - x."""
    p = spp(x, table)
    return UNDEFINED if p is UNDEFINED else p - x


class GapRecord(NamedTuple):
    lower_prime: int
    gap: int


def maximal_gaps(limit: int, table: PrimeTable | None = None) -> list[GapRecord]:
    """Record-setting gaps between consecutive primes up to limit, seeded
    with (2,1) and (3,2)."""
    if limit < 3:
        raise ValueError("limit must be >= 3")
    # sieve past the limit so the gap above the last prime <= limit counts
    if table is None or table.limit < limit + 300:
        table = sieve_pritchard(limit + 300)
    records = [GapRecord(2, 1), GapRecord(3, 2)]
    best = 2
    primes = table.primes
    hi = table.count_leq(limit)
    for i in range(1, hi):
        g = primes[i + 1] - primes[i]
        if g > best:
            best = g
            records.append(GapRecord(primes[i], g))
    return records


def gap_histogram(limit: int, gaps: Sequence[int] | None = None,
                  table: PrimeTable | None = None) -> dict[int, int]:
    """Count consecutive-prime pairs below limit per gap length."""
    if limit < 3:
        raise ValueError("limit must be >= 3")
    if table is None or table.limit < limit:
        table = sieve_pritchard(limit)
    counts: dict[int, int] = {}
    primes = table.primes
    hi = table.count_leq(limit)
    for i in range(hi - 1):
        g = primes[i + 1] - primes[i]
        counts[g] = counts.get(g, 0) + 1
    if gaps is not None:
        return {g: counts.get(g, 0) for g in gaps}
    return counts


def final_digit_counts(k_max: int, table: PrimeTable) -> list[list[int]]:
    """Cumulative counts of decimal final digits over the first k primes.

    Row k (1-based) is a 10-slot list; row[d] is how many of the first k
    primes end in digit d.  Row 1 counts the prime 2.
    """
    if k_max > len(table):
        raise ValueError("k_max exceeds table size")
    rows = [[0] * 10]
    rows[0][2] = 1
    for k in range(2, k_max + 1):
        row = rows[-1].copy()
        row[table.primes[k - 1] % 10] += 1
        rows.append(row)
    return rows


def umd(k: int) -> int:
    """Ceiling of k/4: upper bound for the mean count of each final digit."""
    return -(-k // 4)


class PolynomialRun(NamedTuple):
    values: list[int]
    prime_flags: list[bool]
    prime_count: int  # distinct primes


def poly_prime_run(coeffs: Sequence[int], domain: Sequence[int],
                   absolute: bool = False) -> PolynomialRun:
    """Evaluate a polynomial (coeffs, ascending powers) over a domain and
    count the distinct primes among the (optionally absolute) values."""
    values = []
    for n in domain:
        acc = 0
        for c in reversed(coeffs):
            acc = acc * n + c
        values.append(abs(acc) if absolute else acc)
    flags = [v >= 2 and is_prime(v) for v in values]
    distinct = {v for v, f in zip(values, flags) if f}
    return PolynomialRun(values, flags, len(distinct))


def greedy_prime_decomposition(n: int, table: PrimeTable) -> list[int]:
    """Greedy expansion n = q1 + q2 + ... with each q the largest prime <=
    the remainder; a trailing 1 absorbs a unit remainder."""
    if n < 1:
        raise ValueError("n must be >= 1")
    parts = []
    r = n
    while r > 1:
        i = table.count_leq(r)
        if i == 0:
            break
        p = table.primes[i - 1]
        parts.append(p)
        r -= p
    if r == 1:
        parts.append(1)
    return parts
