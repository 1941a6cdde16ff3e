"""Bounded exhaustive searches for digit-defined number classes.

Each class comes with a search-domain solver (an integer scan locating the
digit count past which the defining condition cannot hold) and a scanner
that returns every member below the cap.  Scanners enumerate digit multisets
or split digit positions in half and join on value, which is equivalent to
the full numeric scan but far cheaper; every hit is re-verified forward.
"""

from __future__ import annotations

from itertools import combinations_with_replacement, permutations, product
from math import isqrt
from typing import Callable, Iterable, NamedTuple

from .digits import dn, dks, dp, nrd
from .factorials import kf
from .primes import is_prime

_SCAN_LIMITS = {
    "narcissistic": 10**7,
    "inverse": 10**7,
    "munchhausen": 2 * 10**7,
    "ascending": 2 * 10**7,
    "descending": 2 * 10**7,
    "factorion": 2 * 10**7,
}


class SearchDomain(NamedTuple):
    base: int
    max_digits: int
    upper_bound: int


def _max_attainable(kind: str, b: int, m: int, k: int = 1) -> int:
    if kind == "narcissistic":
        return m * (b - 1) ** m
    if kind == "inverse":
        return m**b
    if kind == "munchhausen":
        return m * (b - 1) ** (b - 1)
    if kind == "ascending":
        return sum((b - 1) ** j for j in range(1, m + 1))
    if kind == "descending":
        return sum((b - 1) ** j for j in range(2, m + 2))
    if kind == "factorion":
        return m * kf(b - 1, k)
    raise ValueError(f"unknown kind {kind!r}")


def search_domain(kind: str, b: int, k: int = 1) -> SearchDomain:
    """Smallest digit count m where b**(m-1) exceeds the class maximum, and
    the derived value cap (clipped to the per-class scan limit)."""
    if b < 2:
        raise ValueError("radix must be >= 2")
    m = 1
    while b ** (m - 1) <= _max_attainable(kind, b, m, k):
        m += 1
    cap = min(_max_attainable(kind, b, m, k), _SCAN_LIMITS[kind])
    return SearchDomain(b, m, max(cap, b))


def bound_narcissistic(b: int) -> SearchDomain:
    return search_domain("narcissistic", b)


def bound_inverse(b: int) -> SearchDomain:
    return search_domain("inverse", b)


def bound_munchhausen(b: int) -> SearchDomain:
    return search_domain("munchhausen", b)


def bound_ascending(b: int) -> SearchDomain:
    return search_domain("ascending", b)


def bound_descending(b: int) -> SearchDomain:
    return search_domain("descending", b)


def bound_factorion(b: int, k: int = 1) -> SearchDomain:
    return search_domain("factorion", b, k)


# ---------------------------------------------------------------------------
# Core enumerators


def _multiset_hits(b: int, m: int, value_of_digit: Callable[[int], int],
                   cap: int) -> Iterable[int]:
    """Values v <= cap with exactly m base-b digits whose digit multiset x
    satisfies v == sum(value_of_digit(d) for d in x)."""
    for combo in combinations_with_replacement(range(b), m):
        v = sum(value_of_digit(d) for d in combo)
        if v < 1 or v > cap:
            continue
        digits = dn(v, b)
        if len(digits) == m and sorted(digits) == list(combo):
            yield v


def _positional_hits(b: int, m: int, term: Callable[[int, int], int],
                     cap: int) -> Iterable[int]:
    """Values v <= cap with m base-b digits d_1..d_m (most significant first)
    satisfying v == sum(term(d_i, i)).  Positions are split in half and the
    halves joined on the residual value."""
    if m == 1:
        for d in range(1, b):
            if term(d, 1) == d and d <= cap:
                yield d
        return
    h = m // 2  # high-order positions 1..h
    low_count = m - h
    lows: dict[int, list[int]] = {}
    for tail in product(range(b), repeat=low_count):
        key = 0
        v_tail = 0
        for offset, d in enumerate(tail):
            i = h + 1 + offset
            key += term(d, i) - d * b ** (m - i)
            v_tail = v_tail * b + d
        lows.setdefault(key, []).append(v_tail)
    for head in product(range(1, b), *([range(b)] * (h - 1))):
        acc = 0
        v_head = 0
        for i, d in enumerate(head, start=1):
            acc += term(d, i) - d * b ** (m - i)
            v_head = v_head * b + d
        for v_tail in lows.get(-acc, ()):
            v = v_head * b**low_count + v_tail
            if v <= cap:
                yield v


def scan_narcissistic(b: int, cap: int | None = None) -> list[int]:
    """Numbers whose base-b digits each raised to the digit count sum back
    to the number (single digits 1..b-1 included)."""
    dom = bound_narcissistic(b)
    cap = dom.upper_bound if cap is None else cap
    hits = []
    for m in range(1, nrd(cap, b) + 1):
        hits.extend(_multiset_hits(b, m, lambda d: d**m, cap))
    return sorted(hits)


def scan_inverse_narcissistic(b: int, cap: int | None = None) -> list[int]:
    """Numbers equal to the sum of the digit count raised to each digit.
    Single-digit trivia (only 1 = 1**1 qualifies) are excluded as in the
    reference domains, which start at b."""
    dom = bound_inverse(b)
    cap = dom.upper_bound if cap is None else cap
    hits = []
    for m in range(2, nrd(cap, b) + 1):
        hits.extend(_multiset_hits(b, m, lambda d: m**d, cap))
    return sorted(h for h in hits if h >= b)


def scan_munchhausen(b: int, cap: int | None = None, zero_power_one: bool = True) -> list[int]:
    """Numbers equal to the sum of each digit raised to itself; the 0**0
    convention is a flag (default 1)."""
    dom = bound_munchhausen(b)
    cap = dom.upper_bound if cap is None else cap
    zero = 1 if zero_power_one else 0

    def val(d: int) -> int:
        return zero if d == 0 else d**d

    hits = []
    for m in range(1, nrd(cap, b) + 1):
        hits.extend(_multiset_hits(b, m, val, cap))
    return sorted(hits)


def scan_ascending_powers(b: int, cap: int | None = None) -> list[int]:
    """Numbers with digit sum in ascending powers: n = d1^1 + d2^2 + ...
    (most significant digit first).  Single-digit trivial solutions are
    excluded (domains start at b)."""
    dom = bound_ascending(b)
    cap = dom.upper_bound if cap is None else cap
    hits = []
    for m in range(2, nrd(cap, b) + 1):
        hits.extend(_positional_hits(b, m, lambda d, i: d**i, cap))
    return sorted(set(hits))


def scan_descending_powers(b: int, cap: int | None = None) -> list[int]:
    """Numbers with digit sum in descending powers: n = d1^(m+1) + d2^m +
    ... + dm^2."""
    dom = bound_descending(b)
    cap = dom.upper_bound if cap is None else cap
    hits = []
    for m in range(2, nrd(cap, b) + 1):
        hits.extend(_positional_hits(b, m, lambda d, i, m=m: d ** (m + 2 - i), cap))
    return sorted(set(hits))


def scan_factorions(b: int, k: int = 1, cap: int | None = None) -> list[int]:
    """Numbers equal to the sum of the order-k multifactorials of their
    digits (1 and 2 are the trivial members)."""
    dom = bound_factorion(b, k)
    cap = dom.upper_bound if cap is None else cap
    fact = [kf(d, k) for d in range(b)]
    hits = []
    for m in range(1, nrd(cap, b) + 1):
        hits.extend(_multiset_hits(b, m, lambda d: fact[d], cap))
    return sorted(hits)


def sum_product_value(n: int, b: int = 10) -> int:
    """Digit sum times digit product of n in base b."""
    return dks(n, b, 1) * dp(n, b)


def scan_sum_product(b: int, cap: int = 10**6, eps: int = 0) -> list[int]:
    """Numbers with n == digit_sum * digit_product (eps == 0), or within eps
    of it.  The exact search enumerates digit multisets; the approximate one
    falls back to a direct scan."""
    if eps:
        return [n for n in range(1, cap + 1) if abs(sum_product_value(n, b) - n) <= eps]
    hits = []
    for m in range(1, nrd(cap, b) + 1):
        for combo in combinations_with_replacement(range(b), m):
            s = sum(combo)
            p = 1
            for d in combo:
                p *= d
            v = s * p
            if v < 1 or v > cap:
                continue
            digits = dn(v, b)
            if len(digits) == m and sorted(digits) == list(combo):
                hits.append(v)
    return sorted(set(hits))


def digit_equation(b: int, k: int, alpha: int, beta: int, limit: int) -> list[int]:
    """Solutions n <= limit of alpha*(sum of digit k-th powers) +
    beta*(digit product) == n in base b."""
    out = []
    for n in range(b, limit + 1):
        if alpha * dks(n, b, k) + beta * dp(n, b) == n:
            out.append(n)
    return out


# ---------------------------------------------------------------------------
# Kaprekar


def kaprekar_map(n: int, width: int) -> int:
    """Sort the zero-padded digits descending minus ascending."""
    if not 2 <= width <= 7:
        raise ValueError("width must be in 2..7")
    if not 0 <= n < 10**width:
        raise ValueError(f"{n} does not fit in width {width}")
    digits = sorted(f"{n:0{width}d}")
    asc = int("".join(digits))
    desc = int("".join(reversed(digits)))
    return desc - asc


class KaprekarConstant(NamedTuple):
    constant: int
    frequency: int
    period: int


def kaprekar_analysis(width: int) -> list[KaprekarConstant]:
    """Iterate the width-digit map over every full-width seed; report each
    terminal cycle element with its period and how many seeds reach it first."""
    lo, hi = 10 ** (width - 1), 10**width
    kmap: dict[int, int] = {}

    def k(n: int) -> int:
        v = kmap.get(n)
        if v is None:
            v = kaprekar_map(n, width)
            kmap[n] = v
        return v

    entry: dict[int, tuple[int, int]] = {}  # value -> (first cycle element, period)
    freq: dict[int, int] = {}
    period: dict[int, int] = {}
    for seed in range(lo, hi):
        orbit = []
        pos: dict[int, int] = {}
        v = seed
        while v not in entry and v not in pos:
            pos[v] = len(orbit)
            orbit.append(v)
            v = k(v)
        if v in entry:
            const, per = entry[v]
        else:
            start = pos[v]
            cycle = orbit[start:]
            per = len(cycle)
            const = v
            for c in cycle:
                entry[c] = (c, per)
            orbit = orbit[:start]
        for node in orbit:
            entry[node] = (const, per)
        freq[const] = freq.get(const, 0) + 1
        period[const] = per
    return sorted(KaprekarConstant(c, freq[c], period[c]) for c in freq)


def kaprekar_orbit(n: int, width: int, max_steps: int = 100) -> list[int]:
    """Orbit of n under the width-digit map until the first repeat."""
    orbit = [n]
    seen = {n}
    for _ in range(max_steps):
        n = kaprekar_map(n, width)
        orbit.append(n)
        if n in seen:
            break
        seen.add(n)
    return orbit


# ---------------------------------------------------------------------------
# Digit-permutation classes


def _is_power(v: int, m: int) -> bool:
    """Exact m-th power test via an integer root."""
    if v < 1:
        return False
    r = round(v ** (1.0 / m))
    for c in (r - 1, r, r + 1):
        if c >= 0 and c**m == v:
            return True
    return False


def _predicate(name: str, arg: int | None = None) -> Callable[[int], bool]:
    if name == "prime":
        return lambda v: v >= 2 and is_prime(v)
    if name == "square":
        return lambda v: v >= 1 and isqrt(v) ** 2 == v
    if name == "cube":
        return lambda v: v >= 1 and _is_power(v, 3)
    if name == "m-power":
        m = arg
        return lambda v: v >= 1 and _is_power(v, m)
    if name == "factorial":
        facts = set()
        f, j = 1, 1
        while f <= 10**9:
            facts.add(f)
            j += 1
            f *= j
        return lambda v: v in facts
    if name == "divisor-of":
        q = arg
        return lambda v: v >= 1 and q % v == 0
    if name == "odd":
        return lambda v: v % 2 == 1
    if name == "even":
        return lambda v: v % 2 == 0
    if name == "triangular":
        def is_tri(v: int) -> bool:
            if v < 1:
                return False
            s = isqrt(8 * v + 1)
            return s * s == 8 * v + 1

        return is_tri
    if name == "multiple-of":
        p = arg
        return lambda v: v >= 1 and v % p == 0
    raise ValueError(f"unknown predicate {name!r}")


def _digit_permutation_values(n: int, skip_identity: bool) -> list[int]:
    """Values of all digit permutations of n (leading zeros collapse).

    Up to 4 digits every positional permutation is listed (duplicates kept,
    matching the reference censuses); beyond 4 the permutations are
    deduplicated.
    """
    digits = dn(n, 10)
    m = len(digits)
    idx = list(range(m))
    perms = permutations(idx)
    values = []
    first = True
    seen = set()
    for p in perms:
        if first:
            first = False
            if skip_identity:
                continue
        val = 0
        for i in p:
            val = 10 * val + digits[i]
        if m > 4:
            if val in seen:
                continue
            seen.add(val)
        values.append(val)
    return values


def permutation_class(n: int, predicate: str, mode: str = "first",
                      arg: int | None = None) -> bool | int:
    """Digit-permutation classifier.

    Modes: 'first' (some permutation, identity allowed, satisfies),
    'second' (n itself fails but some permutation satisfies),
    'third' (some non-identity permutation satisfies),
    'count' (number of satisfying permutations, identity included).
    """
    pred = _predicate(predicate, arg)
    if mode == "count":
        return sum(1 for v in _digit_permutation_values(n, False) if pred(v))
    if mode == "first":
        return any(pred(v) for v in _digit_permutation_values(n, False))
    if mode == "second":
        return not pred(n) and any(pred(v) for v in _digit_permutation_values(n, False))
    if mode == "third":
        return any(pred(v) for v in _digit_permutation_values(n, True))
    raise ValueError(f"unknown mode {mode!r}")


def permutation_census(a: int, b: int, predicate: str, mode: str,
                       arg: int | None = None, count: int | None = None) -> list[int]:
    """Numbers in [a, b] matching a permutation class; with mode 'count'
    keeps those with exactly `count` satisfying permutations."""
    out = []
    for n in range(a, b + 1):
        if mode == "count":
            if permutation_class(n, predicate, "count", arg) == count:
                out.append(n)
        elif mode == "third":
            if n > 9 and permutation_class(n, predicate, "third", arg):
                out.append(n)
        else:
            if permutation_class(n, predicate, mode, arg):
                out.append(n)
    return out


def is_wrong_number(n: int, max_steps: int = 1000) -> bool:
    """Extend the digit list by k-term products (k = digit count) and report
    whether n itself reappears among the generated terms."""
    digits = dn(n, 10)
    k = len(digits)
    if k < 2:
        raise ValueError("n must have at least two digits")
    window = list(digits)
    for _ in range(max_steps):
        term = 1
        for x in window[-k:]:
            term *= x
        window.append(term)
        if term == n:
            return True
        if term > n or term == 0:
            return False
        if all(x == 1 for x in window[-k:]):
            return False
    return False
