"""Sequence generators and screens: concatenation families, elimination
sieves, almost primes, digit-reversal prime pairs, prime-digit primes,
palindromes (classical and grouped), periodic digit maps, complements,
position sequences, multiplicative sequences, progression classification,
two/three-prime decomposition tables, constructive sets, quark/antiquark
combination counts, special-expression prime hunts and power-gap equations.

Generators are bounded and deterministic; every emitted term can be
re-validated against its defining condition.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations, product
from math import gcd, isqrt
from typing import Callable, Iterable, NamedTuple, Sequence

from .digits import concat, dks, dn, dp, from_digits, nrd, reverse_number
from .factorials import factorize, Factorization, kf, kprimorial
from .primes import PrimeTable, is_prime, sieve_pritchard


class SeqRecord(NamedTuple):
    index: int
    value: int
    is_prime: bool | None = None
    factorization: Factorization | None = None


def annotate(values: Iterable[int], prime_flag: bool = False,
             factor: bool = False, start: int = 1) -> list[SeqRecord]:
    out = []
    for i, v in enumerate(values, start=start):
        out.append(SeqRecord(
            i, v,
            is_prime(v) if prime_flag else None,
            factorize(v) if factor and v >= 1 else None,
        ))
    return out


# ---------------------------------------------------------------------------
# Concatenation families


def consecutive_sequence(n_max: int, b: int = 10) -> list[int]:
    """1, 12, 123, ... with 'digits' 1..n concatenated in base b (each k is
    written in base b before concatenation)."""
    acc_digits: list[int] = []
    out = []
    for k in range(1, n_max + 1):
        acc_digits.extend(dn(k, b))
        out.append(from_digits(acc_digits, b))
    return out


def circular_sequence(m_max: int) -> list[int]:
    """All digit-permutations of 1..m read as decimal numbers, for m = 1
    up to m_max, in lexicographic order per block."""
    out = []
    for m in range(1, m_max + 1):
        for perm in permutations(range(1, m + 1)):
            out.append(int("".join(str(d) for d in perm)))
    return out


def symmetric_sequence(n_max: int) -> list[int]:
    """1, 11, 121, 1221, 12321, ...: 1..k concatenated with its mirror
    (even terms repeat the middle, odd terms do not)."""
    out = []
    for n in range(1, n_max + 1):
        k = (n + 1) // 2
        ups = "".join(str(j) for j in range(1, k + 1))
        start = k if n % 2 == 0 else k - 1
        downs = "".join(str(j) for j in range(start, 0, -1))
        out.append(int(ups + downs))
    return out


def deconstructive_sequence(cycle: Sequence[int], n_max: int) -> list[int]:
    """Terms of lengths 1, 2, 3, ... peeled from the endlessly repeated
    digit cycle."""
    out = []
    pos = 0
    for length in range(1, n_max + 1):
        digits = [cycle[(pos + i) % len(cycle)] for i in range(length)]
        pos += length
        out.append(int("".join(str(d) for d in digits)))
    return out


def concat_forward(seq: Sequence[int], count: int | None = None) -> list[int]:
    """Running concatenation s1, s1s2, s1s2s3, ..."""
    count = len(seq) if count is None else count
    out = []
    acc = seq[0]
    out.append(acc)
    for k in range(1, count):
        acc = concat(acc, seq[k])
        out.append(acc)
    return out


def concat_backward(seq: Sequence[int], count: int | None = None) -> list[int]:
    """Running concatenation with new terms prepended: s1, s2s1, s3s2s1..."""
    count = len(seq) if count is None else count
    out = []
    acc = seq[0]
    out.append(acc)
    for k in range(1, count):
        acc = concat(seq[k], acc)
        out.append(acc)
    return out


def permutation_sequence(n: int) -> int:
    """135...(2n-1)(2n)(2n-2)...42 as a decimal number."""
    odds = "".join(str(j) for j in range(1, 2 * n, 2))
    evens = "".join(str(j) for j in range(2 * n, 1, -2))
    return int(odds + evens)


def pierced_chain(n_max: int) -> list[int]:
    """c(k)/101 where c(k) = 101 * (1 0001 0001 ... with k-1 insertions)."""
    out = []
    v = 1
    for _ in range(n_max):
        out.append(v)
        v = v * 10**4 + 1
    return out


def combinatorial_digit_values(digit_set: Sequence[int], choose: int) -> list[int]:
    """Concatenations of all `choose`-combinations of the digit set, in the
    order the digits are given."""
    out = []
    for combo in combinations(digit_set, choose):
        out.append(int("".join(str(d) for d in combo)))
    return out


def combinatorial_digit_primes(digit_set: Sequence[int], choose: int) -> tuple[list[int], int]:
    values = combinatorial_digit_values(digit_set, choose)
    return values, sum(1 for v in values if is_prime(v))


# ---------------------------------------------------------------------------
# Digit-reversal prime pairs and prime-digit primes


def luhn_primes(order: int, limit: int, table: PrimeTable | None = None) -> list[int]:
    """Primes p <= limit with p^order + reverse(p)^order prime.

    Only primes whose leading digit is even can qualify (the sum must stay
    odd); order 2 sums ending in 5 are skipped outright.
    """
    if limit < 11:
        raise ValueError("limit must be >= 11")
    if table is None or table.limit < limit:
        table = sieve_pritchard(limit)
    out = []
    for p in table:
        if p > limit:
            break
        lead = p
        while lead >= 10:
            lead //= 10
        if lead % 2 == 1:
            continue
        s = p**order + reverse_number(p) ** order
        if order == 2 and s % 10 == 5:
            continue
        if is_prime(s):
            out.append(p)
    return out


def prime_digit_primes(primes: Iterable[int], base: int = 10) -> list[int]:
    """Primes all of whose base-`base` digits are themselves prime.

    base 100 / 1000 treat 2- / 3-digit windows as digits (higher orders).
    """
    out = []
    for p in primes:
        if all(is_prime(d) for d in dn(p, base)):
            out.append(p)
    return out


def prime_digit_subsequence(count: int) -> list[int]:
    """First `count` primes whose decimal digits are all in {2, 3, 5, 7},
    generated in increasing order by digit length."""
    out = []
    length = 1
    while len(out) < count:
        for tup in product((2, 3, 5, 7), repeat=length):
            v = from_digits(tup, 10)
            if is_prime(v):
                out.append(v)
                if len(out) == count:
                    return out
        length += 1
    return out


# ---------------------------------------------------------------------------
# Palindromes


def group_concat(groups: Sequence[int], b: int = 10) -> int:
    """Concatenate group values in base b, first group most significant."""
    n = 0
    for g in groups:
        n = n * b ** nrd(g, b) + g
    return n


def gsp1(groups: Sequence[int], b: int = 10) -> int:
    """Grouped palindrome with unrepeated centre: A1..An..A1."""
    return group_concat(list(groups) + list(groups[-2::-1]), b)


def gsp2(groups: Sequence[int], b: int = 10) -> int:
    """Grouped palindrome with doubled centre: A1..AnAn..A1."""
    return group_concat(list(groups) + list(groups[::-1]), b)


def is_palindrome(n: int, b: int = 10) -> bool:
    d = dn(n, b)
    return d == d[::-1]


def palindrome_count(max_power: int, b: int) -> list[int]:
    """Count palindromes among 1..b**mu for mu = 1..max_power."""
    counts = []
    total = 0
    nxt = b
    mu = 1
    n = 0
    while mu <= max_power:
        n += 1
        if is_palindrome(n, b):
            total += 1
        if n == b**mu:
            counts.append(total)
            mu += 1
    return counts


def is_grouped_palindrome(n: int, b: int = 10) -> bool:
    """Prefix-equals-suffix recognizer: some digit prefix of length
    j <= floor(m/2) equals the suffix of the same length (single digits
    qualify).  This is the recognizer the reference counts use; it does not
    recurse on the middle."""
    d = dn(n, b)
    m = len(d)
    if m == 1:
        return True
    for j in range(1, m // 2 + 1):
        if d[:j] == d[m - j:]:
            return True
    return False


def grouped_palindrome_count(max_power: int, b: int) -> list[int]:
    counts = []
    total = 0
    mu = 1
    n = 0
    while mu <= max_power:
        n += 1
        if is_grouped_palindrome(n, b):
            total += 1
        if n == b**mu:
            counts.append(total)
            mu += 1
    return counts


def generate_palindromes(alpha: int, beta: int, step: int, b: int = 10,
                         kind: str = "gsp1", groups: int = 3,
                         primes_only: bool = False) -> list[int]:
    """Assemble palindromes from `groups` group values, each swept over
    alpha, alpha+step, ..., beta; kind selects plain concatenation or the
    two mirrored assemblies.  Output sorted; optionally primes only."""
    builder = {"plain": group_concat, "gsp1": gsp1, "gsp2": gsp2}[kind]
    sweep = range(alpha, beta + 1, step)
    out = []
    for tup in product(sweep, repeat=groups):
        v = builder(list(tup), b)
        if not primes_only or is_prime(v):
            out.append(v)
    return sorted(out)


# ---------------------------------------------------------------------------
# Periodic digit maps


class IterationTrace(NamedTuple):
    seed: int
    orbit: list[int]
    cycle_start: int
    period: int


def reverse_diff(n: int) -> int:
    """|n - reverse(n)| (plain digit reversal; 0 is a fixed point)."""
    return abs(n - reverse_number(n))


def subtract_reverse(n: int, c: int) -> int:
    """|reverse(n) - c|, treating one-digit n as n*10 before subtracting."""
    r = reverse_number(n) if n >= 10 else n * 10
    return abs(r - c)


def digit_scale(n: int, c: int) -> int:
    """Replace each decimal digit d by the last digit of c*d."""
    digits = dn(n, 10)
    return from_digits([(d * c) % 10 for d in digits], 10)


def mixed_compose(n: int) -> int:
    """Two-digit map: tens digit becomes the (repeated) digit sum, unit the
    absolute digit difference."""
    if not 10 <= n <= 99:
        raise ValueError("mixed composition is defined for two-digit numbers")
    d1, d2 = divmod(n, 10)
    s = d1 + d2
    if s > 9:
        s = s // 10 + s % 10
    return s * 10 + abs(d2 - d1)


def digit_permute(n: int, perm: Sequence[int]) -> int:
    """|n - n'| where n' permutes the (zero-padded) digits of n by perm
    (1-based positions, most significant first)."""
    width = len(perm)
    if n >= 10**width:
        raise ValueError(f"{n} does not fit in {width} digits")
    digits = [0] * (width - nrd(n, 10)) + dn(n, 10) if n else [0] * width
    shuffled = [digits[p - 1] for p in perm]
    return abs(n - from_digits(shuffled, 10))


_KERNELS: dict[str, Callable] = {}


def iterate_map(seed: int, kernel: Callable[[int], int], max_steps: int = 10**6) -> IterationTrace:
    """Iterate until the first repeated value; the repeat closes the cycle."""
    orbit = [seed]
    pos = {seed: 0}
    v = seed
    for _ in range(max_steps):
        v = kernel(v)
        if v in pos:
            start = pos[v]
            return IterationTrace(seed, orbit, start, len(orbit) - start)
        pos[v] = len(orbit)
        orbit.append(v)
    raise RuntimeError("no repetition within max_steps")


# ---------------------------------------------------------------------------
# Elimination sieves


def odd_sieve(limit: int) -> list[int]:
    """Odd numbers <= limit that are not a prime minus two."""
    table = sieve_pritchard(limit + 3)
    removed = {p - 2 for p in table if p - 2 >= 1}
    return [n for n in range(1, limit + 1, 2) if n not in removed]


def power_free_sieve(limit: int, n: int) -> list[int]:
    """2..limit with every multiple of a prime n-th power removed."""
    keep = bytearray([1]) * (limit + 1)
    for p in sieve_pritchard(max(int(limit ** (1 / n)) + 2, 2)):
        q = p**n
        if q > limit:
            break
        keep[q::q] = bytearray(len(range(q, limit + 1, q)))
    return [k for k in range(2, limit + 1) if keep[k]]


def squarefree_sieve(limit: int) -> list[int]:
    """2..limit with all multiples of perfect squares > 1 removed."""
    keep = bytearray([1]) * (limit + 1)
    k = 2
    while k * k <= limit:
        q = k * k
        keep[q::q] = bytearray(len(range(q, limit + 1, q)))
        k += 1
    return [k for k in range(2, limit + 1) if keep[k]]


def nary_power_sieve(limit: int, n: int) -> list[int]:
    """From 1..limit repeatedly delete every (n^k)-th surviving term for
    k = 1, 2, ... while any position remains."""
    items = list(range(1, limit + 1))
    k = 1
    while n**k <= len(items):
        step = n**k
        del items[step - 1 :: step]
        k += 1
    return items


def kary_consecutive_sieve(limit: int, k: int) -> list[int]:
    """From 1..limit delete every k-th surviving term, then every (k+1)-th,
    and so on while the step fits."""
    items = list(range(1, limit + 1))
    step = k
    while step <= len(items):
        del items[step - 1 :: step]
        step += 1
    return items


def consecutive_block_sieve(limit: int, k: int) -> list[int]:
    """Starting after position k, delete i consecutive terms, increment i,
    skip one survivor, repeat (positions on the original 1..limit line)."""
    keep = bytearray([1]) * (limit + 1)
    i = k
    pos = k
    while pos <= limit:
        for j in range(1, i + 1):
            if pos + j <= limit:
                keep[pos + j] = 0
        i += 1
        pos += i
    return [n for n in range(1, limit + 1) if keep[n]]


def almost_primes_first(start: int, limit: int) -> list[int]:
    """a1 = start; each next term is the smallest number not divisible by
    any earlier term."""
    out = [start]
    for m in range(start + 1, limit + 1):
        if all(m % a for a in out):
            out.append(m)
    return out


def almost_primes_second(start: int, limit: int) -> list[int]:
    """a1 = start; each next term is the smallest number coprime to all
    earlier terms."""
    out = [start]
    for m in range(start + 1, limit + 1):
        if all(gcd(m, a) == 1 for a in out):
            out.append(m)
    return out


# ---------------------------------------------------------------------------
# Complements


def m_power_complement(n: int, m: int) -> int:
    """Smallest k with k*n a perfect m-th power."""
    k = 1
    for p, a in factorize(n):
        k *= p ** ((m - a % m) % m)
    return k


def m_factorial_complement(n: int, m: int) -> int:
    """Smallest kf(j, m)/n over the first j with n | kf(j, m)."""
    for j in range(1, n + 1):
        f = kf(j, m)
        if f % n == 0:
            return f // n
    raise AssertionError("unreachable: n | kf(n, 1)")


def prime_additive_complement(n: int, table: PrimeTable | None = None) -> int:
    """Smallest k >= 0 with n + k prime."""
    if table is None:
        table = sieve_pritchard(max(2 * n + 10, 100))
    from .primes import spp

    return spp(n, table) - n


# ---------------------------------------------------------------------------
# Position sequences


def digit_position(k: int, which: str, a: int) -> int:
    """Position (units digit = 0) of digit k in a; min or max occurrence;
    -1 when the digit does not occur."""
    if not 0 <= k <= 9:
        raise ValueError("digit must be 0..9")
    digits = dn(a, 10)
    m = len(digits)
    positions = [m - i for i, d in enumerate(digits, start=1) if d == k]
    if not positions:
        return -1
    return min(positions) if which == "min" else max(positions)


def position_sequence(k: int, which: str, xs: Sequence[int]) -> list[int]:
    return [digit_position(k, which, x) for x in xs]


# ---------------------------------------------------------------------------
# Multiplicative sequences


def multiplicative_sequence(seeds: Sequence[int], length: int) -> list[int]:
    """Extend the seeds so each new term is the smallest product of
    len(seeds) distinct earlier terms exceeding every earlier term."""
    r = len(seeds)
    terms = list(seeds)
    while len(terms) < length:
        best = None
        biggest = terms[-1]
        for combo in combinations(range(len(terms)), r):
            y = 1
            for i in combo:
                y *= terms[i]
            if y > biggest and (best is None or y < best):
                best = y
        terms.append(best)
    return terms


# ---------------------------------------------------------------------------
# Progression classification

AP_LABELS = {
    "classical_inc": "Classical increasing arithmetic progression",
    "classical_dec": "Classical decreasing arithmetic progression",
    "generalized_inc": "Generalized increasing arithmetic progression but not classical",
    "generalized_dec": "Generalized decreasing arithmetic progression but not classical",
    "non_generalized": "Non-generalized arithmetic progression",
}

GP_LABELS = {
    "classical_inc": "Classical increasing geometric progression",
    "classical_dec": "Classical decreasing geometric progression",
    "generalized_inc": "Generalized increasing geometric progression but not classical",
    "generalized_dec": "Generalized decreasing geometric progression but not classical",
    "non_generalized": "Non-generalized geometric progression",
}


def classify_arithmetic(terms: Sequence) -> str:
    """Classify by the difference series: constant sign + constant value ->
    classical; constant sign -> generalized; mixed signs -> neither."""
    diffs = [terms[i + 1] - terms[i] for i in range(len(terms) - 1)]
    if not diffs or diffs[0] == 0:
        raise ValueError("first difference must be nonzero")
    constant = all(d == diffs[0] for d in diffs)
    same_sign = all((d > 0) == (diffs[0] > 0) and d != 0 for d in diffs)
    if constant:
        return AP_LABELS["classical_inc" if diffs[0] > 0 else "classical_dec"]
    if same_sign:
        return AP_LABELS["generalized_inc" if diffs[0] > 0 else "generalized_dec"]
    return AP_LABELS["non_generalized"]


def classify_geometric(terms: Sequence) -> str:
    ratios = [Fraction(terms[i + 1]) / Fraction(terms[i]) for i in range(len(terms) - 1)]
    if not ratios or ratios[0] <= 0 or ratios[0] == 1:
        raise ValueError("first ratio must be positive and != 1")
    constant = all(r == ratios[0] for r in ratios)
    same_side = all((r > 1) == (ratios[0] > 1) and r > 0 and r != 1 for r in ratios)
    if constant:
        return GP_LABELS["classical_inc" if ratios[0] > 1 else "classical_dec"]
    if same_side:
        return GP_LABELS["generalized_inc" if ratios[0] > 1 else "generalized_dec"]
    return GP_LABELS["non_generalized"]


# ---------------------------------------------------------------------------
# Two- and three-prime decomposition tables


def goldbach_table(a: int, b: int) -> list[list[int]]:
    """Matrix of sums prime_k + prime_j (j <= k) over odd primes with
    prime_k >= a, capped at b."""
    table = sieve_pritchard(b)
    primes = [p for p in table if p <= b]
    ka = next(i for i, p in enumerate(primes) if p >= a)
    cols = primes[ka:]
    rows = primes[1 : len(primes)]
    out = []
    for j, pj in enumerate(rows, start=1):
        row = []
        for pk in cols:
            row.append(pj + pk if pj <= pk else 0)
        out.append(row)
    return out


def goldbach_decompositions(n: int) -> list[tuple[int, int]]:
    """All n = q + r with q >= r odd primes, q descending."""
    if n % 2:
        raise ValueError("n must be even")
    table = sieve_pritchard(n + 2)
    out = []
    for q in reversed(table.primes):
        if q < (n + 1) // 2 or q < 3:
            break
        r = n - q
        if r >= 3 and r <= q and is_prime(r):
            out.append((q, r))
    return out


def goldbach_count(n: int) -> int:
    return len(goldbach_decompositions(n))


def vinogradov_table(p: int, a: int, b: int) -> list[list[int]]:
    """Matrix of sums p + prime_k + prime_j analogous to goldbach_table."""
    base = goldbach_table(a, b)
    return [[v + p if v else 0 for v in row] for row in base]


def vinogradov_decompositions(p: int, n: int) -> list[tuple[int, int, int]]:
    """All n = p + q + r with q >= r >= p odd primes, q descending."""
    if n % 2 == 0:
        raise ValueError("n must be odd")
    rest = n - p
    table = sieve_pritchard(max(rest + 2, 3))
    out = []
    for q in reversed(table.primes):
        if q < (rest + 1) // 2 or q < 3:
            break
        r = rest - q
        if p <= r <= q and is_prime(r):
            out.append((p, q, r))
    return out


def vinogradov_count(n: int) -> int:
    """Number of n = p1 + p2 + p3 with p1 >= p2 >= p3 odd primes."""
    if n % 2 == 0:
        raise ValueError("n must be odd")
    table = sieve_pritchard(n + 1)
    odd_primes = [p for p in table if p >= 3 and p <= n]
    count = 0
    for i, pk in enumerate(odd_primes):
        for pj in odd_primes[: i + 1]:
            r = n - pk - pj
            if 3 <= r <= pj and is_prime(r):
                count += 1
    return count


# ---------------------------------------------------------------------------
# Constructive sets


def constructive_set(alphabet: Sequence[int], index_lo: int, index_hi: int) -> list[int]:
    """Members index_lo..index_hi of the reference generator: index n maps
    its plain base-s digits through the alphabet (s = alphabet size).

    Because a leading base-s digit is never 0, members starting with
    alphabet[0] (beyond the single-digit one) are not produced; use
    alphabet_closure for the complete concatenation closure.
    """
    b = len(alphabet)
    out = []
    for n in range(index_lo, index_hi + 1):
        digits = dn(n, b)
        out.append(int("".join(str(alphabet[d]) for d in digits)))
    return out


def alphabet_closure(alphabet: Sequence[int], count: int) -> list[int]:
    """First `count` members of the true concatenation closure: every
    k-digit string over the alphabet, shortest first, each block in
    alphabet order (s^k members of k digits)."""
    s = len(alphabet)
    out: list[int] = []
    length = 1
    while len(out) < count:
        for tup in product(alphabet, repeat=length):
            out.append(int("".join(str(d) for d in tup)))
            if len(out) == count:
                return out
        length += 1
    return out


# ---------------------------------------------------------------------------
# Quark/antiquark combination counts


def unmatter_pairs(n: int, colorless_zero: bool = False) -> list[tuple[int, int]]:
    """Pairs (q, a) with q + a = n and 3 | q - a; the default excludes pairs
    with a zero side (kept when colorless_zero).  n = 2 gives (1, 1); n = 3
    with the zero-excluding rule has no combination, represented (0, 0)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if n == 2:
        return [(1, 1)]
    if n == 3 and not colorless_zero:
        return [(0, 0)]
    i = n // 3 if colorless_zero else (n - 2) // 3
    pairs = []
    for k in range(-i, i + 1):
        if (n - 3 * k) % 2 == 0:
            a = (n - 3 * k) // 2
            q = (n + 3 * k) // 2
            pairs.append((a, q))
    return pairs


def unmatter_sequence(alpha: int, beta: int, colorless_zero: bool = False) -> list[int]:
    """Flattened pair components for n = alpha..beta."""
    flat: list[int] = []
    for n in range(alpha, beta + 1):
        for a, q in unmatter_pairs(n, colorless_zero):
            flat.extend((a, q))
    return flat


def unmatter_counts(alpha: int, beta: int, colorless_zero: bool = False) -> list[int]:
    """6^(q+a) summed over the pairs, per n; the no-zero-side rule zeroes
    n = 3 (its only 'pair' is the empty (0, 0) marker)."""
    out = []
    for n in range(alpha, beta + 1):
        if n == 3 and not colorless_zero:
            out.append(0)
            continue
        out.append(sum(6 ** (a + q) for a, q in unmatter_pairs(n, colorless_zero)))
    return out


# ---------------------------------------------------------------------------
# Special-expression prime hunts


def special_xy_values(lo: int, hi: int) -> list[int]:
    """Distinct x^y + y^x over lo..hi with gcd(x, y) = 1."""
    vals = set()
    for x in range(lo, hi + 1):
        for y in range(lo, hi + 1):
            if gcd(x, y) == 1:
                vals.add(x**y + y**x)
    return sorted(vals)


def special_cycle_values(n_vars: int, lo: int, hi: int) -> list[int]:
    """Distinct x1^x2 + x2^x3 + ... + xn^x1 over lo..hi with gcd = 1."""
    vals = set()
    for tup in product(range(lo, hi + 1), repeat=n_vars):
        g = 0
        for t in tup:
            g = gcd(g, t)
        if g != 1:
            continue
        total = sum(tup[i] ** tup[(i + 1) % n_vars] for i in range(n_vars))
        vals.add(total)
    return sorted(vals)


def primes_of(values: Iterable[int]) -> list[int]:
    return [v for v in values if is_prime(v)]


def _iroot(n: int, k: int) -> int:
    """Floor k-th root."""
    if n < 0:
        raise ValueError
    if n == 0:
        return 0
    r = int(round(n ** (1.0 / k)))
    while r**k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


class PowerGapSolution(NamedTuple):
    x: int
    p: int
    y: int
    q: int
    k: int


def power_gap_solutions(p: int, y_lo: int, y_hi: int, q: int,
                        k_lo: int, k_hi: int) -> list[PowerGapSolution]:
    """Solutions of x^p - y^q = k over the given y and k ranges, found by
    probing the integer p-th root of k + y^q and its neighbour."""
    out = []
    for k in range(k_lo, k_hi + 1):
        for y in range(y_lo, y_hi + 1):
            target = k + y**q
            if target < 1:
                continue
            r = _iroot(target, p)
            for x in (r, r + 1):
                if x >= 1 and x**p - y**q == k:
                    out.append(PowerGapSolution(x, p, y, q, k))
    return out


def product_shift_solutions(y: int, k: int, m: int = 3) -> list[tuple[int, ...]]:
    """Solutions x1 < x2 < ... < xm of 2*x1*...*xm + k = y."""
    if m != 3:
        raise NotImplementedError("reference tables cover m = 3")
    target = y - k
    if target <= 0 or target % 2:
        return []
    half = target // 2
    out = []
    for x1 in range(1, _iroot(half, 3) + 1):
        if half % x1:
            continue
        rest = half // x1
        for x2 in range(x1 + 1, _iroot(rest, 2) + 1):
            if rest % x2:
                continue
            x3 = rest // x2
            if x3 > x2:
                out.append((x1, x2, x3))
    return out
