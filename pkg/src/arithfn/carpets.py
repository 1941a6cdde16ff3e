"""Carpet numbers: row-concatenation of structured matrices.

Cellular matrices place a value vector in nested frames around the centre
according to a rule function; triangle matrices hold product/binomial/prime
rows; the spiral matrix winds the naturals outward from the centre.  Rows
concatenate in base 10 with interior zeros kept as a digit 0 and trailing
zero-runs dropped.
"""

from __future__ import annotations

import math
from typing import Callable, NamedTuple, Sequence

from .digits import concat
from .primes import sieve_pritchard
from .sfn import kempner


def conc_rows(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Concatenate each row; a zero cell is skipped only when every later
    cell in the row is zero, otherwise it contributes a digit 0."""
    out = []
    for row in matrix:
        acc = row[0]
        c = len(row)
        for j in range(1, c - 1):
            if row[j] != 0:
                acc = concat(acc, row[j])
            elif any(row[i] != 0 for i in range(j + 1, c)):
                acc = concat(acc, 0)
        if c > 1 and row[c - 1] != 0:
            acc = concat(acc, row[c - 1])
        out.append(acc)
    return out


# Rule functions mapping frame coordinates (k, j) = (|row-center|,
# |col-center|) to an index into the value vector.


def rule_sum(k: int, j: int) -> int:
    return k + j


def rule_absdiff(k: int, j: int) -> int:
    return abs(k - j)


def rule_max(k: int, j: int) -> int:
    return max(k, j)


def rule_min(k: int, j: int) -> int:
    return min(k, j)


def rule_product(k: int, j: int) -> int:
    return k * j


def rule_floor_ratio(k: int, j: int) -> int:
    return (k + 1) // (j + 1)


def rule_ceil_ratio(k: int, j: int) -> int:
    return -(-k // (j + 1))


def rule_min3(k: int, j: int) -> int:
    return min(abs(k - j), k, j)


def rule_ceil_maxmin(k: int, j: int) -> int:
    return -(-(max(k, j) + 1) // (min(k, j) + 1))


def rule_kempner_min(k: int, j: int) -> int:
    return min(kempner(k + 1), kempner(j + 1))


def rule_trig(k: int, j: int) -> int:
    # real-valued rule; negatives fall outside the vector and yield 0 cells
    return math.ceil(k * math.sin(j) ** 3 + j * math.cos(k) ** 3)


def rule_weighted(k: int, j: int) -> int:
    return (k + 2 * j) // 3


RULES: dict[str, Callable[[int, int], int]] = {
    "f1": rule_sum,
    "f2": rule_absdiff,
    "f3": rule_max,
    "f4": rule_min,
    "f5": rule_product,
    "f6": rule_floor_ratio,
    "f7": rule_ceil_ratio,
    "f8": rule_min3,
    "f9": rule_ceil_maxmin,
    "f10": rule_kempner_min,
    "f11": rule_trig,
    "f12": rule_weighted,
}


class CellMatrix(NamedTuple):
    size: int
    cells: tuple[tuple[int, ...], ...]

    def row(self, k: int) -> tuple[int, ...]:
        return self.cells[k - 1]


def cellular(values: Sequence[int], size: int,
             rule: str | Callable[[int, int], int]) -> CellMatrix:
    """size x size (size odd) matrix with cell (k, j) = values[f(q, s)] for
    frame coordinates q, s; indices past the vector leave 0."""
    if size % 2 == 0:
        raise ValueError("size must be odd")
    f = RULES[rule] if isinstance(rule, str) else rule
    m = (size + 1) // 2
    rows = []
    for k in range(1, size + 1):
        row = []
        for j in range(1, size + 1):
            idx = f(abs(k - m), abs(j - m))
            row.append(values[idx] if 0 <= idx < len(values) else 0)
        rows.append(tuple(row))
    return CellMatrix(size, tuple(rows))


def _quad_product(n: int, k: int) -> int:
    """4n * product of (4n - 4j + 1) for j = 1..k-1; 1 at k = 0."""
    if k == 0:
        return 1
    acc = 4 * n
    for j in range(1, k):
        acc *= 4 * n - 4 * j + 1
    return acc


def triangle(kind: str, depth: int) -> list[list[int]]:
    """Lower-triangular matrices (rows padded with zeros to `depth`):

    'quad'       row n holds the quadratic products, largest first;
    'pascal'     binomial coefficients;
    'prime'      row n repeats the first n primes;
    'prime-rows' consecutive primes laid out row by row, starting at the
                 first prime >= the start argument encoded as 'prime-rows-2'
                 or 'prime-rows-3'.
    """
    if kind == "quad":
        rows = []
        for n in range(1, depth + 1):
            row = [0] * depth
            for k in range(1, n + 1):
                row[n - k] = _quad_product(n - 1, k - 1)
            rows.append(row)
        return rows
    if kind == "pascal":
        rows = []
        for k in range(depth + 1):
            row = [math.comb(k, j) for j in range(k + 1)]
            row += [0] * (depth - k)
            rows.append(row)
        return rows
    if kind == "prime":
        table = sieve_pritchard(200)
        rows = []
        for k in range(1, depth + 2):
            row = table.primes[:k] + [0] * (depth + 1 - k)
            rows.append(row)
        return rows
    if kind in ("prime-rows-2", "prime-rows-3"):
        start_idx = 0 if kind.endswith("2") else 1
        need = depth * (depth + 1) // 2 + start_idx
        limit = 400
        table = sieve_pritchard(limit)
        while len(table) < need:
            limit *= 2
            table = sieve_pritchard(limit)
        it = iter(table.primes[start_idx:])
        rows = []
        for k in range(1, depth + 1):
            row = [next(it) for _ in range(k)] + [0] * (depth - k)
            rows.append(row)
        return rows
    raise ValueError(f"unknown triangle kind {kind!r}")


def ulam(size: int) -> CellMatrix:
    """Counterclockwise spiral of 1..size**2 from the centre: 2 to the right
    of 1, 3 above 2; odd squares run down the main diagonal."""
    if size % 2 == 0 or size < 3:
        raise ValueError("size must be odd and >= 3")
    grid = [[0] * size for _ in range(size)]
    m = size // 2  # 0-based centre
    r = c = m
    grid[r][c] = 1
    n = 2
    steps = 1
    # direction cycle: right, up, left, down with step lengths 1,1,2,2,...
    dirs = [(0, 1), (-1, 0), (0, -1), (1, 0)]
    d = 0
    while n <= size * size:
        for _ in range(2):
            dr, dc = dirs[d % 4]
            for _ in range(steps):
                if n > size * size:
                    break
                r += dr
                c += dc
                if 0 <= r < size and 0 <= c < size:
                    grid[r][c] = n
                n += 1
            d += 1
        steps += 1
    return CellMatrix(size, tuple(tuple(row) for row in grid))


def primes_only(matrix: CellMatrix) -> CellMatrix:
    """Copy with non-prime cells zeroed."""
    from .primes import is_prime

    rows = tuple(tuple(v if is_prime(v) else 0 for v in row) for row in matrix.cells)
    return CellMatrix(matrix.size, rows)
