"""Greedy positional numeration over ten non-standard bases: prime, square,
cubic, factorial, double-factorial, triangular, quadratic, pentagon,
Fibonacci and Tribonacci.

Conversion is pure greedy subtraction of the largest basis element that
fits the remainder; the per-system digit caps (prime/Fibonacci/Tribonacci
digits in {0,1}, factorial digit at position k <= k, ...) emerge from
greediness and are asserted by tests rather than enforced here.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple

from .factorials import kf
from .primes import sieve_pritchard


def _primes_iter() -> Iterator[int]:
    yield 1
    limit = 1 << 10
    emitted = 0
    while True:
        table = sieve_pritchard(limit)
        for p in table.primes[emitted:]:
            yield p
        emitted = len(table.primes)
        limit *= 4


def _additive_iter(seeds: list[int], order: int) -> Iterator[int]:
    window = list(seeds)
    yield from window
    while True:
        nxt = sum(window[-order:])
        window.append(nxt)
        window = window[-order:]
        yield nxt


def _poly_iter(kind: str) -> Iterator[int]:
    k = 1
    while True:
        if kind == "square":
            yield k * k
        elif kind == "cubic":
            yield k**3
        elif kind == "triangular":
            yield k * (k + 1) // 2
        elif kind == "quadratic":
            yield k * (k + 1) * (2 * k + 1) // 6
        elif kind == "pentagon":
            yield k * k * (k + 1) * (k + 1) // 4
        elif kind == "factorial":
            yield kf(k, 1)
        elif kind == "double-factorial":
            yield kf(k, 2)
        else:  # pragma: no cover
            raise ValueError(kind)
        k += 1


def _basis_iter(system: str) -> Iterator[int]:
    if system == "prime":
        return _primes_iter()
    if system == "fibonacci":
        return _additive_iter([1, 2], 2)
    if system == "tribonacci":
        return _additive_iter([1, 2, 3], 3)
    if system in ("square", "cubic", "triangular", "quadratic", "pentagon",
                  "factorial", "double-factorial"):
        return _poly_iter(system)
    raise ValueError(f"unknown system {system!r}")


SYSTEMS = ("prime", "square", "cubic", "factorial", "double-factorial",
           "triangular", "quadratic", "pentagon", "fibonacci", "tribonacci")

# CLI short names
SYSTEM_ALIASES = {
    "pb": "prime",
    "sb": "square",
    "cb": "cubic",
    "fb": "factorial",
    "dfb": "double-factorial",
    "tb": "triangular",
    "qb": "quadratic",
    "peb": "pentagon",
    "Fb": "fibonacci",
    "Tb": "tribonacci",
}


class MixedRadixRep(NamedTuple):
    system: str
    coefficients: tuple[int, ...]  # most significant first

    def __str__(self) -> str:
        if all(c <= 9 for c in self.coefficients):
            return "".join(str(c) for c in self.coefficients)
        return "[" + ",".join(str(c) for c in self.coefficients) + "]"


_BASIS_CACHE: dict[str, tuple[Iterator[int], list[int]]] = {}


def _grown_basis(system: str) -> tuple[Iterator[int], list[int]]:
    if system not in _BASIS_CACHE:
        _BASIS_CACHE[system] = (_basis_iter(system), [])
    return _BASIS_CACHE[system]


def basis_upto(system: str, limit_value: int) -> list[int]:
    """Ascending basis elements <= limit_value (at least the first)."""
    it, grown = _grown_basis(system)
    while not grown or grown[-1] <= limit_value:
        grown.append(next(it))
    hi = len(grown)
    while hi > 1 and grown[hi - 1] > limit_value:
        hi -= 1
    return grown[:hi]


def basis_first(system: str, count: int) -> list[int]:
    it, grown = _grown_basis(system)
    while len(grown) < count:
        grown.append(next(it))
    return grown[:count]


def to_base(n: int, system: str) -> MixedRadixRep:
    """Greedy expansion of n over the system basis, most significant first."""
    system = SYSTEM_ALIASES.get(system, system)
    if n < 0:
        raise ValueError("n must be >= 0")
    if system == "prime" and n == 0:
        raise ValueError("prime base starts at 1")
    if n == 0:
        return MixedRadixRep(system, (0,))
    basis = [v for v in basis_upto(system, n) if v <= n]
    coeffs = [0] * len(basis)
    r = n
    for i in range(len(basis) - 1, -1, -1):
        if basis[i] <= r:
            coeffs[i], r = divmod(r, basis[i])
        if r == 0:
            break
    assert r == 0, "basis does not reach 1"
    return MixedRadixRep(system, tuple(reversed(coeffs)))


def from_base(rep: MixedRadixRep | tuple) -> int:
    """Reconstruct the value: dot product of coefficients with the basis."""
    system = SYSTEM_ALIASES.get(rep[0], rep[0])
    coeffs = rep[1]
    basis = basis_first(system, len(coeffs))
    return sum(c * b for c, b in zip(reversed(coeffs), basis))


def parse_rep(system: str, text: str) -> MixedRadixRep:
    """Parse '1000' or '[1,0,0,0]' back into a representation."""
    system = SYSTEM_ALIASES.get(system, system)
    text = text.strip()
    if text.startswith("["):
        coeffs = tuple(int(t) for t in text[1:-1].split(","))
    else:
        coeffs = tuple(int(ch) for ch in text)
    return MixedRadixRep(system, coeffs)
