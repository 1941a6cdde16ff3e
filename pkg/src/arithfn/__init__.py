"""arithfn: computational number theory toolkit.

Sieves and prime analytics, digit kernels, multifactorials and primorials,
the least-factorial-multiple function family, digit-class searches,
mixed-radix numeration, sequence generators, constant-series evaluators
and carpet numbers — with a CLI (`arithfn`) over all of it.
"""

from .digits import (concat, dks, dn, dp, divide_power, from_digits,
                     generalized_period, nrd, reverse_number, romanian_multiply)
from .factorials import (Factorization, factorize, gf, kf, kprimorial,
                         primorial_n, sigma_kf, smarandacheial)
from .primes import (UNDEFINED, GapRecord, PrimeTable, Undefined, gap_histogram,
                     is_prime, is_prime_S, maximal_gaps, prime_count_S, sieve,
                     sieve_atkin, sieve_pritchard, sieve_sundaram)
from .sfn import (ceil_divisible, divisor_product, kempner, kempner_multi,
                  kempner_power, proper_divisor_product, residual_product,
                  selfpower_index, towerpower_index, z1, z2, z3)
from .constants import SeriesEstimate, andrica_root, metallic_mean, series_family
from .radix import MixedRadixRep, from_base, to_base

__version__ = "0.1.0"

__all__ = [
    "concat", "dks", "dn", "dp", "divide_power", "from_digits",
    "generalized_period", "nrd", "reverse_number", "romanian_multiply",
    "Factorization", "factorize", "gf", "kf", "kprimorial", "primorial_n",
    "sigma_kf", "smarandacheial",
    "UNDEFINED", "GapRecord", "PrimeTable", "Undefined", "gap_histogram",
    "is_prime", "is_prime_S", "maximal_gaps", "prime_count_S", "sieve",
    "sieve_atkin", "sieve_pritchard", "sieve_sundaram",
    "ceil_divisible", "divisor_product", "kempner", "kempner_multi",
    "kempner_power", "proper_divisor_product", "residual_product",
    "selfpower_index", "towerpower_index", "z1", "z2", "z3",
    "SeriesEstimate", "andrica_root", "metallic_mean", "series_family",
    "MixedRadixRep", "from_base", "to_base",
]
