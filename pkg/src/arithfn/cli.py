"""Command-line interface: every subsystem behind one deterministic binary.

Exit codes: 0 success, 2 usage error, 3 domain error.  The Undefined
sentinel renders as -1 in txt/csv and null in jsonl.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import carpets, constants, digitclasses, digits, factorials, primes, radix, sequences, sfn
from .primes import UNDEFINED, Undefined


class DomainError(Exception):
    pass


def _fmt(v):
    if isinstance(v, Undefined):
        return "-1"
    return str(v)


def _emit_values(values, fmt: str, header: str = "value"):
    if fmt == "jsonl":
        for i, v in enumerate(values, 1):
            row = {"index": i, "value": None if isinstance(v, Undefined) else v}
            print(json.dumps(row))
    elif fmt == "csv":
        print(header)
        for v in values:
            print(_fmt(v))
    else:
        for v in values:
            print(_fmt(v))


def _emit_records(records, fmt: str):
    if fmt == "jsonl":
        for r in records:
            row = {"index": r.index, "value": r.value}
            if r.is_prime is not None:
                row["prime"] = r.is_prime
            if r.factorization is not None:
                row["factors"] = r.factorization.factors
            print(json.dumps(row))
        return
    cols = ["index", "value"]
    has_prime = any(r.is_prime is not None for r in records)
    has_factor = any(r.factorization is not None for r in records)
    if has_prime:
        cols.append("prime")
    if has_factor:
        cols.append("factors")
    if fmt == "csv":
        print(",".join(cols))
    for r in records:
        parts = [str(r.index), str(r.value)]
        if has_prime:
            parts.append(str(int(bool(r.is_prime))))
        if has_factor:
            parts.append(r.factorization.to_string() if r.factorization else "")
        print(",".join(parts) if fmt == "csv" else "\t".join(parts))


# ---------------------------------------------------------------------------


def _cmd_primes(args) -> None:
    table = primes.sieve(args.limit, args.sieve)
    _emit_values(table.primes, args.format)


def _cmd_gaps(args) -> None:
    if args.maximal:
        rows = primes.maximal_gaps(args.limit)
        for r in rows:
            print(f"{r.lower_prime},{r.gap}")
    else:
        hist = primes.gap_histogram(args.limit)
        for g in sorted(hist):
            print(f"{g},{hist[g]}")


def _cmd_factorial(args) -> None:
    print(factorials.kf(args.n, args.multi))


def _cmd_primorial(args) -> None:
    try:
        value = factorials.kprimorial(args.p, args.k)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    if not args.pm1:
        print(value)
        return
    for sign, v in (("-1", value - 1), ("+1", value + 1)):
        fac = factorials.factorize(v) if v >= 1 else None
        print(f"{args.p}#{sign},{v},{fac.to_string() if fac else str(v)}")


_SFN_ONE_ARG = {
    "S": sfn.kempner,
    "Z1": sfn.z1,
    "Z2": sfn.z2,
    "Z3": sfn.z3,
    "SP2": sfn.selfpower_index,
    "SP3": sfn.towerpower_index,
    "SML": sfn.mersenne_index_left,
    "SMR": sfn.mersenne_index_right,
}


def _cmd_sfn(args) -> None:
    name = args.function
    order = args.order
    try:
        if name in _SFN_ONE_ARG:
            func = _SFN_ONE_ARG[name]
        elif name == "Sk":
            func = lambda n: sfn.kempner_multi(n, order)
        elif name == "SC":
            func = lambda n: sfn.kempner_power(n, order)
        elif name == "ceil":
            func = lambda n: sfn.ceil_divisible(n, order)
        elif name == "SK":
            func = lambda p: sfn.left_factorial_index(order, p)
        elif name == "SW":
            func = lambda p: sfn.factorial_sum_index(order, p)
        elif name == "SNtkP":
            func = lambda n: sfn.near_primorial(n, order)
        elif name == "Xnacci":
            func = lambda n: sfn.xnacci_index(n, max(order, 2))
        elif name == "ES":
            lo, hi = args.n[0], args.n[1] if len(args.n) > 1 else args.n[0]
            _emit_values(sfn.kempner_equals_lpf(lo, hi), args.format)
            return
        else:  # pragma: no cover
            raise DomainError(f"unknown function {name}")
        values = [func(n) for n in args.n]
        _emit_values(values, args.format)
    except ValueError as exc:
        raise DomainError(str(exc)) from None


def _cmd_digitclass(args) -> None:
    b, cap, order = args.base, args.cap, args.order
    kind = args.kind
    if kind == "kaprekar":
        width = order if order and order >= 2 else 4
        for c in digitclasses.kaprekar_analysis(width):
            print(f"{c.constant},{c.frequency},{c.period}")
        return
    if kind == "pseudo":
        lo, hi = 2, cap or 999
        vals = digitclasses.permutation_census(lo, hi, args.predicate, args.mode,
                                               arg=args.arg, count=args.count)
        _emit_values(vals, "txt")
        return
    scans = {
        "narcissistic": lambda: digitclasses.scan_narcissistic(b, cap),
        "inverse": lambda: digitclasses.scan_inverse_narcissistic(b, cap),
        "munchhausen": lambda: digitclasses.scan_munchhausen(b, cap),
        "ascending": lambda: digitclasses.scan_ascending_powers(b, cap),
        "descending": lambda: digitclasses.scan_descending_powers(b, cap),
        "factorion": lambda: digitclasses.scan_factorions(b, order or 1, cap),
        "sumproduct": lambda: digitclasses.scan_sum_product(b, cap or 10**6),
    }
    hits = scans[kind]()
    print("value,repr,decomposition")
    for v in hits:
        ds = digits.dn(v, b)
        rep = "".join(f"{d:x}" if b <= 16 else f"({d})" for d in ds)
        m = len(ds)
        if kind == "narcissistic":
            deco = "+".join(f"{d}^{m}" for d in ds)
        elif kind == "inverse":
            deco = "+".join(f"{m}^{d}" for d in ds)
        elif kind == "munchhausen":
            deco = "+".join(f"{d}^{d}" for d in ds)
        elif kind in ("ascending", "descending"):
            deco = "+".join(
                f"{d}^{i if kind == 'ascending' else m + 2 - i}"
                for i, d in enumerate(ds, 1))
        elif kind == "factorion":
            deco = "+".join(f"{d}{'!' * (order or 1)}" for d in ds)
        else:
            deco = f"({'+'.join(map(str, ds))})*{'*'.join(map(str, ds))}"
        print(f"{v},{rep},{deco}")


def _cmd_base(args) -> None:
    system = args.system
    try:
        if args.decode:
            rep = radix.parse_rep(system, str(args.n))
            print(radix.from_base(rep))
        else:
            print(radix.to_base(int(args.n), system))
    except ValueError as exc:
        raise DomainError(str(exc)) from None


def _seq_values(family: str, params: list[str], limit: int) -> list[int]:
    p = [int(x) for x in params]
    if family == "consecutive":
        return sequences.consecutive_sequence(limit, p[0] if p else 10)
    if family == "circular":
        return sequences.circular_sequence(p[0] if p else 5)
    if family == "symmetric":
        return sequences.symmetric_sequence(limit)
    if family == "deconstructive":
        cycle = p or [1, 2, 3, 4, 5, 6, 7, 8, 9]
        return sequences.deconstructive_sequence(cycle, limit)
    if family == "primes-forward":
        t = primes.sieve_pritchard(max(limit * 20, 100))
        return sequences.concat_forward(t.primes[:limit])
    if family == "primes-backward":
        t = primes.sieve_pritchard(max(limit * 20, 100))
        return sequences.concat_backward(t.primes[1 : limit + 1])
    if family == "permutation":
        return [sequences.permutation_sequence(n) for n in range(1, limit + 1)]
    if family == "luhn":
        return sequences.luhn_primes(p[0] if p else 1, limit)
    if family == "wellin":
        t = primes.sieve_pritchard(limit)
        return sequences.prime_digit_primes(t.primes, p[0] if p else 10)
    if family == "pierced-chain":
        return sequences.pierced_chain(limit)
    if family == "odd-sieve":
        return sequences.odd_sieve(limit)
    if family == "squarefree":
        return sequences.squarefree_sieve(limit)
    if family == "power-free":
        return sequences.power_free_sieve(limit, p[0] if p else 3)
    if family == "nary-power":
        return sequences.nary_power_sieve(limit, p[0] if p else 2)
    if family == "kary-consecutive":
        return sequences.kary_consecutive_sieve(limit, p[0] if p else 2)
    if family == "consecutive-block":
        return sequences.consecutive_block_sieve(limit, p[0] if p else 1)
    if family == "almost-primes-1":
        return sequences.almost_primes_first(p[0] if p else 10, limit)
    if family == "almost-primes-2":
        return sequences.almost_primes_second(p[0] if p else 10, limit)
    if family == "square-complement":
        return [sequences.m_power_complement(n, 2) for n in range(1, limit + 1)]
    if family == "cubic-complement":
        return [sequences.m_power_complement(n, 3) for n in range(1, limit + 1)]
    if family == "factorial-complement":
        return [sequences.m_factorial_complement(n, p[0] if p else 1) for n in range(1, limit + 1)]
    if family == "prime-complement":
        return [sequences.prime_additive_complement(n) for n in range(1, limit + 1)]
    if family == "multiplicative":
        return sequences.multiplicative_sequence(p or [2, 3], limit)
    if family == "goldbach-counts":
        return [sequences.goldbach_count(n) for n in range(6, limit + 1, 2)]
    if family == "vinogradov-counts":
        return [sequences.vinogradov_count(n) for n in range(3, limit + 1, 2)]
    if family == "constructive":
        return sequences.constructive_set(p or [1, 2], 0, limit - 1)
    if family == "unmatter":
        return sequences.unmatter_counts(2, limit, colorless_zero=bool(p and p[0] == 0))
    raise DomainError(f"unknown family {family!r}")


def _cmd_seq(args) -> None:
    values = _seq_values(args.family, args.params, args.limit)
    records = sequences.annotate(values, prime_flag=args.prime_flag, factor=args.factor)
    _emit_records(records, args.format)


def _vector_for(family: str):
    P = primes.sieve_pritchard(100).primes[:25]
    if family == "S":
        return [sfn.kempner(n) for n in range(2, 102)]
    if family == "ES":
        return sfn.kempner_equals_lpf(2, 130)
    if family == "SK":
        return [sfn.left_factorial_index(1, p) for p in P]
    if family == "SW":
        return [sfn.factorial_sum_index(1, p) for p in P]
    if family == "ceil":
        return [sfn.ceil_divisible(n, 1) for n in range(1, 101)]
    if family == "SM":
        return [sfn.mersenne_index_left(2 * n - 1) for n in range(1, 41)]
    if family == "SNtP":
        return [sfn.near_primorial(n, 1) for n in range(1, 46)]
    if family == "SC":
        return [sfn.kempner_power(n, 2) for n in range(1, 114)]
    if family == "SX":
        return [sfn.xnacci_index(n, 2) for n in range(1, 81)]
    raise DomainError(f"unknown constants family {family!r}")


def _cmd_constants(args) -> None:
    if args.family == "andrica":
        if len(args.index) != 2:
            raise DomainError("andrica needs --index p g")
        print(f"{constants.andrica_root(args.index[0], args.index[1]):.16f}")
        return
    if args.family == "metallic":
        value, surd = constants.metallic_mean(args.index[0],
                                              args.index[1] if len(args.index) > 1 else 1)
        print(f"{value!r},{surd}")
        return
    seq = _vector_for(args.family)
    fam = args.index[0] if args.index else 1
    est = constants.series_family(seq, fam, alpha=args.alpha, r=args.r)
    print(constants.render_decimal(est.partial_sum, args.digits))


def _cmd_carpet(args) -> None:
    from .factorials import factorize

    if args.kind == "ulam":
        mat = carpets.ulam(args.size or 13).cells
    elif args.kind == "cellular":
        values = [int(v) for v in args.values.split(",")] if args.values else [1, 3, 9, 7]
        mat = carpets.cellular(values, args.size or 9, args.rule or "f1").cells
    else:
        mat = carpets.triangle(args.rule or "quad", args.size or 7)
    conc = carpets.conc_rows(mat)
    for row, n in zip(mat, conc):
        line = " ".join(str(v) for v in row)
        if args.factor:
            line += f" | {n} = {factorize(n).to_string() if n >= 1 else n}"
        else:
            line += f" | {n}"
        print(line)


def _selftest() -> int:
    """Run the embedded golden examples; report pass/fail counts."""
    cases: list[tuple[str, bool]] = []

    def check(name: str, cond: bool):
        cases.append((name, bool(cond)))

    t = primes.sieve_pritchard(1000)
    check("sieve 1000 has 168 primes", len(t) == 168)
    check("three sieves agree at 1000",
          t == primes.sieve_sundaram(1000) == primes.sieve_atkin(1000))
    check("maximal gap at 1000 ends (887,20)",
          primes.maximal_gaps(1000)[-1] == (887, 20))
    check("S(6)=3", sfn.kempner(6) == 3)
    check("S(16)=6", sfn.kempner(16) == 6)
    check("Z1(10)=4", sfn.z1(10) == 4)
    check("Z3(2)=3", sfn.z3(2) == 3)
    check("SK1(5)=4", sfn.left_factorial_index(1, 5) == 4)
    check("SW1(3)=2", sfn.factorial_sum_index(1, 3) == 2)
    check("SP2(8)=4", sfn.selfpower_index(8) == 4)
    check("kf(9,2)=945", factorials.kf(9, 2) == 945)
    check("13##=91", factorials.kprimorial(13, 2) == 91)
    check("dn(1234,16)=[4,13,2]", digits.dn(1234, 16) == [4, 13, 2])
    check("conc(13,0)=130", digits.concat(13, 0) == 130)
    check("dks(76,8,2)=18", digits.dks(76, 8, 2) == 18)
    check("RM(73,97,2)=7081", digits.romanian_multiply(73, 97, 2).product == 7081)
    check("Dkn(13537,2,7)=(105,97)",
          digits.divide_power(13537, 2, 7)[:2] == (105, 97))
    check("3-digit narcissistic", [n for n in digitclasses.scan_narcissistic(10, 999)
                                   if n >= 100] == [153, 370, 371, 407])
    check("factorions", digitclasses.scan_factorions(10, 1) == [1, 2, 145, 40585])
    check("K(7675)=2088", digitclasses.kaprekar_map(7675, 4) == 2088)
    check("sum-product", digitclasses.scan_sum_product(10) == [1, 135, 144])
    check("fb(24)=1000", str(radix.to_base(24, "factorial")) == "1000")
    check("pb(10)=10100", str(radix.to_base(10, "prime")) == "10100")
    check("Fib(4)=101", str(radix.to_base(4, "fibonacci")) == "101")
    check("luhn order1 first=229", sequences.luhn_primes(1, 300)[0] == 229)
    check("goldbach count 346 = 9", sequences.goldbach_count(346) == 9)
    check("ulam center row", carpets.ulam(13).row(7)[:8] == (151, 106, 69, 40, 19, 6, 1, 2))
    check("quad triangle row 3 = 4081", carpets.conc_rows(carpets.triangle("quad", 3))[-1] == 4081)
    check("andrica(113,14)",
          abs(constants.andrica_root(113, 14) - 0.5671481302020177) < 1e-14)
    check("golden mean", abs(constants.metallic_mean(1, 1)[0] - 1.618033988749895) < 1e-12)
    failures = [name for name, ok in cases if not ok]
    for name, ok in cases:
        print(f"{'PASS' if ok else 'FAIL'} {name}")
    print(f"{len(cases) - len(failures)}/{len(cases)} passed")
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="arithfn",
                                 description="computational number theory toolkit")
    ap.add_argument("--selftest", action="store_true", help="run embedded golden suite")
    sub = ap.add_subparsers(dest="command")

    p = sub.add_parser("primes", help="generate primes")
    p.add_argument("--sieve", choices=("pritchard", "sundaram", "atkin"), default="pritchard")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--format", choices=("txt", "csv", "jsonl"), default="txt")
    p.set_defaults(func=_cmd_primes)

    p = sub.add_parser("gaps", help="prime gap statistics")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--maximal", action="store_true")
    p.set_defaults(func=_cmd_gaps)

    p = sub.add_parser("factorial", help="multifactorial")
    p.add_argument("--multi", type=int, default=1, metavar="K")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_factorial)

    p = sub.add_parser("primorial", help="k-primorials and their neighbours")
    p.add_argument("--k", type=int, default=1, choices=(1, 2, 3))
    p.add_argument("p", type=int)
    p.add_argument("--pm1", action="store_true", help="emit p#-1 / p#+1 factorizations")
    p.set_defaults(func=_cmd_primorial)

    p = sub.add_parser("sfn", help="arithmetic-function values")
    p.add_argument("function", choices=("S", "Sk", "SC", "ceil", "Z1", "Z2", "Z3", "SK",
                                        "SW", "SNtkP", "SML", "SMR", "Xnacci",
                                        "SP2", "SP3", "ES"))
    p.add_argument("n", type=int, nargs="+")
    p.add_argument("--order", type=int, default=1)
    p.add_argument("--format", choices=("txt", "csv", "jsonl"), default="txt")
    p.set_defaults(func=_cmd_sfn)

    p = sub.add_parser("digitclass", help="digit-defined number classes")
    p.add_argument("kind", choices=("narcissistic", "inverse", "munchhausen", "ascending",
                                    "descending", "factorion", "sumproduct", "kaprekar",
                                    "pseudo"))
    p.add_argument("--base", type=int, default=10)
    p.add_argument("--cap", type=int)
    p.add_argument("--order", type=int)
    p.add_argument("--predicate", default="prime")
    p.add_argument("--mode", default="first")
    p.add_argument("--arg", type=int)
    p.add_argument("--count", type=int)
    p.set_defaults(func=_cmd_digitclass)

    p = sub.add_parser("base", help="mixed-radix numeration")
    p.add_argument("--system", required=True,
                   choices=tuple(radix.SYSTEM_ALIASES) + radix.SYSTEMS)
    p.add_argument("n")
    p.add_argument("--decode", action="store_true")
    p.set_defaults(func=_cmd_base)

    p = sub.add_parser("seq", help="sequence families")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.add_argument("--limit", type=int, default=20)
    p.add_argument("--format", choices=("txt", "csv", "jsonl"), default="txt")
    p.add_argument("--factor", action="store_true")
    p.add_argument("--prime-flag", action="store_true")
    p.set_defaults(func=_cmd_seq)

    p = sub.add_parser("constants", help="constant families")
    p.add_argument("--family", required=True,
                   choices=("S", "ES", "SK", "SW", "ceil", "SM", "SNtP", "SC", "SX",
                            "andrica", "metallic"))
    p.add_argument("--index", type=int, nargs="*", default=[1])
    p.add_argument("--alpha", type=int, default=1)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--digits", type=int, default=20)
    p.set_defaults(func=_cmd_constants)

    p = sub.add_parser("carpet", help="carpet numbers")
    p.add_argument("kind", choices=("cellular", "triangle", "ulam"))
    p.add_argument("--rule")
    p.add_argument("--values")
    p.add_argument("--size", type=int)
    p.add_argument("--factor", action="store_true")
    p.set_defaults(func=_cmd_carpet)

    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.selftest:
        return _selftest()
    if not getattr(args, "func", None):
        ap.print_usage(sys.stderr)
        return 2
    try:
        args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except BrokenPipeError:  # pragma: no cover
        return 0
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
