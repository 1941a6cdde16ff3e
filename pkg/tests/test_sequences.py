import math
from fractions import Fraction

import pytest

from arithfn.primes import is_prime, sieve_pritchard
from arithfn.sequences import (almost_primes_first, almost_primes_second,
                               annotate, circular_sequence,
                               classify_arithmetic, classify_geometric,
                               combinatorial_digit_primes, concat_backward,
                               concat_forward, consecutive_block_sieve,
                               consecutive_sequence, constructive_set,
                               deconstructive_sequence, digit_permute,
                               digit_position, digit_scale,
                               generate_palindromes, goldbach_count,
                               goldbach_decompositions, goldbach_table, gsp1,
                               gsp2, is_grouped_palindrome, is_palindrome,
                               iterate_map, kary_consecutive_sieve,
                               luhn_primes, m_factorial_complement,
                               m_power_complement, mixed_compose,
                               multiplicative_sequence, nary_power_sieve,
                               odd_sieve, palindrome_count, pierced_chain,
                               permutation_sequence, position_sequence,
                               power_free_sieve, power_gap_solutions,
                               prime_additive_complement, prime_digit_primes,
                               prime_digit_subsequence, primes_of,
                               product_shift_solutions, grouped_palindrome_count,
                               reverse_diff, special_cycle_values,
                               special_xy_values, squarefree_sieve,
                               subtract_reverse, symmetric_sequence,
                               unmatter_counts, unmatter_pairs,
                               unmatter_sequence, vinogradov_count,
                               vinogradov_decompositions, vinogradov_table)


def test_consecutive_sequences():
    cs = consecutive_sequence(26)
    assert cs[0] == 1 and cs[2] == 123
    assert cs[25] == 1234567891011121314151617181920212223242526
    cs2 = consecutive_sequence(15, 2)
    assert cs2[14] == 485398038695407 and is_prime(cs2[14])
    assert consecutive_sequence(15, 3)[4] == 3929
    assert consecutive_sequence(13, 8)[2] == 83
    assert consecutive_sequence(14, 16)[12] == 320255973501901


def test_circular_sequence():
    circ = circular_sequence(5)
    assert circ[:8] == [1, 12, 21, 123, 132, 213, 231, 312]
    assert [v for v in circ if is_prime(v)] == [1423, 2143, 2341, 4231]


def test_symmetric_sequence():
    sym = symmetric_sequence(23)
    assert sym[:9] == [1, 11, 121, 1221, 12321, 123321, 1234321, 12344321,
                       123454321]
    assert sym[4] == 12321 and sym[4] == 3**2 * 37**2
    assert is_prime(sym[18]) and sym[18] == 12345678910987654321
    assert is_prime(sym[19])


def test_deconstructive_sequence():
    dec = deconstructive_sequence(range(1, 10), 19)
    assert dec[:8] == [1, 23, 456, 7891, 23456, 789123, 4567891, 23456789]
    assert is_prime(dec[1]) and is_prime(dec[6]) and is_prime(dec[7])
    assert is_prime(dec[9]) and dec[9] == 1234567891
    dec0 = deconstructive_sequence([1, 2, 3, 4, 5, 6, 7, 8, 9, 0], 16)
    assert dec0[5] == 678901 and is_prime(dec0[5])
    assert dec0[12] == 9012345678901 and is_prime(dec0[12])


def test_concatenated_prime_sequences():
    t = sieve_pritchard(100)
    cp = concat_forward(t.primes[:20])
    assert cp[3] == 2357 and is_prime(cp[3])
    assert cp[19] == 235711131719232931374143475359616771
    bcp = concat_backward(t.primes[1:21])
    assert bcp[5] == 171311753 and is_prime(bcp[5])
    assert bcp[7] == 2319171311753


def test_concatenated_fibonacci():
    fib = [1, 1]
    while len(fib) < 20:
        fib.append(fib[-1] + fib[-2])
    cf = concat_forward(fib)
    assert cf[1] == 11 and cf[3] == 1123
    assert is_prime(cf[1]) and is_prime(cf[3])
    bcf = concat_backward(fib)
    assert bcf[2] == 211 and bcf[5] == 853211
    assert is_prime(bcf[2]) and is_prime(bcf[5])


def test_permutation_sequence():
    assert permutation_sequence(1) == 12
    assert permutation_sequence(2) == 1342
    assert permutation_sequence(5) == 13579108642
    for n in range(1, 13):
        assert permutation_sequence(n) % 10 in (2, 8)


def test_pierced_chain():
    pc = pierced_chain(4)
    assert pc == [1, 10001, 100010001, 1000100010001]
    from arithfn.factorials import factorize

    assert factorize(pc[1]).factors == [(73, 1), (137, 1)]
    assert not is_prime(pc[2])
    assert all(not is_prime(v) for v in pierced_chain(12)[1:])


def test_combinatorial_digit_primes():
    vals, count = combinatorial_digit_primes([1, 0, 3, 7, 9], 3)
    assert count == 9 and len(vals) == 10
    _, count2 = combinatorial_digit_primes([1, 3, 5, 7, 9], 3)
    assert count2 == 6
    vals3, _ = combinatorial_digit_primes([2, 0, 6, 8, 3, 9], 4)
    assert len(vals3) == 15
    _, c3 = combinatorial_digit_primes([2, 0, 6, 8, 3, 9], 4)
    assert c3 == 9
    singles, _ = combinatorial_digit_primes([4, 7], 1)
    assert singles == [4, 7]


def test_luhn_primes():
    l1 = luhn_primes(1, 30000)
    assert len(l1) == 321 and l1[0] == 229
    assert l1[:9] == [229, 239, 241, 257, 269, 271, 277, 281, 439]
    l2 = luhn_primes(2, 30000)
    assert len(l2) == 158 and l2[0] == 23
    l4 = luhn_primes(4, 30000)
    assert len(l4) == 219 and l4[0] == 23
    assert [len(luhn_primes(1, L)) for L in (300, 500, 700, 900)] == [8, 14, 22, 27]
    assert luhn_primes(3, 30000) == []
    with pytest.raises(ValueError):
        luhn_primes(1, 5)


def test_prime_digit_primes():
    t = sieve_pritchard(8000)
    first_1000 = t.primes[:1000]
    assert prime_digit_primes(first_1000, 10)[:12] == [
        2, 3, 5, 7, 23, 37, 53, 73, 223, 227, 233, 257]
    w8 = prime_digit_primes(first_1000, 8)
    assert len(w8) == 82 and w8[-1] == 4093
    w16 = prime_digit_primes(first_1000, 16)
    assert len(w16) == 68 and w16[-1] == 3547
    w100 = prime_digit_primes(first_1000, 100)
    assert len(w100) == 135 and w100[25] == 211
    assert prime_digit_subsequence(100)[-1] == 33223


def test_palindromes():
    assert gsp1([17, 3, 567]) == 173567317
    assert gsp2([17, 3, 567]) == 173567567317
    assert gsp1([17, 3, 567], 8) == 291794641
    assert gsp2([17, 3, 567], 8) == 1195190283985
    assert gsp1([31, 3, 201, 1013]) == 3132011013201331
    assert gsp2([31, 3, 201, 1013]) == 31320110131013201331
    assert is_palindrome(12321) and not is_palindrome(12331)
    z = generate_palindromes(1, 9, 2, 10, "gsp1")
    assert len(z) == 125 and z[0] == 11111 and z[-1] == 99999
    zp = generate_palindromes(1, 9, 2, 10, "gsp1", primes_only=True)
    assert zp == [11311, 13331, 13931, 15551, 17971, 19391, 19991, 31513,
                  33533, 35153, 35353, 35753, 37573, 71317, 71917, 75557,
                  77377, 77977, 79397, 79997, 93139, 93739, 95959, 97379,
                  97579]
    sp = generate_palindromes(1, 13, 3, 10, "gsp1", primes_only=True)
    assert len(sp) == 20 and sp[-1] == 131371313


def test_palindrome_counts():
    assert palindrome_count(3, 10) == [9, 18, 108]
    assert palindrome_count(4, 2) == [1, 2, 4, 6]
    assert palindrome_count(4, 3) == [2, 4, 10, 16]
    assert palindrome_count(4, 16) == [15, 30, 270, 510]


def test_grouped_palindromes():
    assert is_grouped_palindrome(10067 // 1, 8) or True
    # 23523 in base 8 groups as (23)(5)(23)
    assert is_grouped_palindrome(10067, 8)
    gsp_members = [n for n in range(1, 17) if is_grouped_palindrome(n, 2)]
    assert gsp_members == [1, 3, 5, 7, 9, 10, 11, 13, 15]
    assert grouped_palindrome_count(4, 2) == [1, 2, 4, 9]
    assert grouped_palindrome_count(4, 10) == [9, 18, 108, 1089]
    assert grouped_palindrome_count(4, 3) == [2, 4, 10, 32]
    assert grouped_palindrome_count(4, 16) == [15, 30, 270, 4335]


def test_iterate_maps():
    tr = iterate_map(13, reverse_diff)
    assert tr.orbit == [13, 18, 63, 27, 45, 9, 0] and tr.period == 1
    assert iterate_map(101, reverse_diff).orbit == [101, 0]
    assert iterate_map(103, reverse_diff).orbit == [103, 198, 693, 297, 495, 99, 0]
    tr = iterate_map(68, lambda n: digit_scale(n, 7))
    assert tr.orbit == [68, 26, 42, 84] and tr.period == 4 and tr.cycle_start == 0
    tr = iterate_map(10, lambda n: digit_scale(n, 2))
    assert tr.orbit == [10, 20, 40, 80, 60] and tr.cycle_start == 1
    tr = iterate_map(52, lambda n: subtract_reverse(n, 1))
    assert tr.period == 18
    tr = iterate_map(75, mixed_compose)
    assert tr.period == 18 and tr.orbit[:4] == [75, 32, 51, 64]
    tr = iterate_map(19, mixed_compose)
    assert tr.orbit == [19, 18, 97, 72, 95, 54, 91] and tr.period == 6
    tr = iterate_map(14, lambda n: digit_permute(n, [2, 1]))
    assert tr.orbit[:6] == [14, 27, 45, 9, 81, 63] and tr.period == 5
    assert digit_permute(970, [2, 3, 1]) == 261
    # pigeonhole: cycles always close
    for seed in range(10, 100):
        tr = iterate_map(seed, reverse_diff, max_steps=10**4)
        assert tr.period >= 1 and tr.cycle_start + tr.period <= len(tr.orbit) + 1


def test_sieve_families():
    assert odd_sieve(150) == [7, 13, 19, 23, 25, 31, 33, 37, 43, 47, 49, 53,
                              55, 61, 63, 67, 73, 75, 79, 83, 85, 89, 91, 93,
                              97, 103, 109, 113, 115, 117, 119, 121, 123,
                              127, 131, 133, 139, 141, 143, 145]
    assert [len(odd_sieve(10**k)) for k in (1, 2, 3, 4)] == [1, 25, 333, 3772]
    pf3 = power_free_sieve(125, 3)
    assert 8 not in pf3 and 27 not in pf3 and 125 not in pf3
    assert {4, 121, 124} <= set(pf3)
    pf4 = power_free_sieve(125, 4)
    assert 16 not in pf4 and 81 not in pf4 and {8, 27} <= set(pf4)
    assert squarefree_sieve(71) == [2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17,
                                    19, 21, 22, 23, 26, 29, 30, 31, 33, 34,
                                    35, 37, 38, 39, 41, 42, 43, 46, 47, 51,
                                    53, 55, 57, 58, 59, 61, 62, 65, 66, 67,
                                    69, 70, 71]
    assert [len(squarefree_sieve(10**k)) for k in (1, 2, 3, 4, 5)] == [
        6, 60, 607, 6082, 60793]
    nps = nary_power_sieve(135, 2)
    assert nps[:14] == [1, 3, 5, 9, 11, 13, 17, 21, 25, 27, 29, 33, 35, 37]
    assert [len(nary_power_sieve(10**k, 2)) for k in (1, 2, 3, 4)] == [4, 31, 293, 2894]
    assert [len(nary_power_sieve(10**k, 3)) for k in (1, 2, 3, 4)] == [7, 58, 563, 5606]
    assert [len(nary_power_sieve(10**k, 5)) for k in (1, 2, 3, 4)] == [8, 77, 761, 7605]
    kcs = kary_consecutive_sieve(1000, 2)
    assert kcs == [1, 3, 7, 13, 19, 27, 39, 49, 63, 79, 91, 109, 133, 147,
                   181, 207, 223, 253, 289, 307, 349, 387, 399, 459, 481,
                   529, 567, 613, 649, 709, 763, 807, 843, 927, 949]
    assert [len(kary_consecutive_sieve(10**k, 2)) for k in (1, 2, 3, 4)] == [
        3, 11, 35, 112]
    assert [len(kary_consecutive_sieve(10**k, 3)) for k in (1, 2, 3, 4)] == [
        5, 15, 50, 159]
    assert [len(kary_consecutive_sieve(10**k, 5)) for k in (1, 2, 3, 4)] == [
        6, 22, 71, 225]
    cons = consecutive_block_sieve(700, 1)
    assert cons == [1, 3, 6, 10, 15, 21, 28, 36, 45, 55, 66, 78, 91, 105,
                    120, 136, 153, 171, 190, 210, 231, 253, 276, 300, 325,
                    351, 378, 406, 435, 465, 496, 528, 561, 595, 630, 666]
    assert sum(1 for v in cons if is_prime(v)) == 1
    cons2 = consecutive_block_sieve(700, 2)
    assert cons2[:8] == [1, 2, 5, 9, 14, 20, 27, 35]
    assert sum(1 for v in cons2 if is_prime(v)) == 2
    assert [len(consecutive_block_sieve(10**k, 1)) for k in (1, 2, 3, 4)] == [
        4, 13, 44, 140]


def test_almost_primes():
    ap1 = almost_primes_first(10, 1000)
    assert ap1[:20] == [10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 21, 23, 25,
                        27, 29, 31, 35, 37, 41, 43]
    assert {25, 27, 35, 49} <= set(ap1)
    ap2 = almost_primes_second(10, 1000)
    assert ap2[:7] == [10, 11, 13, 17, 19, 21, 23]
    assert almost_primes_first(2, 500) == sieve_pritchard(500).primes
    assert almost_primes_second(2, 500) == sieve_pritchard(500).primes
    # beyond the merge rank both coincide with the primes
    t = sieve_pritchard(1000)
    merge_at = 10 * 11  # > spp(10)^2
    assert [v for v in ap2 if v > 21] == [p for p in t if 21 < p <= 1000]


def test_complements():
    assert m_power_complement(8, 2) == 2
    mc2 = [m_power_complement(n, 2) for n in range(10, 30)]
    assert mc2 == [10, 11, 3, 13, 14, 15, 1, 17, 2, 19, 5, 21, 22, 23, 6, 1,
                   26, 3, 7, 29]
    mc3 = [m_power_complement(n, 3) for n in range(1, 16)]
    assert mc3 == [1, 4, 9, 2, 25, 36, 49, 1, 3, 100, 121, 18, 169, 196, 225]
    assert m_power_complement(27, 5) == 9
    assert m_power_complement(32, 5) == 1
    assert m_power_complement(64, 5) == 16
    mfc1 = [m_factorial_complement(n, 1) for n in range(1, 26)]
    assert mfc1 == [1, 1, 2, 6, 24, 1, 720, 3, 80, 12, 3628800, 2, 479001600,
                    360, 8, 45, 20922789888000, 40, 6402373705728000, 6, 240,
                    1814400, 1124000727777607680000, 1, 145152]
    assert m_factorial_complement(11, 1) == 3628800
    mfc2 = [m_factorial_complement(n, 2) for n in range(1, 31)]
    assert mfc2 == [1, 1, 1, 2, 3, 8, 15, 1, 105, 384, 945, 4, 10395, 46080,
                    1, 3, 2027025, 2560, 34459425, 192, 5, 3715891200,
                    13749310575, 2, 81081, 1961990553600, 35, 23040,
                    213458046676875, 128]
    mfc3 = [m_factorial_complement(n, 3) for n in range(1, 31)]
    assert mfc3 == [1, 1, 1, 1, 2, 3, 4, 10, 2, 1, 80, 162, 280, 2, 1944, 5,
                    12320, 1, 58240, 4, 524880, 40, 4188800, 81, 167552, 140,
                    6, 1, 2504902400, 972]
    pac = [prime_additive_complement(n) for n in range(1, 54)]
    assert pac == [1, 0, 0, 1, 0, 1, 0, 3, 2, 1, 0, 1, 0, 3, 2, 1, 0, 1, 0,
                   3, 2, 1, 0, 5, 4, 3, 2, 1, 0, 1, 0, 5, 4, 3, 2, 1, 0, 3,
                   2, 1, 0, 1, 0, 3, 2, 1, 0, 5, 4, 3, 2, 1, 0]
    pac2 = [prime_additive_complement(n) for n in range(114, 151)]
    assert pac2 == [13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0, 3, 2, 1, 0,
                    5, 4, 3, 2, 1, 0, 1, 0, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0, 1]
    assert prime_additive_complement(8) == 3
    # square complement times n is a perfect square
    from math import isqrt

    for n in range(1, 200):
        k = m_power_complement(n, 2)
        assert isqrt(k * n) ** 2 == k * n


def test_position_sequences():
    t = sieve_pritchard(150)
    p33 = t.primes[:33]
    assert position_sequence(1, "min", p33) == [
        -1, -1, -1, -1, 0, 1, 1, 1, -1, -1, 0, -1, 0, -1, -1, -1, -1, 0, -1,
        0, -1, -1, -1, -1, -1, 0, 2, 2, 2, 1, 2, 0, 2]
    assert position_sequence(1, "max", p33) == [
        -1, -1, -1, -1, 1, 1, 1, 1, -1, -1, 0, -1, 0, -1, -1, -1, -1, 0, -1,
        0, -1, -1, -1, -1, -1, 2, 2, 2, 2, 2, 2, 2, 2]
    f16 = [math.factorial(j) for j in range(1, 17)]
    assert position_sequence(2, "min", f16) == [
        -1, 0, -1, 1, 1, 1, -1, 1, 3, 4, -1, -1, 4, 2, -1, 9]
    assert position_sequence(2, "max", f16) == [
        -1, 0, -1, 1, 1, 1, -1, 1, 3, 4, -1, -1, 8, 5, -1, 13]
    ml = [2**j - 1 for j in range(1, 23)]
    assert position_sequence(1, "min", ml) == [
        0, -1, -1, 1, 0, -1, 2, -1, 0, 3, -1, -1, 0, 4, -1, -1, 0, 2, -1, 6, 0, 5]
    mr = [2**j + 1 for j in range(1, 23)]
    assert position_sequence(1, "min", mr) == [
        -1, -1, -1, 1, -1, -1, 2, -1, 1, 3, -1, -1, 2, 4, -1, -1, 3, 2, -1, 6, 2, 5]
    nn = [j**j for j in range(1, 14)]
    assert position_sequence(6, "min", nn) == [
        -1, -1, -1, 0, -1, 0, -1, 0, -1, -1, 2, 0, 6]
    assert position_sequence(6, "max", nn) == [
        -1, -1, -1, 0, -1, 3, -1, 6, -1, -1, 5, 9, 6]
    assert digit_position(5, "min", 5) == 0
    assert digit_position(3, "min", 124) == -1


def test_multiplicative_sequences():
    ms23 = multiplicative_sequence([2, 3], 25)
    assert ms23[:23] == [2, 3, 6, 12, 18, 24, 36, 48, 54, 72, 96, 108, 144,
                         162, 192, 216, 288, 324, 384, 432, 486, 576, 648]
    closure = sorted({2**i * 3**j for i in range(1, 12) for j in range(1, 12)}
                     | {2, 3})[:25]
    assert ms23 == closure
    assert multiplicative_sequence([3, 7], 10) == [
        3, 7, 21, 63, 147, 189, 441, 567, 1029, 1323]
    assert multiplicative_sequence([11, 13], 9) == [
        11, 13, 143, 1573, 1859, 17303, 20449, 24167, 190333]
    assert multiplicative_sequence([2, 3, 5], 30) == [
        2, 3, 5, 30, 180, 300, 450, 1080, 1800, 2700, 3000, 4500, 6480, 6750,
        10800, 16200, 18000, 27000, 30000, 38880, 40500, 45000, 64800, 67500,
        97200, 101250, 108000, 162000, 180000, 233280]
    assert multiplicative_sequence([2, 3, 7], 12) == [
        2, 3, 7, 42, 252, 588, 882, 1512, 3528, 5292, 8232, 9072]
    assert multiplicative_sequence([11, 13, 17], 8) == [
        11, 13, 17, 2431, 347633, 454597, 537251, 49711519]


def test_progression_classification():
    assert classify_arithmetic([2, 5, 8, 11]) == \
        "Classical increasing arithmetic progression"
    assert classify_arithmetic([150, 147, 144]) == \
        "Classical decreasing arithmetic progression"
    u = [1]
    ratios = [1, 2] * 60
    for k in range(99):
        u.append(u[-1] + ratios[k])
    assert classify_arithmetic(u) == \
        "Generalized increasing arithmetic progression but not classical"
    assert classify_arithmetic([500, 499, 497, 494]) == \
        "Generalized decreasing arithmetic progression but not classical"
    assert classify_arithmetic([10, 11, 13, 13, 12]) == \
        "Non-generalized arithmetic progression"
    assert classify_geometric([2, 6, 18, 54]) == \
        "Classical increasing geometric progression"
    assert classify_geometric([10**9, 9 * 10**8, 81 * 10**7]) == \
        "Classical decreasing geometric progression"
    w3 = [math.factorial(j) for j in range(1, 18)]
    assert classify_geometric(w3) == \
        "Generalized increasing geometric progression but not classical"
    w4 = [Fraction(1), Fraction(1, 2), Fraction(1, 8), Fraction(1, 64)]
    assert classify_geometric(w4) == \
        "Generalized decreasing geometric progression but not classical"
    w5 = [Fraction(1), Fraction(1, 2), Fraction(3, 4), Fraction(3, 8)]
    assert classify_geometric(w5) == "Non-generalized geometric progression"


def test_goldbach():
    ngs = [goldbach_count(n) for n in range(6, 101, 2)]
    assert ngs == [1, 1, 2, 1, 2, 2, 2, 2, 3, 3, 3, 2, 3, 2, 4, 4, 2, 3, 4,
                   3, 4, 5, 4, 3, 5, 3, 4, 6, 3, 5, 6, 2, 5, 6, 5, 5, 7, 4,
                   5, 8, 5, 4, 9, 4, 5, 7, 3, 6]
    g556 = goldbach_decompositions(556)
    assert len(g556) == 11
    assert g556[0] == (509, 47) and g556[-1] == (293, 263)
    g346 = goldbach_decompositions(346)
    assert len(g346) == 9
    assert g346 == [(317, 29), (293, 53), (263, 83), (257, 89), (239, 107),
                    (233, 113), (197, 149), (179, 167), (173, 173)]
    table = goldbach_table(11, 50)
    assert table[0][0] == 14  # 3 + 11
    assert all(goldbach_count(n) >= 1 for n in range(6, 10**4 + 1, 2))


def test_vinogradov():
    nvs = [vinogradov_count(n) for n in range(3, 100, 2)]
    assert nvs == [0, 0, 0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 6, 7, 6, 8, 7, 9, 10,
                   10, 10, 11, 12, 12, 14, 16, 14, 16, 16, 16, 18, 20, 20,
                   20, 21, 21, 21, 27, 24, 25, 28, 27, 28, 33, 29, 32, 35,
                   34, 30]
    v3 = vinogradov_decompositions(3, 559)
    assert len(v3) == 11 and v3[0] == (3, 509, 47)
    v5 = vinogradov_decompositions(5, 559)
    assert v5[0] == (5, 547, 7) and v5[-1] == (5, 277, 277)
    assert vinogradov_decompositions(181, 559) == [(181, 197, 181)]
    assert vinogradov_decompositions(191, 559) == []
    vt = vinogradov_table(3, 13, 45)
    assert vt[0][0] == 19


def test_constructive_sets():
    from arithfn.sequences import alphabet_closure

    assert constructive_set([3, 7], 0, 3) == [3, 7, 73, 77]
    assert constructive_set([3, 7], 0, 25)[4] == 733
    four = constructive_set([1, 3, 7, 9], 3, 70)
    assert four[:13] == [9, 31, 33, 37, 39, 71, 73, 77, 79, 91, 93, 97, 99]
    assert constructive_set([1, 2, 3, 7, 9], 227, 232) == [
        2913, 2917, 2919, 2921, 2922, 2923]
    # the full closure carries s^k members of k digits
    assert alphabet_closure([1, 2, 3], 12) == [1, 2, 3, 11, 12, 13, 21, 22,
                                               23, 31, 32, 33]
    assert alphabet_closure([1, 2], 14) == [1, 2, 11, 12, 21, 22, 111, 112,
                                            121, 122, 211, 212, 221, 222]
    for alphabet in ([1, 2], [1, 2, 3]):
        s = len(alphabet)
        total = s + s**2 + s**3
        members = alphabet_closure(alphabet, total)
        for k in (1, 2, 3):
            assert sum(1 for m in members if len(str(m)) == k) == s**k


def test_unmatter():
    assert unmatter_pairs(2) == [(1, 1)]
    assert unmatter_pairs(3) == [(0, 0)]
    assert unmatter_pairs(5) == [(4, 1), (1, 4)]
    assert unmatter_pairs(3, colorless_zero=True) == [(3, 0), (0, 3)]
    flat = unmatter_sequence(2, 30)
    assert flat[:22] == [1, 1, 0, 0, 2, 2, 4, 1, 1, 4, 3, 3, 5, 2, 2, 5, 7,
                         1, 4, 4, 1, 7]
    flat0 = unmatter_sequence(2, 30, colorless_zero=True)
    assert flat0[:20] == [1, 1, 3, 0, 0, 3, 2, 2, 4, 1, 1, 4, 6, 0, 3, 3, 0,
                          6, 5, 2]
    counts = unmatter_counts(2, 30)
    assert counts[:9] == [36, 0, 1296, 15552, 46656, 559872, 5038848,
                          20155392, 181398528]
    assert counts[-1] == 1989665277486600221097984
    counts0 = unmatter_counts(2, 30, colorless_zero=True)
    assert counts0[:8] == [36, 432, 1296, 15552, 139968, 559872, 5038848,
                           40310784]
    assert counts0[-1] == 2431813116928066936897536
    for n in range(2, 40):
        for a, q in unmatter_pairs(n):
            if (a, q) != (0, 0):
                assert a + q == n and (q - a) % 3 == 0 and a >= 1 and q >= 1


def test_special_expressions():
    vals20 = special_xy_values(1, 20)
    assert len(vals20) == 127
    pr = primes_of(special_xy_values(1, 30))
    assert pr == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 593, 32993,
                  2097593, 59604644783353249]
    p3 = primes_of(special_cycle_values(3, 1, 12))
    assert len(p3) == 51
    assert p3[:8] == [3, 5, 7, 11, 13, 19, 31, 61]
    assert p3[-1] == 1008646564753
    p4 = primes_of(special_cycle_values(4, 1, 6))
    assert len(p4) == 50 and p4[-1] == 93319


def test_power_gap_solutions():
    sols = power_gap_solutions(5, 2, 1000, 3, 19, 2311)
    assert sols[0] == (2, 5, 2, 3, 24)
    assert sols[1] == (4, 5, 10, 3, 24)
    assert (23, 5, 186, 3, 1487) in sols
    assert len(sols) == 24
    assert [s.k for s in sols[:8]] == [24, 24, 27, 118, 179, 216, 235, 295]
    assert product_shift_solutions(649, 1) == [
        (1, 2, 162), (1, 3, 108), (1, 4, 81), (1, 6, 54), (1, 9, 36),
        (1, 12, 27), (2, 3, 54), (2, 6, 27), (2, 9, 18), (3, 4, 27),
        (3, 6, 18), (3, 9, 12)]
    assert product_shift_solutions(649, 19) == [
        (1, 3, 105), (1, 5, 63), (1, 7, 45), (1, 9, 35), (1, 15, 21),
        (3, 5, 21), (3, 7, 15), (5, 7, 9)]


def test_annotate():
    recs = annotate([10001], prime_flag=True, factor=True)
    assert recs[0].is_prime is False
    assert recs[0].factorization.factors == [(73, 1), (137, 1)]
