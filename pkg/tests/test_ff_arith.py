import math
import random

import pytest

from picard_lpoly.errors import SquarefreeError
from picard_lpoly.ff_arith import (
    PolyFp,
    factor_degree_pattern,
    find_cube_root_of_unity,
    frobenius_power,
    has_rational_root,
    mod_pow,
    poly_pow_coeffs,
    sieve_primes,
)

from conftest import naive_poly_pow


def trial_division_count(lo, hi):
    count = 0
    for n in range(lo, hi + 1):
        if n < 2:
            continue
        for d in range(2, math.isqrt(n) + 1):
            if n % d == 0:
                break
        else:
            count += 1
    return count


def test_sieve_small_ranges():
    assert sieve_primes(2, 10) == [2, 3, 5, 7]
    assert sieve_primes(53, 53) == [53]
    assert sieve_primes(14, 16) == []


def test_sieve_against_trial_division():
    ps = sieve_primes(2, 10**5)
    assert len(ps) == trial_division_count(2, 10**5)
    window = sieve_primes(999_900, 1_000_100)
    assert len(window) == trial_division_count(999_900, 1_000_100)
    assert all(all(q % d for d in range(2, math.isqrt(q) + 1)) for q in window)


def test_sieve_pi_of_a_million():
    assert len(sieve_primes(2, 10**6)) == 78498


def test_sieve_rejects_bad_ranges():
    with pytest.raises(ValueError):
        sieve_primes(1, 10)
    with pytest.raises(ValueError):
        sieve_primes(10, 2)
    with pytest.raises(ValueError):
        sieve_primes(2, 1 << 40)


def test_mod_pow_examples():
    assert mod_pow(2, 0, 7) == 1
    assert mod_pow(2, 3, 7) == 1
    assert mod_pow(3, 100, 101) == 1  # Fermat
    acc = 1
    for _ in range(100):
        acc = acc * 3 % 101
    assert acc == 1
    with pytest.raises(ValueError):
        mod_pow(2, -1, 7)


def test_poly_pow_coeffs_examples():
    assert poly_pow_coeffs([1, 1], 2, 2, 5) == [1, 2, 1]
    # (x^4+1)^3 = x^12 + 3x^8 + 3x^4 + 1
    got = poly_pow_coeffs([1, 0, 0, 0, 1], 3, 12, 5)
    assert got == [1, 0, 0, 0, 3, 0, 0, 0, 3, 0, 0, 0, 1]
    want = naive_poly_pow([1, 1, 0, 0, 1], 4, 7)[:17]
    assert poly_pow_coeffs([1, 1, 0, 0, 1], 4, 16, 7) == want


def test_poly_pow_coeffs_matches_naive_exhaustively():
    random.seed(20240809)
    for p in (5, 7, 11, 97):
        for _ in range(24):
            deg = random.randrange(0, 5)
            f = [random.randrange(p) for _ in range(deg + 1)]
            n = random.randrange(0, 17)
            m = random.randrange(0, 24)
            want = naive_poly_pow(f, n, p)
            want = (want + [0] * (m + 1))[: m + 1]
            assert poly_pow_coeffs(f, n, m, p) == want


def test_poly_pow_zero_polynomial():
    assert poly_pow_coeffs([0], 3, 2, 5) == [0, 0, 0]
    assert poly_pow_coeffs([0], 0, 2, 5) == [1, 0, 0]


def test_frobenius_power_examples():
    g = PolyFp((1, 0, 1), 3)  # x^2 + 1 over F_3
    assert frobenius_power(g, 1) == PolyFp((0, 2), 3)  # x^3 = -x = 2x
    with pytest.raises(ValueError):
        frobenius_power(PolyFp((1,), 5), 1)  # degree 0 modulus


def test_frobenius_power_matches_naive_division():
    random.seed(5)
    for p in (5, 7, 11, 23, 97):
        for _ in range(8):
            deg = random.randrange(1, 6)
            g = PolyFp([random.randrange(p) for _ in range(deg)] + [1], p)
            xp = [0] * p + [1]  # x^p as a dense list
            want = PolyFp(xp, p) % g
            assert frobenius_power(g, 1) == want


def test_has_rational_root_examples():
    assert has_rational_root(PolyFp((1, 0, 1), 3)) is False  # x^2 + 1 over F_3
    assert has_rational_root(PolyFp((0, 3, 0, 0, 0, 0, 0, 0, 0, 1), 5)) is True
    assert has_rational_root(PolyFp((1, 1, 0, 0, 1), 5)) is True  # root at x = 3
    assert PolyFp((1, 1, 0, 0, 1), 5).evaluate(3) == 0


def test_has_rational_root_matches_exhaustive_eval():
    random.seed(6)
    for p in (5, 53, 499):
        for _ in range(10):
            deg = random.randrange(1, 7)
            g = PolyFp([random.randrange(p) for _ in range(deg)] + [1], p)
            brute = any(g.evaluate(x) == 0 for x in range(p))
            assert has_rational_root(g) == brute


def _brute_force_pattern(f: PolyFp):
    """Factor degrees of a squarefree quartic, by exhaustive root search and
    trial division by monic quadratics.

    A root-free remainder of degree 2 or 3 is automatically irreducible; a
    root-free quartic is either irreducible or splits into two quadratics,
    and any quadratic divisor of a root-free polynomial is itself root-free.
    """
    p = f.p
    degs = []
    work = f.monic()
    for r in range(p):
        while work.degree > 0 and work.evaluate(r) == 0:
            work, rem = divmod(work, PolyFp((-r, 1), p))
            assert rem.is_zero()
            degs.append(1)
    if work.degree == 4:
        for b in range(p):
            q = next(
                (
                    PolyFp((c, b, 1), p)
                    for c in range(p)
                    if (work % PolyFp((c, b, 1), p)).is_zero()
                ),
                None,
            )
            if q is not None:
                work, _ = divmod(work, q)
                degs.extend((2, work.degree))
                work = PolyFp((1,), p)
                break
        else:
            degs.append(4)
            work = PolyFp((1,), p)
    if work.degree > 0:
        degs.append(work.degree)
    return tuple(sorted(degs))


def test_factor_degree_pattern_examples(c1):
    assert 1 in factor_degree_pattern(PolyFp((1, 1, 0, 0, 1), 5))
    # (x-1)(x-2)(x-3)(x-4) over F_7
    f = PolyFp((24, -50, 35, -10, 1), 7)
    assert factor_degree_pattern(f) == (1, 1, 1, 1)
    with pytest.raises(SquarefreeError):
        factor_degree_pattern(PolyFp((0, 0, 1, 0, 1), 5))  # x^2(x^2+1)


def test_factor_degree_pattern_against_brute_force(c1, c2):
    random.seed(11)
    checked = 0
    ps = [p for p in sieve_primes(5, 150) if p not in (229,)]
    while checked < 100:
        p = random.choice(ps)
        curve = random.choice([c1, c2])
        if curve.disc % p == 0:
            continue
        f = PolyFp(curve.f_coeffs(), p)
        pattern = factor_degree_pattern(f)
        assert pattern == _brute_force_pattern(f)
        assert sum(pattern) == 4
        checked += 1


def test_pattern_four_iff_trivial_gcds():
    from picard_lpoly.ff_arith import _poly_modexp

    random.seed(12)
    for p in (5, 7, 11, 13, 17):
        for _ in range(20):
            f = PolyFp([random.randrange(p) for _ in range(4)] + [1], p)
            if f.gcd(f.deriv()).degree != 0:
                continue
            x = PolyFp.x(p)
            g1 = f.gcd(_poly_modexp(x, p, f) - x).degree
            g2 = f.gcd(_poly_modexp(x, p * p, f) - x).degree
            assert (factor_degree_pattern(f) == (4,)) == (g1 == 0 and g2 == 0)


def test_find_cube_root_of_unity():
    assert find_cube_root_of_unity(7) == 4
    z13 = find_cube_root_of_unity(13)
    assert z13 == 3  # exhaustive: 3^3 = 27 = 1 mod 13, smallest-g rule gives 3
    with pytest.raises(ValueError):
        find_cube_root_of_unity(5)
    for p in sieve_primes(7, 500):
        if p % 3 != 1:
            continue
        z = find_cube_root_of_unity(p)
        assert z != 1 and pow(z, 3, p) == 1
        assert (z * z + z + 1) % p == 0
