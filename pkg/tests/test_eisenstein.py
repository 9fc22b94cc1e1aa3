import random

import pytest
from hypothesis import given, strategies as st

from picard_lpoly import eisenstein as ei
from picard_lpoly.eisenstein import Eisenstein
from picard_lpoly.ff_arith import find_cube_root_of_unity, sieve_primes

ints = st.integers(min_value=-10**6, max_value=10**6)
elements = st.builds(Eisenstein, ints, ints)


def test_norm_examples():
    assert Eisenstein(1, 0).norm() == 1
    assert Eisenstein(2, -1).norm() == 7
    assert Eisenstein(0, 0).norm() == 0


def test_conj_examples():
    assert ei.OMEGA.conj() == Eisenstein(-1, -1)
    assert Eisenstein(5, 0).conj() == Eisenstein(5, 0)
    assert Eisenstein(2, -1).conj() == Eisenstein(3, 1)


@given(elements)
def test_conj_involution_and_norm(alpha):
    assert alpha.conj().conj() == alpha
    prod = alpha * alpha.conj()
    assert prod.b == 0
    assert prod.a == alpha.norm()
    assert alpha.norm() >= 0
    assert (alpha.norm() == 0) == alpha.is_zero()


@given(elements, elements)
def test_norm_multiplicative(a, b):
    assert (a * b).norm() == a.norm() * b.norm()


def test_omega_relation():
    # w^2 = -1 - w
    assert ei.OMEGA * ei.OMEGA == Eisenstein(-1, -1)
    for u in ei.SIXTH_ROOTS:
        assert u.norm() == 1
        acc = ei.ONE
        for _ in range(6):
            acc = acc * u
        assert acc == ei.ONE
    assert len(set(ei.SIXTH_ROOTS)) == 6


def test_euclidean_gcd_examples():
    g = ei.euclidean_gcd(ei.from_int(6), ei.from_int(4))
    assert g.norm() == 4  # an associate of 2
    alpha = Eisenstein(3, 5)
    assert ei.euclidean_gcd(alpha, ei.ZERO) == alpha
    g = ei.euclidean_gcd(Eisenstein(2, -1), ei.from_int(7))
    assert g.norm() == 7  # associate of 2 - w
    with pytest.raises(ValueError):
        ei.euclidean_gcd(ei.ZERO, ei.ZERO)


@given(elements, elements)
def test_euclidean_division_contract(a, b):
    if b.is_zero():
        return
    q, r = ei.euclidean_divmod(a, b)
    assert q * b + r == a
    assert r.norm() < b.norm()


@given(elements, elements)
def test_gcd_divides_both(a, b):
    if a.is_zero() and b.is_zero():
        return
    g = ei.euclidean_gcd(a, b)
    for v in (a, b):
        q, r = ei.euclidean_divmod(v, g)
        assert r.is_zero()


def test_gcd_norm_on_rational_integers():
    import math

    random.seed(3)
    for _ in range(200):
        x, y = random.randrange(1, 10**6), random.randrange(1, 10**6)
        g = ei.euclidean_gcd(ei.from_int(x), ei.from_int(y))
        assert g.norm() == math.gcd(x, y) ** 2


def test_split_prime_examples():
    pi7 = ei.split_prime(7, 4)
    assert pi7.norm() == 7
    z13 = find_cube_root_of_unity(13)
    assert ei.split_prime(13, z13).norm() == 13
    with pytest.raises(ValueError):
        ei.split_prime(7, 1)


def test_split_prime_norm_up_to_10000():
    for p in sieve_primes(7, 10_000):
        if p % 3 != 1:
            continue
        z = find_cube_root_of_unity(p)
        pi = ei.split_prime(p, z)
        assert pi.norm() == p
        prod = pi * pi.conj()
        assert prod == ei.from_int(p)  # norm form: pi * conj(pi) = +p exactly


def test_sigma_apply_examples():
    for p in (7, 13, 19):
        z = find_cube_root_of_unity(p)
        assert ei.sigma_apply(ei.OMEGA, z, p) == z
        pi = ei.split_prime(p, z)
        assert ei.sigma_apply(pi, z, p) == 0
        assert ei.sigma_apply(pi.conj(), z, p) != 0


def test_sigma_apply_is_ring_homomorphism():
    random.seed(4)
    p = 103
    z = find_cube_root_of_unity(p)
    for _ in range(1000):
        a = Eisenstein(random.randrange(-500, 500), random.randrange(-500, 500))
        b = Eisenstein(random.randrange(-500, 500), random.randrange(-500, 500))
        assert ei.sigma_apply(a + b, z, p) == (
            ei.sigma_apply(a, z, p) + ei.sigma_apply(b, z, p)
        ) % p
        assert ei.sigma_apply(a * b, z, p) == (
            ei.sigma_apply(a, z, p) * ei.sigma_apply(b, z, p)
        ) % p


def test_rounding_ties_toward_minus_infinity():
    from picard_lpoly.eisenstein import _round_half_down

    assert _round_half_down(1, 2) == 0
    assert _round_half_down(-1, 2) == -1
    assert _round_half_down(3, 4) == 1
    assert _round_half_down(-3, 4) == -1
    assert _round_half_down(5, 2) == 2
