import pytest

from picard_lpoly import cartier_manin as cm
from picard_lpoly import oracle
from picard_lpoly.cartier_manin import InertCMData, SplitCMData, _inert_entries, _split_entries
from picard_lpoly.curve import PicardCurve
from picard_lpoly.ff_arith import find_cube_root_of_unity, poly_pow_coeffs, sieve_primes

L61_C1 = (1, -12, 108, -614, 6588, -44652, 226981)  # frozen from point counts
L11_C1 = (1, 0, 6, 0, 66, 0, 1331)


def test_split_entries_formal_monomial():
    # f = x^4: every f^n is a monomial, so no entry index can match
    a2, a1 = _split_entries([0, 0, 0, 0, 1], 7)
    assert a2 == ((0, 0), (0, 0)) and a1 == 0


def test_split_entries_against_naive_powering(c1):
    p = 7
    fc = [c % p for c in c1.f_coeffs()]
    n1, n2 = (2 * p - 2) // 3, (p - 1) // 3
    pow1 = poly_pow_coeffs(fc, n1, 4 * n1, p)
    pow2 = poly_pow_coeffs(fc, n2, 4 * n2, p)
    a2, a1 = _split_entries(fc, p)
    assert a2 == ((pow1[p - 1], pow1[p - 2]), (pow1[2 * p - 1], pow1[2 * p - 2]))
    assert a1 == pow2[p - 1]


def test_all_entries_match_naive_powering_up_to_1000(c1, c2):
    # the full mandatory gate: every matrix entry the fused recurrence kernel
    # produces must equal the binary-powering route, for all p <= 1000
    for curve in (c1, c2):
        for p in sieve_primes(5, 1000):
            if curve.disc % p == 0:
                continue
            fc = [c % p for c in curve.f_coeffs()]
            if p % 3 == 1:
                n1, n2 = (2 * p - 2) // 3, (p - 1) // 3
                pow1 = poly_pow_coeffs(fc, n1, 2 * p, p)
                pow2 = poly_pow_coeffs(fc, n2, p, p)
                a2, a1 = _split_entries(fc, p)
                assert a2[0] == (pow1[p - 1], pow1[p - 2])
                assert a2[1] == (pow1[2 * p - 1], pow1[2 * p - 2])
                assert a1 == pow2[p - 1]
            else:
                e1, e2 = (p - 2) // 3, (2 * p - 1) // 3
                powb = poly_pow_coeffs(fc, e1, p, p)
                powc = poly_pow_coeffs(fc, e2, 2 * p, p)
                b1, b2, c1e, c2e = _inert_entries(fc, p)
                assert (b1, b2) == (powb[p - 1], powb[p - 2])
                assert (c1e, c2e) == (powc[p - 1], powc[2 * p - 1])


def test_split_mod_p_congruence_at_61(c1):
    p = 61
    z = find_cube_root_of_unity(p)
    data = cm.split_matrices(c1, p, z)
    g = cm.reversed_charpoly_mod_p(data)
    got = tuple(g.coeffs) + (0,) * (7 - len(g.coeffs))
    # L mod p: the top three coefficients vanish by the functional equation
    assert got == tuple(c % p for c in L61_C1)


def test_is_ordinary_examples(c1):
    zero = SplitCMData(a2=((0, 0), (0, 0)), a1=0, z=2, p=7)
    assert not cm.is_ordinary(zero)
    full = SplitCMData(a2=((1, 0), (0, 1)), a1=3, z=2, p=7)
    assert cm.is_ordinary(full)
    # C1 at 7 and 73 is non-ordinary (central L-coefficient divisible by p)
    for p, expect in ((7, False), (13, True), (61, True), (73, False)):
        z = find_cube_root_of_unity(p)
        assert cm.is_ordinary(cm.split_matrices(c1, p, z)) is expect


def test_nonordinary_iff_central_coefficient_divisible(c1, cached_oracle):
    for p in sieve_primes(7, 600):
        if p % 3 != 1 or c1.disc % p == 0:
            continue
        z = find_cube_root_of_unity(p)
        ordinary = cm.is_ordinary(cm.split_matrices(c1, p, z))
        a3 = cached_oracle(c1, p).coeffs[3]
        assert ordinary == (a3 % p != 0), p


def test_inert_entries_formal_monomial():
    # f = x^4 at p = 5: b1 = [x^4](x^4)^1 = 1 (4*e1 = p-1 exactly), but the
    # c-entries have no matching index, so t = b1*c1 + b2*c2 = 0
    b1, b2, c1e, c2e = _inert_entries([0, 0, 0, 0, 1], 5)
    assert (b1 * c1e + b2 * c2e) % 5 == 0
    assert (c1e, c2e) == (0, 0)
    # at p = 11 no exponent aligns at all
    assert _inert_entries([0, 0, 0, 0, 1], 11) == (0, 0, 0, 0)


def test_inert_x4_plus_1_at_5(curve_x4_plus_1):
    d = cm.inert_data(curve_x4_plus_1, 5)
    assert (d.b1, d.b2) == (1, 0)  # from f^1 = x^4 + 1
    assert (d.c1, d.c2) == (3, 0)  # from f^3 = x^12 + 3x^8 + 3x^4 + 1
    assert d.t_mod_p() == 3


def test_inert_t_mod_p_matches_oracle_at_11(c1):
    t11 = 11 - L11_C1[2]  # L = (1+pT^2)(1-tT^2+p^2T^4) has a2 = p - t
    assert cm.inert_t_mod_p(c1, 11) == t11 % 11


def test_reversed_charpoly_forms():
    zero = SplitCMData(a2=((0, 0), (0, 0)), a1=0, z=2, p=7)
    assert cm.reversed_charpoly_mod_p(zero).coeffs == (1,)
    d = InertCMData(b1=2, b2=3, c1=4, c2=2, p=11)
    # anti-diagonal block: trace 0, det 0, so exactly 1 - (b.c) T^2
    got = cm.reversed_charpoly_mod_p(d)
    assert got.coeffs == (1, 0, (-(2 * 4 + 3 * 2)) % 11)


def test_inert_assembled_matrix_structure():
    # the 3x3 matrix [[0,0,c1],[0,0,c2],[b1,b2,0]] has trace 0 and det 0
    b1, b2, c1e, c2e, p = 2, 3, 4, 2, 11
    m = [[0, 0, c1e], [0, 0, c2e], [b1, b2, 0]]
    trace = sum(m[i][i] for i in range(3))
    det = (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )
    assert trace == 0 and det % p == 0
    # and its reversed charpoly det(1 - MT) expands to 1 - (b1c1+b2c2)T^2
    # via direct cofactor expansion over Z:
    t = b1 * c1e + b2 * c2e
    assert det == 0
    assert cm.reversed_charpoly_mod_p(InertCMData(b1, b2, c1e, c2e, p)).coeffs == (
        1,
        0,
        (-t) % p,
    )


def test_precondition_checks(c1):
    with pytest.raises(ValueError):
        cm.split_matrices(c1, 11, 3)  # 11 is inert
    with pytest.raises(ValueError):
        cm.split_matrices(c1, 7, 1)  # z must be primitive
    with pytest.raises(ValueError):
        cm.split_matrices(c1, 7, 3)  # 3^3 = 6 != 1 mod 7
    with pytest.raises(ValueError):
        cm.inert_data(c1, 229)  # bad prime
