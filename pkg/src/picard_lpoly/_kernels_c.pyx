# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled implementations of the hot kernels.

Mirrors `_kernels_py`; the dispatcher in `kernels` prefers this module when
the extension built.  The power-series recurrence is the throughput-critical
piece: for p below 2^30 it runs in 64-bit words with Barrett reduction,
above that it falls back to 128-bit modular arithmetic (moduli up to 2^40).
"""

import array as _array

from cpython cimport array as carray

# The 128-bit primitives live in verbatim C: Cython's integer inference
# otherwise narrows __int128 intermediates back to 64 bits.
cdef extern from *:
    """
    typedef unsigned __int128 pl_u128;

    static inline unsigned long long pl_mulmod(
            unsigned long long a, unsigned long long b, unsigned long long p) {
        return (unsigned long long)(((pl_u128)a * b) % p);
    }

    /* mu = floor(2^64 / p); valid for a < 2^64 with at most two corrections */
    static inline unsigned long long pl_mu(unsigned long long p) {
        return (unsigned long long)((((pl_u128)1) << 64) / p);
    }

    static inline unsigned long long pl_barrett(
            unsigned long long a, unsigned long long p, unsigned long long mu) {
        unsigned long long q = (unsigned long long)(((pl_u128)a * mu) >> 64);
        unsigned long long r = a - q * p;
        if (r >= p) r -= p;
        if (r >= p) r -= p;
        return r;
    }

    static inline pl_u128 pl_mac128(
            pl_u128 acc, unsigned long long a, unsigned long long b) {
        return acc + (pl_u128)a * b;
    }

    static inline unsigned long long pl_mod128(pl_u128 a, unsigned long long p) {
        return (unsigned long long)(a % p);
    }
    """
    ctypedef unsigned long long u128 "pl_u128"
    u128 pl_mac128(u128 acc, unsigned long long a, unsigned long long b) nogil
    unsigned long long pl_mulmod(unsigned long long a, unsigned long long b, unsigned long long p) nogil
    unsigned long long pl_mu(unsigned long long p) nogil
    unsigned long long pl_barrett(unsigned long long a, unsigned long long p, unsigned long long mu) nogil
    unsigned long long pl_mod128(u128 a, unsigned long long p) nogil

ctypedef unsigned long long u64

BACKEND_NAME = "c"

_TEMPLATE_Q = _array.array("Q", [])


cdef inline u64 _mulmod(u64 a, u64 b, u64 p) noexcept nogil:
    return pl_mulmod(a, b, p)


cdef inline u64 _bar(u64 a, u64 p, u64 mu) noexcept nogil:
    return pl_barrett(a, p, mu)


cdef inline u64 _addm(u64 a, u64 b, u64 p) noexcept nogil:
    cdef u64 r = a + b
    return r - p if r >= p else r


cdef inline u64 _subm(u64 a, u64 b, u64 p) noexcept nogil:
    return a - b if a >= b else a + (p - b)


cdef u64 _powmod(u64 base, u64 e, u64 p) noexcept nogil:
    cdef u64 r = 1 % p
    base %= p
    while e:
        if e & 1:
            r = _mulmod(r, base, p)
        base = _mulmod(base, base, p)
        e >>= 1
    return r


def inverse_table(m, p):
    """Inverses of 1..m modulo the prime p, indexed by i (index 0 unused)."""
    cdef Py_ssize_t mm = m
    cdef u64 pp = p
    if mm >= <Py_ssize_t>pp:
        raise ValueError("inverse table needs m < p")
    arr = carray.clone(_TEMPLATE_Q, mm + 1, zero=False)
    cdef u64[::1] inv = arr
    cdef Py_ssize_t i
    inv[0] = 0
    if mm >= 1:
        inv[1] = 1
    if pp < (<u64>1) << 32:
        for i in range(2, mm + 1):
            inv[i] = (pp - pp // i) * inv[pp % i] % pp
    else:
        for i in range(2, mm + 1):
            inv[i] = _mulmod(pp - pp // i, inv[pp % i], pp)
    return arr


def pow_series_prefix(coeffs, n, m, p, inv=None):
    """Coefficients of x^0..x^m of (sum coeffs[j] x^j)^n over F_p.

    Same recurrence and preconditions as the interpreted twin: m < p,
    coeffs[0] a unit mod p, degree at most 8.
    """
    cdef Py_ssize_t mm = m
    cdef u64 pp = p
    cdef u64 nn = n
    cdef Py_ssize_t d = len(coeffs) - 1
    if d < 0 or coeffs[0] % p == 0:
        raise ValueError("constant term must be a unit mod p")
    if d > 8:
        raise ValueError("kernel supports degree <= 8")
    if mm >= <Py_ssize_t>pp:
        raise ValueError("prefix length must stay below p")

    if mm == 0 or d == 0 or nn == 0:
        arr = carray.clone(_TEMPLATE_Q, mm + 1, zero=True)
        arr[0] = _powmod(coeffs[0] % p, nn, pp)
        return arr
    arr = carray.clone(_TEMPLATE_Q, mm + 1, zero=False)
    cdef u64[::1] h = arr
    h[0] = _powmod(coeffs[0] % p, nn, pp)

    if inv is None:
        inv = inverse_table(mm, pp)
    cdef u64[::1] invv = inv

    cdef u64 e[9]
    cdef u64 u[9]
    cdef u64 c0inv = _powmod(coeffs[0] % p, pp - 2, pp)
    cdef u64 npl = (nn + 1) % pp
    cdef Py_ssize_t j
    for j in range(1, d + 1):
        e[j] = _mulmod(coeffs[j] % p, c0inv, pp)
        u[j] = _mulmod(e[j], (<u64>j * npl + pp - 1) % pp, pp)

    cdef Py_ssize_t i, jmax
    cdef u64 acc64, hi, mu
    cdef u128 acc128
    cdef u64 e1, e2, e3, e4, u1, u2, u3, u4
    if pp < (<u64>1) << 30:
        # products < 2^60, so up to 8 summands fit in one word
        mu = pl_mu(pp)
        if d == 4:
            # the dominant shape: unrolled, branch-free inner updates
            e1, e2, e3, e4 = e[1], e[2], e[3], e[4]
            u1, u2, u3, u4 = u[1], u[2], u[3], u[4]
            for i in range(1, 4 if mm >= 4 else mm + 1):
                acc64 = 0
                if i >= 1:
                    acc64 += u1 * h[i - 1]
                if i >= 2:
                    acc64 += u2 * h[i - 2]
                if i >= 3:
                    acc64 += u3 * h[i - 3]
                hi = _bar(acc64, pp, mu)
                h[i] = _bar(hi * invv[i], pp, mu)
                u1 = u1 - e1 if u1 >= e1 else u1 + (pp - e1)
                u2 = u2 - e2 if u2 >= e2 else u2 + (pp - e2)
                u3 = u3 - e3 if u3 >= e3 else u3 + (pp - e3)
                u4 = u4 - e4 if u4 >= e4 else u4 + (pp - e4)
            for i in range(4, mm + 1):
                acc64 = u1 * h[i - 1] + u2 * h[i - 2] + u3 * h[i - 3] + u4 * h[i - 4]
                hi = _bar(acc64, pp, mu)
                h[i] = _bar(hi * invv[i], pp, mu)
                u1 = u1 - e1 if u1 >= e1 else u1 + (pp - e1)
                u2 = u2 - e2 if u2 >= e2 else u2 + (pp - e2)
                u3 = u3 - e3 if u3 >= e3 else u3 + (pp - e3)
                u4 = u4 - e4 if u4 >= e4 else u4 + (pp - e4)
        else:
            for i in range(1, mm + 1):
                jmax = d if d < i else i
                acc64 = 0
                for j in range(1, jmax + 1):
                    acc64 += u[j] * h[i - j]
                hi = _bar(acc64, pp, mu)
                h[i] = _bar(hi * invv[i], pp, mu)
                for j in range(1, d + 1):
                    u[j] = u[j] - e[j] if u[j] >= e[j] else u[j] + (pp - e[j])
    else:
        for i in range(1, mm + 1):
            jmax = d if d < i else i
            acc128 = pl_mac128(0, 0, 0)
            for j in range(1, jmax + 1):
                acc128 = pl_mac128(acc128, u[j], h[i - j])
            hi = pl_mod128(acc128, pp)
            h[i] = _mulmod(hi, invv[i], pp)
            for j in range(1, d + 1):
                u[j] = u[j] - e[j] if u[j] >= e[j] else u[j] + (pp - e[j])
    return arr


def cube_class_table(p):
    """Cubic-residue classes of F_p (p = 1 mod 3); t[0] = 3 as sentinel."""
    cdef u64 pp = p
    if pp % 3 != 1:
        raise ValueError("p must be 1 mod 3")
    if pp >= (<u64>1) << 30:
        raise ValueError("class table needs p < 2^30")
    t = bytearray(b"\xff") * pp
    cdef unsigned char[::1] tv = t
    cdef u64 mu = pl_mu(pp)
    cdef u64 w, g, g2, u
    for w in range(1, pp):
        tv[_bar(_bar(w * w, pp, mu) * w, pp, mu)] = 0
    g = 2
    while tv[g] == 0:
        g += 1
    g2 = g * g % pp
    for u in range(1, pp):
        if tv[u] == 0:
            tv[_bar(g * u, pp, mu)] = 1
            tv[_bar(g2 * u, pp, mu)] = 2
    tv[0] = 3
    return t


def fp_char_counts(f, p, cls):
    """Class frequencies (n0, n1, n2, nzero) of f(x) over x in F_p."""
    cdef u64 pp = p
    if pp >= (<u64>1) << 30:
        raise ValueError("fp enumeration needs p < 2^30")
    cdef u64 f4 = f[4] % p, f3 = f[3] % p, f2 = f[2] % p, f1 = f[1] % p, f0 = f[0] % p
    cdef unsigned char[::1] tv = cls
    cdef u64 mu = pl_mu(pp)
    cdef u64 x, u
    cdef long long n0 = 0, n1 = 0, n2 = 0, nz = 0
    cdef unsigned char k
    for x in range(pp):
        u = _bar(f4 * x + f3, pp, mu)
        u = _bar(u * x + f2, pp, mu)
        u = _bar(u * x + f1, pp, mu)
        u = _bar(u * x + f0, pp, mu)
        k = tv[u]
        if k == 0:
            n0 += 1
        elif k == 1:
            n1 += 1
        elif k == 2:
            n2 += 1
        else:
            nz += 1
    return n0, n1, n2, nz


def fp2_char_counts(f2, f1, f0, p, cls, m0, m1):
    """Class frequencies of chi(Norm(f(x))) over x in F_p[t]/(t^2+m1*t+m0),
    for the depressed monic quartic x^4 + f2 x^2 + f1 x + f0 (p = 1 mod 3)."""
    cdef u64 pp = p
    if pp >= (<u64>1) << 30:
        raise ValueError("fp2 enumeration needs p < 2^30")
    cdef u64 c2 = f2 % p, c1 = f1 % p, c0 = f0 % p
    cdef u64 q0 = m0 % p, q1 = m1 % p
    cdef unsigned char[::1] tv = cls
    cdef u64 mu = pl_mu(pp)
    cdef u64 a, b, w, s0, s1, t0, t1, r0, r1, norm
    cdef long long n0 = 0, n1 = 0, n2 = 0, nz = 0
    cdef unsigned char k
    for a in range(pp):
        for b in range(pp):
            # s = x^2, t = s^2, f = t + c2*s + c1*x + c0 for x = a + b*t
            w = _bar(b * b, pp, mu)
            s0 = _subm(_bar(a * a, pp, mu), _bar(w * q0, pp, mu), pp)
            s1 = _subm(_bar(2 * a * b, pp, mu), _bar(w * q1, pp, mu), pp)
            w = _bar(s1 * s1, pp, mu)
            t0 = _subm(_bar(s0 * s0, pp, mu), _bar(w * q0, pp, mu), pp)
            t1 = _subm(_bar(2 * s0 * s1, pp, mu), _bar(w * q1, pp, mu), pp)
            r0 = _bar(t0 + _bar(c2 * s0, pp, mu) + _bar(c1 * a, pp, mu) + c0, pp, mu)
            r1 = _bar(t1 + _bar(c2 * s1, pp, mu) + _bar(c1 * b, pp, mu), pp, mu)
            norm = _bar(r0 * r1, pp, mu)
            norm = _subm(
                _addm(_bar(r0 * r0, pp, mu), _bar(_bar(r1 * r1, pp, mu) * q0, pp, mu), pp),
                _bar(norm * q1, pp, mu),
                pp,
            )
            k = tv[norm]
            if k == 0:
                n0 += 1
            elif k == 1:
                n1 += 1
            elif k == 2:
                n2 += 1
            else:
                nz += 1
    return n0, n1, n2, nz


def fp2_cube_table(p, m0, m1):
    """Flags the nonzero cubes of F_p[t]/(t^2+m1*t+m0), indexed by a*p+b."""
    cdef u64 pp = p
    if pp >= (<u64>1) << 14:
        # table is p^2 bytes; refuse before it gets out of hand
        raise ValueError("fp2 cube table needs p < 2^14")
    t = bytearray(pp * pp)
    cdef unsigned char[::1] tv = t
    cdef u64 q0 = m0 % p, q1 = m1 % p
    cdef u64 mu = pl_mu(pp)
    cdef u64 a, b, w, s0, s1, c0, c1
    for a in range(pp):
        for b in range(pp):
            if a == 0 and b == 0:
                continue
            w = _bar(b * b, pp, mu)
            s0 = _subm(_bar(a * a, pp, mu), _bar(w * q0, pp, mu), pp)
            s1 = _subm(_bar(2 * a * b, pp, mu), _bar(w * q1, pp, mu), pp)
            w = _bar(s1 * b, pp, mu)
            c0 = _subm(_bar(s0 * a, pp, mu), _bar(w * q0, pp, mu), pp)
            c1 = _subm(_addm(_bar(s0 * b, pp, mu), _bar(s1 * a, pp, mu), pp),
                       _bar(w * q1, pp, mu), pp)
            tv[c0 * pp + c1] = 1
    return t


def fp2_point_count(f2, f1, f0, p, m0, m1, cubes):
    """Affine count of y^3 = f(x) over F_{p^2}, from a cube-flag table."""
    cdef u64 pp = p
    cdef u64 c2 = f2 % p, c1 = f1 % p, c0 = f0 % p
    cdef u64 q0 = m0 % p, q1 = m1 % p
    cdef unsigned char[::1] tv = cubes
    cdef u64 mu = pl_mu(pp)
    cdef u64 a, b, w, s0, s1, t0, t1, r0, r1
    cdef long long total = 0
    for a in range(pp):
        for b in range(pp):
            w = _bar(b * b, pp, mu)
            s0 = _subm(_bar(a * a, pp, mu), _bar(w * q0, pp, mu), pp)
            s1 = _subm(_bar(2 * a * b, pp, mu), _bar(w * q1, pp, mu), pp)
            w = _bar(s1 * s1, pp, mu)
            t0 = _subm(_bar(s0 * s0, pp, mu), _bar(w * q0, pp, mu), pp)
            t1 = _subm(_bar(2 * s0 * s1, pp, mu), _bar(w * q1, pp, mu), pp)
            r0 = _bar(t0 + _bar(c2 * s0, pp, mu) + _bar(c1 * a, pp, mu) + c0, pp, mu)
            r1 = _bar(t1 + _bar(c2 * s1, pp, mu) + _bar(c1 * b, pp, mu), pp, mu)
            if r0 == 0 and r1 == 0:
                total += 1
            elif tv[r0 * pp + r1]:
                total += 3
    return total


def fp3_char_counts(f, p, cls, m0, m1, m2):
    """Class frequencies of chi(Norm(f(x))) over F_p[s]/(s^3+m2*s^2+m1*s+m0),
    for p = 1 mod 3."""
    cdef u64 pp = p
    if pp >= (<u64>1) << 30:
        raise ValueError("fp3 enumeration needs p < 2^30")
    cdef u64 fl[5]
    cdef Py_ssize_t k
    for k in range(5):
        fl[k] = f[k] % p
    cdef u64 q0 = m0 % p, q1 = m1 % p, q2 = m2 % p
    cdef unsigned char[::1] tv = cls
    cdef u64 mu = pl_mu(pp)
    cdef u64 a, b, c, r0, r1, r2, t0, t1, t2, t3, t4
    cdef u64 c10, c11, c12, c20, c21, c22, norm
    cdef long long n0 = 0, n1 = 0, n2 = 0, nz = 0
    cdef unsigned char kk
    for a in range(pp):
        for b in range(pp):
            for c in range(pp):
                r0 = fl[4]
                r1 = 0
                r2 = 0
                for k in range(3, -1, -1):
                    t0 = _bar(r0 * a, pp, mu)
                    t1 = _bar(r0 * b + r1 * a, pp, mu)
                    t2 = _bar(r0 * c + r1 * b + r2 * a, pp, mu)
                    t3 = _bar(r1 * c + r2 * b, pp, mu)
                    t4 = _bar(r2 * c, pp, mu)
                    # s^4 = -q2*s^3 - q1*s^2 - q0*s, then reduce s^3
                    t3 = _subm(t3, _bar(t4 * q2, pp, mu), pp)
                    t2 = _subm(t2, _bar(t4 * q1, pp, mu), pp)
                    t1 = _subm(t1, _bar(t4 * q0, pp, mu), pp)
                    t2 = _subm(t2, _bar(t3 * q2, pp, mu), pp)
                    t1 = _subm(t1, _bar(t3 * q1, pp, mu), pp)
                    t0 = _subm(t0, _bar(t3 * q0, pp, mu), pp)
                    r0 = _addm(t0, fl[k], pp)
                    r1 = t1
                    r2 = t2
                c10 = _subm(0, _bar(r2 * q0, pp, mu), pp)
                c11 = _subm(r0, _bar(r2 * q1, pp, mu), pp)
                c12 = _subm(r1, _bar(r2 * q2, pp, mu), pp)
                c20 = _subm(0, _bar(c12 * q0, pp, mu), pp)
                c21 = _subm(c10, _bar(c12 * q1, pp, mu), pp)
                c22 = _subm(c11, _bar(c12 * q2, pp, mu), pp)
                norm = _bar(r0 * _subm(_bar(c11 * c22, pp, mu), _bar(c12 * c21, pp, mu), pp), pp, mu)
                norm = _subm(norm, _bar(c10 * _subm(_bar(r1 * c22, pp, mu), _bar(r2 * c21, pp, mu), pp), pp, mu), pp)
                norm = _addm(norm, _bar(c20 * _subm(_bar(r1 * c12, pp, mu), _bar(r2 * c11, pp, mu), pp), pp, mu), pp)
                kk = tv[norm]
                if kk == 0:
                    n0 += 1
                elif kk == 1:
                    n1 += 1
                elif kk == 2:
                    n2 += 1
                else:
                    nz += 1
    return n0, n1, n2, nz


cdef inline void _advance(u64* uu, u64* ee, Py_ssize_t d, u64[::1] h,
                          Py_ssize_t i, u64 pp, u64 mu, u64 ivi) noexcept nogil:
    # one recurrence step: h[i] from the d previous entries
    cdef u64 acc
    cdef Py_ssize_t j, jm
    if d == 4 and i >= 4:
        acc = uu[1] * h[i - 1] + uu[2] * h[i - 2] + uu[3] * h[i - 3] + uu[4] * h[i - 4]
        h[i] = _bar(_bar(acc, pp, mu) * ivi, pp, mu)
        uu[1] = uu[1] - ee[1] if uu[1] >= ee[1] else uu[1] + (pp - ee[1])
        uu[2] = uu[2] - ee[2] if uu[2] >= ee[2] else uu[2] + (pp - ee[2])
        uu[3] = uu[3] - ee[3] if uu[3] >= ee[3] else uu[3] + (pp - ee[3])
        uu[4] = uu[4] - ee[4] if uu[4] >= ee[4] else uu[4] + (pp - ee[4])
        return
    jm = d if d < i else i
    acc = 0
    for j in range(1, jm + 1):
        acc += uu[j] * h[i - j]
    h[i] = _bar(_bar(acc, pp, mu) * ivi, pp, mu)
    for j in range(1, d + 1):
        uu[j] = uu[j] - ee[j] if uu[j] >= ee[j] else uu[j] + (pp - ee[j])


def pow_series_prefix_multi(runs, p, inv):
    """Advance up to three independent prefix recurrences in one loop.

    `runs` is a list of (coeffs, n, m) with the same preconditions as
    `pow_series_prefix`; the fused loop interleaves their dependency chains,
    which roughly doubles single-core throughput.  Only the 64-bit path is
    fused; larger moduli fall back to sequential runs.
    """
    cdef u64 pp = p
    cdef Py_ssize_t nruns = len(runs)
    if nruns == 0:
        return []
    if nruns > 3 or pp >= (<u64>1) << 30:
        return [pow_series_prefix(c, n, m, p, inv) for c, n, m in runs]

    cdef u64 e[3][9]
    cdef u64 u[3][9]
    cdef Py_ssize_t d[3]
    cdef Py_ssize_t mm[3]
    cdef u64 npl, c0inv
    cdef Py_ssize_t k, j, i
    cdef Py_ssize_t maxm = 0

    arrays = []
    for k in range(3):
        mm[k] = -1
    for k, (coeffs, n_obj, m_obj) in enumerate(runs):
        d[k] = len(coeffs) - 1
        mm[k] = m_obj
        if d[k] < 0 or coeffs[0] % p == 0:
            raise ValueError("constant term must be a unit mod p")
        if d[k] > 8:
            raise ValueError("kernel supports degree <= 8")
        if mm[k] >= <Py_ssize_t>pp:
            raise ValueError("prefix length must stay below p")
        nn = n_obj
        arr = carray.clone(_TEMPLATE_Q, mm[k] + 1, zero=False)
        arr[0] = _powmod(coeffs[0] % p, nn, pp)
        if mm[k] == 0 or d[k] == 0 or nn == 0:
            for i in range(1, mm[k] + 1):
                arr[i] = 0
            mm[k] = 0  # nothing to advance
        arrays.append(arr)
        if mm[k] > maxm:
            maxm = mm[k]
        c0inv = _powmod(coeffs[0] % p, pp - 2, pp)
        npl = (<u64>n_obj + 1) % pp
        for j in range(1, d[k] + 1):
            e[k][j] = _mulmod(coeffs[j] % p, c0inv, pp)
            u[k][j] = _mulmod(e[k][j], (<u64>j * npl + pp - 1) % pp, pp)

    if inv is None:
        inv = inverse_table(maxm, pp)
    cdef u64[::1] invv = inv
    cdef u64 mu = pl_mu(pp)

    cdef u64[::1] h0 = arrays[0]
    cdef u64[::1] h1 = arrays[1] if nruns > 1 else arrays[0]
    cdef u64[::1] h2 = arrays[2] if nruns > 2 else arrays[0]
    cdef Py_ssize_t m0 = mm[0]
    cdef Py_ssize_t m1 = mm[1] if nruns > 1 else 0
    cdef Py_ssize_t m2 = mm[2] if nruns > 2 else 0
    cdef u64 ivi

    for i in range(1, maxm + 1):
        ivi = invv[i]
        if i <= m0:
            _advance(&u[0][0], &e[0][0], d[0], h0, i, pp, mu, ivi)
        if i <= m1:
            _advance(&u[1][0], &e[1][0], d[1], h1, i, pp, mu, ivi)
        if i <= m2:
            _advance(&u[2][0], &e[2][0], d[2], h2, i, pp, mu, ivi)
    return arrays
