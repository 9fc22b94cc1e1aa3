"""Interpreted implementations of the hot kernels.

Same contracts as the compiled module `_kernels_c`; the dispatcher in
`kernels` picks whichever is available.  Everything here works on plain
machine-word residues and returns `array('Q')` buffers so callers never have
to care which backend produced the data.
"""

from array import array

BACKEND_NAME = "py"


def inverse_table(m: int, p: int) -> array:
    """Inverses of 1..m modulo the prime p, indexed by i (index 0 unused)."""
    if m >= p:
        raise ValueError("inverse table needs m < p")
    inv = [0] * (m + 1)
    if m >= 1:
        inv[1] = 1
    for i in range(2, m + 1):
        inv[i] = (p - p // i) * inv[p % i] % p
    return array("Q", inv)


def pow_series_prefix(coeffs, n: int, m: int, p: int, inv=None) -> array:
    """Coefficients of x^0..x^m of (sum coeffs[j] x^j)^n over F_p.

    Uses the first-order recurrence that f*h' = n*f'*h imposes on h = f^n:

        h_i = inv(f0*i) * sum_{j>=1} f_j * (j*(n+1) - i) * h_{i-j}

    Requires m < p (so the divisor i never vanishes mod p) and coeffs[0]
    a unit mod p.
    """
    d = len(coeffs) - 1
    if d < 0 or coeffs[0] % p == 0:
        raise ValueError("constant term must be a unit mod p")
    if m >= p:
        raise ValueError("prefix length must stay below p")
    h = [0] * (m + 1)
    h[0] = pow(coeffs[0] % p, n, p)
    if m == 0 or d == 0 or n == 0:
        return array("Q", h)
    if inv is None:
        inv = inverse_table(m, p)
    c0inv = pow(coeffs[0] % p, p - 2, p)
    # e[j] = f_j/f_0; u[j] tracks e[j]*(j*(n+1) - i) and drops by e[j] each
    # time i advances, so the inner loop never recomputes the bracket.
    npl = (n + 1) % p
    e = [0] + [coeffs[j] % p * c0inv % p for j in range(1, d + 1)]
    u = [0] + [e[j] * ((j * npl - 1) % p) % p for j in range(1, d + 1)]
    for i in range(1, m + 1):
        acc = 0
        for j in range(1, (d if d < i else i) + 1):
            acc += u[j] * h[i - j]
        h[i] = acc % p * inv[i] % p
        for j in range(1, d + 1):
            uj = u[j] - e[j]
            u[j] = uj + p if uj < 0 else uj
    return array("Q", h)


def pow_series_prefix_multi(runs, p, inv=None):
    """Sequential twin of the compiled fused kernel (same results)."""
    return [pow_series_prefix(c, n, m, p, inv) for c, n, m in runs]


def cube_class_table(p: int) -> bytearray:
    """Cubic-residue classes of F_p for p = 1 mod 3.

    Returns t with t[u] = k when u lies in g^k * (cubes) for the smallest
    non-cube g (k in 0..2), and t[0] = 3 as a sentinel.
    """
    if p % 3 != 1:
        raise ValueError("p must be 1 mod 3")
    t = bytearray(b"\xff") * p
    for w in range(1, p):
        t[w * w % p * w % p] = 0
    g = 2
    while t[g] == 0:
        g += 1
    g2 = g * g % p
    for u in range(1, p):
        if t[u] == 0:
            t[g * u % p] = 1
            t[g2 * u % p] = 2
    t[0] = 3
    return t


def fp_char_counts(f, p: int, cls):
    """Class frequencies (n0, n1, n2, nzero) of f(x) over x in F_p."""
    f4, f3, f2, f1, f0 = (c % p for c in reversed(f))
    n = [0, 0, 0, 0]
    for x in range(p):
        u = (((f4 * x + f3) * x + f2) * x + f1) * x + f0
        n[cls[u % p]] += 1
    return n[0], n[1], n[2], n[3]


def _fp2_sqr(x0, x1, q0, q1, p):
    w = x1 * x1 % p
    return (x0 * x0 - w * q0) % p, (2 * x0 * x1 - w * q1) % p


def _fp2_quartic(a, b, c2, c1, c0, q0, q1, p):
    # x^4 + c2 x^2 + c1 x + c0 at x = a + b*t, with t^2 = -q1*t - q0
    s0, s1 = _fp2_sqr(a, b, q0, q1, p)
    t0, t1 = _fp2_sqr(s0, s1, q0, q1, p)
    r0 = (t0 + c2 * s0 + c1 * a + c0) % p
    r1 = (t1 + c2 * s1 + c1 * b) % p
    return r0, r1


def fp2_char_counts(f2, f1, f0, p, cls, m0, m1):
    """Class frequencies of chi(Norm(f(x))) over x in F_p[t]/(t^2+m1*t+m0).

    Requires p = 1 mod 3; the norm of a+bt down to F_p is a^2 - a*b*m1 +
    b^2*m0 and u is a cube in F_{p^2} exactly when its norm is one in F_p.
    """
    c2, c1, c0 = f2 % p, f1 % p, f0 % p
    n = [0, 0, 0, 0]
    for a in range(p):
        for b in range(p):
            r0, r1 = _fp2_quartic(a, b, c2, c1, c0, m0, m1, p)
            norm = (r0 * r0 - r0 * r1 * m1 + r1 * r1 * m0) % p
            n[cls[norm]] += 1
    return n[0], n[1], n[2], n[3]


def fp2_cube_table(p, m0, m1) -> bytearray:
    """Flags the nonzero cubes of F_p[t]/(t^2+m1*t+m0), indexed by a*p+b."""
    t = bytearray(p * p)
    for a in range(p):
        for b in range(p):
            if a == 0 and b == 0:
                continue
            s0, s1 = _fp2_sqr(a, b, m0, m1, p)
            c0 = (s0 * a - s1 * b * m0) % p
            c1 = (s0 * b + s1 * a - s1 * b * m1) % p
            t[c0 * p + c1] = 1
    return t


def fp2_point_count(f2, f1, f0, p, m0, m1, cubes):
    """Affine count of y^3 = f(x) over F_{p^2}, from a cube-flag table."""
    c2, c1, c0 = f2 % p, f1 % p, f0 % p
    total = 0
    for a in range(p):
        for b in range(p):
            r0, r1 = _fp2_quartic(a, b, c2, c1, c0, m0, m1, p)
            if r0 == 0 and r1 == 0:
                total += 1
            elif cubes[r0 * p + r1]:
                total += 3
    return total


def _fp3_mul(x, y, q0, q1, q2, p):
    x0, x1, x2 = x
    y0, y1, y2 = y
    t0 = x0 * y0
    t1 = x0 * y1 + x1 * y0
    t2 = x0 * y2 + x1 * y1 + x2 * y0
    t3 = (x1 * y2 + x2 * y1) % p
    t4 = x2 * y2 % p
    # s^4 = -q2*s^3 - q1*s^2 - q0*s, then s^3 = -q2*s^2 - q1*s - q0
    t3 = (t3 - t4 * q2) % p
    t2 = (t2 - t4 * q1) % p
    t1 = (t1 - t4 * q0) % p
    t2 = (t2 - t3 * q2) % p
    t1 = (t1 - t3 * q1) % p
    t0 = (t0 - t3 * q0) % p
    return t0, t1, t2


def _fp3_norm(x, q0, q1, q2, p):
    # determinant of the multiplication-by-x matrix
    r0, r1, r2 = x
    c10 = -r2 * q0 % p
    c11 = (r0 - r2 * q1) % p
    c12 = (r1 - r2 * q2) % p
    c20 = -c12 * q0 % p
    c21 = (c10 - c12 * q1) % p
    c22 = (c11 - c12 * q2) % p
    return (
        r0 * (c11 * c22 - c12 * c21)
        - c10 * (r1 * c22 - r2 * c21)
        + c20 * (r1 * c12 - r2 * c11)
    ) % p


def fp3_char_counts(f, p, cls, m0, m1, m2):
    """Class frequencies of chi(Norm(f(x))) over F_p[s]/(s^3+m2*s^2+m1*s+m0),
    for p = 1 mod 3."""
    fl = [c % p for c in f]
    n = [0, 0, 0, 0]
    for a in range(p):
        for b in range(p):
            for c in range(p):
                x = (a, b, c)
                r = (fl[4], 0, 0)
                for k in (3, 2, 1, 0):
                    r = _fp3_mul(r, x, m0, m1, m2, p)
                    r = ((r[0] + fl[k]) % p, r[1], r[2])
                n[cls[_fp3_norm(r, m0, m1, m2, p)]] += 1
    return n[0], n[1], n[2], n[3]
