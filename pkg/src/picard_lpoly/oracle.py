"""Brute-force ground truth for L-polynomials.

`count_points` enumerates C over F_p, F_{p^2}, F_{p^3} (two interchangeable
cube tests: precomputed residue tables and the character-power test), and
`lpoly_from_counts` rebuilds the L-polynomial from the three counts by
Newton's identities plus the functional equation.

Enumerating F_{p^3} stops being realistic long before p reaches the ranges
the lift is tested on, so for split primes `oracle_lpoly` can replace the
single top count: the same enumeration passes over F_p and F_{p^2} also
bucket f(x) by cubic-residue class, which pins down the trace and middle
coefficient of the degree-3 eigenfactor exactly; its constant coefficient
then follows from the Weil pairing alpha*conj(alpha) = p.  That data path
never touches Cartier-Manin matrices or the lift.
"""

from __future__ import annotations

import itertools

from . import kernels
from .curve import PicardCurve
from .eisenstein import Eisenstein, euclidean_divmod
from .errors import CapacityError, OracleError
from .ff_arith import PolyFp, has_rational_root
from .lpoly import LPolynomial

DEFAULT_ENUM_BOUND = 1 << 32
#: Above this size of p^3, split primes switch to the character-sum route.
CHAR_ROUTE_THRESHOLD = 1 << 21
#: The F_{p^2} cube table costs p^2 bytes; refuse beyond this.
_FP2_TABLE_MAX_P = 1 << 14


class ExtField:
    """F_{p^k} as F_p[s]/(M) for the first monic irreducible M in scan order.

    The modulus scan walks monic polynomials by ascending coefficient code
    (constant term fastest), so every run of the program picks the same
    field model.  Elements are coefficient tuples of length k.
    """

    def __init__(self, p: int, k: int):
        if k not in (1, 2, 3):
            raise ValueError("k must be 1, 2 or 3")
        self.p = p
        self.k = k
        self.modulus = self._find_modulus()

    def _find_modulus(self) -> tuple[int, ...]:
        p, k = self.p, self.k
        if k == 1:
            return (0, 1)
        for code in itertools.count():
            lower = [(code // p**i) % p for i in range(k)]
            if code >= p**k:
                raise ArithmeticError("no irreducible modulus found")
            # degree 2 and 3: irreducible iff no rational root
            if not has_rational_root(PolyFp(lower + [1], p)):
                return tuple(lower + [1])

    def zero(self):
        return (0,) * self.k

    def one(self):
        return (1,) + (0,) * (self.k - 1)

    def elements(self):
        for tup in itertools.product(range(self.p), repeat=self.k):
            yield tup

    def mul(self, u, v):
        p, k = self.p, self.k
        if k == 1:
            return (u[0] * v[0] % p,)
        raw = [0] * (2 * k - 1)
        for i, a in enumerate(u):
            for j, b in enumerate(v):
                raw[i + j] += a * b
        for d in range(2 * k - 2, k - 1, -1):
            c = raw[d] % p
            if c:
                for j in range(k):
                    raw[d - k + j] -= c * self.modulus[j]
            raw[d] = 0
        return tuple(c % p for c in raw[:k])

    def pow(self, u, e: int):
        result = self.one()
        while e:
            if e & 1:
                result = self.mul(result, u)
            u = self.mul(u, u)
            e >>= 1
        return result

    def eval_poly(self, coeffs, x):
        """A polynomial with F_p coefficients at the field element x."""
        acc = self.zero()
        for c in reversed([c % self.p for c in coeffs]):
            acc = self.mul(acc, x)
            acc = ((acc[0] + c) % self.p,) + acc[1:]
        return acc


def _count_charpow(curve: PicardCurve, p: int, k: int) -> int:
    """Reference count via the character-power cube test (small fields only)."""
    q = p**k
    field = ExtField(p, k)
    e = (q - 1) // 3
    zero, one = field.zero(), field.one()
    fc = curve.f_coeffs()
    total = 1
    for x in field.elements():
        u = field.eval_poly(fc, x)
        if u == zero:
            total += 1
        elif field.pow(u, e) == one:
            total += 3
    return total


def _count_table(curve: PicardCurve, p: int, k: int, backend=None) -> int:
    """Count via precomputed cubic-residue tables (the production route)."""
    ker = kernels.get(backend)
    f2, f1, f0 = curve.f2, curve.f1, curve.f0
    if k == 1:
        cls = ker.cube_class_table(p)
        n0, n1, n2, nz = ker.fp_char_counts(curve.f_coeffs(), p, cls)
        return 1 + 3 * n0 + nz
    if k == 2:
        field = ExtField(p, 2)
        m0, m1 = field.modulus[0], field.modulus[1]
        if p % 3 == 1:
            cls = ker.cube_class_table(p)
            n0, n1, n2, nz = ker.fp2_char_counts(f2, f1, f0, p, cls, m0, m1)
            return 1 + 3 * n0 + nz
        if p >= _FP2_TABLE_MAX_P:
            raise CapacityError("F_{p^2} cube table too large")
        cubes = ker.fp2_cube_table(p, m0, m1)
        return 1 + ker.fp2_point_count(f2, f1, f0, p, m0, m1, cubes)
    field = ExtField(p, 3)
    m0, m1, m2 = field.modulus[0], field.modulus[1], field.modulus[2]
    cls = ker.cube_class_table(p)
    n0, n1, n2, nz = ker.fp3_char_counts(curve.f_coeffs(), p, cls, m0, m1, m2)
    return 1 + 3 * n0 + nz


def count_points(
    curve: PicardCurve,
    p: int,
    k: int,
    method: str = "auto",
    enum_bound: int = DEFAULT_ENUM_BOUND,
    backend=None,
) -> int:
    """#C(F_{p^k}) by direct enumeration, including the point at infinity.

    For q = 2 mod 3 the cube map is a bijection, so the count is q + 1 with
    no enumeration at all.  Beyond `enum_bound` the oracle refuses.
    """
    if k not in (1, 2, 3):
        raise ValueError("k must be 1, 2 or 3")
    if p <= 3 or curve.disc % p == 0:
        raise ValueError("p must be a good prime > 3")
    q = p**k
    if q % 3 == 2:
        return q + 1
    if q > enum_bound:
        raise CapacityError(f"p^k = {q} exceeds the enumeration bound {enum_bound}")
    if method == "charpow":
        return _count_charpow(curve, p, k)
    if method in ("auto", "table"):
        return _count_table(curve, p, k, backend=backend)
    raise ValueError(f"unknown counting method {method!r}")


def lpoly_from_counts(n1: int, n2: int, n3: int, p: int) -> LPolynomial:
    """L_p from the three point counts, by Newton's identities.

    The /2 and /3 steps check divisibility explicitly, so inconsistent
    counts surface as errors instead of silently wrong polynomials.
    """
    s1 = p + 1 - n1
    s2 = p * p + 1 - n2
    s3 = p**3 + 1 - n3
    e1 = s1
    q2, r2 = divmod(s1 * s1 - s2, 2)
    if r2:
        raise OracleError("counts give a non-integral T^2 coefficient")
    e2 = q2
    q3, r3 = divmod(s3 - s1 * s2 + e2 * s1, 3)
    if r3:
        raise OracleError("counts give a non-integral T^3 coefficient")
    e3 = q3
    try:
        return LPolynomial.from_low_coeffs(p, -e1, e2, -e3)
    except ValueError as exc:
        raise OracleError(f"counts are inconsistent: {exc}") from None


# ---------------------------------------------------------------------------
# character-sum route for split primes


def _eis_div_exact(num: Eisenstein, den: Eisenstein, what: str) -> Eisenstein:
    q, r = euclidean_divmod(num, den)
    if not r.is_zero():
        raise OracleError(f"character data is inconsistent ({what} division)")
    return q


def split_frobenius_data(curve: PicardCurve, p: int, backend=None):
    """(a, b, c, N1, N2) for a split good prime, from character sums.

    a and b are the first two coefficients of one degree-3 eigenfactor of
    L_p, read off the cubic-residue class counts of f(x) over F_p and
    F_{p^2}; c comes from the pairing p*b = c*conj(a).  Raises OracleError
    in the sole indeterminate case conj(a) = 0 (then c is not pinned down).
    """
    if p % 3 != 1 or p <= 3 or curve.disc % p == 0:
        raise ValueError("p must be a split good prime")
    ker = kernels.get(backend)
    cls = ker.cube_class_table(p)
    n0, n1, n2, nz = ker.fp_char_counts(curve.f_coeffs(), p, cls)
    a1_sum = Eisenstein(n0 - n2, n1 - n2)
    count1 = 1 + 3 * n0 + nz
    field = ExtField(p, 2)
    m0, m1 = field.modulus[0], field.modulus[1]
    n0, n1, n2, nz = ker.fp2_char_counts(curve.f2, curve.f1, curve.f0, p, cls, m0, m1)
    a2_sum = Eisenstein(n0 - n2, n1 - n2)
    count2 = 1 + 3 * n0 + nz

    a = -a1_sum
    b = _eis_div_exact(a * a + a2_sum, Eisenstein(2, 0), "by 2")
    if a.is_zero():
        raise OracleError(
            f"trace coefficient vanishes at p={p}; the pairing cannot pin down "
            "the constant coefficient, use full enumeration"
        )
    c = _eis_div_exact(p * b, a.conj(), "by conj(a)")
    if c.norm() != p**3:
        raise OracleError(f"character route got norm(c) != p^3 at p={p}")
    return a, b, c, count1, count2


def oracle_lpoly(
    curve: PicardCurve,
    p: int,
    enum_bound: int = DEFAULT_ENUM_BOUND,
    char_threshold: int = CHAR_ROUTE_THRESHOLD,
    backend=None,
) -> LPolynomial:
    """The full L-polynomial of a good prime, by counting alone.

    Inert p: N1 and N3 are forced (cube map bijective), N2 is enumerated.
    Split p: N1, N2 are enumerated; N3 likewise while p^3 stays under
    `char_threshold`, otherwise it is reconstructed from the cubic-character
    data gathered during the same enumeration passes.
    """
    if p <= 3 or curve.disc % p == 0:
        raise ValueError("p must be a good prime > 3")
    if p % 3 == 2:
        n2 = count_points(curve, p, 2, enum_bound=enum_bound, backend=backend)
        return lpoly_from_counts(p + 1, n2, p**3 + 1, p)
    if p**3 <= min(char_threshold, enum_bound):
        n1 = count_points(curve, p, 1, enum_bound=enum_bound, backend=backend)
        n2 = count_points(curve, p, 2, enum_bound=enum_bound, backend=backend)
        n3 = count_points(curve, p, 3, enum_bound=enum_bound, backend=backend)
        return lpoly_from_counts(n1, n2, n3, p)
    a, b, c, n1, n2 = split_frobenius_data(curve, p, backend=backend)
    p3_trace = (a * a * a - 3 * (a * b) + 3 * c).rational_trace()
    n3 = p**3 + 1 - p3_trace
    return lpoly_from_counts(n1, n2, n3, p)


def oracle_t_inert(
    curve: PicardCurve, p: int, enum_bound: int = DEFAULT_ENUM_BOUND, backend=None
) -> int:
    """Exact t_p at an inert good prime, from the F_{p^2} count."""
    n2 = count_points(curve, p, 2, enum_bound=enum_bound, backend=backend)
    t2, r = divmod(p * p + 1 + 2 * p - n2, 2)
    if r:
        raise OracleError(f"F_(p^2) count has the wrong parity at p={p}")
    return t2
