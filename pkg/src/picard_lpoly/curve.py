"""The Picard curve y^3 = x^4 + f2 x^2 + f1 x + f0 over Q.

Holds the normalized integral model together with its cached discriminant
and the degree-9 polynomial psi attached to f (whose roots mod p control the
parity of t_p at inert primes), plus good/bad prime classification.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property


def _int_det(rows: list[list[int]]) -> int:
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    m = [row[:] for row in rows]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _resultant(f: list[int], g: list[int]) -> int:
    """Resultant of two integer polynomials (ascending coefficients)."""
    df = len(f) - 1
    dg = len(g) - 1
    size = df + dg
    rows = []
    fd = list(reversed(f))
    gd = list(reversed(g))
    for i in range(dg):
        rows.append([0] * i + fd + [0] * (size - df - 1 - i))
    for i in range(df):
        rows.append([0] * i + gd + [0] * (size - dg - 1 - i))
    return _int_det(rows)


def quartic_discriminant(a4: int, a3: int, a2: int, a1: int, a0: int) -> int:
    """disc of a4 x^4 + ... + a0, as Res(f, f')/a4 (exact)."""
    if a4 == 0:
        raise ValueError("leading coefficient must be nonzero")
    f = [a0, a1, a2, a3, a4]
    fp = [a1, 2 * a2, 3 * a3, 4 * a4]
    res = _resultant(f, fp)
    q, r = divmod(res, a4)
    assert r == 0
    return q


def discriminant(f2: int, f1: int, f0: int) -> int:
    """disc(x^4 + f2 x^2 + f1 x + f0), via the Sylvester resultant."""
    return quartic_discriminant(1, 0, f2, f1, f0)


def compute_psi(f2: int, f1: int, f0: int) -> tuple[int, ...]:
    """The ten ascending coefficients of the monic degree-9 polynomial psi_f."""
    return (
        -8 * f1**3,
        -432 * f0**2 + 216 * f0 * f2**2 - 120 * f1**2 * f2 - 27 * f2**4,
        -864 * f0 * f1 - 168 * f1 * f2**2,
        1728 * f0 * f2 - 636 * f1**2 + 80 * f2**3,
        336 * f1 * f2,
        1080 * f0 - 78 * f2**2,
        -168 * f1,
        24 * f2,
        0,
        1,
    )


class PrimeClass(str, enum.Enum):
    """Final classification of a prime, as serialized in output records."""

    BAD = "bad"
    SPLIT_ORDINARY = "split_ordinary"
    SPLIT_NON_ORDINARY = "split_non_ordinary"
    INERT = "inert"


class ReductionType(str, enum.Enum):
    """Coarse classification; Split is provisional until A_p's rank is known."""

    BAD = "bad"
    SPLIT = "split"
    INERT = "inert"


@dataclass(frozen=True)
class PicardCurve:
    """Normalized integral model y^3 = x^4 + f2 x^2 + f1 x + f0, separable."""

    f2: int
    f1: int
    f0: int

    def __post_init__(self):
        if self.disc == 0:
            raise ValueError("f must be separable (nonzero discriminant)")

    @cached_property
    def disc(self) -> int:
        return discriminant(self.f2, self.f1, self.f0)

    @cached_property
    def psi(self) -> tuple[int, ...]:
        return compute_psi(self.f2, self.f1, self.f0)

    def f_coeffs(self) -> tuple[int, int, int, int, int]:
        """Ascending coefficients (f0, f1, f2, 0, 1) of the quartic."""
        return (self.f0, self.f1, self.f2, 0, 1)

    def label(self) -> str:
        return f"y^3 = x^4 + {self.f2}*x^2 + {self.f1}*x + {self.f0}"


def _shift_quartic(b3: int, b2: int, b1: int, b0: int, t: int):
    """Coefficients of (x+t)^4 + b3 (x+t)^3 + b2 (x+t)^2 + b1 (x+t) + b0."""
    c3 = 4 * t + b3
    c2 = 6 * t * t + 3 * b3 * t + b2
    c1 = 4 * t**3 + 3 * b3 * t * t + 2 * b2 * t + b1
    c0 = t**4 + b3 * t**3 + b2 * t * t + b1 * t + b0
    return c3, c2, c1, c0


def normalize(a4: int, a3: int, a2: int, a1: int, a0: int) -> PicardCurve:
    """Depressed monic integral model isomorphic over Q to y^3 = quartic.

    Clears the leading coefficient by f -> a4^3 f(x/a4), then the cubic term
    by a shift; when the shift b3/4 is not integral the model is first scaled
    by x -> x/64, y -> 4^4 y (64 is a cube, so the model stays of Picard
    shape), which makes the shift integral.
    """
    if a4 == 0 or quartic_discriminant(a4, a3, a2, a1, a0) == 0:
        raise ValueError("input must be a separable quartic")
    if a4 != 1:
        a3, a2, a1, a0 = a3, a4 * a2, a4**2 * a1, a4**3 * a0
    if a3 != 0:
        if a3 % 4:
            c = 64
            a3, a2, a1, a0 = c * a3, c**2 * a2, c**3 * a1, c**4 * a0
        a3, a2, a1, a0 = _shift_quartic(a3, a2, a1, a0, -(a3 // 4))
        assert a3 == 0
    return PicardCurve(f2=a2, f1=a1, f0=a0)


def classify_prime(curve: PicardCurve, p: int) -> ReductionType:
    """Bad / Inert / provisional Split for the fixed normalized model."""
    if p in (2, 3) or curve.disc % p == 0:
        return ReductionType.BAD
    return ReductionType.SPLIT if p % 3 == 1 else ReductionType.INERT
