"""Exact arithmetic in Z[w], w a primitive cube root of unity (w^2 = -1-w).

Elements are stored on the basis {1, w}, matching the x + w*y shape the
lifting step solves for.  The ring is Euclidean for the norm
N(a+bw) = a^2 - ab + b^2; division rounds both rational coordinates to the
nearest integer with ties toward minus infinity so gcd chains are
reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Eisenstein:
    a: int
    b: int

    def __add__(self, other: "Eisenstein") -> "Eisenstein":
        return Eisenstein(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "Eisenstein") -> "Eisenstein":
        return Eisenstein(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "Eisenstein":
        return Eisenstein(-self.a, -self.b)

    def __mul__(self, other) -> "Eisenstein":
        if isinstance(other, int):
            return Eisenstein(self.a * other, self.b * other)
        # (a + bw)(c + dw) with w^2 = -1 - w
        a, b, c, d = self.a, self.b, other.a, other.b
        return Eisenstein(a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def __repr__(self):
        return f"Eisenstein({self.a}, {self.b})"

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def norm(self) -> int:
        return self.a * self.a - self.a * self.b + self.b * self.b

    def conj(self) -> "Eisenstein":
        """Image under w -> w^2 = -1 - w, i.e. (a, b) -> (a - b, -b)."""
        return Eisenstein(self.a - self.b, -self.b)

    def rational_trace(self) -> int:
        """self + conj(self) as a rational integer (= 2a - b)."""
        return 2 * self.a - self.b


ZERO = Eisenstein(0, 0)
ONE = Eisenstein(1, 0)
OMEGA = Eisenstein(0, 1)

#: The six units of Z[w]: 1, -1, w, -w, w^2, -w^2.
SIXTH_ROOTS = (
    Eisenstein(1, 0),
    Eisenstein(-1, 0),
    Eisenstein(0, 1),
    Eisenstein(0, -1),
    Eisenstein(-1, -1),
    Eisenstein(1, 1),
)


def from_int(n: int) -> Eisenstein:
    return Eisenstein(n, 0)


def _round_half_down(num: int, den: int) -> int:
    """Nearest integer to num/den (den > 0), ties toward minus infinity."""
    return -((-2 * num + den) // (2 * den))


def euclidean_divmod(alpha: Eisenstein, beta: Eisenstein):
    """Quotient and remainder with N(remainder) < N(beta)."""
    if beta.is_zero():
        raise ZeroDivisionError("division by zero in Z[w]")
    n = beta.norm()
    prod = alpha * beta.conj()
    q = Eisenstein(_round_half_down(prod.a, n), _round_half_down(prod.b, n))
    return q, alpha - q * beta


def euclidean_gcd(alpha: Eisenstein, beta: Eisenstein) -> Eisenstein:
    """A gcd of alpha and beta, unique up to the six units (not normalized)."""
    if alpha.is_zero() and beta.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    while not beta.is_zero():
        _, r = euclidean_divmod(alpha, beta)
        alpha, beta = beta, r
    return alpha


def exact_div(alpha: Eisenstein, beta: Eisenstein) -> Eisenstein:
    """alpha/beta when beta divides alpha exactly; raises otherwise."""
    q, r = euclidean_divmod(alpha, beta)
    if not r.is_zero():
        raise ValueError(f"{beta} does not divide {alpha} in Z[w]")
    return q


def split_prime(p: int, z: int) -> Eisenstein:
    """A generator pi of one prime above p = 1 mod 3, via gcd(z - w, p).

    z must be a primitive cube root of unity mod p; the returned pi has
    norm exactly p and satisfies sigma_apply(pi, z, p) = 0.
    """
    if not 1 < z < p or pow(z, 3, p) != 1:
        raise ValueError("z must be a primitive cube root of unity mod p")
    pi = euclidean_gcd(Eisenstein(z, -1), from_int(p))
    if pi.norm() != p:
        raise ArithmeticError(f"gcd(z - w, p) has norm {pi.norm()}, expected {p}")
    return pi


def sigma_apply(alpha: Eisenstein, z: int, p: int) -> int:
    """Reduction of alpha under the map sending w to z: (a + b*z) mod p."""
    return (alpha.a + alpha.b * z) % p
