"""The degree-6 integer L-polynomial attached to a good prime."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class LPolynomial:
    """1 + a1*T + ... + a6*T^6 with the genus-3 Weil symmetry baked in.

    Construction validates a0 = 1, a6 = p^3, the functional equation
    a_{6-i} = p^{3-i} * a_i, and L(1) > 0 (the Jacobian group order), so a
    malformed lift or reconstruction fails loudly at the boundary.
    """

    p: int
    coeffs: tuple[int, int, int, int, int, int, int]

    def __post_init__(self):
        a = self.coeffs
        if len(a) != 7:
            raise ValueError("need 7 coefficients a0..a6")
        if a[0] != 1:
            raise ValueError("constant coefficient must be 1")
        for i in range(4):
            if a[6 - i] != self.p ** (3 - i) * a[i]:
                raise ValueError(f"functional equation fails at i={i}")
        if self(1) <= 0:
            raise ValueError("L(1) must be positive")

    def __call__(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def reduce_mod(self, m: int) -> tuple[int, ...]:
        return tuple(c % m for c in self.coeffs)

    def as_strings(self) -> list[str]:
        """Decimal-string coefficients (a6 = p^3 overflows 64-bit quickly)."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_strings(cls, p: int, vals) -> "LPolynomial":
        return cls(p, tuple(int(v) for v in vals))

    @classmethod
    def from_low_coeffs(cls, p: int, a1: int, a2: int, a3: int) -> "LPolynomial":
        """Complete (a1, a2, a3) to all seven coefficients by the symmetry."""
        return cls(p, (1, a1, a2, a3, p * a2, p * p * a1, p**3))
