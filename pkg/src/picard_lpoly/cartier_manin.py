"""Cartier-Manin matrix data of a Picard curve modulo a good prime.

In the basis of regular differentials x^(i-1) y^(j-3) dx the Cartier operator
sends the j-eigenspace to the j'-eigenspace with p*j' = j (mod 3); its matrix
entries are coefficients of powers of f̃ = f mod p.  For split p the operator
preserves both eigenspaces (a 2x2 block from exponent (2p-2)/3 and a 1x1
block from (p-1)/3); for inert p it swaps them, leaving an anti-diagonal
matrix built from exponents (p-2)/3 and (2p-1)/3.

Every entry [x^k] f̃^n is pulled from a coefficient prefix computed either
forward or through the reversed polynomial ([x^k] f^n = [x^(4n-k)] rev(f)^n),
whichever needs the shorter prefix; both stay below p, which keeps the
recurrence kernel away from its vanishing divisors.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .curve import PicardCurve
from .ff_arith import PolyFp, power_prefix_multi


@dataclass(frozen=True)
class SplitCMData:
    """The sigma-block (2x2), the sigma-bar block (1x1) and the chosen root z."""

    a2: tuple[tuple[int, int], tuple[int, int]]
    a1: int
    z: int
    p: int

    def trace(self) -> int:
        return (self.a2[0][0] + self.a2[1][1]) % self.p

    def det(self) -> int:
        m = self.a2
        return (m[0][0] * m[1][1] - m[0][1] * m[1][0]) % self.p


@dataclass(frozen=True)
class InertCMData:
    """Anti-diagonal entries: b from exponent (p-2)/3, c from (2p-1)/3."""

    b1: int
    b2: int
    c1: int
    c2: int
    p: int

    def t_mod_p(self) -> int:
        return (self.b1 * self.c1 + self.b2 * self.c2) % self.p


def _split_entries(fc, p: int, backend=None):
    """Split-case entries for ascending quartic coefficients fc mod p."""
    n1 = (2 * p - 2) // 3
    n2 = (p - 1) // 3
    rc = list(reversed(fc))
    inv = kernels.inverse_table(p - 1, p, backend=backend)
    fwd, rev, reva = power_prefix_multi(
        [
            (fc, n1, p - 1),
            (rc, n1, (2 * p - 2) // 3),
            (rc, n2, (p - 1) // 3),
        ],
        p,
        inv=inv,
        backend=backend,
    )
    a2 = (
        (int(fwd[p - 1]), int(fwd[p - 2])),
        (int(rev[(2 * p - 5) // 3]), int(rev[(2 * p - 2) // 3])),
    )
    a1 = int(reva[(p - 1) // 3])
    return a2, a1


def _inert_entries(fc, p: int, backend=None):
    """Inert-case entries for ascending quartic coefficients fc mod p."""
    e1 = (p - 2) // 3
    e2 = (2 * p - 1) // 3
    rc = list(reversed(fc))
    inv = kernels.inverse_table(p - 1, p, backend=backend)
    rev1, fwd2, rev2 = power_prefix_multi(
        [
            (rc, e1, (p - 2) // 3),
            (fc, e2, p - 1),
            (rc, e2, (2 * p - 1) // 3),
        ],
        p,
        inv=inv,
        backend=backend,
    )
    b1 = int(rev1[(p - 5) // 3])
    b2 = int(rev1[(p - 2) // 3])
    c1 = int(fwd2[p - 1])
    c2 = int(rev2[(2 * p - 1) // 3])
    return b1, b2, c1, c2


def _check_good(curve: PicardCurve, p: int, residue: int):
    if p % 3 != residue:
        raise ValueError(f"p must be {residue} mod 3")
    if p <= 3 or curve.disc % p == 0:
        raise ValueError("p must be a good prime > 3")


def split_matrices(curve: PicardCurve, p: int, z: int, backend=None) -> SplitCMData:
    """Both eigenblocks of the Cartier-Manin matrix at a split good prime."""
    _check_good(curve, p, 1)
    if not 1 < z < p or pow(z, 3, p) != 1:
        raise ValueError("z must be a primitive cube root of unity mod p")
    a2, a1 = _split_entries([c % p for c in curve.f_coeffs()], p, backend=backend)
    return SplitCMData(a2=a2, a1=a1, z=z, p=p)


def is_ordinary(data: SplitCMData) -> bool:
    """Full rank 3: the 2x2 block invertible and the 1x1 entry nonzero."""
    return data.det() != 0 and data.a1 != 0


def inert_data(curve: PicardCurve, p: int, backend=None) -> InertCMData:
    """The anti-diagonal Cartier-Manin entries at an inert good prime."""
    _check_good(curve, p, 2)
    b1, b2, c1, c2 = _inert_entries(
        [c % p for c in curve.f_coeffs()], p, backend=backend
    )
    return InertCMData(b1=b1, b2=b2, c1=c1, c2=c2, p=p)


def inert_t_mod_p(curve: PicardCurve, p: int, backend=None) -> int:
    """t_p mod p as b1*c1 + b2*c2 from the anti-diagonal entries."""
    return inert_data(curve, p, backend=backend).t_mod_p()


def reversed_charpoly_mod_p(data: SplitCMData | InertCMData) -> PolyFp:
    """det(1 - A_p T) over F_p for the assembled 3x3 matrix."""
    p = data.p
    if isinstance(data, SplitCMData):
        block = PolyFp((1, -data.trace(), data.det()), p)
        return block * PolyFp((1, -data.a1), p)
    return PolyFp((1, 0, -data.t_mod_p()), p)
