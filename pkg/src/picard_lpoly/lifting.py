"""Lifting mod-p Cartier-Manin data to the exact integer L-polynomial.

Split ordinary primes p >= 53: solve the 2x2 linear system for the trace
coefficient a = x + y*w, lift both coordinates to (-p/2, p/2] (unique under
the Weil bound once p >= 53), recover pi = gcd(z - w, p), pick the sixth
root of unity matching the ratio equation, and expand the conjugate product.

Inert primes: t_p is pinned modulo p by the anti-diagonal matrix entries,
modulo 2 by whether psi_f has a rational root, and modulo 3 by whether f̃ is
irreducible; |t_p| <= 2p makes the CRT lift unique.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import cartier_manin as cm
from . import eisenstein as ei
from .curve import PicardCurve
from .eisenstein import Eisenstein
from .errors import (
    CrtRangeError,
    NonRealProductError,
    PolyDivisionError,
    WeilBoundError,
    ZetaMatchError,
)
from .ff_arith import PolyFp, factor_degree_pattern, find_cube_root_of_unity, has_rational_root
from .lpoly import LPolynomial


def centered_lift(v: int, p: int) -> int:
    """The representative of v mod p in (-p/2, p/2]."""
    v %= p
    return v if 2 * v <= p else v - p


def lift_a(r_sigma: int, r_sigmabar: int, z: int, p: int) -> Eisenstein:
    """The trace coefficient a = x + y*w from its two eigenspace reductions.

    Solves x + z*y = r_sigma, x + z^2*y = r_sigmabar over F_p and lifts each
    coordinate to the centered interval; max(x^2, y^2) <= 12p < p^2/4 for the
    true value once p >= 53, so the lift is exact.
    """
    if p < 53:
        raise ValueError("the centered lift is only unique for p >= 53")
    z2 = z * z % p
    y = (r_sigma - r_sigmabar) * pow(z - z2, p - 2, p) % p
    x = (r_sigma - z * y) % p
    xl, yl = centered_lift(x, p), centered_lift(y, p)
    if xl * xl > 12 * p or yl * yl > 12 * p:
        raise WeilBoundError(
            f"lifted trace ({xl}, {yl}) violates the Weil bound at p={p}"
        )
    return Eisenstein(xl, yl)


def determine_zeta(
    s_sigma: int, r_sigmabar: int, pi: Eisenstein, z: int, p: int
) -> Eisenstein:
    """The sixth root of unity with sigma-image s_sigma/(r_sigmabar*sigma(pi-bar))."""
    denom = r_sigmabar * ei.sigma_apply(pi.conj(), z, p) % p
    if denom == 0:
        raise ZetaMatchError("ratio equation degenerates; input not ordinary?")
    target = s_sigma * pow(denom, p - 2, p) % p
    for unit in ei.SIXTH_ROOTS:
        if ei.sigma_apply(unit, z, p) == target:
            return unit
    raise ZetaMatchError(f"no sixth root of unity reduces to {target} mod {p}")


def conjugate_product(a: Eisenstein, b: Eisenstein, c: Eisenstein, p: int) -> LPolynomial:
    """Expand (1 - aT + bT^2 - cT^3)(1 - a̅T + b̅T^2 - c̅T^3) into integers."""
    one = ei.ONE
    left = [one, -a, b, -c]
    right = [one, -a.conj(), b.conj(), -c.conj()]
    prod = [ei.ZERO] * 7
    for i, u in enumerate(left):
        for j, v in enumerate(right):
            prod[i + j] = prod[i + j] + u * v
    for k, e in enumerate(prod):
        if e.b != 0:
            raise NonRealProductError(f"omega component {e.b} survives at T^{k}")
    return LPolynomial(p, tuple(e.a for e in prod))


def assemble_split(a: Eisenstein, zeta: Eisenstein, pi: Eisenstein, p: int) -> LPolynomial:
    """L_p from the local data: c = zeta*pi-bar*p and p*b = c*a-bar."""
    if a.norm() > 9 * p:
        raise WeilBoundError(f"norm(a) = {a.norm()} exceeds 9p at p={p}")
    c = zeta * pi.conj() * p
    b = zeta * pi.conj() * a.conj()
    if c.norm() != p**3:
        raise WeilBoundError(f"norm(c) = {c.norm()} != p^3 at p={p}")
    return conjugate_product(a, b, c, p)


@dataclass(frozen=True)
class SplitLift:
    """A split-ordinary lift with all intermediate local data kept around."""

    lpoly: LPolynomial
    data: cm.SplitCMData
    a: Eisenstein
    b: Eisenstein
    c: Eisenstein
    zeta: Eisenstein
    pi: Eisenstein


def lift_split(
    curve: PicardCurve,
    p: int,
    z: int | None = None,
    data: cm.SplitCMData | None = None,
    backend=None,
) -> SplitLift:
    """Full split-ordinary pipeline at p >= 53 (raises if p is not ordinary)."""
    if z is None:
        z = find_cube_root_of_unity(p)
    if data is None:
        data = cm.split_matrices(curve, p, z, backend=backend)
    elif data.z != z or data.p != p:
        raise ValueError("precomputed matrix data does not match (p, z)")
    if not cm.is_ordinary(data):
        raise ValueError(f"p={p} is not ordinary; the lift does not apply")
    a = lift_a(data.trace(), data.a1, z, p)
    pi = ei.split_prime(p, z)
    zeta = determine_zeta(data.det(), data.a1, pi, z, p)
    lp = assemble_split(a, zeta, pi, p)
    return SplitLift(
        lpoly=lp,
        data=data,
        a=a,
        b=zeta * pi.conj() * a.conj(),
        c=zeta * pi.conj() * p,
        zeta=zeta,
        pi=pi,
    )


# ---------------------------------------------------------------------------
# inert primes


def inert_t_mod_2(curve: PicardCurve, p: int) -> int:
    """0 when psi_f mod p has a rational root, else 1.

    Expanding (1+pT^2)(1-tT^2+p^2T^4) over F_2 gives T^6+T^4+T^2+1 exactly
    for even t, which is the rational-root case of the degree-9 test.
    """
    return 0 if has_rational_root(PolyFp(curve.psi, p)) else 1


def inert_t_mod_3(curve: PicardCurve, p: int) -> int:
    """1 when f̃ is irreducible over F_p, else 2."""
    pattern = factor_degree_pattern(PolyFp(curve.f_coeffs(), p))
    return 1 if pattern == (4,) else 2


def crt_lift_t(t_mod_p: int, t_mod_2: int, t_mod_3: int, p: int) -> int:
    """The unique t in [-2p, 2p] matching all three residues (p > 3)."""
    r6 = next(v for v in range(6) if v % 2 == t_mod_2 and v % 3 == t_mod_3)
    k = (r6 - t_mod_p) * pow(p, -1, 6) % 6
    t = t_mod_p % p + p * k
    if t <= 2 * p:
        return t
    if t >= 4 * p:
        return t - 6 * p
    raise CrtRangeError(f"no representative of t in [-2p, 2p] at p={p}")


def assemble_inert(t: int, p: int) -> LPolynomial:
    """(1 + pT^2)(1 - tT^2 + p^2 T^4) as an LPolynomial; needs |t| <= 2p."""
    if abs(t) > 2 * p:
        raise ValueError("|t| must be at most 2p")
    return LPolynomial.from_low_coeffs(p, 0, p - t, 0)


@dataclass(frozen=True)
class InertLift:
    lpoly: LPolynomial
    data: cm.InertCMData
    t: int


def lift_inert(curve: PicardCurve, p: int, backend=None) -> InertLift:
    """Full inert pipeline: mod p from A_p, mod 2 from psi_f, mod 3 from f̃."""
    data = cm.inert_data(curve, p, backend=backend)
    t = crt_lift_t(data.t_mod_p(), inert_t_mod_2(curve, p), inert_t_mod_3(curve, p), p)
    return InertLift(lpoly=assemble_inert(t, p), data=data, t=t)


# ---------------------------------------------------------------------------
# mod-3 cross-check


def lpoly_mod3(curve: PicardCurve, p: int) -> tuple[int, ...]:
    """L_p mod 3 from the factor degrees {d_i} of f̃ alone.

    Split p: (1-T)^(-2) * prod (1-T^(d_i))^2; inert p: (1-T^2)^(-1) *
    prod (1-T^(d_i)) (1-(2T)^(d_i)); both divisions must be exact.
    """
    if p == 3 or curve.disc % p == 0:
        raise ValueError("p must be a good prime away from 3")
    pattern = factor_degree_pattern(PolyFp(curve.f_coeffs(), p))
    one = PolyFp((1,), 3)
    num = one
    for d in pattern:
        if p % 3 == 1:
            factor = PolyFp([1] + [0] * (d - 1) + [-1], 3)
            num = num * factor * factor
        else:
            num = num * PolyFp([1] + [0] * (d - 1) + [-1], 3)
            num = num * PolyFp([1] + [0] * (d - 1) + [-pow(2, d, 3)], 3)
    denom = PolyFp((1, -2, 1), 3) if p % 3 == 1 else PolyFp((1, 0, -1), 3)
    quo, rem = divmod(num, denom)
    if not rem.is_zero():
        raise PolyDivisionError("mod-3 product is not divisible by its prefactor")
    out = list(quo.coeffs) + [0] * (7 - len(quo.coeffs))
    return tuple(out)
