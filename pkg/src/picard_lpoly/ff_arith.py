"""Arithmetic modulo a prime and on small polynomials over F_p.

Field elements are plain integers in [0, p) carried alongside their modulus;
`PolyFp` wraps an ascending coefficient tuple in canonical (trimmed) form.
The one genuinely hot operation, extracting a prefix of the coefficients of
f(x)^n, has two routes: `poly_pow_coeffs` (binary exponentiation with
Kronecker-substitution multiplication, works for anything) and
`power_prefix`, which dispatches to the O(prefix) recurrence kernels when
their preconditions hold and falls back to powering otherwise.  The two
routes are equality-tested against each other exhaustively in the test
suite for all p <= 1000.
"""

from __future__ import annotations

import math

from . import kernels
from .errors import CapacityError, SquarefreeError

try:
    from gmpy2 import mpz as _big
except ImportError:  # pragma: no cover - gmpy2 is an optional accelerator
    _big = int

_SIEVE_SPAN_LIMIT = 1 << 33
_PACK_BUFFER_LIMIT = 1 << 31


def sieve_primes(n_min: int, n_max: int) -> list[int]:
    """All primes in [n_min, n_max], ascending."""
    if not 2 <= n_min <= n_max < 1 << 40:
        raise ValueError("need 2 <= n_min <= n_max < 2^40")
    if n_max - n_min > _SIEVE_SPAN_LIMIT:
        raise CapacityError("prime range too wide to materialize")
    root = math.isqrt(n_max)
    base = bytearray([1]) * (root + 1)
    base[0:2] = b"\x00\x00"
    for q in range(2, math.isqrt(root) + 1):
        if base[q]:
            base[q * q :: q] = bytes(len(base[q * q :: q]))
    base_primes = [q for q in range(2, root + 1) if base[q]]

    out = []
    seg = 1 << 22
    lo = n_min
    while lo <= n_max:
        hi = min(lo + seg - 1, n_max)
        flags = bytearray([1]) * (hi - lo + 1)
        for q in base_primes:
            start = max(q * q, (lo + q - 1) // q * q)
            if start > hi:
                continue
            flags[start - lo :: q] = bytes((hi - start) // q + 1)
        for i, ok in enumerate(flags):
            if ok:
                out.append(lo + i)
        lo = hi + 1
    return out


def mod_pow(base: int, exp: int, p: int) -> int:
    """base^exp mod p by square-and-multiply (exp >= 0)."""
    if exp < 0:
        raise ValueError("exponent must be nonnegative")
    return pow(base % p, exp, p)


def find_cube_root_of_unity(p: int) -> int:
    """The deterministic primitive cube root of unity mod p (p = 1 mod 3).

    Scans g = 2, 3, ... and returns the first g^((p-1)/3) != 1, which makes
    the whole pipeline reproducible run to run.
    """
    if p % 3 != 1:
        raise ValueError("p must be 1 mod 3")
    e = (p - 1) // 3
    g = 2
    while True:
        z = pow(g, e, p)
        if z != 1:
            return z
        g += 1


# ---------------------------------------------------------------------------
# coefficient extraction from f^n


def _pack(coeffs, width: int) -> int:
    buf = bytearray(len(coeffs) * width)
    for i, c in enumerate(coeffs):
        buf[i * width : (i + 1) * width] = c.to_bytes(width, "little")
    return int.from_bytes(buf, "little")


def _unpack_mod(value: int, count: int, width: int, p: int) -> list[int]:
    buf = int(value).to_bytes(count * width, "little")
    return [
        int.from_bytes(buf[i * width : (i + 1) * width], "little") % p
        for i in range(count)
    ]


def poly_pow_coeffs(coeffs, n: int, max_index: int, p: int) -> list[int]:
    """Exact coefficients of x^0..x^max_index of f^n over F_p.

    Binary exponentiation in F_p[x]/(x^(max_index+1)); each multiplication is
    one big-integer product via Kronecker substitution, so the cost is
    subquadratic in the prefix length.
    """
    if max_index < 0:
        raise ValueError("max_index must be nonnegative")
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    size = max_index + 1
    f = [c % p for c in coeffs[:size]]
    while f and f[-1] == 0:
        f.pop()
    if not f:
        return [1 if n == 0 else 0] + [0] * max_index

    width = (2 * (p - 1).bit_length() + size.bit_length() + 7) // 8
    if size * width > _PACK_BUFFER_LIMIT:
        raise CapacityError("coefficient buffer exceeds the packing limit")
    mask = (1 << (8 * width * size)) - 1

    def mul(a: list[int], b: list[int]) -> list[int]:
        prod = (_big(_pack(a, width)) * _big(_pack(b, width))) & mask
        count = min(len(a) + len(b) - 1, size)
        return _unpack_mod(prod, count, width, p)

    result = [1]
    for bit in bin(n)[2:]:
        result = mul(result, result)
        if bit == "1":
            result = mul(result, f)
    result += [0] * (size - len(result))
    return result


def power_prefix(coeffs, n: int, m: int, p: int, inv=None, backend=None):
    """Coefficients of x^0..x^m of f^n over F_p, by the fastest valid route.

    Factors out any power of x first (so the recurrence kernels only ever see
    a unit constant term), then uses the kernel when m stays below p and the
    degree is small, falling back to `poly_pow_coeffs` otherwise.  Returns an
    indexable sequence of ints.
    """
    f = [c % p for c in coeffs]
    while f and f[-1] == 0:
        f.pop()
    if not f:
        return [1 if n == 0 else 0] + [0] * m
    v = 0
    while f[v] == 0:
        v += 1
    shift = v * n
    if shift > m:
        return [0] * (m + 1)
    g = f[v:]
    mm = m - shift
    if mm < p and len(g) - 1 <= 8:
        body = kernels.pow_series_prefix(g, n, mm, p, inv=inv, backend=backend)
    else:
        body = poly_pow_coeffs(g, n, mm, p)
    if shift == 0:
        return body
    return [0] * shift + list(body)


def power_prefix_multi(specs, p: int, inv=None, backend=None):
    """`power_prefix` for several (coeffs, n, m) at once.

    Runs that survive preprocessing (nonzero, no overlong x-shift) are handed
    to the fused kernel in one call, which interleaves their recurrences on
    the compiled backend; results match per-run `power_prefix` exactly.
    """
    kernel_runs = []
    slots = []
    results: list = [None] * len(specs)
    for idx, (coeffs, n, m) in enumerate(specs):
        f = [c % p for c in coeffs]
        while f and f[-1] == 0:
            f.pop()
        if not f:
            results[idx] = [1 if n == 0 else 0] + [0] * m
            continue
        v = 0
        while f[v] == 0:
            v += 1
        shift = v * n
        if shift > m:
            results[idx] = [0] * (m + 1)
            continue
        g = f[v:]
        mm = m - shift
        if mm >= p or len(g) - 1 > 8:
            body = poly_pow_coeffs(g, n, mm, p)
            results[idx] = [0] * shift + list(body) if shift else body
            continue
        kernel_runs.append((g, n, mm))
        slots.append((idx, shift))
    if kernel_runs:
        bodies = kernels.pow_series_prefix_multi(kernel_runs, p, inv=inv, backend=backend)
        for (idx, shift), body in zip(slots, bodies):
            results[idx] = [0] * shift + list(body) if shift else body
    return results


# ---------------------------------------------------------------------------
# small polynomials over F_p


class PolyFp:
    """A polynomial over F_p in canonical form (no trailing zeros)."""

    __slots__ = ("p", "coeffs")

    def __init__(self, coeffs, p: int):
        self.p = p
        c = [x % p for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def x(cls, p: int) -> "PolyFp":
        return cls((0, 1), p)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PolyFp)
            and self.p == other.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __repr__(self):
        return f"PolyFp({list(self.coeffs)}, p={self.p})"

    def __add__(self, other: "PolyFp") -> "PolyFp":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % self.p
        return PolyFp(out, self.p)

    def __sub__(self, other: "PolyFp") -> "PolyFp":
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] = (out[i] - c) % self.p
        return PolyFp(out, self.p)

    def __mul__(self, other: "PolyFp") -> "PolyFp":
        if self.is_zero() or other.is_zero():
            return PolyFp((), self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return PolyFp(out, self.p)

    def scale(self, c: int) -> "PolyFp":
        return PolyFp([c * a for a in self.coeffs], self.p)

    def __divmod__(self, other: "PolyFp"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        rem = list(self.coeffs)
        dv = other.coeffs
        dd = other.degree
        lead_inv = pow(dv[-1], p - 2, p)
        quo = [0] * max(0, len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i] % p
            if c:
                q = c * lead_inv % p
                quo[i - dd] = q
                for j, b in enumerate(dv):
                    rem[i - dd + j] -= q * b
        return PolyFp(quo, p), PolyFp(rem[:dd], p)

    def __mod__(self, other: "PolyFp") -> "PolyFp":
        return divmod(self, other)[1]

    def monic(self) -> "PolyFp":
        if self.is_zero() or self.coeffs[-1] == 1:
            return self
        return self.scale(pow(self.coeffs[-1], self.p - 2, self.p))

    def gcd(self, other: "PolyFp") -> "PolyFp":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def deriv(self) -> "PolyFp":
        return PolyFp([i * c for i, c in enumerate(self.coeffs)][1:], self.p)

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc


def _poly_modexp(base: PolyFp, e: int, modulus: PolyFp) -> PolyFp:
    result = PolyFp((1,), modulus.p)
    base = base % modulus
    while e:
        if e & 1:
            result = (result * base) % modulus
        base = (base * base) % modulus
        e >>= 1
    return result


def frobenius_power(g: PolyFp, k: int) -> PolyFp:
    """x^(p^k) mod g by binary exponentiation in F_p[x]/(g); g monic."""
    if g.degree < 1:
        raise ValueError("modulus must have degree >= 1")
    if g.coeffs[-1] != 1:
        raise ValueError("modulus must be monic")
    if k not in (1, 2):
        raise ValueError("k must be 1 or 2")
    return _poly_modexp(PolyFp.x(g.p), g.p**k, g)


def has_rational_root(g: PolyFp) -> bool:
    """Whether g has a root in F_p, via deg gcd(x^p - x, g) > 0."""
    if g.degree < 1:
        raise ValueError("need degree >= 1")
    xp = _poly_modexp(PolyFp.x(g.p), g.p, g.monic())
    return g.gcd(xp - PolyFp.x(g.p)).degree > 0


def factor_degree_pattern(f: PolyFp) -> tuple[int, ...]:
    """Degrees of the irreducible factors of a squarefree quartic over F_p.

    Only deg gcd(x^p - x, f) and deg gcd(x^(p^2) - x, f) are computed; for a
    squarefree quartic those two numbers pin the pattern down.
    """
    if f.degree != 4:
        raise ValueError("need a quartic")
    if f.gcd(f.deriv()).degree != 0:
        raise SquarefreeError("polynomial has a repeated factor")
    fm = f.monic()
    x = PolyFp.x(f.p)
    g1 = fm.gcd(_poly_modexp(x, f.p, fm) - x).degree
    g2 = fm.gcd(_poly_modexp(x, f.p**2, fm) - x).degree
    linears = g1
    quadratics = (g2 - g1) // 2
    rest = 4 - linears - 2 * quadratics
    if (g2 - g1) % 2 or rest not in (0, 3, 4):
        raise SquarefreeError("inconsistent gcd degrees for a squarefree quartic")
    pattern = [1] * linears + [2] * quadratics
    if rest:
        pattern.append(rest)
    return tuple(sorted(pattern))
