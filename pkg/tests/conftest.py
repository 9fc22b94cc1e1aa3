import pytest

from picard_lpoly.curve import PicardCurve
from picard_lpoly import oracle


@pytest.fixture(scope="session")
def c1():
    return PicardCurve(f2=0, f1=1, f0=1)  # y^3 = x^4 + x + 1, disc 229


@pytest.fixture(scope="session")
def c2():
    return PicardCurve(f2=3, f1=2, f0=1)  # y^3 = x^4 + 3x^2 + 2x + 1, disc 1264


@pytest.fixture(scope="session")
def curve_x4_plus_1():
    return PicardCurve(f2=0, f1=0, f0=1)  # y^3 = x^4 + 1, disc 256


_ORACLE_CACHE: dict = {}


@pytest.fixture(scope="session")
def cached_oracle():
    """Memoized oracle L-polynomials, shared across the whole session."""

    def get(curve, p):
        key = (curve.f2, curve.f1, curve.f0, p)
        if key not in _ORACLE_CACHE:
            _ORACLE_CACHE[key] = oracle.oracle_lpoly(curve, p)
        return _ORACLE_CACHE[key]

    return get


def naive_poly_mul(a, b, p):
    """Schoolbook product of ascending coefficient lists over F_p."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return out


def naive_poly_pow(f, n, p):
    """Repeated-multiplication f^n over F_p (independent of the kernels)."""
    out = [1]
    for _ in range(n):
        out = naive_poly_mul(out, f, p)
    return [c % p for c in out]
