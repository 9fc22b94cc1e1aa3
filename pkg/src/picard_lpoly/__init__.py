"""Exact L-polynomials of Picard curves y^3 = f(x) at good primes.

Split ordinary primes are lifted from their Cartier-Manin matrices through
Z[w]-arithmetic under the Weil bounds; inert primes through a CRT of the
matrix data with root/irreducibility tests; small and suspect primes fall
back to a brute-force point-counting oracle.
"""

from .curve import PicardCurve, PrimeClass, classify_prime, compute_psi, discriminant, normalize
from .lpoly import LPolynomial
from .pipeline import compute_record, iter_records
from .records import PrimeRecord, RunConfig

__version__ = "0.1.0"

__all__ = [
    "PicardCurve",
    "PrimeClass",
    "LPolynomial",
    "PrimeRecord",
    "RunConfig",
    "classify_prime",
    "compute_psi",
    "compute_record",
    "discriminant",
    "iter_records",
    "normalize",
    "__version__",
]
