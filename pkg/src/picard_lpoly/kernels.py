"""Backend selection for the hot kernels.

The compiled extension `_kernels_c` is preferred when it importable; the
interpreted `_kernels_py` twin is always present.  `PICARD_LPOLY_BACKEND=py`
(or `=c`) in the environment forces a choice, and every entry point also
accepts an explicit ``backend=`` argument so the benchmark can compare both.
"""

import os

from . import _kernels_py

try:
    from . import _kernels_c
except ImportError:  # pragma: no cover - depends on the build
    _kernels_c = None

_BACKENDS = {"py": _kernels_py}
if _kernels_c is not None:
    _BACKENDS["c"] = _kernels_c


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def default_backend() -> str:
    forced = os.environ.get("PICARD_LPOLY_BACKEND")
    if forced:
        if forced not in _BACKENDS:
            raise ValueError(f"backend {forced!r} is not available")
        return forced
    return "c" if "c" in _BACKENDS else "py"


def get(backend: str | None = None):
    """The kernel module for `backend` (default: compiled if built)."""
    name = backend if backend is not None else default_backend()
    try:
        return _BACKENDS[name]
    except KeyError:
        raise ValueError(f"backend {name!r} is not available") from None


def inverse_table(m, p, backend=None):
    return get(backend).inverse_table(m, p)


def pow_series_prefix(coeffs, n, m, p, inv=None, backend=None):
    return get(backend).pow_series_prefix(coeffs, n, m, p, inv)


def pow_series_prefix_multi(runs, p, inv=None, backend=None):
    return get(backend).pow_series_prefix_multi(runs, p, inv)
