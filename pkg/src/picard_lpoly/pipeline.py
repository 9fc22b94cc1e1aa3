"""Batch driver: per-prime dispatch, parallel scheduling, verification.

Workers are pure functions of (curve, p, options); the pool hands primes out
dynamically (chunksize 1, so late heavy primes cannot skew one worker) and
results are consumed in submission order, which keeps every output byte
independent of the worker count.
"""

from __future__ import annotations

import multiprocessing
from collections.abc import Iterator
from dataclasses import dataclass

from . import cartier_manin as cm
from . import lifting, oracle
from .curve import PicardCurve, PrimeClass, ReductionType, classify_prime
from .errors import PicardLpolyError
from .ff_arith import find_cube_root_of_unity, sieve_primes
from .lpoly import LPolynomial
from .records import PrimeRecord, RunConfig

NAIVE_SPLIT_BOUND = 53


def compute_record(
    curve: PicardCurve,
    p: int,
    naive_fallback: int = 0,
    oracle_bound: int = 1 << 32,
    backend: str | None = None,
) -> PrimeRecord:
    """The record for one prime, per the main algorithm's control flow."""
    kind = classify_prime(curve, p)
    if kind is ReductionType.BAD:
        return PrimeRecord(p, PrimeClass.BAD, "skipped_bad", None)
    if kind is ReductionType.INERT:
        lift = lifting.lift_inert(curve, p, backend=backend)
        return PrimeRecord(p, PrimeClass.INERT, "cm_lift_inert", lift.lpoly)
    z = find_cube_root_of_unity(p)
    data = cm.split_matrices(curve, p, z, backend=backend)
    if cm.is_ordinary(data):
        if p < NAIVE_SPLIT_BOUND:
            lp = oracle.oracle_lpoly(curve, p, enum_bound=oracle_bound, backend=backend)
            return PrimeRecord(p, PrimeClass.SPLIT_ORDINARY, "naive", lp)
        lift = lifting.lift_split(curve, p, z=z, data=data, backend=backend)
        return PrimeRecord(p, PrimeClass.SPLIT_ORDINARY, "cm_lift_split", lift.lpoly)
    if p <= naive_fallback:
        lp = oracle.oracle_lpoly(curve, p, enum_bound=oracle_bound, backend=backend)
        return PrimeRecord(p, PrimeClass.SPLIT_NON_ORDINARY, "naive", lp)
    return PrimeRecord(p, PrimeClass.SPLIT_NON_ORDINARY, "skipped_nonordinary", None)


_WORKER_CFG: RunConfig | None = None


def _worker_init(cfg: RunConfig):
    global _WORKER_CFG
    _WORKER_CFG = cfg


def _worker(p: int) -> PrimeRecord:
    cfg = _WORKER_CFG
    try:
        return compute_record(
            cfg.curve,
            p,
            naive_fallback=cfg.naive_fallback,
            oracle_bound=cfg.oracle_bound,
            backend=cfg.backend,
        )
    except PicardLpolyError as exc:
        raise RuntimeError(f"p={p}: {type(exc).__name__}: {exc}") from exc


def iter_records(cfg: RunConfig) -> Iterator[PrimeRecord]:
    """One record per prime in [min, max], in ascending order of p."""
    primes = sieve_primes(cfg.min_prime, cfg.max_prime)
    if cfg.jobs == 1:
        for p in primes:
            try:
                yield compute_record(
                    cfg.curve,
                    p,
                    naive_fallback=cfg.naive_fallback,
                    oracle_bound=cfg.oracle_bound,
                    backend=cfg.backend,
                )
            except PicardLpolyError as exc:
                raise RuntimeError(f"p={p}: {type(exc).__name__}: {exc}") from exc
        return
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(cfg.jobs, initializer=_worker_init, initargs=(cfg,)) as pool:
        yield from pool.imap(_worker, primes, chunksize=1)


@dataclass
class VerifyFailure(Exception):
    p: int
    stage: str
    detail: str

    def __str__(self):
        return f"p={self.p}: {self.stage}: {self.detail}"


def verify_record(
    curve: PicardCurve, rec: PrimeRecord, oracle_bound: int, backend: str | None = None
):
    """Check one computed record against the oracle and the invariants."""
    p, lp = rec.p, rec.lpoly
    if lp is None:
        return
    want = oracle.oracle_lpoly(curve, p, enum_bound=oracle_bound, backend=backend)
    if want.coeffs != lp.coeffs:
        raise VerifyFailure(p, "oracle", f"lift {lp.coeffs} != counts {want.coeffs}")
    # mod-p congruence with the reversed charpoly of A_p
    if p % 3 == 1:
        z = find_cube_root_of_unity(p)
        g = cm.reversed_charpoly_mod_p(cm.split_matrices(curve, p, z, backend=backend))
    else:
        g = cm.reversed_charpoly_mod_p(cm.inert_data(curve, p, backend=backend))
    got = lp.reduce_mod(p)
    want_mod = tuple(g.coeffs) + (0,) * (7 - len(g.coeffs))
    if got != want_mod:
        raise VerifyFailure(p, "mod-p congruence", f"{got} != {want_mod}")
    if p != 3:
        if lp.reduce_mod(3) != lifting.lpoly_mod3(curve, p):
            raise VerifyFailure(p, "mod-3 product formula", f"{lp.reduce_mod(3)}")
    if p % 3 == 2:
        t = p - lp.coeffs[2]
        if t % 2 != lifting.inert_t_mod_2(curve, p):
            raise VerifyFailure(p, "mod-2 psi test", f"t={t}")
    # the functional equation is enforced by the LPolynomial constructor


def verify_range(cfg: RunConfig) -> PrimeRecord | None:
    """First failing record, or None when everything checks out."""
    for rec in iter_records(cfg):
        verify_record(cfg.curve, rec, cfg.oracle_bound, backend=cfg.backend)
    return None


def stats(cfg: RunConfig) -> dict:
    """Classification counts and the non-ordinary split primes in range."""
    counts = {k.value: 0 for k in PrimeClass}
    nonordinary: list[int] = []
    for rec in iter_records(cfg):
        counts[rec.klass.value] += 1
        if rec.klass is PrimeClass.SPLIT_NON_ORDINARY:
            nonordinary.append(rec.p)
    split_total = counts["split_ordinary"] + counts["split_non_ordinary"]
    frac = f"{counts['split_ordinary']}/{split_total}" if split_total else "0/0"
    return {
        "curve": curve_coeff_list(cfg.curve),
        "range": [cfg.min_prime, cfg.max_prime],
        "counts": counts,
        "split_non_ordinary_primes": nonordinary,
        "ordinary_fraction": frac,
    }


def curve_coeff_list(curve: PicardCurve) -> list[int]:
    return [curve.f2, curve.f1, curve.f0]


def single_lpoly(
    curve: PicardCurve, p: int, naive_fallback: int = 0, backend: str | None = None
) -> PrimeRecord:
    return compute_record(curve, p, naive_fallback=naive_fallback, backend=backend)


def conjugation_swap_lpolys(
    curve: PicardCurve, p: int, backend: str | None = None
) -> tuple[LPolynomial, LPolynomial]:
    """The split lift run with z and with z^2; both must agree."""
    z = find_cube_root_of_unity(p)
    first = lifting.lift_split(curve, p, z=z, backend=backend).lpoly
    second = lifting.lift_split(curve, p, z=z * z % p, backend=backend).lpoly
    return first, second
