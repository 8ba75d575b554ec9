"""
Experiments over whole curves: correlation between orderings, distinct S-box counts and the
generation benchmark.
"""
import logging
import time
from dataclasses import dataclass
from typing import List, Sequence, Set, Tuple, Union

import numpy as np
from pydantic import BaseModel

from mecsbox.curve import CurveParams, enumerate_points
from mecsbox.exceptions import ParameterOutOfRange, PrimeTooSmall
from mecsbox.modmath import FieldPrime, validate_prime
from mecsbox.ordering import OrderingKind, sort_points
from mecsbox.runner import run_jobs
from mecsbox.sboxgen import MIN_GENERATION_PRIME, GenerationTrace, generate, generate_via_loop

logger = logging.getLogger(__name__)

_JOB_CHUNK = 128


@dataclass(frozen=True)
class OrderedYSequence:
    params: CurveParams
    kind: OrderingKind
    values: Tuple[int, ...]


class CorrelationRecord(BaseModel):
    p: int
    b: int
    rho_nd: float
    rho_nm: float
    rho_dm: float
    rho_self: float = 1.0


class BenchmarkRow(BaseModel):
    p: int
    loop_seconds: float
    fast_seconds: float
    peak_points: int


def ordered_y_sequence(params: CurveParams, kind: OrderingKind) -> OrderedYSequence:
    kind = OrderingKind.parse(kind)
    points = sort_points(kind, enumerate_points(params))
    return OrderedYSequence(params, kind, tuple(point.y for point in points))


def pearson(a: Sequence[int], b: Sequence[int]) -> float:
    """
    Pearson correlation with population normalization.
    """
    x = np.asarray(a, dtype=np.float64)
    y = np.asarray(b, dtype=np.float64)
    if np.array_equal(x, y):
        return 1.0
    dx, dy = x - x.mean(), y - y.mean()
    rho = (dx * dy).mean() / np.sqrt((dx * dx).mean() * (dy * dy).mean())
    return float(np.clip(rho, -1.0, 1.0))


def correlation(params: CurveParams, h: OrderingKind, k: OrderingKind) -> float:
    return pearson(ordered_y_sequence(params, h).values, ordered_y_sequence(params, k).values)


def all_correlations(params: CurveParams) -> CorrelationRecord:
    n, d, m = (ordered_y_sequence(params, kind).values for kind in OrderingKind)
    return CorrelationRecord(
        p=params.p,
        b=params.b,
        rho_nd=pearson(n, d),
        rho_nm=pearson(n, m),
        rho_dm=pearson(d, m),
        rho_self=pearson(n, n),
    )


def _tables_for_range(p: int, b_lo: int, b_hi: int, kind: OrderingKind) -> List[Tuple[int, ...]]:
    prime = FieldPrime(p)
    return [generate(CurveParams(prime, b), kind).table for b in range(b_lo, b_hi)]


def count_distinct_sboxes(prime: Union[FieldPrime, int], kind: OrderingKind, workers: int = 1) -> int:
    """
    Number of distinct S-boxes over b in [1, p - 1] for one ordering.
    """
    prime = prime if isinstance(prime, FieldPrime) else validate_prime(prime)
    if prime.p < MIN_GENERATION_PRIME:
        raise PrimeTooSmall(f"p={prime.p} is below {MIN_GENERATION_PRIME}.")
    kind = OrderingKind.parse(kind)

    jobs = [(prime.p, lo, min(lo + _JOB_CHUNK, prime.p), kind) for lo in range(1, prime.p, _JOB_CHUNK)]
    distinct: Set[Tuple[int, ...]] = set()
    for tables in run_jobs(_tables_for_range, jobs, workers):
        distinct.update(tables)

    logger.info("p=%d ordering=%s: %d distinct S-boxes over %d curves", prime.p, kind.value, len(distinct), prime.p - 1)
    return len(distinct)


def _best_time(func, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        func()
        best = min(best, time.perf_counter() - start)
    return best


def benchmark_generation(
    primes: Sequence[Union[FieldPrime, int]], kind: OrderingKind, repeats: int = 3, b: int = 1
) -> List[BenchmarkRow]:
    """
    Times the scanning and the cube-root generators on E(p, b) for each prime, single-threaded.
    """
    kind = OrderingKind.parse(kind)
    rows = []
    for prime in primes:
        prime = prime if isinstance(prime, FieldPrime) else validate_prime(prime)
        if prime.p < MIN_GENERATION_PRIME:
            raise PrimeTooSmall(f"p={prime.p} is below {MIN_GENERATION_PRIME}.")
        params = CurveParams(prime, b % prime.p)

        trace = GenerationTrace()
        loop_seconds = _best_time(lambda: generate_via_loop(params, kind, trace), repeats)
        fast_seconds = _best_time(lambda: generate(params, kind, trace), repeats)

        logger.info("p=%d loop=%.4fs fast=%.4fs peak=%d", prime.p, loop_seconds, fast_seconds, trace.peak)
        rows.append(
            BenchmarkRow(p=prime.p, loop_seconds=loop_seconds, fast_seconds=fast_seconds, peak_points=trace.peak)
        )
    return rows


def fit_growth_exponent(rows: Sequence[BenchmarkRow]) -> float:
    """
    Least-squares slope of log(loop time) against log(p).
    """
    if len(rows) < 2:
        raise ParameterOutOfRange("Need at least two benchmark rows to fit a growth exponent.")
    log_p = np.log([row.p for row in rows])
    log_t = np.log([row.loop_seconds for row in rows])
    slope, _ = np.polyfit(log_p, log_t, 1)
    return float(slope)
