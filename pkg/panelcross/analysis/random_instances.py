"""
Uniform random panels and their expected panel crossing number.

Each matrix entry is drawn independently and uniformly over the k categories.
The expected pcr is exact (Fraction); the Monte Carlo estimator draws sample
i from substream (seed, i), so results do not depend on how samples are
split across workers.
"""
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import List, NamedTuple, Optional, Tuple

from ..config import get_setting
from ..core.model import CategorySet, OpdInstance, SigmaOrdering
from ..errors import ValidationError
from ..layout.engine import pcr
from ..seeding import Seed, make_generator

logger = logging.getLogger(__name__)


def _check_params(n: int, k: int, m: int) -> None:
    if n < 0:
        raise ValidationError(f"n must be nonnegative, got {n}")
    if k < 2:
        raise ValidationError(f"expected pcr needs k >= 2, got {k}")
    if m < 1:
        raise ValidationError(f"expected pcr needs m >= 1 intervals, got {m}")


def expected_pcr(n: int, k: int, m: int) -> Fraction:
    _check_params(n, k, m)
    return math.comb(n, 2) * (Fraction(1, k) ** m + m * (k - 1) - 1) / (2 * k)


def expected_pcr_series(n: int, k: int, m: int) -> Fraction:
    """Same value, summed per pair over the length of the last level run."""
    _check_params(n, k, m)
    r = Fraction(1, k)
    term = (1 - r) ** 2 / 2
    return math.comb(n, 2) * sum(term * r ** i * (m - i) for i in range(m))


def random_instance(n: int, k: int, m: int, seed: Seed,
                    sigma: Optional[SigmaOrdering] = None) -> OpdInstance:
    if k < 1 or m < 1 or n < 0:
        raise ValidationError(f"invalid random instance parameters n={n} k={k} m={m}")
    matrix = make_generator(seed).integers(0, k, size=(m + 1, n))
    return OpdInstance(
        tuple(f"s{j + 1}" for j in range(n)),
        CategorySet(tuple(f"C{c + 1}" for c in range(k))),
        tuple(tuple(row) for row in matrix.tolist()),
        sigma or SigmaOrdering.identity(k),
    )


class Estimate(NamedTuple):
    mean: float
    stderr: float
    samples: int


def _sample_range(n: int, k: int, m: int, seed: int, start: int, stop: int) -> Tuple[int, int]:
    total = squares = 0
    for index in range(start, stop):
        value = pcr(random_instance(n, k, m, (seed, index)))
        total += value
        squares += value * value
    return total, squares


def monte_carlo_expected_pcr(n: int, k: int, m: int, samples: int, seed: int,
                             workers: Optional[int] = None) -> Estimate:
    """Sample mean and standard error of pcr over random instances.

    The standard error is infinite for a single sample.
    """
    if samples < 1:
        raise ValidationError(f"samples must be >= 1, got {samples}")
    if workers is None:
        workers = get_setting('monte_carlo', 'workers')
    chunk = get_setting('monte_carlo', 'chunk_size')
    bounds: List[Tuple[int, int]] = [(a, min(a + chunk, samples)) for a in range(0, samples, chunk)]

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            parts = list(executor.map(lambda b: _sample_range(n, k, m, seed, *b), bounds))
    else:
        parts = [_sample_range(n, k, m, seed, *b) for b in bounds]

    total = sum(p[0] for p in parts)
    squares = sum(p[1] for p in parts)
    mean = Fraction(total, samples)
    if samples == 1:
        stderr = math.inf
    else:
        variance = (squares - samples * mean * mean) / (samples - 1)
        stderr = math.sqrt(variance / samples)
    logger.info(f"monte carlo n={n} k={k} m={m}: {samples} samples, mean={float(mean):.6f}")
    return Estimate(float(mean), stderr, samples)
