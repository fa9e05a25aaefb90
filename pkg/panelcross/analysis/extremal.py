"""
Extremal crossing numbers and the instances that attain them.

General instances: balance the subjects over the categories and reverse the
category order at every test. Consistent instances (no subject ever moves
down) can only reverse small bundles of k' categories, one bundle per
interval, climbing through the category range.
"""
import logging
import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..core.model import CategorySet, OpdInstance, SigmaOrdering
from ..errors import ValidationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExtremalParams:
    """n = x*k + y for the general bound, n = x'*k' + y' for the consistent one."""
    n: int
    k: int
    m: int

    def __post_init__(self):
        if self.n < 1 or self.k < 1 or self.m < 1:
            raise ValidationError(f"n, k, m must be positive, got ({self.n}, {self.k}, {self.m})")

    @property
    def x(self) -> int:
        return self.n // self.k

    @property
    def y(self) -> int:
        return self.n % self.k

    @property
    def consistent_k(self) -> int:
        return max(-(-self.k // (self.m + 1)), 2)

    @property
    def consistent_x(self) -> int:
        return self.n // self.consistent_k

    @property
    def consistent_y(self) -> int:
        return self.n % self.consistent_k

    @property
    def effective_intervals(self) -> int:
        """Bundle reversals that fit inside k categories."""
        kp = self.consistent_k
        return min(self.m, max(self.k - kp, 0) // (kp - 1))


def balanced_partition(n: int, k: int) -> Tuple[int, ...]:
    """Sizes by sigma rank: the first n mod k categories get one extra subject."""
    x, y = divmod(n, k)
    return tuple(x + 1 if r < y else x for r in range(k))


def ecr_two_tests(partition: Sequence[int]) -> int:
    """Largest pcr of two tests whose first test has the given category sizes."""
    if any(not isinstance(a, int) or a < 0 for a in partition):
        raise ValidationError(f"partition sizes must be nonnegative integers: {tuple(partition)}")
    n = sum(partition)
    twice = sum(a * (n - a) for a in partition)
    assert twice % 2 == 0
    return twice // 2


def ecr_general(n: int, k: int, m: int) -> int:
    p = ExtremalParams(n, k, m)
    numerator = m * (k * p.x * (n - p.x) + p.y * (n - 2 * p.x - 1))
    assert numerator % 2 == 0
    value = numerator // 2
    assert value == m * ecr_two_tests(balanced_partition(n, k))
    return value


def _labels(prefix: str, count: int) -> Tuple[str, ...]:
    return tuple(f"{prefix}{i + 1}" for i in range(count))


def _balanced_row(n: int, k: int) -> List[int]:
    row: List[int] = []
    for category, size in enumerate(balanced_partition(n, k)):
        row.extend([category] * size)
    return row


def extremal_instance_general(n: int, k: int, m: int) -> OpdInstance:
    """Balanced first test, then every test reverses the category order."""
    ExtremalParams(n, k, m)
    rows = [_balanced_row(n, k)]
    for _ in range(m):
        rows.append([k - 1 - c for c in rows[-1]])
    return OpdInstance(_labels('s', n), CategorySet(_labels('C', k)),
                       tuple(tuple(r) for r in rows), SigmaOrdering.identity(k))


def consistent_bounds(n: int, k: int, m: int) -> Tuple[int, int]:
    """(lower, upper) for the largest pcr of a consistent instance."""
    if k < 2:
        raise ValidationError(f"consistent bounds need k >= 2, got {k}")
    p = ExtremalParams(n, k, m)
    pairs = math.comb(n, 2)
    upper = min(k - 2, m) * pairs

    kp, x, y = p.consistent_k, p.consistent_x, p.consistent_y
    intervals = p.effective_intervals
    lower = intervals * ecr_two_tests(balanced_partition(n, kp))
    assert 2 * lower == intervals * (y * (n - x * x + x * (n - 2) - 1) + (kp - y) * x * (n - x))
    if k >= 3:
        assert 2 * lower >= upper
    logger.debug(f"consistent bounds n={n} k={k} m={m}: k'={kp} intervals={intervals} "
                 f"-> ({lower}, {upper})")
    return lower, upper


def consistent_extremal_instance(n: int, k: int, m: int) -> OpdInstance:
    """Consistent instance reversing one bundle of k' categories per interval.

    Bundle l covers categories l(k'-1) .. l(k'-1)+k'-1 (0-based), so
    consecutive bundles share one category. Intervals beyond the last bundle
    that fits repeat the previous test.
    """
    if k < 2:
        raise ValidationError(f"consistent instances need k >= 2, got {k}")
    p = ExtremalParams(n, k, m)
    kp = p.consistent_k
    rows = [_balanced_row(n, kp)]
    for interval in range(1, m + 1):
        if interval <= p.effective_intervals:
            top = (interval - 1) * (kp - 1) + kp - 1
            rows.append([2 * top - c for c in rows[-1]])
        else:
            rows.append(list(rows[-1]))
    return OpdInstance(_labels('s', n), CategorySet(_labels('C', k)),
                       tuple(tuple(r) for r in rows), SigmaOrdering.identity(k))


def is_consistent(inst: OpdInstance) -> bool:
    """No subject ever drops to a lower-ranked category."""
    ranks = inst.rank_rows()
    return all(a <= b for prev, nxt in zip(ranks, ranks[1:]) for a, b in zip(prev, nxt))
