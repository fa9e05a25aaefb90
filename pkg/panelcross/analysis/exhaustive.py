"""
Brute-force extremal crossing numbers for small parameters.

Permuting subjects does not change pcr, so the first test is enumerated
as a nondecreasing row only.
"""
import itertools
import logging
from typing import Iterator, Optional, Sequence, Tuple

from ..config import get_setting
from ..core.model import CategorySet, OpdInstance, SigmaOrdering
from ..errors import BudgetExceededError
from ..layout.engine import pcr

logger = logging.getLogger(__name__)


def _rows_from(prev: Sequence[int], k: int, consistent: bool) -> Iterator[Tuple[int, ...]]:
    if consistent:
        return itertools.product(*(range(c, k) for c in prev))
    return itertools.product(range(k), repeat=len(prev))


def _max_pcr(first_rows, n: int, k: int, m: int, consistent: bool) -> int:
    subjects = tuple(f"s{j + 1}" for j in range(n))
    categories = CategorySet(tuple(f"C{c + 1}" for c in range(k)))
    sigma = SigmaOrdering.identity(k)
    best = 0

    def extend(rows):
        nonlocal best
        if len(rows) == m + 1:
            best = max(best, pcr(OpdInstance(subjects, categories, tuple(rows), sigma)))
            return
        for row in _rows_from(rows[-1], k, consistent):
            extend(rows + [row])

    for first in first_rows:
        extend([tuple(first)])
    return best


def exhaustive_ecr(n: int, k: int, m: int, consistent: bool = False,
                   budget: Optional[int] = None) -> int:
    """Largest pcr over every test matrix (or every consistent one)."""
    if budget is None:
        budget = get_setting('oracle', 'max_layouts')
    required = k ** (n * m)
    if required > budget:
        raise BudgetExceededError(
            f"{required} test continuations per first row exceed budget {budget}",
            required=required, budget=budget)
    first_rows = itertools.combinations_with_replacement(range(k), n)
    value = _max_pcr(first_rows, n, k, m, consistent)
    logger.debug(f"exhaustive ecr n={n} k={k} m={m} consistent={consistent}: {value}")
    return value


def exhaustive_ecr_two_tests(partition: Sequence[int]) -> int:
    """Largest pcr of two tests when the first test has the given category sizes.

    Subjects sharing a first-test category are interchangeable, so the second
    test is enumerated as one multiset of categories per group.
    """
    k = len(partition)
    n = sum(partition)
    first = tuple(c for c, size in enumerate(partition) for _ in range(size))
    subjects = tuple(f"s{j + 1}" for j in range(n))
    categories = CategorySet(tuple(f"C{c + 1}" for c in range(k)))
    sigma = SigmaOrdering.identity(k)

    per_group = [list(itertools.combinations_with_replacement(range(k), size)) for size in partition]
    best = 0
    for choice in itertools.product(*per_group):
        second = tuple(itertools.chain.from_iterable(choice))
        best = max(best, pcr(OpdInstance(subjects, categories, (first, second), sigma)))
    return best
