"""
Brute-force panel crossing number.

Enumerates every category-consistent permutation at every timestamp and
keeps, per timestamp, the cheapest way to reach each permutation
(a shortest path through the layered layout space). This visits every
valid combinatorial layout implicitly, so the result is the exact minimum.
"""
import itertools
import logging
import math
from typing import Dict, List, Optional, Tuple

from ..config import get_setting
from ..core.model import OpdInstance
from ..core.permutations import subjects_in_category
from ..errors import BudgetExceededError
from .crossings import interval_crossings

logger = logging.getLogger(__name__)


def layout_count(inst: OpdInstance) -> int:
    """Number of valid combinatorial layouts of the instance."""
    total = 1
    for i in range(inst.m + 1):
        for c in range(inst.k):
            total *= math.factorial(len(subjects_in_category(inst, i, c)))
    return total


def valid_permutations(inst: OpdInstance, i: int) -> List[Tuple[int, ...]]:
    """All category-consistent orders of the subjects at timestamp i."""
    blocks = [
        list(itertools.permutations(subjects_in_category(inst, i, c)))
        for c in inst.require_sigma().order
    ]
    return [tuple(itertools.chain.from_iterable(choice))
            for choice in itertools.product(*blocks)]


def brute_force_pcr(inst: OpdInstance, budget: Optional[int] = None) -> int:
    if budget is None:
        budget = get_setting('oracle', 'max_layouts')
    required = layout_count(inst)
    if required > budget:
        raise BudgetExceededError(
            f"instance too large for oracle: {required} layouts > budget {budget}",
            required=required, budget=budget,
        )
    logger.debug(f"oracle enumerating {required} layouts")

    best: Dict[Tuple[int, ...], int] = {pi: 0 for pi in valid_permutations(inst, 0)}
    for i in range(1, inst.m + 1):
        nxt: Dict[Tuple[int, ...], int] = {}
        for pi_next in valid_permutations(inst, i):
            nxt[pi_next] = min(cost + interval_crossings(pi, pi_next)
                               for pi, cost in best.items())
        best = nxt
    return min(best.values())
