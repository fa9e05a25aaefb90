"""
Exact search for the category ordering with the fewest crossings.

Branch and bound fills sigma from the lowest rank upwards. Once each pair of
a key has at least one placed category, the key's order is fixed (placed
categories precede unplaced ones), so its weight is added to the partial
cost; undecided keys can only add more, which makes the partial cost a valid
lower bound. Children are tried in increasing category index and only
strictly better leaves replace the incumbent, so the reported sigma is the
lexicographically smallest optimum.
"""
import itertools
import logging
import math
from dataclasses import dataclass
from typing import List, Optional

from ..config import get_setting
from ..core.model import OpdInstance, SigmaOrdering
from ..errors import BudgetExceededError, ValidationError
from ..layout.engine import pcr
from .tables import ResponsibilityTables, compute_tables, objective_for_sigma

logger = logging.getLogger(__name__)

METHODS = ('auto', 'exhaustive', 'branch-and-bound')


@dataclass(frozen=True)
class SigmaResult:
    sigma: SigmaOrdering
    objective: int
    nodes: int = 0


def _too_large(k: int, limit: int, what: str) -> BudgetExceededError:
    return BudgetExceededError(
        f"{k} categories exceed the {what} limit of {limit}; "
        f"export the model with --export-lp and use a MILP solver",
        required=k, budget=limit,
    )


def exhaustive_sigma(tables: ResponsibilityTables) -> SigmaResult:
    best: Optional[SigmaResult] = None
    count = 0
    for order in itertools.permutations(range(tables.k)):
        count += 1
        sigma = SigmaOrdering.from_order(order)
        value = objective_for_sigma(tables, sigma)
        if best is None or value < best.objective:
            best = SigmaResult(sigma, value)
    return SigmaResult(best.sigma, best.objective, count)


class _BranchAndBound:
    def __init__(self, tables: ResponsibilityTables, max_nodes: int):
        self.k = tables.k
        self.max_nodes = max_nodes
        self.keys = [(a, b, c, d, e.total) for ((a, b), (c, d)), e in tables.entries.items()
                     if e.total > 0]
        self.keys_by_category: List[List[int]] = [[] for _ in range(self.k)]
        for i, (a, b, c, d, _) in enumerate(self.keys):
            for category in {a, b, c, d}:
                self.keys_by_category[category].append(i)
        self.position: List[Optional[int]] = [None] * self.k
        self.decided = [False] * len(self.keys)
        self.best_cost = math.inf
        self.best_order: Optional[List[int]] = None
        self.nodes = 0

    def _placed(self, category: int) -> bool:
        return self.position[category] is not None

    def _before(self, a: int, b: int) -> bool:
        pa = self.position[a] if self.position[a] is not None else self.k
        pb = self.position[b] if self.position[b] is not None else self.k
        return pa < pb

    def _place(self, category: int, depth: int):
        """Place a category; return (added cost, newly decided key ids)."""
        self.position[category] = depth
        added = 0
        newly = []
        for i in self.keys_by_category[category]:
            if self.decided[i]:
                continue
            a, b, c, d, weight = self.keys[i]
            if (self._placed(a) or self._placed(b)) and (self._placed(c) or self._placed(d)):
                self.decided[i] = True
                newly.append(i)
                if self._before(a, b) != self._before(c, d):
                    added += weight
        return added, newly

    def _unplace(self, category: int, newly: List[int]) -> None:
        self.position[category] = None
        for i in newly:
            self.decided[i] = False

    def run(self) -> None:
        self._search([], 0)

    def _search(self, order: List[int], cost: int) -> None:
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise BudgetExceededError(
                f"branch and bound visited more than {self.max_nodes} nodes; "
                f"export the model with --export-lp and use a MILP solver",
                required=self.nodes, budget=self.max_nodes)
        if len(order) == self.k:
            if cost < self.best_cost:
                self.best_cost = cost
                self.best_order = list(order)
            return
        for category in range(self.k):
            if self._placed(category):
                continue
            added, newly = self._place(category, len(order))
            if cost + added < self.best_cost:
                order.append(category)
                self._search(order, cost + added)
                order.pop()
            self._unplace(category, newly)


def branch_and_bound_sigma(tables: ResponsibilityTables,
                           max_nodes: Optional[int] = None) -> SigmaResult:
    if max_nodes is None:
        max_nodes = get_setting('sigma', 'max_nodes')
    search = _BranchAndBound(tables, max_nodes)
    search.run()
    sigma = SigmaOrdering.from_order(search.best_order)
    return SigmaResult(sigma, search.best_cost + tables.constant, search.nodes)


def optimal_sigma_exact(inst: OpdInstance, budget: Optional[int] = None,
                        method: str = 'auto') -> SigmaResult:
    """Sigma minimizing pcr, ties broken by the lexicographically smallest order.

    `budget` caps the number of categories (defaults from config);
    'exhaustive' tries all k! orders, 'branch-and-bound' prunes by the
    decided-key bound. 'auto' runs exhaustive search up to
    `sigma.auto_exhaustive_categories` categories and branch and bound above.
    """
    if method not in METHODS:
        raise ValidationError(f"unknown sigma search method {method!r}")
    k = inst.k
    if method == 'auto':
        small = k <= get_setting('sigma', 'auto_exhaustive_categories')
        method = 'exhaustive' if small else 'branch-and-bound'
        logger.debug(f"auto sigma search with k={k}: {method}")
    if method == 'exhaustive':
        limit = budget if budget is not None else get_setting('sigma', 'max_exhaustive_categories')
        if k > limit:
            raise _too_large(k, limit, 'exhaustive search')
    else:
        limit = budget if budget is not None else get_setting('sigma', 'max_categories')
        if k > limit:
            raise _too_large(k, limit, 'branch-and-bound')

    tables = compute_tables(inst)
    result = exhaustive_sigma(tables) if method == 'exhaustive' else branch_and_bound_sigma(tables)
    logger.info(f"optimal sigma {result.sigma.order} objective {result.objective} "
                f"({result.nodes} nodes)")
    return result


def optimal_sigma_bruteforce(inst: OpdInstance, budget: Optional[int] = None) -> SigmaResult:
    """Minimum over all sigma of pcr from the layout engine, without tables."""
    limit = budget if budget is not None else get_setting('sigma', 'max_exhaustive_categories')
    if inst.k > limit:
        raise _too_large(inst.k, limit, 'brute-force sigma')
    best: Optional[SigmaResult] = None
    count = 0
    for order in itertools.permutations(range(inst.k)):
        count += 1
        sigma = SigmaOrdering.from_order(order)
        value = pcr(inst.with_sigma(sigma))
        if best is None or value < best.objective:
            best = SigmaResult(sigma, value)
    return SigmaResult(best.sigma, best.objective, count)
