"""
Responsibility tables: which category-order decisions cause which crossings.

For a subject pair, look only at the tests where the two subjects are in
different categories. Each consecutive pair of such tests (p at the earlier
one, p' at the later one, both as (category of s, category of s')) crosses
under sigma iff sigma orders p and p' differently. Adjacent tests give a
strong event, tests separated by a level stretch give a weak event.
"""
import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Tuple, Union

from ..core.model import OpdInstance, SigmaOrdering
from ..errors import ValidationError
from ..layout.crossings import pair_transitions

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]
Key = Tuple[Pair, Pair]

# normalize_key results for pairs that need no variable
NEVER = 'never'
ALWAYS = 'always'


def normalize_key(p: Pair, q: Pair) -> Union[Key, str]:
    """Canonical key for the event "order(p) differs from order(q)".

    Reversing both pairs or swapping them leaves the event unchanged; among
    those forms the smallest one with an ascending, strictly smaller first
    pair is chosen.
    """
    if p == q:
        return NEVER
    rp, rq = (p[1], p[0]), (q[1], q[0])
    if q == rp:
        return ALWAYS
    forms = [(p, q), (q, p), (rp, rq), (rq, rp)]
    return min(f for f in forms if f[0][0] < f[0][1] and f[0] < f[1])


@dataclass
class Responsibility:
    sc: int = 0
    wc: int = 0

    @property
    def total(self) -> int:
        return self.sc + self.wc


@dataclass
class ResponsibilityTables:
    k: int
    entries: Dict[Key, Responsibility] = field(default_factory=dict)
    constant_sc: int = 0
    constant_wc: int = 0

    @property
    def constant(self) -> int:
        """Crossings that happen under every sigma."""
        return self.constant_sc + self.constant_wc

    @property
    def strong_events(self) -> int:
        return self.constant_sc + sum(r.sc for r in self.entries.values())

    @property
    def weak_events(self) -> int:
        return self.constant_wc + sum(r.wc for r in self.entries.values())

    def __len__(self) -> int:
        return len(self.entries)

    def sorted_items(self) -> List[Tuple[Key, Responsibility]]:
        return sorted(self.entries.items())


def _pair_events(tests, subjects: range, n: int) -> Counter:
    counts: Counter = Counter()
    columns = list(zip(*tests))
    for s in subjects:
        for t in range(s + 1, n):
            col_s, col_t = columns[s], columns[t]
            for start, end, strong in pair_transitions(col_s, col_t):
                key = normalize_key((col_s[start], col_t[start]), (col_s[end], col_t[end]))
                if key != NEVER:
                    counts[(key, 'sc' if strong else 'wc')] += 1
    return counts


def compute_tables(inst: OpdInstance, workers: int = 1) -> ResponsibilityTables:
    """Tables for an instance; its sigma, if any, is ignored."""
    n = inst.n
    if workers > 1 and n > 1:
        step = -(-n // workers)
        ranges = [range(a, min(a + step, n)) for a in range(0, n, step)]
        with ThreadPoolExecutor(max_workers=workers) as executor:
            parts = list(executor.map(lambda r: _pair_events(inst.tests, r, n), ranges))
        counts: Counter = sum(parts, Counter())
    else:
        counts = _pair_events(inst.tests, range(n), n) if n else Counter()

    tables = ResponsibilityTables(inst.k)
    for (key, kind), value in counts.items():
        if key == ALWAYS:
            if kind == 'sc':
                tables.constant_sc += value
            else:
                tables.constant_wc += value
            continue
        entry = tables.entries.setdefault(key, Responsibility())
        if kind == 'sc':
            entry.sc += value
        else:
            entry.wc += value
    tables.entries = dict(sorted(tables.entries.items()))
    logger.debug(f"tables: {len(tables.entries)} keys, constant {tables.constant}")
    return tables


def objective_for_sigma(tables: ResponsibilityTables, sigma: SigmaOrdering) -> int:
    """Crossings the instance has under sigma: constant plus every key whose pairs disagree."""
    if sigma.k != tables.k:
        raise ValidationError(f"sigma orders {sigma.k} categories, tables have {tables.k}")
    rank = sigma.rank
    total = tables.constant
    for ((a, b), (c, d)), entry in tables.entries.items():
        if (rank[a] < rank[b]) != (rank[c] < rank[d]):
            total += entry.total
    return total
