"""
Crossing counts for combinatorial layouts and forced-crossing classification.

A crossing between two subjects in interval i is an inversion between
pi_i and pi_{i+1}. Forced crossings are detected from the test matrix alone:
a strong one is an overtake between consecutive tests, a weak one is a
catch-up, a maximal level stretch, then a break-away in the other direction.
"""
import logging
from dataclasses import dataclass
from typing import Iterator, List, NamedTuple, Optional, Sequence, Tuple

from ..core.model import CombinatorialLayout, OpdInstance
from ..core.validation import check_dimensions, layout_is_valid
from ..errors import LayoutError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CrossingReport:
    """Crossing totals; strong/weak are None when only a layout was counted."""
    total: int
    per_interval: Tuple[int, ...]
    strong: Optional[int] = None
    weak: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            'total': self.total,
            'strong': self.strong,
            'weak': self.weak,
            'per_interval': list(self.per_interval),
        }


def _sort_count(seq: List[int]) -> Tuple[List[int], int]:
    if len(seq) <= 1:
        return seq, 0
    mid = len(seq) // 2
    left, inv_left = _sort_count(seq[:mid])
    right, inv_right = _sort_count(seq[mid:])
    merged: List[int] = []
    inv = inv_left + inv_right
    i = j = 0
    while i < len(left) and j < len(right):
        if left[i] <= right[j]:
            merged.append(left[i])
            i += 1
        else:
            merged.append(right[j])
            j += 1
            # every remaining left element is larger than right[j-1]
            inv += len(left) - i
    merged.extend(left[i:])
    merged.extend(right[j:])
    return merged, inv


def count_inversions(seq: Sequence[int]) -> int:
    """Number of pairs p < q with seq[p] > seq[q], by merge counting."""
    return _sort_count(list(seq))[1]


def interval_crossings(pi: Sequence[int], pi_next: Sequence[int]) -> int:
    """Subject pairs whose relative order differs between two permutations."""
    pos = [0] * len(pi_next)
    for p, s in enumerate(pi_next):
        pos[s] = p
    return count_inversions([pos[s] for s in pi])


def count_layout_crossings(inst: OpdInstance, layout: CombinatorialLayout) -> CrossingReport:
    check_dimensions(inst, layout)
    if inst.sigma is not None and not layout_is_valid(inst, layout):
        raise LayoutError("layout is not category-consistent with sigma")
    per_interval = tuple(
        interval_crossings(layout.pis[i], layout.pis[i + 1]) for i in range(layout.m)
    )
    return CrossingReport(total=sum(per_interval), per_interval=per_interval)


class Transition(NamedTuple):
    """Two consecutive timestamps at which a subject pair is not level."""
    start: int
    end: int
    strong: bool


def pair_transitions(row_a: Sequence[int], row_b: Sequence[int]) -> Iterator[Transition]:
    """Walk the timestamps where the two values differ, pairing neighbours.

    A transition is strong when the two timestamps are adjacent and weak when
    a maximal level stretch lies between them.
    """
    previous = None
    for i, (a, b) in enumerate(zip(row_a, row_b)):
        if a == b:
            continue
        if previous is not None:
            yield Transition(previous, i, i == previous + 1)
        previous = i


def _forced_counts(inst: OpdInstance) -> Tuple[int, int]:
    ranks = inst.rank_rows()
    columns = list(zip(*ranks)) if ranks and inst.n else []
    strong = weak = 0
    for s in range(inst.n):
        col_s = columns[s]
        for t in range(s + 1, inst.n):
            col_t = columns[t]
            for start, end, is_strong in pair_transitions(col_s, col_t):
                if (col_s[start] < col_t[start]) != (col_s[end] < col_t[end]):
                    if is_strong:
                        strong += 1
                    else:
                        weak += 1
    return strong, weak


def count_strongly_forced(inst: OpdInstance) -> int:
    return _forced_counts(inst)[0]


def count_weakly_forced(inst: OpdInstance) -> int:
    return _forced_counts(inst)[1]


def count_forced(inst: OpdInstance) -> Tuple[int, int]:
    """(strong, weak) in one pass over the subject pairs."""
    return _forced_counts(inst)


@dataclass(frozen=True)
class RedundantCrossing:
    kind: str  # 'forward' or 'backward'
    interval: int
    subjects: Tuple[int, int]


def find_redundant_crossings(inst: OpdInstance,
                             layout: CombinatorialLayout) -> List[RedundantCrossing]:
    """Crossings that a category-respecting reorder could remove.

    Forward: the pair crosses in interval i and is level at t_{i+1}.
    Backward: the pair crosses in interval i, is level at t_0..t_i and
    strictly ordered at t_{i+1}.
    """
    check_dimensions(inst, layout)
    ranks = inst.rank_rows()
    found: List[RedundantCrossing] = []
    positions = [layout.positions(i) for i in range(inst.m + 1)]
    for s in range(inst.n):
        for t in range(s + 1, inst.n):
            level_prefix = True
            for i in range(inst.m):
                before = positions[i][s] < positions[i][t]
                after = positions[i + 1][s] < positions[i + 1][t]
                level_prefix = level_prefix and ranks[i][s] == ranks[i][t]
                if before == after:
                    continue
                if ranks[i + 1][s] == ranks[i + 1][t]:
                    found.append(RedundantCrossing('forward', i, (s, t)))
                elif level_prefix:
                    found.append(RedundantCrossing('backward', i, (s, t)))
    if found:
        logger.debug(f"{len(found)} redundant crossing(s) in layout")
    return found
