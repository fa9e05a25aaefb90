"""Elementary permutation helpers on subject orders."""
from typing import Hashable, Iterable, List, Sequence, Tuple, TypeVar

from ..errors import ValidationError
from .model import CombinatorialLayout, OpdInstance

T = TypeVar('T', bound=Hashable)


def induced_permutation(pi: Sequence[T], subset: Iterable[T]) -> Tuple[T, ...]:
    """Elements of `subset` in the relative order given by `pi`."""
    members = set(subset)
    missing = members.difference(pi)
    if missing:
        raise ValidationError(f"elements not in permutation: {sorted(map(repr, missing))}")
    return tuple(x for x in pi if x in members)


def subjects_in_category(inst: OpdInstance, i: int, c: int) -> List[int]:
    """Subjects assigned category `c` at timestamp `i`, in subject-index order."""
    return [s for s, category in enumerate(inst.tests[i]) if category == c]


def group_by_category(order: Iterable[int], row: Sequence[int], k: int,
                      sigma_order: Sequence[int]) -> Tuple[int, ...]:
    """Stable regrouping of `order` into sigma-ordered category blocks."""
    buckets: List[List[int]] = [[] for _ in range(k)]
    for s in order:
        buckets[row[s]].append(s)
    out: List[int] = []
    for c in sigma_order:
        out.extend(buckets[c])
    return tuple(out)


def naive_layout(inst: OpdInstance) -> CombinatorialLayout:
    """Per timestamp, the sigma-ordered concatenation of subjects_in_category."""
    order = inst.require_sigma().order
    return CombinatorialLayout(tuple(
        group_by_category(range(inst.n), row, inst.k, order) for row in inst.tests
    ))


def relabel_subjects(inst: OpdInstance, permutation: Sequence[int]) -> OpdInstance:
    """Instance whose subject ``j`` is the input's subject ``permutation[j]``."""
    if sorted(permutation) != list(range(inst.n)):
        raise ValidationError("relabelling is not a permutation of the subjects")
    return OpdInstance(
        tuple(inst.subjects[p] for p in permutation),
        inst.categories,
        tuple(tuple(row[p] for p in permutation) for row in inst.tests),
        inst.sigma,
    )
