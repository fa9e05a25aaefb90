"""Report-based instance validation and layout consistency checks."""
import logging
from typing import List

from ..errors import LayoutError, Violation
from .model import CombinatorialLayout, OpdInstance

logger = logging.getLogger(__name__)


def validate_instance(inst: OpdInstance) -> List[Violation]:
    """Return every broken OpdInstance invariant; empty when well-formed."""
    report: List[Violation] = []
    n, k = inst.n, inst.k

    if len(inst.tests) < 2:
        report.append(Violation('too_few_tests',
                                f"need at least 2 timestamps, got {len(inst.tests)}"))
    if k < 1:
        report.append(Violation('no_categories', "category set is empty"))

    seen = {}
    for c, label in enumerate(inst.categories.labels):
        if label in seen:
            report.append(Violation('duplicate_category',
                                    f"duplicate category {label!r}", category=c))
        seen.setdefault(label, c)

    seen = {}
    for s, label in enumerate(inst.subjects):
        if label in seen:
            report.append(Violation('duplicate_subject',
                                    f"duplicate subject {label!r}", subject=s))
        seen.setdefault(label, s)

    for i, row in enumerate(inst.tests):
        if len(row) != n:
            report.append(Violation('ragged_row',
                                    f"timestamp {i} has {len(row)} entries, expected {n}",
                                    timestamp=i))
        for s, c in enumerate(row):
            if not isinstance(c, int) or isinstance(c, bool) or not 0 <= c < k:
                subject = inst.subjects[s] if s < n else s
                report.append(Violation('invalid_category_index',
                                        f"invalid category index {c!r} for subject {subject!r} at t{i}",
                                        subject=s, timestamp=i, category=c if isinstance(c, int) else None))

    if inst.sigma is not None and inst.sigma.k != k:
        report.append(Violation('sigma_size',
                                f"sigma orders {inst.sigma.k} categories, instance has {k}"))

    if report:
        logger.debug(f"instance validation found {len(report)} violation(s)")
    return report


def check_dimensions(inst: OpdInstance, layout: CombinatorialLayout) -> None:
    if layout.m != inst.m or layout.n != inst.n:
        raise LayoutError(
            f"layout has {layout.m + 1} permutations of {layout.n} subjects, "
            f"instance has {inst.m + 1} timestamps and {inst.n} subjects"
        )


def layout_is_valid(inst: OpdInstance, layout: CombinatorialLayout) -> bool:
    """True iff every pi_i lists subjects in nondecreasing sigma rank."""
    check_dimensions(inst, layout)
    rank = inst.require_sigma().rank
    for row, pi in zip(inst.tests, layout.pis):
        ranks = [rank[row[s]] for s in pi]
        if any(a > b for a, b in zip(ranks, ranks[1:])):
            return False
    return True
