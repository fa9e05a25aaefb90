"""Panel-data domain types, validation and permutation utilities."""

from .model import (
    CategorySet,
    SigmaOrdering,
    OpdInstance,
    CombinatorialLayout,
    as_layout,
)
from .permutations import (
    induced_permutation,
    subjects_in_category,
    group_by_category,
    naive_layout,
    relabel_subjects,
)
from .validation import (
    validate_instance,
    layout_is_valid,
    check_dimensions,
)

__all__ = [
    'CategorySet',
    'SigmaOrdering',
    'OpdInstance',
    'CombinatorialLayout',
    'as_layout',
    'induced_permutation',
    'subjects_in_category',
    'group_by_category',
    'naive_layout',
    'relabel_subjects',
    'validate_instance',
    'layout_is_valid',
    'check_dimensions',
]
