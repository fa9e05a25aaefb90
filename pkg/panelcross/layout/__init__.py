"""Crossing counting, forced-crossing classification and optimal layouts."""

from .crossings import (
    CrossingReport,
    RedundantCrossing,
    Transition,
    count_inversions,
    interval_crossings,
    count_layout_crossings,
    pair_transitions,
    count_strongly_forced,
    count_weakly_forced,
    count_forced,
    find_redundant_crossings,
)
from .engine import optimal_layout, pcr, layout_report
from .oracle import brute_force_pcr, layout_count, valid_permutations

__all__ = [
    'CrossingReport',
    'RedundantCrossing',
    'Transition',
    'count_inversions',
    'interval_crossings',
    'count_layout_crossings',
    'pair_transitions',
    'count_strongly_forced',
    'count_weakly_forced',
    'count_forced',
    'find_redundant_crossings',
    'optimal_layout',
    'pcr',
    'layout_report',
    'brute_force_pcr',
    'layout_count',
    'valid_permutations',
]
