"""Extremal and expected crossing numbers, generators and estimators."""

from .extremal import (
    ExtremalParams,
    balanced_partition,
    ecr_two_tests,
    ecr_general,
    extremal_instance_general,
    consistent_bounds,
    consistent_extremal_instance,
    is_consistent,
)
from .random_instances import (
    Estimate,
    expected_pcr,
    expected_pcr_series,
    random_instance,
    monte_carlo_expected_pcr,
)
from .exhaustive import exhaustive_ecr, exhaustive_ecr_two_tests

__all__ = [
    'ExtremalParams',
    'balanced_partition',
    'ecr_two_tests',
    'ecr_general',
    'extremal_instance_general',
    'consistent_bounds',
    'consistent_extremal_instance',
    'is_consistent',
    'Estimate',
    'expected_pcr',
    'expected_pcr_series',
    'random_instance',
    'monte_carlo_expected_pcr',
    'exhaustive_ecr',
    'exhaustive_ecr_two_tests',
]
