"""
panelcross - Minimum-crossing layouts of ordinal panel data

Subjects are measured at several timestamps and land in ordered categories;
panelcross lays them out so their trajectories cross as little as possible:
- Optimal layouts and the panel crossing number (pcr)
- Extremal and expected crossing analysis
- Exact search for the category order that minimizes pcr, with LP export
- Learning-space tiles and their drawings
"""

__version__ = "0.3.0"
__author__ = "panelcross contributors"

from .core import CategorySet, CombinatorialLayout, OpdInstance, SigmaOrdering, validate_instance
from .errors import (
    BudgetExceededError,
    ConfigError,
    LayoutError,
    PanelCrossError,
    ParseError,
    UsageError,
    ValidationError,
    Violation,
)
from .layout import count_layout_crossings, layout_report, optimal_layout, pcr

__all__ = [
    "CategorySet",
    "SigmaOrdering",
    "OpdInstance",
    "CombinatorialLayout",
    "validate_instance",
    "optimal_layout",
    "pcr",
    "layout_report",
    "count_layout_crossings",
    "PanelCrossError",
    "ValidationError",
    "ParseError",
    "LayoutError",
    "BudgetExceededError",
    "ConfigError",
    "UsageError",
    "Violation",
]
