"""Optimal category ordering: responsibility tables, exact search, LP export."""

from .tables import (
    Key,
    Responsibility,
    ResponsibilityTables,
    normalize_key,
    compute_tables,
    objective_for_sigma,
)
from .search import (
    SigmaResult,
    exhaustive_sigma,
    branch_and_bound_sigma,
    optimal_sigma_exact,
    optimal_sigma_bruteforce,
)
from .lp_format import LpModel, export_ilp, parse_lp, assignment_for_sigma
from .reduction import (
    bipartite_reduction,
    bipartite_crossing_number,
    count_bipartite_crossings,
)

__all__ = [
    'Key',
    'Responsibility',
    'ResponsibilityTables',
    'normalize_key',
    'compute_tables',
    'objective_for_sigma',
    'SigmaResult',
    'exhaustive_sigma',
    'branch_and_bound_sigma',
    'optimal_sigma_exact',
    'optimal_sigma_bruteforce',
    'LpModel',
    'export_ilp',
    'parse_lp',
    'assignment_for_sigma',
    'bipartite_reduction',
    'bipartite_crossing_number',
    'count_bipartite_crossings',
]
