"""
Bipartite crossing number as an optimal-sigma problem.

Edges become subjects and vertices become categories; the first test maps
an edge to its left endpoint, the second to its right endpoint. Two edges
without a common endpoint cross iff sigma orders their left and right
endpoints differently, so the best sigma solves the two-sided problem.
"""
import itertools
import logging
from typing import Hashable, List, Sequence, Tuple

import networkx as nx
from networkx.algorithms import bipartite

from ..core.model import CategorySet, OpdInstance
from ..errors import ValidationError

logger = logging.getLogger(__name__)

Edge = Tuple[Hashable, Hashable]


def _oriented_edges(left: Sequence[Hashable], right: Sequence[Hashable],
                    edges: Sequence[Edge]) -> List[Edge]:
    left_set, right_set = set(left), set(right)
    if left_set & right_set:
        raise ValidationError(f"vertex sets overlap: {sorted(map(str, left_set & right_set))}")
    graph = nx.Graph()
    graph.add_nodes_from(left, bipartite=0)
    graph.add_nodes_from(right, bipartite=1)
    oriented: List[Edge] = []
    for u, v in edges:
        if u in left_set and v in right_set:
            oriented.append((u, v))
        elif v in left_set and u in right_set:
            oriented.append((v, u))
        elif u in graph and v in graph:
            raise ValidationError(f"edge {u}-{v} lies inside one side of the bipartition")
        else:
            raise ValidationError(f"edge {u}-{v} has an endpoint outside both vertex sets")
        if graph.has_edge(u, v):
            raise ValidationError(f"duplicate edge {u}-{v}")
        graph.add_edge(u, v)
    if not bipartite.is_bipartite_node_set(graph, left_set):
        raise ValidationError("the given vertex sets are not a bipartition of the graph")
    return oriented


def bipartite_reduction(left: Sequence[Hashable], right: Sequence[Hashable],
                        edges: Sequence[Edge]) -> OpdInstance:
    """Two-test instance (without sigma) whose optimal sigma is a crossing-minimal drawing."""
    oriented = _oriented_edges(left, right, edges)
    labels = [str(v) for v in list(left) + list(right)]
    if len(set(labels)) != len(labels):
        raise ValidationError("vertex labels must stay distinct as strings")
    index = {v: i for i, v in enumerate(list(left) + list(right))}
    subjects = tuple(f"{u}-{v}" for u, v in oriented)
    tests = (
        tuple(index[u] for u, _ in oriented),
        tuple(index[v] for _, v in oriented),
    )
    logger.debug(f"reduced bipartite graph with {len(oriented)} edges to a two-test instance")
    return OpdInstance(subjects, CategorySet(tuple(labels)), tests)


def count_bipartite_crossings(order_left: Sequence[Hashable], order_right: Sequence[Hashable],
                              edges: Sequence[Edge]) -> int:
    pos_left = {v: i for i, v in enumerate(order_left)}
    pos_right = {v: i for i, v in enumerate(order_right)}
    crossings = 0
    for (u1, v1), (u2, v2) in itertools.combinations(edges, 2):
        if (pos_left[u1] - pos_left[u2]) * (pos_right[v1] - pos_right[v2]) < 0:
            crossings += 1
    return crossings


def bipartite_crossing_number(left: Sequence[Hashable], right: Sequence[Hashable],
                              edges: Sequence[Edge]) -> int:
    """Minimum over all orders of both sides, by brute force."""
    oriented = _oriented_edges(left, right, edges)
    return min(
        count_bipartite_crossings(tau1, tau2, oriented)
        for tau1 in itertools.permutations(left)
        for tau2 in itertools.permutations(right)
    )
