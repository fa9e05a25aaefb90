"""
Tile constructions for learning-space panels and ordinal panel layouts.

Every construction builds one tile per interval and joins them, so wall
position i of the result corresponds to timestamp t_i.
"""
import logging
from dataclasses import dataclass
from typing import Dict, Hashable, List, Mapping, Optional, Sequence, Set, Tuple

import networkx as nx

from ..core.model import CategorySet, CombinatorialLayout, OpdInstance, SigmaOrdering
from ..core.validation import check_dimensions, layout_is_valid
from ..errors import LayoutError, ValidationError
from ..layout.crossings import count_inversions
from ..seeding import Seed, make_generator
from .learning_space import LearningSpace, learning_space_graph
from .tile import Tile, join_tiles

logger = logging.getLogger(__name__)

# knowledge state (bitmask) -> category index
RankingFunction = Mapping[int, int]


def validate_ranking(space: LearningSpace, alpha: RankingFunction, k: int) -> None:
    missing = [s for s in space.states if s not in alpha]
    if missing:
        raise ValidationError(
            f"ranking function undefined on {len(missing)} state(s), e.g. {space.label(min(missing))}")
    bad = [s for s in space.states if not 0 <= alpha[s] < k]
    if bad:
        raise ValidationError(f"ranking function maps {space.label(min(bad))} outside 0..{k - 1}")


@dataclass(frozen=True)
class KnowledgePanel:
    """Panel whose tests assign knowledge states instead of categories.

    ``states[i][j]`` is the state of subject ``j`` at timestamp ``i``. With a
    ranking function (and categories) attached, the panel projects onto an
    ordinary OpdInstance.
    """
    subjects: Tuple[str, ...]
    space: LearningSpace
    states: Tuple[Tuple[int, ...], ...]
    ranking: Optional[Dict[int, int]] = None
    categories: Optional[CategorySet] = None
    sigma: Optional[SigmaOrdering] = None

    def __post_init__(self):
        object.__setattr__(self, 'subjects', tuple(self.subjects))
        object.__setattr__(self, 'states', tuple(tuple(row) for row in self.states))
        if len(self.states) < 2:
            raise ValidationError("a panel needs at least 2 timestamps")
        for i, row in enumerate(self.states):
            if len(row) != len(self.subjects):
                raise ValidationError(f"timestamp {i} has {len(row)} states for {len(self.subjects)} subjects")
            for j, state in enumerate(row):
                if state not in self.space.states:
                    raise ValidationError(
                        f"subject {self.subjects[j]!r} at t{i} is in a non-state {bin(state)}")

    @property
    def n(self) -> int:
        return len(self.subjects)

    @property
    def m(self) -> int:
        return len(self.states) - 1

    def to_instance(self) -> OpdInstance:
        if self.ranking is None or self.categories is None:
            raise ValidationError("panel has no ranking function to project onto categories")
        validate_ranking(self.space, self.ranking, self.categories.k)
        tests = tuple(tuple(self.ranking[s] for s in row) for row in self.states)
        return OpdInstance(self.subjects, self.categories, tests, self.sigma)


def _category_wall_order(inst: OpdInstance) -> Tuple[int, ...]:
    return inst.sigma.order if inst.sigma is not None else tuple(range(inst.k))


def total_learning_tile(inst: OpdInstance, space: LearningSpace,
                        alpha: RankingFunction) -> Tile:
    """Category walls at every timestamp, one copy of the state graph per interval.

    A wall vertex for category C is joined to every state v with alpha(v) = C
    on both sides of the interval.
    """
    states_graph = learning_space_graph(space)
    validate_ranking(space, alpha, inst.k)
    order = _category_wall_order(inst)

    tiles = []
    for i in range(1, inst.m + 1):
        g = nx.Graph()
        left = tuple(('category', i - 1, c) for c in order)
        right = tuple(('category', i, c) for c in order)
        g.add_nodes_from(left + right)
        for v in states_graph.nodes:
            g.add_node(('state', i, v))
        for u, v in states_graph.edges:
            g.add_edge(('state', i, u), ('state', i, v))
        for v in states_graph.nodes:
            g.add_edge(('category', i - 1, alpha[v]), ('state', i, v))
            g.add_edge(('state', i, v), ('category', i, alpha[v]))
        tiles.append(Tile(g, left, right))
    return join_tiles(tiles)


def shortest_path_union(graph: nx.Graph, source: Hashable,
                        target: Hashable) -> Tuple[Set[Hashable], Set[Tuple[Hashable, Hashable]]]:
    """Vertices and edges lying on at least one shortest source-target path.

    Edge (u, v) is kept iff d(source, u) + 1 + d(v, target) = d(source, target).
    """
    from_source = nx.single_source_shortest_path_length(graph, source)
    if target not in from_source:
        raise ValidationError(f"state {target!r} is unreachable from {source!r}")
    to_target = nx.single_source_shortest_path_length(graph, target)
    d = from_source[target]
    vertices = {v for v in from_source
                if v in to_target and from_source[v] + to_target[v] == d}
    edges = set()
    for u, v in graph.edges:
        if u not in vertices or v not in vertices:
            continue
        if from_source[u] + 1 + to_target[v] == d:
            edges.add((u, v))
        elif from_source[v] + 1 + to_target[u] == d:
            edges.add((v, u))
    return vertices, edges


def _check_panel_layout(panel: KnowledgePanel, layout: CombinatorialLayout) -> None:
    if layout.m != panel.m or layout.n != panel.n:
        raise LayoutError(
            f"layout has {layout.m + 1} permutations of {layout.n} subjects, "
            f"panel has {panel.m + 1} timestamps and {panel.n} subjects")
    if panel.ranking is not None and panel.categories is not None and panel.sigma is not None:
        if not layout_is_valid(panel.to_instance(), layout):
            raise LayoutError("layout is not category-consistent with the panel's ranking")


def _subject_tile(panel: KnowledgePanel, layout: CombinatorialLayout, i: int,
                  internal: nx.Graph) -> Tile:
    """Interval tile: subject walls for t_{i-1} and t_i around a state subgraph."""
    g = nx.Graph()
    left = tuple(('subject', i - 1, s) for s in layout.pis[i - 1])
    right = tuple(('subject', i, s) for s in layout.pis[i])
    g.add_nodes_from(left + right)
    g.add_nodes_from(('state', i, v) for v in internal.nodes)
    g.add_edges_from((('state', i, u), ('state', i, v)) for u, v in internal.edges)
    for s in range(panel.n):
        g.add_edge(('subject', i - 1, s), ('state', i, panel.states[i - 1][s]))
        g.add_edge(('state', i, panel.states[i][s]), ('subject', i, s))
    return Tile(g, left, right)


def possibilistic_learning_tile(panel: KnowledgePanel, layout: CombinatorialLayout) -> Tile:
    """Union of all shortest learning paths each subject could have taken."""
    _check_panel_layout(panel, layout)
    graph = learning_space_graph(panel.space)
    tiles = []
    for i in range(1, panel.m + 1):
        internal = nx.Graph()
        for s in range(panel.n):
            vertices, edges = shortest_path_union(graph, panel.states[i - 1][s], panel.states[i][s])
            internal.add_nodes_from(vertices)
            internal.add_edges_from(edges)
        tiles.append(_subject_tile(panel, layout, i, internal))
    return join_tiles(tiles)


TraversedPaths = Sequence[Sequence[Sequence[int]]]


def exact_learning_tile(panel: KnowledgePanel, paths: TraversedPaths,
                        layout: CombinatorialLayout) -> Tile:
    """Union of the learning paths the subjects actually took.

    ``paths[i - 1][s]`` is the walk of subject ``s`` during interval ``i``.
    """
    _check_panel_layout(panel, layout)
    graph = learning_space_graph(panel.space)
    if len(paths) != panel.m:
        raise ValidationError(f"expected paths for {panel.m} intervals, got {len(paths)}")
    tiles = []
    for i in range(1, panel.m + 1):
        internal = nx.Graph()
        if len(paths[i - 1]) != panel.n:
            raise ValidationError(f"interval {i}: expected {panel.n} paths, got {len(paths[i - 1])}")
        for s, walk in enumerate(paths[i - 1]):
            name = panel.subjects[s]
            if not walk or walk[0] != panel.states[i - 1][s] or walk[-1] != panel.states[i][s]:
                raise ValidationError(f"interval {i}: path of {name!r} has wrong endpoints")
            for v in walk:
                if v not in graph:
                    raise ValidationError(f"interval {i}: path of {name!r} visits non-state {bin(v)}")
            for u, v in zip(walk, walk[1:]):
                if not graph.has_edge(u, v):
                    raise ValidationError(
                        f"interval {i}: path of {name!r} steps {panel.space.label(u)} -> "
                        f"{panel.space.label(v)}, which is not a learning-space edge")
            internal.add_nodes_from(walk)
            internal.add_edges_from(zip(walk, walk[1:]))
        tiles.append(_subject_tile(panel, layout, i, internal))
    return join_tiles(tiles)


def ordinal_panel_tile(inst: OpdInstance, layout: CombinatorialLayout) -> Tile:
    """One perfect matching per interval between consecutive subject walls."""
    check_dimensions(inst, layout)
    if inst.sigma is not None and not layout_is_valid(inst, layout):
        raise LayoutError("layout is not category-consistent with sigma")
    tiles = []
    for i in range(1, inst.m + 1):
        g = nx.Graph()
        left = tuple(('subject', i - 1, s) for s in layout.pis[i - 1])
        right = tuple(('subject', i, s) for s in layout.pis[i])
        g.add_nodes_from(left + right)
        g.add_edges_from((('subject', i - 1, s), ('subject', i, s)) for s in range(inst.n))
        tiles.append(Tile(g, left, right))
    return join_tiles(tiles)


def tile_drawing_crossings(tile: Tile) -> Tuple[int, ...]:
    """Per-interval crossings of the straight-line drawing of a matching tile."""
    walls = tile.walls
    counts = []
    for wall, nxt in zip(walls, walls[1:]):
        position = {v: p for p, v in enumerate(nxt)}
        sequence = []
        for v in wall:
            partners = [u for u in tile.graph.neighbors(v) if u in position]
            if len(partners) != 1:
                raise ValidationError(f"{v!r} is not matched to exactly one vertex of the next wall")
            sequence.append(position[partners[0]])
        counts.append(count_inversions(sequence))
    return tuple(counts)


def random_knowledge_panel(space: LearningSpace, n: int, m: int, seed: Seed) -> KnowledgePanel:
    """Uniformly random knowledge states for n subjects over m+1 timestamps."""
    rng = make_generator(seed)
    states = sorted(space.states)
    picks = rng.integers(0, len(states), size=(m + 1, n))
    return KnowledgePanel(
        tuple(f"s{j}" for j in range(n)),
        space,
        tuple(tuple(states[p] for p in row) for row in picks.tolist()),
    )


def sample_traversed_paths(panel: KnowledgePanel, seed: Seed) -> List[List[List[int]]]:
    """Pick one shortest learning path per subject and interval at random."""
    rng = make_generator(seed)
    graph = learning_space_graph(panel.space)
    paths = []
    for i in range(1, panel.m + 1):
        interval = []
        for s in range(panel.n):
            options = sorted(nx.all_shortest_paths(graph, panel.states[i - 1][s], panel.states[i][s]))
            interval.append(list(options[int(rng.integers(len(options)))]))
        paths.append(interval)
    return paths
