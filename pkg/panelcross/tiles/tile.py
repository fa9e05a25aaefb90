"""Tiles: a graph with an ordered left wall and an ordered right wall."""
import logging
from dataclasses import dataclass, field
from typing import Dict, Hashable, List, Sequence, Tuple

import networkx as nx

from ..errors import ValidationError

logger = logging.getLogger(__name__)

Wall = Tuple[Hashable, ...]


@dataclass
class Tile:
    """(G, L, R) plus the walls absorbed by earlier joins, left to right."""
    graph: nx.Graph
    left_wall: Wall
    right_wall: Wall
    inner_walls: Tuple[Wall, ...] = field(default_factory=tuple)

    def __post_init__(self):
        self.left_wall = tuple(self.left_wall)
        self.right_wall = tuple(self.right_wall)
        self.inner_walls = tuple(tuple(w) for w in self.inner_walls)
        seen = set()
        for wall in self.walls:
            for v in wall:
                if v not in self.graph:
                    raise ValidationError(f"wall vertex {v!r} is not in the tile graph")
                if v in seen:
                    raise ValidationError(f"vertex {v!r} appears twice in the tile walls")
                seen.add(v)

    @property
    def walls(self) -> Tuple[Wall, ...]:
        return (self.left_wall,) + self.inner_walls + (self.right_wall,)

    def number_of_nodes(self) -> int:
        return self.graph.number_of_nodes()

    def number_of_edges(self) -> int:
        return self.graph.number_of_edges()

    def internal_vertices(self) -> List[Hashable]:
        on_walls = {v for wall in self.walls for v in wall}
        return [v for v in self.graph.nodes if v not in on_walls]


def join_tiles(tiles: Sequence[Tile]) -> Tile:
    """Join compatible tiles left to right.

    Vertex v of tile j becomes (j, v), except that the left wall of tile j is
    identified position by position with the right wall of tile j-1.
    """
    if not tiles:
        raise ValidationError("cannot join an empty sequence of tiles")

    graph = nx.Graph()
    inner: List[Wall] = []
    previous_right: Wall = ()
    left: Wall = ()
    for j, tile in enumerate(tiles):
        if j and len(tile.left_wall) != len(previous_right):
            raise ValidationError(
                f"tiles {j - 1} and {j} are incompatible: "
                f"|R| = {len(previous_right)} but |L'| = {len(tile.left_wall)}"
            )
        mapping: Dict[Hashable, Hashable] = {v: (j, v) for v in tile.graph.nodes}
        if j:
            for v, image in zip(tile.left_wall, previous_right):
                mapping[v] = image
        for v, data in tile.graph.nodes(data=True):
            graph.add_node(mapping[v], **data)
        for u, v, data in tile.graph.edges(data=True):
            graph.add_edge(mapping[u], mapping[v], **data)

        if j == 0:
            left = tuple(mapping[v] for v in tile.left_wall)
        else:
            inner.append(previous_right)
        inner.extend(tuple(mapping[v] for v in wall) for wall in tile.inner_walls)
        previous_right = tuple(mapping[v] for v in tile.right_wall)

    logger.debug(f"joined {len(tiles)} tiles: {graph.number_of_nodes()} vertices, "
                 f"{graph.number_of_edges()} edges")
    return Tile(graph, left, previous_right, tuple(inner))
