"""Edge-list text export of tiles.

Format: one ``L`` line with the left wall, one ``W`` line per intermediate
wall, one ``R`` line with the right wall (vertices space separated, in wall
order), then one ``u -- v`` line per edge, sorted. Tuple vertices are
written with their parts joined by ``:``.
"""
from typing import Hashable

from ..tiles.tile import Tile


def vertex_name(v: Hashable) -> str:
    if isinstance(v, tuple):
        return ':'.join(vertex_name(part) for part in v)
    return str(v)


def export_tile(tile: Tile) -> str:
    lines = [f"# tile: {tile.number_of_nodes()} vertices, {tile.number_of_edges()} edges"]
    lines.append('L ' + ' '.join(vertex_name(v) for v in tile.left_wall))
    for wall in tile.inner_walls:
        lines.append('W ' + ' '.join(vertex_name(v) for v in wall))
    lines.append('R ' + ' '.join(vertex_name(v) for v in tile.right_wall))
    edges = sorted(tuple(sorted((vertex_name(u), vertex_name(v)))) for u, v in tile.graph.edges)
    lines.extend(f"{u} -- {v}" for u, v in edges)
    return '\n'.join(line.rstrip() for line in lines) + '\n'
