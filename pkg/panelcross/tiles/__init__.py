"""Learning spaces, tile algebra and tile constructions."""

from .learning_space import (
    LearningSpace,
    validate_learning_space,
    learning_space_graph,
    popcount,
)
from .tile import Tile, join_tiles
from .constructions import (
    RankingFunction,
    KnowledgePanel,
    validate_ranking,
    total_learning_tile,
    shortest_path_union,
    possibilistic_learning_tile,
    exact_learning_tile,
    ordinal_panel_tile,
    tile_drawing_crossings,
    random_knowledge_panel,
    sample_traversed_paths,
)

__all__ = [
    'LearningSpace',
    'validate_learning_space',
    'learning_space_graph',
    'popcount',
    'Tile',
    'join_tiles',
    'RankingFunction',
    'KnowledgePanel',
    'validate_ranking',
    'total_learning_tile',
    'shortest_path_union',
    'possibilistic_learning_tile',
    'exact_learning_tile',
    'ordinal_panel_tile',
    'tile_drawing_crossings',
    'random_knowledge_panel',
    'sample_traversed_paths',
]
