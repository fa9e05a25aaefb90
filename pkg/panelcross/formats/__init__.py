"""File formats: instances (CSV/JSON), layouts, learning spaces, tile export."""

from .streams import open_text
from .instances import load_instance, save_instance, instance_to_dict
from .layouts import load_layout, save_layout, layout_to_dict
from .spaces import load_learning_space
from .tiles import export_tile, vertex_name

__all__ = [
    'open_text',
    'load_instance',
    'save_instance',
    'instance_to_dict',
    'load_layout',
    'save_layout',
    'layout_to_dict',
    'load_learning_space',
    'export_tile',
    'vertex_name',
]
