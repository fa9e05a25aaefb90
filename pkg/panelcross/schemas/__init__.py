"""Schema validation and definitions for panelcross files."""

from .definitions import (
    FORMAT_VERSION,
    INSTANCE_FILE_SCHEMA,
    LAYOUT_FILE_SCHEMA,
    LEARNING_SPACE_SCHEMA,
    CONFIG_SCHEMA,
)

from .validator import (
    SchemaValidator,
    format_path,
    get_validator,
)

__all__ = [
    'FORMAT_VERSION',
    'INSTANCE_FILE_SCHEMA',
    'LAYOUT_FILE_SCHEMA',
    'LEARNING_SPACE_SCHEMA',
    'CONFIG_SCHEMA',
    'SchemaValidator',
    'format_path',
    'get_validator',
]
