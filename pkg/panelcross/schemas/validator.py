"""jsonschema checks for instance, layout, learning-space and config documents."""
from typing import Any, Dict, Optional, Tuple

from jsonschema import validate, ValidationError as JsonSchemaValidationError

from .definitions import (
    INSTANCE_FILE_SCHEMA,
    LAYOUT_FILE_SCHEMA,
    LEARNING_SPACE_SCHEMA,
    CONFIG_SCHEMA,
)


def format_path(path) -> str:
    """Render a jsonschema error path as ``tests[2][3]``."""
    out = ""
    for part in path:
        if isinstance(part, int):
            out += f"[{part}]"
        else:
            out += f".{part}" if out else str(part)
    return out or "<root>"


class SchemaValidator:
    """Validate documents against the panelcross JSON schemas."""

    SCHEMAS = {
        'instance': INSTANCE_FILE_SCHEMA,
        'layout': LAYOUT_FILE_SCHEMA,
        'learning_space': LEARNING_SPACE_SCHEMA,
        'config': CONFIG_SCHEMA,
    }

    def validate(self, data: Any, schema_name: str) -> Tuple[bool, Optional[str]]:
        """
        Validate data against a named schema.

        Returns: (is_valid, error_message)
        """
        schema = self.SCHEMAS.get(schema_name)
        if not schema:
            return False, f"Unknown schema: {schema_name}"

        try:
            validate(instance=data, schema=schema)
            return True, None
        except JsonSchemaValidationError as e:
            return False, f"{e.message} at {format_path(e.absolute_path)}"

    def validate_instance_file(self, data: Dict[str, Any]) -> Tuple[bool, Optional[str]]:
        return self.validate(data, 'instance')

    def validate_layout_file(self, data: Dict[str, Any]) -> Tuple[bool, Optional[str]]:
        return self.validate(data, 'layout')

    def validate_learning_space_file(self, data: Dict[str, Any]) -> Tuple[bool, Optional[str]]:
        return self.validate(data, 'learning_space')

    def validate_config(self, data: Dict[str, Any]) -> Tuple[bool, Optional[str]]:
        return self.validate(data, 'config')


# Module-level validator for convenience
_default_validator = None

def get_validator() -> SchemaValidator:
    """Get singleton validator instance."""
    global _default_validator
    if _default_validator is None:
        _default_validator = SchemaValidator()
    return _default_validator
