"""
JSON Schema Definitions for panelcross

Every JSON document crossing the library boundary (instance files, layout
files, learning-space files, the configuration file) is checked against one
of these schemas before it is turned into model objects.
"""

FORMAT_VERSION = 1

# Schema for ordinal panel data instance files
INSTANCE_FILE_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["subjects", "tests"],
    "properties": {
        "version": {
            "type": "integer",
            "const": FORMAT_VERSION,
            "description": "File format version"
        },
        "subjects": {
            "type": "array",
            "items": {"type": "string", "minLength": 1},
            "description": "Subject identifiers, one per matrix column"
        },
        "categories": {
            "type": "array",
            "items": {"type": "string", "minLength": 1},
            "minItems": 1,
            "description": "Category labels; inferred in first-appearance order when omitted"
        },
        "sigma": {
            "type": "array",
            "items": {"type": "string", "minLength": 1},
            "description": "Category labels from lowest to highest rank"
        },
        "tests": {
            "type": "array",
            "minItems": 2,
            "items": {
                "type": "array",
                "items": {"type": "string", "minLength": 1}
            },
            "description": "One row per timestamp, one category label per subject"
        }
    },
    "additionalProperties": False
}

# Schema for layout files written by `layout --out`
LAYOUT_FILE_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["pis"],
    "properties": {
        "version": {"type": "integer", "const": FORMAT_VERSION},
        "pis": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "array",
                "items": {"type": "integer", "minimum": 0}
            },
            "description": "Subject indices per timestamp, lowest position first"
        },
        "report": {
            "type": "object",
            "required": ["total", "per_interval"],
            "properties": {
                "total": {"type": "integer", "minimum": 0},
                "strong": {"type": ["integer", "null"], "minimum": 0},
                "weak": {"type": ["integer", "null"], "minimum": 0},
                "per_interval": {
                    "type": "array",
                    "items": {"type": "integer", "minimum": 0}
                }
            }
        }
    },
    "additionalProperties": False
}

# Schema for learning-space files
LEARNING_SPACE_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["domain", "states"],
    "properties": {
        "version": {"type": "integer", "const": FORMAT_VERSION},
        "domain": {
            "type": "array",
            "items": {"type": "string", "minLength": 1},
            "uniqueItems": True
        },
        "states": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {"type": "string"},
                "uniqueItems": True
            }
        }
    },
    "additionalProperties": False
}

# Schema for config/config.json
CONFIG_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "properties": {
        "oracle": {
            "type": "object",
            "properties": {
                "max_layouts": {"type": "integer", "minimum": 1}
            }
        },
        "sigma": {
            "type": "object",
            "properties": {
                "auto_exhaustive_categories": {"type": "integer", "minimum": 0},
                "max_exhaustive_categories": {"type": "integer", "minimum": 1},
                "max_categories": {"type": "integer", "minimum": 1},
                "max_nodes": {"type": "integer", "minimum": 1}
            }
        },
        "learning_space": {
            "type": "object",
            "properties": {
                "max_states": {"type": "integer", "minimum": 1}
            }
        },
        "monte_carlo": {
            "type": "object",
            "properties": {
                "workers": {"type": "integer", "minimum": 1},
                "chunk_size": {"type": "integer", "minimum": 1}
            }
        },
        "render": {
            "type": "object",
            "properties": {
                "width": {"type": "integer", "minimum": 1},
                "height": {"type": "integer", "minimum": 1},
                "padding": {"type": "integer", "minimum": 0},
                "equal_bands": {"type": "boolean"},
                "smooth": {"type": "boolean"}
            }
        },
        "logging": {
            "type": "object",
            "properties": {
                "level": {
                    "type": "string",
                    "enum": ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
                },
                "file": {"type": ["string", "null"]},
                "max_bytes": {"type": "integer", "minimum": 0},
                "backup_count": {"type": "integer", "minimum": 0}
            }
        }
    }
}
