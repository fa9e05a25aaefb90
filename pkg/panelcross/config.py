"""
panelcross configuration loader

Priority: environment variables > config.json > built-in defaults.
The merged result is validated against CONFIG_SCHEMA and cached until
reload_config() is called.
"""
import copy
import json
import logging
import os
from pathlib import Path
from typing import Any, Dict

from .errors import ConfigError
from .schemas.validator import get_validator

logger = logging.getLogger(__name__)

DEFAULT_CONFIG: Dict[str, Any] = {
    'oracle': {
        'max_layouts': 10_000_000,
    },
    'sigma': {
        'auto_exhaustive_categories': 6,
        'max_exhaustive_categories': 10,
        'max_categories': 14,
        'max_nodes': 50_000_000,
    },
    'learning_space': {
        'max_states': 4096,
    },
    'monte_carlo': {
        'workers': 1,
        'chunk_size': 1000,
    },
    'render': {
        'width': 800,
        'height': 480,
        'padding': 40,
        'equal_bands': False,
        'smooth': False,
    },
    'logging': {
        'level': 'WARNING',
        'file': None,
        'max_bytes': 10485760,
        'backup_count': 5,
    },
}

# (env var, section, key, converter)
ENV_OVERRIDES = [
    ('PANELCROSS_LOG_LEVEL', 'logging', 'level', lambda v: v.upper()),
    ('PANELCROSS_LOG_FILE', 'logging', 'file', str),
    ('PANELCROSS_ORACLE_MAX_LAYOUTS', 'oracle', 'max_layouts', int),
    ('PANELCROSS_SIGMA_MAX_CATEGORIES', 'sigma', 'max_categories', int),
    ('PANELCROSS_MC_WORKERS', 'monte_carlo', 'workers', int),
]

# Global cache
_config_cache = None


def get_config_dir() -> Path:
    """Configuration directory: $PANELCROSS_CONFIG_DIR, else <repo>/config."""
    if os.getenv('PANELCROSS_CONFIG_DIR'):
        return Path(os.getenv('PANELCROSS_CONFIG_DIR'))
    return Path(__file__).resolve().parent.parent / 'config'


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> None:
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(base.get(key), dict):
            _merge(base[key], value)
        else:
            if key not in base:
                logger.warning(f"Unknown config key ignored: {key}")
                continue
            base[key] = value


def get_config() -> Dict[str, Any]:
    """Return the merged configuration (cached)."""
    global _config_cache

    if _config_cache is not None:
        return _config_cache

    config = copy.deepcopy(DEFAULT_CONFIG)

    # --- 1. config.json ---
    config_path = get_config_dir() / 'config.json'
    if config_path.exists():
        try:
            with open(config_path, 'r', encoding='utf-8') as f:
                data = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigError(f"Cannot read {config_path}: {e}") from e
        ok, err = get_validator().validate_config(data)
        if not ok:
            raise ConfigError(f"Invalid {config_path}: {err}")
        _merge(config, data)

    # --- 2. environment overrides ---
    for env_name, section, key, convert in ENV_OVERRIDES:
        raw = os.getenv(env_name)
        if not raw:
            continue
        try:
            config[section][key] = convert(raw)
        except ValueError as e:
            raise ConfigError(f"{env_name}={raw!r}: {e}") from e

    ok, err = get_validator().validate_config(config)
    if not ok:
        raise ConfigError(f"Invalid configuration: {err}")

    _config_cache = config
    return config


def get_setting(section: str, key: str) -> Any:
    return get_config()[section][key]


def reload_config() -> Dict[str, Any]:
    global _config_cache
    _config_cache = None
    return get_config()
