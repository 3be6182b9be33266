"""
Configuration module for bourbakikit
"""

from .settings import (
    get_config,
    validate_config,
    LOG_LEVEL,
    LOG_FORMAT,
    BOURBAKIKIT_THREADS,
    API_HOST,
    API_PORT
)

__all__ = [
    "get_config",
    "validate_config",
    "LOG_LEVEL",
    "LOG_FORMAT",
    "BOURBAKIKIT_THREADS",
    "API_HOST",
    "API_PORT"
]
