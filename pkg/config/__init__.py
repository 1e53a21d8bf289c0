"""
Configuration Management for the Flat Manifold Service
"""

from .settings import Settings, get_settings
from .constants import (
    ERROR_CODES,
    EXIT_CODES,
    COMMANDS,
    DEFAULTS
)

__all__ = [
    'Settings',
    'get_settings',
    'ERROR_CODES',
    'EXIT_CODES',
    'COMMANDS',
    'DEFAULTS'
]
