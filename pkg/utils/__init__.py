"""
Shared utilities for the Flat Manifold Service
"""

from .logger import setup_logger

__all__ = ["setup_logger"]
