"""
API layer: command dispatch shared by the CLI and the HTTP surface
"""

from .commands import (
    cmd_complement,
    cmd_decompose,
    cmd_foliate,
    cmd_intersect,
    cmd_klein,
    cmd_reduce,
    cmd_regular_rep,
    cmd_validate,
    parse_document,
)

__all__ = [
    "cmd_validate",
    "cmd_reduce",
    "cmd_foliate",
    "cmd_intersect",
    "cmd_klein",
    "cmd_regular_rep",
    "cmd_decompose",
    "cmd_complement",
    "parse_document",
]
