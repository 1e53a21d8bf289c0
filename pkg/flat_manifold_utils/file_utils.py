"""
File Utilities
==============

Reading input documents and writing reports, as JSON or as indented text.

Author: Flat Manifold Toolkit
Version: 1.0
"""

import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from .errors import InvalidDocument

logger = logging.getLogger(__name__)


def read_json(path: str) -> Dict[str, Any]:
    """
    Load a JSON document.

    Args:
        path: File path, or "-" for standard input

    Returns:
        Parsed JSON object
    """
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InvalidDocument(f"cannot read {path}: {e.strerror}", details={"path": path})

    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidDocument(
            f"{path} is not valid JSON",
            details={"path": path, "line": e.lineno, "column": e.colno},
        )
    if not isinstance(data, dict):
        raise InvalidDocument(f"{path} must hold a JSON object", details={"path": path})

    logger.debug(f"Loaded document: {path}")
    return data


def dump_json(data: Dict[str, Any], indent: int = 2) -> str:
    """Deterministic JSON text: insertion key order, trailing newline."""
    return json.dumps(data, indent=indent, ensure_ascii=False) + "\n"


def render_text(data: Any, indent: int = 0) -> str:
    """Indented plain-text rendering of a report."""
    lines: List[str] = []
    _render(data, indent, lines)
    return "\n".join(lines) + "\n"


def _scalar(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def _is_flat(value: List[Any]) -> bool:
    return all(not isinstance(v, (dict, list)) for v in value)


def _render(data: Any, indent: int, lines: List[str]) -> None:
    pad = "  " * indent
    if isinstance(data, dict):
        for key, value in data.items():
            if isinstance(value, dict):
                lines.append(f"{pad}{key}:")
                _render(value, indent + 1, lines)
            elif isinstance(value, list) and not _is_flat(value):
                lines.append(f"{pad}{key}:")
                for item in value:
                    if isinstance(item, list) and _is_flat(item):
                        lines.append(f"{pad}  ({', '.join(_scalar(v) for v in item)})")
                    else:
                        lines.append(f"{pad}  -")
                        _render(item, indent + 2, lines)
            elif isinstance(value, list):
                lines.append(f"{pad}{key}: ({', '.join(_scalar(v) for v in value)})")
            else:
                lines.append(f"{pad}{key}: {_scalar(value)}")
    elif isinstance(data, list):
        for item in data:
            _render(item, indent, lines)
    else:
        lines.append(f"{pad}{_scalar(data)}")


def write_report(data: Dict[str, Any], output: Optional[str] = None, fmt: str = "json") -> str:
    """
    Write a report to a file or standard output.

    Args:
        data: JSON-ready report
        output: Destination path; standard output when None or "-"
        fmt: "json" or "text"

    Returns:
        The text written
    """
    text = dump_json(data) if fmt == "json" else render_text(data)
    if output is None or output == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        Path(output).parent.mkdir(parents=True, exist_ok=True)
        Path(output).write_text(text, encoding="utf-8")
        logger.info(f"Report saved: {output}")
    return text
