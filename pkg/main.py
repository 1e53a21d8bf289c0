#!/usr/bin/env python3
"""
Flat Manifold Service - Command Line Entry Point

Batch commands over JSON documents. Reports go to stdout (or --output), logs
to stderr. Exit codes: 0 success, 2 invalid input or failed validation,
3 a counting formula disagreed with brute-force enumeration.
"""

import argparse
import logging
import sys
from typing import Any, Callable, Dict, List, Optional

import uvicorn

from api import commands
from config.constants import EXIT_CODES
from config.settings import Settings, get_settings
from flat_manifold_utils.errors import FlatManifoldError, InvalidDocument, OracleMismatch
from flat_manifold_utils.file_utils import read_json, write_report
from models.documents import GroupDocument, GroupTableDocument, MatrixGroupDocument, SubspaceDocument
from models.reports import ErrorResponse
from utils.logger import setup_logger

logger = logging.getLogger("flat_manifold.cli")


def _load(model, path: str):
    return commands.parse_document(model, read_json(path), path)


def _split(text: str) -> List[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


def _bound(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"bound must be non-negative, got {value}")
    return value


def _parse_subgroup(text: str) -> List[int]:
    try:
        return [int(x) for x in _split(text)]
    except ValueError:
        raise InvalidDocument(f"--subgroup must be comma-separated element indices, got {text!r}")


# ---------------------------------------------------------------------------
# Subcommand handlers
# ---------------------------------------------------------------------------

def run_validate(args, settings: Settings):
    return commands.cmd_validate(_load(GroupDocument, args.group), settings)


def run_reduce(args, settings: Settings):
    return commands.cmd_reduce(read_json(args.group), settings, args.bound, args.matrices_only)


def run_foliate(args, settings: Settings):
    cosets = [_split(c) for c in args.coset]
    return commands.cmd_foliate(
        _load(GroupDocument, args.group), _load(SubspaceDocument, args.subspace), cosets, settings
    )


def run_intersect(args, settings: Settings):
    return commands.cmd_intersect(
        _load(GroupDocument, args.group),
        _load(SubspaceDocument, args.v1),
        _load(SubspaceDocument, args.v2),
        args.oracle,
        settings,
    )


def run_klein(args, settings: Settings):
    return commands.cmd_klein(args.n, settings)


def run_regular_rep(args, settings: Settings):
    raw = read_json(args.table)
    if args.subgroup is not None:
        raw = {**raw, "subgroup": _parse_subgroup(args.subgroup)}
    return commands.cmd_regular_rep(commands.parse_document(GroupTableDocument, raw, args.table), settings)


def run_decompose(args, settings: Settings):
    subspace = _load(SubspaceDocument, args.subspace) if args.subspace else None
    return commands.cmd_decompose(_load(MatrixGroupDocument, args.group), subspace, settings, args.bound)


def run_complement(args, settings: Settings):
    return commands.cmd_complement(
        _load(MatrixGroupDocument, args.group), _load(SubspaceDocument, args.subspace), settings
    )


HANDLERS: Dict[str, Callable[[argparse.Namespace, Settings], Any]] = {
    "validate": run_validate,
    "reduce": run_reduce,
    "foliate": run_foliate,
    "intersect": run_intersect,
    "klein": run_klein,
    "regular-rep": run_regular_rep,
    "decompose": run_decompose,
    "complement": run_complement,
}


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flatman",
        description="Exact computations for Bieberbach groups and their compact-leaf foliations",
    )
    parser.add_argument("--format", choices=["json", "text"], default=settings.default_output_format,
                        help="Report format")
    parser.add_argument("--output", default=None, help="Write the report to this path instead of stdout")
    parser.add_argument("--log-level", default=None, help="Logging level (DEBUG, INFO, WARNING, ...)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="Validate a Bieberbach group document")
    p.add_argument("group", help="Group document (path or -)")

    p = sub.add_parser("reduce", help="Search for a proper invariant subspace of the holonomy")
    p.add_argument("group", help="Group document (path or -)")
    p.add_argument("--bound", type=_bound, default=None,
                   help="Sup-norm bound of the orbit-span search; 0 skips the orbit stage")
    p.add_argument("--matrices-only", action="store_true",
                   help="Read the document as a bare matrix group; skip Bieberbach validation")

    p = sub.add_parser("foliate", help="Foliation report for an invariant subspace")
    p.add_argument("group", help="Group document")
    p.add_argument("subspace", help="Subspace document")
    p.add_argument("--coset", action="append", default=[],
                   help="Rational point, comma-separated (e.g. 1/2,0,0); repeatable")

    p = sub.add_parser("intersect", help="Intersection numbers of two complementary invariant subspaces")
    p.add_argument("group", help="Group document")
    p.add_argument("v1", help="First subspace document")
    p.add_argument("v2", help="Second subspace document")
    p.add_argument("--oracle", action="store_true", help="Also run both brute-force counts")

    p = sub.add_parser("klein", help="Emit the generalized Klein bottle documents")
    p.add_argument("--n", type=int, required=True, help="Dimension (at least 2)")

    p = sub.add_parser("regular-rep", help="Regular representation of a finite group with coset subspaces")
    p.add_argument("table", help="Group table document")
    p.add_argument("--subgroup", default=None, help="Comma-separated subgroup indices, overriding the document")

    p = sub.add_parser("decompose", help="Split a subspace into invariant summands")
    p.add_argument("group", help="Group or bare matrix group document")
    p.add_argument("subspace", nargs="?", default=None, help="Subspace document (default: the full lattice)")
    p.add_argument("--bound", type=_bound, default=None,
                   help="Sup-norm bound of the orbit-span search; 0 skips the orbit stage")

    p = sub.add_parser("complement", help="Invariant complement of an invariant subspace")
    p.add_argument("group", help="Group or bare matrix group document")
    p.add_argument("subspace", help="Subspace document")

    p = sub.add_parser("serve", help="Run the HTTP service")
    p.add_argument("--host", default=settings.host, help="Host to bind to")
    p.add_argument("--port", type=int, default=settings.port, help="Port to bind to")
    p.add_argument("--reload", action="store_true", help="Enable auto-reload")

    return parser


def serve(args, settings: Settings) -> int:
    logger.info(f"Starting server on {args.host}:{args.port}")
    logger.info(f"Debug mode: {settings.debug_mode}")
    uvicorn.run(
        "api.routes:app",
        host=args.host,
        port=args.port,
        reload=args.reload or settings.debug_mode,
    )
    return EXIT_CODES["ok"]


def run(argv: Optional[List[str]] = None, settings: Optional[Settings] = None) -> int:
    """Parse arguments, run one command and return the process exit code."""
    settings = settings or get_settings()
    args = build_parser(settings).parse_args(argv)

    level = args.log_level or settings.log_level
    for name in ("flat_manifold", "flat_manifold_utils", "api"):
        setup_logger(name, level=level, json_format=settings.log_json)

    if args.command == "serve":
        return serve(args, settings)

    try:
        report = HANDLERS[args.command](args, settings)
    except FlatManifoldError as e:
        logger.error(f"{args.command} failed: {e.code}: {e.message}")
        write_report(ErrorResponse(**e.to_payload()).model_dump(mode="json"), None, args.format)
        if isinstance(e, OracleMismatch):
            return EXIT_CODES["oracle_mismatch"]
        return EXIT_CODES["validation"]

    write_report(report.model_dump(mode="json"), args.output, args.format)
    return EXIT_CODES["ok"]


if __name__ == "__main__":
    sys.exit(run())
