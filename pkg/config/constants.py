"""
Constants for the Flat Manifold Service
"""

# Error codes
ERROR_CODES = {
    "INTERNAL_ERROR": "An internal error occurred",
    "DIMENSION_MISMATCH": "Inputs have inconsistent dimensions",
    "CONTAINMENT_VIOLATION": "Sublattice is not contained in the enclosing lattice",
    "NOT_SATURATED": "Sublattice is not saturated",
    "INVALID_GRAM": "Gram matrix is not symmetric positive definite",
    "GROUP_NOT_FINITE": "Group closure exceeded the order bound",
    "NOT_UNIMODULAR": "Matrix is not an integer matrix of determinant +1 or -1",
    "NOT_INVARIANT": "Subspace is not invariant under the group",
    "NOT_ISOMETRIC": "Point-group element does not preserve the Gram matrix",
    "INCONSISTENT_VECTOR_SYSTEM": "Vector system violates the cocycle condition",
    "HAS_TORSION": "Group contains a nontrivial element of finite order",
    "INVALID_SUBSPACE": "Subspace is zero, full or otherwise unusable here",
    "SEARCH_EXHAUSTED": "Generic coset search hit its candidate limit",
    "NOT_COMPLEMENTARY": "Subspaces are not complementary",
    "NOT_GENERIC": "Coset is not generic",
    "INVALID_GROUP_TABLE": "Group multiplication table or subgroup is invalid",
    "INVALID_DOCUMENT": "Input document is malformed",
    "ORACLE_MISMATCH": "Counting formula disagrees with brute-force enumeration",
}

# Process exit codes
EXIT_CODES = {
    "ok": 0,
    "validation": 2,
    "oracle_mismatch": 3,
}

# CLI subcommands
COMMANDS = [
    "validate",
    "reduce",
    "foliate",
    "intersect",
    "klein",
    "regular-rep",
    "decompose",
    "complement",
    "serve",
]

# Default configuration values
DEFAULTS = {
    "group_order_bound": 100000,
    "reduce_norm_bound": 3,
    "generic_search_limit": 10000,
    "output_format": "json",
    "schema_version": "1.0",
}
