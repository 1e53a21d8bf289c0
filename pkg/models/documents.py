"""
Input Documents
===============

JSON documents accepted by every command: Bieberbach groups, bare matrix
groups, sublattices and finite-group multiplication tables. Rationals travel
as reduced strings "p/q" (integers as "p"), never as floats; integers beyond
the 53-bit range travel as strings.
"""

from typing import Any, List, Optional, Sequence, Union

from pydantic import BaseModel, Field, field_serializer, field_validator, model_validator
from sympy import ImmutableMatrix, Integer, Rational

from flat_manifold_utils.bieberbach import BieberbachGroup, build
from flat_manifold_utils.corpus import GroupTable
from flat_manifold_utils.exactlin import column, from_columns, matrix
from flat_manifold_utils.invariant import DEFAULT_ORDER_BOUND, MatrixGroup, close_group
from flat_manifold_utils.lattice import Sublattice, saturate

JSON_SAFE_INT = 2 ** 53

WireInt = Union[int, str]


# ---------------------------------------------------------------------------
# Scalar codec
# ---------------------------------------------------------------------------

def rat_str(value: Any) -> str:
    """Reduced wire form of a rational."""
    r = Rational(value)
    return str(r.p) if r.q == 1 else f"{r.p}/{r.q}"


def parse_rat(value: Any) -> Rational:
    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError(f"rationals must be integers or 'p/q' strings, got {value!r}")
    if isinstance(value, int):
        return Integer(value)
    if isinstance(value, str):
        text = value.strip()
        num, _, den = text.partition("/")
        try:
            p = int(num)
            q = int(den) if den else 1
        except ValueError:
            raise ValueError(f"malformed rational {value!r}")
        if q == 0:
            raise ValueError(f"zero denominator in {value!r}")
        return Rational(p, q)
    raise ValueError(f"unsupported rational value {value!r}")


def parse_int(value: Any) -> int:
    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError(f"expected an integer, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value.strip())
        except ValueError:
            raise ValueError(f"malformed integer {value!r}")
    raise ValueError(f"unsupported integer value {value!r}")


def int_json(value: Any) -> WireInt:
    v = int(value)
    return v if abs(v) < JSON_SAFE_INT else str(v)


def rat_rows(m: ImmutableMatrix) -> List[List[str]]:
    return [[rat_str(m[i, j]) for j in range(m.cols)] for i in range(m.rows)]


def rat_list(v: ImmutableMatrix) -> List[str]:
    return [rat_str(x) for x in v]


def _normalize_rats(value: Any) -> Any:
    if isinstance(value, list):
        return [_normalize_rats(v) for v in value]
    return rat_str(parse_rat(value))


def _normalize_ints(value: Any) -> Any:
    if isinstance(value, list):
        return [_normalize_ints(v) for v in value]
    return parse_int(value)


# ---------------------------------------------------------------------------
# Documents
# ---------------------------------------------------------------------------

class MatrixGroupDocument(BaseModel):
    """A bare finite matrix group given by generators; extra keys are ignored."""

    n: int = Field(ge=1, description="Matrix size")
    point_generators: List[List[List[int]]] = Field(default_factory=list, description="Integer generator matrices, row-major")
    label: Optional[str] = Field(default=None, description="Free-form label")

    @field_validator("point_generators", mode="before")
    @classmethod
    def parse_generators(cls, v):
        return _normalize_ints(v)

    @model_validator(mode="after")
    def check_shapes(self):
        for k, g in enumerate(self.point_generators):
            if len(g) != self.n or any(len(row) != self.n for row in g):
                raise ValueError(f"point generator {k} is not {self.n}x{self.n}")
        return self

    @field_serializer("point_generators")
    def dump_generators(self, v):
        return [[[int_json(x) for x in row] for row in g] for g in v]

    def generator_matrices(self) -> List[ImmutableMatrix]:
        return [matrix(g) for g in self.point_generators]

    def to_holonomy(self, bound: int = DEFAULT_ORDER_BOUND) -> MatrixGroup:
        return close_group(self.generator_matrices(), bound, self.n)


class GroupDocument(MatrixGroupDocument):
    """A Bieberbach group: Gram matrix, point-group generators and their translational parts."""

    schema_version: str = Field(default="1.0", description="Document schema version")
    gram: List[List[str]] = Field(description="Gram matrix of the lattice basis, rational strings")
    vector_system_generators: List[List[str]] = Field(default_factory=list, description="Translational part of each point generator")

    @field_validator("gram", "vector_system_generators", mode="before")
    @classmethod
    def parse_rationals(cls, v):
        return _normalize_rats(v)

    @model_validator(mode="after")
    def check_dimensions(self):
        if len(self.gram) != self.n or any(len(row) != self.n for row in self.gram):
            raise ValueError(f"gram is not {self.n}x{self.n}")
        if len(self.vector_system_generators) != len(self.point_generators):
            raise ValueError("each point generator needs exactly one translational part")
        if any(len(v) != self.n for v in self.vector_system_generators):
            raise ValueError(f"translational parts must have length {self.n}")
        return self

    def gram_matrix(self) -> ImmutableMatrix:
        return matrix(self.gram)

    def to_group(self, bound: int = DEFAULT_ORDER_BOUND) -> BieberbachGroup:
        return build(
            self.gram_matrix(),
            self.generator_matrices(),
            [column(v) for v in self.vector_system_generators],
            bound,
        )

    @classmethod
    def from_group(cls, g: BieberbachGroup, label: Optional[str] = None, schema_version: str = "1.0") -> "GroupDocument":
        mats, vecs = g.generator_data()
        return cls.from_data(g.amb.gram, mats, vecs, label=label, schema_version=schema_version)

    @classmethod
    def from_data(
        cls,
        gram: ImmutableMatrix,
        mats: Sequence[ImmutableMatrix],
        vecs: Sequence[ImmutableMatrix],
        label: Optional[str] = None,
        schema_version: str = "1.0",
    ) -> "GroupDocument":
        return cls(
            schema_version=schema_version,
            n=gram.rows,
            gram=rat_rows(gram),
            point_generators=[[[int(x) for x in m.row(i)] for i in range(m.rows)] for m in mats],
            vector_system_generators=[rat_list(v) for v in vecs],
            label=label,
        )


class SubspaceDocument(BaseModel):
    """A sublattice given by integer column vectors; saturated on load."""

    n: int = Field(ge=1, description="Ambient dimension")
    basis: List[List[int]] = Field(default_factory=list, description="Basis columns, each a list of n integers")
    label: Optional[str] = Field(default=None, description="Free-form label")

    @field_validator("basis", mode="before")
    @classmethod
    def parse_basis(cls, v):
        return _normalize_ints(v)

    @model_validator(mode="after")
    def check_columns(self):
        if any(len(c) != self.n for c in self.basis):
            raise ValueError(f"basis columns must have length {self.n}")
        return self

    @field_serializer("basis")
    def dump_basis(self, v):
        return [[int_json(x) for x in c] for c in v]

    def to_sublattice(self) -> Sublattice:
        if not self.basis:
            return Sublattice.zero(self.n)
        return saturate(Sublattice(self.n, from_columns(self.n, [column(c) for c in self.basis])))

    @classmethod
    def from_sublattice(cls, s: Sublattice, label: Optional[str] = None) -> "SubspaceDocument":
        return cls(n=s.n, basis=s.as_lists(), label=label)


class GroupTableDocument(BaseModel):
    """Multiplication table of a finite group, 0-based, with a chosen subgroup."""

    table: List[List[int]] = Field(description="table[i][j] is the index of the product of elements i and j")
    subgroup: List[int] = Field(description="Element indices of the subgroup")
    label: Optional[str] = Field(default=None, description="Free-form label")

    @field_validator("subgroup")
    @classmethod
    def unique_members(cls, v):
        if len(set(v)) != len(v):
            raise ValueError("subgroup lists an element twice")
        return v

    def as_table(self) -> GroupTable:
        return self.table
