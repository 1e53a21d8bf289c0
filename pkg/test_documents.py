#!/usr/bin/env python3
"""
Test Wire Documents
===================

Verify the rational and integer codecs and the group, subspace and table
documents.
"""

import pytest
from pydantic import ValidationError
from sympy import Rational

from api.commands import parse_document
from flat_manifold_utils.corpus import klein_bottle, klein_product_fixtures
from flat_manifold_utils.errors import InvalidDocument
from models.documents import (
    GroupDocument,
    GroupTableDocument,
    MatrixGroupDocument,
    SubspaceDocument,
    int_json,
    parse_int,
    parse_rat,
    rat_str,
)


def test_rational_codec():
    assert rat_str(Rational(2, 4)) == "1/2"
    assert rat_str(Rational(-3, 1)) == "-3"
    assert parse_rat("6/-4") == Rational(-3, 2)
    assert parse_rat(7) == 7
    with pytest.raises(ValueError):
        parse_rat(0.5)
    with pytest.raises(ValueError):
        parse_rat(True)
    with pytest.raises(ValueError):
        parse_rat("1/0")


def test_integer_codec():
    assert int_json(5) == 5
    assert int_json(2 ** 60) == str(2 ** 60)
    assert parse_int(str(2 ** 60)) == 2 ** 60
    with pytest.raises(ValueError):
        parse_int(1.0)


def test_group_document_round_trip():
    fixtures = [klein_bottle(n)[0] for n in (2, 3, 4)] + [f.group for f in klein_product_fixtures()[::4]]
    for g in fixtures:
        doc = GroupDocument.from_group(g, label="corpus")
        again = GroupDocument.model_validate(doc.model_dump(mode="json")).to_group()
        assert again.amb.gram == g.amb.gram
        assert again.hol.elements == g.hol.elements
        assert again.vsys == g.vsys


def test_group_document_is_deterministic():
    group, _, _ = klein_bottle(3)
    first = GroupDocument.from_group(group).model_dump_json()
    second = GroupDocument.from_group(klein_bottle(3)[0]).model_dump_json()
    assert first == second


def test_group_document_shape_checks():
    with pytest.raises(ValidationError):
        GroupDocument(n=2, gram=[["1", "0"]], point_generators=[], vector_system_generators=[])
    with pytest.raises(ValidationError):
        GroupDocument(
            n=1, gram=[["1"]], point_generators=[[[-1]]], vector_system_generators=[]
        )
    with pytest.raises(ValidationError):
        GroupDocument(n=1, gram=[[0.5]], point_generators=[], vector_system_generators=[])


def test_parse_document_reports_invalid_document():
    with pytest.raises(InvalidDocument) as exc:
        parse_document(SubspaceDocument, {"n": 2, "basis": [[1, 2, 3]]}, "v.json")
    assert exc.value.code == "INVALID_DOCUMENT"
    assert exc.value.details["errors"]


def test_subspace_document_saturates():
    doc = SubspaceDocument(n=2, basis=[[2, 2]])
    assert doc.to_sublattice().as_lists() == [[1, 1]]
    assert SubspaceDocument(n=3, basis=[]).to_sublattice().rank == 0


def test_matrix_group_document_ignores_extra_keys():
    doc = MatrixGroupDocument.model_validate(
        {"n": 2, "point_generators": [[[0, -1], [1, 0]]], "gram": [["1", "0"], ["0", "1"]]}
    )
    assert doc.to_holonomy().order == 4


def test_group_table_document():
    with pytest.raises(ValidationError):
        GroupTableDocument(table=[[0, 1], [1, 0]], subgroup=[0, 0])
    doc = GroupTableDocument(table=[[0, 1], [1, 0]], subgroup=[0])
    assert doc.as_table() == [[0, 1], [1, 0]]
