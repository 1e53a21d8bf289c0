"""
Shared pytest fixtures: settings, corpus groups and their JSON documents.
"""

import json
from pathlib import Path

import pytest

from config.settings import Settings
from flat_manifold_utils.corpus import klein_bottle, torus
from flat_manifold_utils.exactlin import identity
from models.documents import GroupDocument, SubspaceDocument


@pytest.fixture
def settings() -> Settings:
    return Settings(_env_file=None)


@pytest.fixture(scope="session")
def klein2():
    return klein_bottle(2)


@pytest.fixture(scope="session")
def klein3():
    return klein_bottle(3)


@pytest.fixture(scope="session")
def torus2():
    return torus(identity(2))


@pytest.fixture
def write_json(tmp_path: Path):
    """Write a JSON-ready object to a file under tmp_path and return its path as a string."""

    def _write(name: str, data) -> str:
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return str(path)

    return _write


@pytest.fixture
def klein2_files(klein2, write_json):
    group, v_const, v_zeroavg = klein2
    return {
        "group": write_json("klein2.json", GroupDocument.from_group(group, label="klein-2").model_dump(mode="json")),
        "v1": write_json("v1.json", SubspaceDocument.from_sublattice(v_const).model_dump(mode="json")),
        "v2": write_json("v2.json", SubspaceDocument.from_sublattice(v_zeroavg).model_dump(mode="json")),
    }
