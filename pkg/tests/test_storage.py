#!/usr/bin/env python3
"""
Unit tests for JSON documents and the workspace.
"""

import json

import numpy as np
import pytest

from src.errors import FileError, SchemaError, SystemMismatch, UnknownFixture
from src.fixtures.catalog import FIXTURES, emit_fixture, write_fixture
from src.storage import documents
from src.storage.workspace import Workspace, relative_ref, resolve_ref


class TestFixtureRoundTrip:
    """emit -> load -> re-emit is identical."""

    @pytest.mark.parametrize("name", sorted(FIXTURES))
    def test_round_trip(self, tmp_path, name):
        write_fixture(name, str(tmp_path))
        emitted = emit_fixture(name)
        ws = Workspace()
        system = ws.load_system(str(tmp_path / "system.json"))
        assert documents.encode_group(system.group) == emitted["group.json"]
        for filename, doc in emitted.items():
            path = str(tmp_path / filename)
            if doc["kind"] == "kernel":
                kernel = ws.load_kernel(path)
                again = documents.encode_kernel(kernel, "system.json")
                assert documents.dump_document(again) == documents.dump_document(
                    {k: v for k, v in doc.items() if k != "expected"})
            elif doc["kind"] == "povm":
                povm = ws.load_povm(path)
                assert documents.dump_document(documents.encode_povm(povm, "system.json")) == \
                    documents.dump_document(doc)
            elif doc["kind"] == "irreps":
                irreps = ws.load_irreps(path)
                assert documents.dump_document(documents.encode_irreps(irreps, "group.json")) == \
                    documents.dump_document(doc)

    def test_unknown_fixture(self):
        with pytest.raises(UnknownFixture):
            emit_fixture("z5-std")

    def test_output_is_deterministic(self):
        assert documents.dump_document(emit_fixture("s3-m2")) == documents.dump_document(emit_fixture("s3-m2"))


class TestSchema:
    """Schema errors carry JSON pointers."""

    def test_missing_format(self, tmp_path):
        path = tmp_path / "group.json"
        path.write_text(json.dumps({"order": 1, "mult": [[0]], "subgroup": [0]}))
        with pytest.raises(SchemaError) as exc:
            Workspace().load_group(str(path))
        assert exc.value.pointer == "/format"

    def test_bad_block_key(self, tmp_path):
        write_fixture("z2-std", str(tmp_path))
        doc = json.loads((tmp_path / "kernel-c0.json").read_text())
        doc["blocks"]["chi0;chi1"] = doc["blocks"].pop("chi0,chi1")
        (tmp_path / "bad.json").write_text(json.dumps(doc))
        with pytest.raises(SchemaError) as exc:
            Workspace().load_kernel(str(tmp_path / "bad.json"))
        assert exc.value.pointer == "/blocks/chi0;chi1"

    def test_bad_block_shape(self, tmp_path):
        write_fixture("z2-std", str(tmp_path))
        doc = json.loads((tmp_path / "kernel-c0.json").read_text())
        doc["blocks"]["chi0,chi0"] = [[[1, 0], [0, 0]]]
        (tmp_path / "bad.json").write_text(json.dumps(doc))
        with pytest.raises(SchemaError) as exc:
            Workspace().load_kernel(str(tmp_path / "bad.json"))
        assert exc.value.pointer == "/blocks/chi0,chi0"

    def test_non_finite_matrix(self):
        with pytest.raises(SchemaError) as exc:
            documents.read_matrix([[[float("nan"), 0.0]]], "/matrix")
        assert exc.value.pointer == "/matrix"
        with pytest.raises(SchemaError):
            documents.read_matrix([[1.0, float("inf")]], "/matrix")

    def test_wrong_kind(self, tmp_path):
        write_fixture("z2-std", str(tmp_path))
        with pytest.raises(SchemaError) as exc:
            Workspace().load_povm(str(tmp_path / "kernel-c0.json"))
        assert exc.value.pointer == "/kind"

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        with pytest.raises(SchemaError):
            documents.read_json(str(path))

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileError):
            documents.read_json(str(tmp_path / "absent.json"))


class TestWorkspace:
    """Reference resolution and caching."""

    def test_refs_resolve_relative_to_referrer(self, tmp_path):
        write_fixture("z3-std", str(tmp_path / "fx"))
        ws = Workspace()
        kernel = ws.load_kernel(str(tmp_path / "fx" / "kernel-gram.json"))
        assert kernel.system is ws.load_system(str(tmp_path / "fx" / "system.json"))
        assert len(ws.groups) == 1 and len(ws.irreps) == 1

    def test_relative_ref(self, tmp_path):
        target = tmp_path / "a" / "system.json"
        referrer = tmp_path / "b" / "out.json"
        ref = relative_ref(str(target), str(referrer))
        assert ref == "../a/system.json"
        assert resolve_ref(str(referrer), ref) == str(target)

    def test_system_mismatch(self, tmp_path):
        write_fixture("z2-std", str(tmp_path / "z2"))
        write_fixture("z3-std", str(tmp_path / "z3"))
        ws = Workspace()
        other = ws.load_system(str(tmp_path / "z3" / "system.json"))
        with pytest.raises(SystemMismatch):
            ws.load_kernel(str(tmp_path / "z2" / "kernel-c0.json"), system=other)

    def test_state_vector(self, tmp_path):
        write_fixture("z2-std", str(tmp_path))
        doc = {"format": 1, "kind": "state", "system-ref": "system.json", "vector": [[1, 0], [0, 0]]}
        (tmp_path / "state.json").write_text(json.dumps(doc))
        state, system = Workspace().load_operator(str(tmp_path / "state.json"), kind="state")
        np.testing.assert_allclose(state, np.diag([1.0, 0.0]))
        assert system.dim == 2
