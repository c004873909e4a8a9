import pytest
import yaml

from zigzagtwist.core.complexes import projective
from zigzagtwist.core.twists import sigma
from zigzagtwist.gradings.factory import create_grading
from zigzagtwist.utils.serialize import (
    ResultLog,
    complex_from_document,
    complex_to_document,
    dumps,
    load_complex,
    load_document,
    loads,
    save_complex,
)


def test_complex_document(vec):
    c = sigma(1, 1, projective(2, 0, 0, 2, vec))
    document = complex_to_document(c)
    assert document["rank"] == 2
    assert document["grading_mode"] == "vec"
    assert len(document["summands"]) == 3
    assert set(document["summands"][0]) == {"uid", "vertex", "shift", "degree"}
    edge = document["differential"][0]
    assert set(edge) == {"src", "tgt", "entry"}
    assert set(edge["entry"][0]) == {"path", "numerator", "denominator"}
    assert [(e["src"], e["tgt"]) for e in document["differential"]] == sorted((e["src"], e["tgt"]) for e in document["differential"])
    assert complex_from_document(document) == c


def test_custom_orientation_survives_documents():
    grading = create_grading("custom", [{"edge": "x1_2", "up": False}])
    c = projective(1, 0, 0, 2, grading)
    assert complex_from_document(complex_to_document(c)).grading == grading


def test_malformed_documents():
    with pytest.raises(ValueError):
        complex_from_document({"rank": 2, "grading_mode": "tilde", "summands": [{"vertex": 1}]})
    with pytest.raises(ValueError):
        complex_from_document({"rank": 2, "grading_mode": "sideways"})


def test_dumps(tilde):
    document = complex_to_document(projective(1, 0, 0, 2, tilde))
    assert yaml.safe_load(dumps(document, "yaml")) == document
    assert loads(dumps(document)) == document
    assert dumps({"a": 1}) == '{\n  "a": 1\n}'
    with pytest.raises(ValueError):
        dumps(document, "xml")
    with pytest.raises(ValueError):
        loads("a: [1, 2")


def test_files(tmp_path, tilde):
    c = sigma(2, -1, projective(1, 0, 0, 2, tilde))
    save_complex(c, tmp_path / "c.yaml")
    save_complex(c, tmp_path / "c.json")
    assert load_complex(tmp_path / "c.yaml") == c
    assert load_complex(tmp_path / "c.json") == c
    with pytest.raises(ValueError):
        load_document(tmp_path / "missing.json")


def test_result_log(tmp_path):
    log = ResultLog(tmp_path / "runs" / "verify.jsonl")
    assert log.read() == []
    log.append({"suite": "algebra", "ok": True})
    log.append({"suite": "metric1", "ok": False})
    records = log.read()
    assert log.written == 2
    assert [r["suite"] for r in records] == ["algebra", "metric1"]
    assert all("timestamp" in r for r in records)


def test_rational_coefficients_survive_documents():
    document = {
        "rank": 2,
        "grading_mode": "tilde",
        "summands": [
            {"uid": 0, "vertex": 1, "shift": 0, "degree": 0},
            {"uid": 1, "vertex": 1, "shift": 1, "degree": 1},
        ],
        "differential": [{"src": 0, "tgt": 1, "entry": [{"path": "z1", "numerator": -3, "denominator": 2}]}],
    }
    c = complex_from_document(document)
    assert complex_to_document(c)["differential"] == document["differential"]
    with pytest.raises(ValueError):
        complex_from_document({**document, "differential": [{"from": 0, "to": 1, "entry": []}]})
