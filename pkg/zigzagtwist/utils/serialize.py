"""
Serialization

Complexes, Hom tables and reports as plain documents, written as JSON or
YAML. Coefficients are exact rationals stored as numerator and denominator.
Summands are listed in the complex's canonical order and differential
entries by (src, tgt).

A complex document:

    rank: 2
    grading_mode: vec
    summands:
      - {uid: 0, vertex: 2, shift: 0, degree: 0}
      - {uid: 1, vertex: 1, shift: 0, degree: 1}
    differential:
      - src: 0
        tgt: 1
        entry: [{path: "x*1_2", numerator: 1, denominator: 1}]
"""

import json
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path
from typing import Any

import yaml

from ..algebra.element import AlgebraElement
from ..algebra.paths import BasisPath
from ..core.complexes import Complex, Summand, validate
from ..gradings.factory import grading_from_document
from .logger import get_logger

logger = get_logger("serialize")


def element_to_document(elt: AlgebraElement) -> list[dict[str, Any]]:
    return [
        {"path": path.name, "numerator": coeff.numerator, "denominator": coeff.denominator}
        for path, coeff in elt
    ]


def element_from_document(terms: list[dict[str, Any]]) -> AlgebraElement:
    return AlgebraElement.from_terms(
        (BasisPath.parse(str(t["path"])), Fraction(int(t["numerator"]), int(t.get("denominator", 1))))
        for t in terms
    )


def complex_to_document(complex_: Complex) -> dict[str, Any]:
    document: dict[str, Any] = {"rank": complex_.rank, **complex_.grading.describe()}
    document["summands"] = [
        {"uid": s.uid, "vertex": s.vertex, "shift": s.shift, "degree": s.degree} for s in complex_.summands
    ]
    document["differential"] = [
        {"src": src, "tgt": tgt, "entry": element_to_document(elt)} for src, tgt, elt in complex_.differential
    ]
    return document


def complex_from_document(document: dict[str, Any]) -> Complex:
    """
    Build and validate a complex from its document.

    Raises:
        ValueError: On missing keys or malformed entries
        InvalidComplexError: If the complex violates an invariant
    """
    try:
        grading = grading_from_document(document)
        summands = [
            Summand(int(s["degree"]), int(s["vertex"]), int(s.get("shift", 0)), int(s["uid"]))
            for s in document.get("summands") or []
        ]
        entries = [
            (int(e["src"]), int(e["tgt"]), element_from_document(e["entry"]))
            for e in document.get("differential") or []
        ]
        complex_ = Complex.build(int(document["rank"]), grading, summands, entries)
    except (KeyError, TypeError, ZeroDivisionError) as exc:
        raise ValueError(f"Malformed complex document: {exc}") from exc
    validate(complex_)
    return complex_


def dumps(document: Any, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(document, indent=2, sort_keys=False)
    if fmt == "yaml":
        return yaml.safe_dump(document, sort_keys=False)
    raise ValueError(f"Unknown format: {fmt}")


def loads(text: str) -> Any:
    """Parse JSON or YAML text (YAML is a superset of JSON)."""
    try:
        return yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise ValueError(f"Unreadable document: {exc}") from exc


def load_document(path: str | Path) -> Any:
    path = Path(path)
    if not path.exists():
        raise ValueError(f"No such file: {path}")
    return loads(path.read_text(encoding="utf-8"))


def load_complex(path: str | Path) -> Complex:
    return complex_from_document(load_document(path))


def save_complex(complex_: Complex, path: str | Path) -> None:
    path = Path(path)
    fmt = "yaml" if path.suffix in (".yaml", ".yml") else "json"
    path.write_text(dumps(complex_to_document(complex_), fmt), encoding="utf-8")


class ResultLog:
    """
    Appends verification records to a JSONL file, one line per suite run.
    """

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self._written = 0

    def append(self, record: dict[str, Any]) -> None:
        stamped = {"timestamp": datetime.now(timezone.utc).isoformat(), **record}
        with open(self.path, "a", encoding="utf-8") as f:
            f.write(json.dumps(stamped) + "\n")
        self._written += 1

    def read(self) -> list[dict[str, Any]]:
        if not self.path.exists():
            return []
        with open(self.path, "r", encoding="utf-8") as f:
            return [json.loads(line) for line in f if line.strip()]

    @property
    def written(self) -> int:
        return self._written
