"""The equivalence-class data of a quasihereditary algebra.

Matrix conventions (all indexed by position in ``poset.labels``):

* ``delta[i][j] = [Delta_i : L_j]``  (row = standard module, column = simple)
* ``nabla[i][j] = [Nabla_i : L_j]``
* ``hom[j][i] = dim Hom(Delta_j, Delta_i)``  (row = source)
* ``simple_dims[i] = dim L_i``
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

import jsonschema

from .errors import DimensionMismatch, InvalidData, SchemaError
from .exactla import IntMat, transpose
from .poset import Poset, PosetSpec, build_poset

JSON_SAFE_MAX = 2**53 - 1

_INTEGER = {
    "anyOf": [
        {"type": "integer"},
        {"type": "string", "pattern": r"^-?[0-9]+$"},
    ]
}
_MATRIX = {"type": "array", "items": {"type": "array", "items": _INTEGER}}

QHDATA_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "properties": {
        "labels": {
            "type": "array",
            "items": {"type": "string"},
            "minItems": 1,
            "uniqueItems": True,
        },
        "order": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {"type": "string"},
                "minItems": 2,
                "maxItems": 2,
            },
        },
        "delta": _MATRIX,
        "nabla": _MATRIX,
        "hom": _MATRIX,
        "simple_dims": {"type": "array", "items": _INTEGER},
    },
    "required": ["labels", "order", "delta", "nabla", "hom", "simple_dims"],
    "additionalProperties": False,
}

POSET_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "properties": {
        "labels": QHDATA_SCHEMA["properties"]["labels"],
        "order": QHDATA_SCHEMA["properties"]["order"],
    },
    "required": ["labels"],
    "additionalProperties": False,
}


def _as_matrix(rows) -> IntMat:
    return tuple(tuple(int(x) for x in row) for row in rows)


@dataclass(frozen=True)
class QhData:
    poset: Poset
    delta: IntMat
    nabla: IntMat
    hom: IntMat
    simple_dims: tuple[int, ...]

    def __init__(self, poset: Poset, delta, nabla, hom, simple_dims):
        object.__setattr__(self, "poset", poset)
        object.__setattr__(self, "delta", _as_matrix(delta))
        object.__setattr__(self, "nabla", _as_matrix(nabla))
        object.__setattr__(self, "hom", _as_matrix(hom))
        object.__setattr__(self, "simple_dims", tuple(int(x) for x in simple_dims))

    @property
    def labels(self) -> tuple[str, ...]:
        return self.poset.labels

    def __len__(self):
        return len(self.poset)

    def replace(self, **changes) -> "QhData":
        fields = dict(
            poset=self.poset,
            delta=self.delta,
            nabla=self.nabla,
            hom=self.hom,
            simple_dims=self.simple_dims,
        )
        fields.update(changes)
        return QhData(**fields)


@dataclass(frozen=True)
class Violation:
    invariant: str
    indices: tuple[str, ...]
    value: int

    def __str__(self):
        where = ",".join(self.indices)
        return f"{self.invariant} at ({where}): value {self.value}"

    def to_json(self) -> dict:
        return {
            "invariant": self.invariant,
            "indices": list(self.indices),
            "value": encode_int(self.value),
        }


def check_shapes(data: QhData) -> None:
    n = len(data.poset)
    for name in ("delta", "nabla", "hom"):
        mat = getattr(data, name)
        if len(mat) != n or any(len(row) != n for row in mat):
            raise DimensionMismatch(f"{name} must be {n}x{n}")
    if len(data.simple_dims) != n:
        raise DimensionMismatch(f"simple_dims must have length {n}")


def validate(data: QhData) -> list[Violation]:
    """Collect every violated invariant; an empty list means the data is usable."""
    check_shapes(data)
    p = data.poset
    lab = p.labels
    n = len(p)
    out: list[Violation] = []
    for name, mat in (("delta", data.delta), ("nabla", data.nabla)):
        for i in range(n):
            for j in range(n):
                x = mat[i][j]
                if i == j:
                    if x != 1:
                        out.append(Violation(f"{name}_diagonal_one", (lab[i], lab[j]), x))
                elif x < 0:
                    out.append(Violation(f"{name}_nonnegative", (lab[i], lab[j]), x))
                elif x != 0 and not p.le(j, i):
                    out.append(Violation(f"{name}_outside_order", (lab[i], lab[j]), x))
    for j in range(n):
        for i in range(n):
            x = data.hom[j][i]
            if i == j:
                if x != 1:
                    out.append(Violation("hom_diagonal_one", (lab[j], lab[i]), x))
            elif x < 0:
                out.append(Violation("hom_nonnegative", (lab[j], lab[i]), x))
            elif x != 0 and not p.le(j, i):
                out.append(Violation("hom_outside_order", (lab[j], lab[i]), x))
            elif x > data.delta[i][j]:
                out.append(Violation("hom_exceeds_delta", (lab[j], lab[i]), x))
    for i, d in enumerate(data.simple_dims):
        if d < 1:
            out.append(Violation("simple_dim_positive", (lab[i],), d))
    return out


def require_valid(data: QhData) -> None:
    violations = validate(data)
    if violations:
        raise InvalidData(violations)


@dataclass(frozen=True)
class FiltrationMatrices:
    """``f_delta[k][j] = (P_k : Delta_j)`` and ``f_nabla[k][j] = (Q_k : Nabla_j)``."""

    f_delta: IntMat
    f_nabla: IntMat


def filtration_matrices(data: QhData) -> FiltrationMatrices:
    # BGG reciprocity
    return FiltrationMatrices(f_delta=transpose(data.nabla), f_nabla=transpose(data.delta))


# -- JSON ---------------------------------------------------------------------


def encode_int(x: int):
    return x if -JSON_SAFE_MAX <= x <= JSON_SAFE_MAX else str(x)


def encode_matrix(mat) -> list:
    return [[encode_int(x) for x in row] for row in mat]


def to_json(data: QhData) -> dict:
    return {
        "labels": list(data.labels),
        "order": [list(pair) for pair in data.poset.covers()],
        "delta": encode_matrix(data.delta),
        "nabla": encode_matrix(data.nabla),
        "hom": encode_matrix(data.hom),
        "simple_dims": [encode_int(x) for x in data.simple_dims],
    }


def dumps(data: QhData, **kwargs) -> str:
    return json.dumps(to_json(data), **kwargs)


def _check_schema(doc: Any, schema: dict) -> None:
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as exc:
        path = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise SchemaError(f"{path}: {exc.message}") from None


def from_json(doc: Any) -> QhData:
    _check_schema(doc, QHDATA_SCHEMA)
    poset = build_poset(PosetSpec(doc["labels"], doc["order"]))
    data = QhData(
        poset=poset,
        delta=doc["delta"],
        nabla=doc["nabla"],
        hom=doc["hom"],
        simple_dims=doc["simple_dims"],
    )
    check_shapes(data)
    return data


def loads(text: str) -> QhData:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from None
    return from_json(doc)


def poset_spec_from_json(doc: Any) -> PosetSpec:
    _check_schema(doc, POSET_SCHEMA)
    return PosetSpec(doc["labels"], doc.get("order", []))
