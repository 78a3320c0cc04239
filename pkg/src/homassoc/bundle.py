"""The JSON bundle format.

A bundle holds one algebra and any structures living on it.  Index
conventions match the in-memory arrays:

- ``mul[i][j][k]``: coefficient of e_k in e_i . e_j
- ``alpha[i][j]`` (and R, S): coefficient of e_i in alpha(e_j)
- ``r[i][j]``: coefficient of e_i (x) e_j
- ``coproduct[i][j][k]``: coefficient of e_j (x) e_k in Delta(e_i)
- ``T`` (n^2 x n^2) and ``tau`` (n^3 x n^3): row-major basis tuples

Scalars are strings (``"3"``, ``"-1/2"``).  Canonical files have sorted keys,
one top-level key per line, and compact values.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field, fields
from pathlib import Path

import jsonschema
import numpy as np

from .errors import DimMismatch, MissingSection, ParseError, SchemaError, ShapeError
from .field import FieldSpec
from .structures import HomAlgebra, HomCoalgebra
from .tensor import BilinearMap, Coproduct, LinearMap, Tensor2, TwistorMap

FORMAT_VERSION = 1

# name -> rank; the shape is (dim,) * rank except for T and tau
ARRAY_FIELDS = {
    "mul": 3,
    "alpha": 2,
    "R": 2,
    "S": 2,
    "r": 2,
    "s": 2,
    "coproduct": 3,
    "delta1": 3,
    "delta2": 3,
    "prec": 3,
    "succ": 3,
    "diamond": 3,
    "partial1": 3,
    "partial2": 3,
    "T": 2,
    "tau": 2,
}

_SCALAR = {"type": "string"}


def _nested(rank: int) -> dict:
    node = _SCALAR
    for _ in range(rank):
        node = {"type": "array", "items": node}
    return node


SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["field", "dim", "mul", "alpha"],
    "additionalProperties": False,
    "properties": {
        "format": {"type": "integer", "const": FORMAT_VERSION},
        "name": {"type": "string"},
        "provenance": {"type": "string"},
        "field": {"type": "string"},
        "dim": {"type": "integer", "minimum": 1, "maximum": 4},
        "basis": {"type": "array", "items": {"type": "string", "minLength": 1}},
        "n_power": {"type": "integer", "minimum": 0},
        "lambda": _SCALAR,
        "declared": {"type": "array", "items": {"type": "string"}, "uniqueItems": True},
        **{name: _nested(rank) for name, rank in ARRAY_FIELDS.items()},
    },
}


def _pointer(path) -> str:
    return "/" + "/".join(str(p) for p in path) if path else "/"


@dataclass(eq=False)
class Bundle:
    """An algebra with optional companion structures, all over one field."""

    field: FieldSpec
    dim: int
    mul: np.ndarray
    alpha: np.ndarray
    basis: tuple[str, ...] = ()
    name: str | None = None
    provenance: str | None = None
    R: np.ndarray | None = None
    S: np.ndarray | None = None
    r: np.ndarray | None = None
    s: np.ndarray | None = None
    coproduct: np.ndarray | None = None
    delta1: np.ndarray | None = None
    delta2: np.ndarray | None = None
    prec: np.ndarray | None = None
    succ: np.ndarray | None = None
    diamond: np.ndarray | None = None
    partial1: np.ndarray | None = None
    partial2: np.ndarray | None = None
    T: np.ndarray | None = None
    tau: np.ndarray | None = None
    n_power: int | None = None
    lam: object = None
    declared: tuple[str, ...] = dc_field(default_factory=tuple)

    def __post_init__(self):
        if not self.basis:
            self.basis = tuple(f"e{i + 1}" for i in range(self.dim))
        self.basis = tuple(self.basis)
        self.declared = tuple(self.declared)
        for name in ARRAY_FIELDS:
            value = getattr(self, name)
            if value is not None:
                arr = self.field.array(value)
                if arr.shape != self.expected_shape(name):
                    raise DimMismatch(f"{name} has shape {arr.shape}, expected {self.expected_shape(name)}")
                setattr(self, name, arr)
        if self.lam is not None:
            self.lam = self.field.coerce(self.lam)

    def expected_shape(self, name: str) -> tuple[int, ...]:
        n = self.dim
        if name == "T":
            return (n * n, n * n)
        if name == "tau":
            return (n**3, n**3)
        return (n,) * ARRAY_FIELDS[name]

    # -- typed views ------------------------------------------------------

    def require(self, *names: str) -> None:
        missing = [n for n in names if (self.lam if n == "lambda" else getattr(self, n)) is None]
        if missing:
            raise MissingSection(f"bundle lacks required section(s) {', '.join(missing)}", "/" + missing[0])

    def algebra(self) -> HomAlgebra:
        f = self.field
        return HomAlgebra(f, BilinearMap(f, self.mul, trusted=True), LinearMap(f, self.alpha, trusted=True), self.basis)

    def linear(self, name: str) -> LinearMap:
        self.require(name)
        return LinearMap(self.field, getattr(self, name), trusted=True)

    def bilinear(self, name: str) -> BilinearMap:
        self.require(name)
        return BilinearMap(self.field, getattr(self, name), trusted=True)

    def tensor(self, name: str) -> Tensor2:
        self.require(name)
        return Tensor2(self.field, getattr(self, name), trusted=True)

    def coproduct_map(self, name: str = "coproduct") -> Coproduct:
        self.require(name)
        return Coproduct(self.field, getattr(self, name), trusted=True)

    def coalgebra(self) -> HomCoalgebra:
        return HomCoalgebra(self.field, self.coproduct_map(), LinearMap(self.field, self.alpha, trusted=True))

    def twistor(self) -> TwistorMap:
        self.require("T")
        return TwistorMap(self.field, self.T, self.tau)

    def replace(self, **changes) -> Bundle:
        """A copy with some sections changed; ``None`` removes a section."""
        data = {f.name: getattr(self, f.name) for f in fields(self)}
        data.update(changes)
        return Bundle(**data)

    def with_field(self, field: FieldSpec) -> Bundle:
        """The same integer/rational data reinterpreted over another field."""
        data = {f.name: getattr(self, f.name) for f in fields(self)}
        data["field"] = field
        for name in ARRAY_FIELDS:
            if data[name] is not None:
                data[name] = field.array(data[name])
        if data["lam"] is not None:
            data["lam"] = field.coerce(data["lam"])
        return Bundle(**data)

    def __eq__(self, other):
        if not isinstance(other, Bundle):
            return NotImplemented
        return self.to_json() == other.to_json()

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        f = self.field
        fmt = np.frompyfunc(f.format_raw, 1, 1)
        doc = {"format": FORMAT_VERSION, "field": str(f), "dim": self.dim, "basis": list(self.basis)}
        for key in ("name", "provenance", "n_power"):
            if getattr(self, key) is not None:
                doc[key] = getattr(self, key)
        if self.lam is not None:
            doc["lambda"] = f.format_raw(self.lam)
        if self.declared:
            doc["declared"] = list(self.declared)
        for name in ARRAY_FIELDS:
            value = getattr(self, name)
            if value is not None:
                doc[name] = fmt(value).tolist() if value.size else value.tolist()
        return doc

    @classmethod
    def from_json(cls, doc) -> Bundle:
        validator = jsonschema.Draft202012Validator(SCHEMA)
        errors = sorted(validator.iter_errors(doc), key=lambda e: (list(e.absolute_path), e.message))
        if errors:
            err = errors[0]
            path = _pointer(list(err.absolute_path))
            raise SchemaError(err.message, path)
        try:
            field = FieldSpec.parse(doc["field"])
        except ParseError as exc:
            raise ParseError(f"/field: {exc}") from None
        dim = doc["dim"]
        basis = tuple(doc.get("basis", ()))
        if basis and len(basis) != dim:
            raise ShapeError(f"{len(basis)} labels for dimension {dim}", "/basis")
        if len(set(basis)) != len(basis):
            raise SchemaError("labels must be distinct", "/basis")
        kwargs = {}
        for name in ARRAY_FIELDS:
            if name in doc:
                shape = (dim * dim,) * 2 if name == "T" else (dim**3,) * 2 if name == "tau" else (dim,) * ARRAY_FIELDS[name]
                kwargs[name] = _parse_array(field, doc[name], shape, "/" + name)
        if "tau" in kwargs and "T" not in kwargs:
            raise SchemaError("companion given without T", "/tau")
        if "lambda" in doc:
            kwargs["lam"] = _parse_scalar(field, doc["lambda"], "/lambda")
        return cls(
            field=field,
            dim=dim,
            basis=basis,
            name=doc.get("name"),
            provenance=doc.get("provenance"),
            n_power=doc.get("n_power"),
            declared=tuple(doc.get("declared", ())),
            **kwargs,
        )

    def dumps(self) -> str:
        return dumps_canonical(self.to_json())


def dumps_canonical(doc: dict) -> str:
    lines = [f"  {json.dumps(k)}: {json.dumps(doc[k], separators=(',', ':'), ensure_ascii=False)}" for k in sorted(doc)]
    return "{\n" + ",\n".join(lines) + "\n}\n"


def _parse_scalar(field: FieldSpec, text, path: str):
    try:
        return field.parse_raw(text)
    except ParseError as exc:
        raise type(exc)(f"{path}: {exc}") from None
    except ZeroDivisionError as exc:
        raise ParseError(f"{path}: {exc}") from None


def _parse_array(field: FieldSpec, data, shape: tuple[int, ...], path: str) -> np.ndarray:
    """Parse a nested list of scalar strings, checking every level's length."""

    def walk(node, depth, where):
        if len(node) != shape[depth]:
            raise ShapeError(f"expected length {shape[depth]}, got {len(node)}", where)
        if depth == len(shape) - 1:
            return [_parse_scalar(field, x, f"{where}/{i}") for i, x in enumerate(node)]
        return [walk(child, depth + 1, f"{where}/{i}") for i, child in enumerate(node)]

    values = walk(data, 0, path)
    out = np.empty(shape, dtype=object)
    flat = np.array(values, dtype=object).reshape(-1) if shape else values
    out.reshape(-1)[:] = list(flat)
    return out


def loads_bundle(text: str, validate: bool = True) -> Bundle:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON ({exc.msg} at line {exc.lineno})", "/") from None
    bundle = Bundle.from_json(doc)
    if validate:
        validate_declared(bundle)
    return bundle


def load_bundle(path, validate: bool = True) -> Bundle:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise SchemaError(f"cannot read bundle {path}: {exc}", "/") from None
    return loads_bundle(text, validate)


def save_bundle(bundle: Bundle, path) -> None:
    Path(path).write_text(bundle.dumps(), encoding="utf-8")


def validate_declared(bundle: Bundle) -> None:
    """Run every declared check; raise the first failing one's witness."""
    from .checks import run_check
    from .errors import InvalidInput

    for name in bundle.declared:
        report = run_check(name, bundle)
        if not report.passed:
            w = report.first
            raise InvalidInput(f"declared check {name!r} fails at {w.identity} {w.at}")
