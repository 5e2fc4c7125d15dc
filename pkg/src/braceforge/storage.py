"""JSON structure files with a canonical byte form.

Every file is one JSON object:

    format   "braceforge/1"
    kind     hopf | brace | obt | matched_pair | group | skew_brace
    metadata optional object, preserved verbatim

Map-bearing kinds add "field" ("Q" or "Fp:<p>"), "dim", and a "maps"
object of dense row-major nested arrays of canonical scalar strings
(rationals "n" or "n/d" reduced with positive denominator; prime field
residues as decimal strings).  Tensor domains and codomains use the
left-factor-major index convention of linmap.  Group kinds carry integer
tables instead.

Serialization is canonical: sorted keys, two-space indent, trailing
newline.  save(load(f)) is byte-identical for files produced by save.
"""
from __future__ import annotations

import json
from typing import Any

from .brace import HopfBraceData
from .errors import CanonicalFormError, ParseError, SchemaError, ShapeError
from .hopf import HopfAlgebraData, make_hopf
from .linmap import LinMap, Space, parse_field
from .matched import MatchedPairData
from .obt import OppBraceTripleData
from .skewbraces import CayleyTable, SkewBraceData

FORMAT = "braceforge/1"

KINDS = ("hopf", "brace", "obt", "matched_pair", "group", "skew_brace")

_HOPF_MAPS = ("unit", "product", "counit", "coproduct", "antipode")
_BRACE_MAPS = ("unit", "counit", "coproduct",
               "product1", "antipode1", "product2", "antipode2")
_OBT_MAPS = _HOPF_MAPS + ("action", "involution")
_MP_MAPS = tuple(f"first_{m}" for m in _HOPF_MAPS) + \
    tuple(f"second_{m}" for m in _HOPF_MAPS) + ("left_action", "right_action")


def _hopf_shapes(n: int) -> dict[str, tuple[int, int]]:
    return {
        "unit": (n, 1), "product": (n, n * n),
        "counit": (1, n), "coproduct": (n * n, n), "antipode": (n, n),
    }


def _map_shapes(kind: str, dims: dict[str, int]) -> dict[str, tuple[int, int]]:
    n = dims["dim"]
    if kind == "hopf":
        return _hopf_shapes(n)
    if kind == "brace":
        base = _hopf_shapes(n)
        return {
            "unit": base["unit"], "counit": base["counit"],
            "coproduct": base["coproduct"],
            "product1": base["product"], "antipode1": base["antipode"],
            "product2": base["product"], "antipode2": base["antipode"],
        }
    if kind == "obt":
        shapes = _hopf_shapes(n)
        shapes["action"] = (n, n * n)
        shapes["involution"] = (n, n)
        return shapes
    if kind == "matched_pair":
        nh = dims["dim_second"]
        shapes = {f"first_{k}": v for k, v in _hopf_shapes(n).items()}
        shapes.update({f"second_{k}": v for k, v in _hopf_shapes(nh).items()})
        shapes["left_action"] = (n, nh * n)
        shapes["right_action"] = (nh, nh * n)
        return shapes
    raise AssertionError(kind)


# ---------------------------------------------------------------------------
# document -> object

def _expect_keys(doc: dict, required: set[str], optional: set[str], where: str) -> None:
    keys = set(doc)
    missing = required - keys
    if missing:
        raise SchemaError(f"{where}: missing keys {sorted(missing)}")
    extra = keys - required - optional
    if extra:
        raise SchemaError(f"{where}: unexpected keys {sorted(extra)}")


def _parse_matrix(field, data: Any, shape: tuple[int, int], where: str) -> LinMap:
    rows, cols = shape
    if not isinstance(data, list) or len(data) != rows:
        raise ShapeError(f"{where}: expected {rows} rows")
    entries = {}
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != cols:
            raise ShapeError(f"{where}[{i}]: expected {cols} columns")
        for j, s in enumerate(row):
            if not isinstance(s, str):
                raise SchemaError(f"{where}[{i}][{j}]: scalar must be a string")
            try:
                entries[(i, j)] = field.parse(s)
            except ValueError as exc:
                raise CanonicalFormError(f"{where}[{i}][{j}]: {exc}") from None
    return LinMap(field, Space(cols), Space(rows), entries)


def _parse_int_table(data: Any, n: int, where: str) -> tuple[tuple[int, ...], ...]:
    if not isinstance(data, list) or len(data) != n:
        raise ShapeError(f"{where}: expected {n} rows")
    out = []
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != n:
            raise ShapeError(f"{where}[{i}]: expected {n} columns")
        for j, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise SchemaError(f"{where}[{i}][{j}]: entry must be an index in [0,{n})")
        out.append(tuple(row))
    return tuple(out)


def _get_dim(doc: dict, key: str) -> int:
    v = doc.get(key)
    if not isinstance(v, int) or isinstance(v, bool) or v < 1:
        raise SchemaError(f"{key} must be a positive integer")
    return v


def _get_meta(doc: dict) -> dict | None:
    meta = doc.get("metadata")
    if meta is None:
        return None
    if not isinstance(meta, dict):
        raise SchemaError("metadata must be an object")
    return meta


def _get_field(doc: dict):
    spec = doc.get("field")
    if not isinstance(spec, str):
        raise SchemaError("field must be a string spec")
    try:
        return parse_field(spec)
    except ValueError as exc:
        raise SchemaError(str(exc)) from None


def _get_maps(doc: dict, names: tuple[str, ...]) -> dict:
    maps = doc.get("maps")
    if not isinstance(maps, dict):
        raise SchemaError("maps must be an object")
    _expect_keys(maps, set(names), set(), "maps")
    return maps


def from_document(doc: Any):
    """Typed object from a parsed JSON document."""
    if not isinstance(doc, dict):
        raise SchemaError("top level must be an object")
    if doc.get("format") != FORMAT:
        raise SchemaError(f"format must be {FORMAT!r}")
    kind = doc.get("kind")
    if kind not in KINDS:
        raise SchemaError(f"kind must be one of {KINDS}")
    meta = _get_meta(doc)

    if kind == "group":
        _expect_keys(doc, {"format", "kind", "order", "identity", "table"},
                     {"metadata"}, "group")
        n = _get_dim(doc, "order")
        ident = doc.get("identity")
        if not isinstance(ident, int) or isinstance(ident, bool) or not 0 <= ident < n:
            raise SchemaError("identity must be an index in [0, order)")
        table = _parse_int_table(doc["table"], n, "table")
        return CayleyTable(table, ident, meta)

    if kind == "skew_brace":
        _expect_keys(doc, {"format", "kind", "order", "identity", "dot", "circ"},
                     {"metadata"}, "skew_brace")
        n = _get_dim(doc, "order")
        ident = doc.get("identity")
        if not isinstance(ident, int) or isinstance(ident, bool) or not 0 <= ident < n:
            raise SchemaError("identity must be an index in [0, order)")
        dot = CayleyTable(_parse_int_table(doc["dot"], n, "dot"), ident)
        circ = CayleyTable(_parse_int_table(doc["circ"], n, "circ"), ident)
        return SkewBraceData(dot, circ, meta)

    required = {"format", "kind", "field", "dim", "maps"}
    if kind == "matched_pair":
        required.add("dim_second")
    _expect_keys(doc, required, {"metadata"}, kind)
    field = _get_field(doc)
    dims = {"dim": _get_dim(doc, "dim")}
    if kind == "matched_pair":
        dims["dim_second"] = _get_dim(doc, "dim_second")
    shapes = _map_shapes(kind, dims)
    maps = _get_maps(doc, tuple(shapes))
    parsed = {name: _parse_matrix(field, maps[name], shape, f"maps.{name}")
              for name, shape in shapes.items()}

    if kind == "hopf":
        h = make_hopf(parsed["unit"], parsed["product"], parsed["counit"],
                      parsed["coproduct"], parsed["antipode"], meta)
        return h
    if kind == "brace":
        return HopfBraceData(
            space=Space(dims["dim"]),
            unit=parsed["unit"], counit=parsed["counit"],
            coproduct=parsed["coproduct"],
            product1=parsed["product1"], antipode1=parsed["antipode1"],
            product2=parsed["product2"], antipode2=parsed["antipode2"],
            meta=meta)
    if kind == "obt":
        h = make_hopf(parsed["unit"], parsed["product"], parsed["counit"],
                      parsed["coproduct"], parsed["antipode"])
        return OppBraceTripleData(hopf=h, action=parsed["action"],
                                  involution=parsed["involution"], meta=meta)
    first = make_hopf(parsed["first_unit"], parsed["first_product"],
                      parsed["first_counit"], parsed["first_coproduct"],
                      parsed["first_antipode"])
    second = make_hopf(parsed["second_unit"], parsed["second_product"],
                       parsed["second_counit"], parsed["second_coproduct"],
                       parsed["second_antipode"])
    return MatchedPairData(first=first, second=second,
                           left_action=parsed["left_action"],
                           right_action=parsed["right_action"], meta=meta)


# ---------------------------------------------------------------------------
# object -> document

def _dump_matrix(f: LinMap) -> list[list[str]]:
    fmt = f.field.format
    return [[fmt(v) for v in row] for row in f.rows()]


def _hopf_maps_doc(h: HopfAlgebraData, prefix: str = "") -> dict:
    return {
        f"{prefix}unit": _dump_matrix(h.unit),
        f"{prefix}product": _dump_matrix(h.product),
        f"{prefix}counit": _dump_matrix(h.counit),
        f"{prefix}coproduct": _dump_matrix(h.coproduct),
        f"{prefix}antipode": _dump_matrix(h.antipode),
    }


def kind_of(obj) -> str:
    if isinstance(obj, HopfAlgebraData):
        return "hopf"
    if isinstance(obj, HopfBraceData):
        return "brace"
    if isinstance(obj, OppBraceTripleData):
        return "obt"
    if isinstance(obj, MatchedPairData):
        return "matched_pair"
    if isinstance(obj, SkewBraceData):
        return "skew_brace"
    if isinstance(obj, CayleyTable):
        return "group"
    raise SchemaError(f"cannot store objects of type {type(obj).__name__}")


def to_document(obj) -> dict:
    """Plain JSON document for a storable object."""
    kind = kind_of(obj)
    doc: dict[str, Any] = {"format": FORMAT, "kind": kind}
    meta = getattr(obj, "meta", None)
    if meta:
        doc["metadata"] = meta

    if kind == "group":
        doc["order"] = obj.order
        doc["identity"] = obj.identity
        doc["table"] = [list(row) for row in obj.table]
        return doc
    if kind == "skew_brace":
        doc["order"] = obj.order
        doc["identity"] = obj.dot.identity
        doc["dot"] = [list(row) for row in obj.dot.table]
        doc["circ"] = [list(row) for row in obj.circ.table]
        return doc

    if kind == "hopf":
        doc["field"] = obj.field.name
        doc["dim"] = obj.space.dim
        doc["maps"] = _hopf_maps_doc(obj)
        return doc
    if kind == "brace":
        doc["field"] = obj.field.name
        doc["dim"] = obj.space.dim
        doc["maps"] = {
            "unit": _dump_matrix(obj.unit),
            "counit": _dump_matrix(obj.counit),
            "coproduct": _dump_matrix(obj.coproduct),
            "product1": _dump_matrix(obj.product1),
            "antipode1": _dump_matrix(obj.antipode1),
            "product2": _dump_matrix(obj.product2),
            "antipode2": _dump_matrix(obj.antipode2),
        }
        return doc
    if kind == "obt":
        doc["field"] = obj.field.name
        doc["dim"] = obj.hopf.space.dim
        maps = _hopf_maps_doc(obj.hopf)
        maps["action"] = _dump_matrix(obj.action)
        maps["involution"] = _dump_matrix(obj.involution)
        doc["maps"] = maps
        return doc
    doc["field"] = obj.field.name
    doc["dim"] = obj.first.space.dim
    doc["dim_second"] = obj.second.space.dim
    maps = _hopf_maps_doc(obj.first, "first_")
    maps.update(_hopf_maps_doc(obj.second, "second_"))
    maps["left_action"] = _dump_matrix(obj.left_action)
    maps["right_action"] = _dump_matrix(obj.right_action)
    doc["maps"] = maps
    return doc


def dumps(obj) -> str:
    """Canonical text form: sorted keys, two-space indent, trailing newline."""
    return json.dumps(to_document(obj), sort_keys=True, indent=2) + "\n"


def loads(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return from_document(doc)


def save(obj, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj))


def load(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return loads(text)
