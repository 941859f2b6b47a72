"""JSON instance files: equations, friezes and polygons with rationals as strings.

Every file is an object ``{"kind": ..., "payload": ..., "meta": ...}``; a bare
payload is also accepted on input and its kind is inferred from its keys.
Output is canonical: sorted keys, two-space indent, trailing newline.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .equations import DifferenceEquation
from .friezes import FriezePattern, PartialFrieze
from .linalg import format_rational, parse_rational
from .polygons import PolygonLift

KINDS = ("equation", "frieze", "polygon")


class InstanceParseError(ValueError):
    """Malformed JSON; ``offset`` is a byte offset into the UTF-8 input."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte {offset}")
        self.offset = offset


class SchemaError(ValueError):
    """Well-formed JSON that does not match a schema; ``path`` locates the field."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


@dataclass
class InstanceFile:
    kind: str
    payload: dict
    meta: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out: dict[str, Any] = {"kind": self.kind, "payload": self.payload}
        if self.meta:
            out["meta"] = self.meta
        return out


def dumps(inst: InstanceFile) -> str:
    return json.dumps(inst.to_json(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def loads(text: str | bytes) -> InstanceFile:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as err:
        raise InstanceParseError(err.msg, len(text[: err.pos].encode("utf-8"))) from None
    if not isinstance(obj, dict):
        raise SchemaError("$", "expected an object")
    if "kind" in obj:
        kind = obj["kind"]
        if kind not in KINDS:
            raise SchemaError("$.kind", f"expected one of {KINDS}, got {kind!r}")
        payload = obj.get("payload")
        if not isinstance(payload, dict):
            raise SchemaError("$.payload", "expected an object")
        meta = obj.get("meta", {})
        if not isinstance(meta, dict):
            raise SchemaError("$.meta", "expected an object")
        inst = InstanceFile(kind, payload, meta)
        base = "$.payload"
    else:
        inst = InstanceFile(_infer_kind(obj), obj)
        base = "$"
    # validate by decoding once
    decode(inst, base)
    return inst


def _infer_kind(obj: dict) -> str:
    if "coeffs" in obj:
        return "equation"
    if "rows" in obj or "entries" in obj:
        return "frieze"
    if "points" in obj:
        return "polygon"
    raise SchemaError("$", "cannot infer kind: expected coeffs, rows, entries or points")


def _int(obj: dict, key: str, path: str) -> int:
    if key not in obj:
        raise SchemaError(f"{path}.{key}", "missing")
    v = obj[key]
    if not isinstance(v, int) or isinstance(v, bool):
        raise SchemaError(f"{path}.{key}", f"expected an integer, got {v!r}")
    return v


def _rat(v, path: str):
    if not isinstance(v, str):
        raise SchemaError(path, f"expected a rational string, got {v!r}")
    try:
        return parse_rational(v)
    except (ValueError, ZeroDivisionError) as err:
        raise SchemaError(path, str(err)) from None


def _table(obj: dict, key: str, path: str, rows: int | None, cols: int | None) -> list[list]:
    p = f"{path}.{key}"
    if key not in obj:
        raise SchemaError(p, "missing")
    t = obj[key]
    if not isinstance(t, list) or (rows is not None and len(t) != rows):
        raise SchemaError(p, f"expected a list of {rows} rows")
    out = []
    for r, row in enumerate(t):
        if not isinstance(row, list) or (cols is not None and len(row) != cols):
            raise SchemaError(f"{p}[{r}]", f"expected a list of {cols} entries")
        out.append([_rat(v, f"{p}[{r}][{c}]") for c, v in enumerate(row)])
    return out


def decode(inst: InstanceFile, base: str = "$.payload"):
    """The library object behind an instance file."""
    p = inst.payload
    try:
        if inst.kind == "equation":
            k, n = _int(p, "k", base), _int(p, "n", base)
            return DifferenceEquation(k, n, _table(p, "coeffs", base, n, k))
        if inst.kind == "frieze":
            k, w = _int(p, "k", base), _int(p, "w", base)
            if "entries" in p:
                return _partial(p, k, w, base)
            n = _int(p, "n", base)
            if n != k + w + 2:
                raise SchemaError(f"{base}.n", f"expected k + w + 2 = {k + w + 2}, got {n}")
            return FriezePattern.from_alpha_rows(k, _table(p, "rows", base, w, n))
        k, n = _int(p, "k", base), _int(p, "n", base)
        return PolygonLift(k, _table(p, "points", base, n, k + 1))
    except SchemaError:
        raise
    except ValueError as err:
        raise SchemaError(base, str(err)) from None


def _partial(p: dict, k: int, w: int, base: str) -> PartialFrieze:
    path = f"{base}.entries"
    raw = p["entries"]
    if not isinstance(raw, list):
        raise SchemaError(path, "expected a list of [i, j, value] triples")
    table = {}
    for t, item in enumerate(raw):
        if not (isinstance(item, list) and len(item) == 3 and all(isinstance(x, int) for x in item[:2])):
            raise SchemaError(f"{path}[{t}]", "expected [i, j, value]")
        table[(item[0], item[1])] = _rat(item[2], f"{path}[{t}][2]")
    return PartialFrieze(k, w, table)


def encode(obj, meta: dict | None = None) -> InstanceFile:
    meta = dict(meta or {})
    fmt = format_rational
    if isinstance(obj, DifferenceEquation):
        return InstanceFile(
            "equation", {"k": obj.k, "n": obj.n, "coeffs": [[fmt(x) for x in row] for row in obj.coeffs]}, meta
        )
    if isinstance(obj, FriezePattern):
        rows = [[fmt(x) for x in row] for row in obj.alpha_rows()]
        return InstanceFile("frieze", {"k": obj.k, "w": obj.w, "n": obj.n, "rows": rows}, meta)
    if isinstance(obj, PartialFrieze):
        entries = [[i, j, fmt(v)] for (i, j), v in sorted(obj.entries.items())]
        return InstanceFile("frieze", {"k": obj.k, "w": obj.w, "entries": entries}, meta)
    if isinstance(obj, PolygonLift):
        pts = [[fmt(x) for x in v] for v in obj.vectors]
        return InstanceFile("polygon", {"k": obj.k, "n": obj.n, "points": pts}, meta)
    raise TypeError(f"cannot encode {type(obj).__name__}")


def read(path: str) -> InstanceFile:
    with open(path, "rb") as fh:
        return loads(fh.read())


def load_fixture(name: str) -> InstanceFile:
    """A JSON fixture shipped with the package."""
    from importlib.resources import files

    return loads(files("friezekit").joinpath("fixtures", f"{name}.json").read_bytes())
