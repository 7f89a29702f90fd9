"""JSON formats for groups, braces and solutions."""
from __future__ import annotations

import json
import os
from pathlib import Path

import numpy as np

from . import catalog
from .brace import SkewBrace, make_skew_brace
from .errors import ParseError
from .groups import FiniteGroup, make_group, permutation_group
from .ybe import Solution


def read_json(path: str | os.PathLike) -> dict:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from exc
    if not isinstance(data, dict):
        raise ParseError(f"{path}: expected a JSON object")
    return data


def write_json(obj, path: str | os.PathLike) -> None:
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=1, default=_default)
        fh.write("\n")


def _default(o):
    if isinstance(o, np.generic):
        return o.item()
    if isinstance(o, np.ndarray):
        return o.tolist()
    if isinstance(o, (set, frozenset)):
        return sorted(o)
    if hasattr(o, "to_dict"):
        return o.to_dict()
    raise TypeError(f"cannot serialise {type(o).__name__}")


def _table(data: dict, key: str, n: int) -> np.ndarray:
    if key not in data:
        raise ParseError(f"missing key {key!r}")
    try:
        arr = np.asarray(data[key], dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"{key!r} is not an integer table") from exc
    if arr.shape != (n, n):
        raise ParseError(f"{key!r} has shape {arr.shape}, expected {(n, n)}")
    return arr


def _identity(table: np.ndarray) -> int:
    rows = np.flatnonzero((table == np.arange(table.shape[0])).all(axis=1))
    return int(rows[0]) if rows.size else 0


def group_to_dict(G: FiniteGroup) -> dict:
    return {"labels": list(G.labels), "identity": G.identity, "table": G.table.tolist()}


def group_from_dict(data: dict) -> FiniteGroup:
    if "degree" in data:
        try:
            return permutation_group(int(data["degree"]), data["generators"])
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad permutation-generator description: {exc}") from exc
    if "table" not in data:
        raise ParseError("group JSON needs 'table' or 'degree'/'generators'")
    n = len(data["table"])
    table = _table(data, "table", n)
    labels = data.get("labels") or [str(i) for i in range(n)]
    identity = int(data.get("identity", _identity(table)))
    return make_group(labels, table, identity)


def load_group(source: str) -> FiniteGroup:
    """A catalog key, or a path to group JSON."""
    if os.path.exists(source):
        return group_from_dict(read_json(source))
    return catalog.get(source)


def brace_to_dict(B: SkewBrace) -> dict:
    return {
        "labels": list(B.labels),
        "identity": B.identity,
        "add": B.add.table.tolist(),
        "mul": B.mul.table.tolist(),
        "meta": B.meta,
    }


def brace_from_dict(data: dict) -> SkewBrace:
    """Validate both tables and the brace law; raises ValidationError subclasses."""
    if "mul" not in data:
        raise ParseError("brace JSON needs 'add' and 'mul'")
    n = len(data["mul"])
    mul = _table(data, "mul", n)
    add = _table(data, "add", n)
    labels = data.get("labels") or [str(i) for i in range(n)]
    e = int(data.get("identity", _identity(mul)))
    M = make_group(labels, mul, e)
    A = make_group(labels, add, int(data.get("identity", _identity(add))))
    return make_skew_brace(A, M, data.get("meta") or {})


def load_brace(path: str | os.PathLike) -> SkewBrace:
    return brace_from_dict(read_json(path))


def solution_to_dict(sol: Solution) -> dict:
    return sol.to_dict()


def solution_from_dict(data: dict) -> Solution:
    try:
        n = int(data["n"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError("solution JSON needs an integer 'n'") from exc
    return Solution(_table(data, "f", n), _table(data, "g", n))
