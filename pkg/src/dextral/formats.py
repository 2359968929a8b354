"""JSON interchange for algebra tables and directed graphs.

Algebra file::

    {"name": "gamma1",
     "field": {"kind": "rational"},
     "basis": ["x", "y"],
     "products": [{"left": "x", "right": "x", "value": [["1", "y"]]}]}

Coefficients are strings, ``"a/b"`` or ``"a"``. Unlisted products are zero.
Graph file::

    {"vertices": ["u", "v"], "edges": [{"name": "e", "src": "u", "rng": "v"}]}
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .algebra import Algebra
from .exactlin import FieldSpec


class FormatError(ValueError):
    pass


def algebra_to_json(A: Algebra) -> dict[str, Any]:
    products = []
    for (i, j), v in A.products.items():
        products.append(
            {
                "left": A.basis[i],
                "right": A.basis[j],
                "value": [[str(c), A.basis[k]] for k, c in enumerate(v) if c],
            }
        )
    return {
        "name": A.name,
        "field": A.field.to_json(),
        "basis": list(A.basis),
        "products": products,
    }


def dumps_algebra(A: Algebra) -> str:
    return json.dumps(algebra_to_json(A), indent=2, ensure_ascii=False) + "\n"


def algebra_from_json(data: dict[str, Any]) -> Algebra:
    try:
        field = FieldSpec.from_json(data.get("field", {"kind": "rational"}))
        basis = [str(b) for b in data["basis"]]
        table: dict[tuple[str, str], dict[str, object]] = {}
        for p in data.get("products", []):
            key = (p["left"], p["right"])
            if key in table:
                raise FormatError(f"product [{key[0]},{key[1]}] listed twice")
            value: dict[str, object] = {}
            for coeff, name in p["value"]:
                if not isinstance(coeff, (str, int)):
                    raise FormatError(f"coefficient {coeff!r} must be a string")
                value[name] = field.coerce(value.get(name, 0)) + field.coerce(str(coeff))
            table[key] = value
        return Algebra.from_names(str(data.get("name", "")), field, basis, table)
    except FormatError:
        raise
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"malformed algebra file: {exc}") from exc


def load_algebra(path: str | Path) -> Algebra:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: {exc}") from exc
    if not isinstance(data, dict):
        raise FormatError(f"{path}: top level must be an object")
    return algebra_from_json(data)


def graph_from_json(data: dict[str, Any]):
    from .leavitt import DirectedGraph, Edge, GraphError

    try:
        vertices = [str(v) for v in data["vertices"]]
        edges = [Edge(str(e["name"]), str(e["src"]), str(e["rng"])) for e in data.get("edges", [])]
        return DirectedGraph(vertices, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from exc
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed graph file: {exc}") from exc


def graph_to_json(E) -> dict[str, Any]:
    return {
        "vertices": list(E.vertices),
        "edges": [{"name": e.name, "src": e.src, "rng": e.rng} for e in E.edges],
    }


def load_graph(path: str | Path):
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: {exc}") from exc
    if not isinstance(data, dict):
        raise FormatError(f"{path}: top level must be an object")
    return graph_from_json(data)
