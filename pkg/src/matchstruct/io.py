"""Reading and writing graphs: edge lists, Matrix Market patterns, JSON."""

from __future__ import annotations

import json
from typing import Any

from .graph import Graph, GraphError


class InputError(ValueError):
    """Unreadable or malformed input."""


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``.

    Blank lines and ``#`` comments are skipped.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((lineno, int(parts[0]), int(parts[1])))
        except ValueError:
            raise InputError(f"line {lineno}: expected two integers, got {raw!r}") from None
    if not rows:
        raise InputError("missing 'n m' header")
    _, n, m = rows[0]
    if n < 0 or m < 0:
        raise InputError(f"header has negative counts: {n} {m}")
    body = rows[1:]
    if len(body) != m:
        raise InputError(f"header announces {m} edges but {len(body)} follow")
    try:
        return Graph.from_edges(n, [(u, v) for _, u, v in body])
    except GraphError as e:
        raise InputError(str(e)) from None


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}", *(f"{u} {v}" for u, v in g.edges)]
    return "\n".join(lines) + "\n"


def read_matrix_market(source: Any) -> tuple[int, int, list[tuple[int, int]]]:
    """Shape and entry positions of a coordinate Matrix Market file.

    Values are ignored, so explicitly stored zeros still count as entries.
    """
    from scipy.io import mminfo, mmread

    try:
        info = mminfo(source)
        if hasattr(source, "seek"):
            source.seek(0)
        if info[3] != "coordinate":
            raise InputError(f"only coordinate Matrix Market files are supported, not {info[3]!r}")
        mat = mmread(source, spmatrix=False).tocoo()
    except InputError:
        raise
    except (OSError, ValueError, IndexError) as e:
        raise InputError(f"cannot read Matrix Market input: {e}") from None
    nrows, ncols = (int(x) for x in mat.shape)
    entries = sorted({(int(i), int(j)) for i, j in zip(mat.row, mat.col)})
    return nrows, ncols, entries


def graph_to_json(g: Graph) -> dict[str, Any]:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def graph_from_json(data: str | dict[str, Any]) -> Graph:
    obj = json.loads(data) if isinstance(data, str) else data
    try:
        return Graph.from_edges(int(obj["n"]), [tuple(e) for e in obj["edges"]])
    except (KeyError, TypeError, IndexError) as e:
        raise InputError(f"malformed graph JSON: {e}") from None
