"""JSON, DOT and plain-text renderings of decompositions.

All emitters are deterministic: lists are sorted and dictionaries are built
in a fixed key order, so equal inputs give byte-identical output.
"""

from __future__ import annotations

import json
import re
from typing import Any, Sequence

from .barriers import Barrier
from .basilica import BasilicaDecomposition
from .bipartite import BtfReport
from .dmposet import TfrPoset, hasse
from .io import graph_to_json


def _pairs(ps) -> list[list[int]]:
    return [list(p) for p in sorted(ps)]


def _strict(ps) -> list[list[int]]:
    return [list(p) for p in sorted(p for p in ps if p[0] != p[1])]


def basilica_to_json(b: BasilicaDecomposition) -> dict[str, Any]:
    return {
        "classes": [
            {
                "id": c.id,
                "host": c.host,
                "base": list(c.base),
                "coupled": list(c.coupled or ()),
                "upSet": list(c.up_set or ()),
            }
            for c in b.classes
        ],
        "order": _pairs(b.order.strict_pairs()),
        "hasse": _pairs(b.order.hasse()),
        "attachments": [
            {"host": a.host, "vertices": list(a.vertices), "classId": a.class_id} for a in b.attachments
        ],
    }


def poset_to_json(p: TfrPoset) -> dict[str, Any]:
    return {
        "elements": [
            {
                "id": e.id,
                "host": e.host,
                "base": list(e.base),
                "vertices": list(e.vertices),
                "consistent": e.consistent,
            }
            for e in p.elements
        ],
        "order": _strict(p.order),
        "forbidden": _pairs(p.forbidden),
        "hasse": _pairs(hasse(p)),
        "starForbidden": _pairs(p.star_forbidden),
    }


def decomposition_to_json(p: TfrPoset) -> dict[str, Any]:
    b = p.decomposition
    assert b is not None
    ge = b.ge
    return {
        "graph": graph_to_json(b.graph),
        "matching": _pairs(b.matching.edges),
        "gallaiEdmonds": {"D": sorted(ge.d_set), "A": sorted(ge.a_set), "C": sorted(ge.c_set)},
        "factorComponents": [
            {
                "id": c.id,
                "vertices": list(c.vertices),
                "allowedEdges": _pairs(c.allowed_edges),
                "consistent": c.consistent,
            }
            for c in b.components
        ],
        "basilica": basilica_to_json(b),
        "dm": poset_to_json(p),
    }


def barriers_to_json(barriers: Sequence[Barrier], intersection: Sequence[int] | None, truncated: bool = False) -> dict[str, Any]:
    return {
        "maximalBarriers": [
            {
                "vertices": list(b.vertices),
                "idealElementIds": sorted(b.witness.elements) if b.witness else [],
            }
            for b in barriers
        ],
        "intersection": None if intersection is None else sorted(intersection),
        "truncated": truncated,
    }


def btf_to_json(r: BtfReport) -> dict[str, Any]:
    def blk(rc) -> dict[str, list[int]]:
        return {"rows": list(rc[0]), "cols": list(rc[1])}

    return {
        "shape": list(r.shape),
        "rowPerm": list(r.row_perm),
        "colPerm": list(r.col_perm),
        "coarse": {k: blk(r.coarse[k]) for k in ("horizontal", "square", "vertical")},
        "fineBlocks": [[list(rows), list(cols)] for rows, cols in r.fine_blocks],
    }


_FLAT_LIST = re.compile(r"\[\s*(-?\d+(?:,\s*-?\d+)*)?\s*\]")


def dumps(obj: Any) -> str:
    """Indented JSON with integer lists kept on one line."""
    text = json.dumps(obj, indent=2)
    return _FLAT_LIST.sub(lambda m: "[" + ", ".join((m.group(1) or "").replace(",", " ").split()) + "]", text) + "\n"


def _fmt(vs: Sequence[int]) -> str:
    return "{" + ",".join(map(str, vs)) + "}"


def poset_to_dot(p: TfrPoset) -> str:
    """Hasse diagram of the DM poset, clustered by host factor-component.

    Solid arrows point from lower to upper elements; dashed undirected
    edges mark immediate forbidden pairs.
    """
    lines = ["digraph dm {", "  rankdir=BT;", "  node [shape=box];"]
    hosts: dict[int, list[int]] = {}
    for e in p.elements:
        hosts.setdefault(e.host, []).append(e.id)
    for h in sorted(hosts):
        lines.append(f"  subgraph cluster_h{h} {{")
        lines.append(f'    label="H{h}";')
        for i in hosts[h]:
            e = p.elements[i]
            style = "" if e.consistent else ", style=dashed"
            lines.append(f'    d{i} [label="D{i}\\nbase {_fmt(e.base)}\\n{_fmt(e.vertices)}"{style}];')
        lines.append("  }")
    for i, j in hasse(p):
        lines.append(f"  d{i} -> d{j};")
    for i, j in sorted({(min(x, y), max(x, y)) for x, y in p.star_forbidden}):
        lines.append(f"  d{i} -> d{j} [style=dashed, dir=none, constraint=false];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def decomposition_to_text(p: TfrPoset) -> str:
    b = p.decomposition
    assert b is not None
    ge = b.ge
    out = [
        f"graph: n={b.graph.n} m={b.graph.m}",
        f"matching ({len(b.matching)} edges): " + " ".join(f"{u}-{v}" for u, v in b.matching.edges),
        f"D(G) = {_fmt(sorted(ge.d_set))}  A(G) = {_fmt(sorted(ge.a_set))}  C(G) = {_fmt(sorted(ge.c_set))}",
        "factor-components:",
    ]
    for c in b.components:
        kind = "consistent" if c.consistent else "inconsistent"
        out.append(f"  H{c.id} {_fmt(c.vertices)} {kind}")
    out.append("DM components:")
    for e in p.elements:
        out.append(f"  D{e.id} base {_fmt(e.base)} vertices {_fmt(e.vertices)} host H{e.host}")
    out.append("order: " + ", ".join(f"D{i}<D{j}" for i, j in _strict(p.order)))
    out.append("forbidden: " + ", ".join(f"D{i}~D{j}" for i, j in sorted(p.forbidden)))
    return "\n".join(out) + "\n"


def barriers_to_text(barriers: Sequence[Barrier], intersection: Sequence[int] | None) -> str:
    out = [f"{len(barriers)} maximal barriers"]
    out.extend(f"  {_fmt(b.vertices)}" for b in barriers)
    if intersection is not None:
        out.append(f"intersection: {_fmt(sorted(intersection))}")
    return "\n".join(out) + "\n"


def btf_to_text(r: BtfReport) -> str:
    out = [f"shape {r.shape[0]}x{r.shape[1]}"]
    for k in ("horizontal", "square", "vertical"):
        rows, cols = r.coarse[k]
        out.append(f"{k}: {len(rows)} rows x {len(cols)} cols")
    out.append(f"fine blocks: {len(r.fine_blocks)}")
    for rows, cols in r.fine_blocks:
        out.append(f"  rows {_fmt(rows)} cols {_fmt(cols)}")
    out.append("row order: " + " ".join(map(str, r.row_perm)))
    out.append("col order: " + " ".join(map(str, r.col_perm)))
    return "\n".join(out) + "\n"
