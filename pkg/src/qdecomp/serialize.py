"""JSON and DOT forms of graphs and decompositions.

Hypercube hosts are stored by dimension and their edges as ``[low, dir]``.
Any other host lists its vertices once; vertex ``i`` means
``host.vertices[i]`` and edges are ``[i, j]`` index pairs.
"""

from __future__ import annotations

import json
from pathlib import Path as FilePath

from .automorphism import Automorphism
from .cube import Edge, Graph, cartesian_product, make_cycle_graph, make_graph, make_hypercube
from .verify import Decomposition, parse_shape

FORMAT = "qdecomp.decomposition/1"


class FormatError(ValueError):
    pass


def graph_to_json(g: Graph) -> dict:
    if g.kind == "hypercube":
        return {"kind": "hypercube", "dim": g.dim}
    if g.kind == "cycle":
        return {"kind": "cycle", "length": g.num_vertices}
    if g.kind == "product":
        return {"kind": "product", "factors": [graph_to_json(f) for f in g.factors]}
    index = {v: i for i, v in enumerate(g.vertices)}
    return {
        "kind": "generic",
        "vertices": list(range(len(g.vertices))),
        "edges": sorted([index[a], index[b]] for a, b in g.edge_list),
    }


def graph_from_json(obj: dict) -> Graph:
    try:
        kind = obj["kind"]
        if kind == "hypercube":
            return make_hypercube(int(obj["dim"]))
        if kind == "cycle":
            return make_cycle_graph(int(obj["length"]))
        if kind == "product":
            a, b = obj["factors"]
            return cartesian_product(graph_from_json(a), graph_from_json(b))
        if kind == "generic":
            return make_graph(obj["vertices"], [tuple(e) for e in obj["edges"]])
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad graph object: {exc}") from exc
    raise FormatError(f"unknown graph kind {kind!r}")


def _edge_to_json(g: Graph, e, index) -> list:
    if g.kind == "hypercube":
        return [e.low, e.dir]
    a, b = e
    return sorted([index[a], index[b]])


def _edge_from_json(g: Graph, pair, verts):
    if len(pair) != 2:
        raise FormatError(f"edge must have two entries, got {pair!r}")
    if g.kind == "hypercube":
        low, d = int(pair[0]), int(pair[1])
        if not 1 <= d <= g.dim or low >> (d - 1) & 1 or not 0 <= low < 1 << g.dim:
            raise FormatError(f"[{low}, {d}] is not an edge of Q_{g.dim}")
        return Edge(low, d)
    try:
        a, b = verts[pair[0]], verts[pair[1]]
    except (IndexError, TypeError) as exc:
        raise FormatError(f"vertex index out of range in {pair!r}") from exc
    return (a, b) if a <= b else (b, a)


def edges_to_json(g: Graph, edges) -> list:
    index = None if g.kind == "hypercube" else {v: i for i, v in enumerate(g.vertices)}
    return sorted(_edge_to_json(g, e, index) for e in edges)


def decomposition_to_json(d: Decomposition) -> dict:
    return {
        "format": FORMAT,
        "host": graph_to_json(d.host),
        "shape": str(d.shape),
        "provenance": d.provenance,
        "pieces": [edges_to_json(d.host, p) for p in d.pieces],
    }


def decomposition_from_json(obj: dict) -> Decomposition:
    if not isinstance(obj, dict) or "host" not in obj or "pieces" not in obj:
        raise FormatError("expected an object with 'host' and 'pieces'")
    host = graph_from_json(obj["host"])
    verts = host.vertices
    pieces = [frozenset(_edge_from_json(host, e, verts) for e in piece) for piece in obj["pieces"]]
    shape = parse_shape(obj.get("shape", "any"))
    return Decomposition(host, tuple(pieces), shape, obj.get("provenance", ""))


def dumps(d: Decomposition) -> str:
    return json.dumps(decomposition_to_json(d), separators=(",", ":")) + "\n"


def save(d: Decomposition, path) -> None:
    FilePath(path).write_text(dumps(d))


def load(path) -> Decomposition:
    try:
        obj = json.loads(FilePath(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: not valid JSON ({exc})") from exc
    return decomposition_from_json(obj)


def automorphisms_to_json(fs) -> list:
    return [f.to_json() for f in fs]


def automorphisms_from_json(objs, n: int) -> list[Automorphism]:
    return [Automorphism.from_json(o, n) for o in objs]


# DOT ------------------------------------------------------------------------

PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)


def _label(g: Graph, v) -> str:
    if g.kind == "hypercube":
        return "".join(str(v >> i & 1) for i in range(g.dim))
    return str(v)


def to_dot(d: Decomposition) -> str:
    """Undirected DOT; edges of piece ``i`` share colour ``PALETTE[i % 10]``
    and carry ``label=i``."""
    g = d.host
    ids = {v: i for i, v in enumerate(g.vertices)}
    lines = ["graph decomposition {", "  node [shape=circle, fontsize=9];"]
    for v in g.vertices:
        lines.append(f'  v{ids[v]} [label="{_label(g, v)}"];')
    for i, piece in enumerate(d.pieces):
        colour = PALETTE[i % len(PALETTE)]
        for e in sorted(piece, key=repr):
            a, b = (e.low, e.high) if isinstance(e, Edge) else e
            lines.append(f'  v{ids[a]} -- v{ids[b]} [color="{colour}", label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
