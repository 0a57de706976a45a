"""File formats. All node ids in files are 1-based.

Degree-sequence files are either JSON ``{"d": [...], "k": k}`` or plain
text with ``k`` on the first line and whitespace-separated degrees on the
second. Hypergraphs are written one edge per line with ascending ids, or
as one JSON object per line.
"""

from __future__ import annotations

import json
from pathlib import Path

from hypersample.core import BipartiteGraph, Hypergraph, HypergraphInstance, canonicalize


def parse_instance(text: str) -> HypergraphInstance:
    text = text.strip()
    if text.startswith("{"):
        obj = json.loads(text)
        return HypergraphInstance(tuple(obj["d"]), int(obj["k"]))
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) < 2:
        raise ValueError("text format needs k on line 1 and degrees on line 2")
    return HypergraphInstance(tuple(int(x) for x in lines[1].split()), int(lines[0]))


def read_instance(path) -> HypergraphInstance:
    return parse_instance(Path(path).read_text())


def instance_to_json(inst: HypergraphInstance) -> str:
    return json.dumps({"d": list(inst.d), "k": inst.k})


def format_edges(h: Hypergraph) -> str:
    return h.encode()


def parse_edges(text: str, n: int | None = None) -> Hypergraph:
    rows = [[int(x) - 1 for x in ln.split()] for ln in text.splitlines() if ln.strip()]
    return canonicalize(rows, n=n)


def hypergraph_to_json(h: Hypergraph) -> str:
    return json.dumps({"n": h.n, "k": h.k, "edges": [[x + 1 for x in e] for e in h.edges]})


def hypergraph_from_json(text: str) -> Hypergraph:
    obj = json.loads(text)
    return canonicalize([[x - 1 for x in e] for e in obj["edges"]], n=obj["n"], k=obj["k"])


def parse_bipartite(line: str, n: int) -> BipartiteGraph:
    """Inverse of :meth:`BipartiteGraph.encode`."""
    rows = tuple(tuple(int(x) - 1 for x in grp.split()) for grp in line.strip().split("|"))
    return BipartiteGraph(n, rows)
