"""JSON interchange formats for graphs, hypergraphs, covers, and
ruling-set certificates.

Graph:      {"n": int, "idspace": int, "edges": [[u,v],...]}
            (optional "nodes": [...] when IDs are not 0..n-1)
Hypergraph: {"n": int, "edges": [[v,...],...]}
Cover:      {"cliques": [[v,...],...]}
Edge cert:  {"kind":"edge","alpha":a,"beta":b,"edges":[[u,v],...]}
Vertex cert:{"kind":"vertex","alpha":a,"beta":b,"nodes":[...]}
"""

from __future__ import annotations

import json
from typing import Any

from .graph import CliqueEdgeCover, Graph, Hypergraph
from .sim import RunReport


def graph_to_dict(g: Graph) -> dict[str, Any]:
    d: dict[str, Any] = {"n": g.n, "idspace": g.idspace,
                         "edges": [list(e) for e in g.edges()]}
    if g.nodes != tuple(range(g.n)):
        d["nodes"] = list(g.nodes)
    return d


def graph_from_dict(d: dict[str, Any]) -> Graph:
    n = int(d["n"])
    idspace = int(d.get("idspace", n))
    edges = [tuple(e) for e in d.get("edges", [])]
    if "nodes" in d:
        nodes = [int(v) for v in d["nodes"]]
        if len(nodes) != n:
            raise ValueError(f"'nodes' lists {len(nodes)} IDs but n = {n}")
    else:
        nodes = list(range(n))
        referenced = {v for e in edges for v in e}
        if referenced - set(nodes):
            raise ValueError("edges reference IDs outside 0..n-1; provide an explicit 'nodes' list")
    return Graph(nodes, edges, idspace)


def hypergraph_to_dict(h: Hypergraph) -> dict[str, Any]:
    return {"n": h.n, "edges": [list(e) for e in h.edges]}


def hypergraph_from_dict(d: dict[str, Any]) -> Hypergraph:
    return Hypergraph(int(d["n"]), [list(e) for e in d.get("edges", [])])


def cover_to_dict(q: CliqueEdgeCover) -> dict[str, Any]:
    return {"cliques": [list(c) for c in q.cliques]}


def cover_from_dict(d: dict[str, Any]) -> CliqueEdgeCover:
    return CliqueEdgeCover([list(c) for c in d.get("cliques", [])])


def edge_certificate(edges, alpha: int, beta: int) -> dict[str, Any]:
    return {"kind": "edge", "alpha": alpha, "beta": beta,
            "edges": [list(e) for e in sorted(edges)]}


def vertex_certificate(nodes, alpha: int, beta: int) -> dict[str, Any]:
    return {"kind": "vertex", "alpha": alpha, "beta": beta,
            "nodes": sorted(nodes)}


def load_json(path: str) -> dict[str, Any]:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def dump_json(path: str, obj: dict[str, Any]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, indent=None, separators=(",", ":"))
        fh.write("\n")


def dump_transcript(path: str, report: RunReport) -> None:
    """One JSON object per line, one line per round."""
    if report.transcript is None:
        raise ValueError("run was not configured with record_transcript")
    with open(path, "w", encoding="utf-8") as fh:
        for entry in report.transcript:
            fh.write(json.dumps(entry, separators=(",", ":")))
            fh.write("\n")
