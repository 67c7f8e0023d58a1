"""Reading and writing graphs and decompositions.

Graph text format: header "n m" followed by m lines "u v" (1-based).
DIMACS-style input ("p edge n m" / "e u v" / "c ..." comments) is accepted
transparently. Graphs also round-trip through JSON mirroring the fields.
"""
from __future__ import annotations

import json

from .errors import GraphFormatError
from .graph import Graph
from .treedec import TreeDecomposition


def parse_graph(text):
    edges = []
    n = m = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            n, m = int(parts[-2]), int(parts[-1])
            continue
        if line.startswith("e"):
            _, u, v = line.split()
            edges.append((int(u), int(v)))
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2:
                raise GraphFormatError("bad header line %r" % raw)
            n, m = int(parts[0]), int(parts[1])
        else:
            if len(parts) != 2:
                raise GraphFormatError("bad edge line %r" % raw)
            edges.append((int(parts[0]), int(parts[1])))
    if n is None:
        raise GraphFormatError("missing graph header")
    if m is not None and m != len(edges):
        raise GraphFormatError("header announces %d edges, found %d"
                               % (m, len(edges)))
    return Graph(n, edges)


def format_graph(g):
    lines = ["%d %d" % (g.n, g.m_edges)]
    lines.extend("%d %d" % e for e in g.edges())
    return "\n".join(lines) + "\n"


def graph_to_json(g):
    return json.dumps({"n": g.n, "edges": [[u, v] for u, v in g.edges()]})


def graph_from_json(text):
    try:
        obj = json.loads(text)
        return Graph(obj["n"], [tuple(e) for e in obj["edges"]])
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphFormatError("bad graph JSON: %s" % exc)


def load_graph(path):
    with open(path) as fh:
        text = fh.read()
    if str(path).endswith(".json"):
        return graph_from_json(text)
    return parse_graph(text)


def save_graph(g, path):
    with open(path, "w") as fh:
        if str(path).endswith(".json"):
            fh.write(graph_to_json(g))
        else:
            fh.write(format_graph(g))


def load_td(path):
    with open(path) as fh:
        return TreeDecomposition.from_json(fh.read())


def save_td(td, path):
    with open(path, "w") as fh:
        fh.write(td.to_json())
