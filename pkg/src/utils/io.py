import json
import sys
from typing import Any

import networkx as nx

from src.utils.errors import InputError


def read_json(path: str) -> Any:
    """Parse a JSON document from a file, or from stdin when path is '-'."""
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, 'r', encoding='utf-8') as f:
            return json.load(f)
    except FileNotFoundError:
        raise InputError(f"input file '{path}' not found")
    except json.JSONDecodeError as e:
        raise InputError(f"'{path}' is not valid JSON: {e}")


def dumps_json(data: Any) -> str:
    return json.dumps(data, indent=4, ensure_ascii=False, sort_keys=True)


def _quote(value: Any) -> str:
    return '"' + str(value).replace('\\', '\\\\').replace('"', '\\"') + '"'


def graph_to_dot(G: nx.Graph, name: str = "G") -> str:
    """
    DOT text with nodes and edges in sorted order. The 'label' attribute of
    nodes and edges becomes the DOT label; edges of a DiGraph use '->'.
    """
    directed = G.is_directed()
    arrow = "->" if directed else "--"
    lines = [f"{'digraph' if directed else 'graph'} {name} {{"]
    for node in sorted(G.nodes, key=str):
        label = G.nodes[node].get("label", node)
        lines.append(f"    {_quote(node)} [label={_quote(label)}];")
    edges = []
    for u, v, data in G.edges(data=True):
        if not directed and str(v) < str(u):
            u, v = v, u
        edges.append((str(u), str(v), data))
    for u, v, data in sorted(edges, key=lambda e: (e[0], e[1])):
        attrs = f" [label={_quote(data['label'])}]" if "label" in data else ""
        lines.append(f"    {_quote(u)} {arrow} {_quote(v)}{attrs};")
    lines.append("}")
    return "\n".join(lines) + "\n"
