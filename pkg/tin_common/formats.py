""" Readers and writers for graph6, edge lists and weight files """

import json
import logging
from typing import List

import networkx as nx

from tin_common.errors import GraphFormatError, PreconditionError
from tin_common.graph import Graph
from tin_common.weighting import Weighting

__all__ = ["parse_graph6", "to_graph6", "parse_edgelist", "to_edgelist", "read_graphs",
           "parse_weights", "GRAPH_FORMATS"]

logger = logging.getLogger(__name__)

GRAPH_FORMATS = ("graph6", "edgelist")


def parse_graph6(text: str, line: int = 1) -> Graph:
    """Decode one graph6 string (an optional ``>>graph6<<`` header is allowed)."""
    try:
        graph = nx.from_graph6_bytes(text.strip().encode("ascii"))
    except (nx.NetworkXError, ValueError, UnicodeEncodeError) as err:
        raise GraphFormatError(line=line, cause="invalid graph6 string %r: %s" % (text.strip(), err))
    return Graph(graph.number_of_nodes(), graph.edges())


def to_graph6(G: Graph) -> str:
    return nx.to_graph6_bytes(G.nx_graph, header=False).decode("ascii").strip()


def _strip_comment(raw: str) -> str:
    return raw.split("#", 1)[0].strip()


def parse_edgelist(text: str) -> Graph:
    """Parse an edge list, one ``u v`` pair per line with 0-based ids.

    A first data line holding a single integer fixes the vertex count;
    otherwise it is one more than the largest id. ``#`` starts a comment.
    """
    n = None
    edges = []
    seen_data = False
    for number, raw in enumerate(text.splitlines(), start=1):
        fields = _strip_comment(raw).split()
        if not fields:
            continue
        try:
            values = [int(f) for f in fields]
        except ValueError:
            raise GraphFormatError(line=number, cause="expected integers, got %r" % raw.strip())
        if len(values) == 1 and not seen_data:
            n = values[0]
        elif len(values) == 2:
            if min(values) < 0:
                raise GraphFormatError(line=number, cause="negative vertex id in %r" % raw.strip())
            if values[0] == values[1]:
                raise GraphFormatError(line=number, cause="self-loop at vertex %s" % values[0])
            if n is not None and max(values) >= n:
                raise GraphFormatError(line=number, cause="vertex %s out of range 0..%s" % (max(values), n - 1))
            edges.append((values[0], values[1]))
        else:
            raise GraphFormatError(line=number, cause="expected 'u v', got %r" % raw.strip())
        seen_data = True
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    if n < 0:
        raise GraphFormatError(line=1, cause="negative vertex count %s" % n)
    return Graph(n, edges)


def to_edgelist(G: Graph) -> str:
    lines = [str(G.n)] + ["%s %s" % e for e in G.edges()]
    return "\n".join(lines) + "\n"


def read_graphs(text: str, fmt: str = "graph6") -> List[Graph]:
    """Read every graph from `text`: one per non-blank line for graph6, one per text for edge lists."""
    if fmt == "graph6":
        graphs = []
        for number, raw in enumerate(text.splitlines(), start=1):
            if raw.strip():
                graphs.append(parse_graph6(raw, line=number))
        return graphs
    if fmt == "edgelist":
        return [parse_edgelist(text)]
    raise PreconditionError(cause="unknown graph format %s, expected one of %s" % (fmt, GRAPH_FORMATS))


def parse_weights(text: str) -> Weighting:
    """Parse a JSON array of ``"p/q"`` strings or decimals."""
    try:
        values = json.loads(text)
    except json.JSONDecodeError as err:
        raise GraphFormatError(line=err.lineno, cause="invalid JSON: %s" % err.msg)
    if not isinstance(values, list):
        raise GraphFormatError(line=1, cause="weights must be a JSON array")
    try:
        return Weighting(values)
    except PreconditionError as err:
        raise GraphFormatError(line=1, cause=err.msg)
