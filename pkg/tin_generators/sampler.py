"""Seeded random {P_r, K_{2,t}}-free graphs, and the generator spec shared by the CLI."""

import json
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping

import networkx as nx
import numpy as np

from tin_common.errors import PreconditionError
from tin_common.graph import Graph, components
from tin_generators.enumeration import enumerate_graphs
from tin_generators.named import named
from tin_generators.planted import planted_pyramid
from tin_patterns.paths import find_induced_path, find_k2t

__all__ = ["sample_free", "largest_component", "random_gnp", "GeneratorSpec", "GENERATOR_KINDS"]

logger = logging.getLogger(__name__)

GENERATOR_KINDS = ("Named", "RandomGnp", "FreeRepair", "Planted", "Enumerate")


def random_gnp(n: int, p: float, seed: int = 0) -> Graph:
    if n < 0 or not 0 <= p <= 1:
        raise PreconditionError(cause="G(n, p) needs n >= 0 and 0 <= p <= 1, got n=%s p=%s" % (n, p))
    return Graph.from_networkx(nx.gnp_random_graph(n, p, seed=seed))


def sample_free(n: int, t: int, p: float, seed: int = 0, r: int = 6) -> Graph:
    """Sample G(n, p) and delete witness vertices until no induced P_r or K_{2,t} remains.

    Each round deletes one vertex of the first witness found, chosen by
    a numpy generator seeded with `seed`. The result is relabelled
    ``0..n'-1``; its `labels` are the sampled ids it kept.
    """
    if n < 1 or t < 2 or not 0 <= p <= 1:
        raise PreconditionError(cause="sample_free needs n >= 1, t >= 2 and 0 <= p <= 1, "
                                      "got n=%s t=%s p=%s" % (n, t, p))
    rng = np.random.default_rng(seed)
    G = random_gnp(n, p, int(rng.integers(2 ** 31)))
    kept = list(range(n))
    deleted = 0
    while True:
        witness = find_induced_path(G, r)
        if witness is None:
            found = find_k2t(G, t)
            witness = None if found is None else list(found[0]) + list(found[1])
        if witness is None:
            break
        victim = int(witness[int(rng.integers(len(witness)))])
        G = G.without([victim])
        kept.pop(victim)
        deleted += 1
    logger.debug(f"sample_free(n={n}, t={t}, p={p}, seed={seed}): deleted {deleted}, "
                 f"{len(components(G))} components")
    return Graph(G.n, G.edges(), labels=kept)


def largest_component(G: Graph) -> Graph:
    """G restricted to its largest component; ties go to the smallest minimum vertex."""
    parts = components(G)
    if not parts:
        return G
    biggest = max(parts, key=lambda D: (len(D), -min(D)))
    return G.induced_subgraph(biggest)


@dataclass(frozen=True)
class GeneratorSpec:
    """What to generate; `seed` fully determines the output."""

    kind: str
    params: Mapping[str, Any] = field(default_factory=dict)
    seed: int = 0

    def __post_init__(self):
        if self.kind not in GENERATOR_KINDS:
            raise PreconditionError(cause="unknown generator kind %s, expected one of %s"
                                    % (self.kind, ", ".join(GENERATOR_KINDS)))

    @classmethod
    def from_json(cls, text: str) -> "GeneratorSpec":
        try:
            data = json.loads(text)
            return cls(data["kind"], dict(data.get("params", {})), int(data.get("seed", 0)))
        except (ValueError, KeyError, TypeError) as err:
            raise PreconditionError(cause="malformed generator spec: %s" % err)

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind, "params": dict(self.params), "seed": self.seed}

    def generate(self) -> List[Graph]:
        params = dict(self.params)
        try:
            if self.kind == "Named":
                kind = params.pop("name", None)
                return [named(kind, **params)]
            if self.kind == "RandomGnp":
                return [random_gnp(int(params["n"]), float(params["p"]), self.seed)]
            if self.kind == "FreeRepair":
                return [sample_free(int(params["n"]), int(params.get("t", 2)), float(params["p"]), self.seed,
                                    int(params.get("r", 6)))]
            if self.kind == "Planted":
                return [planted_pyramid(**params)[0]]
            return list(enumerate_graphs(int(params["n"])))
        except KeyError as err:
            raise PreconditionError(cause="%s generator needs the parameter %s" % (self.kind, err))
