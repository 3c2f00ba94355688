from __future__ import annotations

import sys
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import networkx as nx

from src.engine.laurent import LaurentExpression, LaurentRing
from src.engine.seed import Seed, seed_mutate
from src.utils.io import graph_to_dot
from src.utils.settings import DEFAULT_SEED_CAP, PROGRESS_EVERY

VariableKey = Tuple


@dataclass
class EngineRun:
    """
    The part of the exchange graph reached from one seed.

    `seeds[i]` is node i of `graph`, stored with its positions sorted by
    variable; each edge carries `exchanged = (gone, came)` as variable keys
    in the direction of discovery. `variables` lists every cluster variable
    met, in discovery order.
    """
    seeds: List[Seed]
    graph: nx.Graph
    variables: Dict[VariableKey, LaurentExpression] = field(default_factory=dict)
    closed: bool = True

    @property
    def ring(self) -> LaurentRing:
        return self.seeds[0].ring

    @property
    def initial(self) -> Seed:
        return self.seeds[0]

    def variable_list(self) -> List[LaurentExpression]:
        return list(self.variables.values())

    def seed_index(self, seed: Seed) -> Optional[int]:
        key = seed.key()
        for i, s in enumerate(self.seeds):
            if s.key() == key:
                return i
        return None


def build_exchange_graph(seed: Seed, seed_cap: int = DEFAULT_SEED_CAP, verbose: bool = False) -> EngineRun:
    """
    Breadth-first search over seed mutations, seeds identified modulo
    simultaneous relabeling. closed=False when more than seed_cap seeds turn up.
    """
    start = seed.canonical()
    index: Dict[Tuple, int] = {start.key(): 0}
    run = EngineRun([start], nx.Graph())
    run.graph.add_node(0)
    for v in start.cluster:
        run.variables.setdefault(v.key, v)
    queue = deque([0])
    while queue:
        i = queue.popleft()
        current = run.seeds[i]
        for z in range(current.n):
            step = seed_mutate(current, z)
            came = step.cluster[z]
            mutated = step.canonical()
            key = mutated.key()
            run.variables.setdefault(came.key, came)
            j = index.get(key)
            if j is None:
                if len(run.seeds) >= seed_cap:
                    run.closed = False
                    if verbose:
                        print(f"Warning: exchange graph not closed after {seed_cap} seeds", file=sys.stderr)
                    return run
                j = len(run.seeds)
                index[key] = j
                run.seeds.append(mutated)
                run.graph.add_node(j)
                queue.append(j)
                if verbose and len(run.seeds) % PROGRESS_EVERY == 0:
                    print(f"[INFO] exchange graph: {len(run.seeds)} seeds, {len(queue)} queued", file=sys.stderr)
            if not run.graph.has_edge(i, j):
                run.graph.add_edge(i, j, exchanged=(current.cluster[z].key, came.key))
    if verbose:
        print(f"[INFO] exchange graph closed: {len(run.seeds)} seeds, {len(run.variables)} variables",
              file=sys.stderr)
    return run


def exchange_graph_to_networkx(run: EngineRun) -> nx.Graph:
    """Copy of the run graph with printable node and edge labels."""
    text = {key: str(v) for key, v in run.variables.items()}
    G = nx.Graph()
    for i, s in enumerate(run.seeds):
        G.add_node(i, label=", ".join(str(v) for v in s.cluster))
    for i, j, data in run.graph.edges(data=True):
        gone, came = data["exchanged"]
        G.add_edge(i, j, label=f"{text[gone]} <-> {text[came]}")
    return G


def exchange_graph_to_dot(run: EngineRun) -> str:
    return graph_to_dot(exchange_graph_to_networkx(run), "exchange_graph")


def run_summary(run: EngineRun) -> dict:
    return {
        "closed": run.closed,
        "seeds": len(run.seeds),
        "edges": run.graph.number_of_edges(),
        "variables": [str(v) for v in run.variables.values()],
    }
