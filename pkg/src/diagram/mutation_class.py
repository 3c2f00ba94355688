from __future__ import annotations

import sys
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set, Tuple

import networkx as nx

from src.diagram.canonical import CanonicalDiagram, canonical_form
from src.diagram.diagram import Diagram, diagram_mutate, diagram_of
from src.matrix_core import ExchangeMatrix, is_sign_skew_symmetric
from src.utils.errors import IndeterminateError, RealizabilityError
from src.utils.io import graph_to_dot
from src.utils.settings import EQUIVALENCE_SIZE_CAP, PROGRESS_EVERY


@dataclass
class MutationClassResult:
    """
    Outcome of a mutation-class search.

    `members` maps every canonical form reached to its canonical representative.
    `links` holds the unordered pairs of members joined by a single mutation.
    `reason` is 'closed', 'weight_cap' or 'size_cap'.
    """
    closed: bool
    members: Dict[CanonicalDiagram, Diagram]
    links: Set[Tuple[CanonicalDiagram, CanonicalDiagram]] = field(default_factory=set)
    reason: str = "closed"

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, form: CanonicalDiagram) -> bool:
        return form in self.members

    def sorted_members(self) -> List[CanonicalDiagram]:
        return sorted(self.members)


def mutation_class(gamma: Diagram, weight_cap: Optional[int] = None, size_cap: Optional[int] = None,
                   verbose: bool = False) -> MutationClassResult:
    """
    Breadth-first search over diagram mutations modulo isomorphism.

    Stops with closed=False as soon as an edge heavier than weight_cap appears
    or the number of members exceeds size_cap. Realizability errors from
    diagram_mutate propagate.
    """
    start = canonical_form(gamma)
    members: Dict[CanonicalDiagram, Diagram] = {start: start.to_diagram()}
    links: Set[Tuple[CanonicalDiagram, CanonicalDiagram]] = set()
    if weight_cap is not None and gamma.max_weight() > weight_cap:
        return MutationClassResult(False, members, links, "weight_cap")
    queue = deque([start])
    while queue:
        form = queue.popleft()
        current = members[form]
        for k in range(current.n):
            mutated = diagram_mutate(current, k)
            if weight_cap is not None and mutated.max_weight() > weight_cap:
                return MutationClassResult(False, members, links, "weight_cap")
            image = canonical_form(mutated)
            if image != form:
                links.add((min(form, image), max(form, image)))
            if image in members:
                continue
            members[image] = image.to_diagram()
            if size_cap is not None and len(members) > size_cap:
                return MutationClassResult(False, members, links, "size_cap")
            if verbose and len(members) % PROGRESS_EVERY == 0:
                print(f"[INFO] mutation class: {len(members)} members, {len(queue)} queued", file=sys.stderr)
            queue.append(image)
    return MutationClassResult(True, members, links, "closed")


def is_2_finite(gamma: Diagram, size_cap: Optional[int] = None) -> bool:
    """
    True iff every diagram in the mutation class has all weights at most 3.

    A diagram that stops being realizable along some mutation path has no
    2-finite realization, so realizability errors count as 2-infinite.
    """
    try:
        result = mutation_class(gamma, weight_cap=3, size_cap=size_cap)
    except RealizabilityError:
        return False
    if result.reason == "size_cap":
        raise IndeterminateError(f"mutation class exceeded {size_cap} members before closing")
    return result.closed


def are_mutation_equivalent(gamma1: Diagram, gamma2: Diagram, size_cap: int = EQUIVALENCE_SIZE_CAP) -> bool:
    """
    Decides mutation equivalence of two diagrams.

    Both classes are grown one BFS layer at a time, smaller frontier first,
    until they meet or one of them closes. IndeterminateError is raised when
    both searches pass size_cap without meeting.
    """
    if gamma1.n != gamma2.n:
        return False
    searches = [_LayeredSearch(gamma1), _LayeredSearch(gamma2)]
    if searches[0].start == searches[1].start:
        return True
    while True:
        if searches[0].seen.keys() & searches[1].seen.keys():
            return True
        for s in searches:
            if s.closed:
                other = searches[1] if s is searches[0] else searches[0]
                return other.start in s.seen
        if all(len(s.seen) > size_cap for s in searches):
            raise IndeterminateError(
                f"both mutation classes exceed {size_cap} members without meeting")
        searches.sort(key=lambda s: (len(s.seen) > size_cap, len(s.frontier)))
        searches[0].advance()


class _LayeredSearch:
    def __init__(self, gamma: Diagram):
        self.start = canonical_form(gamma)
        self.seen: Dict[CanonicalDiagram, Diagram] = {self.start: self.start.to_diagram()}
        self.frontier: List[CanonicalDiagram] = [self.start]

    @property
    def closed(self) -> bool:
        return not self.frontier

    def advance(self):
        layer = []
        for form in self.frontier:
            current = self.seen[form]
            for k in range(current.n):
                image = canonical_form(diagram_mutate(current, k))
                if image not in self.seen:
                    self.seen[image] = image.to_diagram()
                    layer.append(image)
        self.frontier = layer


def class_graph(result: MutationClassResult) -> nx.Graph:
    """Members as nodes 0..N-1 in canonical order, one edge per single-mutation link."""
    order = result.sorted_members()
    index = {form: i for i, form in enumerate(order)}
    G = nx.Graph()
    for form in order:
        G.add_node(index[form], label=str(result.members[form]))
    for a, b in sorted(result.links):
        G.add_edge(index[a], index[b])
    return G


def is_2_finite_matrix(B: ExchangeMatrix, size_cap: Optional[int] = None) -> bool:
    """Sign-skew-symmetric with a 2-finite diagram."""
    if not is_sign_skew_symmetric(B):
        return False
    return is_2_finite(diagram_of(B), size_cap)


def class_to_dot(result: MutationClassResult) -> str:
    return graph_to_dot(class_graph(result), "mutation_class")
