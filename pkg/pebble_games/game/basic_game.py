# -*- encoding: utf8 -*-
#
# pebble-games: (k,l)-pebble game algorithms for sparse multigraphs
#
# This program is free software; you can redistribute it and/or
# modify it under the terms of the GNU General Public License
# as published by the Free Software Foundation; either version 2
# of the License, or (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
"""
The basic (k, l)-pebble game: a directed game graph D with free pebbles on
its vertices, pebble collection along reversed paths, edge insertion and the
final four-way classification.
"""
import collections
import dataclasses
import enum
import logging
from typing import Callable, Counter, Dict, FrozenSet, Iterable, Iterator, \
    List, Optional, Set, Tuple

from ..exc import ParameterError, RuleViolationError
from ..graph_model import EdgeSpec, GameParams, MultiGraph

import gettext
t = gettext.translation("pebble-games", fallback=True)
_ = t.gettext

logger = logging.getLogger('pebble-games')


class Classification(enum.Enum):
    """Outcome of a game, equivalently the sparsity class of its input."""
    WellConstrained = 0
    UnderConstrained = 1
    OverConstrained = 2
    Other = 3

    def __str__(self):
        names = {Classification.WellConstrained: _("Well-constrained"),
                 Classification.UnderConstrained: _("Under-constrained"),
                 Classification.OverConstrained: _("Over-constrained"),
                 Classification.Other: _("Other")}
        return names[self]

    @property
    def is_sparse(self) -> bool:
        return self in (Classification.WellConstrained,
                        Classification.UnderConstrained)

    @property
    def is_spanning(self) -> bool:
        return self in (Classification.WellConstrained,
                        Classification.OverConstrained)

    @staticmethod
    def from_flags(sparse: bool, spanning: bool) -> 'Classification':
        if sparse and spanning:
            return Classification.WellConstrained
        if sparse:
            return Classification.UnderConstrained
        if spanning:
            return Classification.OverConstrained
        return Classification.Other


class InsertOutcome(enum.Enum):
    Accepted = True
    Rejected = False

    def __bool__(self):
        return self.value


MoveCallback = Callable[['GameState', str], None]


class GameState:
    """
    Game graph D and pebbles. Non-loop edges are kept as (head, edge) pairs
    in the out-edge list of their tail, loops in the loop list of their
    vertex. For every vertex peb + span + out == k.
    """
    # pylint: disable=too-many-instance-attributes
    def __init__(self, n: int, params: GameParams,
                 move_callback: Optional[MoveCallback] = None):
        self.n = n
        self.params = params
        self.peb: List[int] = [params.k] * n
        self.out_edges: List[List[Tuple[int, EdgeSpec]]] = \
            [[] for _vertex in range(n)]
        self.loops: List[List[EdgeSpec]] = [[] for _vertex in range(n)]
        self.in_tails: List[Counter[int]] = \
            [collections.Counter() for _vertex in range(n)]
        self.accepted: List[EdgeSpec] = []
        self.rejected: List[EdgeSpec] = []
        self.move_callback = move_callback

    def _notify(self, move: str):
        if self.move_callback:
            self.move_callback(self, move)

    def span(self, vertex: int) -> int:
        return len(self.loops[vertex])

    def out(self, vertex: int) -> int:
        return len(self.out_edges[vertex])

    @property
    def free_pebbles(self) -> int:
        return sum(self.peb)

    def pebbles_on(self, u: int, v: int) -> int:
        """Free pebbles on the endpoints of uv, counted once for a loop."""
        if u == v:
            return self.peb[u]
        return self.peb[u] + self.peb[v]

    def peb_of(self, vertices: Iterable[int]) -> int:
        return sum(self.peb[vertex] for vertex in vertices)

    def span_of(self, vertices: Iterable[int]) -> int:
        """Accepted edges (loops included) with both ends in vertices."""
        vertex_set = set(vertices)
        return sum(len(self.loops[vertex]) + sum(
            1 for head, _edge in self.out_edges[vertex] if head in vertex_set)
                   for vertex in vertex_set)

    def out_of(self, vertices: Iterable[int]) -> int:
        """Edges leaving vertices towards the rest of the graph."""
        vertex_set = set(vertices)
        return sum(1 for vertex in vertex_set
                   for head, _edge in self.out_edges[vertex]
                   if head not in vertex_set)

    def spanned_edges(self, vertices: Iterable[int]) -> List[EdgeSpec]:
        """Accepted input edges with both ends in vertices."""
        vertex_set = set(vertices)
        edges: List[EdgeSpec] = []
        for vertex in vertex_set:
            edges.extend(self.loops[vertex])
            edges.extend(edge for head, edge in self.out_edges[vertex]
                         if head in vertex_set)
        return sorted(edges, key=lambda edge: edge.input_index)

    def directed_edges(self) -> Iterator[Tuple[int, int, EdgeSpec]]:
        """(tail, head, edge) for every edge of D, loops included."""
        for vertex in range(self.n):
            for edge in self.loops[vertex]:
                yield vertex, vertex, edge
            for head, edge in self.out_edges[vertex]:
                yield vertex, head, edge

    def in_adjacency(self) -> List[Counter[int]]:
        """
        Tails of the edges entering each vertex (D with edges reversed),
        with multiplicities. Kept up to date by every move; callers must not
        modify it.
        """
        return self.in_tails

    def reach(self, seeds: Iterable[int]) -> Set[int]:
        """Seeds plus every vertex reachable from them along D."""
        seen = set(seeds)
        stack = list(seen)
        while stack:
            vertex = stack.pop()
            for head, _edge in self.out_edges[vertex]:
                if head not in seen:
                    seen.add(head)
                    stack.append(head)
        return seen

    def collect_pebble(self, target: int,
                       protected: FrozenSet[int] = frozenset()) -> bool:
        """
        Bring one free pebble to target by depth-first search in D. Protected
        vertices are neither expanded nor robbed. On success the path to the
        pebble is reversed; on failure nothing changes.
        """
        if self.peb[target] >= self.params.k:
            raise RuleViolationError(
                _("Vertex {vertex} already holds {k} pebbles.").format(
                    vertex=target, k=self.params.k))

        visited = set(protected)
        visited.add(target)
        parent: Dict[int, Tuple[int, int]] = {}
        stack = [(target, 0)]
        while stack:
            vertex, position = stack[-1]
            if position == len(self.out_edges[vertex]):
                stack.pop()
                continue
            stack[-1] = (vertex, position + 1)
            head = self.out_edges[vertex][position][0]
            if head in visited:
                continue
            visited.add(head)
            parent[head] = (vertex, position)
            if self.peb[head] > 0:
                self._move_pebble(target, head, parent)
                return True
            stack.append((head, 0))
        return False

    def _move_pebble(self, target: int, source: int,
                     parent: Dict[int, Tuple[int, int]]):
        vertex = source
        while vertex != target:
            tail, position = parent[vertex]
            head, edge = self.out_edges[tail][position]
            del self.out_edges[tail][position]
            self.out_edges[head].append((tail, edge))
            self._drop_tail(head, tail)
            self.in_tails[tail][head] += 1
            vertex = tail
        self.peb[source] -= 1
        self.peb[target] += 1
        logger.debug("Pebble moved from %d to %d", source, target)
        self._notify('collect')

    def _drop_tail(self, head: int, tail: int):
        incoming = self.in_tails[head]
        incoming[tail] -= 1
        if not incoming[tail]:
            del incoming[tail]

    def gather_pebbles(self, edge: EdgeSpec) -> bool:
        """
        Collect pebbles on the endpoints of edge, filling u first, until
        l + 1 are there or no collection succeeds. Reorientations made on
        the way are kept either way.
        """
        u, v = edge.u, edge.v
        threshold = self.params.ell + 1
        protected = frozenset((u, v))
        k = self.params.k
        while self.pebbles_on(u, v) < threshold:
            if self.peb[u] < k and self.collect_pebble(u, protected):
                continue
            if v != u and self.peb[v] < k and \
                    self.collect_pebble(v, protected):
                continue
            break
        return self.pebbles_on(u, v) >= threshold

    def try_insert_edge(self, edge: EdgeSpec) -> InsertOutcome:
        """Insert the edge if l + 1 pebbles can be gathered on it."""
        if not self.gather_pebbles(edge):
            self.reject(edge)
            return InsertOutcome.Rejected
        self._insert(edge)
        return InsertOutcome.Accepted

    def _insert(self, edge: EdgeSpec):
        tail = edge.u if self.peb[edge.u] > 0 else edge.v
        self.peb[tail] -= 1
        if edge.is_loop:
            self.loops[tail].append(edge)
        else:
            self.out_edges[tail].append((edge.other(tail), edge))
            self.in_tails[edge.other(tail)][tail] += 1
        self.accepted.append(edge)
        logger.debug("Edge %d (%d %d) accepted, tail %d",
                     edge.input_index, edge.u, edge.v, tail)
        self._notify('insert')

    def reject(self, edge: EdgeSpec):
        self.rejected.append(edge)
        logger.debug("Edge %d (%d %d) rejected",
                     edge.input_index, edge.u, edge.v)
        self._notify('reject')

    def classify(self) -> Classification:
        """Exactly l pebbles left means spanning; any rejection means the
        input was not sparse."""
        sparse = not self.rejected
        return Classification.from_flags(
            sparse=sparse, spanning=self.free_pebbles == self.params.ell)

    def result(self) -> 'GameResult':
        return GameResult(classification=self.classify(), state=self,
                          accepted=tuple(self.accepted),
                          rejected=tuple(self.rejected),
                          free_pebbles=self.free_pebbles)


@dataclasses.dataclass(frozen=True)
class GameResult:
    """
    Outcome of a game, fixed when the result is taken. state is the live
    game state, not a copy: later moves on it (find_circuit collects
    pebbles, a driver may keep inserting) change its pebbles and
    orientation but none of the fields here.
    """
    classification: Classification
    state: GameState
    accepted: Tuple[EdgeSpec, ...]
    rejected: Tuple[EdgeSpec, ...]
    free_pebbles: int

    def accepted_graph(self) -> MultiGraph:
        """Accepted edges in input order, original indices kept."""
        return MultiGraph(self.state.n, tuple(
            sorted(self.accepted, key=lambda edge: edge.input_index)))


def init_state(n: int, params: GameParams,
               move_callback: Optional[MoveCallback] = None) -> GameState:
    """Empty game graph on n vertices with k pebbles on each."""
    if n < 1:
        raise ParameterError(_("A game needs at least one vertex."))
    return GameState(n, params, move_callback)


def play_basic(g: MultiGraph, params: GameParams,
               move_callback: Optional[MoveCallback] = None) -> GameResult:
    """Run the basic pebble game over the edges of g in input order."""
    state = init_state(g.n, params, move_callback)
    for edge in g.edges:
        state.try_insert_edge(edge)
    result = state.result()
    logger.info("Basic %s game on %d vertices: %s, %d accepted, "
                "%d rejected", params, g.n, result.classification,
                len(result.accepted), len(result.rejected))
    return result
