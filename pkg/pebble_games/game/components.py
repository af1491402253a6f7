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
Component bookkeeping for the component pebble game. The representation
depends on the range of l:
- l = 0: a mark per vertex (there is at most one component);
- 0 < l <= k: a component label per vertex (components are vertex
  disjoint);
- k < l < 2k: a list of component vertex sets and an n x n matrix telling
  whether two vertices share a component (components overlap in at most
  one vertex).
"""
import abc
import dataclasses
import itertools
import logging
from typing import Dict, FrozenSet, Iterable, List, Optional, Set

import numpy as np

from ..graph_model import EdgeSpec, GameParams, SparsityRange

logger = logging.getLogger('pebble-games')

VertexSet = FrozenSet[int]


class ComponentStore(abc.ABC):
    """Vertex sets of the components detected so far."""
    def __init__(self, n: int, params: GameParams):
        self.n = n
        self.params = params

    @staticmethod
    def create(n: int, params: GameParams) -> 'ComponentStore':
        """The store suited to the range of l."""
        if params.ell == 0:
            return MarkStore(n, params)
        if params.range is SparsityRange.LOWER:
            return LabelStore(n, params)
        return MatrixStore(n, params)

    @abc.abstractmethod
    def in_common_component(self, u: int, v: int) -> bool:
        """Whether some component contains both u and v."""

    @abc.abstractmethod
    def update(self, new_set: Iterable[int]):
        """Record a newly detected component."""

    @abc.abstractmethod
    def components(self) -> List[VertexSet]:
        """Current components."""

    @abc.abstractmethod
    def is_member(self, vertex: int) -> bool:
        """Whether vertex lies in some component."""

    def existing_component(self) -> Optional[VertexSet]:
        """The single component when l = 0, if there is one."""
        return None


class MarkStore(ComponentStore):
    """l = 0: a vertex is marked iff it lies in the component."""
    def __init__(self, n: int, params: GameParams):
        super().__init__(n, params)
        self.marks = [False] * n

    def in_common_component(self, u: int, v: int) -> bool:
        return self.marks[u] and self.marks[v]

    def update(self, new_set: Iterable[int]):
        for vertex in new_set:
            self.marks[vertex] = True

    def components(self) -> List[VertexSet]:
        component = self.existing_component()
        return [component] if component else []

    def is_member(self, vertex: int) -> bool:
        return self.marks[vertex]

    def existing_component(self) -> Optional[VertexSet]:
        marked = frozenset(v for v in range(self.n) if self.marks[v])
        return marked or None


class LabelStore(ComponentStore):
    """0 < l <= k: each vertex carries the label of its component."""
    def __init__(self, n: int, params: GameParams):
        super().__init__(n, params)
        self.labels: List[Optional[int]] = [None] * n
        self._next_label = 0
        if params.ell == params.k:
            # a single vertex is always a block
            for vertex in range(n):
                self.update((vertex,))

    def in_common_component(self, u: int, v: int) -> bool:
        return self.labels[u] is not None and self.labels[u] == self.labels[v]

    def update(self, new_set: Iterable[int]):
        label = self._next_label
        self._next_label += 1
        for vertex in new_set:
            self.labels[vertex] = label

    def components(self) -> List[VertexSet]:
        groups: dict = {}
        for vertex, label in enumerate(self.labels):
            if label is not None:
                groups.setdefault(label, set()).add(vertex)
        return [frozenset(group) for group in groups.values()]

    def is_member(self, vertex: int) -> bool:
        return self.labels[vertex] is not None


class MatrixStore(ComponentStore):
    """
    k < l < 2k: components by id, the ids of the components at each vertex,
    and a boolean n x n matrix of vertex pairs sharing a component.
    """
    def __init__(self, n: int, params: GameParams):
        super().__init__(n, params)
        self._components: Dict[int, VertexSet] = {}
        self._at_vertex: List[Set[int]] = [set() for _vertex in range(n)]
        self._next_id = 0
        self.matrix = np.zeros((n, n), dtype=bool)

    @property
    def component_list(self) -> List[VertexSet]:
        return list(self._components.values())

    def in_common_component(self, u: int, v: int) -> bool:
        return bool(self.matrix[u, v])

    def update(self, new_set: Iterable[int]):
        members = frozenset(new_set)
        touching: Set[int] = set()
        for vertex in members:
            touching.update(self._at_vertex[vertex])
        absorbed = [component_id for component_id in touching
                    if self._components[component_id] <= members]

        # pairs inside the largest absorbed component are already set
        base: VertexSet = max(
            (self._components[component_id] for component_id in absorbed),
            key=len, default=frozenset())
        for component_id in absorbed:
            for vertex in self._components.pop(component_id):
                self._at_vertex[vertex].discard(component_id)

        component_id = self._next_id
        self._next_id += 1
        self._components[component_id] = members
        for vertex in members:
            self._at_vertex[vertex].add(component_id)

        fresh = np.fromiter(sorted(members - base), dtype=np.intp)
        everyone = np.fromiter(sorted(members), dtype=np.intp)
        self.matrix[np.ix_(fresh, everyone)] = True
        self.matrix[np.ix_(everyone, fresh)] = True
        logger.debug("Component of %d vertices absorbed %d components",
                     len(members), len(absorbed))

    def components(self) -> List[VertexSet]:
        return self.component_list

    def is_member(self, vertex: int) -> bool:
        return bool(self.matrix[vertex, vertex])


@dataclasses.dataclass(frozen=True)
class Decomposition:
    """Components, free vertices and free edges of a sparse graph."""
    components: FrozenSet[VertexSet]
    free_vertices: VertexSet
    free_edges: FrozenSet[EdgeSpec]

    def sorted_components(self) -> List[List[int]]:
        return sorted(sorted(component) for component in self.components)


def decompose(store: ComponentStore, accepted: Iterable[EdgeSpec]) -> \
        Decomposition:
    """Read the decomposition off the store once the game is over."""
    components = frozenset(store.components())
    free_vertices: Set[int] = set()
    for vertex in range(store.n):
        if not store.is_member(vertex):
            free_vertices.add(vertex)
    free_edges = frozenset(edge for edge in accepted
                           if not store.in_common_component(edge.u, edge.v))
    return Decomposition(components=components,
                         free_vertices=frozenset(free_vertices),
                         free_edges=free_edges)


def matrix_is_consistent(store: MatrixStore) -> bool:
    """matrix[i, j] holds iff some stored component contains i and j."""
    expected = np.zeros_like(store.matrix)
    for component in store.component_list:
        for i, j in itertools.product(component, repeat=2):
            expected[i, j] = True
    return bool((expected == store.matrix).all())
