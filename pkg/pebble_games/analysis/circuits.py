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
Circuits of dependent edges, and the redundancy analysis built on them.

For a dependent edge uv, once no further pebble can be brought to u or v,
Reach(u, v) is the smallest block containing both endpoints. Its accepted
edges together with uv form the circuit of uv.
"""
import dataclasses
import logging
from typing import FrozenSet, List, Optional, Set, Tuple

from ..exc import PreconditionError
from ..game.basic_game import GameState, init_state
from ..game.component_game import ComponentPebbleGame, play_component
from ..graph_model import EdgeSpec, GameParams, MultiGraph
from ..settings import DetectionAlgorithm, Engine, Settings

import gettext
t = gettext.translation("pebble-games", fallback=True)
_ = t.gettext

logger = logging.getLogger('pebble-games')


@dataclasses.dataclass(frozen=True)
class Circuit:
    """A minimal sparsity violation: vertices and input edges."""
    vertex_set: FrozenSet[int]
    edge_set: Tuple[EdgeSpec, ...]

    @property
    def vertices(self) -> List[int]:
        return sorted(self.vertex_set)

    def violates(self, params: GameParams) -> bool:
        return len(self.edge_set) > params.bound(len(self.vertex_set))

    def as_graph(self, n: int) -> MultiGraph:
        return MultiGraph(n, self.edge_set)


@dataclasses.dataclass(frozen=True)
class RedundancyReport:
    is_redundant: bool
    bridges: Tuple[EdgeSpec, ...]
    redundant_components: FrozenSet[FrozenSet[int]]
    circuits: Tuple[Circuit, ...] = ()


def find_circuit(state: GameState, edge: EdgeSpec) -> Circuit:
    """
    Circuit of a dependent edge with respect to the accepted edges of
    state. Pebbles may be moved on the way; the accepted edges stay the
    same.
    """
    if edge.is_loop and state.params.ell >= state.params.k:
        # a single vertex may span no edge at all
        return Circuit(frozenset((edge.u,)), (edge,))

    if state.gather_pebbles(edge):
        raise PreconditionError(
            _("Edge {edge} is independent and lies in no circuit.").format(
                edge=edge))

    reach = state.reach((edge.u, edge.v))
    edges = state.spanned_edges(reach) + [edge]
    circuit = Circuit(frozenset(reach),
                      tuple(sorted(edges, key=lambda e: e.input_index)))
    logger.debug("Circuit of edge %d: %d vertices, %d edges",
                 edge.input_index, len(circuit.vertex_set),
                 len(circuit.edge_set))
    return circuit


def all_circuits(g: MultiGraph, params: GameParams,
                 detection: Optional[DetectionAlgorithm] = None,
                 engine: Optional[Engine] = None) -> List[Circuit]:
    """Circuit of every edge rejected while playing on g, in input order."""
    engine = engine or Settings().engine
    circuits: List[Circuit] = []
    if engine is Engine.BASIC:
        state = init_state(g.n, params)
        for edge in g.edges:
            if not state.try_insert_edge(edge):
                circuits.append(find_circuit(state, edge))
        return circuits

    game = ComponentPebbleGame(g.n, params, detection)
    for edge in g.edges:
        if not game.insert(edge):
            circuits.append(find_circuit(game.state, edge))
    return circuits


def redundancy(g: MultiGraph, params: GameParams,
               detection: Optional[DetectionAlgorithm] = None) -> \
        RedundancyReport:
    """
    Mark every edge of every circuit met during the game. g is redundant
    when it is spanning and every edge got marked; unmarked accepted edges
    are bridges.
    """
    game = ComponentPebbleGame(g.n, params, detection)
    circuits: List[Circuit] = []
    marked: Set[int] = set()
    for edge in g.edges:
        if not game.insert(edge):
            circuit = find_circuit(game.state, edge)
            circuits.append(circuit)
            marked.update(member.input_index for member in circuit.edge_set)

    result, _decomposition = game.result()
    bridges = tuple(edge for edge in result.accepted_graph().edges
                    if edge.input_index not in marked)
    is_redundant = result.classification.is_spanning and \
        len(marked) == g.m

    remainder = g.without(bridges)
    _result, decomposition = play_component(remainder, params, detection)
    redundant_components = frozenset(
        component for component in decomposition.components
        if remainder.induced_edge_count(component) > 0)

    logger.info("Redundancy: %s, %d bridges, %d redundant components",
                is_redundant, len(bridges), len(redundant_components))
    return RedundancyReport(is_redundant=is_redundant, bridges=bridges,
                            redundant_components=redundant_components,
                            circuits=tuple(circuits))
