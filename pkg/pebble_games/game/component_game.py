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
The component pebble game: the basic game plus component maintenance, so
that an edge inside a known component is rejected without any search.
"""
import logging
from typing import Callable, FrozenSet, Optional, Tuple

from ..graph_model import EdgeSpec, GameParams, MultiGraph
from ..settings import DetectionAlgorithm, Settings
from .basic_game import GameResult, GameState, InsertOutcome, MoveCallback, \
    init_state
from .components import ComponentStore, Decomposition, decompose
from .detection import detect_component_I, detect_component_II

logger = logging.getLogger('pebble-games')

DetectionCallback = Callable[[GameState, EdgeSpec, FrozenSet[int]], None]


class ComponentPebbleGame:
    """
    A component pebble game driven one edge at a time. The store always
    holds the components of the accepted edges.
    """
    def __init__(self, n: int, params: GameParams,
                 detection: Optional[DetectionAlgorithm] = None,
                 move_callback: Optional[MoveCallback] = None,
                 detection_callback: Optional[DetectionCallback] = None):
        self.params = params
        self.state = init_state(n, params, move_callback)
        self.store = ComponentStore.create(n, params)
        self.detection = detection or Settings().detection
        self.detection_callback = detection_callback

    def rejects_outright(self, edge: EdgeSpec) -> bool:
        """Loops in the upper range (l >= k) and edges inside a component
        are dependent."""
        if edge.is_loop and self.params.ell >= self.params.k:
            return True
        return self.store.in_common_component(edge.u, edge.v)

    def insert(self, edge: EdgeSpec) -> InsertOutcome:
        if self.rejects_outright(edge):
            self.state.reject(edge)
            return InsertOutcome.Rejected
        outcome = self.state.try_insert_edge(edge)
        if outcome and \
                self.state.pebbles_on(edge.u, edge.v) == self.params.ell:
            self._detect(edge)
        return outcome

    def _detect(self, edge: EdgeSpec):
        if self.detection is DetectionAlgorithm.I:
            new_set = detect_component_I(
                self.state, edge.u, edge.v, self.store.existing_component())
        else:
            new_set = detect_component_II(self.state, edge.u, edge.v)
        if self.detection_callback:
            self.detection_callback(self.state, edge, new_set)
        if new_set:
            logger.debug("Edge %d completes a component of %d vertices",
                         edge.input_index, len(new_set))
            update_components(self.store, new_set)

    def decomposition(self) -> Decomposition:
        return decompose(self.store, self.state.accepted)

    def result(self) -> Tuple[GameResult, Decomposition]:
        return self.state.result(), self.decomposition()


def in_common_component(store: ComponentStore, u: int, v: int) -> bool:
    return store.in_common_component(u, v)


def update_components(store: ComponentStore, new_set: FrozenSet[int]):
    """
    Lower range: relabel (or mark) the new members. Upper range: drop every
    stored component contained in new_set, then add new_set.
    """
    store.update(new_set)


def play_component(g: MultiGraph, params: GameParams,
                   detection: Optional[DetectionAlgorithm] = None,
                   move_callback: Optional[MoveCallback] = None,
                   detection_callback: Optional[DetectionCallback] = None) \
        -> Tuple[GameResult, Decomposition]:
    """Run the component pebble game over the edges of g in input order."""
    game = ComponentPebbleGame(g.n, params, detection, move_callback,
                               detection_callback)
    for edge in g.edges:
        game.insert(edge)
    result, decomposition = game.result()
    logger.info("Component %s game on %d vertices: %s, %d components",
                params, g.n, result.classification,
                len(decomposition.components))
    return result, decomposition
