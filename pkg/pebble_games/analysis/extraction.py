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
"""Extraction of a maximal sparse subgraph and weighted optimization."""
import logging
from typing import Optional

from ..exc import ParameterError
from ..game.basic_game import play_basic
from ..game.component_game import play_component
from ..graph_model import GameParams, MultiGraph
from ..settings import DetectionAlgorithm, Engine, Settings

import gettext
t = gettext.translation("pebble-games", fallback=True)
_ = t.gettext

logger = logging.getLogger('pebble-games')


def extract_max_sparse(g: MultiGraph, params: GameParams,
                       detection: Optional[DetectionAlgorithm] = None,
                       engine: Optional[Engine] = None) -> MultiGraph:
    """
    Accepted edges of a game played on g. The result is sparse and every
    edge of g left out of it is dependent on it.
    """
    engine = engine or Settings().engine
    if engine is Engine.BASIC:
        return play_basic(g, params).accepted_graph()
    result, _decomposition = play_component(g, params, detection)
    return result.accepted_graph()


def optimize(g: MultiGraph, params: GameParams, ascending: bool = False,
             detection: Optional[DetectionAlgorithm] = None) -> MultiGraph:
    """
    Greedy basis of the sparsity matroid: edges are offered heaviest first
    (lightest first with ascending), ties broken by input index.
    """
    if any(edge.weight is None for edge in g.edges):
        raise ParameterError(_("Optimization needs a weight on every edge."))

    if ascending:
        order = sorted(g.edges,
                       key=lambda edge: (edge.weight, edge.input_index))
    else:
        order = sorted(g.edges, key=lambda edge:
                       (-(edge.weight or 0), edge.input_index))
    result, _decomposition = play_component(MultiGraph(g.n, tuple(order)),
                                            params, detection)
    basis = result.accepted_graph()
    logger.info("Optimal basis: %d edges, total weight %s", basis.m,
                basis.total_weight())
    return basis
