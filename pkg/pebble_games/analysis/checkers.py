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
"""Necessary conditions every tight graph meets, used as property checks."""
from typing import Dict, Iterable, Sequence

from ..exc import ParameterError
from ..graph_model import GameParams, MultiGraph, SparsityRange

import gettext
t = gettext.translation("pebble-games", fallback=True)
_ = t.gettext


def _part_of(g: MultiGraph, params: GameParams,
             partition: Sequence[Iterable[int]]) -> Dict[int, int]:
    owner: Dict[int, int] = {}
    for index, part in enumerate(partition):
        part = list(part)
        if not part:
            raise ParameterError(_("Partition parts must not be empty."))
        if params.range is SparsityRange.UPPER and len(part) < 2:
            raise ParameterError(
                _("For {params} every part needs at least two "
                  "vertices.").format(params=params))
        for vertex in part:
            g.check_vertex(vertex)
            if vertex in owner:
                raise ParameterError(
                    _("Vertex {vertex} is in more than one part.").format(
                        vertex=vertex))
            owner[vertex] = index
    if len(owner) != g.n:
        raise ParameterError(_("The partition does not cover every vertex."))
    return owner


def partition_bound_check(g: MultiGraph, params: GameParams,
                          partition: Sequence[Iterable[int]]) -> bool:
    """
    A tight graph has at least l(p - 1) edges between the p parts of any
    partition of its vertices.
    """
    owner = _part_of(g, params, partition)
    crossing = sum(1 for edge in g.edges if owner[edge.u] != owner[edge.v])
    return crossing >= params.ell * (len(partition) - 1)


def min_degree_check(g: MultiGraph, params: GameParams) -> bool:
    """
    Every vertex of a tight graph has degree at least k and, when l > 0,
    at least one edge to the rest of the graph.
    """
    for vertex in g.vertices:
        if g.degree(vertex) < params.k:
            return False
        if params.ell > 0 and g.n > 1 and not g.neighbors(vertex):
            return False
    return True
