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
Henneberg reduction of tight graphs: remove a vertex of degree k + b and
put b edges back among its neighbours, keeping the graph tight, until a
base case is left.
"""
import collections
import dataclasses
import itertools
import logging
from typing import Counter, Iterator, List, Tuple

from ..exc import BaseCaseReached, InternalError, PreconditionError
from ..game.basic_game import Classification
from ..game.component_game import ComponentPebbleGame, play_component
from ..graph_model import EdgeSpec, GameParams, MultiGraph, SparsityRange

import gettext
t = gettext.translation("pebble-games", fallback=True)
_ = t.gettext

logger = logging.getLogger('pebble-games')


@dataclasses.dataclass(frozen=True)
class ReductionStep:
    """
    One reduction. removed_edges are edges of the graph before the step,
    added_edges and reduced live on the graph after it, where every vertex
    above removed_vertex is shifted down by one.
    """
    removed_vertex: int
    removed_edges: Tuple[EdgeSpec, ...]
    added_edges: Tuple[EdgeSpec, ...]
    b: int
    reduced: MultiGraph


def _is_tight(g: MultiGraph, params: GameParams) -> bool:
    result, _decomposition = play_component(g, params)
    return result.classification is Classification.WellConstrained


def _shift_down(vertex: int, removed: int) -> int:
    return vertex - 1 if vertex > removed else vertex


def _shift_up(vertex: int, removed: int) -> int:
    return vertex + 1 if vertex >= removed else vertex


def _pick_vertex(g: MultiGraph) -> int:
    return min(g.vertices, key=lambda vertex: (g.degree(vertex), vertex))


def _target_set(g: MultiGraph, params: GameParams, vertex: int) -> List[int]:
    """Relabelled neighbours of vertex, padded with the lowest non-neighbours
    up to the base-case order in the Szego range."""
    targets = sorted(_shift_down(w, vertex) for w in g.neighbors(vertex))
    if params.is_szego:
        wanted = min(params.szego_order, g.n - 1)
        for candidate in range(g.n - 1):
            if len(targets) >= wanted:
                break
            if candidate not in targets:
                targets.append(candidate)
        targets.sort()
    return targets


def _candidates(params: GameParams, targets: List[int]) -> \
        Iterator[Tuple[int, int]]:
    allow_loops = params.range is SparsityRange.LOWER and params.max_loops > 0
    for a, c in itertools.combinations_with_replacement(targets, 2):
        if a != c or allow_loops:
            yield a, c


def henneberg_step(g: MultiGraph, params: GameParams) -> ReductionStep:
    """Reduce a tight graph by one vertex."""
    if g.weighted:
        g = MultiGraph(g.n, tuple(dataclasses.replace(edge, weight=None)
                                  for edge in g.edges))
    if not _is_tight(g, params):
        raise PreconditionError(
            _("Henneberg reduction needs a {params}-tight graph.").format(
                params=params))
    if g.n <= params.base_case_order:
        raise BaseCaseReached(
            _("A tight graph on {n} vertices is a base case for "
              "{params}.").format(n=g.n, params=params))

    vertex = _pick_vertex(g)
    removed_edges = tuple(g.incident_edges(vertex))
    b = len(removed_edges) - params.k
    if not 0 <= b <= params.k:
        raise InternalError(
            _("Vertex {vertex} has degree {degree}, outside [k, 2k].").format(
                vertex=vertex, degree=len(removed_edges)))

    kept = [dataclasses.replace(edge, u=_shift_down(edge.u, vertex),
                                v=_shift_down(edge.v, vertex))
            for edge in g.edges if vertex not in (edge.u, edge.v)]
    game = ComponentPebbleGame(g.n - 1, params)
    multiplicity: Counter[Tuple[int, int]] = collections.Counter()
    for edge in kept:
        game.insert(edge)
        multiplicity[edge.pair] += 1

    targets = _target_set(g, params, vertex)
    added: List[EdgeSpec] = []
    next_index = max((edge.input_index for edge in g.edges), default=-1) + 1
    for _round in range(b):
        for a, c in _candidates(params, targets):
            cap = params.max_loops if a == c else params.max_multiplicity
            if multiplicity[(a, c)] >= cap or \
                    game.store.in_common_component(a, c):
                continue
            edge = EdgeSpec(a, c, None, next_index)
            if game.insert(edge):
                next_index += 1
                multiplicity[(a, c)] += 1
                added.append(edge)
                break
        else:
            raise InternalError(
                _("No replacement edge among {targets}.").format(
                    targets=targets))

    reduced = MultiGraph(g.n - 1, tuple(kept + added)).reindexed()
    if not _is_tight(reduced, params):
        raise InternalError(
            _("Reducing vertex {vertex} did not give a tight graph.").format(
                vertex=vertex))
    step = ReductionStep(removed_vertex=vertex, removed_edges=removed_edges,
                         added_edges=reduced.edges[len(kept):], b=b,
                         reduced=reduced)
    logger.info("Henneberg step: vertex %d of degree %d removed, %d edges "
                "added", vertex, len(removed_edges), b)
    return step


def henneberg_sequence(g: MultiGraph, params: GameParams) -> \
        List[ReductionStep]:
    """Reduction steps down to a base case; empty for a base case."""
    steps: List[ReductionStep] = []
    current = g
    while True:
        try:
            step = henneberg_step(current, params)
        except BaseCaseReached:
            break
        steps.append(step)
        current = step.reduced
    logger.info("Henneberg sequence of %d steps ends on %d vertices",
                len(steps), current.n)
    return steps


def replay_step(step: ReductionStep) -> MultiGraph:
    """
    The forward extension undoing step: drop the b added edges, make room
    for the removed vertex and give its edges back. Edges are renumbered.
    """
    added = {edge.input_index for edge in step.added_edges}
    removed = step.removed_vertex
    kept = [dataclasses.replace(edge, u=_shift_up(edge.u, removed),
                                v=_shift_up(edge.v, removed))
            for edge in step.reduced.edges if edge.input_index not in added]
    edges = kept + list(step.removed_edges)
    return MultiGraph(step.reduced.n + 1, tuple(
        dataclasses.replace(edge, input_index=index)
        for index, edge in enumerate(edges)))
