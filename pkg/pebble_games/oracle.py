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
Brute-force ground truth on small graphs: every nonempty vertex subset is
enumerated as a bitmask and its induced edge count compared with
max(0, k|V'| - l). Nothing here is meant to be fast.
"""
import logging
from typing import FrozenSet, List, Optional, Set, Tuple

import numpy as np

from .exc import CapacityError, PreconditionError
from .game.basic_game import Classification
from .graph_model import EdgeSpec, GameParams, MultiGraph
from .settings import Settings

import gettext
t = gettext.translation("pebble-games", fallback=True)
_ = t.gettext

logger = logging.getLogger('pebble-games')


class SubsetTable:
    """Size, induced edge count and sparsity bound of every vertex subset."""
    def __init__(self, g: MultiGraph, params: GameParams,
                 limit: Optional[int] = None):
        if limit is None:
            limit = Settings().oracle_limit
        if g.n > limit:
            raise CapacityError(
                _("The oracle handles at most {limit} vertices, the graph "
                  "has {n}.").format(limit=limit, n=g.n))
        self.n = g.n
        self.params = params
        self.masks = np.arange(1, 1 << g.n, dtype=np.int64)
        self.sizes = np.zeros_like(self.masks)
        for bit in range(g.n):
            self.sizes += (self.masks >> bit) & 1
        self.bounds = np.maximum(0, params.k * self.sizes - params.ell)
        self.counts = np.zeros_like(self.masks)
        for edge in g.edges:
            self.add(edge)

    def containing(self, edge: EdgeSpec) -> np.ndarray:
        edge_mask = (1 << edge.u) | (1 << edge.v)
        return (self.masks & edge_mask) == edge_mask

    def add(self, edge: EdgeSpec):
        self.counts += self.containing(edge)

    def fits(self, edge: EdgeSpec) -> bool:
        """Whether adding edge keeps every subset within its bound."""
        hit = self.containing(edge)
        return bool(np.all(self.counts[hit] < self.bounds[hit]))

    def is_sparse(self) -> bool:
        return bool(np.all(self.counts <= self.bounds))

    def block_masks(self) -> np.ndarray:
        exact = self.params.k * self.sizes - self.params.ell
        return self.masks[self.counts == exact]

    def vertex_set(self, mask: int) -> FrozenSet[int]:
        return frozenset(vertex for vertex in range(self.n)
                         if (mask >> vertex) & 1)


def oracle_is_sparse(g: MultiGraph, params: GameParams,
                     limit: Optional[int] = None) -> bool:
    return SubsetTable(g, params, limit).is_sparse()


def oracle_is_tight(g: MultiGraph, params: GameParams,
                    limit: Optional[int] = None) -> bool:
    table = SubsetTable(g, params, limit)
    return g.m == params.tight_edge_count(g.n) and table.is_sparse()


def oracle_max_sparse(g: MultiGraph, params: GameParams,
                      limit: Optional[int] = None) -> MultiGraph:
    """Greedy maximal sparse subgraph, edges scanned in input order."""
    table = SubsetTable(g.subgraph(()), params, limit)
    kept: List[EdgeSpec] = []
    for edge in g.edges:
        if table.fits(edge):
            table.add(edge)
            kept.append(edge)
    return g.subgraph(kept)


def oracle_is_spanning(g: MultiGraph, params: GameParams,
                       limit: Optional[int] = None) -> bool:
    rank = oracle_max_sparse(g, params, limit).m
    return rank == params.tight_edge_count(g.n)


def oracle_classify(g: MultiGraph, params: GameParams,
                    limit: Optional[int] = None) -> Classification:
    return Classification.from_flags(
        sparse=oracle_is_sparse(g, params, limit),
        spanning=oracle_is_spanning(g, params, limit))


def oracle_blocks(g: MultiGraph, params: GameParams,
                  limit: Optional[int] = None) -> List[FrozenSet[int]]:
    """Every vertex subset spanning exactly k|V'| - l edges."""
    table = SubsetTable(g, params, limit)
    return [table.vertex_set(int(mask)) for mask in table.block_masks()]


def oracle_components(g: MultiGraph, params: GameParams,
                      limit: Optional[int] = None) -> Set[FrozenSet[int]]:
    """
    Inclusion-maximal blocks of a sparse graph. For l = 0 the union of all
    blocks is a block, so there is at most one component.
    """
    table = SubsetTable(g, params, limit)
    if not table.is_sparse():
        raise PreconditionError(_("Components are defined for sparse graphs "
                                  "only."))
    blocks = [table.vertex_set(int(mask)) for mask in table.block_masks()]
    if not blocks:
        return set()
    if params.ell == 0:
        return {frozenset().union(*blocks)}

    maximal: List[FrozenSet[int]] = []
    for block in sorted(blocks, key=len, reverse=True):
        if not any(block <= bigger for bigger in maximal):
            maximal.append(block)
    logger.debug("Oracle found %d blocks, %d components", len(blocks),
                 len(maximal))
    return set(maximal)


def oracle_minimal_violation(g: MultiGraph, params: GameParams,
                             limit: Optional[int] = None) -> \
        Optional[Tuple[FrozenSet[int], int]]:
    """Smallest vertex subset exceeding its bound, with its edge count."""
    table = SubsetTable(g, params, limit)
    over = np.nonzero(table.counts > table.bounds)[0]
    if over.size == 0:
        return None
    best = over[np.argmin(table.sizes[over])]
    return table.vertex_set(int(table.masks[best])), int(table.counts[best])
