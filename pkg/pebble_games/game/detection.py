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
Detection of the component formed by a freshly inserted edge uv.

Both detectors return the empty set when the edge is free: more than l
pebbles stay on u and v, or some vertex of Reach(u, v) other than u and v
still holds a pebble. The l pebbles left on u and v belong to the block.
"""
import collections
from typing import AbstractSet, FrozenSet, Optional, Set

from ..exc import InternalError
from .basic_game import GameState

import gettext
t = gettext.translation("pebble-games", fallback=True)
_ = t.gettext

EMPTY: FrozenSet[int] = frozenset()


def _block_reach(state: GameState, u: int, v: int) -> Optional[Set[int]]:
    """Reach(u, v) when it spans a block, None when the edge is free."""
    on_edge = state.pebbles_on(u, v)
    if on_edge < state.params.ell:
        raise InternalError(
            _("Detection needs at least {ell} pebbles on {u} and {v}, "
              "found {found}.").format(ell=state.params.ell, u=u, v=v,
                                       found=on_edge))
    if on_edge > state.params.ell:
        return None
    reach = state.reach((u, v))
    if any(state.peb[w] > 0 for w in reach if w not in (u, v)):
        return None
    return reach


def detect_component_I(state: GameState, u: int, v: int,
                       prev_l0: Optional[AbstractSet[int]] = None) -> \
        FrozenSet[int]:
    """
    Grow the block Reach(u, v) breadth-first over incoming edges: a vertex
    w outside joins, with Reach(w), when Reach(w) holds no free pebble
    outside u and v. For l = 0 the previous component is merged in.
    """
    # pylint: disable=invalid-name
    component = _block_reach(state, u, v)
    if component is None:
        return EMPTY

    incoming = state.in_adjacency()
    queue: collections.deque = collections.deque()
    enqueued: Set[int] = set()

    def enqueue_tails(vertices):
        for vertex in vertices:
            for tail in incoming[vertex]:
                if tail not in component and tail not in enqueued:
                    enqueued.add(tail)
                    queue.append(tail)

    enqueue_tails(component)
    while queue:
        w = queue.popleft()
        if w in component:
            continue
        w_reach = state.reach((w,))
        if all(state.peb[x] == 0 for x in w_reach if x not in (u, v)):
            component |= w_reach
            enqueue_tails(w_reach)

    if state.params.ell == 0 and prev_l0:
        component |= prev_l0
    return frozenset(component)


def detect_component_II(state: GameState, u: int, v: int) -> FrozenSet[int]:
    """
    Search D with reversed edges from every pebbled vertex outside
    Reach(u, v); the vertices never visited form the new component.
    """
    # pylint: disable=invalid-name
    block = _block_reach(state, u, v)
    if block is None:
        return EMPTY

    incoming = state.in_adjacency()
    visited = [False] * state.n
    for start in range(state.n):
        if start in block or state.peb[start] == 0 or visited[start]:
            continue
        visited[start] = True
        stack = [start]
        while stack:
            vertex = stack.pop()
            for tail in incoming[vertex]:
                if not visited[tail]:
                    visited[tail] = True
                    stack.append(tail)
    return frozenset(vertex for vertex in range(state.n)
                     if not visited[vertex])
