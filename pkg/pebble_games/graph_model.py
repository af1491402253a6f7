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
Multigraph model: edges, graphs, (k, l) parameters, the graph text format
and the canonical tight graphs.
"""
import dataclasses
import enum
import itertools
from fractions import Fraction
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, \
    Union, TextIO, FrozenSet

from .exc import GraphParseError, ParameterError

import gettext
t = gettext.translation("pebble-games", fallback=True)
_ = t.gettext

Weight = Fraction


@dataclasses.dataclass(frozen=True)
class EdgeSpec:
    """
    One input edge. A loop has u == v. input_index identifies the edge
    within its graph, so parallel edges stay distinguishable.
    """
    u: int
    v: int
    weight: Optional[Weight] = None
    input_index: int = 0

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    @property
    def pair(self) -> Tuple[int, int]:
        """Endpoints as an ordered pair (smaller first)."""
        return (self.u, self.v) if self.u <= self.v else (self.v, self.u)

    def other(self, vertex: int) -> int:
        """The endpoint opposite to vertex."""
        return self.v if vertex == self.u else self.u

    def __str__(self):
        if self.weight is None:
            return f"{self.u} {self.v}"
        return f"{self.u} {self.v} {format_weight(self.weight)}"


@dataclasses.dataclass(frozen=True)
class MultiGraph:
    """Undirected multigraph on vertices 0..n-1, edges in input order."""
    n: int
    edges: Tuple[EdgeSpec, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ParameterError(_("Vertex count must not be negative."))
        seen = set()
        weighted = None
        for edge in self.edges:
            for endpoint in (edge.u, edge.v):
                if not 0 <= endpoint < self.n:
                    raise ParameterError(
                        _("Edge {edge} has an endpoint outside 0..{last}.")
                        .format(edge=edge, last=self.n - 1))
            if edge.input_index in seen:
                raise ParameterError(
                    _("Duplicate input index {index}.").format(
                        index=edge.input_index))
            seen.add(edge.input_index)
            has_weight = edge.weight is not None
            if weighted is None:
                weighted = has_weight
            elif weighted != has_weight:
                raise ParameterError(
                    _("Weighted and unweighted edges cannot be mixed."))

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Tuple[int, int]],
                   weights: Optional[Sequence[Union[int, str, Weight]]] =
                   None) -> 'MultiGraph':
        """Build a graph from (u, v) pairs, numbering edges from 0."""
        pairs = list(pairs)
        if weights is not None and len(weights) != len(pairs):
            raise ParameterError(_("Need exactly one weight per edge."))
        edges = tuple(
            EdgeSpec(u, v,
                     None if weights is None else Fraction(weights[index]),
                     index)
            for index, (u, v) in enumerate(pairs))
        return cls(n, edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def weighted(self) -> bool:
        return bool(self.edges) and self.edges[0].weight is not None

    @property
    def vertices(self) -> range:
        return range(self.n)

    def __iter__(self) -> Iterator[EdgeSpec]:
        return iter(self.edges)

    def check_vertex(self, vertex: int):
        if not 0 <= vertex < self.n:
            raise ParameterError(
                _("Vertex {vertex} is not in 0..{last}.").format(
                    vertex=vertex, last=self.n - 1))

    def degree(self, vertex: int) -> int:
        """Number of incident edges; a loop is one incident edge."""
        self.check_vertex(vertex)
        return sum(1 for edge in self.edges if vertex in (edge.u, edge.v))

    def loops_at(self, vertex: int) -> int:
        return sum(1 for edge in self.edges
                   if edge.is_loop and edge.u == vertex)

    def loop_count(self) -> int:
        return sum(1 for edge in self.edges if edge.is_loop)

    def multiplicity(self, u: int, v: int) -> int:
        pair = (u, v) if u <= v else (v, u)
        return sum(1 for edge in self.edges if edge.pair == pair)

    def neighbors(self, vertex: int) -> FrozenSet[int]:
        """Vertices joined to vertex by a non-loop edge."""
        return frozenset(edge.other(vertex) for edge in self.edges
                         if not edge.is_loop and vertex in (edge.u, edge.v))

    def incident_edges(self, vertex: int) -> List[EdgeSpec]:
        return [edge for edge in self.edges if vertex in (edge.u, edge.v)]

    def induced_edge_count(self, vertices: Iterable[int]) -> int:
        """Number of edges (loops included) with both ends in vertices."""
        vertex_set = set(vertices)
        return sum(1 for edge in self.edges
                   if edge.u in vertex_set and edge.v in vertex_set)

    def subgraph(self, edges: Iterable[EdgeSpec]) -> 'MultiGraph':
        """Same vertices, given edges; input indices are kept."""
        return MultiGraph(self.n, tuple(edges))

    def without(self, edges: Iterable[EdgeSpec]) -> 'MultiGraph':
        removed = {edge.input_index for edge in edges}
        return self.subgraph(edge for edge in self.edges
                             if edge.input_index not in removed)

    def reindexed(self) -> 'MultiGraph':
        """Same edges in the same order, numbered 0..m-1."""
        return MultiGraph(self.n, tuple(
            dataclasses.replace(edge, input_index=index)
            for index, edge in enumerate(self.edges)))

    def total_weight(self) -> Weight:
        return sum((edge.weight for edge in self.edges
                    if edge.weight is not None), Fraction(0))


def degree(g: MultiGraph, vertex: int) -> int:
    """Degree of a vertex of g; a loop contributes one."""
    return g.degree(vertex)


class SparsityRange(enum.Enum):
    """Range of l: lower is [0, k] (threshold included), upper (k, 2k)."""
    LOWER = 'lower'
    UPPER = 'upper'


@dataclasses.dataclass(frozen=True)
class GameParams:
    """
    The pair (k, l): k initial pebbles per vertex, l + 1 the pebble count
    needed on the endpoints to accept an edge. 0 <= l < 2k.
    """
    k: int
    ell: int

    def __post_init__(self):
        if not isinstance(self.k, int) or not isinstance(self.ell, int):
            raise ParameterError(_("k and l must be integers."))
        if self.k < 1:
            raise ParameterError(_("k must be at least 1."))
        if self.ell < 0:
            raise ParameterError(
                _("l must not be negative: disjoint unions of sparse graphs "
                  "would stop being sparse."))
        if self.ell >= 2 * self.k:
            raise ParameterError(
                _("l must be smaller than 2k: only the empty graph would be "
                  "sparse."))

    def __str__(self):
        return f"({self.k},{self.ell})"

    @property
    def range(self) -> SparsityRange:
        if self.ell <= self.k:
            return SparsityRange.LOWER
        return SparsityRange.UPPER

    @property
    def is_szego(self) -> bool:
        """l in [3k/2, 2k): no tight graphs on small vertex sets."""
        return 2 * self.ell >= 3 * self.k

    @property
    def szego_order(self) -> int:
        """ceil(l / (2k - l))"""
        return -(-self.ell // (2 * self.k - self.ell))

    @property
    def min_tight_order(self) -> int:
        if self.range is SparsityRange.LOWER:
            return 1
        if not self.is_szego:
            return 2
        return self.szego_order

    @property
    def base_case_order(self) -> int:
        """Order at which Henneberg reductions stop."""
        if self.is_szego and self.szego_order == 3:
            # nothing lies strictly between 2 and 3 vertices
            return 2
        return self.min_tight_order

    @property
    def max_multiplicity(self) -> int:
        return 2 * self.k - self.ell

    @property
    def max_loops(self) -> int:
        return max(0, self.k - self.ell)

    def bound(self, size: int) -> int:
        """Most edges a set of size vertices may span."""
        return max(0, self.k * size - self.ell)

    def tight_edge_count(self, n: int) -> int:
        return self.k * n - self.ell

    def admits_tight(self, n: int) -> bool:
        """Whether tight graphs exist on n vertices."""
        if self.range is SparsityRange.LOWER:
            return n >= 1
        if self.is_szego:
            return n == 2 or n >= self.szego_order
        return n >= 2


def canonical_tight(params: GameParams, n: int) -> MultiGraph:
    """
    Build the canonical tight graph on n vertices:
    - lower range: k - l loops per vertex plus l copies of the path;
    - l in (k, 3k/2): 2k - l edges 0-1, then every further vertex gets
      2k - l edges to 0 and l - k edges to 1;
    - Szego range: 2k - l parallel edges for n = 2, otherwise a minimum
      size tight seed and k edges per further vertex, saturating
      multiplicity 2k - l on seed vertices in index order.
    """
    if not params.admits_tight(n):
        raise ParameterError(
            _("There is no {params}-tight graph on {n} vertices.").format(
                params=params, n=n))
    k, ell = params.k, params.ell
    mult = params.max_multiplicity
    pairs: List[Tuple[int, int]] = []

    if params.range is SparsityRange.LOWER:
        for vertex in range(n):
            pairs.extend([(vertex, vertex)] * (k - ell))
        for _copy in range(ell):
            pairs.extend((vertex - 1, vertex) for vertex in range(1, n))
    elif not params.is_szego:
        pairs.extend([(0, 1)] * mult)
        for vertex in range(2, n):
            pairs.extend([(0, vertex)] * mult)
            pairs.extend([(1, vertex)] * (ell - k))
    elif n == 2:
        pairs.extend([(0, 1)] * mult)
    else:
        seed_order = params.szego_order
        pairs.extend(_szego_seed(params, seed_order))
        for vertex in range(seed_order, n):
            remaining = k
            target = 0
            while remaining:
                taken = min(mult, remaining)
                pairs.extend([(target, vertex)] * taken)
                remaining -= taken
                target += 1

    return MultiGraph.from_pairs(n, pairs)


def _szego_seed(params: GameParams, order: int) -> List[Tuple[int, int]]:
    # every proper subset with three or more vertices sits inside the Szego
    # gap, so any kN - l edges with multiplicity <= 2k - l are tight
    all_pairs = list(itertools.combinations(range(order), 2))
    needed = params.tight_edge_count(order)
    seed = [all_pairs[i % len(all_pairs)] for i in range(needed)]
    return sorted(seed)


def format_weight(weight: Weight) -> str:
    """Exact text form of a weight: integer, finite decimal or p/q."""
    if weight.denominator == 1:
        return str(weight.numerator)
    denominator = weight.denominator
    twos = fives = 0
    while denominator % 2 == 0:
        denominator //= 2
        twos += 1
    while denominator % 5 == 0:
        denominator //= 5
        fives += 1
    if denominator != 1:
        return f"{weight.numerator}/{weight.denominator}"
    places = max(twos, fives)
    scaled = abs(weight.numerator) * (10 ** places // weight.denominator)
    digits = str(scaled).rjust(places + 1, '0')
    sign = '-' if weight < 0 else ''
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def parse_graph(text: Union[str, TextIO, Iterable[str]]) -> MultiGraph:
    """
    Parse the graph text format: a header "n m", then m lines "u v" or
    "u v w". Lines starting with # and blank lines are ignored.
    """
    lines = text.splitlines() if isinstance(text, str) else text

    header: Optional[Tuple[int, int]] = None
    edges: List[EdgeSpec] = []
    weighted: Optional[bool] = None
    lineno = 0

    for lineno, raw_line in enumerate(lines, start=1):
        line = raw_line.strip()
        if not line or line.startswith('#'):
            continue
        fields = line.split()

        if header is None:
            if len(fields) != 2:
                raise GraphParseError(lineno, _("expected header 'n m'"))
            header = (_parse_count(fields[0], lineno),
                      _parse_count(fields[1], lineno))
            continue

        n, m = header
        if len(edges) == m:
            raise GraphParseError(
                lineno, _("more edge lines than the {m} declared").format(m=m))
        if len(fields) not in (2, 3):
            raise GraphParseError(lineno, _("expected 'u v' or 'u v w'"))

        u = _parse_vertex(fields[0], n, lineno)
        v = _parse_vertex(fields[1], n, lineno)
        weight = None
        if len(fields) == 3:
            try:
                weight = Fraction(fields[2])
            except (ValueError, ZeroDivisionError):
                # pylint: disable=raise-missing-from
                raise GraphParseError(
                    lineno, _("invalid weight {weight!r}").format(
                        weight=fields[2]))
        if weighted is None:
            weighted = weight is not None
        elif weighted != (weight is not None):
            raise GraphParseError(
                lineno, _("weighted and unweighted edges cannot be mixed"))
        edges.append(EdgeSpec(u, v, weight, len(edges)))

    if header is None:
        raise GraphParseError(lineno + 1, _("missing header 'n m'"))
    if len(edges) != header[1]:
        raise GraphParseError(
            lineno + 1, _("expected {m} edges, found {found}").format(
                m=header[1], found=len(edges)))
    return MultiGraph(header[0], tuple(edges))


def _parse_count(field: str, lineno: int) -> int:
    try:
        value = int(field)
    except ValueError:
        # pylint: disable=raise-missing-from
        raise GraphParseError(
            lineno, _("invalid count {field!r}").format(field=field))
    if value < 0:
        raise GraphParseError(
            lineno, _("negative count {value}").format(value=value))
    return value


def _parse_vertex(field: str, n: int, lineno: int) -> int:
    try:
        vertex = int(field)
    except ValueError:
        # pylint: disable=raise-missing-from
        raise GraphParseError(
            lineno, _("invalid vertex {field!r}").format(field=field))
    if not 0 <= vertex < n:
        raise GraphParseError(
            lineno, _("endpoint {vertex} out of range 0..{last}").format(
                vertex=vertex, last=n - 1))
    return vertex


def serialize_graph(g: MultiGraph) -> str:
    """Graph text for g; parse_graph(serialize_graph(g)) gives g back for
    graphs numbered 0..m-1."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(str(edge) for edge in g.edges)
    return '\n'.join(lines) + '\n'
