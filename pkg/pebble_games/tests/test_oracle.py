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
# pylint: disable=missing-module-docstring
# pylint: disable=missing-function-docstring
import itertools
import random

import pytest

from ..exc import CapacityError, PreconditionError
from ..game.basic_game import Classification
from ..game.component_game import play_component
from ..graph_model import GameParams, MultiGraph, SparsityRange, \
    canonical_tight
from ..oracle import oracle_blocks, oracle_classify, oracle_components, \
    oracle_is_sparse, oracle_is_spanning, oracle_is_tight, \
    oracle_max_sparse, oracle_minimal_violation
from . import graph_factory


def test_triangle_is_laman_tight(triangle, laman):
    assert oracle_is_sparse(triangle, laman)
    assert oracle_is_tight(triangle, laman)
    assert oracle_classify(triangle, laman) is \
        Classification.WellConstrained


def test_k4_is_over_constrained(k4, laman):
    assert not oracle_is_sparse(k4, laman)
    assert oracle_is_spanning(k4, laman)
    assert oracle_classify(k4, laman) is Classification.OverConstrained
    assert oracle_minimal_violation(k4, laman) == (frozenset(range(4)), 6)


def test_max_sparse_is_greedy(k4, laman):
    basis = oracle_max_sparse(k4, laman)
    assert [edge.input_index for edge in basis.edges] == [0, 1, 2, 3, 4]


@pytest.mark.parametrize('pairs, n, params, expected', [
    ([(0, 1), (0, 1)], 2, GameParams(2, 3), Classification.OverConstrained),
    ([], 3, GameParams(1, 1), Classification.UnderConstrained),
    ([(0, 0), (0, 0)], 1, GameParams(1, 0), Classification.OverConstrained),
    ([(0, 0)], 2, GameParams(2, 3), Classification.Other),
    ([], 1, GameParams(2, 3), Classification.UnderConstrained),
    ([(0, 1)] * 3, 3, GameParams(1, 1), Classification.Other),
])
def test_classify(pairs, n, params, expected):
    g = MultiGraph.from_pairs(n, pairs)
    assert oracle_classify(g, params) is expected


def test_blocks_include_single_edges_in_upper_range(laman):
    g = MultiGraph.from_pairs(3, [(0, 1), (1, 2)])
    assert sorted(map(sorted, oracle_blocks(g, laman))) == [[0, 1], [1, 2]]


def test_components_laman(laman):
    g = graph_factory.two_triangles_bridged()
    assert oracle_components(g, laman) == {
        frozenset({0, 1, 2}), frozenset({3, 4, 5}), frozenset({2, 3})}


def test_components_lower_range():
    g = MultiGraph.from_pairs(4, [(0, 1)] * 3 + [(2, 3)] * 3 + [(1, 2)])
    assert oracle_components(g, GameParams(3, 3)) == {
        frozenset({0, 1}), frozenset({2, 3})}


def test_components_l0_is_union_of_blocks():
    g = MultiGraph.from_pairs(3, [(0, 0), (1, 1)])
    assert oracle_components(g, GameParams(1, 0)) == {frozenset({0, 1})}
    assert oracle_components(MultiGraph(3), GameParams(1, 0)) == set()


def test_components_need_sparse_input(k4, laman):
    with pytest.raises(PreconditionError):
        oracle_components(k4, laman)


def test_capacity(laman):
    with pytest.raises(CapacityError):
        oracle_is_sparse(MultiGraph(17), laman)
    with pytest.raises(CapacityError):
        oracle_classify(MultiGraph(5), laman, limit=4)
    assert oracle_is_sparse(MultiGraph(5), laman, limit=5)


def test_smallest_tight_graph_of_35_is_k5():
    params = GameParams(3, 5)
    pairs = list(itertools.combinations(range(5), 2))
    tight = [chosen for chosen in itertools.combinations(pairs, 10)
             if oracle_is_tight(MultiGraph.from_pairs(5, chosen), params)]
    assert tight == [tuple(pairs)]


@pytest.mark.parametrize('n', [3, 4])
def test_no_small_tight_graph_for_35(n):
    params = GameParams(3, 5)
    pairs = list(itertools.combinations(range(n), 2))
    found = 0
    for counts in itertools.product(range(3), repeat=len(pairs)):
        if sum(counts) != 3 * n - 5:
            continue
        chosen = [pair for pair, count in zip(pairs, counts)
                  for _copy in range(count)]
        if oracle_is_tight(MultiGraph.from_pairs(n, chosen), params):
            found += 1
    assert found == 0


def test_six_smallest_tight_graphs_for_7_11():
    params = GameParams(7, 11)
    pairs = list(itertools.combinations(range(4), 2))
    tight = 0
    for counts in itertools.product(range(4), repeat=len(pairs)):
        if sum(counts) != 17:
            continue
        chosen = [pair for pair, count in zip(pairs, counts)
                  for _copy in range(count)]
        g = MultiGraph.from_pairs(4, chosen)
        if oracle_is_tight(g, params):
            tight += 1
            assert graph_factory.is_tight(g, params)
    assert tight == 6


@pytest.mark.parametrize('k, ell, n', [
    (1, 0, 4), (2, 1, 4), (2, 2, 3), (3, 3, 4), (2, 3, 5), (3, 4, 5),
    (4, 5, 5), (3, 5, 5), (3, 5, 7), (7, 11, 4), (7, 11, 6)])
def test_canonical_graphs_are_tight(k, ell, n):
    params = GameParams(k, ell)
    g = canonical_tight(params, n)
    assert oracle_is_tight(g, params)
    assert graph_factory.is_tight(g, params)


@pytest.mark.parametrize('params', graph_factory.ALL_PARAMS, ids=str)
def test_overlapping_blocks_are_closed(params):
    # lower range: any common vertex; upper range: at least two
    least = 1 if params.range is SparsityRange.LOWER else 2
    rng = random.Random(params.k * 31 + params.ell)
    for _round in range(6):
        n = rng.randint(2, 8)
        g = graph_factory.random_multigraph(rng, n, params.k * n)
        sparse = play_component(g, params)[0].accepted_graph()
        blocks = set(oracle_blocks(sparse, params))
        for first, second in itertools.combinations(blocks, 2):
            if len(first & second) >= least:
                assert first | second in blocks, (sparse, first, second)
                assert first & second in blocks, (sparse, first, second)


@pytest.mark.parametrize('params', graph_factory.ALL_PARAMS, ids=str)
def test_tight_graphs_have_min_degree_k(params):
    rng = random.Random(params.k * 37 + params.ell)
    smallest = 2 if params.range is SparsityRange.LOWER else 3
    for n in range(smallest, 8):
        if not params.admits_tight(n):
            continue
        g = graph_factory.random_tight(rng, params, n, exchanges=8)
        assert oracle_is_tight(g, params)
        assert min(g.degree(vertex) for vertex in g.vertices) >= params.k


def test_two_vertex_tight_graph_may_have_low_degree(laman):
    g = MultiGraph.from_pairs(2, [(0, 1)])
    assert oracle_is_tight(g, laman)
    assert g.degree(0) == 1
