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
import collections
import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from ..analysis.circuits import find_circuit
from ..exc import ParameterError, RuleViolationError
from ..game.basic_game import Classification, InsertOutcome, init_state, \
    play_basic
from ..graph_model import EdgeSpec, GameParams, MultiGraph
from ..oracle import oracle_blocks, oracle_classify, oracle_is_sparse
from . import graph_factory


def test_triangle(triangle, laman):
    moves = []
    result = play_basic(triangle, laman,
                        move_callback=lambda state, move: moves.append(move))
    assert result.classification is Classification.WellConstrained
    assert result.free_pebbles == 3
    assert not result.rejected
    assert moves == ['insert', 'insert', 'collect', 'insert']
    assert result.state.peb == [1, 0, 2]


def test_k4_rejects_last_edge(k4, laman):
    result = play_basic(k4, laman)
    assert result.classification is Classification.OverConstrained
    assert [edge.input_index for edge in result.rejected] == [5]
    assert result.accepted_graph().m == 5


def test_second_loop_is_rejected():
    g = MultiGraph.from_pairs(1, [(0, 0), (0, 0)])
    result = play_basic(g, GameParams(1, 0))
    assert [edge.input_index for edge in result.rejected] == [1]
    assert result.classification is Classification.OverConstrained


def test_loops_rejected_in_upper_range(laman):
    g = MultiGraph.from_pairs(2, [(0, 0)])
    result = play_basic(g, laman)
    assert len(result.rejected) == 1
    assert result.classification is Classification.Other


def test_single_vertex_upper_range(laman):
    result = play_basic(MultiGraph(1), laman)
    assert result.free_pebbles == 2
    assert result.classification is Classification.UnderConstrained


def test_insert_outcome_is_truthy():
    state = init_state(2, GameParams(1, 1))
    assert state.try_insert_edge(EdgeSpec(0, 1, None, 0)) is \
        InsertOutcome.Accepted
    assert not state.try_insert_edge(EdgeSpec(0, 1, None, 1))
    assert state.span_of({0, 1}) == 1
    assert state.out_of({0}) + state.out_of({1}) == 1


def test_rule_violation():
    state = init_state(2, GameParams(2, 0))
    with pytest.raises(RuleViolationError):
        state.collect_pebble(0)


def test_empty_game():
    with pytest.raises(ParameterError):
        init_state(0, GameParams(1, 0))
    with pytest.raises(ParameterError):
        play_basic(MultiGraph(0), GameParams(1, 0))


def test_block_criterion_on_final_state(laman):
    g = graph_factory.two_triangles_bridged()
    state = play_basic(g, laman).state
    for vertices in ({0, 1, 2}, {3, 4, 5}, {2, 3}):
        assert state.peb_of(vertices) + state.out_of(vertices) == 3
    for vertices in ({0, 1, 2, 3}, {0, 3}, set(range(6))):
        assert state.peb_of(vertices) + state.out_of(vertices) > 3


@pytest.mark.parametrize('params', graph_factory.ALL_PARAMS, ids=str)
def test_matches_oracle_on_random_graphs(params):
    rng = random.Random(params.k * 10 + params.ell)
    for _round in range(40):
        n = rng.randint(1, 6)
        g = graph_factory.random_multigraph(
            rng, n, rng.randint(0, params.k * n + 2))
        assert play_basic(g, params).classification is \
            oracle_classify(g, params)


@pytest.mark.parametrize('params', graph_factory.ALL_PARAMS, ids=str)
def test_invariants_after_every_move(params):
    rng = random.Random(params.k * 100 + params.ell)
    problems = []

    def check(state, move):
        for problem in graph_factory.invariant_violations(state):
            problems.append(f"after {move}: {problem}")

    for _round in range(8):
        n = rng.randint(2, 7)
        g = graph_factory.random_multigraph(rng, n, params.k * n)
        play_basic(g, params, move_callback=check)
    assert not problems


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(graph_factory.ALL_PARAMS), st.integers(1, 6),
       st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5)),
                max_size=14),
       st.randoms(use_true_random=False))
def test_edge_order_invariance(params, n, pairs, rng):
    pairs = [(u % n, v % n) for u, v in pairs]
    g = MultiGraph.from_pairs(n, pairs)
    expected = play_basic(g, params)
    for _permutation in range(5):
        again = play_basic(graph_factory.shuffled(g, rng), params)
        assert again.classification is expected.classification
        assert len(again.accepted) == len(expected.accepted)


def test_reach_follows_orientation():
    state = init_state(5, GameParams(2, 0))
    for index, (u, v) in enumerate([(3, 0), (3, 2), (2, 4)]):
        assert state.try_insert_edge(EdgeSpec(u, v, None, index))
    assert [(tail, head) for tail, head, _edge in state.directed_edges()] \
        == [(2, 4), (3, 0), (3, 2)]
    assert state.reach({3}) == {0, 2, 3, 4}
    assert state.reach({2}) == {2, 4}
    assert state.reach({0, 1}) == {0, 1}


def test_collect_pebble_reverses_path():
    state = init_state(2, GameParams(1, 0))
    edge = EdgeSpec(0, 1, None, 0)
    assert state.try_insert_edge(edge)
    assert state.peb == [0, 1]
    assert state.out_edges[0] == [(1, edge)]

    assert state.collect_pebble(0)
    assert state.peb == [1, 0]
    assert state.out_edges == [[], [(0, edge)]]
    assert state.in_adjacency() == [collections.Counter({1: 1}),
                                    collections.Counter()]
    assert not graph_factory.invariant_violations(state)


def test_collect_pebble_failure_changes_nothing():
    state = init_state(2, GameParams(1, 0))
    assert state.try_insert_edge(EdgeSpec(0, 1, None, 0))
    assert state.try_insert_edge(EdgeSpec(1, 0, None, 1))
    peb = list(state.peb)
    out_edges = [list(edges) for edges in state.out_edges]

    assert not state.collect_pebble(0)
    assert state.peb == peb == [0, 0]
    assert state.out_edges == out_edges


def test_collect_pebble_skips_protected_vertices():
    state = init_state(3, GameParams(1, 0))
    assert state.try_insert_edge(EdgeSpec(0, 1, None, 0))
    assert state.try_insert_edge(EdgeSpec(1, 2, None, 1))
    assert state.peb == [0, 0, 1]

    assert not state.collect_pebble(0, protected=frozenset({1}))
    assert state.peb == [0, 0, 1]
    assert state.collect_pebble(0)
    assert state.peb == [1, 0, 0]


def test_result_is_not_changed_by_later_moves(laman):
    result = play_basic(MultiGraph.from_pairs(3, [(0, 1)]), laman)
    assert result.free_pebbles == 5

    assert result.state.try_insert_edge(EdgeSpec(1, 2, None, 1))
    assert result.state.free_pebbles == 4
    assert result.free_pebbles == 5
    assert len(result.accepted) == 1
    assert result.accepted_graph().m == 1


def test_result_survives_circuit_search(k4, laman):
    result = play_basic(k4, laman)
    accepted, rejected = result.accepted, result.rejected
    classification = result.classification
    find_circuit(result.state, rejected[0])
    assert result.accepted == accepted
    assert result.rejected == rejected
    assert result.classification is classification
    assert result.free_pebbles == 3


@pytest.mark.parametrize('params', graph_factory.ALL_PARAMS, ids=str)
def test_block_criterion_on_all_subsets(params):
    rng = random.Random(params.k * 1000 + params.ell)
    for _round in range(6):
        n = rng.randint(1, 7)
        g = graph_factory.random_multigraph(rng, n, params.k * n + 2)
        result = play_basic(g, params)
        state = result.state
        blocks = set(oracle_blocks(result.accepted_graph(), params))
        for size in range(1, n + 1):
            for vertices in itertools.combinations(range(n), size):
                by_span = state.span_of(vertices) == \
                    params.k * size - params.ell
                by_pebbles = state.peb_of(vertices) + \
                    state.out_of(vertices) == params.ell
                assert by_span == by_pebbles == \
                    (frozenset(vertices) in blocks), (g, vertices)


@pytest.mark.parametrize('params', graph_factory.ALL_PARAMS, ids=str)
def test_accepts_exactly_the_independent_edges(params):
    rng = random.Random(params.k * 10000 + params.ell)
    for _round in range(8):
        n = rng.randint(1, 6)
        g = graph_factory.random_multigraph(rng, n, params.k * n + 2)
        state = init_state(n, params)
        for edge in g.edges:
            independent = oracle_is_sparse(
                MultiGraph(n, tuple(state.accepted) + (edge,)), params)
            assert bool(state.try_insert_edge(edge)) == independent, \
                (g, edge)
