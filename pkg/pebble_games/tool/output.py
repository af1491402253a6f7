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
"""Text, JSON and DOT renderings of solver results for the command line."""
import json
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Tuple

from ..analysis.circuits import Circuit, RedundancyReport
from ..analysis.henneberg import ReductionStep
from ..game.basic_game import Classification, GameResult, GameState
from ..game.components import Decomposition
from ..graph_model import EdgeSpec, MultiGraph, format_weight

import gettext
t = gettext.translation("pebble-games", fallback=True)
_ = t.gettext


def edge_pairs(edges: Iterable[EdgeSpec]) -> List[List[int]]:
    """[u, v] pairs in input order."""
    return [[edge.u, edge.v]
            for edge in sorted(edges, key=lambda edge: edge.input_index)]


def vertex_lists(vertex_sets: Iterable[Iterable[int]]) -> List[List[int]]:
    return sorted(sorted(vertex_set) for vertex_set in vertex_sets)


def _edge_text(edges: Iterable[EdgeSpec]) -> str:
    return ', '.join(f"{u}-{v}" for u, v in edge_pairs(edges)) or '-'


def _vertex_text(vertices: Iterable[int]) -> str:
    return ' '.join(str(vertex) for vertex in sorted(vertices)) or '-'


def to_json(payload: Dict[str, Any]) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + '\n'


def game_payload(result: GameResult) -> Dict[str, Any]:
    return {"classification": str(result.classification),
            "accepted": edge_pairs(result.accepted),
            "rejected": edge_pairs(result.rejected),
            "free_pebbles": result.free_pebbles}


def game_text(result: GameResult) -> str:
    return f"{result.classification}\n"


def decomposition_payload(result: GameResult,
                          decomposition: Decomposition) -> Dict[str, Any]:
    payload = game_payload(result)
    payload.update({
        "components": vertex_lists(decomposition.components),
        "free_vertices": sorted(decomposition.free_vertices),
        "free_edges": edge_pairs(decomposition.free_edges)})
    return payload


def decomposition_text(result: GameResult,
                       decomposition: Decomposition) -> str:
    lines = [str(result.classification)]
    for component in vertex_lists(decomposition.components):
        lines.append(_("component: {vertices}").format(
            vertices=_vertex_text(component)))
    lines.append(_("free vertices: {vertices}").format(
        vertices=_vertex_text(decomposition.free_vertices)))
    lines.append(_("free edges: {edges}").format(
        edges=_edge_text(decomposition.free_edges)))
    return '\n'.join(lines) + '\n'


def graph_payload(g: MultiGraph, key: str = "accepted") -> Dict[str, Any]:
    payload: Dict[str, Any] = {"n": g.n, key: edge_pairs(g.edges)}
    if g.weighted:
        payload["weights"] = [format_weight(edge.weight)
                              for edge in g.edges if edge.weight is not None]
        payload["total_weight"] = format_weight(g.total_weight())
    return payload


def oracle_payload(classification: Classification,
                   violation: Optional[Tuple[FrozenSet[int], int]]) -> \
        Dict[str, Any]:
    payload: Dict[str, Any] = {"classification": str(classification)}
    if violation is not None:
        vertices, edge_count = violation
        payload["violation"] = {"vertices": sorted(vertices),
                                "edges": edge_count}
    return payload


def oracle_text(classification: Classification,
                violation: Optional[Tuple[FrozenSet[int], int]]) -> str:
    text = f"{classification}\n"
    if violation is not None:
        vertices, edge_count = violation
        text += _("violated by: {vertices} ({count} edges)").format(
            vertices=_vertex_text(vertices), count=edge_count) + "\n"
    return text


def circuits_payload(circuits: Iterable[Circuit]) -> Dict[str, Any]:
    return {"circuits": [{"vertices": circuit.vertices,
                          "edges": edge_pairs(circuit.edge_set)}
                         for circuit in circuits]}


def circuits_text(circuits: Iterable[Circuit]) -> str:
    lines = [_("circuit: vertices {vertices}; edges {edges}").format(
        vertices=_vertex_text(circuit.vertex_set),
        edges=_edge_text(circuit.edge_set)) for circuit in circuits]
    return ''.join(line + '\n' for line in lines)


def redundancy_payload(report: RedundancyReport) -> Dict[str, Any]:
    return {"redundant": report.is_redundant,
            "bridges": edge_pairs(report.bridges),
            "components": vertex_lists(report.redundant_components)}


def redundancy_text(report: RedundancyReport) -> str:
    lines = [_("redundant: {answer}").format(
        answer=_("yes") if report.is_redundant else _("no")),
             _("bridges: {edges}").format(edges=_edge_text(report.bridges))]
    for component in vertex_lists(report.redundant_components):
        lines.append(_("redundant component: {vertices}").format(
            vertices=_vertex_text(component)))
    return '\n'.join(lines) + '\n'


def steps_payload(steps: Iterable[ReductionStep]) -> Dict[str, Any]:
    return {"steps": [{"vertex": step.removed_vertex,
                       "b": step.b,
                       "removed": edge_pairs(step.removed_edges),
                       "added": edge_pairs(step.added_edges),
                       "n": step.reduced.n}
                      for step in steps]}


def steps_text(steps: Iterable[ReductionStep]) -> str:
    lines = [_("remove vertex {vertex} (b={b}): drop {removed}; "
               "add {added}").format(vertex=step.removed_vertex, b=step.b,
                                     removed=_edge_text(step.removed_edges),
                                     added=_edge_text(step.added_edges))
             for step in steps]
    return ''.join(line + '\n' for line in lines)


def to_dot(state: GameState) -> str:
    """The game digraph; each vertex is labelled with its free pebbles."""
    lines = ["digraph pebbles {"]
    for vertex in range(state.n):
        lines.append(f'  {vertex} [label="{vertex}: {state.peb[vertex]}"];')
    for tail, head, _edge in state.directed_edges():
        lines.append(f"  {tail} -> {head};")
    lines.append("}")
    return '\n'.join(lines) + '\n'
