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
Command line front end: `pebble-games <command> -k K -l L [FILE]`.

Exit status is 0 on success, 1 when a decision command answers no and 2 on
usage, input or precondition errors.
"""
import argparse
import logging
import sys
from typing import Callable, Dict, Optional, Sequence, TextIO, Tuple

from ..analysis.circuits import all_circuits, redundancy
from ..analysis.extraction import extract_max_sparse, optimize
from ..analysis.henneberg import henneberg_sequence
from ..exc import GraphParseError, PebbleGameException
from ..game.basic_game import Classification, GameResult, GameState, \
    play_basic
from ..game.component_game import play_component
from ..graph_model import GameParams, MultiGraph, canonical_tight, \
    parse_graph, serialize_graph
from ..oracle import oracle_classify, oracle_components, \
    oracle_minimal_violation
from ..settings import DetectionAlgorithm, Engine, OverridenSettings, \
    Settings
from . import output

import gettext
t = gettext.translation("pebble-games", fallback=True)
_ = t.gettext

logger = logging.getLogger('pebble-games')

LOG_FORMAT = '%(asctime)s %(message)s'

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2

Outcome = Tuple[str, int]


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-k', type=int, required=True,
                        help='Pebbles per vertex')
    common.add_argument('-l', dest='ell', type=int, required=True,
                        help='Pebbles that must stay on an edge, '
                             '0 <= l < 2k')
    common.add_argument('--detect', choices=['1', '2'], default=None,
                        help='Component detection algorithm (default: 2)')
    common.add_argument('--engine', choices=['basic', 'component'],
                        default=None,
                        help='Pebble game driving decide, extract and '
                             'circuits (default: component)')
    common.add_argument('--json', action='store_true',
                        help='Machine-readable output')
    common.add_argument('--log', action='store', default='WARNING',
                        help='Provide logging level. Values: DEBUG, INFO, '
                             'WARNING (default), ERROR, CRITICAL')
    return common


def _input_parser() -> argparse.ArgumentParser:
    graph_input = argparse.ArgumentParser(add_help=False)
    graph_input.add_argument('input', nargs='?', default='-',
                             help='Graph file, - for standard input')
    return graph_input


def parse_args(args):
    parser = argparse.ArgumentParser(
        prog='pebble-games',
        description='(k,l)-pebble games for sparse multigraphs')
    common = _common_parser()
    graph_input = _input_parser()
    with_graph = [common, graph_input]
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    decide = commands.add_parser(
        'decide', parents=with_graph,
        help='Classify the graph; exit 1 unless it is tight')
    decide.add_argument('--dot', metavar='FILE',
                        help='Write the final game digraph in DOT format')
    components = commands.add_parser(
        'components', parents=with_graph,
        help='Components, free vertices and free edges')
    components.add_argument('--dot', metavar='FILE',
                            help='Write the final game digraph in DOT '
                                 'format')
    commands.add_parser('extract', parents=with_graph,
                        help='A maximal sparse subgraph')
    optimize_parser = commands.add_parser(
        'optimize', parents=with_graph,
        help='A maximum-weight sparse subgraph of a weighted graph')
    optimize_parser.add_argument('--ascending', action='store_true',
                                 help='Minimum weight instead')
    commands.add_parser('circuits', parents=with_graph,
                        help='The circuit of every rejected edge')
    commands.add_parser('redundancy', parents=with_graph,
                        help='Bridges and redundant components; exit 1 '
                             'unless the graph is redundant')
    commands.add_parser('henneberg', parents=with_graph,
                        help='Henneberg reduction sequence of a tight graph')
    generate = commands.add_parser('generate', parents=[common],
                                   help='Canonical tight graph')
    generate.add_argument('-n', type=int, required=True,
                          help='Number of vertices')

    oracle = commands.add_parser('oracle',
                                 help='Brute-force answers for small graphs')
    oracle_commands = oracle.add_subparsers(dest='oracle_command',
                                            metavar='QUERY')
    oracle_commands.required = True
    for name, help_text in (('classify', 'Classification by enumeration'),
                            ('components', 'Components by enumeration')):
        query = oracle_commands.add_parser(name, parents=with_graph,
                                           help=help_text)
        query.add_argument('--oracle-limit', type=int, default=None,
                           help='Largest vertex count to enumerate '
                                '(default: {})'.format(
                                    Settings.DEFAULT_ORACLE_LIMIT))

    return parser.parse_args(args)


def _settings(args) -> Settings:
    return Settings(OverridenSettings(
        oracle_limit=getattr(args, 'oracle_limit', None),
        detection=DetectionAlgorithm.from_name(args.detect)
        if args.detect else None,
        engine=Engine.from_name(args.engine) if args.engine else None))


def _decode(raw: bytes) -> str:
    try:
        return raw.decode('utf-8')
    except UnicodeDecodeError as error:
        lineno = raw.count(b'\n', 0, error.start) + 1
        raise GraphParseError(
            lineno, _("input is not valid UTF-8")) from error


def _read_graph(path: str, stdin: TextIO) -> MultiGraph:
    if path != '-':
        with open(path, 'rb') as graph_file:
            return parse_graph(_decode(graph_file.read()))
    if hasattr(stdin, 'buffer'):
        return parse_graph(_decode(stdin.buffer.read()))
    return parse_graph(stdin.read())


def _write_dot(path: Optional[str], state: GameState):
    if path:
        with open(path, 'w', encoding='utf-8') as dot_file:
            dot_file.write(output.to_dot(state))


def _play(g: MultiGraph, params: GameParams, settings: Settings) -> \
        GameResult:
    if settings.engine is Engine.BASIC:
        return play_basic(g, params)
    result, _decomposition = play_component(g, params, settings.detection)
    return result


def _decide(args, g, params, settings) -> Outcome:
    result = _play(g, params, settings)
    _write_dot(args.dot, result.state)
    text = output.to_json(output.game_payload(result)) if args.json \
        else output.game_text(result)
    code = EXIT_OK if result.classification is \
        Classification.WellConstrained else EXIT_NEGATIVE
    return text, code


def _components(args, g, params, settings) -> Outcome:
    result, decomposition = play_component(g, params, settings.detection)
    _write_dot(args.dot, result.state)
    if args.json:
        return output.to_json(output.decomposition_payload(
            result, decomposition)), EXIT_OK
    return output.decomposition_text(result, decomposition), EXIT_OK


def _graph_outcome(args, g: MultiGraph) -> Outcome:
    if args.json:
        return output.to_json(output.graph_payload(g)), EXIT_OK
    return serialize_graph(g.reindexed()), EXIT_OK


def _extract(args, g, params, settings) -> Outcome:
    return _graph_outcome(args, extract_max_sparse(
        g, params, settings.detection, settings.engine))


def _optimize(args, g, params, settings) -> Outcome:
    return _graph_outcome(args, optimize(
        g, params, ascending=args.ascending, detection=settings.detection))


def _circuits(args, g, params, settings) -> Outcome:
    circuits = all_circuits(g, params, settings.detection, settings.engine)
    if args.json:
        return output.to_json(output.circuits_payload(circuits)), EXIT_OK
    return output.circuits_text(circuits), EXIT_OK


def _redundancy(args, g, params, settings) -> Outcome:
    report = redundancy(g, params, settings.detection)
    code = EXIT_OK if report.is_redundant else EXIT_NEGATIVE
    if args.json:
        return output.to_json(output.redundancy_payload(report)), code
    return output.redundancy_text(report), code


def _henneberg(args, g, params, unused_settings) -> Outcome:
    steps = henneberg_sequence(g, params)
    if args.json:
        return output.to_json(output.steps_payload(steps)), EXIT_OK
    return output.steps_text(steps), EXIT_OK


def _oracle(args, g, params, settings) -> Outcome:
    limit = settings.oracle_limit
    if args.oracle_command == 'classify':
        classification = oracle_classify(g, params, limit)
        violation = oracle_minimal_violation(g, params, limit)
        code = EXIT_OK if classification is \
            Classification.WellConstrained else EXIT_NEGATIVE
        if args.json:
            return output.to_json(
                output.oracle_payload(classification, violation)), code
        return output.oracle_text(classification, violation), code
    components = output.vertex_lists(oracle_components(g, params, limit))
    if args.json:
        return output.to_json({"components": components}), EXIT_OK
    return ''.join(_("component: {vertices}").format(
        vertices=' '.join(str(v) for v in component)) + '\n'
                   for component in components), EXIT_OK


COMMANDS: Dict[str, Callable[..., Outcome]] = {
    'decide': _decide,
    'components': _components,
    'extract': _extract,
    'optimize': _optimize,
    'circuits': _circuits,
    'redundancy': _redundancy,
    'henneberg': _henneberg,
    'oracle': _oracle,
}


def _execute(args, stdin: TextIO) -> Outcome:
    params = GameParams(args.k, args.ell)
    settings = _settings(args)
    if args.command == 'generate':
        g = canonical_tight(params, args.n)
        if args.json:
            return output.to_json(output.graph_payload(g, key="edges")), \
                EXIT_OK
        return serialize_graph(g), EXIT_OK
    g = _read_graph(args.input, stdin)
    logger.info("Read a graph with %d vertices and %d edges", g.n, g.m)
    return COMMANDS[args.command](args, g, params, settings)


def run(argv: Optional[Sequence[str]] = None,
        stdin: Optional[TextIO] = None,
        stdout: Optional[TextIO] = None,
        stderr: Optional[TextIO] = None) -> int:
    """Run one command and return its exit status."""
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = parse_args(argv)
    except SystemExit as exit_request:
        if exit_request.code is None:
            return EXIT_OK
        return int(exit_request.code)

    log_handler = logging.StreamHandler(stderr)
    log_handler.setFormatter(logging.Formatter(LOG_FORMAT))
    logger.addHandler(log_handler)
    try:
        logger.setLevel(args.log.upper())
    except ValueError:
        logger.removeHandler(log_handler)
        stderr.write(_("Unknown logging level: {level}\n").format(
            level=args.log))
        return EXIT_ERROR

    try:
        text, code = _execute(args, stdin)
    except (PebbleGameException, OSError) as error:
        stderr.write(f"pebble-games: {error}\n")
        return EXIT_ERROR
    finally:
        logger.removeHandler(log_handler)
    stdout.write(text)
    return code


def main(args=None):
    sys.exit(run(args))


if __name__ == '__main__':
    main()
