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
"""Conftest helper pytest file: fixtures contained here are
 reachable by all tests"""
import random

import pytest

from ..graph_model import GameParams
from . import graph_factory


@pytest.fixture
def laman():
    return GameParams(2, 3)


@pytest.fixture
def triangle():
    return graph_factory.triangle()


@pytest.fixture
def k4():
    return graph_factory.complete(4)


@pytest.fixture
def k5():
    return graph_factory.complete(5)


@pytest.fixture
def prism():
    return graph_factory.prism()


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def graph_file(tmp_path):
    """Write graph text to a file and return its path as a string."""
    def write(text, name='graph.g'):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return write
