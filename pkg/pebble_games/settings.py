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
"""Defaults for the games and the oracle, with command-line overrides."""
import dataclasses
import enum
from typing import Optional

from .exc import ParameterError

import gettext
t = gettext.translation("pebble-games", fallback=True)
_ = t.gettext


class DetectionAlgorithm(enum.Enum):
    """Component detection used by the component pebble game."""
    I = 1
    II = 2

    @staticmethod
    def from_name(name) -> 'DetectionAlgorithm':
        names = {"1": DetectionAlgorithm.I, "i": DetectionAlgorithm.I,
                 "2": DetectionAlgorithm.II, "ii": DetectionAlgorithm.II}
        try:
            return names[str(name).lower()]
        except KeyError:
            # pylint: disable=raise-missing-from
            raise ParameterError(
                _("Unknown detection algorithm: {name}").format(name=name))


class Engine(enum.Enum):
    """Which pebble game drives the solvers."""
    BASIC = 'basic'
    COMPONENT = 'component'

    @staticmethod
    def from_name(name) -> 'Engine':
        try:
            return Engine(str(name).lower())
        except ValueError:
            # pylint: disable=raise-missing-from
            raise ParameterError(
                _("Unknown engine: {name}").format(name=name))


@dataclasses.dataclass(frozen=True)
class OverridenSettings:
    oracle_limit: Optional[int] = None
    detection: Optional[DetectionAlgorithm] = None
    engine: Optional[Engine] = None


class Settings:
    DEFAULT_ORACLE_LIMIT = 16
    MAX_ORACLE_LIMIT = 24
    DEFAULT_DETECTION = DetectionAlgorithm.II
    DEFAULT_ENGINE = Engine.COMPONENT

    def __init__(self, overrides: OverridenSettings = OverridenSettings()):
        self.overrides = overrides
        limit = overrides.oracle_limit
        if limit is not None and not 1 <= limit <= Settings.MAX_ORACLE_LIMIT:
            raise ParameterError(
                _("Oracle limit must be between 1 and {max_limit}.").format(
                    max_limit=Settings.MAX_ORACLE_LIMIT))

    @property
    def oracle_limit(self) -> int:
        if self.overrides.oracle_limit is not None:
            return self.overrides.oracle_limit
        return Settings.DEFAULT_ORACLE_LIMIT

    @property
    def detection(self) -> DetectionAlgorithm:
        if self.overrides.detection is not None:
            return self.overrides.detection
        return Settings.DEFAULT_DETECTION

    @property
    def engine(self) -> Engine:
        if self.overrides.engine is not None:
            return self.overrides.engine
        return Settings.DEFAULT_ENGINE
