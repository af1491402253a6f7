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
"""Exception hierarchy used by all pebble-games modules."""
import gettext
t = gettext.translation("pebble-games", fallback=True)
_ = t.gettext


class PebbleGameException(Exception):
    """Base class for all pebble-games errors."""


class GraphParseError(PebbleGameException):
    """Graph text could not be parsed. Knows the offending line."""
    def __init__(self, lineno: int, message: str):
        super().__init__(
            _("line {lineno}: {message}").format(lineno=lineno,
                                                 message=message))
        self.lineno = lineno
        self.message = message


class ParameterError(PebbleGameException, ValueError):
    """Invalid (k, l) pair, graph order or operation argument."""


class CapacityError(PebbleGameException):
    """The brute-force oracle was asked for a graph that is too large."""


class PreconditionError(PebbleGameException):
    """An operation was called on input it is not defined for."""


class RuleViolationError(PebbleGameException):
    """A move would break one of the game rules."""


class BaseCaseReached(PebbleGameException):
    """A Henneberg reduction was requested on a base-case graph."""


class InternalError(PebbleGameException):
    """An algorithmic guarantee did not hold. This is a bug."""
