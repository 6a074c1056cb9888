# Copyright 2021 AlQuraishi Laboratory
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Errors raised throughout the library and the command-line tools."""
from typing import Optional


class Error(Exception):
    """Base class for exceptions."""


# Graph construction
class LoopError(Error):
    """An error indicating that an arc (u, u) was supplied."""


class SymmetricArcPairError(Error):
    """An error indicating that both (u, v) and (v, u) were supplied."""


class DuplicateArcError(Error):
    """An error indicating that the same arc or edge was supplied twice."""


class VertexOutOfRangeError(Error):
    """An error indicating that a vertex index lies outside 0..n-1."""


class ParseError(Error):
    """An error indicating that an input file is malformed."""

    def __init__(self, msg: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            msg = f"line {line}: {msg}"
        super().__init__(msg)


# Preconditions on graph classes
class DisconnectedError(Error):
    """An error indicating that a connected graph was required."""


class NotATournamentError(Error):
    """An error indicating that a tournament was required."""


class NotATreeError(Error):
    """An error indicating that the underlying graph is not a tree."""


class NotACactusError(Error):
    """An error indicating that the underlying graph is not a cactus."""


class NotBipartiteError(Error):
    """An error indicating that a bipartite graph was required."""


class BadPartitionError(Error):
    """An error indicating that a supplied split partition is invalid."""


class StableNotMaximalError(Error):
    """An error indicating that the stable side of a split partition is not
    maximal."""


class CliqueTooSmallError(Error):
    """An error indicating that the clique of a split partition has fewer
    than two vertices."""


class BadParameterError(Error):
    """An error indicating that a generator parameter is out of range."""


class LabelingNotIsometricError(Error):
    """An error indicating that a hypercube labeling is not isometric."""


class InvalidInstanceError(Error):
    """An error indicating that a set-cover instance is malformed."""


# Solvers and constructions
class InstanceTooLargeError(Error):
    """An error indicating that an exhaustive search would range over too
    many free vertices."""


class ConstructionFailedError(Error):
    """An error indicating that a constructed set failed its verification."""


class NotGeodeticError(Error):
    """An error indicating that a supplied set is not a geodetic set."""


class CycleIsTSCError(Error):
    """An error indicating that a truly satisfactory cycle has no
    certificate."""


class DegenerateSingleCycleError(Error):
    """An error indicating that the graph is a single directed cycle, which
    the cactus construction does not cover."""
