# -*- coding: utf-8 -*-
#
# Copyright © 2026 Gravcatlab developers
#
# This file is part of Gravcatlab.
#
# Gravcatlab is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# Gravcatlab is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with Gravcatlab.  If not, see <http://www.gnu.org/licenses/>.


class GravcatError(Exception):
    pass


class InvalidStateError(GravcatError, ValueError):
    """A state or matrix was given non-finite entries."""
    pass


class NotPositiveError(GravcatError):
    """A matrix expected to be positive semi-definite is not."""
    pass


class XStructureError(GravcatError):
    """A dense matrix has non-zero entries outside the X pattern."""
    def __init__(self, msg, index=None, magnitude=None):
        super().__init__(msg)
        self.index = index
        self.magnitude = magnitude


class ConvergenceError(GravcatError):
    def __init__(self, msg, residual=None):
        super().__init__(msg)
        self.residual = residual


class NotNormalizedError(GravcatError):
    """Off-diagonal elements were expected to be real and non-negative."""
    pass


class UsageError(GravcatError):
    """Bad input from the user (maps to exit status 2)."""
    pass


class SweepSpecError(UsageError):
    pass


class FigurePresetError(UsageError):
    pass


class FigureMismatchError(UsageError):
    pass


class SweepError(GravcatError):
    """A single grid point failed while running a sweep."""
    def __init__(self, msg, index=None, params=None):
        super().__init__(msg)
        self.index = index
        self.params = params


class RowInvariantError(GravcatError):
    pass


class SelfCheckFailure(GravcatError):
    pass


class OutputError(GravcatError):
    """Writing results to disk failed."""
    pass
