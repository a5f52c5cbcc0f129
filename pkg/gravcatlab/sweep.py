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

import functools
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path
from time import time
from typing import FrozenSet, List, NamedTuple, Optional, Sequence, Union

import numpy as np
import pandas as pd

from . import exceptions_
from .gravcat import ModelParams, ThermalPoint, gibbs_state, partition_function
from .measures import Mode, concurrence, lqu, lqu_paper_mode
from .oracle import MinimizeConfig, minimize_skew
from .plots import axis_label, new_axes
from .xstate import purity


log = logging.getLogger(__name__)

# Canonical names of the swept quantities, also the CSV column names
VARIABLES = ('omega', 'delta', 'B', 'b', 'T')
ALIASES = {'Delta': 'delta', 'w': 'omega'}
PARAM_FIELDS = {
    'omega': 'omega_gap',
    'delta': 'delta',
    'B': 'field_b_uniform',
    'b': 'field_b_inhomo',
}
# Emitted rows must satisfy lqu_exact = 1 - max(w1, w3) to this precision
ROW_TOL = 1e-14

Destination = Union[str, Path, None]


def canonical_variable(name: str) -> str:
    name = ALIASES.get(name, name)
    if name not in VARIABLES:
        msg = "Unknown sweep variable '{}'. Choices are {}".format(name, VARIABLES)
        raise exceptions_.SweepSpecError(msg)
    return name


class SweepRow(NamedTuple):
    omega: float
    delta: float
    B: float
    b: float
    T: float
    Z: float
    lqu_exact: float
    lqu_paper: float
    branch_exact: str
    w1: float
    w3: float
    concurrence: float
    oracle_min: float
    purity: float


@dataclass(frozen=True)
class RowOptions():
    with_oracle: bool = False
    with_concurrence: bool = True
    oracle_config: MinimizeConfig = field(default_factory=MinimizeConfig)


@dataclass(frozen=True)
class SweepSpec():
    """A one-dimensional scan over an inclusive linear grid.

    Parameters
    ----------
    variable
      Which quantity is swept: one of ``VARIABLES``.
    start, stop, steps
      Grid end points and number of points (both ends included).
    fixed
      Model parameters for the quantities not being swept.
    temperature
      Temperature used unless ``T`` is swept.
    modes
      Which LQU columns the plot scripts draw. Both are always
      computed and written.
    with_ground
      For temperature sweeps, add the T = 0 ground-state point in
      front of the grid.
    label
      Free text naming the curve, e.g. "B = 0.5".

    """
    variable: str
    start: float
    stop: float
    steps: int
    fixed: ModelParams = ModelParams(0.05, 0.05, 0.5, 0.5)
    temperature: float = 0.5
    modes: FrozenSet[Mode] = frozenset({Mode.EXACT, Mode.PAPER})
    with_oracle: bool = False
    with_concurrence: bool = True
    with_ground: bool = False
    label: str = ''

    def __post_init__(self):
        object.__setattr__(self, 'variable', canonical_variable(self.variable))
        object.__setattr__(self, 'modes', frozenset(Mode(m) for m in self.modes))
        if not self.start < self.stop:
            msg = "Sweep start ({}) must be below stop ({})".format(self.start, self.stop)
            raise exceptions_.SweepSpecError(msg)
        if int(self.steps) != self.steps or self.steps < 2:
            msg = "Sweep needs at least 2 steps, got {}".format(self.steps)
            raise exceptions_.SweepSpecError(msg)
        if self.variable == 'T' and self.start < 0:
            raise exceptions_.SweepSpecError("Temperatures must be >= 0")
        if self.variable != 'T' and self.temperature < 0:
            raise exceptions_.SweepSpecError("Temperature must be >= 0")
        if self.with_ground and self.variable != 'T':
            raise exceptions_.SweepSpecError("with_ground only applies to temperature sweeps")
        if not self.modes:
            raise exceptions_.SweepSpecError("At least one LQU mode is needed")

    def grid(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, int(self.steps))

    def point(self, value: float):
        """(ModelParams, temperature) with the swept quantity set to *value*."""
        if self.variable == 'T':
            return self.fixed, float(value)
        params = replace(self.fixed, **{PARAM_FIELDS[self.variable]: float(value)})
        return params, self.temperature

    def points(self):
        points = [self.point(v) for v in self.grid()]
        if self.with_ground:
            points.insert(0, self.point(0.))
        return points

    @property
    def options(self) -> RowOptions:
        return RowOptions(with_oracle=self.with_oracle,
                          with_concurrence=self.with_concurrence)


def _describe(params: ModelParams, temperature: float) -> str:
    return "omega={}, delta={}, B={}, b={}, T={}".format(
        params.omega_gap, params.delta, params.field_b_uniform,
        params.field_b_inhomo, temperature)


def run_point(params: ModelParams, temperature: float,
              options: Optional[RowOptions]=None) -> SweepRow:
    """Evaluate every measure for one parameter set.

    Raises
    ======
    SweepError
      Wrapping any package error, with the parameter set in the
      message.

    """
    if options is None:
        options = RowOptions()
    try:
        t = ThermalPoint.from_temperature(temperature)
        state = gibbs_state(params, t)
        exact = lqu(state)
        paper = lqu_paper_mode(state)
        conc = concurrence(state) if options.with_concurrence else math.nan
        if options.with_oracle:
            oracle_min = minimize_skew(state, options.oracle_config).min_value
        else:
            oracle_min = math.nan
    except exceptions_.GravcatError as exc:
        msg = "Evaluation failed at {}: {}".format(_describe(params, temperature), exc)
        raise exceptions_.SweepError(msg, params=(params, temperature)) from exc
    return SweepRow(
        omega=params.omega_gap,
        delta=params.delta,
        B=params.field_b_uniform,
        b=params.field_b_inhomo,
        T=float(temperature),
        Z=partition_function(params, t),
        lqu_exact=exact.value,
        lqu_paper=paper.value,
        branch_exact=exact.branch.value,
        w1=exact.w.w1,
        w3=exact.w.w3,
        concurrence=conc,
        oracle_min=oracle_min,
        purity=purity(state),
    )


def run_sweep(spec: SweepSpec, workers: int=1) -> List[SweepRow]:
    """Evaluate *spec* on its grid.

    Rows come back in grid order whatever the number of *workers*.

    Raises
    ======
    SweepError
      For the first grid point (in grid order) that fails; its
      ``index`` attribute holds the grid index.

    """
    options = spec.options

    def evaluate(indexed):
        idx, (params, temperature) = indexed
        try:
            return run_point(params, temperature, options)
        except exceptions_.SweepError as exc:
            msg = "Sweep over {} aborted at grid index {}: {}".format(spec.variable, idx, exc)
            raise exceptions_.SweepError(msg, index=idx, params=exc.params) from exc

    points = list(enumerate(spec.points()))
    if workers <= 1:
        return [evaluate(p) for p in points]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(evaluate, points))


def check_rows(rows: Sequence[SweepRow]):
    """Recheck lqu_exact = 1 - max(w1, w3) on every row."""
    for idx, row in enumerate(rows):
        expected = 1 - max(row.w1, row.w3)
        if abs(row.lqu_exact - expected) > ROW_TOL:
            msg = "Row {}: lqu_exact {!r} != 1 - max(w1, w3) = {!r}".format(
                idx, row.lqu_exact, expected)
            raise exceptions_.RowInvariantError(msg)


def rows_to_frame(rows: Sequence[SweepRow]) -> pd.DataFrame:
    return pd.DataFrame(list(rows), columns=SweepRow._fields)


def emit_csv(rows: Sequence[SweepRow], destination: Destination=None) -> bytes:
    """Render *rows* as CSV and optionally write them to *destination*.

    Numbers carry 17 significant digits, lines end with LF, the header
    lists the :class:`SweepRow` fields in order and missing values
    (oracle not requested, ...) are empty fields.

    Returns
    =======
    data
      The encoded CSV, identical to what was written.

    """
    if len(rows) == 0:
        raise exceptions_.UsageError("Cannot write an empty sweep.")
    check_rows(rows)
    text = rows_to_frame(rows).to_csv(index=False, float_format='%.17g',
                                      lineterminator='\n', na_rep='')
    data = text.encode('utf-8')
    if destination is not None:
        try:
            with open(destination, 'wb') as fp:
                fp.write(data)
        except OSError as exc:
            msg = "Could not write CSV to {}: {}".format(destination, exc)
            raise exceptions_.OutputError(msg) from exc
    return data


def requires_dataframe(func):
    """Decorator to make sure the rows are computed before running."""
    @functools.wraps(func)
    def run_with_dataframe(self, *args, **kwargs):
        if self._df is None:
            self._load_data()
        return func(self, *args, **kwargs)
    return run_with_dataframe


class Sweep():
    """One curve: a :class:`SweepSpec` and its (lazily computed) rows.

    Parameters
    ----------
    spec
      What to sweep.
    workers : optional
      Number of threads used to evaluate grid points. Results do not
      depend on it.

    """
    _df = None
    _rows = None

    def __init__(self, spec: SweepSpec, workers: int=1):
        self.spec = spec
        self.workers = workers

    def __repr__(self):
        return "<Sweep {} {}..{} ({} steps) {}>".format(
            self.spec.variable, self.spec.start, self.spec.stop,
            self.spec.steps, self.spec.label)

    def _load_data(self):
        logstart = time()
        self._rows = run_sweep(self.spec, workers=self.workers)
        self._df = rows_to_frame(self._rows)
        log.info("Computed %d rows for %r in %f seconds.",
                 len(self._rows), self, time() - logstart)

    @property
    @requires_dataframe
    def data(self) -> pd.DataFrame:
        """Retrieve the rows as pandas dataframe."""
        return self._df

    @property
    @requires_dataframe
    def rows(self) -> List[SweepRow]:
        return self._rows

    def write_csv(self, destination: Destination=None) -> bytes:
        return emit_csv(self.rows, destination)

    def plot_curve(self, ax=None, column='lqu_exact', label=None, *args, **kwargs):
        """Plot *column* against the swept variable. Extra arguments go
        to matplotlib's plot function."""
        if ax is None:
            ax = new_axes()
        if label is None:
            label = self.spec.label or None
        df = self.data
        artists = ax.plot(df[self.spec.variable], df[column], label=label,
                          *args, **kwargs)
        ax.set_xlabel(axis_label(self.spec.variable))
        ax.set_ylabel(axis_label(column))
        return artists
