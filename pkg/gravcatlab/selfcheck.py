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

"""Deterministic acceptance suite behind ``gravcatlab selfcheck``.

Every check compares a measured error against a tolerance. Blocking
checks decide the exit status; the others (runtime, figure features and
the paper-mode high-temperature value) are only reported.

"""

import itertools
import logging
import math
from dataclasses import dataclass, field, replace
from time import time
from typing import Callable, List, NamedTuple, Sequence, Tuple

import numpy as np

from . import exceptions_
from .figures import count_peaks, decays_to_zero, figure_preset
from .gravcat import (ModelParams, ThermalPoint, log_partition_function,
                      partition_function, partition_function_definitional,
                      partition_function_from_spectrum, thermal_state,
                      thermal_state_definitional)
from .measures import (concurrence, concurrence_definitional, lqu,
                       lqu_paper_mode, w_closed_form)
from .oracle import minimize_skew, w_numeric
from .sweep import emit_csv, run_sweep
from .xstate import XState, remove_phases, sqrt_xstate


log = logging.getLogger(__name__)

GRID_VALUES = (-1., -0.3, 0., 0.05, 0.3, 1.)
GRID_TEMPERATURES = (0.1, 0.5, 2., 10.)
N_GRID_STATES = 200
N_RANDOM_DRAWS = 500
RANDOM_BETAS = (0.1, 0.5, 1., 5., 50.)
SEED = 20260417

ORACLE_TOL = 2e-6
ORACLE_RUNTIME = 30.
W_TOL = 1e-10
GIBBS_TOL = 1e-10
Z_RTOL = 1e-12
LIMIT_TOL = 1e-12
PURE_TOL = 1e-10
SYMMETRY_TOL = 1e-12
W3_SYMMETRY_TOL = 1e-10
ORDER_SLACK = 1e-12
HIGH_T = 1e6
HIGH_T_TOL = 1e-6
CONCURRENCE_TOL = 1e-6
TOTAL_RUNTIME = 60.

GridPoint = Tuple[ModelParams, float]


class Check(NamedTuple):
    name: str
    passed: bool
    error: float
    tolerance: float
    blocking: bool = True
    detail: str = ''

    def __str__(self):
        status = "PASS" if self.passed else "FAIL"
        if not self.blocking:
            status = "({})".format(status.lower())
        line = "{:6} {:<40} error {:.3e} (tolerance {:.1e})".format(
            status, self.name, self.error, self.tolerance)
        if self.detail:
            line += "  " + self.detail
        return line


@dataclass
class SelfCheckReport():
    checks: List[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks if c.blocking)

    @property
    def failures(self) -> List[Check]:
        return [c for c in self.checks if c.blocking and not c.passed]

    @property
    def exit_status(self) -> int:
        return 0 if self.ok else 1

    def add(self, name, error, tolerance, blocking=True, detail='') -> Check:
        error = float(error)
        check = Check(name, bool(error <= tolerance), error, tolerance, blocking, detail)
        self.checks.append(check)
        log.debug("%s", check)
        return check

    def __str__(self):
        lines = [str(c) for c in self.checks]
        n_blocking = sum(c.blocking for c in self.checks)
        lines.append("{} of {} checks passed".format(
            n_blocking - len(self.failures), n_blocking))
        return "\n".join(lines)

    def raise_for_failures(self):
        if not self.ok:
            names = ", ".join(c.name for c in self.failures)
            raise exceptions_.SelfCheckFailure("Failed checks: {}".format(names))


def acceptance_grid(n: int=N_GRID_STATES) -> List[GridPoint]:
    """*n* points spread evenly through the omega, Delta, B, b, T product grid."""
    product = list(itertools.product(GRID_VALUES, GRID_VALUES, GRID_VALUES,
                                     GRID_VALUES, GRID_TEMPERATURES))
    picks = np.linspace(0, len(product) - 1, n).round().astype(int)
    return [(ModelParams(*product[i][:4]), product[i][4]) for i in picks]


def random_draws(n: int=N_RANDOM_DRAWS, seed: int=SEED) -> List[Tuple[ModelParams, float]]:
    """(params, beta) pairs with parameters uniform in [-2, 2]."""
    rng = np.random.default_rng(seed)
    values = rng.uniform(-2, 2, size=(n, 4))
    betas = rng.choice(RANDOM_BETAS, size=n)
    return [(ModelParams(*row), float(beta)) for row, beta in zip(values, betas)]


def _state(point: GridPoint) -> XState:
    params, temperature = point
    return thermal_state(params, ThermalPoint.from_temperature(temperature))


def _max_over(items, func: Callable) -> float:
    return max((float(func(item)) for item in items), default=0.)


def check_oracle(report: SelfCheckReport, grid: Sequence[GridPoint]):
    start = time()
    error = _max_over(grid, lambda pt: abs(lqu(_state(pt)).value -
                                           minimize_skew(_state(pt)).min_value))
    elapsed = time() - start
    report.add("oracle vs closed-form LQU", error, ORACLE_TOL,
               detail="{} states".format(len(grid)))
    report.add("oracle runtime [s]", elapsed, ORACLE_RUNTIME, blocking=False)


def _w_error(s: XState) -> float:
    normalized = remove_phases(s)
    numeric = w_numeric(normalized).matrix
    closed = w_closed_form(sqrt_xstate(normalized))
    diag_err = np.abs(np.diag(numeric) - np.array(closed)).max()
    off_err = np.abs(numeric - np.diag(np.diag(numeric))).max()
    return max(diag_err, off_err)


def check_w_matrix(report: SelfCheckReport, grid: Sequence[GridPoint]):
    report.add("definitional W matrix", _max_over(grid, lambda pt: _w_error(_state(pt))), W_TOL)


def check_concurrence(report: SelfCheckReport, grid: Sequence[GridPoint]):
    error = _max_over(grid, lambda pt: abs(concurrence(_state(pt)) -
                                           concurrence_definitional(_state(pt))))
    report.add("definitional concurrence", error, CONCURRENCE_TOL)


def check_gibbs(report: SelfCheckReport, draws):
    state_err, z_err = 0., 0.
    for params, beta in draws:
        t = ThermalPoint(beta)
        analytic = thermal_state(params, t).to_array()
        numeric = thermal_state_definitional(params, t).to_array()
        state_err = max(state_err, np.abs(analytic - numeric).max())
        zs = np.array([partition_function(params, t),
                       partition_function_from_spectrum(params, t),
                       partition_function_definitional(params, t),
                       math.exp(log_partition_function(params, t))])
        z_err = max(z_err, (zs.max() - zs.min()) / zs.min())
    report.add("Gibbs state vs definitional", state_err, GIBBS_TOL,
               detail="{} draws".format(len(draws)))
    report.add("partition function consistency", z_err, Z_RTOL)


def check_limits(report: SelfCheckReport, grid: Sequence[GridPoint]):
    report.add("LQU(I/4) = 0", abs(lqu(XState.maximally_mixed()).value), LIMIT_TOL)
    report.add("LQU(Bell) = 1", abs(lqu(XState.bell_phi_plus()).value - 1), LIMIT_TOL)
    decoupled = [(replace(params, delta=0.), temp) for params, temp in grid]
    report.add("LQU = 0 without coupling",
               _max_over(decoupled, lambda pt: abs(lqu(_state(pt)).value)), LIMIT_TOL)
    theta = math.pi / 6
    pure = XState.from_pure([math.cos(theta), 0, 0, math.sin(theta)])
    error = max(abs(lqu(pure).value - 0.75), abs(concurrence(pure) - math.sqrt(3) / 2))
    report.add("pure state theta = pi/6", error, PURE_TOL)


def _correlations(s: XState) -> np.ndarray:
    exact = lqu(s)
    paper = lqu_paper_mode(s)
    return np.array([exact.value, exact.w.w1, exact.w.w3, paper.value, concurrence(s)])


def check_symmetries(report: SelfCheckReport, grid: Sequence[GridPoint]):
    def parity_error(pt):
        params, temp = pt
        mirrored = (replace(params, delta=-params.delta), temp)
        return np.abs(_correlations(_state(pt)) - _correlations(_state(mirrored))).max()

    def swap_error(pt):
        params, temp = pt
        s = _state(pt)
        m = _state((replace(params, field_b_inhomo=-params.field_b_inhomo), temp))
        expected = np.array([s.d1, s.d3, s.d2, s.d4, s.a14, s.a23])
        found = np.array([m.d1, m.d2, m.d3, m.d4, m.a14, m.a23])
        return np.abs(expected - found).max()

    report.add("Delta parity", _max_over(grid, parity_error), SYMMETRY_TOL)
    report.add("b swap", _max_over(grid, swap_error), SYMMETRY_TOL)
    w3_err = 0.
    for spec in figure_preset('fig3a', steps=101) + figure_preset('fig3b', steps=101):
        w3 = np.array([row.w3 for row in run_sweep(spec)])
        w3_err = max(w3_err, np.abs(w3 - w3[::-1]).max())
    report.add("w3 symmetric in b", w3_err, W3_SYMMETRY_TOL)


def check_ordering(report: SelfCheckReport, grid: Sequence[GridPoint], draws):
    states = [_state(pt) for pt in grid]
    states += [thermal_state(params, ThermalPoint(beta)) for params, beta in draws]
    violation = 0.
    for s in states:
        w = lqu(s).w
        violation = max(violation, w.w2 - w.w1)
    report.add("w1 >= w2", violation, ORDER_SLACK, detail="{} states".format(len(states)))


def check_high_temperature(report: SelfCheckReport):
    specs = figure_preset('fig1a', steps=2, start=HIGH_T / 2, stop=HIGH_T)
    endpoints = [run_sweep(spec)[-1] for spec in specs]
    report.add("LQU at T = 1e6", max(row.lqu_exact for row in endpoints), HIGH_T_TOL)
    paper = max(row.lqu_paper for row in endpoints)
    report.add("paper-mode LQU at T = 1e6", paper, HIGH_T_TOL, blocking=False)


def check_figure_features(report: SelfCheckReport, steps: int=201):
    for spec in figure_preset('fig3a', curves=(0.5, 1.0), steps=steps):
        peaks = count_peaks([row.lqu_paper for row in run_sweep(spec)])
        report.add("fig3a two peaks ({})".format(spec.label), abs(peaks - 2), 0,
                   blocking=False, detail="{} peaks".format(peaks))
    for spec in figure_preset('fig4b', steps=steps):
        values = [row.lqu_exact for row in run_sweep(spec)]
        decays = decays_to_zero(values)
        report.add("fig4b decays ({})".format(spec.label), 0 if decays else 1, 0,
                   blocking=False, detail="end {:.3g}, max {:.3g}".format(values[-1], max(values)))


def check_determinism(report: SelfCheckReport, steps: int=100):
    mismatches = 0
    for spec in figure_preset('fig4a', steps=steps):
        serial = emit_csv(run_sweep(spec, workers=1))
        threaded = emit_csv(run_sweep(spec, workers=4))
        repeat = emit_csv(run_sweep(spec, workers=1))
        mismatches += (serial != threaded) + (serial != repeat)
    report.add("bitwise identical CSV", mismatches, 0)


def selfcheck() -> SelfCheckReport:
    """Run the whole suite and return its report."""
    start = time()
    report = SelfCheckReport()
    grid = acceptance_grid()
    draws = random_draws()
    check_oracle(report, grid)
    check_w_matrix(report, grid)
    check_concurrence(report, grid)
    check_gibbs(report, draws)
    check_limits(report, grid)
    check_symmetries(report, grid)
    check_ordering(report, grid, draws)
    check_high_temperature(report)
    check_figure_features(report)
    check_determinism(report)
    elapsed = time() - start
    report.add("total runtime [s]", elapsed, TOTAL_RUNTIME, blocking=False)
    log.info("Self check finished in %f seconds.", elapsed)
    return report
