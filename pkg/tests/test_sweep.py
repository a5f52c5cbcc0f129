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

import io
import math
import tempfile
from pathlib import Path
from unittest import TestCase, main, mock

import matplotlib
matplotlib.use('Agg')
import matplotlib.pyplot as plt
import numpy as np
import pandas as pd
from numpy.testing import assert_allclose

from gravcatlab import exceptions_
from gravcatlab.gravcat import ModelParams
from gravcatlab.sweep import (RowOptions, Sweep, SweepRow, SweepSpec,
                              canonical_variable, check_rows, emit_csv,
                              run_point, run_sweep)


FIG_PARAMS = ModelParams(0.05, 0.05, 0.5, 0.5)


class SweepSpecTests(TestCase):
    def test_aliases(self):
        self.assertEqual(canonical_variable('Delta'), 'delta')
        with self.assertRaises(exceptions_.SweepSpecError):
            canonical_variable('x')

    def test_invalid(self):
        with self.assertRaises(exceptions_.SweepSpecError):
            SweepSpec('T', 1, 0.5, 10)
        with self.assertRaises(exceptions_.SweepSpecError):
            SweepSpec('T', 0.1, 1, 1)
        with self.assertRaises(exceptions_.SweepSpecError):
            SweepSpec('T', -1, 1, 10)
        with self.assertRaises(exceptions_.SweepSpecError):
            SweepSpec('B', 0, 1, 10, with_ground=True)
        with self.assertRaises(exceptions_.SweepSpecError):
            SweepSpec('B', 0, 1, 10, modes=())

    def test_grid(self):
        spec = SweepSpec('b', -2, 2, 2)
        self.assertEqual(list(spec.grid()), [-2, 2])
        params, temperature = spec.point(1.5)
        self.assertEqual(params.field_b_inhomo, 1.5)
        self.assertEqual(temperature, 0.5)

    def test_ground_point(self):
        spec = SweepSpec('T', 0.01, 5, 10, with_ground=True)
        points = spec.points()
        self.assertEqual(len(points), 11)
        self.assertEqual(points[0][1], 0)


class RunPointTests(TestCase):
    def test_figure_parameters(self):
        row = run_point(FIG_PARAMS, 0.5)
        self.assertIsInstance(row, SweepRow)
        self.assertEqual(row.lqu_exact, 1 - max(row.w1, row.w3))
        self.assertTrue(math.isfinite(row.lqu_paper))
        self.assertTrue(math.isnan(row.oracle_min))
        self.assertGreater(row.Z, 0)

    def test_oracle(self):
        row = run_point(FIG_PARAMS, 0.5, RowOptions(with_oracle=True))
        self.assertLess(abs(row.oracle_min - row.lqu_exact), 2e-6)

    def test_high_temperature(self):
        row = run_point(FIG_PARAMS, 1e6)
        self.assertLess(row.lqu_exact, 1e-6)

    def test_uncoupled(self):
        row = run_point(ModelParams(0.3, 0., -0.2, 0.7), 0.8)
        self.assertAlmostEqual(row.lqu_exact, 0, places=12)
        self.assertEqual(row.concurrence, 0)

    def test_ground(self):
        row = run_point(FIG_PARAMS, 0)
        self.assertEqual(row.Z, math.inf)
        self.assertAlmostEqual(row.purity, 1)

    def test_error_echoes_parameters(self):
        with self.assertRaises(exceptions_.SweepError) as ctx:
            run_point(FIG_PARAMS, -1)
        self.assertIn("T=-1", str(ctx.exception))
        self.assertIsInstance(ctx.exception.__cause__, exceptions_.InvalidStateError)


class RunSweepTests(TestCase):
    def test_figure_curve(self):
        spec = SweepSpec('T', 0.01, 5, 500)
        rows = run_sweep(spec)
        self.assertEqual(len(rows), 500)
        temperatures = [row.T for row in rows]
        self.assertTrue(np.all(np.diff(temperatures) > 0))
        self.assertEqual(temperatures[0], 0.01)
        self.assertEqual(temperatures[-1], 5)

    def test_workers(self):
        spec = SweepSpec('B', -2, 2, 41)
        self.assertEqual(emit_csv(run_sweep(spec, workers=1)),
                         emit_csv(run_sweep(spec, workers=4)))

    def test_w3_symmetric_in_b(self):
        rows = run_sweep(SweepSpec('b', -2, 2, 101))
        w3 = np.array([row.w3 for row in rows])
        assert_allclose(w3, w3[::-1], atol=1e-10)

    def test_with_ground(self):
        rows = run_sweep(SweepSpec('T', 0, 1, 3, with_ground=True))
        self.assertEqual([row.T for row in rows], [0, 0, 0.5, 1])
        self.assertEqual(rows[0].lqu_exact, rows[1].lqu_exact)

    def test_failure_index(self):
        real_run_point = run_point

        def failing(params, temperature, options=None):
            if temperature == 0.5:
                raise exceptions_.SweepError("boom", params=(params, temperature))
            return real_run_point(params, temperature, options)

        with mock.patch('gravcatlab.sweep.run_point', side_effect=failing):
            with self.assertRaises(exceptions_.SweepError) as ctx:
                run_sweep(SweepSpec('T', 0, 1, 3))
        self.assertEqual(ctx.exception.index, 1)
        self.assertIn("grid index 1", str(ctx.exception))


class EmitCsvTests(TestCase):
    def test_single_row(self):
        data = emit_csv([run_point(FIG_PARAMS, 0.5)])
        lines = data.decode().split('\n')
        self.assertEqual(len(lines), 3)  # Trailing newline
        self.assertEqual(lines[-1], '')
        self.assertTrue(lines[0].startswith("omega,delta,B,b,T,Z,lqu_exact,"))
        self.assertEqual(lines[0].split(','), list(SweepRow._fields))
        self.assertNotIn('\r', data.decode())

    def test_round_trip_precision(self):
        row = run_point(FIG_PARAMS, 0.5)
        df = pd.read_csv(io.BytesIO(emit_csv([row])), float_precision='round_trip')
        self.assertEqual(df['lqu_exact'][0], row.lqu_exact)
        self.assertEqual(df['Z'][0], row.Z)
        self.assertTrue(np.isnan(df['oracle_min'][0]))

    def test_empty(self):
        with self.assertRaises(exceptions_.UsageError):
            emit_csv([])

    def test_row_invariant(self):
        row = run_point(FIG_PARAMS, 0.5)._replace(lqu_exact=0.3)
        with self.assertRaises(exceptions_.RowInvariantError):
            check_rows([row])
        with self.assertRaises(exceptions_.RowInvariantError):
            emit_csv([row])

    def test_write_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "sweep.csv"
            data = emit_csv([run_point(FIG_PARAMS, 0.5)], path)
            self.assertEqual(path.read_bytes(), data)

    def test_write_failure(self):
        with tempfile.TemporaryDirectory() as tmp:
            with self.assertRaises(exceptions_.OutputError):
                emit_csv([run_point(FIG_PARAMS, 0.5)], Path(tmp) / "missing" / "x.csv")


class SweepObjectTests(TestCase):
    def test_lazy_dataframe(self):
        sweep = Sweep(SweepSpec('delta', -1, 1, 11))
        self.assertIsNone(sweep._df)
        df = sweep.data
        self.assertIsInstance(df, pd.DataFrame)
        self.assertEqual(len(df), 11)
        self.assertEqual(list(df.columns), list(SweepRow._fields))

    def test_plot_curve(self):
        sweep = Sweep(SweepSpec('delta', -1, 1, 11, label="test"))
        fig, ax = plt.subplots()
        artists = sweep.plot_curve(ax=ax)
        self.assertEqual(len(artists), 1)
        self.assertEqual(ax.get_ylabel(), 'LQU')
        plt.close(fig)


if __name__ == '__main__':
    main()
