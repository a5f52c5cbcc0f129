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

import cmath
import math
from unittest import TestCase, main

import numpy as np
from numpy.testing import assert_allclose, assert_array_equal

from gravcatlab import exceptions_
from gravcatlab.linalg import DenseHermitian4, dense_sqrt
from gravcatlab.xstate import (XRoot, XState, fano_bloch, from_dense, purity,
                               remove_phases, sqrt_xstate, to_dense, validate)


MIXED = XState.maximally_mixed()
BELL = XState.bell_phi_plus()


class XStateTests(TestCase):
    def test_to_array(self):
        s = XState(0.4, 0.1, 0.2, 0.3, a14=0.1j, a23=0.05)
        arr = s.to_array()
        assert_array_equal(arr, arr.conj().T)
        self.assertEqual(arr[3, 0], -0.1j)
        self.assertAlmostEqual(s.trace(), 1.0)

    def test_non_finite(self):
        with self.assertRaises(exceptions_.InvalidStateError):
            XState(math.nan, 0, 0, 1)
        with self.assertRaises(exceptions_.InvalidStateError):
            XState(1, 0, 0, 0, a23=complex(math.inf, 0))

    def test_from_pure(self):
        s = XState.from_pure([1, 0, 0, 1])
        assert_allclose(s.to_array(), BELL.to_array(), atol=1e-15)
        with self.assertRaises(exceptions_.XStructureError):
            XState.from_pure([1, 1, 0, 0])

    def test_squared(self):
        assert_allclose(BELL.squared(), BELL.to_array())


class ValidateTests(TestCase):
    def test_valid_states(self):
        self.assertTrue(validate(MIXED).ok)
        self.assertTrue(validate(BELL).ok)
        self.assertEqual(str(validate(BELL)), "ok")

    def test_block_psd_violation(self):
        report = validate(XState(0.5, 0, 0, 0.5, a14=0.6))
        self.assertFalse(report.ok)
        self.assertEqual(len(report.violations), 1)
        violation = report.violations[0]
        self.assertEqual(violation.message, "block PSD: 0.25 < 0.36")
        self.assertAlmostEqual(violation.magnitude, 0.11)

    def test_trace_and_diagonal(self):
        report = validate(XState(0.7, -0.1, 0.2, 0.3))
        names = [v.name for v in report.violations]
        self.assertIn('d2', names)
        self.assertIn('trace', names)


class RemovePhasesTests(TestCase):
    def test_modulus(self):
        s = XState(0.4, 0.1, 0.2, 0.3, a14=0.3 * cmath.exp(1j * math.pi / 3))
        normalized = remove_phases(s)
        self.assertAlmostEqual(normalized.a14, 0.3, places=12)
        self.assertEqual(normalized.a14.imag, 0)
        self.assertTrue(normalized.is_phase_normalized())

    def test_identity_on_normalized(self):
        s = XState(0.4, 0.1, 0.2, 0.3, a14=0.1, a23=0.05)
        self.assertEqual(remove_phases(s), s)


class SqrtTests(TestCase):
    def test_mixed(self):
        root = sqrt_xstate(MIXED)
        self.assertIsInstance(root, XRoot)
        assert_allclose(root.diagonal, [0.5] * 4)
        self.assertEqual(root.a14, 0)

    def test_pure_projector(self):
        root = sqrt_xstate(BELL)
        assert_allclose(root.to_array(), BELL.to_array(), atol=1e-15)

    def test_squares_back(self):
        s = XState(0.4, 0.1, 0.2, 0.3, a14=0.2 + 0.1j, a23=0.1j)
        root = sqrt_xstate(s)
        assert_allclose(root.squared(), s.to_array(), atol=1e-14)

    def test_not_positive(self):
        with self.assertRaises(exceptions_.NotPositiveError):
            sqrt_xstate(XState(0.5, 0, 0, 0.5, a14=0.6))

    def test_zero_block(self):
        root = sqrt_xstate(XState(1, 0, 0, 0))
        assert_array_equal(root.diagonal, [1, 0, 0, 0])
        self.assertEqual(root.a23, 0)

    def test_small_eigenvalue_kept(self):
        # Block eigenvalues 1 - 5e-14 and 5e-14
        s = XState(0.5, 0, 0, 0.5, a14=0.5 - 5e-14)
        root = sqrt_xstate(s)
        self.assertAlmostEqual(root.d1 - 0.5, math.sqrt(5e-14) / 2, delta=1e-9)
        assert_allclose(root.to_array(), dense_sqrt(to_dense(s)).matrix, atol=1e-9)


class FanoBlochTests(TestCase):
    def test_mixed(self):
        assert_allclose(fano_bloch(MIXED), (1, 0, 0, 0, 0, 0))

    def test_bell(self):
        r = fano_bloch(BELL)
        self.assertEqual(r.r00, 1)
        self.assertEqual(r.r03, 0)
        self.assertEqual(r.r30, 0)
        self.assertEqual(r.r33, 1)
        self.assertEqual(r.r11, 1)
        self.assertEqual(r.r22, -1)

    def test_r03(self):
        r = fano_bloch(XState(0.3, 0.2, 0.2, 0.3))
        self.assertAlmostEqual(r.r03, 0)

    def test_matches_pauli_traces(self):
        s = XState(0.4, 0.1, 0.2, 0.3, a14=0.15, a23=0.05)
        sx = np.array([[0, 1], [1, 0]])
        sy = np.array([[0, -1j], [1j, 0]])
        sz = np.diag([1, -1])
        r = fano_bloch(s)
        rho = s.to_array()
        self.assertAlmostEqual(r.r11, np.trace(rho @ np.kron(sx, sx)).real)
        self.assertAlmostEqual(r.r22, np.trace(rho @ np.kron(sy, sy)).real)
        self.assertAlmostEqual(r.r33, np.trace(rho @ np.kron(sz, sz)).real)
        self.assertAlmostEqual(r.r03, np.trace(rho @ np.kron(np.eye(2), sz)).real)
        self.assertAlmostEqual(r.r30, np.trace(rho @ np.kron(sz, np.eye(2))).real)


class ConversionTests(TestCase):
    def test_purity(self):
        self.assertEqual(purity(MIXED), 0.25)
        self.assertEqual(purity(BELL), 1)

    def test_round_trip(self):
        self.assertEqual(from_dense(to_dense(BELL)), BELL)

    def test_structure_violation(self):
        mat = np.array(to_dense(MIXED).matrix)
        mat[0, 1] = 0.01
        with self.assertRaises(exceptions_.XStructureError) as ctx:
            from_dense(DenseHermitian4(mat))
        self.assertIn(ctx.exception.index, [(0, 1), (1, 0)])
        self.assertAlmostEqual(ctx.exception.magnitude, 0.01)

    def test_root_class(self):
        root = from_dense(to_dense(sqrt_xstate(MIXED)), cls=XRoot)
        self.assertIsInstance(root, XRoot)


if __name__ == '__main__':
    main()
