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

import math
from unittest import TestCase, main

import numpy as np
from numpy.testing import assert_allclose, assert_array_equal

from gravcatlab import exceptions_
from gravcatlab.gravcat import (ModelParams, ThermalPoint, boltzmann_weights,
                                gibbs_state, ground_state, hamiltonian,
                                log_partition_function, partition_function,
                                partition_function_definitional,
                                partition_function_from_spectrum, spectrum,
                                thermal_state, thermal_state_definitional)
from gravcatlab.linalg import dense_eigh
from gravcatlab.xstate import purity, validate


FIG_PARAMS = ModelParams(omega_gap=0.05, delta=0.05, field_b_uniform=0.5, field_b_inhomo=0.5)


def params(omega=0.05, delta=0.05, B=0.5, b=0.5):
    return ModelParams(omega_gap=omega, delta=delta, field_b_uniform=B, field_b_inhomo=b)


class ModelParamsTests(TestCase):
    def test_non_finite(self):
        with self.assertRaises(exceptions_.InvalidStateError):
            params(delta=math.inf)

    def test_negative_omega_allowed(self):
        p = params(omega=-0.3)
        self.assertAlmostEqual(p.zeeman, 0.2)


class ThermalPointTests(TestCase):
    def test_from_temperature(self):
        self.assertEqual(ThermalPoint.from_temperature(0.5).beta, 2)
        self.assertTrue(ThermalPoint.from_temperature(0).is_ground)
        self.assertEqual(ThermalPoint(0).temperature, math.inf)

    def test_negative_temperature(self):
        with self.assertRaises(exceptions_.InvalidStateError):
            ThermalPoint.from_temperature(-1)
        with self.assertRaises(exceptions_.InvalidStateError):
            ThermalPoint(-0.1)


class HamiltonianTests(TestCase):
    def test_figure_parameters(self):
        h = hamiltonian(FIG_PARAMS).matrix
        assert_allclose(h.diagonal().real, [0.55, -0.5, 0.5, -0.55])
        self.assertEqual(h[0, 3], -0.05)
        self.assertEqual(h[1, 2], -0.05)

    def test_zero(self):
        h = hamiltonian(params(0, 0, 0, 0))
        assert_array_equal(h.matrix, np.zeros((4, 4)))

    def test_uncoupled_is_diagonal(self):
        h = hamiltonian(params(delta=0)).matrix
        assert_array_equal(h, np.diag(h.diagonal()))


class SpectrumTests(TestCase):
    def test_pythagorean(self):
        sp = spectrum(params(delta=0.4, b=0.3))
        self.assertAlmostEqual(sp.eps1, -0.5, places=15)
        self.assertAlmostEqual(sp.eps2, 0.5, places=15)

    def test_matches_dense_eigh(self):
        rng = np.random.default_rng(7)
        for row in rng.uniform(-2, 2, size=(20, 4)):
            p = ModelParams(*row)
            sp = spectrum(p)
            h = hamiltonian(p).matrix
            assert_allclose(np.sort(sp.energies), dense_eigh(hamiltonian(p)).eigenvalues,
                            atol=1e-13)
            for idx in range(4):
                vec = sp.eigenvector(idx)
                assert_allclose(h @ vec, sp.energies[idx] * vec, atol=1e-13)

    def test_uncoupled_angle(self):
        sp = spectrum(params(delta=0, b=0.5, B=0.2))
        self.assertEqual(sp.theta1, 0)
        self.assertEqual(sp.eps1, -0.5)
        assert_allclose(sp.eigenvector(0), [0, 1, 0, 0])

    def test_delta_parity(self):
        plus = spectrum(params(delta=0.3, b=-0.2, B=0.1))
        minus = spectrum(params(delta=-0.3, b=-0.2, B=0.1))
        assert_array_equal(plus.energies, minus.energies)
        assert_array_equal(plus.angles, -minus.angles)


class PartitionFunctionTests(TestCase):
    def test_infinite_temperature(self):
        self.assertEqual(partition_function(FIG_PARAMS, ThermalPoint(0)), 4)

    def test_figure_parameters(self):
        t = ThermalPoint(2)
        z = partition_function(FIG_PARAMS, t)
        self.assertAlmostEqual(z, 6.447, places=3)
        self.assertAlmostEqual(partition_function_definitional(FIG_PARAMS, t) / z, 1, places=12)
        self.assertAlmostEqual(partition_function_from_spectrum(FIG_PARAMS, t) / z, 1, places=12)
        self.assertAlmostEqual(log_partition_function(FIG_PARAMS, t), math.log(z), places=12)

    def test_log_domain_survives_overflow(self):
        t = ThermalPoint(1e4)
        self.assertEqual(partition_function(FIG_PARAMS, t), math.inf)
        log_z = log_partition_function(FIG_PARAMS, t)
        self.assertTrue(math.isfinite(log_z))
        self.assertAlmostEqual(log_z, 1e4 * math.hypot(0.55, 0.05), places=6)

    def test_ground(self):
        self.assertEqual(partition_function(FIG_PARAMS, ThermalPoint(math.inf)), math.inf)


class WeightsTests(TestCase):
    def test_normalized(self):
        w = boltzmann_weights(spectrum(FIG_PARAMS), ThermalPoint(3))
        self.assertAlmostEqual(sum(w), 1)
        # Lowest level is eps3 for these parameters
        self.assertEqual(np.argmax(w.array), 2)

    def test_ground_degeneracy(self):
        w = boltzmann_weights(spectrum(params(omega=0, delta=0, B=0.5, b=0.5)),
                              ThermalPoint(math.inf))
        assert_array_equal(w.array, [0.5, 0, 0.5, 0])


class ThermalStateTests(TestCase):
    def test_infinite_temperature(self):
        s = thermal_state(FIG_PARAMS, ThermalPoint(0))
        assert_allclose(s.to_array(), np.eye(4) / 4, atol=1e-15)
        self.assertAlmostEqual(purity(s), 0.25)

    def test_uncoupled_is_diagonal(self):
        for b in (-0.5, 0, 0.5):
            s = thermal_state(params(delta=0, b=b), ThermalPoint(2))
            self.assertEqual(s.a14, 0)
            self.assertEqual(s.a23, 0)

    def test_matches_definitional(self):
        t = ThermalPoint(2)
        s = thermal_state(FIG_PARAMS, t)
        assert_allclose(s.to_array(), thermal_state_definitional(FIG_PARAMS, t).to_array(),
                        atol=1e-10)
        self.assertTrue(validate(s).ok)

    def test_random_consistency(self):
        rng = np.random.default_rng(1)
        for beta in (0.1, 1, 10):
            for row in rng.uniform(-2, 2, size=(10, 4)):
                p, t = ModelParams(*row), ThermalPoint(beta)
                assert_allclose(thermal_state(p, t).to_array(),
                                thermal_state_definitional(p, t).to_array(), atol=1e-10)

    def test_definitional_degenerate(self):
        p = params(omega=0, delta=0.3, B=0, b=0)
        s = thermal_state_definitional(p, ThermalPoint(1))
        self.assertAlmostEqual(s.trace(), 1, places=14)
        assert_allclose(s.to_array(), thermal_state(p, ThermalPoint(1)).to_array(), atol=1e-12)

    def test_definitional_infinite_temperature(self):
        s = thermal_state_definitional(FIG_PARAMS, ThermalPoint(0))
        assert_allclose(s.to_array(), np.eye(4) / 4, atol=1e-14)

    def test_needs_positive_temperature(self):
        with self.assertRaises(exceptions_.InvalidStateError):
            thermal_state(FIG_PARAMS, ThermalPoint(math.inf))

    def test_delta_parity(self):
        t = ThermalPoint(1.5)
        plus = thermal_state(params(delta=0.3, b=-0.2), t)
        minus = thermal_state(params(delta=-0.3, b=-0.2), t)
        assert_array_equal(plus.diagonal, minus.diagonal)
        self.assertEqual(plus.a14, -minus.a14)
        self.assertEqual(plus.a23, -minus.a23)

    def test_b_swap(self):
        t = ThermalPoint(1.5)
        s = thermal_state(params(b=0.7), t)
        m = thermal_state(params(b=-0.7), t)
        assert_allclose([m.d1, m.d2, m.d3, m.d4], [s.d1, s.d3, s.d2, s.d4], atol=1e-12)
        assert_allclose([m.a14, m.a23], [s.a14, s.a23], atol=1e-12)


class GroundStateTests(TestCase):
    def test_pair_ground(self):
        p = params(b=0.1)
        ground = ground_state(p)
        sp = spectrum(p)
        vec = sp.eigenvector(2)
        assert_allclose(ground.to_array(), np.outer(vec, vec), atol=1e-15)
        cold = thermal_state(p, ThermalPoint(1e4))
        self.assertLess(np.abs(ground.to_array() - cold.to_array()).max(), 1e-8)
        self.assertAlmostEqual(purity(ground), 1)

    def test_flip_ground(self):
        ground = ground_state(params(B=0, b=1))
        self.assertEqual(ground.d1, 0)
        self.assertEqual(ground.d4, 0)
        self.assertEqual(ground.a14, 0)
        self.assertAlmostEqual(ground.d2 + ground.d3, 1)

    def test_uncoupled(self):
        ground = ground_state(params(delta=0, b=0.2))
        assert_array_equal(ground.diagonal, [0, 0, 0, 1])
        self.assertEqual(ground.a14, 0)

    def test_degenerate_mixture(self):
        ground = ground_state(params(omega=0, delta=0, B=0.5, b=0.5))
        assert_array_equal(ground.diagonal, [0, 0.5, 0, 0.5])

    def test_gibbs_routing(self):
        self.assertEqual(gibbs_state(FIG_PARAMS, ThermalPoint(math.inf)),
                         ground_state(FIG_PARAMS))
        self.assertEqual(gibbs_state(FIG_PARAMS, ThermalPoint(2)),
                         thermal_state(FIG_PARAMS, ThermalPoint(2)))


if __name__ == '__main__':
    main()
