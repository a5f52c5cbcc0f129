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

"""Two gravitational cats in an inhomogeneous magnetic field.

In the computational basis |00>, |01>, |10>, |11> the Hamiltonian is

    [[ B+w,   0,   0,   -D ],
     [   0,  -b,  -D,    0 ],
     [   0,  -D,   b,    0 ],
     [  -D,   0,   0, -B-w ]]

with w the energy gap, D the gravitational coupling, B the uniform
field and b its inhomogeneity. All quantities are dimensionless and
k_B = 1.

"""

import logging
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.special import logsumexp

from . import exceptions_
from .linalg import DenseHermitian4, dense_eigh
from .xstate import XState, from_dense


log = logging.getLogger(__name__)

# Levels closer than this count as degenerate in the ground state
DEGENERACY_TOL = 1e-12


@dataclass(frozen=True)
class ModelParams():
    """Parameters of the two-gravcat Hamiltonian.

    Negative ``omega_gap`` is accepted: only the combination B + omega
    enters the Hamiltonian.

    """
    omega_gap: float
    delta: float
    field_b_uniform: float
    field_b_inhomo: float

    def __post_init__(self):
        for name in ('omega_gap', 'delta', 'field_b_uniform', 'field_b_inhomo'):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                msg = "Model parameter {} must be finite, got {}".format(name, value)
                raise exceptions_.InvalidStateError(msg)
            object.__setattr__(self, name, value)

    @property
    def zeeman(self) -> float:
        """B + omega, the diagonal of the {|00>, |11>} block."""
        return self.field_b_uniform + self.omega_gap


class ThermalPoint():
    """Inverse temperature beta and temperature T = 1 / beta.

    T = 0 is stored as ``beta = math.inf``.

    """
    def __init__(self, beta: float):
        beta = float(beta)
        if math.isnan(beta) or beta < 0:
            raise exceptions_.InvalidStateError(
                "Inverse temperature must be >= 0, got {}".format(beta))
        self.beta = beta

    @classmethod
    def from_temperature(cls, temperature: float):
        temperature = float(temperature)
        if math.isnan(temperature) or temperature < 0:
            raise exceptions_.InvalidStateError(
                "Temperature must be >= 0, got {}".format(temperature))
        if temperature == 0:
            return cls(math.inf)
        return cls(1 / temperature)

    @property
    def temperature(self) -> float:
        if math.isinf(self.beta):
            return 0.
        if self.beta == 0:
            return math.inf
        return 1 / self.beta

    @property
    def is_ground(self) -> bool:
        return math.isinf(self.beta)

    def __repr__(self):
        return "ThermalPoint(beta={!r}, T={!r})".format(self.beta, self.temperature)


class Spectrum(NamedTuple):
    """Eigenvalues eps1..eps4 and mixing angles theta1..theta4.

    eps1,2 = -/+ sqrt(b^2 + D^2) belong to the {|01>, |10>} block with
    eigenvectors cos(theta)|01> + sin(theta)|10>; eps3,4 = -/+ sqrt((B+w)^2 + D^2)
    belong to {|00>, |11>} with cos(theta)|00> + sin(theta)|11>.

    """
    eps1: float
    eps2: float
    eps3: float
    eps4: float
    theta1: float
    theta2: float
    theta3: float
    theta4: float

    @property
    def energies(self) -> np.ndarray:
        return np.array([self.eps1, self.eps2, self.eps3, self.eps4])

    @property
    def angles(self) -> np.ndarray:
        return np.array([self.theta1, self.theta2, self.theta3, self.theta4])

    def eigenvector(self, idx: int) -> np.ndarray:
        """Eigenvector of level *idx* (0-based) in the computational basis."""
        theta = self.angles[idx]
        vec = np.zeros(4)
        if idx < 2:
            vec[1], vec[2] = math.cos(theta), math.sin(theta)
        else:
            vec[0], vec[3] = math.cos(theta), math.sin(theta)
        return vec


class BoltzmannWeights(NamedTuple):
    w1: float
    w2: float
    w3: float
    w4: float

    @property
    def array(self) -> np.ndarray:
        return np.array(self)


def hamiltonian(p: ModelParams) -> DenseHermitian4:
    k, b, d = p.zeeman, p.field_b_inhomo, p.delta
    return DenseHermitian4([
        [k, 0, 0, -d],
        [0, -b, -d, 0],
        [0, -d, b, 0],
        [-d, 0, 0, -k],
    ])


def _mixing_angle(x, y):
    """Angle of the direction (x, y), folded into [-pi/2, pi/2]."""
    theta = math.atan2(y, x)
    if theta > math.pi / 2:
        theta -= math.pi
    elif theta < -math.pi / 2:
        theta += math.pi
    return theta


def _block_angles(diag, delta):
    """Mixing angles for the block [[diag, -delta], [-delta, -diag]].

    Returns the angles of the lower and upper eigenvector. They equal
    arctan(delta / (-diag +/- r)), r = sqrt(diag^2 + delta^2), but are
    evaluated from whichever of two parallel eigenvectors avoids
    cancellation. At delta = 0 they take their delta -> 0+ limits.

    Both angles are odd in delta, bit for bit.

    """
    sign = -1. if delta < 0 else 1.
    delta = abs(delta)
    r = math.hypot(diag, delta)
    if r == 0:
        return math.pi / 4, -math.pi / 4
    if diag <= 0:
        lower = _mixing_angle(r - diag, delta)
    else:
        lower = _mixing_angle(delta, diag + r)
    if diag >= 0:
        upper = _mixing_angle(-diag - r, delta)
    else:
        upper = _mixing_angle(delta, diag - r)
    return sign * lower, sign * upper


def spectrum(p: ModelParams) -> Spectrum:
    """Analytic eigenvalues and mixing angles of :func:`hamiltonian`."""
    r_flip = math.hypot(p.field_b_inhomo, p.delta)
    r_pair = math.hypot(p.zeeman, p.delta)
    # The {|01>, |10>} block has diagonal (-b, b)
    theta1, theta2 = _block_angles(-p.field_b_inhomo, p.delta)
    theta3, theta4 = _block_angles(p.zeeman, p.delta)
    return Spectrum(-r_flip, r_flip, -r_pair, r_pair,
                    theta1, theta2, theta3, theta4)


def boltzmann_weights(sp: Spectrum, t: ThermalPoint) -> BoltzmannWeights:
    """Normalized weights exp(-beta eps_i) / Z.

    Exponents are shifted by the lowest level so nothing overflows. At
    T = 0 the weight is shared equally among the degenerate ground levels.

    """
    energies = sp.energies
    shifted = energies - energies.min()
    if t.is_ground:
        factors = (shifted <= DEGENERACY_TOL).astype(float)
    else:
        factors = np.exp(-t.beta * shifted)
    return BoltzmannWeights(*(factors / factors.sum()))


def partition_function(p: ModelParams, t: ThermalPoint) -> float:
    """Z = 2 cosh(beta sqrt(b^2 + D^2)) + 2 cosh(beta sqrt((B+w)^2 + D^2)).

    Overflows to ``inf`` for very large beta; see
    :func:`log_partition_function`.

    """
    if t.is_ground:
        return math.inf
    r_flip = math.hypot(p.field_b_inhomo, p.delta)
    r_pair = math.hypot(p.zeeman, p.delta)
    with np.errstate(over='ignore'):
        z = 2 * np.cosh(t.beta * r_flip) + 2 * np.cosh(t.beta * r_pair)
    return float(z)


def log_partition_function(p: ModelParams, t: ThermalPoint) -> float:
    """log Z with the largest exponent factored out."""
    if t.is_ground:
        return math.inf
    return float(logsumexp(-t.beta * spectrum(p).energies))


def partition_function_from_spectrum(p: ModelParams, t: ThermalPoint) -> float:
    """Z as the sum of exp(-beta eps_i) over the analytic spectrum."""
    with np.errstate(over='ignore'):
        return float(np.sum(np.exp(-t.beta * spectrum(p).energies)))


def partition_function_definitional(p: ModelParams, t: ThermalPoint) -> float:
    """Z = Tr exp(-beta H) from the numerical eigenvalues of H."""
    eig = dense_eigh(hamiltonian(p))
    with np.errstate(over='ignore'):
        return float(np.sum(np.exp(-t.beta * eig.eigenvalues)))


def _cos_sin(angles):
    cos, sin = np.cos(angles), np.sin(angles)
    # Quarter turns are exact, so uncoupled levels stay basis states
    quarter = np.abs(angles) == math.pi / 2
    cos[quarter] = 0.
    sin[quarter] = np.sign(angles[quarter])
    return cos, sin


def _state_from_weights(sp: Spectrum, w: BoltzmannWeights) -> XState:
    cos, sin = _cos_sin(sp.angles)
    cos2, sin2, cross = cos**2, sin**2, cos * sin
    return XState(
        d1=w.w3 * cos2[2] + w.w4 * cos2[3],
        d2=w.w1 * cos2[0] + w.w2 * cos2[1],
        d3=w.w1 * sin2[0] + w.w2 * sin2[1],
        d4=w.w3 * sin2[2] + w.w4 * sin2[3],
        a14=w.w3 * cross[2] + w.w4 * cross[3],
        a23=w.w1 * cross[0] + w.w2 * cross[1],
    )


def thermal_state(p: ModelParams, t: ThermalPoint) -> XState:
    """Gibbs state exp(-beta H) / Z from the analytic eigensystem."""
    if t.is_ground:
        msg = "thermal_state needs T > 0; use ground_state for T = 0"
        raise exceptions_.InvalidStateError(msg)
    sp = spectrum(p)
    return _state_from_weights(sp, boltzmann_weights(sp, t))


def thermal_state_definitional(p: ModelParams, t: ThermalPoint) -> XState:
    """Gibbs state as V diag(exp(-beta lambda)) V^dagger / Z via :func:`dense_eigh`.

    Independent of :func:`spectrum`; used to check :func:`thermal_state`.

    """
    if t.is_ground:
        msg = "thermal_state_definitional needs T > 0"
        raise exceptions_.InvalidStateError(msg)
    eig = dense_eigh(hamiltonian(p))
    factors = np.exp(-t.beta * (eig.eigenvalues - eig.eigenvalues[0]))
    rho = DenseHermitian4.from_eigensystem(factors / factors.sum(), eig.eigenvectors)
    return from_dense(rho)


def ground_state(p: ModelParams) -> XState:
    """T -> 0 limit of the Gibbs state.

    Pure when the lowest level is non-degenerate, otherwise the equal
    mixture of the degenerate ground projectors.

    """
    sp = spectrum(p)
    weights = boltzmann_weights(sp, ThermalPoint(math.inf))
    n_ground = int(np.count_nonzero(weights.array))
    if n_ground > 1:
        log.debug("Ground level of %s is %d-fold degenerate", p, n_ground)
    return _state_from_weights(sp, weights)


def gibbs_state(p: ModelParams, t: ThermalPoint) -> XState:
    """Thermal state for any T >= 0."""
    if t.is_ground:
        return ground_state(p)
    return thermal_state(p, t)
