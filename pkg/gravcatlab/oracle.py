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

"""Brute-force evaluation of skew information and its minimum.

Nothing here uses the X-state closed forms: square roots come from the
dense eigensolver and traces from explicit 4x4 products. The local
observables are K = n.sigma on the first qubit, with n a unit vector.

"""

import logging
import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np
from scipy.optimize import minimize

from . import exceptions_
from .linalg import dense_sqrt
from .xstate import XState, to_dense


log = logging.getLogger(__name__)

UNIT_TOL = 1e-12
# Negative skew information or variance above this size is an error
NEG_TOL = 1e-12

PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)
IDENTITY2 = np.eye(2, dtype=complex)
# sigma_l x 1 for l = x, y, z
LOCAL_PAULI = tuple(np.kron(sigma, IDENTITY2) for sigma in PAULI)


@dataclass(frozen=True)
class BlochVector():
    nx: float
    ny: float
    nz: float

    def __post_init__(self):
        norm2 = self.nx**2 + self.ny**2 + self.nz**2
        if abs(norm2 - 1) > UNIT_TOL:
            msg = "Bloch vector must have unit length, |n|^2 = {:.15g}".format(norm2)
            raise exceptions_.InvalidStateError(msg)

    @classmethod
    def normalized(cls, x, y, z):
        norm = math.sqrt(x**2 + y**2 + z**2)
        return cls(x / norm, y / norm, z / norm)

    @classmethod
    def from_angles(cls, polar, azimuth):
        return cls(math.sin(polar) * math.cos(azimuth),
                   math.sin(polar) * math.sin(azimuth),
                   math.cos(polar))

    @property
    def array(self) -> np.ndarray:
        return np.array([self.nx, self.ny, self.nz])

    def angles(self):
        """(polar, azimuth) in radians."""
        return (math.acos(max(-1., min(1., self.nz))),
                math.atan2(self.ny, self.nx))

    def local_observable(self) -> np.ndarray:
        """(n.sigma) x 1 as a dense 4x4 matrix."""
        return (self.nx * LOCAL_PAULI[0] + self.ny * LOCAL_PAULI[1] +
                self.nz * LOCAL_PAULI[2])


@dataclass(frozen=True)
class MinimizeConfig():
    """Settings for :func:`minimize_skew`.

    coarse_points
      Number of Fibonacci lattice points on the sphere.
    refine_iters
      Iteration cap for the Nelder-Mead refinement.
    refine_tol
      Absolute tolerance on both the angles and the skew information.

    """
    coarse_points: int = 512
    refine_iters: int = 400
    refine_tol: float = 1e-9

    def __post_init__(self):
        if self.coarse_points < 128:
            raise exceptions_.UsageError("coarse_points must be >= 128")
        if self.refine_iters < 50:
            raise exceptions_.UsageError("refine_iters must be >= 50")
        if not self.refine_tol > 0:
            raise exceptions_.UsageError("refine_tol must be positive")


class SkewResult(NamedTuple):
    min_value: float
    argmin: BlochVector
    evaluations: int


class WMatrix(NamedTuple):
    matrix: np.ndarray
    eigenvalues: np.ndarray


def _clip_rounding(value, what):
    value = float(value)
    if value < -NEG_TOL:
        msg = "{} is negative beyond rounding: {:.3e}".format(what, value)
        raise exceptions_.NotPositiveError(msg)
    return max(value, 0.)


def fibonacci_lattice(n: int) -> np.ndarray:
    """*n* nearly uniform unit vectors, shape (n, 3)."""
    idx = np.arange(n) + 0.5
    z = 1 - 2 * idx / n
    radius = np.sqrt(1 - z**2)
    azimuth = math.pi * (3 - math.sqrt(5)) * np.arange(n)
    return np.column_stack([radius * np.cos(azimuth), radius * np.sin(azimuth), z])


class SkewLandscape():
    """Skew information of one state as a function of the local observable.

    The dense square root is computed once and reused for every
    direction.

    """
    def __init__(self, s: XState):
        self.state = s
        self.rho = to_dense(s).matrix
        self.root = dense_sqrt(to_dense(s)).matrix

    def skew(self, n: np.ndarray) -> float:
        """-1/2 Tr([sqrt(rho), K x 1]^2) for the direction *n* (3-array)."""
        k = n[0] * LOCAL_PAULI[0] + n[1] * LOCAL_PAULI[1] + n[2] * LOCAL_PAULI[2]
        comm = self.root @ k - k @ self.root
        value = -0.5 * np.trace(comm @ comm).real
        return _clip_rounding(value, "Skew information")

    def variance(self, n: np.ndarray) -> float:
        k = n[0] * LOCAL_PAULI[0] + n[1] * LOCAL_PAULI[1] + n[2] * LOCAL_PAULI[2]
        mean = np.trace(self.rho @ k).real
        value = np.trace(self.rho @ k @ k).real - mean**2
        return _clip_rounding(value, "Variance")

    def skew_at_angles(self, angles) -> float:
        polar, azimuth = angles
        n = np.array([math.sin(polar) * math.cos(azimuth),
                      math.sin(polar) * math.sin(azimuth),
                      math.cos(polar)])
        return self.skew(n)


def skew_information(s: XState, n: BlochVector) -> float:
    """Wigner-Yanase skew information of *s* for K = n.sigma on qubit A."""
    return SkewLandscape(s).skew(n.array)


def variance(s: XState, n: BlochVector) -> float:
    """Tr(rho K^2) - Tr(rho K)^2 for K = n.sigma on qubit A."""
    return SkewLandscape(s).variance(n.array)


def minimize_skew(s: XState, cfg: Optional[MinimizeConfig]=None) -> SkewResult:
    """Minimum skew information over all local observables n.sigma.

    The sphere is scanned on a Fibonacci lattice; the best point (lowest
    index on ties) seeds a Nelder-Mead search on the polar and azimuthal
    angles with an initial simplex the size of the lattice spacing. The
    smaller of the two minima is returned, so the result never exceeds
    the lattice minimum.

    """
    if cfg is None:
        cfg = MinimizeConfig()
    landscape = SkewLandscape(s)
    points = fibonacci_lattice(cfg.coarse_points)
    values = np.array([landscape.skew(p) for p in points])
    best = int(np.argmin(values))
    seed = BlochVector(*points[best])
    polar, azimuth = seed.angles()
    step = math.sqrt(4 * math.pi / cfg.coarse_points)
    simplex = np.array([[polar, azimuth],
                        [polar + step, azimuth],
                        [polar, azimuth + step]])
    res = minimize(landscape.skew_at_angles, x0=simplex[0], method='Nelder-Mead',
                   options={'initial_simplex': simplex,
                            'xatol': cfg.refine_tol,
                            'fatol': cfg.refine_tol,
                            'maxiter': cfg.refine_iters})
    evaluations = cfg.coarse_points + int(res.nfev)
    log.debug("Skew minimization: lattice %.3e, refined %.3e, %d evaluations",
              values[best], res.fun, evaluations)
    if res.fun < values[best]:
        return SkewResult(float(res.fun), BlochVector.from_angles(*res.x), evaluations)
    return SkewResult(float(values[best]), seed, evaluations)


def w_numeric(s: XState) -> WMatrix:
    """W_lk = Tr(sqrt(rho) (s_l x 1) sqrt(rho) (s_k x 1)) from dense products."""
    root = dense_sqrt(to_dense(s)).matrix
    w = np.empty((3, 3))
    for row, sigma_l in enumerate(LOCAL_PAULI):
        for col, sigma_k in enumerate(LOCAL_PAULI):
            w[row, col] = np.trace(root @ sigma_l @ root @ sigma_k).real
    return WMatrix(w, np.linalg.eigvalsh(w))


def lqu_numeric(s: XState) -> float:
    """1 - largest eigenvalue of :func:`w_numeric`."""
    return float(1 - w_numeric(s).eigenvalues.max())
