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

"""Dense 4x4 Hermitian matrices and a complex Jacobi eigensolver.

These back the definitional cross-checks: anything computed in closed
form for X states elsewhere in the package can be recomputed here from
the full matrix.

"""

import logging
from typing import Callable, NamedTuple

import numpy as np

from . import exceptions_


log = logging.getLogger(__name__)

# Convergence threshold on the off-diagonal Frobenius norm
EIGH_TOL = 1e-14
MAX_SWEEPS = 100
# Eigenvalues in [-PSD_TOL, 0) are treated as rounding noise
PSD_TOL = 1e-12
# Square roots zero eigenvalues below RANK_TOL times the trace. This sits
# a few dozen ulps above rounding noise; a zeroed eigenvalue moves any
# entry of the root by at most sqrt(RANK_TOL) = 1e-7 for unit trace.
RANK_TOL = 1e-14

# Fixed cyclic pivot order
PIVOTS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


class DenseHermitian4():
    """A 4x4 complex Hermitian matrix.

    Only the diagonal and the upper triangle of *matrix* are read; the
    lower triangle is filled in with their complex conjugates so that
    entry (i, j) equals conj(entry (j, i)) exactly.

    """
    def __init__(self, matrix):
        arr = np.asarray(matrix, dtype=complex)
        if arr.shape != (4, 4):
            msg = "Expected a 4x4 matrix, got shape {}".format(arr.shape)
            raise exceptions_.InvalidStateError(msg)
        if not np.all(np.isfinite(arr)):
            raise exceptions_.InvalidStateError("Matrix has non-finite entries.")
        upper = np.triu(arr, k=1)
        herm = upper + upper.conj().T + np.diag(arr.diagonal().real)
        herm.flags.writeable = False
        self._matrix = herm

    @property
    def matrix(self) -> np.ndarray:
        """Read-only numpy view of the full matrix."""
        return self._matrix

    def __getitem__(self, idx):
        return self._matrix[idx]

    def __repr__(self):
        return "DenseHermitian4({})".format(np.array2string(self._matrix, precision=4))

    def trace(self) -> float:
        return float(self._matrix.trace().real)

    def shifted(self, c: float) -> "DenseHermitian4":
        """Return H + c*I."""
        return DenseHermitian4(self._matrix + c * np.eye(4))

    @classmethod
    def from_eigensystem(cls, values, vectors):
        """Build V diag(values) V^dagger."""
        vectors = np.asarray(vectors, dtype=complex)
        return cls((vectors * np.asarray(values)) @ vectors.conj().T)


class EighResult(NamedTuple):
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    sweeps: int
    residual: float


def _off_norm(a):
    return float(np.linalg.norm(a - np.diag(a.diagonal())))


def _jacobi_rotation(a, p, q):
    """Unitary that zeroes entries (p, q) and (q, p) of Hermitian *a*.

    A diagonal phase first makes a[p, q] real and positive, then a
    real plane rotation removes it.

    """
    apq = a[p, q]
    modulus = abs(apq)
    rot = np.eye(4, dtype=complex)
    theta = 0.5 * np.arctan2(2 * modulus, a[q, q].real - a[p, p].real)
    c, s = np.cos(theta), np.sin(theta)
    phase = np.conj(apq) / modulus
    rot[p, p] = c
    rot[p, q] = s
    rot[q, p] = -s * phase
    rot[q, q] = c * phase
    return rot


def dense_eigh(h: DenseHermitian4, tol: float=EIGH_TOL,
               max_sweeps: int=MAX_SWEEPS) -> EighResult:
    """Diagonalize a 4x4 Hermitian matrix with cyclic complex Jacobi sweeps.

    Parameters
    ==========
    h
      The matrix to diagonalize.
    tol
      Iteration stops once the off-diagonal Frobenius norm falls below
      ``tol * max(1, |h|_F)``.
    max_sweeps
      Cap on the number of full sweeps over the six pivots.

    Returns
    =======
    result
      Eigenvalues in ascending order and the matching orthonormal
      eigenvectors as columns. The largest-magnitude component of each
      eigenvector is real and positive (first one wins on ties).

    Raises
    ======
    ConvergenceError
      If the off-diagonal norm is still above threshold after
      *max_sweeps* sweeps.

    """
    a = np.array(h.matrix, dtype=complex)
    vectors = np.eye(4, dtype=complex)
    threshold = tol * max(1., float(np.linalg.norm(a)))
    sweeps = 0
    residual = _off_norm(a)
    while residual >= threshold:
        if sweeps == max_sweeps:
            msg = "Jacobi did not converge after {} sweeps (residual {:.3e})"
            raise exceptions_.ConvergenceError(msg.format(sweeps, residual),
                                               residual=residual)
        for p, q in PIVOTS:
            if a[p, q] == 0:
                continue
            rot = _jacobi_rotation(a, p, q)
            a = rot.conj().T @ a @ rot
            a[p, q] = a[q, p] = 0.
            vectors = vectors @ rot
        sweeps += 1
        residual = _off_norm(a)
    log.debug("Jacobi converged in %d sweeps, residual %.3e", sweeps, residual)
    eigenvalues = a.diagonal().real
    order = np.argsort(eigenvalues, kind='stable')
    eigenvalues = eigenvalues[order]
    vectors = vectors[:, order]
    # Fix the phase of each eigenvector
    for col in range(4):
        k = int(np.argmax(np.abs(vectors[:, col])))
        pivot = vectors[k, col]
        vectors[:, col] *= np.conj(pivot) / abs(pivot)
        vectors[k, col] = vectors[k, col].real
    return EighResult(eigenvalues, vectors, sweeps, residual)


def dense_function(h: DenseHermitian4,
                   func: Callable[[np.ndarray], np.ndarray]) -> DenseHermitian4:
    """Apply a real function to the spectrum of *h*."""
    eig = dense_eigh(h)
    return DenseHermitian4.from_eigensystem(func(eig.eigenvalues), eig.eigenvectors)


def _clipped_sqrt(values):
    worst = values.min()
    if worst < -PSD_TOL:
        msg = "Matrix is not positive semi-definite (eigenvalue {:.3e})".format(worst)
        raise exceptions_.NotPositiveError(msg)
    if worst < 0:
        log.warning("Clipping eigenvalue %.3e to zero.", worst)
    floor = RANK_TOL * max(values.sum(), 0.)
    return np.sqrt(np.where(values > floor, values, 0.))


def dense_sqrt(h: DenseHermitian4) -> DenseHermitian4:
    """Principal square root of a positive semi-definite matrix."""
    return dense_function(h, _clipped_sqrt)
