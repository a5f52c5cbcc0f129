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

"""Exact algebra for two-qubit X states.

An X state has non-zero entries only on the diagonal and the
anti-diagonal of its 4x4 matrix in the computational basis |00>, |01>,
|10>, |11>. It splits into two 2x2 blocks, {|00>, |11>} and {|01>,
|10>}, which is what makes square roots and Fano-Bloch components
available in closed form.

"""

import logging
import math
from dataclasses import dataclass, field, replace
from typing import List, NamedTuple, Sequence

import numpy as np

from . import exceptions_
from .linalg import RANK_TOL, DenseHermitian4


log = logging.getLogger(__name__)

TRACE_TOL = 1e-12
PSD_TOL = 1e-12
# Square roots refuse blocks that are negative beyond this
SQRT_REJECT_TOL = 1e-10
# Largest allowed modulus outside the X pattern
STRUCTURE_TOL = 1e-12

# (row, column) positions that must vanish for an X-shaped matrix
OFF_X_ENTRIES = ((0, 1), (0, 2), (1, 0), (1, 3), (2, 0), (2, 3), (3, 1), (3, 2))


def _real(value, name):
    value = float(value)
    if not math.isfinite(value):
        msg = "Entry {} must be finite, got {}".format(name, value)
        raise exceptions_.InvalidStateError(msg)
    return value


def _complex(value, name):
    value = complex(value)
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        msg = "Entry {} must be finite, got {}".format(name, value)
        raise exceptions_.InvalidStateError(msg)
    return value


@dataclass(frozen=True)
class XMatrix():
    """Hermitian 4x4 matrix with X structure.

    ``d1..d4`` are the diagonal entries m11..m44, ``a14`` and ``a23``
    the upper anti-diagonal entries m14 and m23. The lower ones are
    their complex conjugates.

    """
    d1: float
    d2: float
    d3: float
    d4: float
    a14: complex = 0j
    a23: complex = 0j

    def __post_init__(self):
        for name in ('d1', 'd2', 'd3', 'd4'):
            object.__setattr__(self, name, _real(getattr(self, name), name))
        for name in ('a14', 'a23'):
            object.__setattr__(self, name, _complex(getattr(self, name), name))

    @property
    def diagonal(self) -> np.ndarray:
        return np.array([self.d1, self.d2, self.d3, self.d4])

    def trace(self) -> float:
        return self.d1 + self.d2 + self.d3 + self.d4

    def to_array(self) -> np.ndarray:
        arr = np.diag(self.diagonal).astype(complex)
        arr[0, 3] = self.a14
        arr[3, 0] = self.a14.conjugate()
        arr[1, 2] = self.a23
        arr[2, 1] = self.a23.conjugate()
        return arr

    def squared(self) -> np.ndarray:
        """Dense matrix product of this matrix with itself."""
        arr = self.to_array()
        return arr @ arr

    def is_phase_normalized(self) -> bool:
        return (self.a14.imag == 0 and self.a14.real >= 0 and
                self.a23.imag == 0 and self.a23.real >= 0)


@dataclass(frozen=True)
class XState(XMatrix):
    """Two-qubit X-shaped density matrix (unit trace, positive).

    The invariants are not enforced on construction; use
    :func:`validate` to check them.

    """
    @classmethod
    def maximally_mixed(cls):
        return cls(0.25, 0.25, 0.25, 0.25)

    @classmethod
    def bell_phi_plus(cls):
        return cls(0.5, 0., 0., 0.5, a14=0.5)

    @classmethod
    def from_pure(cls, amplitudes: Sequence[complex]):
        """Projector onto a pure state supported on {|00>, |11>} or {|01>, |10>}.

        The amplitude vector is normalized first.

        """
        psi = np.asarray(amplitudes, dtype=complex)
        norm = np.linalg.norm(psi)
        if psi.shape != (4,) or norm == 0:
            raise exceptions_.InvalidStateError("Need four amplitudes, not all zero.")
        psi = psi / norm
        outer = np.outer(psi, psi.conj())
        return from_dense(DenseHermitian4(outer), cls=cls)


@dataclass(frozen=True)
class XRoot(XMatrix):
    """Square root of an :class:`XState`; its trace is not one."""
    pass


class FanoBloch(NamedTuple):
    """Non-vanishing Fano-Bloch components R_{mu nu} = Tr(M sigma_mu x sigma_nu)."""
    r00: float
    r03: float
    r30: float
    r11: float
    r22: float
    r33: float


class Violation(NamedTuple):
    name: str
    message: str
    magnitude: float


@dataclass
class ValidationReport():
    violations: List[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return len(self.violations) == 0

    def __str__(self):
        if self.ok:
            return "ok"
        return "; ".join(v.message for v in self.violations)


def validate(s: XState) -> ValidationReport:
    """Check the density-matrix invariants of *s* and report violations.

    Never raises; every broken invariant ends up in the report along
    with the size of the violation.

    """
    report = ValidationReport()
    trace = s.trace()
    if abs(trace - 1) > TRACE_TOL:
        msg = "unit trace: {:.6g} != 1".format(trace)
        report.violations.append(Violation('trace', msg, abs(trace - 1)))
    for idx, d in enumerate(s.diagonal, start=1):
        if d < -PSD_TOL:
            msg = "diagonal d{}: {:.6g} < 0".format(idx, d)
            report.violations.append(Violation('d{}'.format(idx), msg, -d))
    blocks = (('a14', s.d1, s.d4, s.a14), ('a23', s.d2, s.d3, s.a23))
    for name, x, y, z in blocks:
        product, offdiag = x * y, abs(z)**2
        if product < offdiag - PSD_TOL:
            msg = "block PSD: {:.6g} < {:.6g}".format(product, offdiag)
            report.violations.append(Violation(name, msg, offdiag - product))
    return report


def remove_phases(s: XState) -> XState:
    """Replace the anti-diagonal entries by their moduli.

    This is a local unitary rotation, so every correlation measure is
    unchanged.

    """
    return replace(s, a14=complex(abs(s.a14)), a23=complex(abs(s.a23)))


def _block_sqrt(x, y, z):
    """Square root of the PSD block [[x, z], [conj(z), y]]."""
    trace = x + y
    det = x * y - abs(z)**2
    if det < -SQRT_REJECT_TOL or trace < -SQRT_REJECT_TOL:
        msg = ("Block [[{:.6g}, {:.6g}], [., {:.6g}]] is not positive "
               "(trace {:.3e}, det {:.3e})").format(x, z, y, trace, det)
        raise exceptions_.NotPositiveError(msg)
    # A determinant at rounding level means the block has rank one
    sdet = math.sqrt(det) if det > RANK_TOL * trace else 0.
    if trace <= RANK_TOL:
        return 0., 0., 0j
    t = math.sqrt(trace + 2 * sdet)
    return (x + sdet) / t, (y + sdet) / t, z / t


def sqrt_xstate(s: XState) -> XRoot:
    """Square root of an X state computed one 2x2 block at a time.

    For a PSD block M, sqrt(M) = (M + sqrt(det M) I) / sqrt(tr M + 2 sqrt(det M)).

    """
    r1, r4, r14 = _block_sqrt(s.d1, s.d4, s.a14)
    r2, r3, r23 = _block_sqrt(s.d2, s.d3, s.a23)
    return XRoot(r1, r2, r3, r4, a14=r14, a23=r23)


def fano_bloch(m: XMatrix) -> FanoBloch:
    """Fano-Bloch components of an X-shaped matrix.

    Callers should pass phase-normalized input (see
    :func:`remove_phases`); with complex anti-diagonals only the real
    parts enter R11 and R22.

    """
    m11, m22, m33, m44 = m.diagonal
    m14, m23 = m.a14.real, m.a23.real
    return FanoBloch(
        r00=m11 + m22 + m33 + m44,
        r03=m11 - m22 + m33 - m44,
        r30=m11 + m22 - m33 - m44,
        r11=2 * (m23 + m14),
        r22=2 * (m23 - m14),
        r33=m11 - m22 - m33 + m44,
    )


def purity(s: XState) -> float:
    """Tr(rho^2)."""
    return float(np.sum(s.diagonal**2) + 2 * abs(s.a14)**2 + 2 * abs(s.a23)**2)


def to_dense(s: XMatrix) -> DenseHermitian4:
    return DenseHermitian4(s.to_array())


def from_dense(h: DenseHermitian4, cls=XState) -> XMatrix:
    """Read an X-shaped matrix out of a dense one.

    Raises
    ======
    XStructureError
      If any entry outside the X pattern is at least ``STRUCTURE_TOL``
      in modulus. The largest offender is reported.

    """
    mat = h.matrix
    magnitudes = [abs(mat[idx]) for idx in OFF_X_ENTRIES]
    worst = int(np.argmax(magnitudes))
    if magnitudes[worst] >= STRUCTURE_TOL:
        index = OFF_X_ENTRIES[worst]
        msg = "Matrix is not X-shaped: entry {} has modulus {:.3e}".format(
            index, magnitudes[worst])
        raise exceptions_.XStructureError(msg, index=index, magnitude=magnitudes[worst])
    diag = mat.diagonal().real
    return cls(diag[0], diag[1], diag[2], diag[3], a14=mat[0, 3], a23=mat[1, 2])
