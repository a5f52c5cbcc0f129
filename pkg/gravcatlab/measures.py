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

"""Correlation measures for X states: local quantum uncertainty and
concurrence.

LQU is 1 - max(w1, w3), where w1..w3 are the eigenvalues of the 3x3
matrix W_lk = Tr(sqrt(rho) (s_l x 1) sqrt(rho) (s_k x 1)). For a
phase-normalized X state W is diagonal and its entries follow from the
Fano-Bloch components of sqrt(rho).

Two flavours are provided. ``Mode.EXACT`` evaluates W with the entries
of sqrt(rho), which is the true minimum of the skew information.
``Mode.PAPER`` evaluates the same expressions with the entries of rho
itself, the way the published closed form for the gravcat model is
written. The two agree on pure states only.

"""

import enum
import logging
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import exceptions_
from .linalg import DenseHermitian4, dense_eigh, dense_sqrt
from .xstate import (XRoot, XState, fano_bloch, purity, remove_phases,
                     sqrt_xstate, to_dense)


log = logging.getLogger(__name__)


class Mode(enum.Enum):
    EXACT = 'exact'
    PAPER = 'paper'


class Branch(enum.Enum):
    W1 = 'W1'
    W3 = 'W3'


class WEigenvalues(NamedTuple):
    w1: float
    w2: float
    w3: float


@dataclass(frozen=True)
class LquResult():
    value: float
    w: WEigenvalues
    branch: Branch
    mode: Mode


class MeasureComparison(NamedTuple):
    lqu_exact: float
    lqu_paper: float
    concurrence: float
    purity: float


def w_closed_form(root: XRoot) -> WEigenvalues:
    """Diagonal of W from the Fano-Bloch components of sqrt(rho).

    Parameters
    ==========
    root
      Phase-normalized square root of the state, as returned by
      ``sqrt_xstate(remove_phases(s))``. Its trace R00 is not one.

    Raises
    ======
    NotNormalizedError
      If an anti-diagonal entry of *root* is complex or negative.

    """
    if not root.is_phase_normalized():
        msg = "Square root must have real non-negative off-diagonals, got a14={}, a23={}"
        raise exceptions_.NotNormalizedError(msg.format(root.a14, root.a23))
    r = fano_bloch(root)
    common = r.r00**2 - r.r33**2 + r.r03**2 - r.r30**2
    w1 = (common + r.r11**2 - r.r22**2) / 4
    w2 = (common - r.r11**2 + r.r22**2) / 4
    w3 = (r.r00**2 + r.r33**2 + r.r03**2 + r.r30**2 - r.r11**2 - r.r22**2) / 4
    return WEigenvalues(w1, w2, w3)


def _pick_branch(w: WEigenvalues) -> Branch:
    # Ties go to W3
    return Branch.W1 if w.w1 > w.w3 else Branch.W3


def lqu(s: XState, mode: Mode=Mode.EXACT) -> LquResult:
    """Local quantum uncertainty of *s* with respect to the first qubit.

    Exact mode runs remove_phases -> sqrt_xstate -> w_closed_form and
    returns 1 - max(w1, w3).

    """
    mode = Mode(mode)
    if mode is Mode.PAPER:
        return lqu_paper_mode(s)
    root = sqrt_xstate(remove_phases(s))
    w = w_closed_form(root)
    branch = _pick_branch(w)
    log.debug("Exact LQU branch %s with w=%s", branch.value, w)
    return LquResult(value=1 - max(w.w1, w.w3), w=w, branch=branch, mode=mode)


def lqu_paper_mode(s: XState) -> LquResult:
    """LQU with the published gravcat expressions, evaluated on rho.

    w1 is the printed line. With rho11 = 1 - rho22 - rho33 - rho44 it
    expands to

        w1 = 2 (rho11 rho33 + rho22 rho44 + 2 rho14 rho23)

    which is the square-root formula with rho entries in place of
    sqrt(rho) entries. The printed w3 line is garbled (a stray
    "rho rho44" product), so w3 takes the same substitution on the
    square-root identity

        w3 = 1 - 4 (rho14^2 + rho23^2)

    and w2 is not printed at all. Agrees with exact mode whenever
    sqrt(rho) = rho, i.e. for pure states.

    """
    s = remove_phases(s)
    r22, r33, r44 = s.d2, s.d3, s.d4
    r23, r41 = s.a23.real, s.a14.real
    w1 = -2 * (r33**2 + (r22 + r44 - 1) * r33 - 2 * r23 * r41 - r22 * r44)
    w2 = 2 * (s.d1 * r33 + r22 * r44 - 2 * r41 * r23)
    w3 = 1 - 4 * (r41**2 + r23**2)
    w = WEigenvalues(w1, w2, w3)
    branch = _pick_branch(w)
    return LquResult(value=1 - max(w1, w3), w=w, branch=branch, mode=Mode.PAPER)


def concurrence(s: XState) -> float:
    """Wootters concurrence in its X-state closed form.

    C = 2 max(0, |rho14| - sqrt(rho22 rho33), |rho23| - sqrt(rho11 rho44))

    """
    first = abs(s.a14) - math.sqrt(max(s.d2 * s.d3, 0.))
    second = abs(s.a23) - math.sqrt(max(s.d1 * s.d4, 0.))
    return 2 * max(0., first, second)


# sigma_y x sigma_y
_SPIN_FLIP = np.fliplr(np.diag([-1., 1., 1., -1.]))


def concurrence_definitional(s: XState) -> float:
    """Concurrence from the eigenvalues of sqrt(rho) rho~ sqrt(rho).

    Works from the dense matrix, so it does not rely on X structure
    beyond the conversion.

    """
    rho = to_dense(s).matrix
    root = dense_sqrt(to_dense(s)).matrix
    flipped = _SPIN_FLIP @ rho.conj() @ _SPIN_FLIP
    eig = dense_eigh(DenseHermitian4(root @ flipped @ root))
    lambdas = np.sort(np.sqrt(np.clip(eig.eigenvalues, 0, None)))[::-1]
    return float(max(0., lambdas[0] - lambdas[1:].sum()))


def compare_measures(s: XState) -> MeasureComparison:
    return MeasureComparison(
        lqu_exact=lqu(s).value,
        lqu_paper=lqu_paper_mode(s).value,
        concurrence=concurrence(s),
        purity=purity(s),
    )
