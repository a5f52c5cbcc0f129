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

import matplotlib.pyplot as plt


AXIS_LABELS = {
    'omega': r'$\omega$',
    'delta': r'$\Delta$',
    'T': r'$T$',
    'lqu_exact': 'LQU',
    'lqu_paper': 'LQU (paper form)',
    'concurrence': 'Concurrence',
}


def axis_label(key):
    return AXIS_LABELS.get(key, key)


def remove_extra_spines(ax):
    """Hide the top and right frame lines of *ax*."""
    for side in ('top', 'right'):
        ax.spines[side].set_visible(False)
    ax.tick_params(top=False, right=False)
    return ax


def new_axes(height=4, aspect=1.25):
    """Fresh transparent axes, *height* in inches, width = aspect * height."""
    fig, ax = plt.subplots(figsize=(aspect * height, height))
    fig.patch.set_alpha(0)
    return remove_extra_spines(ax)
