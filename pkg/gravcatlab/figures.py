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

"""Preset sweeps reproducing the published LQU figures.

Figures 1-3 fix omega = Delta = 0.05 and scan T, B or b; figure 4 fixes
B = b = T = 0.5 and scans Delta or omega. The published figures do not
state which curve values were drawn, nor the axis ranges, so the
defaults below are our own choice (``DEFAULT_CURVES`` and the ranges in
``PRESETS``) and can be overridden.

"""

import logging
import os
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.signal import find_peaks

from . import exceptions_
from .gravcat import ModelParams
from .measures import Mode
from .plots import axis_label, new_axes
from .sweep import PARAM_FIELDS, Sweep, SweepSpec


log = logging.getLogger(__name__)

DEFAULT_CURVES = (0.1, 0.5, 1.0, 2.0)
DEFAULT_STEPS = 500

# omega = Delta = 0.05 (figures 1-3) and B = b = T = 0.5 (figure 4); the swept
# and curve quantities override their entry
PRESET_FIXED = ModelParams(omega_gap=0.05, delta=0.05,
                           field_b_uniform=0.5, field_b_inhomo=0.5)


@dataclass(frozen=True)
class FigurePreset():
    name: str
    title: str
    variable: str
    start: float
    stop: float
    curve_variable: str
    fixed: ModelParams
    temperature: float = 0.5


PRESETS: Dict[str, FigurePreset] = {p.name: p for p in (
    FigurePreset('fig1a', 'LQU versus T for various values of B',
                 'T', 0.01, 5., 'B', PRESET_FIXED),
    FigurePreset('fig1b', 'LQU versus T for various values of b',
                 'T', 0.01, 5., 'b', PRESET_FIXED),
    FigurePreset('fig2a', 'LQU versus B for various values of b',
                 'B', -2., 2., 'b', PRESET_FIXED),
    FigurePreset('fig2b', 'LQU versus B for various values of T',
                 'B', -2., 2., 'T', PRESET_FIXED),
    FigurePreset('fig3a', 'LQU versus b for various values of B',
                 'b', -2., 2., 'B', PRESET_FIXED),
    FigurePreset('fig3b', 'LQU versus b for various values of T',
                 'b', -2., 2., 'T', PRESET_FIXED),
    FigurePreset('fig4a', 'LQU versus Delta for various values of omega',
                 'delta', -2., 2., 'omega', PRESET_FIXED),
    FigurePreset('fig4b', 'LQU versus omega for various values of Delta',
                 'omega', 0., 4., 'delta', PRESET_FIXED),
)}


def get_preset(name: str) -> FigurePreset:
    try:
        return PRESETS[name]
    except KeyError:
        msg = "Unknown figure preset '{}'. Choices are {}".format(name, sorted(PRESETS))
        raise exceptions_.FigurePresetError(msg) from None


def figure_preset(name: str, curves: Optional[Sequence[float]]=None,
                  steps: Optional[int]=None, **overrides) -> List[SweepSpec]:
    """Expand a figure preset into one :class:`SweepSpec` per curve.

    Parameters
    ==========
    name
      One of ``fig1a`` .. ``fig4b``.
    curves
      Values of the curve variable, one curve each. Defaults to
      ``DEFAULT_CURVES``.
    steps
      Grid size of every curve (default ``DEFAULT_STEPS``).
    overrides
      Extra :class:`SweepSpec` fields (``stop``, ``with_oracle``, ...).

    """
    preset = get_preset(name)
    if curves is None:
        curves = DEFAULT_CURVES
    if len(curves) < 2:
        msg = "A figure needs at least two curves, got {}".format(len(curves))
        raise exceptions_.FigurePresetError(msg)
    specs = []
    for value in curves:
        value = float(value)
        fixed, temperature = preset.fixed, preset.temperature
        if preset.curve_variable == 'T':
            temperature = value
        else:
            fixed = replace(fixed, **{PARAM_FIELDS[preset.curve_variable]: value})
        spec_kw = dict(variable=preset.variable, start=preset.start,
                       stop=preset.stop, steps=DEFAULT_STEPS if steps is None else steps,
                       fixed=fixed, temperature=temperature,
                       label="{} = {:g}".format(preset.curve_variable, value))
        spec_kw.update(overrides)
        specs.append(SweepSpec(**spec_kw))
    return specs


def curve_filename(spec: SweepSpec, figure_name: str) -> str:
    curve_var = get_preset(figure_name).curve_variable
    value = spec.label.split('=')[-1].strip()
    return "{}_{}_{}.csv".format(figure_name, curve_var, value)


_SCRIPT_TEMPLATE = '''\
# Plot script for {name}: {title}.
# Written by gravcatlab; reads the CSV files stored next to it.
from pathlib import Path

import matplotlib.pyplot as plt
import pandas as pd

HERE = Path(__file__).resolve().parent
CURVES = [
{curves}]
COLUMNS = {columns!r}
STYLES = {{'lqu_exact': '-', 'lqu_paper': '--'}}

fig, ax = plt.subplots(figsize=(6.25, 5))
ax.spines['right'].set_visible(False)
ax.spines['top'].set_visible(False)
for idx, (label, fname) in enumerate(CURVES):
    df = pd.read_csv(HERE / fname)
    for column in COLUMNS:
        ax.plot(df[{variable!r}], df[column], linestyle=STYLES[column],
                color='C{{}}'.format(idx), label='{{}} ({{}})'.format(label, column))
ax.set_xlabel({xlabel!r})
ax.set_ylabel('LQU')
ax.set_title({title!r})
ax.legend()
fig.savefig(HERE / '{name}.pdf')
'''


def emit_plot_script(sweeps: Sequence[Sweep], figure_name: str,
                     csv_names: Sequence[str], destination=None) -> str:
    """Write a matplotlib script that plots LQU for every curve of a figure.

    Parameters
    ==========
    sweeps
      The curves of the figure, in legend order.
    figure_name
      Preset the sweeps belong to.
    csv_names
      File names of the CSV written for each sweep, relative to the
      script.
    destination
      Where to save the script; if ``None`` it is only returned.

    Raises
    ======
    FigureMismatchError
      If a sweep does not scan the preset's variable, or the number
      of CSV names differs from the number of sweeps.

    """
    preset = get_preset(figure_name)
    if len(sweeps) != len(csv_names) or len(sweeps) == 0:
        msg = "Got {} sweeps but {} CSV names".format(len(sweeps), len(csv_names))
        raise exceptions_.FigureMismatchError(msg)
    modes = set()
    for sweep in sweeps:
        if sweep.spec.variable != preset.variable:
            msg = "Sweep over '{}' does not belong to {} (which sweeps '{}')".format(
                sweep.spec.variable, figure_name, preset.variable)
            raise exceptions_.FigureMismatchError(msg)
        modes |= sweep.spec.modes
    columns = [col for mode, col in ((Mode.EXACT, 'lqu_exact'), (Mode.PAPER, 'lqu_paper'))
               if mode in modes]
    curves = "".join("    ({!r}, {!r}),\n".format(sweep.spec.label, os.fspath(fname))
                     for sweep, fname in zip(sweeps, csv_names))
    script = _SCRIPT_TEMPLATE.format(name=figure_name, title=preset.title,
                                     curves=curves, columns=columns,
                                     variable=preset.variable,
                                     xlabel=preset.variable)
    if destination is not None:
        try:
            with open(destination, 'w', encoding='utf-8', newline='\n') as fp:
                fp.write(script)
        except OSError as exc:
            msg = "Could not write plot script to {}: {}".format(destination, exc)
            raise exceptions_.OutputError(msg) from exc
    return script


class Figure():
    """All curves of one preset figure.

    Parameters
    ----------
    name
      Preset name, ``fig1a`` .. ``fig4b``.
    curves : optional
      Curve values overriding ``DEFAULT_CURVES``.
    steps : optional
      Grid size of each curve.
    workers : optional
      Threads per sweep.
    overrides
      Passed on to :func:`figure_preset`.

    """
    def __init__(self, name: str, curves=None, steps=None, workers: int=1, **overrides):
        self.name = name
        self.preset = get_preset(name)
        self.specs = figure_preset(name, curves=curves, steps=steps, **overrides)
        self.sweeps = [Sweep(spec, workers=workers) for spec in self.specs]

    def __repr__(self):
        return "<Figure {}: {} curves>".format(self.name, len(self.sweeps))

    def plot_curves(self, ax=None, column='lqu_exact', **kwargs):
        """Plot every curve on one set of axes. Keyword arguments get
        passed on to matplotlib's plot function."""
        if ax is None:
            ax = new_axes()
        artists = []
        for sweep in self.sweeps:
            artists.extend(sweep.plot_curve(ax=ax, column=column, **kwargs))
        ax.set_xlabel(axis_label(self.preset.variable))
        ax.set_ylabel(axis_label(column))
        ax.set_title(self.preset.title)
        ax.legend()
        return artists

    def write(self, out_dir) -> Tuple[List[Path], Path]:
        """Write one CSV per curve plus the plot script into *out_dir*."""
        out_dir = Path(out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        csv_names = [curve_filename(sweep.spec, self.name) for sweep in self.sweeps]
        csv_paths = []
        for sweep, fname in zip(self.sweeps, csv_names):
            path = out_dir / fname
            sweep.write_csv(path)
            csv_paths.append(path)
        script_path = out_dir / "{}.py".format(self.name)
        emit_plot_script(self.sweeps, self.name, csv_names, script_path)
        log.info("Wrote %d curves and %s", len(csv_paths), script_path)
        return csv_paths, script_path


def count_peaks(values: Sequence[float], prominence: float=1e-6) -> int:
    """Number of interior local maxima of a curve."""
    peaks, _ = find_peaks(np.asarray(values, dtype=float), prominence=prominence)
    return len(peaks)


def decays_to_zero(values: Sequence[float], fraction: float=0.1) -> bool:
    """Whether the curve ends below *fraction* of its maximum."""
    values = np.asarray(values, dtype=float)
    peak = values.max()
    return bool(peak > 0 and values[-1] <= fraction * peak)
