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

from .xstate import XState, XRoot, validate, sqrt_xstate, to_dense, from_dense
from .gravcat import (ModelParams, ThermalPoint, hamiltonian, spectrum,
                      thermal_state, ground_state, gibbs_state, partition_function)
from .measures import Mode, lqu, lqu_paper_mode, concurrence, w_closed_form
from .oracle import MinimizeConfig, minimize_skew, skew_information
from .sweep import SweepSpec, Sweep, run_point, run_sweep, emit_csv
from .figures import Figure, figure_preset, emit_plot_script
