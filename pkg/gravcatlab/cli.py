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

"""Command line interface: ``gravcatlab point|sweep|figure|selfcheck``.

Exit status is 0 on success, 1 when a computation or check fails and 2
for usage errors (bad flags, unknown presets, invalid parameters).

"""

import argparse
import logging
import sys

from . import exceptions_
from .figures import PRESETS, Figure
from .gravcat import ModelParams
from .oracle import MinimizeConfig
from .selfcheck import selfcheck
from .sweep import VARIABLES, RowOptions, Sweep, SweepSpec, run_point


log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def _add_model_flags(parser):
    parser.add_argument('--omega', type=float, default=0.05, help="Energy gap omega.")
    parser.add_argument('--delta', type=float, default=0.05,
                        help="Gravitational coupling Delta.")
    parser.add_argument('--B', type=float, default=0.5, help="Uniform field B.")
    parser.add_argument('--b', type=float, default=0.5, help="Field inhomogeneity b.")
    parser.add_argument('--T', type=float, default=0.5,
                        help="Temperature (0 gives the ground state).")
    parser.add_argument('--oracle', action='store_true',
                        help="Also minimize the skew information numerically.")


def _parse_curves(text):
    try:
        return tuple(float(v) for v in text.split(',') if v.strip())
    except ValueError:
        raise argparse.ArgumentTypeError("curves must be comma separated numbers: {}".format(text))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='gravcatlab', allow_abbrev=False,
        description="Local quantum uncertainty and concurrence of two gravcats.")
    parser.add_argument('-v', '--verbose', action='store_true', help="Debug logging.")
    subparsers = parser.add_subparsers(dest='command', required=True)

    point = subparsers.add_parser('point', allow_abbrev=False,
                                  help="Evaluate a single parameter set.")
    _add_model_flags(point)
    point.add_argument('--mode', choices=('exact', 'paper', 'both'), default='both',
                       help="Which LQU values to print.")

    sweep = subparsers.add_parser('sweep', allow_abbrev=False,
                                  help="Scan one parameter and write CSV.")
    _add_model_flags(sweep)
    sweep.add_argument('--var', required=True,
                       help="Swept quantity, one of {}.".format(', '.join(VARIABLES)))
    sweep.add_argument('--from', dest='start', type=float, required=True)
    sweep.add_argument('--to', dest='stop', type=float, required=True)
    sweep.add_argument('--steps', type=int, default=100)
    sweep.add_argument('--out', default=None, help="CSV file (default: stdout).")
    sweep.add_argument('--workers', type=int, default=1)
    sweep.add_argument('--with-ground', action='store_true',
                       help="Prepend the T = 0 point to temperature sweeps.")

    figure = subparsers.add_parser('figure', allow_abbrev=False,
                                   help="Write the CSV files and plot script of a preset.")
    figure.add_argument('--name', required=True, choices=sorted(PRESETS))
    figure.add_argument('--out-dir', required=True)
    figure.add_argument('--curves', type=_parse_curves, default=None,
                        help="Comma separated curve values.")
    figure.add_argument('--steps', type=int, default=None)
    figure.add_argument('--workers', type=int, default=1)
    figure.add_argument('--oracle', action='store_true')

    subparsers.add_parser('selfcheck', help="Run the acceptance suite.")
    return parser


def _params(args) -> ModelParams:
    return ModelParams(omega_gap=args.omega, delta=args.delta,
                       field_b_uniform=args.B, field_b_inhomo=args.b)


def cmd_point(args) -> int:
    options = RowOptions(with_oracle=args.oracle, oracle_config=MinimizeConfig())
    row = run_point(_params(args), args.T, options)
    hidden = {'exact': ('lqu_paper',), 'paper': ('lqu_exact', 'branch_exact', 'w1', 'w3'),
              'both': ()}[args.mode]
    if not args.oracle:
        hidden += ('oracle_min',)
    for key, value in row._asdict().items():
        if key not in hidden:
            print("{:<13} {}".format(key, value))
    return EXIT_OK


def cmd_sweep(args) -> int:
    spec = SweepSpec(variable=args.var, start=args.start, stop=args.stop,
                     steps=args.steps, fixed=_params(args), temperature=args.T,
                     with_oracle=args.oracle, with_ground=args.with_ground)
    data = Sweep(spec, workers=args.workers).write_csv(args.out)
    if args.out is None:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    return EXIT_OK


def cmd_figure(args) -> int:
    fig = Figure(args.name, curves=args.curves, steps=args.steps,
                 workers=args.workers, with_oracle=args.oracle)
    csv_paths, script = fig.write(args.out_dir)
    for path in csv_paths + [script]:
        print(path)
    return EXIT_OK


def cmd_selfcheck(args) -> int:
    report = selfcheck()
    print(report)
    return report.exit_status


COMMANDS = {
    'point': cmd_point,
    'sweep': cmd_sweep,
    'figure': cmd_figure,
    'selfcheck': cmd_selfcheck,
}


def _is_usage_problem(exc) -> bool:
    while exc is not None:
        if isinstance(exc, (exceptions_.UsageError, exceptions_.InvalidStateError)):
            return True
        exc = exc.__cause__
    return False


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s:%(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except exceptions_.GravcatError as exc:
        print("gravcatlab {}: {}".format(args.command, exc), file=sys.stderr)
        if _is_usage_problem(exc):
            return EXIT_USAGE
        return EXIT_FAILURE
