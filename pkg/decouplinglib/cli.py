#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: cli.py
#
# Copyright 2026 Costas Tyfoxylos
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
#  of this software and associated documentation files (the "Software"), to
#  deal in the Software without restriction, including without limitation the
#  rights to use, copy, modify, merge, publish, distribute, sublicense, and/or
#  sell copies of the Software, and to permit persons to whom the Software is
#  furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
#  all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
#  IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
#  FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
#  AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
#  LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
#  FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER
#  DEALINGS IN THE SOFTWARE.
#

"""
Command line entry point.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import argparse
import logging
import sys
from pathlib import Path

import coloredlogs
import numpy as np

from ._version import __version__
from .algebra import collective_pauli_group, decompose
from .codes import (basis_labels,
                    dephasing_dfs_enumerate,
                    dfs_check_hamiltonian,
                    even_weight_stabilized_code,
                    four_qubit_dfs,
                    load_code,
                    pairwise_code,
                    save_code,
                    three_qubit_ns_code)
from .configuration import (DEFAULT_BATH_DIMENSION,
                            DEFAULT_BATH_NORM,
                            DEFAULT_BOUND_COUPLING_NORM,
                            DEFAULT_SEED,
                            LOGGING_LEVEL)
from .decoupling import cdd, cdd_bound_and_optimum, fixed_time_bound, symmetrize
from .decouplinglibexceptions import DecouplingLibError, InvalidParameter
from .harness import (GROUPS,
                      ExperimentConfig,
                      SweepResult,
                      deutsch_demo,
                      pulse_group,
                      rate_table,
                      run_sweep,
                      write_result)
from .matrixio import dumps, load_matrices
from .models import MODEL_TEMPLATES, build_model

__author__ = '''Costas Tyfoxylos <costas.tyf@gmail.com>'''
__docformat__ = '''google'''
__date__ = '''18-10-2026'''
__copyright__ = '''Copyright 2026, Costas Tyfoxylos'''
__credits__ = ["Costas Tyfoxylos"]
__license__ = '''MIT'''
__maintainer__ = '''Costas Tyfoxylos'''
__email__ = '''<costas.tyf@gmail.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".


# This is the main prefix used for logging
LOGGER_BASENAME = 'decouplinglib.cli'
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())

CODES = ('four_qubit_dfs', 'three_qubit_ns', 'even_weight', 'pairwise', 'dephasing')


def setup_logging(level):
    """Installs coloredlogs on stderr at the given level."""
    coloredlogs.install(level=level.upper(), stream=sys.stderr)


def _common_options():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--seed', type=int, default=DEFAULT_SEED, help='Seed of every random draw')
    common.add_argument('--tol', type=float, default=None, help='Overrides the check tolerance')
    common.add_argument('--format', dest='output_format', choices=('csv', 'text'), default='csv',
                        help='Output format')
    common.add_argument('--out', default=None, help='Write the output to this file instead of stdout')
    common.add_argument('--log-level', default=LOGGING_LEVEL.lower(), help='Logging level')
    return common


def get_arguments(argv=None):
    """Parses the command line.

    Raises:
        SystemExit: With code 2 on usage errors.

    """
    common = _common_options()
    parser = argparse.ArgumentParser(prog='decouplinglib',
                                     description='Decoherence-free subspaces, noiseless subsystems and '
                                                 'dynamical decoupling experiments')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    commands = parser.add_subparsers(dest='command', required=True)

    deutsch = commands.add_parser('deutsch', parents=[common], help='Deutsch algorithm under dephasing')
    deutsch.add_argument('--p', type=float, required=True, help='Dephasing probability')
    deutsch.add_argument('--encoded', action='store_true', help='Encode the query qubit in Span{|00>, |11>}')

    enumerate_dfs = commands.add_parser('enumerate-dfs', parents=[common], help='Collective dephasing DFSs')
    enumerate_dfs.add_argument('--n', type=int, required=True, help='Number of qubits')
    enumerate_dfs.add_argument('--half-spin', action='store_true', help='Label with spin 1/2 eigenvalues')

    build_code = commands.add_parser('build-code', parents=[common], help='Write a code isometry')
    build_code.add_argument('--code', choices=CODES, required=True, help='Code family')
    build_code.add_argument('--n', type=int, default=None, help='Number of qubits')

    check_dfs = commands.add_parser('check-dfs', parents=[common], help='Check a code against a model')
    check_dfs.add_argument('--model', choices=sorted(MODEL_TEMPLATES), required=True, help='Coupling template')
    check_dfs.add_argument('--n', type=int, required=True, help='Number of qubits')
    check_dfs.add_argument('--bath-dim', type=int, default=DEFAULT_BATH_DIMENSION, help='Bath dimension')
    source = check_dfs.add_mutually_exclusive_group(required=True)
    source.add_argument('--code', choices=CODES, help='Built in code family')
    source.add_argument('--code-file', help='Code isometry in the matrix text format')

    decomposition = commands.add_parser('decompose', parents=[common], help='Block decomposition of an algebra')
    generators = decomposition.add_mutually_exclusive_group(required=True)
    generators.add_argument('--model', choices=sorted(MODEL_TEMPLATES) + ['collective_pauli'],
                            help='System operators of a template, or the collective Pauli group')
    generators.add_argument('--generators', help='Generators in the matrix text format')
    decomposition.add_argument('--n', type=int, default=None, help='Number of qubits')
    decomposition.add_argument('--export', default=None, help='Write the transform W to this file')

    for name, description in (('symmetrize', 'Symmetrization cycle of a pulse group'),
                              ('cdd', 'Concatenated decoupling sequence')):
        sequence = commands.add_parser(name, parents=[common], help=description)
        sequence.add_argument('--group', choices=GROUPS, default='collective_pauli', help='Pulse group')
        sequence.add_argument('--n', type=int, default=1, help='Number of qubits')
        sequence.add_argument('--tau', type=float, required=True, help='Free evolution time')
        if name == 'cdd':
            sequence.add_argument('--level', type=int, required=True, help='Concatenation level')

    sweep = commands.add_parser('sweep', parents=[common], help='Run a TOML experiment file')
    sweep.add_argument('--config', required=True, help='Experiment file')
    sweep.add_argument('--workers', type=int, default=None, help='Worker threads')

    rates = commands.add_parser('rates', parents=[common], help='Code dimensions and rates')
    rates.add_argument('--model', choices=('dephasing', 'decoherence'), required=True, help='Noise model')
    rates.add_argument('--max-n', type=int, required=True, help='Largest number of qubits')

    bound = commands.add_parser('bound', parents=[common], help='Concatenated decoupling error phase bound')
    bound.add_argument('--J', dest='coupling_norm', type=float, default=DEFAULT_BOUND_COUPLING_NORM, help='||H_SB||')
    bound.add_argument('--beta', dest='bath_norm', type=float, default=DEFAULT_BATH_NORM, help='||H_B||')
    bound.add_argument('--tau', type=float, required=True, help='Free evolution time')
    bound.add_argument('--max-level', type=int, default=6, help='Largest concatenation level')
    bound.add_argument('--total-time', type=float, default=None, help='Tabulate the fixed total time variant')
    return parser.parse_args(argv)


def _tolerance(args):
    return {} if args.tol is None else {'tol': args.tol}


def _table(args, columns, rows, footers=None):
    provenance = {'command': args.command, 'seed': args.seed, 'version': __version__}
    return SweepResult(args.command, tuple(columns), list(rows), provenance, list(footers or []))


def _build_code(name, size):
    if name == 'four_qubit_dfs':
        return four_qubit_dfs()
    if name == 'three_qubit_ns':
        return three_qubit_ns_code()
    if size is None:
        raise InvalidParameter(f'The {name} code needs --n')
    if name == 'even_weight':
        return even_weight_stabilized_code(size)
    if name == 'pairwise':
        if size % 2:
            raise InvalidParameter(f'The pairwise code needs an even number of qubits, got {size}')
        return pairwise_code(size // 2)
    return dephasing_dfs_enumerate(size)[size // 2]


def _deutsch(args):
    table = deutsch_demo(args.p, args.encoded)
    return _table(args, ('function', 'p', 'misidentification', 'encoded'),
                  [(name, args.p, value, args.encoded) for name, value in table.items()])


def _enumerate_dfs(args):
    labels = basis_labels(args.n)
    rows = []
    for code in dephasing_dfs_enumerate(args.n, args.half_spin):
        members = [label for label, row in zip(labels, code.isometry) if np.any(row)]
        rows.append((float(code.labels[0]), code.dimension, ' '.join(members)))
    return _table(args, ('c_z', 'dimension', 'states'), rows)


def _build(args):
    code = _build_code(args.code, args.n)
    if args.out:
        save_code(args.out, code)
        LOGGER.info('Wrote %s to %s', code.name, args.out)
        return None
    return dumps([(code.name, code.isometry)], comments=[f'n_qubits {code.n_qubits}'])


def _check_dfs(args):
    model = build_model(args.model, args.n, args.bath_dim, seed=args.seed)
    code = load_code(args.code_file) if args.code_file else _build_code(args.code, args.n)
    report = dfs_check_hamiltonian(model, code, **_tolerance(args))
    rows = [(index, eigenvalue, residual)
            for index, (eigenvalue, residual) in enumerate(zip(report.eigenvalues, report.residuals))]
    return _table(args, ('coupling', 'eigenvalue', 'residual'), rows,
                  [('ok', report.ok), ('system_leakage', report.system_leakage)])


def _decompose(args):
    if args.generators:
        operators = [matrix for _, matrix in load_matrices(args.generators)]
    elif args.n is None:
        raise InvalidParameter('Model generators need --n')
    elif args.model == 'collective_pauli':
        operators = collective_pauli_group(args.n)
    else:
        operators = list(build_model(args.model, args.n, 1, seed=args.seed).system_operators)
    options = _tolerance(args)
    decomposition = decompose(operators, seed=args.seed, **options)
    if args.export:
        Path(args.export).write_text(decomposition.export_transform(), encoding='utf-8')
        LOGGER.info('Wrote the transform to %s', args.export)
    rows = [(block.label, block.multiplicity, block.dimension, block.offset) for block in decomposition.blocks]
    residual = max(decomposition.structure_residual(operator_) for operator_ in operators)
    return _table(args, ('block', 'n_J', 'd_J', 'offset'), rows, [('structure_residual', residual)])


def _group(args):
    return pulse_group(args.group, args.n)


def _sequence_table(args, sequence):
    rows = [(index, event.kind, event.token, event.duration) for index, event in enumerate(sequence.events)]
    return _table(args, ('event', 'kind', 'name', 'duration'), rows,
                  [('pattern', sequence.pattern), ('total_duration', sequence.total_duration),
                   ('free_segments', sequence.free_segments)])


def _symmetrize(args):
    return _sequence_table(args, symmetrize(_group(args), args.tau, **_tolerance(args)))


def _cdd(args):
    return _sequence_table(args, cdd(_group(args), args.level, args.tau, **_tolerance(args)))


def _sweep(args):
    config = ExperimentConfig.load(args.config)
    result = run_sweep(config, args.workers)
    if not args.out and config.output:
        write_result(result, config.output, args.output_format)
        LOGGER.info('Wrote %s rows to %s', len(result.rows), config.output)
        return None
    return result


def _rates(args):
    rows = [(row.n_qubits, row.dimension, row.rate, row.asymptote) for row in rate_table(args.max_n, args.model)]
    return _table(args, ('N', 'dimension', 'rate', 'asymptote'), rows)


def _bound(args):
    if args.total_time is not None:
        rows = [(row.level, row.bound, row.decreasing)
                for row in fixed_time_bound(args.coupling_norm, args.bath_norm, args.total_time, args.max_level)]
        return _table(args, ('m', 'phi_bound', 'decreasing'), rows)
    table = cdd_bound_and_optimum(args.coupling_norm, args.bath_norm, args.tau, args.max_level)
    rows = [(row.level, row.duration, row.bound) for row in table.rows]
    return _table(args, ('m', 'T_m', 'phi_bound'), rows,
                  [('m_opt', table.optimal_level), ('verdict', table.verdict)])


COMMANDS = {'deutsch': _deutsch,
            'enumerate-dfs': _enumerate_dfs,
            'build-code': _build,
            'check-dfs': _check_dfs,
            'decompose': _decompose,
            'symmetrize': _symmetrize,
            'cdd': _cdd,
            'sweep': _sweep,
            'rates': _rates,
            'bound': _bound}


def main(argv=None):
    """Runs one command and returns the process exit code.

    Returns:
        code (int): 0 on success, 1 on a library error and 2 on a usage error.

    """
    try:
        args = get_arguments(argv)
    except SystemExit as error:
        return error.code if isinstance(error.code, int) else 2
    setup_logging(args.log_level)
    try:
        output = COMMANDS[args.command](args)
    except DecouplingLibError as error:
        LOGGER.error('%s failed: %s', args.command, error)
        return 1
    if output is None:
        return 0
    text = output if isinstance(output, str) else output.render(args.output_format)
    if args.out:
        Path(args.out).write_text(text, encoding='utf-8')
        LOGGER.info('Wrote %s', args.out)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == '__main__':
    sys.exit(main())
