#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: harness.py
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
End to end experiments: the Deutsch algorithm under dephasing, code rate tables and the decoupling sweeps
driven by TOML experiment files, emitted as deterministic CSV.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import csv
import hashlib
import io
import itertools
import json
import logging
import math
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from ._version import __version__
from .algebra import collective_pauli_group
from .codes import decoherence_rate, dephasing_rate
from .configuration import CSV_SIGNIFICANT_DIGITS, MAXIMUM_RATE_QUBITS
from .decoupling import (cdd,
                         cdd_bound_and_optimum,
                         decoupling_error,
                         fit_slope,
                         free_evolution,
                         hybrid_ddfs_two_qubit,
                         pulse_generator,
                         real_pulse_error_scan,
                         simulate,
                         symmetrize,
                         xy4)
from .decouplinglibexceptions import (ConfigurationError,
                                      DecouplingLibError,
                                      InvalidParameter,
                                      SequenceFormatError)
from .matrixio import format_number
from .models import (DensityMatrix,
                     apply_channel,
                     bath_initial_state,
                     dephasing_kraus_channel,
                     load_toml,
                     model_from_mapping,
                     validate_model_mapping)
from .numericcore import dagger, ket, partial_trace, pauli_string, tensor

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
LOGGER_BASENAME = 'decouplinglib.harness'
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())

HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2)
DEUTSCH_FUNCTIONS = {'f0': (0, 0), 'f1': (1, 1), 'f2': (0, 1), 'f3': (1, 0)}

EXPERIMENTS = {'free': ('tau',),
               'xy4': ('tau',),
               'cdd': ('m', 'tau'),
               'hybrid': ('tau',),
               'realpulse': ('tau', 'delta'),
               'symmetrize': ('tau',),
               'bound': ('tau', 'm'),
               'deutsch': ('p',)}
GROUPS = ('collective_pauli', 'pauli')
EXPERIMENT_FIELDS = {'name', 'output', 'encoded', 'workers'}
SEQUENCE_FIELDS = {'group', 'ideal', 'delta', 'lambda', 'pulse'}


def _logical_operator(isometry, operator_):
    """P M P^dagger on the code block completed by the identity on its complement."""
    projector = isometry @ dagger(isometry)
    return isometry @ operator_ @ dagger(isometry) + np.eye(isometry.shape[0]) - projector


def _oracle(isometry, values):
    """U_f |x>|y> = |x>|y + f(x)> on the code block and the identity on the complement."""
    not_gate = pauli_string('X')
    identity = np.eye(2)
    result = tensor(np.eye(isometry.shape[0]) - isometry @ dagger(isometry), identity)
    for logical, value in enumerate(values):
        column = isometry[:, logical]
        result = result + tensor(np.outer(column, np.conj(column)), not_gate if value else identity)
    return result


def deutsch_demo(probability, encoded=False):
    """Misidentification probability of the one qubit Deutsch algorithm with dephasing after the Hadamards.

    Unencoded, the query qubit suffers {sqrt(1-p) I, sqrt(p) Z}. Encoded, the query qubit lives in
    Span{|00>, |11>} of two physical qubits and the noise is {sqrt(1-p) I, sqrt(p) Z Z}; the logical Hadamard
    and oracle act on that block and as the identity on its complement.

    Args:
        probability (float): The dephasing probability p.
        encoded (bool): Whether the query qubit is encoded.

    Returns:
        table (dict): Misidentification probability keyed by f0, f1 (constant) and f2, f3 (balanced).

    Raises:
        InvalidParameter: If p lies outside [0, 1].

    """
    if not 0 <= probability <= 1:
        raise InvalidParameter(f'Probability must lie in [0, 1], got {probability}')
    if encoded:
        isometry = np.column_stack([ket('00'), ket('11')])
        noisy_qubits = [0, 1]
    else:
        isometry = np.eye(2, dtype=complex)
        noisy_qubits = [0]
    register = isometry.shape[0].bit_length() - 1
    n_qubits = register + 1
    hadamard = _logical_operator(isometry, HADAMARD)
    channel = dephasing_kraus_channel(probability, noisy_qubits, n_qubits)
    initial = tensor(isometry[:, 0], ket('1'))
    prepared = tensor(hadamard, HADAMARD) @ initial
    state = apply_channel(channel, DensityMatrix(np.outer(prepared, np.conj(prepared))))
    readout = tensor(np.outer(isometry[:, 1], np.conj(isometry[:, 1])), np.eye(2))
    table = {}
    for name, values in DEUTSCH_FUNCTIONS.items():
        circuit = tensor(hadamard, np.eye(2)) @ _oracle(isometry, values)
        final = circuit @ state.matrix @ dagger(circuit)
        balanced_probability = float(np.real(np.trace(readout @ final)))
        table[name] = balanced_probability if values[0] == values[1] else 1 - balanced_probability
    LOGGER.debug('Deutsch demo p=%s encoded=%s: %s', probability, encoded, table)
    return table


@dataclass
class RateRow:
    """Code dimension and rate for one register size."""

    n_qubits: int
    dimension: int
    rate: float
    asymptote: float


def rate_table(max_n, model='dephasing'):
    """Exact code dimensions and rates up to ``max_n`` qubits.

    Dephasing rows cover every N with the largest S_z eigenspace C(N, N/2); decoherence rows cover even N with
    d_N = N!/((N/2)!(N/2+1)!).

    Raises:
        InvalidParameter: For an unknown model or max_n outside 1..1024.

    """
    if not 1 <= max_n <= MAXIMUM_RATE_QUBITS:
        raise InvalidParameter(f'max_n must lie in 1..{MAXIMUM_RATE_QUBITS}, got {max_n}')
    if model == 'dephasing':
        return [RateRow(n, *dephasing_rate(n)) for n in range(1, max_n + 1)]
    if model == 'decoherence':
        return [RateRow(n, *decoherence_rate(n)) for n in range(2, max_n + 1, 2)]
    raise InvalidParameter(f'Unknown rate model "{model}", expected dephasing or decoherence')


def _field_line(text, name):
    """The first line assigning ``name`` in a TOML source, None if absent."""
    if text is None:
        return None
    pattern = re.compile(rf'^\s*{re.escape(name)}\s*=')
    for number, line in enumerate(text.splitlines(), start=1):
        if pattern.match(line):
            return number
    return None


@dataclass
class ExperimentConfig:
    """A validated experiment description."""

    name: str
    model: dict
    grid: dict
    sequence: dict = field(default_factory=dict)
    output: str = None
    encoded: bool = False
    workers: int = 1
    document: dict = field(default_factory=dict)

    @classmethod
    def from_mapping(cls, document, path=None, text=None):
        """Validates a parsed TOML document.

        Raises:
            ConfigurationError: Naming the field and, when the source text is known, its line.

        """
        def error(message, name, section):
            return ConfigurationError(message, field=f'{section}.{name}', line=_field_line(text, name), path=path)

        experiment = document.get('experiment', {})
        unknown = set(experiment) - EXPERIMENT_FIELDS
        if unknown:
            raise error('Unknown field', sorted(unknown)[0], 'experiment')
        name = experiment.get('name')
        if name not in EXPERIMENTS:
            raise error(f'Experiment must be one of {sorted(EXPERIMENTS)}', 'name', 'experiment')
        workers = experiment.get('workers', 1)
        if not isinstance(workers, int) or isinstance(workers, bool) or workers < 1:
            raise error('Workers must be a positive integer', 'workers', 'experiment')
        try:
            model = validate_model_mapping(document.get('model', {'template': 'general'}), path)
        except ConfigurationError as model_error:
            raise ConfigurationError(model_error.message, field=f'model.{model_error.field}',
                                     line=_field_line(text, model_error.field), path=path) from None
        grid = cls._validated_grid(document.get('grid', {}), EXPERIMENTS[name], error)
        sequence = dict({'group': 'collective_pauli', 'ideal': True, 'delta': None, 'lambda': None, 'pulse': 'X'},
                        **document.get('sequence', {}))
        unknown = set(sequence) - SEQUENCE_FIELDS
        if unknown:
            raise error('Unknown field', sorted(unknown)[0], 'sequence')
        if sequence['group'] not in GROUPS:
            raise error(f'Group must be one of {GROUPS}', 'group', 'sequence')
        if not sequence['ideal'] and not sequence['delta']:
            raise error('Real pulses need a width', 'delta', 'sequence')
        if name == 'hybrid' and model['n_qubits'] != 2:
            raise error('The hybrid experiment runs on two qubits', 'n_qubits', 'model')
        if name == 'bound' and not 0 < model['J'] < model['beta']:
            raise error('The bound assumes 0 < J < beta', 'J', 'model')
        if name == 'bound' and len(grid['m']) != 1:
            raise error('The bound takes a single maximum level', 'm', 'grid')
        if name == 'realpulse':
            cls._check_pulse(sequence['pulse'], model['n_qubits'], error)
        return cls(name, model, grid, sequence, experiment.get('output'), bool(experiment.get('encoded', False)),
                   workers, document)

    @staticmethod
    def _check_pulse(pulse, n_qubits, error):
        if not isinstance(pulse, str):
            raise error('Pulse must be a name', 'pulse', 'sequence')
        try:
            dimension = pulse_generator(pulse).shape[0]
        except SequenceFormatError as pulse_error:
            raise error(str(pulse_error), 'pulse', 'sequence') from None
        if dimension != 2 ** n_qubits:
            raise error(f'Pulse acts on dimension {dimension}, the model on {2 ** n_qubits}', 'pulse', 'sequence')

    @staticmethod
    def _validated_grid(grid, required, error):
        validated = {}
        for name in required:
            values = grid.get(name)
            if not isinstance(values, list) or not values:
                raise error('Grid must be a nonempty list', name, 'grid')
            if any(isinstance(value, bool) or not isinstance(value, (int, float)) for value in values):
                raise error('Grid values must be numbers', name, 'grid')
            if name == 'm' and any(not isinstance(value, int) or value < 1 for value in values):
                raise error('Levels must be positive integers', name, 'grid')
            if name == 'p' and any(not 0 <= value <= 1 for value in values):
                raise error('Probabilities must lie in [0, 1]', name, 'grid')
            if name in ('tau', 'delta') and any(value <= 0 for value in values):
                raise error('Durations must be positive', name, 'grid')
            validated[name] = list(values)
        return validated

    @classmethod
    def load(cls, path):
        """Reads and validates a TOML experiment file."""
        document = load_toml(path)
        return cls.from_mapping(document, path, Path(path).read_text(encoding='utf-8'))

    @property
    def seed(self):
        """The model seed."""
        return self.model['seed']

    @property
    def config_hash(self):
        """SHA-256 of the canonical JSON form of the document, first 16 hex digits."""
        canonical = json.dumps(self.document, sort_keys=True, separators=(',', ':'), default=str)
        return hashlib.sha256(canonical.encode('utf-8')).hexdigest()[:16]


@dataclass
class SweepResult:
    """Rows of a sweep with provenance and footer lines."""

    experiment: str
    columns: tuple
    rows: list
    provenance: dict
    footers: list = field(default_factory=list)

    @staticmethod
    def _cell(value):
        if isinstance(value, bool):
            return 'true' if value else 'false'
        if isinstance(value, (int, np.integer)):
            return str(value)
        if isinstance(value, (float, np.floating)):
            return format_number(value, CSV_SIGNIFICANT_DIGITS)
        return str(value)

    def to_csv(self):
        """CSV with a comment header carrying config hash, seed and version, and comment footers."""
        buffer = io.StringIO()
        for key, value in self.provenance.items():
            buffer.write(f'# {key} {value}\n')
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow([self._cell(value) for value in row])
        for key, value in self.footers:
            buffer.write(f'# {key} {self._cell(value)}\n')
        return buffer.getvalue()

    def to_text(self):
        """A whitespace aligned table."""
        cells = [list(self.columns)] + [[self._cell(value) for value in row] for row in self.rows]
        widths = [max(len(row[index]) for row in cells) for index in range(len(self.columns))]
        lines = ['  '.join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() for row in cells]
        lines.extend(f'{key}: {self._cell(value)}' for key, value in self.footers)
        return '\n'.join(lines) + '\n'

    def render(self, output_format='csv'):
        """The result as csv or text."""
        return self.to_text() if output_format == 'text' else self.to_csv()


DECOUPLING_COLUMNS = ('tau', 'system_error', 'error_phase', 'bath_distance', 'T_total', 'fidelity', 'seed')


def pulse_group(name, n_qubits):
    """The ideal pulse group: the collective Paulis {I, X..X, Y..Y, Z..Z} or all 4^n Pauli strings."""
    if name not in GROUPS:
        raise InvalidParameter(f'Unknown pulse group "{name}", expected one of {GROUPS}')
    if name == 'pauli':
        return [pauli_string(''.join(label)) for label in itertools.product('IXYZ', repeat=n_qubits)]
    return collective_pauli_group(n_qubits)


def _sequence_for(config, model, level, tau):
    name = config.name
    if name == 'free':
        return free_evolution(tau), None
    if name == 'xy4':
        return xy4(tau, config.sequence['ideal'], config.sequence['delta'], config.sequence['lambda']), None
    if name == 'cdd':
        return cdd(pulse_group(config.sequence['group'], model.n_qubits), level, tau), None
    if name == 'symmetrize':
        return symmetrize(pulse_group(config.sequence['group'], model.n_qubits), tau), None
    hybrid = hybrid_ddfs_two_qubit(tau)
    return hybrid.u3, hybrid.code


def _state_fidelity(unitary, model, code, bath_kind):
    """<psi| Tr_B[U (psi (x) rho_B) U^dagger] |psi> for |+>^n, or the uniform codeword superposition on a code."""
    if code is None:
        probe = np.full(2 ** model.n_qubits, 2 ** (-model.n_qubits / 2), dtype=complex)
    else:
        probe = code.isometry.sum(axis=1) / math.sqrt(code.dimension)
    bath = bath_initial_state(model, bath_kind)
    joint = tensor(np.outer(probe, np.conj(probe)), bath.matrix)
    evolved = unitary @ joint @ dagger(unitary)
    reduced = partial_trace(evolved, model.layout, range(model.n_qubits))
    return float(np.real(np.conj(probe) @ reduced @ probe))


def _decoupling_row(config, model, point):
    level, tau = point
    sequence, code = _sequence_for(config, model, level, tau)
    unitary = simulate(sequence, model)
    report = decoupling_error(unitary, sequence.total_duration, model.layout, code)
    fidelity = _state_fidelity(unitary, model, code, config.model['bath_state'])
    values = (tau, report.system_error, report.error_phase, report.bath_distance, sequence.total_duration,
              fidelity, config.seed)
    return ((level,) + values) if config.name == 'cdd' else values


def _slope_footers(label, abscissae, ordinates):
    try:
        return [(f'slope{label}', fit_slope(abscissae, ordinates))]
    except InvalidParameter:
        LOGGER.warning('Not enough points above the noise floor to fit a slope%s', label)
        return []


def _decoupling_sweep(config, workers):
    model = model_from_mapping(config.model)
    levels = config.grid.get('m', [None])
    points = list(itertools.product(levels, config.grid['tau']))
    with ThreadPoolExecutor(max_workers=workers) as executor:
        rows = list(executor.map(lambda point: _decoupling_row(config, model, point), points))
    columns = (('m',) + DECOUPLING_COLUMNS) if config.name == 'cdd' else DECOUPLING_COLUMNS
    footers = []
    offset = 1 if config.name == 'cdd' else 0
    for level in levels:
        selected = [row for row in rows if config.name != 'cdd' or row[0] == level]
        label = f' m={level}' if config.name == 'cdd' else ''
        footers.extend(_slope_footers(label, [row[offset] for row in selected], [row[offset + 2] for row in selected]))
    return columns, rows, footers


def _tau_label(taus, tau):
    return '' if len(taus) == 1 else f' tau={tau:g}'


def _realpulse_sweep(config, workers):
    model = model_from_mapping(config.model)
    taus, deltas = config.grid['tau'], config.grid['delta']
    points = list(itertools.product(taus, deltas))

    def evaluate(point):
        tau, delta = point
        return real_pulse_error_scan(model, tau, [delta], config.sequence['pulse'])[0]

    with ThreadPoolExecutor(max_workers=workers) as executor:
        scan = list(executor.map(evaluate, points))
    rows = [(row.delta, tau, row.system_error, row.error_phase, row.bath_distance, row.duration, config.seed)
            for (tau, _), row in zip(points, scan)]
    columns = ('delta', 'tau', 'system_error', 'error_phase', 'bath_distance', 'T_total', 'seed')
    footers = []
    for tau in taus:
        errors = [row.system_error for (point_tau, _), row in zip(points, scan) if point_tau == tau]
        footers.extend(_slope_footers(_tau_label(taus, tau), deltas, errors))
    return columns, rows, footers


def _bound_sweep(config, _workers):
    taus, (max_level,) = config.grid['tau'], config.grid['m']
    rows, footers = [], []
    for tau in taus:
        table = cdd_bound_and_optimum(config.model['J'], config.model['beta'], tau, max_level)
        rows.extend((tau, row.level, row.duration, row.bound) for row in table.rows)
        label = _tau_label(taus, tau)
        footers.extend([(f'm_opt{label}', table.optimal_level), (f'verdict{label}', table.verdict)])
    return ('tau', 'm', 'T_m', 'phi_bound'), rows, footers


def _deutsch_sweep(config, workers):
    with ThreadPoolExecutor(max_workers=workers) as executor:
        tables = list(executor.map(lambda probability: deutsch_demo(probability, config.encoded), config.grid['p']))
    rows = [(probability,) + tuple(table[name] for name in DEUTSCH_FUNCTIONS) + (config.encoded,)
            for probability, table in zip(config.grid['p'], tables)]
    return ('p',) + tuple(DEUTSCH_FUNCTIONS) + ('encoded',), rows, []


SWEEPS = {'realpulse': _realpulse_sweep, 'bound': _bound_sweep, 'deutsch': _deutsch_sweep}


def run_sweep(config, workers=None):
    """Runs an experiment; rows follow grid order whatever the worker count.

    Args:
        config (ExperimentConfig): The validated experiment.
        workers (int): Thread count, the configured value when omitted.

    Returns:
        result (SweepResult): The rows, provenance and fitted slopes.

    """
    workers = workers or config.workers
    LOGGER.info('Running %s sweep with %s worker(s)', config.name, workers)
    sweep = SWEEPS.get(config.name, _decoupling_sweep)
    try:
        columns, rows, footers = sweep(config, workers)
    except DecouplingLibError:
        LOGGER.error('Sweep %s failed', config.name)
        raise
    provenance = {'config_hash': config.config_hash, 'seed': config.seed, 'version': __version__,
                  'experiment': config.name}
    return SweepResult(config.name, columns, rows, provenance, footers)


def write_result(result, path, output_format='csv'):
    """Writes a rendered result to a file."""
    Path(path).write_text(result.render(output_format), encoding='utf-8')
