#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: models.py
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
Open system models in Hamiltonian and Kraus form, seeded finite baths and joint or reduced time evolution.

The composite space is always ordered as the system qubits followed by one bath factor, so a model on ``n``
qubits with bath dimension ``d`` acts on a space of dimension ``2**n * d``.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import itertools
import logging
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import toml

from .configuration import (DEFAULT_BATH_DIMENSION,
                            DEFAULT_BATH_NORM,
                            DEFAULT_COUPLING_NORM,
                            DEFAULT_SEED,
                            STRUCTURAL_TOLERANCE)
from .decouplinglibexceptions import (ConfigurationError,
                                      DimensionMismatch,
                                      InvalidParameter,
                                      NotHermitian)
from .numericcore import (SIGMA_Z,
                          DensityMatrix,
                          TensorLayout,
                          as_matrix,
                          collective_pauli,
                          dagger,
                          expm_skew_hermitian,
                          hermitian_part,
                          is_hermitian,
                          op_norm,
                          partial_trace,
                          pauli_string,
                          qubit_operator,
                          random_hermitian,
                          tensor)

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
LOGGER_BASENAME = 'decouplinglib.models'
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())

BATH_STATES = ('mixed', 'ground')


class HamiltonianModel:
    """H = H_S (x) I + I (x) H_B + sum_a S_a (x) B_a on ``n_qubits`` system qubits and one bath factor.

    Args:
        n_qubits (int): The number of system qubits.
        bath_dim (int): The dimension of the bath factor.
        couplings: Pairs of Hermitian system and bath operators.
        system_hamiltonian: The system Hamiltonian, zero when omitted.
        bath_hamiltonian: The bath Hamiltonian, zero when omitted.
        half_spin (bool): Whether the collective operators were built with the factor 1/2 spin convention.
        tol (float): Hermiticity tolerance for every member.

    """

    def __init__(self,  # pylint: disable=too-many-arguments
                 n_qubits,
                 bath_dim,
                 couplings=(),
                 system_hamiltonian=None,
                 bath_hamiltonian=None,
                 half_spin=False,
                 tol=STRUCTURAL_TOLERANCE):
        if n_qubits < 1 or bath_dim < 1:
            raise InvalidParameter(f'Invalid model dimensions n_qubits={n_qubits}, bath_dim={bath_dim}')
        self.n_qubits = int(n_qubits)
        self.bath_dim = int(bath_dim)
        self.half_spin = bool(half_spin)
        self.layout = TensorLayout.qubits(self.n_qubits, self.bath_dim)
        self.system_dim = 2 ** self.n_qubits
        self._tol = tol
        self.system_hamiltonian = self._validated(system_hamiltonian, self.system_dim, 'H_S')
        self.bath_hamiltonian = self._validated(bath_hamiltonian, self.bath_dim, 'H_B')
        self.couplings = tuple((self._validated(system, self.system_dim, f'S_{index}'),
                                self._validated(bath, self.bath_dim, f'B_{index}'))
                               for index, (system, bath) in enumerate(couplings))

    def _validated(self, matrix, dimension, name):
        if matrix is None:
            matrix = np.zeros((dimension, dimension), dtype=complex)
        matrix = as_matrix(matrix)
        if matrix.shape[0] != dimension:
            raise DimensionMismatch(f'{name} has dimension {matrix.shape[0]}, expected {dimension}')
        if not is_hermitian(matrix, self._tol):
            raise NotHermitian(f'{name} is not Hermitian')
        matrix = hermitian_part(matrix)
        matrix.flags.writeable = False
        return matrix

    def __repr__(self):
        return (f'HamiltonianModel(n_qubits={self.n_qubits}, bath_dim={self.bath_dim}, '
                f'couplings={len(self.couplings)})')

    @property
    def dimension(self):
        """The joint dimension 2^n * bath_dim."""
        return self.layout.dimension

    @property
    def coupling_hamiltonian(self):
        """H_SB = sum_a S_a (x) B_a."""
        result = np.zeros((self.dimension, self.dimension), dtype=complex)
        for system, bath in self.couplings:
            result += tensor(system, bath)
        return result

    @property
    def coupling_norm(self):
        """J = ||H_SB||."""
        return op_norm(self.coupling_hamiltonian)

    @property
    def bath_norm(self):
        """beta = ||H_B||."""
        return op_norm(self.bath_hamiltonian)

    @property
    def system_operators(self):
        """The system operators S_a of every coupling."""
        return [system for system, _ in self.couplings]

    def with_bath_hamiltonian(self, bath_hamiltonian):
        """A copy of the model with a replaced bath Hamiltonian."""
        return HamiltonianModel(self.n_qubits, self.bath_dim, self.couplings, self.system_hamiltonian,
                                bath_hamiltonian, self.half_spin, self._tol)

    def with_system_hamiltonian(self, system_hamiltonian):
        """A copy of the model with a replaced system Hamiltonian."""
        return HamiltonianModel(self.n_qubits, self.bath_dim, self.couplings, system_hamiltonian,
                                self.bath_hamiltonian, self.half_spin, self._tol)


def total_hamiltonian(model):
    """H_S (x) I_B + I_S (x) H_B + H_SB as a dense Hermitian matrix."""
    return hermitian_part(tensor(model.system_hamiltonian, np.eye(model.bath_dim))
                          + tensor(np.eye(model.system_dim), model.bath_hamiltonian)
                          + model.coupling_hamiltonian)


def evolution_operator(model, duration):
    """exp(-i t H) for the full model."""
    return expm_skew_hermitian(total_hamiltonian(model), duration)


def evolve_joint(model, duration, initial):
    """Evolves a joint system and bath state, U rho U^dagger, without tracing the bath out.

    Args:
        model (HamiltonianModel): The model.
        duration (float): The evolution time.
        initial (DensityMatrix): The joint state on system (x) bath.

    Returns:
        state (DensityMatrix): The evolved joint state.

    Raises:
        DimensionMismatch: If the state does not live on the model's joint space.

    """
    if initial.matrix.shape[0] != model.dimension:
        raise DimensionMismatch(f'State of dimension {initial.matrix.shape[0]} does not match model '
                                f'dimension {model.dimension}')
    unitary = evolution_operator(model, duration)
    return DensityMatrix(hermitian_part(unitary @ initial.matrix @ dagger(unitary)), model.layout)


def bath_initial_state(model, kind='mixed'):
    """The initial bath state, maximally mixed or the ground state of H_B.

    Raises:
        InvalidParameter: For an unknown kind.

    """
    if kind == 'mixed':
        return DensityMatrix(np.eye(model.bath_dim) / model.bath_dim)
    if kind == 'ground':
        _, eigenvectors = np.linalg.eigh(model.bath_hamiltonian)
        ground = eigenvectors[:, 0]
        return DensityMatrix(np.outer(ground, np.conj(ground)))
    raise InvalidParameter(f'Unknown bath state "{kind}", expected one of {BATH_STATES}')


def reduced_dynamics(model, duration, system_state, bath_state='mixed'):
    """rho_S(t) = Tr_B[U (rho_S (x) rho_B) U^dagger].

    Args:
        model (HamiltonianModel): The model.
        duration (float): The evolution time.
        system_state (DensityMatrix): The initial system state.
        bath_state: ``'mixed'``, ``'ground'`` or an explicit bath DensityMatrix.

    Returns:
        state (DensityMatrix): The reduced system state.

    """
    if isinstance(bath_state, str):
        bath_state = bath_initial_state(model, bath_state)
    joint = DensityMatrix(tensor(system_state.matrix, bath_state.matrix), model.layout)
    evolved = evolve_joint(model, duration, joint)
    system_factors = list(range(model.n_qubits))
    return DensityMatrix(hermitian_part(partial_trace(evolved.matrix, model.layout, system_factors)),
                         TensorLayout.qubits(model.n_qubits))


class KrausChannel:
    """A completely positive trace preserving map in operator sum form."""

    def __init__(self, kraus_ops, tol=STRUCTURAL_TOLERANCE):
        kraus_ops = [as_matrix(operator_) for operator_ in kraus_ops]
        if not kraus_ops:
            raise InvalidParameter('A channel needs at least one Kraus operator')
        dimension = kraus_ops[0].shape[0]
        if any(operator_.shape[0] != dimension for operator_ in kraus_ops):
            raise DimensionMismatch('Kraus operators must share one dimension')
        completeness = sum(dagger(operator_) @ operator_ for operator_ in kraus_ops)
        deviation = np.max(np.abs(completeness - np.eye(dimension)))
        if deviation > tol:
            raise InvalidParameter(f'Kraus operators violate completeness by {deviation}')
        for operator_ in kraus_ops:
            operator_.flags.writeable = False
        self.kraus_ops = tuple(kraus_ops)
        self.dimension = dimension

    def __len__(self):
        return len(self.kraus_ops)

    def __repr__(self):
        return f'KrausChannel(dimension={self.dimension}, operators={len(self.kraus_ops)})'

    @property
    def superoperator(self):
        """The equivalent Superoperator acting on row major vectorized matrices."""
        return Superoperator(sum(np.kron(operator_, np.conj(operator_)) for operator_ in self.kraus_ops))


def apply_channel(channel, state):
    """sum_a K_a rho K_a^dagger.

    Raises:
        DimensionMismatch: If the state and channel dimensions differ.

    """
    if state.matrix.shape[0] != channel.dimension:
        raise DimensionMismatch(f'State of dimension {state.matrix.shape[0]} does not match channel '
                                f'dimension {channel.dimension}')
    result = sum(operator_ @ state.matrix @ dagger(operator_) for operator_ in channel.kraus_ops)
    return DensityMatrix(hermitian_part(result), state.layout)


class Superoperator:
    """A dense linear map on d x d matrices, stored as a d^2 x d^2 matrix over row major vectorization."""

    def __init__(self, matrix):
        matrix = np.asarray(matrix, dtype=complex)
        dimension = int(round(np.sqrt(matrix.shape[0])))
        if matrix.ndim != 2 or matrix.shape != (dimension ** 2, dimension ** 2):
            raise DimensionMismatch(f'Superoperator shape {matrix.shape} is not d^2 x d^2')
        matrix.flags.writeable = False
        self.matrix = matrix
        self.dimension = dimension

    def apply_matrix(self, matrix):
        """Applies the map to a plain matrix."""
        matrix = np.asarray(matrix, dtype=complex)
        if matrix.shape != (self.dimension, self.dimension):
            raise DimensionMismatch(f'Matrix shape {matrix.shape} does not match map dimension {self.dimension}')
        return (self.matrix @ matrix.reshape(-1)).reshape(self.dimension, self.dimension)

    def apply(self, state):
        """Applies the map to a DensityMatrix."""
        return DensityMatrix(hermitian_part(self.apply_matrix(state.matrix)), state.layout)


def hamming_weights(n_qubits):
    """Number of ones in each computational basis label, in basis order."""
    return np.array([bin(index).count('1') for index in range(2 ** n_qubits)])


def collective_dephasing_channel(n_qubits, alpha):
    """Gaussian averaged collective dephasing, rho_{s,s'} -> rho_{s,s'} exp(-alpha (w(s) - w(s'))^2).

    Args:
        n_qubits (int): The number of qubits.
        alpha (float): The dephasing strength, the variance parameter of the random phase.

    Returns:
        superoperator (Superoperator): The diagonal map.

    Raises:
        InvalidParameter: For negative alpha.

    """
    if alpha < 0:
        raise InvalidParameter(f'Dephasing strength must be nonnegative, got {alpha}')
    weights = hamming_weights(n_qubits)
    factors = np.exp(-alpha * np.subtract.outer(weights, weights) ** 2)
    return Superoperator(np.diag(factors.reshape(-1)))


def dephasing_kraus_channel(probability, qubits, n_qubits):
    """{sqrt(1 - p) I, sqrt(p) Z_q1 Z_q2 ...} acting on the listed qubits (0 based).

    Raises:
        InvalidParameter: If p lies outside [0, 1].

    """
    if not 0 <= probability <= 1:
        raise InvalidParameter(f'Probability must lie in [0, 1], got {probability}')
    flip = np.eye(2 ** n_qubits, dtype=complex)
    for qubit in qubits:
        flip = flip @ qubit_operator(SIGMA_Z, qubit, n_qubits)
    return KrausChannel([np.sqrt(1 - probability) * np.eye(2 ** n_qubits), np.sqrt(probability) * flip])


@dataclass(frozen=True)
class BathSpec:
    """Target dimension, operator norm and seed of the random bath operators."""

    bath_dim: int = DEFAULT_BATH_DIMENSION
    norm: float = DEFAULT_BATH_NORM
    seed: int = DEFAULT_SEED

    def __post_init__(self):
        if self.bath_dim < 1:
            raise InvalidParameter(f'Bath dimension must be positive, got {self.bath_dim}')
        if self.norm < 0:
            raise InvalidParameter(f'Bath operator norm must be nonnegative, got {self.norm}')


def random_bath_operator(bath, stream_index):
    """A Hermitian bath operator with operator norm ``bath.norm``, a pure function of seed and stream index.

    Each ``(seed, stream_index)`` pair seeds its own generator so draws are independent of evaluation order.

    """
    if bath.norm == 0:
        return np.zeros((bath.bath_dim, bath.bath_dim), dtype=complex)
    rng = np.random.default_rng([int(bath.seed) % 2 ** 64, int(stream_index)])
    operator_ = random_hermitian(rng, bath.bath_dim)
    return operator_ * (bath.norm / op_norm(operator_))


def _pure_dephasing(n_qubits, half_spin):
    scale = 0.5 if half_spin else 1.0
    return [scale * qubit_operator(SIGMA_Z, qubit, n_qubits) for qubit in range(n_qubits)]


def _collective_dephasing(n_qubits, half_spin):
    scale = 0.5 if half_spin else 1.0
    return [scale * collective_pauli('Z', n_qubits)]


def _collective_decoherence(n_qubits, half_spin):
    scale = 0.5 if half_spin else 1.0
    return [scale * collective_pauli(label, n_qubits) for label in 'XYZ']


def _linear_independent_baths(n_qubits, half_spin):
    scale = 0.5 if half_spin else 1.0
    return [scale * pauli_string(''.join(label if index == qubit else 'I' for index in range(n_qubits)))
            for qubit in range(n_qubits) for label in 'XYZ']


def _general(n_qubits, half_spin):  # pylint: disable=unused-argument
    return [pauli_string(''.join(label)) for label in itertools.product('IXYZ', repeat=n_qubits)
            if set(label) != {'I'}]


MODEL_TEMPLATES = {'pure_dephasing': _pure_dephasing,
                   'collective_dephasing': _collective_dephasing,
                   'collective_decoherence': _collective_decoherence,
                   'linear_independent_baths': _linear_independent_baths,
                   'general': _general}


def template_operators(template, n_qubits, half_spin=False, labels=None):
    """The system coupling operators of a named template.

    Args:
        template (str): A key of MODEL_TEMPLATES or ``'custom'``.
        n_qubits (int): The number of system qubits.
        half_spin (bool): Scale single qubit Paulis by 1/2 where the template uses spin operators.
        labels: Pauli labels such as ``'ZZ'`` for the custom template.

    Returns:
        operators (list): The Hermitian system operators S_a.

    Raises:
        InvalidParameter: For an unknown template or missing custom labels.

    """
    if template == 'custom':
        if not labels:
            raise InvalidParameter('The custom template needs a list of Pauli labels')
        if any(len(label) != n_qubits for label in labels):
            raise InvalidParameter(f'Custom Pauli labels must have length {n_qubits}')
        return [pauli_string(label) for label in labels]
    try:
        return MODEL_TEMPLATES[template](n_qubits, half_spin)
    except KeyError:
        raise InvalidParameter(f'Unknown model template "{template}", expected one of '
                               f'{sorted(MODEL_TEMPLATES) + ["custom"]}') from None


def build_model(template,  # pylint: disable=too-many-arguments
                n_qubits,
                bath_dim=DEFAULT_BATH_DIMENSION,
                coupling_norm=DEFAULT_COUPLING_NORM,
                bath_norm=DEFAULT_BATH_NORM,
                seed=DEFAULT_SEED,
                half_spin=False,
                labels=None):
    """Builds a seeded random model with ||H_SB|| = J and ||H_B|| = beta.

    Stream index 0 draws H_B and stream index ``k + 1`` draws the bath partner of the k-th system operator.

    Returns:
        model (HamiltonianModel): The model.

    """
    system_operators = template_operators(template, n_qubits, half_spin, labels)
    unit_bath = BathSpec(bath_dim, 1.0, seed)
    couplings = [(system, random_bath_operator(unit_bath, index + 1)) for index, system in enumerate(system_operators)]
    model = HamiltonianModel(n_qubits, bath_dim, couplings, half_spin=half_spin)
    norm = model.coupling_norm
    scale = coupling_norm / norm if norm > 0 else 0.0
    bath_hamiltonian = random_bath_operator(BathSpec(bath_dim, bath_norm, seed), 0)
    LOGGER.debug('Built %s model on %s qubits, bath dimension %s, seed %s', template, n_qubits, bath_dim, seed)
    return HamiltonianModel(n_qubits, bath_dim, [(system, scale * bath) for system, bath in couplings],
                            bath_hamiltonian=bath_hamiltonian, half_spin=half_spin)


MODEL_FIELDS = {'template': str, 'n_qubits': int, 'bath_dim': int, 'J': float, 'beta': float, 'seed': int,
                'half_spin': bool, 'bath_state': str, 'labels': list}


def validate_model_mapping(mapping, path=None):
    """Checks the fields of a ``[model]`` table and returns them with defaults filled in.

    Raises:
        ConfigurationError: Naming the offending field.

    """
    unknown = set(mapping) - set(MODEL_FIELDS)
    if unknown:
        raise ConfigurationError(f'Unknown model fields {sorted(unknown)}', field=sorted(unknown)[0], path=path)
    if 'template' not in mapping:
        raise ConfigurationError('Model template is required', field='template', path=path)
    settings = {'n_qubits': 1, 'bath_dim': DEFAULT_BATH_DIMENSION, 'J': DEFAULT_COUPLING_NORM,
                'beta': DEFAULT_BATH_NORM, 'seed': DEFAULT_SEED, 'half_spin': False, 'bath_state': 'mixed',
                'labels': None}
    settings.update(mapping)
    for field, type_ in MODEL_FIELDS.items():
        value = settings[field]
        if value is None:
            continue
        if type_ is float and isinstance(value, int) and not isinstance(value, bool):
            value = settings[field] = float(value)
        if not isinstance(value, type_) or (type_ is int and isinstance(value, bool)):
            raise ConfigurationError(f'Field has type {type(value).__name__}, expected {type_.__name__}',
                                     field=field, path=path)
    if settings['template'] not in MODEL_TEMPLATES and settings['template'] != 'custom':
        raise ConfigurationError(f'Unknown template "{settings["template"]}"', field='template', path=path)
    if settings['n_qubits'] < 1 or settings['bath_dim'] < 1:
        raise ConfigurationError('Dimensions must be positive', field='n_qubits', path=path)
    if settings['J'] < 0 or settings['beta'] < 0:
        raise ConfigurationError('Norms must be nonnegative', field='J', path=path)
    if settings['bath_state'] not in BATH_STATES:
        raise ConfigurationError(f'Bath state must be one of {BATH_STATES}', field='bath_state', path=path)
    return settings


def model_from_mapping(mapping, path=None):
    """Builds a model from a validated ``[model]`` table."""
    settings = validate_model_mapping(mapping, path)
    try:
        return build_model(settings['template'], settings['n_qubits'], settings['bath_dim'], settings['J'],
                           settings['beta'], settings['seed'], settings['half_spin'], settings['labels'])
    except InvalidParameter as error:
        raise ConfigurationError(str(error), field='labels', path=path) from None


def load_toml(path):
    """Parses a TOML file, translating parser errors into ConfigurationError with the line number."""
    try:
        return toml.loads(Path(path).read_text(encoding='utf-8'))
    except OSError as error:
        raise ConfigurationError(f'Unable to read configuration: {error}', path=path) from None
    except toml.TomlDecodeError as error:
        raise ConfigurationError(f'Invalid TOML: {error.msg}', line=error.lineno, path=path) from None


def load_model(path):
    """Loads a model description file with a ``[model]`` table.

    Raises:
        ConfigurationError: If the file is missing, unparsable or invalid.

    """
    document = load_toml(path)
    if 'model' not in document:
        raise ConfigurationError('Missing [model] table', field='model', path=path)
    return model_from_mapping(document['model'], path)
