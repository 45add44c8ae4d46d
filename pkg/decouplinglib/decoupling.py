#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: decoupling.py
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
Dynamical decoupling: pulse events and sequences, their simulation against a HamiltonianModel and the error
figures that quantify how well a sequence removes the system-bath coupling.

Events are kept in the order an operator product is written, so the last event acts first in time and
``simulate`` returns events[0] @ events[1] @ ... @ events[-1].

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import itertools
import logging
import math
from dataclasses import dataclass, field

import numpy as np

from .algebra import check_group_closure
from .codes import CodeSpace, pairwise_code
from .configuration import (ALGEBRAIC_TOLERANCE,
                            GROUP_TOLERANCE,
                            STRUCTURAL_TOLERANCE)
from .decouplinglibexceptions import (DimensionMismatch,
                                      GroupNotClosed,
                                      InvalidParameter,
                                      SequenceFormatError)
from .models import total_hamiltonian
from .numericcore import (as_matrix,
                          dagger,
                          expm_skew_hermitian,
                          global_phase,
                          is_hermitian,
                          is_unitary,
                          logm_unitary,
                          op_norm,
                          operator_basis,
                          pauli_string,
                          phase_aligned_difference,
                          polar_unitary,
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
LOGGER_BASENAME = 'decouplinglib.decoupling'
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())

NOISE_FLOOR = 1e3 * np.finfo(float).eps

LOGICAL_X_GENERATOR = (pauli_string('XX') + pauli_string('YY')) / 2
LOGICAL_Y_GENERATOR = (pauli_string('YX') - pauli_string('XY')) / 2
LOGICAL_Z_GENERATOR = (pauli_string('ZI') - pauli_string('IZ')) / 2
HYBRID_GENERATORS = {'Xbar': LOGICAL_X_GENERATOR, 'Zbar': LOGICAL_Z_GENERATOR}


def pulse_generator(name):
    """The Hermitian generator G of a named pulse, the pulse being exp(-i (pi/2) G) up to phase.

    Names are Pauli strings such as ``X`` or ``ZZ`` or the two qubit hybrid pulses ``Xbar`` and ``Zbar``.

    Raises:
        SequenceFormatError: For an unknown name.

    """
    if name in HYBRID_GENERATORS:
        return HYBRID_GENERATORS[name]
    if name and set(name) <= set('IXYZ'):
        return pauli_string(name)
    raise SequenceFormatError(f'Unknown pulse "{name}"')


def pulse_unitary(name):
    """The ideal pulse of a name: the Pauli string itself, or exp(-i (pi/2) G) for the hybrid pulses."""
    if name in HYBRID_GENERATORS:
        return expm_skew_hermitian(HYBRID_GENERATORS[name], math.pi / 2)
    return pulse_generator(name)


def pauli_label(unitary, tol=GROUP_TOLERANCE):
    """The Pauli string equal to a unitary up to phase, None when there is none."""
    unitary = np.asarray(unitary, dtype=complex)
    n_qubits = unitary.shape[0].bit_length() - 1
    if 2 ** n_qubits != unitary.shape[0]:
        return None
    for label in itertools.product('IXYZ', repeat=n_qubits):
        label = ''.join(label)
        if phase_aligned_difference(unitary, pauli_string(label)) < tol:
            return label
    return None


@dataclass(frozen=True, eq=False)
class PulseEvent:
    """One segment of a sequence: free evolution, an instantaneous ideal pulse or a finite width pulse.

    A free event lasts ``duration`` under the model Hamiltonian. An ideal event applies ``unitary`` (x) I_B.
    A real event evolves for ``duration`` under ``control`` (x) I_B plus the model Hamiltonian.

    """

    kind: str
    duration: float = 0.0
    unitary: np.ndarray = None
    control: np.ndarray = None
    name: str = None

    def __post_init__(self):
        if self.kind not in ('free', 'ideal', 'real'):
            raise InvalidParameter(f'Unknown event kind "{self.kind}"')
        if self.duration < 0:
            raise InvalidParameter(f'Durations must be nonnegative, got {self.duration}')
        if self.kind == 'ideal' and not is_unitary(self.unitary, STRUCTURAL_TOLERANCE):
            raise InvalidParameter('Ideal pulses must be unitary')
        if self.kind == 'real' and not is_hermitian(self.control, STRUCTURAL_TOLERANCE):
            raise InvalidParameter('Pulse controls must be Hermitian')

    @classmethod
    def free(cls, duration):
        """Free evolution for ``duration``."""
        return cls('free', float(duration))

    @classmethod
    def ideal(cls, unitary, name=None):
        """An instantaneous pulse, named after its Pauli label when none is given."""
        unitary = as_matrix(unitary)
        return cls('ideal', 0.0, unitary, name=name or pauli_label(unitary))

    @classmethod
    def named(cls, name):
        """An ideal pulse from the pulse library."""
        return cls.ideal(pulse_unitary(name), name)

    @classmethod
    def real(cls, generator, width, strength=None, name=None, tol=STRUCTURAL_TOLERANCE):
        """A constant amplitude pulse exp(-i width (strength G + H)) with width * strength = pi/2.

        Raises:
            InvalidParameter: If the given strength breaks width * strength = pi/2.

        """
        if width <= 0:
            raise InvalidParameter(f'Pulse width must be positive, got {width}')
        strength = math.pi / (2 * width) if strength is None else strength
        if abs(width * strength - math.pi / 2) > tol:
            raise InvalidParameter(f'Pulse area width * strength = {width * strength}, expected pi/2')
        return cls('real', float(width), control=strength * as_matrix(generator), name=name)

    @property
    def system_dimension(self):
        """The system dimension of a pulse, None for free evolution."""
        operator_ = self.unitary if self.kind == 'ideal' else self.control
        return None if operator_ is None else operator_.shape[0]

    @property
    def token(self):
        """Short symbol for pattern strings."""
        if self.kind == 'free':
            return 'f'
        return self.name or '?'


@dataclass(frozen=True, eq=False)
class PulseSequence:
    """An ordered product of events, written left to right as the operator product."""

    events: tuple
    name: str = 'sequence'
    level: int = None

    def __post_init__(self):
        object.__setattr__(self, 'events', tuple(self.events))
        dimensions = {event.system_dimension for event in self.events} - {None}
        if len(dimensions) > 1:
            raise DimensionMismatch(f'Pulses act on different system dimensions {sorted(dimensions)}')

    def __len__(self):
        return len(self.events)

    def __iter__(self):
        return iter(self.events)

    @property
    def total_duration(self):
        """Sum of free durations and real pulse widths."""
        return sum(event.duration for event in self.events)

    @property
    def free_segments(self):
        """The number of free evolution events."""
        return sum(1 for event in self.events if event.kind == 'free')

    @property
    def pattern(self):
        """Space separated event tokens, e.g. ``'Z f X f Z f X f'``."""
        return ' '.join(event.token for event in self.events)

    def __add__(self, other):
        return PulseSequence(self.events + other.events, self.name, self.level)


def simulate(sequence, model):
    """The joint unitary of a sequence, events[0] @ ... @ events[-1].

    Raises:
        DimensionMismatch: If a pulse does not act on the model's system.

    """
    hamiltonian = total_hamiltonian(model)
    identity = np.eye(model.bath_dim)
    free_cache = {}
    total = np.eye(model.dimension, dtype=complex)
    for event in sequence.events:
        if event.system_dimension not in (None, model.system_dim):
            raise DimensionMismatch(f'Pulse on dimension {event.system_dimension} does not match the model '
                                    f'system dimension {model.system_dim}')
        if event.kind == 'free':
            if event.duration not in free_cache:
                free_cache[event.duration] = expm_skew_hermitian(hamiltonian, event.duration)
            segment = free_cache[event.duration]
        elif event.kind == 'ideal':
            segment = tensor(event.unitary, identity)
        else:
            segment = expm_skew_hermitian(hamiltonian + tensor(event.control, identity), event.duration)
        total = total @ segment
    return total


def free_evolution(tau):
    """A single free segment."""
    return PulseSequence([PulseEvent.free(tau)], name='free')


def xy4(tau, ideal=True, delta=None, lambda_strength=None):
    """The universal single qubit cycle Z f X f Z f X f.

    Args:
        tau (float): The free evolution time between pulses.
        ideal (bool): Instantaneous pulses when True, finite width pulses otherwise.
        delta (float): The pulse width for real pulses.
        lambda_strength (float): The control amplitude, pi/(2 delta) when omitted.

    Raises:
        InvalidParameter: If real pulses are requested with delta * lambda != pi/2 or without a width.

    """
    if ideal:
        pulses = {name: PulseEvent.named(name) for name in 'XZ'}
    else:
        if delta is None:
            raise InvalidParameter('Real pulses need a width')
        pulses = {name: PulseEvent.real(pulse_generator(name), delta, lambda_strength, name=name) for name in 'XZ'}
    free = PulseEvent.free(tau)
    return PulseSequence([pulses['Z'], free, pulses['X'], free, pulses['Z'], free, pulses['X'], free], name='xy4')


def _check_group(group, tol):
    check_group_closure(group, tol)
    if phase_aligned_difference(group[0], np.eye(np.shape(group[0])[0])) > tol:
        raise InvalidParameter('The first group element must be the identity')


def _merge(events, canonical_group=None, tol=GROUP_TOLERANCE):
    """Multiplies runs of adjacent ideal pulses into one event and drops products equal to the identity.

    With ``canonical_group`` every product is replaced by the group element it equals up to phase and
    dropped when that element is the identity; otherwise products are kept exactly.

    """
    merged = []
    pending = None
    for event in list(events) + [None]:
        if event is not None and event.kind == 'ideal':
            pending = event.unitary if pending is None else pending @ event.unitary
            continue
        if pending is not None:
            identity = np.eye(pending.shape[0])
            if canonical_group is not None:
                match = next((element for element in canonical_group
                              if phase_aligned_difference(pending, element) < tol), None)
                if match is None:
                    raise GroupNotClosed('A merged pulse is not a group element')
                if phase_aligned_difference(match, identity) > tol:
                    merged.append(PulseEvent.ideal(match))
            elif np.max(np.abs(pending - identity)) > ALGEBRAIC_TOLERANCE:
                merged.append(PulseEvent.ideal(pending))
            pending = None
        if event is not None:
            merged.append(event)
    return merged


def _conjugated(group, inner):
    """(g_K^dagger U g_K) ... (g_0^dagger U g_0) as raw events, the g_0 term rightmost."""
    events = []
    for element in reversed(group):
        events.append(PulseEvent.ideal(dagger(element)))
        events.extend(inner)
        events.append(PulseEvent.ideal(element))
    return events


def symmetrize(group, tau, tol=GROUP_TOLERANCE):
    """The symmetrization cycle prod_j g_j^dagger f g_j of total time |G| tau.

    Adjacent pulses are multiplied exactly, phases included, so the sequence reproduces the product literally.

    Raises:
        GroupNotClosed: If the group is not closed up to phase.
        InvalidParameter: If the first element is not the identity.

    """
    group = [as_matrix(element) for element in group]
    _check_group(group, tol)
    events = _merge(_conjugated(group, [PulseEvent.free(tau)]), tol=tol)
    return PulseSequence(events, name='symmetrize')


def cdd(base_group, level, tau, tol=GROUP_TOLERANCE):
    """Concatenated decoupling U(m) = prod_j g_j^dagger U(m-1) g_j with U(0) free evolution for tau.

    Merged pulses are canonicalized to group elements with phases discarded, and merges equal to the identity
    are removed, so level m has |G|^m free segments and total time |G|^m tau.

    Raises:
        InvalidParameter: For a level below 1.

    """
    if level < 1:
        raise InvalidParameter(f'Concatenation level must be at least 1, got {level}')
    base_group = [as_matrix(element) for element in base_group]
    _check_group(base_group, tol)
    events = [PulseEvent.free(tau)]
    for _ in range(level):
        events = _merge(_conjugated(base_group, events), base_group, tol)
    LOGGER.debug('CDD level %s has %s events', level, len(events))
    return PulseSequence(events, name=f'cdd{level}', level=level)


@dataclass
class DecouplingErrorReport:
    """Error figures of a joint unitary against the ideal I_S (x) V."""

    total_unitary: np.ndarray
    effective_hamiltonian: np.ndarray
    system_error: float
    bath_distance: float
    duration: float
    components: dict = field(default_factory=dict)

    @property
    def error_phase(self):
        """system_error * T, the dimensionless error of the whole cycle."""
        return self.system_error * self.duration


def _bath_components(hamiltonian, basis, system_dimension, bath_dimension):
    reshaped = hamiltonian.reshape(system_dimension, bath_dimension, system_dimension, bath_dimension)
    return {label: np.einsum('li,laib->ab', np.conj(operator_), reshaped) / system_dimension
            for label, operator_ in basis}


def decoupling_error(unitary, duration, layout, code=None):
    """Extracts H_eff = i log(U)/T and measures its non-identity system content.

    The global phase of U is removed before the logarithm. H_eff is expanded as sum_a P_a (x) B_a over an
    orthogonal system operator basis (Pauli strings on qubits) and the system error is sum over a != I of
    ||B_a||. With a code, U is first compressed to the code, (P^dagger (x) I) U (P (x) I), replaced by its unitary
    polar factor, and H_eff is expanded in the code's own operator basis. The bath distance is ||U - I (x) V*||
    for V* the unitary polar factor of the normalized partial trace of U over the system.

    Args:
        unitary: The joint unitary on system (x) bath.
        duration (float): The total duration T.
        layout (TensorLayout): System factors followed by the bath factor.
        code (CodeSpace): Optional code restricting the analysis.

    Returns:
        report (DecouplingErrorReport): The error figures.

    Raises:
        BranchAmbiguity: If an eigenphase of U reaches the branch cut.
        InvalidParameter: For a nonpositive duration.

    """
    if duration <= 0:
        raise InvalidParameter(f'Duration must be positive, got {duration}')
    unitary = as_matrix(unitary)
    layout.check(unitary)
    bath_dimension = layout.factor_dims[-1]
    system_dimension = layout.dimension // bath_dimension
    compared = unitary
    if code is not None:
        if code.isometry.shape[0] != system_dimension:
            raise DimensionMismatch(f'Code on dimension {code.isometry.shape[0]} does not match {system_dimension}')
        lifted = tensor(code.isometry, np.eye(bath_dimension))
        compared = polar_unitary(dagger(lifted) @ unitary @ lifted)
        system_dimension = code.dimension
    stripped = compared * np.conj(global_phase(compared))
    hamiltonian = logm_unitary(stripped) / duration
    basis = operator_basis(system_dimension)
    components = _bath_components(hamiltonian, basis, system_dimension, bath_dimension)
    norms = {label: op_norm(component) for label, component in components.items()}
    identity_label = basis[0][0]
    system_error = float(sum(norm for label, norm in norms.items() if label != identity_label))
    reduced = np.einsum('iaib->ab', compared.reshape(system_dimension, bath_dimension,
                                                    system_dimension, bath_dimension)) / system_dimension
    bath_unitary = polar_unitary(reduced)
    bath_distance = op_norm(compared - tensor(np.eye(system_dimension), bath_unitary))
    return DecouplingErrorReport(unitary, hamiltonian, system_error, bath_distance, duration, norms)


def fit_slope(abscissae, ordinates, floor=NOISE_FLOOR):
    """Least squares slope of log(y) against log(x), ignoring points with y below ``floor``.

    Raises:
        InvalidParameter: If fewer than two points survive.

    """
    points = [(x, y) for x, y in zip(abscissae, ordinates) if y >= floor and x > 0]
    if len(points) < 2:
        raise InvalidParameter('A slope needs at least two points above the noise floor')
    logs = np.log(np.array(points))
    slope, _ = np.polyfit(logs[:, 0], logs[:, 1], 1)
    return float(slope)


def pulse_damage_bound(delta, coupling_norm):
    """(pi/2) delta ||H_SB||, the operator norm bound on the damage term of a finite width pulse."""
    return math.pi / 2 * delta * coupling_norm


def smallness_ratios(delta, tau, coupling_norm, bath_norm):
    """The ratios delta/tau and tau (||H_SB|| + ||H_B||) that must both stay small for real pulses."""
    return delta / tau, tau * (coupling_norm + bath_norm)


@dataclass
class ScanRow:
    """One finite width point of a real pulse scan."""

    delta: float
    strength: float
    system_error: float
    error_phase: float
    bath_distance: float
    duration: float


def real_pulse_sequence(tau, delta, pulse='X'):
    """The cycle P f P f with finite width pulses P of area pi/2."""
    real = PulseEvent.real(pulse_generator(pulse), delta, name=pulse)
    free = PulseEvent.free(tau)
    return PulseSequence([real, free, real, free], name='realpulse')


def real_pulse_error_scan(model, tau, deltas, pulse='X'):
    """System error of P f P f with real pulses as a function of the pulse width at fixed tau.

    Returns:
        rows (list): One ScanRow per width, with strength pi/(2 delta).

    """
    rows = []
    for delta in deltas:
        sequence = real_pulse_sequence(tau, delta, pulse)
        report = decoupling_error(simulate(sequence, model), sequence.total_duration, model.layout)
        rows.append(ScanRow(delta, math.pi / (2 * delta), report.system_error, report.error_phase,
                            report.bath_distance, sequence.total_duration))
        LOGGER.debug('Real pulse width %s gives system error %s', delta, report.system_error)
    return rows


@dataclass
class HybridResult:
    """The three hybrid sequences and the error classification against Span{|01>, |10>}."""

    u1: PulseSequence
    u2: PulseSequence
    u3: PulseSequence
    classification: list
    code: CodeSpace


HYBRID_ERROR_OPERATORS = {'I': pauli_string('II'),
                          'Z1+Z2': pauli_string('ZI') + pauli_string('IZ'),
                          'Z1Z2': pauli_string('ZZ'),
                          'XX-YY': pauli_string('XX') - pauli_string('YY'),
                          'XY+YX': pauli_string('XY') + pauli_string('YX'),
                          'sx_bar': LOGICAL_X_GENERATOR,
                          'sy_bar': LOGICAL_Y_GENERATOR,
                          'sz_bar': LOGICAL_Z_GENERATOR}


def classify_error(operator_, code, tol=STRUCTURAL_TOLERANCE):
    """``'leakage'`` when the operator maps codewords out, ``'unchanged'`` when it acts as a scalar on the code,
    ``'logical'`` otherwise."""
    if code.leakage(operator_) > tol:
        return 'leakage'
    restricted = code.restrict(operator_)
    scalar = np.trace(restricted) / code.dimension
    if np.max(np.abs(restricted - scalar * np.eye(code.dimension))) <= tol:
        return 'unchanged'
    return 'logical'


def hybrid_classification(code=None):
    """Classifies the 16 two qubit Pauli strings and the named combinations against the code.

    Returns:
        rows (list): ``(label, class)`` pairs, Pauli strings first.

    """
    code = code or pairwise_code(1)
    rows = [(''.join(label), classify_error(pauli_string(''.join(label)), code))
            for label in itertools.product('IXYZ', repeat=2)]
    rows.extend((label, classify_error(operator_, code)) for label, operator_ in HYBRID_ERROR_OPERATORS.items()
                if label != 'I')
    return rows


def hybrid_ddfs_two_qubit(tau):
    """Decoupling on the two qubit DFS Span{|01>, |10>}.

    U1 = Xbar f Xbar f, U2 = ZZ U1 ZZ U1 and U3 = Zbar U2 Zbar U2 of duration 8 tau, with
    Xbar = exp(-i (pi/2)(XX + YY)/2) and Zbar = exp(-i (pi/2)(Z1 - Z2)/2).

    """
    free = PulseEvent.free(tau)
    logical_x, parity, logical_z = (PulseEvent.named(name) for name in ('Xbar', 'ZZ', 'Zbar'))
    u1 = PulseSequence([logical_x, free, logical_x, free], name='hybrid_u1')
    u2 = PulseSequence((parity,) + u1.events + (parity,) + u1.events, name='hybrid_u2')
    u3 = PulseSequence((logical_z,) + u2.events + (logical_z,) + u2.events, name='hybrid_u3')
    return HybridResult(u1, u2, u3, hybrid_classification(), pairwise_code(1))


@dataclass
class BoundRow:
    """One concatenation level of the error phase bound."""

    level: int
    duration: float
    bound: float


@dataclass
class BoundTable:
    """Bound rows plus the optimal concatenation level."""

    rows: list
    optimal_level: float
    optimal_level_floor: int
    concatenate: bool

    @property
    def verdict(self):
        """Human readable recommendation."""
        if not self.concatenate:
            return 'do not concatenate'
        return f'concatenate to level {self.optimal_level_floor}'


def cdd_bound_and_optimum(coupling_norm, bath_norm, tau, max_level):
    """Rows T_m = 4^m tau and bound T_m 2^(m^2) (beta tau)^m J with m_opt = -log(4 beta tau)/(2 log 2).

    Raises:
        InvalidParameter: Unless 0 < J < beta, tau > 0 and max_level >= 1.

    """
    if not 0 < coupling_norm < bath_norm:
        raise InvalidParameter(f'The bound assumes 0 < J < beta, got J={coupling_norm}, beta={bath_norm}')
    if tau <= 0 or max_level < 1:
        raise InvalidParameter('Need a positive tau and at least one level')
    rows = [BoundRow(level, 4 ** level * tau, 4 ** level * tau * 2.0 ** (level * level)
                     * (bath_norm * tau) ** level * coupling_norm)
            for level in range(1, max_level + 1)]
    optimal = -math.log(4 * bath_norm * tau) / (2 * math.log(2))
    return BoundTable(rows, optimal, math.floor(optimal + ALGEBRAIC_TOLERANCE), optimal > 0)


@dataclass
class FixedTimeRow:
    """One level of the bound at fixed total time."""

    level: int
    bound: float
    decreasing: bool


def fixed_time_bound(coupling_norm, bath_norm, total_time, max_level):
    """Bound J T (beta T / 2^m)^m at fixed total time, flagging the regime 2^m > beta T where it decreases."""
    if total_time <= 0 or max_level < 1:
        raise InvalidParameter('Need a positive total time and at least one level')
    return [FixedTimeRow(level, coupling_norm * total_time * (bath_norm * total_time / 2 ** level) ** level,
                         2 ** level > bath_norm * total_time)
            for level in range(1, max_level + 1)]


def parse_sequence(text):
    """Parses the one event per line format: ``free <tau>``, ``pulse <name>`` or ``realpulse <name> <delta>``.

    Lines starting with ``#`` and blank lines are ignored.

    Raises:
        SequenceFormatError: Naming the offending line.

    """
    events = []
    for number, line in enumerate(text.splitlines(), start=1):
        fields = line.split()
        if not fields or fields[0].startswith('#'):
            continue
        try:
            if fields[0] == 'free' and len(fields) == 2:
                events.append(PulseEvent.free(float(fields[1])))
            elif fields[0] == 'pulse' and len(fields) == 2:
                events.append(PulseEvent.named(fields[1]))
            elif fields[0] == 'realpulse' and len(fields) == 3:
                events.append(PulseEvent.real(pulse_generator(fields[1]), float(fields[2]), name=fields[1]))
            else:
                raise SequenceFormatError(f'unrecognized event "{line.strip()}"')
        except (ValueError, InvalidParameter) as error:
            raise SequenceFormatError(f'Line {number}: {error}') from None
    try:
        return PulseSequence(events, name='parsed')
    except DimensionMismatch as error:
        raise SequenceFormatError(str(error)) from None


def format_sequence(sequence):
    """Renders a sequence in the text format; pulse phases are not represented."""
    lines = []
    for event in sequence.events:
        if event.kind == 'free':
            lines.append(f'free {event.duration!r}')
        elif event.name is None:
            raise SequenceFormatError('Only named pulses can be written')
        elif event.kind == 'ideal':
            lines.append(f'pulse {event.name}')
        else:
            lines.append(f'realpulse {event.name} {event.duration!r}')
    return '\n'.join(lines) + '\n'
