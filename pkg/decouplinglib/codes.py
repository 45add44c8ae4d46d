#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: codes.py
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
Decoherence-free subspaces and noiseless subsystems on small qubit registers.

Conventions: qubit 1 is the most significant bit of a basis label, ``|0>`` is spin up (Z = +1) and the
collective dephasing eigenvalue is c_z = #0 - #1. Exchange operators take the physical 1 based qubit labels.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import itertools
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .configuration import (ALGEBRAIC_TOLERANCE,
                            CHECK_TOLERANCE,
                            MAXIMUM_RATE_QUBITS,
                            MAXIMUM_TOWER_QUBITS)
from .decouplinglibexceptions import (DimensionMismatch,
                                      InvalidIndex,
                                      InvalidParameter)
from .matrixio import load_matrices, save_matrices
from .numericcore import (SIGMA_X,
                          SIGMA_Y,
                          SIGMA_Z,
                          StateVector,
                          collective_pauli,
                          commutator,
                          complement_isometry,
                          dagger,
                          hs_inner,
                          ket,
                          op_norm,
                          polar_unitary,
                          qubit_operator)

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
LOGGER_BASENAME = 'decouplinglib.codes'
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())

# Overall multiplet signs that replace the first-positive normalization. The J = 1/2 multiplet reached by
# the path ++- is the negative of its raw Condon-Shortley form, so its m = 1/2 member reads
# (|010> + |100> - 2|001>)/sqrt(6) with the amplitude of |001> negative, the published three qubit state.
TOWER_SIGN_OVERRIDES = {'++-': -1}


class CodeSpace:
    """An isometry from a logical space into the physical space of ``n_qubits`` qubits.

    Args:
        n_qubits (int): The number of physical qubits.
        isometry: The 2^n x d matrix whose orthonormal columns are the codewords.
        labels: One label per column, defaults to the column index.
        name (str): A short name for reports and files.
        subsystem_dims (tuple): ``(logical, gauge)`` factor dimensions for a noiseless subsystem whose columns
            are ordered logical major, None for a plain subspace.
        tol (float): Orthonormality tolerance.

    """

    def __init__(self,  # pylint: disable=too-many-arguments
                 n_qubits,
                 isometry,
                 labels=None,
                 name=None,
                 subsystem_dims=None,
                 tol=ALGEBRAIC_TOLERANCE):
        isometry = np.array(isometry, dtype=complex)
        if isometry.ndim == 1:
            isometry = isometry.reshape(-1, 1)
        if isometry.shape[0] != 2 ** n_qubits:
            raise DimensionMismatch(f'Isometry has {isometry.shape[0]} rows, expected {2 ** n_qubits}')
        gram = dagger(isometry) @ isometry
        deviation = np.max(np.abs(gram - np.eye(isometry.shape[1])), initial=0.0)
        if deviation > tol:
            raise InvalidParameter(f'Code columns are not orthonormal, deviation {deviation}')
        if subsystem_dims is not None and math.prod(subsystem_dims) != isometry.shape[1]:
            raise DimensionMismatch(f'Subsystem factors {subsystem_dims} do not match {isometry.shape[1]} columns')
        isometry.flags.writeable = False
        self.n_qubits = n_qubits
        self.isometry = isometry
        self.labels = tuple(labels) if labels is not None else tuple(range(isometry.shape[1]))
        if len(self.labels) != isometry.shape[1]:
            raise DimensionMismatch('Each code column needs exactly one label')
        self.name = name
        self.subsystem_dims = subsystem_dims

    def __repr__(self):
        return f'CodeSpace(name={self.name!r}, n_qubits={self.n_qubits}, dimension={self.dimension})'

    @property
    def dimension(self):
        """The number of codewords."""
        return self.isometry.shape[1]

    @property
    def projector(self):
        """P P^dagger."""
        return self.isometry @ dagger(self.isometry)

    @property
    def complement(self):
        """An isometry onto the orthogonal complement of the code."""
        return complement_isometry(self.isometry)

    def codeword(self, index):
        """The codeword in column ``index`` as a StateVector."""
        return StateVector(self.isometry[:, index])

    def encode(self, logical):
        """Maps logical amplitudes to the physical state vector."""
        logical = np.asarray(logical, dtype=complex).reshape(-1)
        if logical.size != self.dimension:
            raise DimensionMismatch(f'Expected {self.dimension} logical amplitudes, got {logical.size}')
        return self.isometry @ logical

    def restrict(self, operator_):
        """P^dagger A P."""
        return dagger(self.isometry) @ operator_ @ self.isometry

    def leakage(self, operator_):
        """||(I - P P^dagger) A P||, how far A maps codewords out of the code."""
        return op_norm(operator_ @ self.isometry - self.isometry @ self.restrict(operator_))


def save_code(path, code):
    """Writes a code isometry in the text matrix format."""
    save_matrices(path, [(code.name or 'code', code.isometry)],
                  comments=[f'n_qubits {code.n_qubits}', f'labels {list(code.labels)}'])


def load_code(path, name=None):
    """Reads a code isometry written by save_code or by hand.

    Raises:
        MatrixFormatError: If the file is malformed.
        DimensionMismatch: If the row count is not a power of two.

    """
    stored_name, isometry = load_matrices(path)[0]
    n_qubits = isometry.shape[0].bit_length() - 1
    if 2 ** n_qubits != isometry.shape[0]:
        raise DimensionMismatch(f'Code isometry has {isometry.shape[0]} rows, not a power of two')
    return CodeSpace(n_qubits, isometry, name=name or stored_name, tol=CHECK_TOLERANCE)


def collective_spin_ops(n_qubits, half_spin=False):
    """Total spin operators S_a = sum_i sigma_i^a and S^2.

    Args:
        n_qubits (int): The number of qubits.
        half_spin (bool): Use spin operators sigma/2, so S^2 has eigenvalues J(J+1).

    Returns:
        operators (tuple): S_x, S_y, S_z and S^2.

    """
    if n_qubits < 1:
        raise InvalidParameter(f'Need at least one qubit, got {n_qubits}')
    scale = 0.5 if half_spin else 1.0
    s_x, s_y, s_z = (scale * collective_pauli(label, n_qubits) for label in 'XYZ')
    return s_x, s_y, s_z, s_x @ s_x + s_y @ s_y + s_z @ s_z


def collective_ladder_ops(n_qubits, half_spin=False):
    """S_+ = (S_x - i S_y)/2 and S_- = (S_x + i S_y)/2 so that S_x = S_+ + S_- and S_y = i(S_+ - S_-)."""
    s_x, s_y, _, _ = collective_spin_ops(n_qubits, half_spin)
    return (s_x - 1j * s_y) / 2, (s_x + 1j * s_y) / 2


def basis_labels(n_qubits):
    """All bit strings of length n in basis order."""
    return [''.join(bits) for bits in itertools.product('01', repeat=n_qubits)]


def dephasing_dfs_enumerate(n_qubits, half_spin=False):
    """The collective dephasing decoherence-free subspaces, one per S_z eigenvalue.

    Returns:
        codes (list): CodeSpace objects ordered by descending c_z, each spanned by the basis states with
            (n + c_z)/2 zeros in basis order.

    """
    if n_qubits < 1:
        raise InvalidParameter(f'Need at least one qubit, got {n_qubits}')
    labels = basis_labels(n_qubits)
    codes = []
    for zeros in range(n_qubits, -1, -1):
        c_z = 2 * zeros - n_qubits
        eigenvalue = c_z / 2 if half_spin else c_z
        members = [label for label in labels if label.count('0') == zeros]
        isometry = np.column_stack([ket(label) for label in members])
        codes.append(CodeSpace(n_qubits, isometry, labels=[eigenvalue] * len(members), name=f'c_z={eigenvalue:g}'))
    return codes


def _twice(spin):
    twice = Fraction(spin) * 2
    if twice.denominator != 1 or twice < 0:
        raise InvalidParameter(f'Spin {spin} is not a nonnegative half integer')
    return int(twice)


def bratteli_paths(n_qubits, spin):
    """Number of Bratteli walks from the origin to (n, J), the multiplicity n_J of spin J in n qubits.

    Returns:
        count (int): The walk count, 0 for an infeasible vertex.

    """
    target = _twice(spin)
    counts = {0: 1}
    for _ in range(n_qubits):
        stepped = {}
        for twice_j, count in counts.items():
            stepped[twice_j + 1] = stepped.get(twice_j + 1, 0) + count
            if twice_j > 0:
                stepped[twice_j - 1] = stepped.get(twice_j - 1, 0) + count
        counts = stepped
    return counts.get(target, 0)


def multiplicity_formula(n_qubits, spin):
    """(2J+1) N! / ((N/2 + 1 + J)! (N/2 - J)!), 0 for an infeasible vertex."""
    twice_j = _twice(spin)
    if twice_j > n_qubits or (n_qubits - twice_j) % 2:
        return 0
    return ((twice_j + 1) * math.factorial(n_qubits)
            // (math.factorial((n_qubits + 2 + twice_j) // 2) * math.factorial((n_qubits - twice_j) // 2)))


def allowed_spins(n_qubits):
    """Total spins reachable by n qubits in ascending order."""
    return [Fraction(twice_j, 2) for twice_j in range(n_qubits % 2, n_qubits + 1, 2)]


def decoherence_dfs_dimension(n_qubits):
    """d_N = N!/((N/2)!(N/2+1)!), the singlet multiplicity, for even N.

    Raises:
        InvalidParameter: For odd N, which has no singlet.

    """
    if n_qubits % 2:
        raise InvalidParameter(f'Collective decoherence singlets need an even qubit count, got {n_qubits}')
    half = n_qubits // 2
    return math.factorial(n_qubits) // (math.factorial(half) * math.factorial(half + 1))


def _check_rate_range(n_qubits):
    if not 1 <= n_qubits <= MAXIMUM_RATE_QUBITS:
        raise InvalidParameter(f'Rate tables cover 1 to {MAXIMUM_RATE_QUBITS} qubits, got {n_qubits}')


def dephasing_rate(n_qubits):
    """Exact rate of the largest collective dephasing DFS and its asymptote 1 - log2(N)/(2N).

    Returns:
        rate (tuple): Dimension, exact rate and asymptote.

    """
    _check_rate_range(n_qubits)
    dimension = math.comb(n_qubits, n_qubits // 2)
    return dimension, math.log2(dimension) / n_qubits, 1 - 0.5 * math.log2(n_qubits) / n_qubits


def decoherence_rate(n_qubits):
    """Rate of the collective decoherence singlet DFS for even N.

    Returns:
        rate (tuple): Dimension, exact rate and the asymptote 1 - 3 log2(N)/(2N).

    """
    _check_rate_range(n_qubits)
    dimension = decoherence_dfs_dimension(n_qubits)
    return dimension, math.log2(dimension) / n_qubits, 1 - 1.5 * math.log2(n_qubits) / n_qubits


def _path_key(path):
    return path.replace('-', '0').replace('+', '1')


def _couple(lower, twice_j, up):
    """Couples a spin j multiplet (dict of 2m to vector) with one more qubit, Condon-Shortley phases."""
    j = Fraction(twice_j, 2)
    spin = j + Fraction(1, 2) if up else j - Fraction(1, 2)
    size = next(iter(lower.values())).size * 2
    zero = np.zeros(size // 2, dtype=complex)
    spin_up, spin_down = ket('0'), ket('1')
    result = {}
    for twice_m in range(-int(2 * spin), int(2 * spin) + 1, 2):
        m = Fraction(twice_m, 2)
        from_up = lower.get(twice_m - 1, zero)
        from_down = lower.get(twice_m + 1, zero)
        if up:
            first = math.sqrt((j + m + Fraction(1, 2)) / (2 * j + 1))
            second = math.sqrt((j - m + Fraction(1, 2)) / (2 * j + 1))
        else:
            first = -math.sqrt((j - m + Fraction(1, 2)) / (2 * j + 1))
            second = math.sqrt((j + m + Fraction(1, 2)) / (2 * j + 1))
        result[twice_m] = first * np.kron(from_up, spin_up) + second * np.kron(from_down, spin_down)
    return result


class SpinTowerBasis:
    """The total spin basis |J, lambda, m> of n qubits built by coupling one qubit at a time.

    Paths are the step strings of the Bratteli walk (``'+'`` up, ``'-'`` down, first step always up). For each
    J they are ordered with a down step before an up step, and lambda is the position in that order. Each
    multiplet carries Condon-Shortley relative phases; its overall sign makes the first nonzero amplitude of the
    m = J member positive, except for the multiplets listed in TOWER_SIGN_OVERRIDES whose sign is fixed to the
    published three qubit states. Overrides only flip a whole multiplet, so the lowering relations between its
    members are untouched.

    """

    def __init__(self, n_qubits):
        if not 1 <= n_qubits <= MAXIMUM_TOWER_QUBITS:
            raise InvalidParameter(f'Spin towers are built for 1 to {MAXIMUM_TOWER_QUBITS} qubits, got {n_qubits}')
        self.n_qubits = n_qubits
        raw = {'+': {1: ket('0'), -1: ket('1')}}
        for _ in range(n_qubits - 1):
            coupled = {}
            for path, multiplet in raw.items():
                twice_j = max(multiplet)
                coupled[path + '+'] = _couple(multiplet, twice_j, up=True)
                if twice_j > 0:
                    coupled[path + '-'] = _couple(multiplet, twice_j, up=False)
            raw = coupled
        self.paths = {}
        self.states = {}
        for twice_j in sorted({max(multiplet) for multiplet in raw.values()}):
            spin = Fraction(twice_j, 2)
            members = sorted((path for path, multiplet in raw.items() if max(multiplet) == twice_j), key=_path_key)
            for index, path in enumerate(members):
                self.paths[(spin, index)] = path
                sign = self._sign(path, raw[path][twice_j])
                for twice_m, vector in raw[path].items():
                    self.states[(spin, index, Fraction(twice_m, 2))] = StateVector(sign * vector)
        LOGGER.debug('Built spin tower on %s qubits with %s multiplets', n_qubits, len(self.paths))

    @staticmethod
    def _sign(path, highest):
        if path in TOWER_SIGN_OVERRIDES:
            return TOWER_SIGN_OVERRIDES[path]
        leading = highest[np.flatnonzero(np.abs(highest) > ALGEBRAIC_TOLERANCE)[0]]
        return 1 if leading.real > 0 else -1

    def __len__(self):
        return len(self.states)

    def state(self, spin, index, m):
        """The StateVector |J, lambda, m>.

        Raises:
            InvalidIndex: If the label does not exist.

        """
        try:
            return self.states[(Fraction(spin), index, Fraction(m))]
        except KeyError:
            raise InvalidIndex(f'No state |J={spin}, lambda={index}, m={m}> on {self.n_qubits} qubits') from None

    def multiplicity(self, spin):
        """The number of paths n_J ending at spin J."""
        return sum(1 for total, _ in self.paths if total == Fraction(spin))

    def multiplet(self, spin, index):
        """Columns |J, lambda, m> for m = -J..J as a 2^n x (2J+1) matrix."""
        spin = Fraction(spin)
        return np.column_stack([self.state(spin, index, Fraction(twice_m, 2)).amplitudes
                                for twice_m in range(-int(2 * spin), int(2 * spin) + 1, 2)])

    @property
    def labels(self):
        """Every (J, lambda, m) label ordered by J, then lambda, then m."""
        return sorted(self.states)

    @property
    def matrix(self):
        """The unitary whose columns are the basis states in label order."""
        return np.column_stack([self.states[label].amplitudes for label in self.labels])


def spin_tower(n_qubits):
    """Builds the SpinTowerBasis of n qubits."""
    return SpinTowerBasis(n_qubits)


def _singlet():
    return (ket('01') - ket('10')) / math.sqrt(2)


def _triplets():
    return ket('00'), (ket('01') + ket('10')) / math.sqrt(2), ket('11')


def four_qubit_dfs():
    """The two singlets of four qubits under collective decoherence.

    |0> = |s>|s> and |1> = (|t+>|t-> + |t->|t+> - |t0>|t0>)/sqrt(3) on the qubit pairs (1,2) and (3,4).

    """
    singlet = _singlet()
    plus, zero, minus = _triplets()
    logical_zero = np.kron(singlet, singlet)
    logical_one = (np.kron(plus, minus) + np.kron(minus, plus) - np.kron(zero, zero)) / math.sqrt(3)
    return CodeSpace(4, np.column_stack([logical_zero, logical_one]), labels=('0', '1'), name='four_qubit_dfs')


def three_qubit_ns_code():
    """The spin 1/2 noiseless subsystem of three qubits, logical information in lambda and gauge in m.

    Columns are ordered (lambda=0, m=-1/2), (lambda=0, m=+1/2), (lambda=1, m=-1/2), (lambda=1, m=+1/2).

    """
    tower = spin_tower(3)
    half = Fraction(1, 2)
    labels = [(half, index, m) for index in (0, 1) for m in (-half, half)]
    isometry = np.column_stack([tower.state(*label).amplitudes for label in labels])
    return CodeSpace(3, isometry, labels=labels, name='three_qubit_ns', subsystem_dims=(2, 2))


def exchange_op(n_qubits, first, second):
    """The permutation matrix swapping physical qubits ``first`` and ``second`` (1 based).

    Raises:
        InvalidIndex: If an index is out of range or both indices coincide.

    """
    if not (1 <= first <= n_qubits and 1 <= second <= n_qubits) or first == second:
        raise InvalidIndex(f'Invalid exchange ({first}, {second}) on {n_qubits} qubits')
    dimension = 2 ** n_qubits
    matrix = np.zeros((dimension, dimension), dtype=complex)
    for index, label in enumerate(basis_labels(n_qubits)):
        bits = list(label)
        bits[first - 1], bits[second - 1] = bits[second - 1], bits[first - 1]
        matrix[int(''.join(bits), 2), index] = 1
    return matrix


def heisenberg_exchange(n_qubits, first, second):
    """(I + sigma_i . sigma_j)/2 for 1 based qubits, equal to the exchange operator."""
    dot = sum(qubit_operator(pauli, first - 1, n_qubits) @ qubit_operator(pauli, second - 1, n_qubits)
              for pauli in (SIGMA_X, SIGMA_Y, SIGMA_Z))
    return (np.eye(2 ** n_qubits) + dot) / 2


def logical_paulis_4qubit():
    """Exchange built logical operators of four_qubit_dfs: Z = -E12, X = (E23 - E13)/sqrt(3), Y = (i/2)[X, Z]."""
    logical_z = -exchange_op(4, 1, 2)
    logical_x = (exchange_op(4, 2, 3) - exchange_op(4, 1, 3)) / math.sqrt(3)
    logical_y = 0.5j * commutator(logical_x, logical_z)
    return logical_z, logical_x, logical_y


def pairwise_code(n_pairs):
    """Span{|01>, |10>} on each qubit pair with |0> = |01> and |1> = |10>, logical bits in binary order."""
    if n_pairs < 1:
        raise InvalidParameter(f'Need at least one pair, got {n_pairs}')
    pair = {'0': '01', '1': '10'}
    labels = [''.join(bits) for bits in itertools.product('01', repeat=n_pairs)]
    isometry = np.column_stack([ket(''.join(pair[bit] for bit in label)) for label in labels])
    return CodeSpace(2 * n_pairs, isometry, labels=labels, name='pairwise')


def pairwise_logical_ops(n_pairs):
    """(Z_i, X_i) for each pair, Z_i = Z on the first qubit of the pair and X_i = X X on both."""
    if n_pairs < 1:
        raise InvalidParameter(f'Need at least one pair, got {n_pairs}')
    n_qubits = 2 * n_pairs
    return [(qubit_operator(SIGMA_Z, 2 * pair, n_qubits),
             qubit_operator(SIGMA_X, 2 * pair, n_qubits) @ qubit_operator(SIGMA_X, 2 * pair + 1, n_qubits))
            for pair in range(n_pairs)]


def pairwise_encoded_hamiltonian(omega_z, omega_x, omega_zz=None):
    """sum_i (w_z Z_i + w_x X_i) + sum_{i<j} W_ij Z_i Z_j over paired logical qubits.

    Args:
        omega_z: One Z strength per pair.
        omega_x: One X strength per pair.
        omega_zz: A square matrix of ZZ strengths, only the upper triangle is read.

    Returns:
        hamiltonian (numpy.ndarray): A Hermitian matrix on 2 * pairs qubits.

    """
    if len(omega_z) != len(omega_x):
        raise DimensionMismatch('Need one Z and one X strength per pair')
    operators = pairwise_logical_ops(len(omega_z))
    hamiltonian = sum(strength_z * logical_z + strength_x * logical_x
                      for (logical_z, logical_x), strength_z, strength_x in zip(operators, omega_z, omega_x))
    if omega_zz is not None:
        for first, second in itertools.combinations(range(len(operators)), 2):
            hamiltonian = hamiltonian + omega_zz[first][second] * operators[first][0] @ operators[second][0]
    return hamiltonian


def even_weight_stabilized_code(n_qubits):
    """Codewords (|r> + |r complement>)/sqrt(2) fixed by {I, X^n, Y^n, Z^n} up to a common scalar.

    For logical bits b the even weight string is r = parity(b) b 0, so column k holds the logical bits of k in
    binary and X_j = X_1 X_{j+1}, Z_j = Z_{j+1} Z_n act as the logical Paulis of bit j.

    Raises:
        InvalidParameter: For odd or too small n.

    """
    if n_qubits < 2 or n_qubits % 2:
        raise InvalidParameter(f'The stabilized code needs an even qubit count of at least 2, got {n_qubits}')
    labels = [''.join(bits) for bits in itertools.product('01', repeat=n_qubits - 2)]
    columns = []
    for label in labels:
        word = str(label.count('1') % 2) + label + '0'
        flipped = ''.join('1' if bit == '0' else '0' for bit in word)
        columns.append((ket(word) + ket(flipped)) / math.sqrt(2))
    return CodeSpace(n_qubits, np.column_stack(columns), labels=labels, name='even_weight')


def even_weight_logical_ops(n_qubits):
    """(X_j, Z_j) = (X_1 X_{j+1}, Z_{j+1} Z_n) for the logical bits j = 1..n-2."""
    return [(qubit_operator(SIGMA_X, 0, n_qubits) @ qubit_operator(SIGMA_X, bit, n_qubits),
             qubit_operator(SIGMA_Z, bit, n_qubits) @ qubit_operator(SIGMA_Z, n_qubits - 1, n_qubits))
            for bit in range(1, n_qubits - 1)]


@dataclass
class HamiltonianCheckReport:
    """Outcome of the Hamiltonian DFS conditions for one code."""

    ok: bool
    eigenvalues: list = field(default_factory=list)
    residuals: list = field(default_factory=list)
    system_leakage: float = 0.0


@dataclass
class KrausCheckReport:
    """Outcome of the Kraus block condition K_a = g_a U (+) N_a for one code."""

    ok: bool
    coefficients: list = field(default_factory=list)
    unitary: np.ndarray = None
    leakage: float = 0.0
    residuals: list = field(default_factory=list)
    normalization: float = 0.0


def dfs_check_hamiltonian(model, code, tol=CHECK_TOLERANCE):
    """Checks S_a |c> = c_a |c> for every coupling and that H_S keeps the code invariant.

    Args:
        model (HamiltonianModel): The model whose system operators are checked.
        code (CodeSpace): The candidate code.
        tol (float): Residual tolerance.

    Returns:
        report (HamiltonianCheckReport): c_a from the first codeword, residual norms and H_S leakage.

    """
    if model.n_qubits != code.n_qubits:
        raise DimensionMismatch(f'Model on {model.n_qubits} qubits, code on {code.n_qubits}')
    isometry = code.isometry
    first = isometry[:, 0]
    eigenvalues, residuals = [], []
    for system in model.system_operators:
        eigenvalue = float(np.real(np.vdot(first, system @ first)))
        eigenvalues.append(eigenvalue)
        residuals.append(op_norm(system @ isometry - eigenvalue * isometry))
    system_leakage = code.leakage(model.system_hamiltonian)
    ok = all(residual < tol for residual in residuals) and system_leakage < tol
    LOGGER.debug('Hamiltonian DFS check on %s: ok=%s', code, ok)
    return HamiltonianCheckReport(ok, eigenvalues, residuals, system_leakage)


def dfs_check_kraus(channel, code, tol=CHECK_TOLERANCE):
    """Checks the block structure K_a = g_a U (+) N_a with one unitary U shared by every Kraus operator.

    Returns:
        report (KrausCheckReport): g_a, U (the polar factor of the largest code block), leakage and residuals.

    """
    if channel.dimension != 2 ** code.n_qubits:
        raise DimensionMismatch(f'Channel of dimension {channel.dimension} does not act on {code.n_qubits} qubits')
    isometry, complement = code.isometry, code.complement
    leakage = max(max(op_norm(dagger(complement) @ operator_ @ isometry),
                      op_norm(dagger(isometry) @ operator_ @ complement))
                  for operator_ in channel.kraus_ops)
    blocks = [code.restrict(operator_) for operator_ in channel.kraus_ops]
    unitary = polar_unitary(max(blocks, key=op_norm))
    coefficients = [hs_inner(unitary, block) / code.dimension for block in blocks]
    residuals = [op_norm(block - coefficient * unitary) for block, coefficient in zip(blocks, coefficients)]
    normalization = float(sum(abs(coefficient) ** 2 for coefficient in coefficients))
    ok = leakage < tol and all(residual < tol for residual in residuals) and abs(normalization - 1) < tol
    return KrausCheckReport(ok, coefficients, unitary, leakage, residuals, normalization)
