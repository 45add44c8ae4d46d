#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: numericcore.py
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
Dense complex linear algebra used by every other part of decouplinglib.

Matrices are plain ``numpy`` complex arrays; the few value types defined here add the tensor factor layout
and enforce the invariants of states. Everything is a pure function of its inputs.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import itertools
import logging
import math
from functools import reduce

import numpy as np
from scipy import linalg

from .configuration import (ALGEBRAIC_TOLERANCE,
                            BRANCH_MARGIN,
                            MAXIMUM_DIMENSION,
                            STRUCTURAL_TOLERANCE)
from .decouplinglibexceptions import (BranchAmbiguity,
                                      DimensionMismatch,
                                      InvalidIndex,
                                      InvalidParameter,
                                      NotHermitian,
                                      NotUnitary)

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
LOGGER_BASENAME = 'decouplinglib.numericcore'
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())

IDENTITY = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = {'I': IDENTITY, 'X': SIGMA_X, 'Y': SIGMA_Y, 'Z': SIGMA_Z}

for _pauli in PAULIS.values():
    _pauli.flags.writeable = False


def frozen(array):
    """Returns a read only complex copy of an array."""
    result = np.array(array, dtype=complex)
    result.flags.writeable = False
    return result


def as_matrix(matrix):
    """Validates and returns a square complex matrix.

    Args:
        matrix: Anything ``numpy`` can turn into a two dimensional array.

    Returns:
        matrix (numpy.ndarray): The complex square matrix.

    Raises:
        DimensionMismatch: If the input is not square or exceeds the supported dimension.

    """
    matrix = np.asarray(matrix, dtype=complex)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise DimensionMismatch(f'Expected a square matrix, got shape {matrix.shape}')
    check_dimension(matrix.shape[0])
    return matrix


def check_dimension(dimension):
    """Asserts a dense dimension stays within desk scale."""
    if dimension > MAXIMUM_DIMENSION:
        raise DimensionMismatch(f'Dimension {dimension} exceeds the supported maximum of {MAXIMUM_DIMENSION}')
    return dimension


def dagger(matrix):
    """The conjugate transpose."""
    return np.conj(np.transpose(matrix))


def commutator(a, b):
    """[a, b] = ab - ba."""
    return a @ b - b @ a


def anticommutator(a, b):
    """{a, b} = ab + ba."""
    return a @ b + b @ a


def hs_inner(a, b):
    """Hilbert-Schmidt inner product Tr(a^dagger b)."""
    return complex(np.vdot(a, b))


def is_hermitian(matrix, tol=STRUCTURAL_TOLERANCE):
    """Whether a square matrix equals its adjoint within ``tol`` (maximum entry deviation)."""
    matrix = np.asarray(matrix)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        return False
    return bool(np.max(np.abs(matrix - dagger(matrix)), initial=0.0) <= tol)


def is_unitary(matrix, tol=STRUCTURAL_TOLERANCE):
    """Whether ``matrix^dagger matrix`` equals the identity within ``tol``."""
    matrix = np.asarray(matrix)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        return False
    return bool(np.max(np.abs(dagger(matrix) @ matrix - np.eye(matrix.shape[0])), initial=0.0) <= tol)


def is_psd(matrix, tol=STRUCTURAL_TOLERANCE):
    """Whether a Hermitian matrix has no eigenvalue below ``-tol``."""
    if not is_hermitian(matrix, tol):
        return False
    matrix = np.asarray(matrix)
    return bool(np.min(np.linalg.eigvalsh((matrix + dagger(matrix)) / 2), initial=0.0) >= -tol)


def hermitian_part(matrix):
    """(M + M^dagger) / 2."""
    return (matrix + dagger(matrix)) / 2


def tensor(*operators):
    """Kronecker product with the first operand's indices major.

    Args:
        *operators: Matrices or vectors, in tensor factor order.

    Returns:
        product (numpy.ndarray): The Kronecker product of all operands.

    """
    if not operators:
        return np.ones((1, 1), dtype=complex)
    return reduce(np.kron, (np.asarray(operator_, dtype=complex) for operator_ in operators))


class TensorLayout:
    """Ordered factor dimensions of a composite space, system factors first and the bath factor last."""

    def __init__(self, factor_dims):
        factor_dims = tuple(int(dimension) for dimension in factor_dims)
        if not factor_dims or any(dimension < 1 for dimension in factor_dims):
            raise InvalidParameter(f'Factor dimensions must be positive, got {factor_dims}')
        self._factor_dims = factor_dims
        check_dimension(self.dimension)

    @classmethod
    def qubits(cls, n_qubits, bath_dim=None):
        """Layout of ``n_qubits`` qubits optionally followed by a bath factor.

        Args:
            n_qubits (int): The number of system qubits.
            bath_dim (int): The bath dimension, None for a closed system.

        Returns:
            layout (TensorLayout): The layout.

        """
        dims = [2] * n_qubits
        if bath_dim is not None:
            dims.append(bath_dim)
        return cls(dims)

    @property
    def factor_dims(self):
        """The dimensions of the factors in order."""
        return self._factor_dims

    @property
    def dimension(self):
        """The total dimension."""
        return math.prod(self._factor_dims)

    def __len__(self):
        return len(self._factor_dims)

    def __eq__(self, other):
        return isinstance(other, TensorLayout) and self._factor_dims == other._factor_dims

    def __hash__(self):
        return hash(self._factor_dims)

    def __repr__(self):
        return f'TensorLayout({list(self._factor_dims)})'

    def split(self, index):
        """Splits the layout into the dimensions before and from ``index``.

        Returns:
            dims (tuple): The product of the leading factors and the product of the trailing factors.

        """
        return math.prod(self._factor_dims[:index]), math.prod(self._factor_dims[index:])

    def check(self, matrix):
        """Raises if a matrix does not match the layout."""
        if np.shape(matrix)[0] != self.dimension:
            raise DimensionMismatch(f'Matrix of dimension {np.shape(matrix)[0]} does not match {self}')
        return matrix


class StateVector:
    """A normalized pure state together with its tensor layout."""

    def __init__(self, amplitudes, layout=None, tol=ALGEBRAIC_TOLERANCE):
        amplitudes = np.asarray(amplitudes, dtype=complex).reshape(-1)
        self._layout = layout or TensorLayout([amplitudes.size])
        self._layout.check(amplitudes)
        norm = np.linalg.norm(amplitudes)
        if abs(norm - 1) > tol:
            raise InvalidParameter(f'State vector norm is {norm}, expected 1')
        self._amplitudes = frozen(amplitudes)

    @property
    def amplitudes(self):
        """The read only amplitude vector."""
        return self._amplitudes

    @property
    def layout(self):
        """The tensor layout."""
        return self._layout

    @property
    def density(self):
        """The projector onto the state as a DensityMatrix."""
        return DensityMatrix(np.outer(self._amplitudes, np.conj(self._amplitudes)), self._layout)

    def overlap(self, other):
        """<self|other>."""
        return complex(np.vdot(self._amplitudes, np.asarray(getattr(other, 'amplitudes', other))))


class DensityMatrix:
    """A Hermitian, unit trace, positive semidefinite matrix together with its tensor layout."""

    def __init__(self, matrix, layout=None, tol=ALGEBRAIC_TOLERANCE, positivity_tol=STRUCTURAL_TOLERANCE):
        matrix = as_matrix(matrix)
        self._layout = layout or TensorLayout([matrix.shape[0]])
        self._layout.check(matrix)
        if not is_hermitian(matrix, tol):
            raise NotHermitian('Density matrix is not Hermitian')
        trace = np.trace(matrix)
        if abs(trace - 1) > tol:
            raise InvalidParameter(f'Density matrix trace is {trace}, expected 1')
        if np.min(np.linalg.eigvalsh(hermitian_part(matrix))) < -positivity_tol:
            raise InvalidParameter('Density matrix has a negative eigenvalue')
        self._matrix = frozen(matrix)

    @classmethod
    def maximally_mixed(cls, dimension):
        """The state I/d."""
        return cls(np.eye(dimension) / dimension)

    @property
    def matrix(self):
        """The read only matrix."""
        return self._matrix

    @property
    def layout(self):
        """The tensor layout."""
        return self._layout

    @property
    def purity(self):
        """Tr(rho^2)."""
        return float(np.real(np.trace(self._matrix @ self._matrix)))

    def tensor(self, other):
        """The product state self (x) other with concatenated layouts."""
        return DensityMatrix(tensor(self._matrix, other.matrix),
                             TensorLayout(self._layout.factor_dims + other.layout.factor_dims))

    def partial_trace(self, keep):
        """Reduced state on the factors in ``keep``."""
        keep = sorted(keep)
        layout = TensorLayout([self._layout.factor_dims[index] for index in keep]) if keep else None
        return DensityMatrix(partial_trace(self._matrix, self._layout, keep), layout)


def partial_trace(matrix, layout, keep):
    """Traces out every factor not listed in ``keep``.

    Args:
        matrix: The square matrix on the composite space.
        layout (TensorLayout): The factor layout of the matrix.
        keep: The indices (0 based) of the factors to keep; the result keeps them in layout order.

    Returns:
        reduced (numpy.ndarray): The reduced matrix.

    Raises:
        InvalidIndex: If a factor index is out of range.
        DimensionMismatch: If the layout does not match the matrix.

    """
    matrix = np.asarray(matrix, dtype=complex)
    layout.check(matrix)
    keep = set(keep)
    if any(not 0 <= index < len(layout) for index in keep):
        raise InvalidIndex(f'Factor indices {sorted(keep)} out of range for {layout}')
    dims = list(layout.factor_dims)
    reshaped = matrix.reshape(dims + dims)
    remaining = list(range(len(dims)))
    for factor in sorted(set(remaining) - keep, reverse=True):
        position = remaining.index(factor)
        reshaped = np.trace(reshaped, axis1=position, axis2=position + len(remaining))
        remaining.pop(position)
    kept_dimension = math.prod(dims[index] for index in remaining)
    return reshaped.reshape(kept_dimension, kept_dimension)


def expm_skew_hermitian(hamiltonian, duration, tol=STRUCTURAL_TOLERANCE):
    """Computes exp(-i t H) for Hermitian H through its eigendecomposition.

    Args:
        hamiltonian: The Hermitian generator.
        duration (float): The evolution time t.
        tol (float): Hermiticity tolerance.

    Returns:
        unitary (numpy.ndarray): The unitary exp(-i t H).

    Raises:
        NotHermitian: If the generator is not Hermitian within ``tol``.

    """
    hamiltonian = as_matrix(hamiltonian)
    if not is_hermitian(hamiltonian, tol):
        raise NotHermitian('Generator of a unitary evolution must be Hermitian')
    eigenvalues, eigenvectors = np.linalg.eigh(hermitian_part(hamiltonian))
    return (eigenvectors * np.exp(-1j * duration * eigenvalues)) @ dagger(eigenvectors)


def logm_unitary(unitary, tol=STRUCTURAL_TOLERANCE, margin=BRANCH_MARGIN):
    """Returns the Hermitian H with U = exp(-i H) on the principal branch.

    The complex Schur form of a normal matrix is diagonal, so its diagonal carries the eigenvalues and the
    Schur vectors stay orthonormal even for degenerate spectra.

    Args:
        unitary: The unitary U.
        tol (float): Unitarity tolerance.
        margin (float): Minimum distance of every eigenphase from +-pi.

    Returns:
        hamiltonian (numpy.ndarray): The Hermitian generator with eigenvalues in (-pi, pi).

    Raises:
        NotUnitary: If U is not unitary within ``tol``.
        BranchAmbiguity: If an eigenphase lies within ``margin`` of +-pi.

    """
    unitary = as_matrix(unitary)
    if not is_unitary(unitary, tol):
        raise NotUnitary('Matrix logarithm is only defined here for unitaries')
    schur_form, schur_vectors = linalg.schur(unitary, output='complex')
    phases = np.angle(np.diag(schur_form))
    worst = np.max(np.abs(phases), initial=0.0)
    if worst > np.pi - margin:
        raise BranchAmbiguity(f'Eigenphase {worst} is within {margin} of the branch cut, shorten the evolution')
    return hermitian_part((schur_vectors * -phases) @ dagger(schur_vectors))


def op_norm(matrix):
    """The operator norm, i.e. the largest singular value."""
    matrix = np.asarray(matrix, dtype=complex)
    if matrix.size == 0:
        return 0.0
    return float(np.linalg.norm(matrix, 2))


def distance_up_to_global_phase(first, second):
    """sqrt(1 - |Tr(u^dagger v)| / d), zero exactly when u = exp(i phi) v for unitaries.

    Raises:
        DimensionMismatch: If the matrices differ in shape.

    """
    first = np.asarray(first, dtype=complex)
    second = np.asarray(second, dtype=complex)
    if first.shape != second.shape:
        raise DimensionMismatch(f'Cannot compare shapes {first.shape} and {second.shape}')
    dimension = first.shape[0]
    overlap = abs(np.vdot(first, second)) / dimension
    return math.sqrt(max(0.0, 1.0 - overlap))


def global_phase(unitary):
    """The unit phase of Tr(U), 1 when the trace vanishes."""
    trace = np.trace(unitary)
    return trace / abs(trace) if abs(trace) > 0 else 1.0


def polar_unitary(matrix):
    """The unitary factor W of the polar decomposition M = W P."""
    unitary, _ = linalg.polar(np.asarray(matrix, dtype=complex))
    return unitary


def complement_isometry(isometry):
    """Orthonormal columns spanning the orthogonal complement of the column space of ``isometry``."""
    isometry = np.asarray(isometry, dtype=complex)
    if isometry.shape[1] == 0:
        return np.eye(isometry.shape[0], dtype=complex)
    return linalg.null_space(dagger(isometry))


def ket(bits):
    """Computational basis vector for a bit string such as ``'0110'``."""
    vector = np.zeros(2 ** len(bits), dtype=complex)
    vector[int(bits, 2) if bits else 0] = 1
    return vector


def pauli_string(label):
    """Tensor product of Pauli matrices named by a label such as ``'XIZ'``."""
    try:
        return tensor(*(PAULIS[character] for character in label.upper()))
    except KeyError:
        raise InvalidParameter(f'Invalid Pauli label "{label}"') from None


def pauli_basis(n_qubits):
    """All 4^n Pauli strings, identity first, in lexicographic I < X < Y < Z order.

    Returns:
        basis (list): Tuples of label and matrix.

    """
    return [(''.join(label), pauli_string(''.join(label)))
            for label in itertools.product('IXYZ', repeat=n_qubits)]


def gell_mann_basis(dimension):
    """Generalized Gell-Mann basis scaled so every element B satisfies Tr(B^dagger B) = dimension.

    Returns:
        basis (list): Tuples of label and matrix, the identity first.

    """
    basis = [('I', np.eye(dimension, dtype=complex))]
    scale = math.sqrt(dimension / 2)
    for row, column in itertools.combinations(range(dimension), 2):
        symmetric = np.zeros((dimension, dimension), dtype=complex)
        symmetric[row, column] = symmetric[column, row] = 1
        antisymmetric = np.zeros((dimension, dimension), dtype=complex)
        antisymmetric[row, column] = -1j
        antisymmetric[column, row] = 1j
        basis.append((f'S{row}{column}', scale * symmetric))
        basis.append((f'A{row}{column}', scale * antisymmetric))
    for level in range(1, dimension):
        diagonal = np.zeros(dimension, dtype=complex)
        diagonal[:level] = 1
        diagonal[level] = -level
        basis.append((f'D{level}', scale * math.sqrt(2 / (level * (level + 1))) * np.diag(diagonal)))
    return basis


def operator_basis(dimension):
    """Orthogonal Hermitian operator basis with Tr(B^dagger B) = dimension, identity first.

    Pauli strings are used when the dimension is a power of two, the generalized Gell-Mann basis otherwise.

    """
    n_qubits = dimension.bit_length() - 1
    if dimension >= 1 and 2 ** n_qubits == dimension:
        return pauli_basis(n_qubits)
    return gell_mann_basis(dimension)


def qubit_operator(operator_, qubit, n_qubits):
    """Embeds a single qubit operator acting on ``qubit`` (0 based) of ``n_qubits``."""
    if not 0 <= qubit < n_qubits:
        raise InvalidIndex(f'Qubit {qubit} out of range for {n_qubits} qubits')
    return tensor(*(operator_ if index == qubit else IDENTITY for index in range(n_qubits)))


def random_hermitian(rng, dimension):
    """(M + M^dagger)/2 for M with independent standard complex Gaussian entries."""
    matrix = (rng.standard_normal((dimension, dimension))
              + 1j * rng.standard_normal((dimension, dimension))) / math.sqrt(2)
    return hermitian_part(matrix)


def random_unitary(rng, dimension):
    """Haar distributed unitary from the QR decomposition of a complex Gaussian matrix."""
    matrix = (rng.standard_normal((dimension, dimension))
              + 1j * rng.standard_normal((dimension, dimension))) / math.sqrt(2)
    unitary, triangular = np.linalg.qr(matrix)
    diagonal = np.diag(triangular)
    return unitary * (diagonal / np.abs(diagonal))


def random_density_matrix(rng, dimension):
    """A full rank random state G G^dagger / Tr(G G^dagger)."""
    matrix = rng.standard_normal((dimension, dimension)) + 1j * rng.standard_normal((dimension, dimension))
    state = matrix @ dagger(matrix)
    return state / np.trace(state)


def collective_pauli(label, n_qubits):
    """Sum over all qubits of the single qubit Pauli named ``label``."""
    return sum(qubit_operator(PAULIS[label], qubit, n_qubits) for qubit in range(n_qubits))


def phase_aligned_difference(first, second):
    """||u - exp(i phi) v|| with the phase phi = arg Tr(v^dagger u) that best aligns v to u.

    Raises:
        DimensionMismatch: If the matrices differ in shape.

    """
    first = np.asarray(first, dtype=complex)
    second = np.asarray(second, dtype=complex)
    if first.shape != second.shape:
        raise DimensionMismatch(f'Cannot compare shapes {first.shape} and {second.shape}')
    overlap = np.vdot(second, first)
    phase = overlap / abs(overlap) if abs(overlap) > 0 else 1.0
    return op_norm(first - phase * second)
