#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: algebra.py
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
Operator algebras generated by coupling operators: closure, commutant, center and the block decomposition
into a direct sum of I_n (x) M_d, plus averaging over finite decoupling groups.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import logging
from dataclasses import dataclass

import numpy as np
from scipy import linalg

from .configuration import (DECOMPOSITION_ATTEMPTS,
                            DECOMPOSITION_TOLERANCE,
                            DEFAULT_SEED,
                            GROUP_TOLERANCE,
                            STRUCTURAL_TOLERANCE)
from .decouplinglibexceptions import (DimensionMismatch,
                                      GroupNotClosed,
                                      InvalidParameter,
                                      NotUnitary,
                                      ValidationFailed)
from .matrixio import dumps
from .numericcore import (PAULIS,
                          as_matrix,
                          dagger,
                          hermitian_part,
                          is_unitary,
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
LOGGER_BASENAME = 'decouplinglib.algebra'
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())

ACCEPTANCE_THRESHOLD = 1e-8
NULLSPACE_THRESHOLD = 1e-10
SPECTRAL_GAP = 1e-6


class OperatorSpace:
    """A subspace of n x n matrices with a basis orthonormal under Tr(A^dagger B)."""

    def __init__(self, dimension, basis=()):
        self.dimension = dimension
        self._vectors = np.zeros((0, dimension * dimension), dtype=complex)
        for element in basis:
            self._vectors = np.vstack([self._vectors, np.asarray(element, dtype=complex).reshape(1, -1)])

    @classmethod
    def from_vectors(cls, dimension, vectors):
        """Builds a space from rows that are already orthonormal vectorized matrices."""
        space = cls(dimension)
        space._vectors = np.asarray(vectors, dtype=complex).reshape(-1, dimension * dimension)
        return space

    def __len__(self):
        return self._vectors.shape[0]

    def __repr__(self):
        return f'OperatorSpace(ambient={self.dimension}, dim={len(self)})'

    @property
    def basis(self):
        """The orthonormal basis as a list of matrices."""
        return [vector.reshape(self.dimension, self.dimension) for vector in self._vectors]

    @property
    def gram(self):
        """The Gram matrix of the basis."""
        return np.conj(self._vectors) @ self._vectors.T

    def project(self, operator_):
        """Orthogonal projection of an operator onto the space."""
        vector = np.asarray(operator_, dtype=complex).reshape(-1)
        coefficients = np.conj(self._vectors) @ vector
        return (coefficients @ self._vectors).reshape(self.dimension, self.dimension)

    def residual(self, operator_):
        """Frobenius norm of the component of an operator outside the space."""
        return float(np.linalg.norm(np.asarray(operator_) - self.project(operator_)))

    def contains(self, operator_, tol=ACCEPTANCE_THRESHOLD):
        """Whether the operator lies in the space relative to its own norm."""
        norm = np.linalg.norm(operator_)
        return bool(norm == 0 or self.residual(operator_) <= tol * max(norm, 1.0))

    def extend(self, operator_, threshold=ACCEPTANCE_THRESHOLD):
        """Adds the normalized component of an operator orthogonal to the space.

        Modified Gram-Schmidt with a second orthogonalization pass; the candidate is accepted when its residual,
        relative to its own norm, exceeds ``threshold``.

        Returns:
            accepted (bool): Whether the space grew.

        """
        vector = np.asarray(operator_, dtype=complex).reshape(-1)
        norm = np.linalg.norm(vector)
        if norm == 0:
            return False
        vector = vector / norm
        for _ in range(2):
            for basis_vector in self._vectors:
                vector = vector - np.vdot(basis_vector, vector) * basis_vector
        residual = np.linalg.norm(vector)
        if residual <= threshold:
            return False
        self._vectors = np.vstack([self._vectors, (vector / residual).reshape(1, -1)])
        return True

    def random_hermitian_element(self, rng):
        """A random Hermitian element, valid when the space is closed under the adjoint."""
        coefficients = rng.standard_normal(len(self)) + 1j * rng.standard_normal(len(self))
        return hermitian_part((coefficients @ self._vectors).reshape(self.dimension, self.dimension))

    def random_element(self, rng):
        """A random complex combination of the basis."""
        coefficients = rng.standard_normal(len(self)) + 1j * rng.standard_normal(len(self))
        return (coefficients @ self._vectors).reshape(self.dimension, self.dimension)


def _common_dimension(operators):
    operators = [as_matrix(operator_) for operator_ in operators]
    if not operators:
        raise InvalidParameter('Need at least one operator')
    dimension = operators[0].shape[0]
    if any(operator_.shape[0] != dimension for operator_ in operators):
        raise DimensionMismatch('All operators must share one dimension')
    return operators, dimension


def algebra_closure(generators, threshold=ACCEPTANCE_THRESHOLD):
    """The smallest unital, adjoint closed algebra containing the generators.

    Starting from the identity, every accepted basis element is multiplied on the left by each generator and
    its adjoint until no product adds a new direction.

    Returns:
        space (OperatorSpace): An orthonormal basis of the algebra, identity first.

    """
    generators, dimension = _common_dimension(generators)
    words = generators + [dagger(generator) for generator in generators]
    space = OperatorSpace(dimension)
    space.extend(np.eye(dimension), threshold)
    position = 0
    while position < len(space) and len(space) < dimension * dimension:
        element = space.basis[position]
        for word in words:
            space.extend(word @ element, threshold)
        position += 1
    LOGGER.debug('Algebra closure of %s generators has dimension %s', len(generators), len(space))
    return space


def _commutator_gram(generator):
    """L^dagger L for L = G (x) I - I (x) G^T, the row major vectorization of X -> [G, X]."""
    identity = np.eye(generator.shape[0])
    adjoint = dagger(generator)
    conjugate = np.conj(generator)
    return (np.kron(adjoint @ generator, identity) + np.kron(identity, conjugate @ generator.T)
            - np.kron(adjoint, generator.T) - np.kron(generator, conjugate))


def _null_vectors(gram, threshold):
    """Eigenvectors, as columns, of a PSD Gram matrix with eigenvalues below ``threshold`` times the largest."""
    values, vectors = linalg.eigh(hermitian_part(gram))
    largest = values[-1] if values.size else 0.0
    if largest <= 0:
        return vectors
    return vectors[:, values <= threshold * largest]


def commutant(generators, threshold=NULLSPACE_THRESHOLD):
    """Every X with [G, X] = 0 for all generators, from the nullspace of the commutator maps.

    On row major vectorization [G, X] becomes (G (x) I - I (x) G^T) vec(X). The nullspace is read off the
    d^2 x d^2 Gram matrix summed over the generators.

    Returns:
        space (OperatorSpace): An orthonormal basis of the commutant.

    """
    generators, dimension = _common_dimension(generators)
    gram = np.zeros((dimension * dimension, dimension * dimension), dtype=complex)
    for generator in generators:
        gram += _commutator_gram(generator)
    space = OperatorSpace.from_vectors(dimension, _null_vectors(gram, threshold).T)
    LOGGER.debug('Commutant of %s generators has dimension %s', len(generators), len(space))
    return space


def _center_of(commutant_space, threshold=NULLSPACE_THRESHOLD):
    """The elements of a commutant that commute with the whole commutant, solved in its own coordinates."""
    elements = np.array(commutant_space.basis)
    vectors = elements.reshape(len(elements), -1)
    gram = np.zeros((len(elements), len(elements)), dtype=complex)
    for element in elements:
        commutators = (elements @ element - element @ elements).reshape(len(elements), -1)
        gram += np.conj(commutators) @ commutators.T
    coefficients = _null_vectors(gram, threshold)
    space = OperatorSpace.from_vectors(commutant_space.dimension, coefficients.T @ vectors)
    LOGGER.debug('Center has dimension %s', len(space))
    return space


def center(generators, threshold=NULLSPACE_THRESHOLD):
    """The center of the generated algebra, its intersection with the commutant."""
    return _center_of(commutant(generators, threshold), threshold)


def _clusters(values, gap=SPECTRAL_GAP):
    """Groups sorted eigenvalue indices whose consecutive differences stay below ``gap``."""
    groups = [[0]]
    for index in range(1, len(values)):
        if values[index] - values[index - 1] < gap:
            groups[-1].append(index)
        else:
            groups.append([index])
    return groups


@dataclass(frozen=True)
class Block:
    """One isotypic component: ``multiplicity`` copies n_J of an irreducible block of dimension d_J."""

    label: int
    multiplicity: int
    dimension: int
    offset: int

    @property
    def size(self):
        """n_J * d_J."""
        return self.multiplicity * self.dimension


class AlgebraDecomposition:
    """Blocks (n_J, d_J) and a unitary W with W^dagger A W = direct sum of I_{n_J} (x) M_{d_J}.

    Inside a block column ``offset + a * d_J + i`` holds gauge index i of copy a, so the copy index is the
    noiseless subsystem factor.

    """

    def __init__(self, blocks, transform):
        self.blocks = tuple(blocks)
        self.transform = transform

    def __repr__(self):
        return f'AlgebraDecomposition(blocks={self.pairs})'

    @property
    def pairs(self):
        """The (n_J, d_J) pairs in block order."""
        return [(block.multiplicity, block.dimension) for block in self.blocks]

    @property
    def dimension(self):
        """The ambient dimension."""
        return self.transform.shape[0]

    def compress(self, operator_):
        """W^dagger A W."""
        return dagger(self.transform) @ operator_ @ self.transform

    def block_matrix(self, operator_, block):
        """The diagonal block of W^dagger A W belonging to ``block``."""
        compressed = self.compress(operator_)
        window = slice(block.offset, block.offset + block.size)
        return compressed[window, window]

    def gauge_action(self, operator_, block):
        """The d_J x d_J matrix M averaged over the copies of ``block``."""
        matrix = self.block_matrix(operator_, block)
        size = block.dimension
        return sum(matrix[copy * size:(copy + 1) * size, copy * size:(copy + 1) * size]
                   for copy in range(block.multiplicity)) / block.multiplicity

    def structure_residual(self, operator_):
        """Largest deviation of W^dagger A W from the direct sum of I_{n_J} (x) M_J."""
        compressed = self.compress(operator_)
        expected = linalg.block_diag(*[np.kron(np.eye(block.multiplicity), self.gauge_action(operator_, block))
                                       for block in self.blocks])
        return float(np.max(np.abs(compressed - expected)))

    def report(self):
        """A text table of the blocks."""
        lines = ['block n_J d_J offset']
        lines.extend(f'{block.label} {block.multiplicity} {block.dimension} {block.offset}' for block in self.blocks)
        return '\n'.join(lines) + '\n'

    def export_transform(self):
        """The transform W in the text matrix format."""
        return dumps([('transform', self.transform)], comments=[f'blocks {self.pairs}'])


def _isotypic_copies(restricted_commutant, rng, gap):
    """Splits an isotypic block into irreducible copies with bases related by commutant intertwiners."""
    hermitian = hermitian_part(restricted_commutant(rng, hermitian=True))
    values, vectors = np.linalg.eigh(hermitian)
    groups = _clusters(values, gap)
    sizes = {len(group) for group in groups}
    if len(sizes) != 1:
        raise ValidationFailed(f'Unequal copy dimensions {sorted(sizes)} inside an isotypic block')
    projectors = [vectors[:, group] @ dagger(vectors[:, group]) for group in groups]
    reference = vectors[:, groups[0]]
    intertwiner = restricted_commutant(rng, hermitian=False)
    columns = [reference]
    for projector in projectors[1:]:
        image = projector @ intertwiner @ reference
        scale = np.linalg.norm(image[:, 0])
        if scale < gap:
            raise ValidationFailed('Degenerate intertwiner draw')
        columns.append(image / scale)
    return len(groups), len(groups[0]), np.hstack(columns)


def _decompose_once(commutant_space, center_space, rng, gap):
    dimension = commutant_space.dimension
    values, vectors = np.linalg.eigh(center_space.random_hermitian_element(rng))
    components = []
    for group in _clusters(values, gap):
        frame = vectors[:, group]

        def restricted_commutant(draw, hermitian, frame=frame):
            element = (commutant_space.random_hermitian_element(draw) if hermitian
                       else commutant_space.random_element(draw))
            return dagger(frame) @ element @ frame

        multiplicity, irrep_dimension, local = _isotypic_copies(restricted_commutant, rng, gap)
        components.append((multiplicity, irrep_dimension, frame @ local))
    components.sort(key=lambda component: (-component[1], -component[0]))
    blocks, offset = [], 0
    for label, (multiplicity, irrep_dimension, _) in enumerate(components):
        blocks.append(Block(label, multiplicity, irrep_dimension, offset))
        offset += multiplicity * irrep_dimension
    if offset != dimension:
        raise ValidationFailed(f'Blocks cover {offset} of {dimension} dimensions')
    transform = polar_unitary(np.hstack([columns for _, _, columns in components]))
    return AlgebraDecomposition(blocks, transform)


def validate_decomposition(decomposition, generators, tol=DECOMPOSITION_TOLERANCE):
    """Raises ValidationFailed unless W is unitary and every generator has the block structure."""
    if not is_unitary(decomposition.transform, STRUCTURAL_TOLERANCE):
        raise ValidationFailed('Decomposition transform is not unitary')
    if sum(block.size for block in decomposition.blocks) != decomposition.dimension:
        raise ValidationFailed('Block sizes do not add up to the ambient dimension')
    for generator in generators:
        residual = decomposition.structure_residual(generator)
        if residual > tol:
            raise ValidationFailed(f'Generator violates the block structure by {residual}')
    return decomposition


def decompose(generators, seed=DEFAULT_SEED, tol=DECOMPOSITION_TOLERANCE, attempts=DECOMPOSITION_ATTEMPTS):
    """Decomposes the algebra generated by adjoint closed generators into I_{n_J} (x) M_{d_J} blocks.

    A random Hermitian central element splits the space into isotypic blocks; inside each, a random Hermitian
    commutant element separates the n_J copies and a second commutant element maps the first copy onto the
    others. The result is validated and redrawn with derived seeds on failure.

    Args:
        generators: Hermitian (or adjoint closed) generators.
        seed (int): Seed of the random draws, attempt k uses ``(seed, k)``.
        tol (float): Block structure tolerance.
        attempts (int): The number of draws before giving up.

    Returns:
        decomposition (AlgebraDecomposition): Blocks sorted by descending d_J, then descending n_J.

    Raises:
        ValidationFailed: If no draw passes validation.

    """
    generators, _ = _common_dimension(generators)
    commutant_space = commutant(generators)
    center_space = _center_of(commutant_space)
    for attempt in range(attempts):
        rng = np.random.default_rng([seed, attempt])
        try:
            candidate = _decompose_once(commutant_space, center_space, rng, SPECTRAL_GAP)
            decomposition = validate_decomposition(candidate, generators, tol)
        except ValidationFailed as error:
            LOGGER.warning('Decomposition attempt %s failed: %s', attempt, error)
            continue
        LOGGER.debug('Decomposed into blocks %s', decomposition.pairs)
        return decomposition
    raise ValidationFailed(f'No valid decomposition after {attempts} attempts')


def check_group_closure(group, tol=GROUP_TOLERANCE):
    """Multiplication table of a group given as unitaries closed under products up to a global phase.

    Returns:
        table (list): ``table[i][j] = k`` when g_i g_j equals g_k up to phase.

    Raises:
        NotUnitary: If an element is not unitary.
        GroupNotClosed: If a product is missing from the list.

    """
    group, _ = _common_dimension(group)
    for element in group:
        if not is_unitary(element, STRUCTURAL_TOLERANCE):
            raise NotUnitary('Group elements must be unitary')
    table = []
    for first in group:
        row = []
        for second in group:
            product = first @ second
            matches = [index for index, candidate in enumerate(group)
                       if phase_aligned_difference(product, candidate) < tol]
            if not matches:
                raise GroupNotClosed('Group is not closed under multiplication up to phase')
            row.append(matches[0])
        table.append(row)
    return table


def is_irreducible(group):
    """Whether the group generates the full matrix algebra, the setting of Schur's lemma."""
    group, dimension = _common_dimension(group)
    return len(algebra_closure(group)) == dimension * dimension


def average_over_group(hamiltonian, group, tol=GROUP_TOLERANCE):
    """(1/|G|) sum_g (g^dagger (x) I) H (g (x) I) for system unitaries g acting on the leading factor.

    Raises:
        GroupNotClosed: If the elements are not closed up to phase.
        DimensionMismatch: If the system dimension does not divide the dimension of H.

    """
    hamiltonian = as_matrix(hamiltonian)
    check_group_closure(group, tol)
    system_dimension = np.shape(group[0])[0]
    bath_dimension, remainder = divmod(hamiltonian.shape[0], system_dimension)
    if remainder:
        raise DimensionMismatch(f'System dimension {system_dimension} does not divide {hamiltonian.shape[0]}')
    identity = np.eye(bath_dimension)
    total = np.zeros_like(hamiltonian)
    for element in group:
        lifted = tensor(element, identity)
        total += dagger(lifted) @ hamiltonian @ lifted
    return total / len(group)


def block_characters(decomposition, group):
    """Normalized traces Tr(M_J(g))/d_J of every group element on every block.

    For abelian groups with one dimensional irreducible blocks these are the character values c_J.

    Returns:
        characters (numpy.ndarray): Rows for group elements, columns for blocks.

    """
    return np.array([[np.trace(decomposition.gauge_action(element, block)) / block.dimension
                      for block in decomposition.blocks] for element in group])


def collective_pauli_group(n_qubits):
    """{I, X^n, Y^n, Z^n}, the Klein group acting identically on every qubit."""
    return [tensor(*[PAULIS[label]] * n_qubits) for label in 'IXYZ']


def klein_group():
    """The single qubit group {I, X, Y, Z}."""
    return collective_pauli_group(1)
