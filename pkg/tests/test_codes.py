#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: test_codes.py
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
test_codes
----------------------------------
Tests for `codes` module.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import math
import tempfile
import unittest
from fractions import Fraction
from pathlib import Path

import numpy as np

from decouplinglib.codes import (CodeSpace,
                                 allowed_spins,
                                 bratteli_paths,
                                 collective_ladder_ops,
                                 collective_spin_ops,
                                 decoherence_dfs_dimension,
                                 decoherence_rate,
                                 dephasing_dfs_enumerate,
                                 dephasing_rate,
                                 dfs_check_hamiltonian,
                                 dfs_check_kraus,
                                 even_weight_logical_ops,
                                 even_weight_stabilized_code,
                                 exchange_op,
                                 four_qubit_dfs,
                                 heisenberg_exchange,
                                 load_code,
                                 logical_paulis_4qubit,
                                 multiplicity_formula,
                                 pairwise_code,
                                 pairwise_encoded_hamiltonian,
                                 pairwise_logical_ops,
                                 save_code,
                                 spin_tower,
                                 three_qubit_ns_code)
from decouplinglib.decouplinglibexceptions import DimensionMismatch, InvalidIndex, InvalidParameter
from decouplinglib.models import KrausChannel, build_model
from decouplinglib.numericcore import (SIGMA_X,
                                       SIGMA_Z,
                                       anticommutator,
                                       commutator,
                                       dagger,
                                       ket,
                                       pauli_string)

__author__ = '''Costas Tyfoxylos <costas.tyf@gmail.com>'''
__docformat__ = '''google'''
__date__ = '''18-10-2026'''
__copyright__ = '''Copyright 2026, Costas Tyfoxylos'''
__credits__ = ["Costas Tyfoxylos"]
__license__ = '''MIT'''
__maintainer__ = '''Costas Tyfoxylos'''
__email__ = '''<costas.tyf@gmail.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".


def _vector(terms, scale):
    return sum(coefficient * ket(label) for label, coefficient in terms.items()) / scale


class TestCollectiveSpin(unittest.TestCase):

    def test_two_qubit_s_z(self):
        _, _, s_z, _ = collective_spin_ops(2)
        np.testing.assert_array_equal(np.diag(s_z).real, [2, 0, 0, -2])

    def test_ladder_decomposition(self):
        for half_spin in (False, True):
            s_x, s_y, s_z, total = collective_spin_ops(2, half_spin)
            raising, lowering = collective_ladder_ops(2, half_spin)
            np.testing.assert_allclose(raising + lowering, s_x, atol=1e-12)
            np.testing.assert_allclose(1j * (raising - lowering), s_y, atol=1e-12)
            self.assertLess(np.max(np.abs(commutator(total, s_z))), 1e-12)

    def test_ladder_commutators(self):
        _, _, s_z, _ = collective_spin_ops(2)
        raising, lowering = collective_ladder_ops(2)
        np.testing.assert_allclose(commutator(lowering, raising), s_z, atol=1e-12)
        _, _, half_z, _ = collective_spin_ops(2, half_spin=True)
        raising, lowering = collective_ladder_ops(2, half_spin=True)
        np.testing.assert_allclose(commutator(lowering, raising), half_z / 2, atol=1e-12)

    def test_single_spin_casimir(self):
        _, _, _, total = collective_spin_ops(1, half_spin=True)
        np.testing.assert_allclose(total, 0.75 * np.eye(2), atol=1e-12)

    def test_invalid_size(self):
        with self.assertRaises(InvalidParameter):
            collective_spin_ops(0)


class TestDephasingSubspaces(unittest.TestCase):

    def test_two_qubits(self):
        codes = dephasing_dfs_enumerate(2)
        self.assertEqual([code.dimension for code in codes], [1, 2, 1])
        self.assertEqual(codes[1].labels, (0, 0))
        np.testing.assert_array_equal(codes[1].isometry[:, 0], ket('01'))
        np.testing.assert_array_equal(codes[1].isometry[:, 1], ket('10'))

    def test_binomial_dimensions(self):
        self.assertEqual([code.dimension for code in dephasing_dfs_enumerate(3)], [1, 3, 3, 1])
        codes = dephasing_dfs_enumerate(4)
        self.assertEqual(codes[2].dimension, 6)
        self.assertEqual(sum(code.dimension for code in codes), 16)

    def test_half_spin_labels(self):
        self.assertEqual(dephasing_dfs_enumerate(2, half_spin=True)[0].labels, (1.0,))

    def test_rates(self):
        self.assertEqual(dephasing_rate(2)[:2], (2, 0.5))
        for n_qubits, margin in ((64, 0.15), (256, 0.08), (1024, 0.05)):
            _, rate, asymptote = dephasing_rate(n_qubits)
            self.assertLess(abs(rate - asymptote) / asymptote, margin)
        self.assertEqual(decoherence_rate(4)[0], 2)
        with self.assertRaises(InvalidParameter):
            dephasing_rate(1025)


class TestCounting(unittest.TestCase):

    def test_published_counts(self):
        self.assertEqual(bratteli_paths(3, Fraction(1, 2)), 2)
        self.assertEqual(bratteli_paths(4, 0), 2)
        self.assertEqual(bratteli_paths(6, 0), 5)
        self.assertEqual(bratteli_paths(3, 1), 0)

    def test_paths_match_the_closed_form(self):
        for n_qubits in range(1, 11):
            for spin in allowed_spins(n_qubits):
                self.assertEqual(bratteli_paths(n_qubits, spin), multiplicity_formula(n_qubits, spin))

    def test_dimensions_add_up(self):
        for n_qubits in range(1, 11):
            total = sum(bratteli_paths(n_qubits, spin) * int(2 * spin + 1) for spin in allowed_spins(n_qubits))
            self.assertEqual(total, 2 ** n_qubits)

    def test_singlet_dimensions(self):
        self.assertEqual(decoherence_dfs_dimension(4), 2)
        self.assertEqual(decoherence_dfs_dimension(6), 5)
        with self.assertRaises(InvalidParameter):
            decoherence_dfs_dimension(5)

    def test_invalid_spin(self):
        with self.assertRaises(InvalidParameter):
            bratteli_paths(3, Fraction(1, 3))


class TestSpinTower(unittest.TestCase):

    def test_two_qubit_singlet(self):
        singlet = spin_tower(2).state(0, 0, 0).amplitudes
        np.testing.assert_allclose(singlet, (ket('01') - ket('10')) / math.sqrt(2), atol=1e-12)

    def test_three_qubit_doublets(self):
        tower = spin_tower(3)
        expected = {(0, Fraction(-1, 2)): _vector({'011': 1, '101': -1}, math.sqrt(2)),
                    (0, Fraction(1, 2)): _vector({'010': 1, '100': -1}, math.sqrt(2)),
                    (1, Fraction(-1, 2)): _vector({'110': 2, '011': -1, '101': -1}, math.sqrt(6)),
                    (1, Fraction(1, 2)): _vector({'010': 1, '100': 1, '001': -2}, math.sqrt(6))}
        for (index, m), vector in expected.items():
            np.testing.assert_allclose(tower.state(Fraction(1, 2), index, m).amplitudes, vector, atol=1e-12)
        self.assertEqual(tower.paths[(Fraction(1, 2), 0)], '+-+')
        self.assertEqual(tower.paths[(Fraction(1, 2), 1)], '++-')

    def test_sign_override_flips_the_whole_multiplet(self):
        tower = spin_tower(3)
        s_x, s_y, _, _ = collective_spin_ops(3, half_spin=True)
        upper = tower.state(Fraction(1, 2), 1, Fraction(1, 2)).amplitudes
        lower = tower.state(Fraction(1, 2), 1, Fraction(-1, 2)).amplitudes
        lowered = (s_x - 1j * s_y) @ upper
        np.testing.assert_allclose(lowered, lower, atol=1e-12)

    def test_basis_is_complete_and_orthonormal(self):
        for n_qubits in (3, 4):
            tower = spin_tower(n_qubits)
            self.assertEqual(len(tower), 2 ** n_qubits)
            matrix = tower.matrix
            np.testing.assert_allclose(dagger(matrix) @ matrix, np.eye(2 ** n_qubits), atol=1e-12)

    def test_states_carry_their_quantum_numbers(self):
        tower = spin_tower(4)
        _, _, s_z, total = collective_spin_ops(4, half_spin=True)
        for spin, index, m in tower.labels:
            vector = tower.state(spin, index, m).amplitudes
            self.assertLess(np.linalg.norm(total @ vector - float(spin * (spin + 1)) * vector), 1e-10)
            self.assertLess(np.linalg.norm(s_z @ vector - float(m) * vector), 1e-10)

    def test_multiplicities(self):
        tower = spin_tower(4)
        self.assertEqual(tower.multiplicity(0), 2)
        self.assertEqual(tower.multiplicity(1), 3)
        self.assertEqual(tower.multiplet(1, 0).shape, (16, 3))

    def test_singlets_are_decoherence_free(self):
        tower = spin_tower(4)
        model = build_model('collective_decoherence', 4, bath_dim=2, seed=42)
        for index in range(tower.multiplicity(0)):
            code = CodeSpace(4, tower.state(0, index, 0).amplitudes)
            report = dfs_check_hamiltonian(model, code)
            self.assertTrue(report.ok)
            self.assertTrue(all(abs(value) < 1e-12 for value in report.eigenvalues))

    def test_range(self):
        with self.assertRaises(InvalidParameter):
            spin_tower(9)
        with self.assertRaises(InvalidIndex):
            spin_tower(2).state(1, 1, 0)


class TestFourQubitCode(unittest.TestCase):

    def setUp(self):
        self.code = four_qubit_dfs()
        self.logical_z, self.logical_x, self.logical_y = logical_paulis_4qubit()

    def test_published_codewords(self):
        zero = _vector({'0101': 1, '0110': -1, '1001': -1, '1010': 1}, 2)
        np.testing.assert_allclose(self.code.isometry[:, 0], zero, atol=1e-12)
        one = self.code.isometry[:, 1]
        self.assertAlmostEqual(one[int('1100', 2)].real, 1 / math.sqrt(3), places=12)
        self.assertAlmostEqual(one[int('0011', 2)].real, 1 / math.sqrt(3), places=12)
        self.assertAlmostEqual(one[int('0101', 2)].real, -0.5 / math.sqrt(3), places=12)

    def test_logical_zero_is_a_singlet(self):
        raising, lowering = collective_ladder_ops(4)
        _, _, s_z, _ = collective_spin_ops(4)
        for operator_ in (raising, lowering, s_z):
            self.assertLess(np.linalg.norm(operator_ @ self.code.isometry[:, 0]), 1e-12)

    def test_exchange_logical_operators(self):
        np.testing.assert_allclose(self.code.restrict(self.logical_z), np.diag([1, -1]), atol=1e-12)
        overlap = np.vdot(self.code.isometry[:, 1], self.logical_x @ self.code.isometry[:, 0])
        self.assertAlmostEqual(abs(overlap), 1.0, places=12)
        self.assertLess(np.max(np.abs(self.code.restrict(anticommutator(self.logical_x, self.logical_z)))), 1e-12)
        for operator_ in (self.logical_z, self.logical_x, self.logical_y):
            self.assertLess(self.code.leakage(operator_), 1e-12)

    def test_decoherence_free_under_collective_decoherence(self):
        model = build_model('collective_decoherence', 4, bath_dim=2, seed=42)
        self.assertTrue(dfs_check_hamiltonian(model, self.code).ok)


class TestExchange(unittest.TestCase):

    def test_two_qubit_swap(self):
        expected = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])
        np.testing.assert_array_equal(exchange_op(2, 1, 2), expected)
        np.testing.assert_array_equal(exchange_op(2, 2, 1), expected)

    def test_involution_and_heisenberg_form(self):
        swap = exchange_op(3, 1, 3)
        np.testing.assert_array_equal(swap @ swap, np.eye(8))
        np.testing.assert_allclose(heisenberg_exchange(3, 1, 3), swap, atol=1e-12)

    def test_symmetric_group_relations(self):
        for n_qubits in (3, 4):
            for first, second, third in ((1, 2, 3), (2, 3, 1), (1, 3, n_qubits)):
                if len({first, second, third}) < 3:
                    continue
                product = exchange_op(n_qubits, first, second) @ exchange_op(n_qubits, second, third) \
                    @ exchange_op(n_qubits, first, second)
                np.testing.assert_array_equal(product, exchange_op(n_qubits, first, third))

    def test_commutes_with_collective_coupling(self):
        model = build_model('collective_decoherence', 3, bath_dim=2, seed=42)
        swap = np.kron(exchange_op(3, 2, 3), np.eye(2))
        self.assertLess(np.max(np.abs(commutator(swap, model.coupling_hamiltonian))), 1e-12)

    def test_invalid_indices(self):
        with self.assertRaises(InvalidIndex):
            exchange_op(3, 1, 1)
        with self.assertRaises(InvalidIndex):
            exchange_op(3, 0, 2)


class TestThreeQubitSubsystem(unittest.TestCase):

    def setUp(self):
        self.code = three_qubit_ns_code()

    def test_layout(self):
        self.assertEqual(self.code.subsystem_dims, (2, 2))
        self.assertEqual(self.code.dimension, 4)

    def test_exchange_acts_as_logical_z(self):
        np.testing.assert_allclose(self.code.restrict(exchange_op(3, 1, 2)), np.diag([-1, -1, 1, 1]), atol=1e-12)

    def test_exchange_difference_acts_as_logical_x(self):
        operator_ = (exchange_op(3, 1, 3) - exchange_op(3, 2, 3)) / math.sqrt(3)
        np.testing.assert_allclose(self.code.restrict(operator_), np.kron(SIGMA_X, np.eye(2)), atol=1e-12)


class TestPairwiseCode(unittest.TestCase):

    def test_logical_action(self):
        code = pairwise_code(1)
        logical_z, logical_x = pairwise_logical_ops(1)[0]
        np.testing.assert_allclose(code.restrict(logical_z), SIGMA_Z, atol=1e-12)
        np.testing.assert_allclose(code.restrict(logical_x), SIGMA_X, atol=1e-12)

    def test_pairs_commute(self):
        (first_z, _), (_, second_x) = pairwise_logical_ops(2)
        self.assertLess(np.max(np.abs(commutator(first_z, second_x))), 1e-12)

    def test_encoded_hamiltonian_preserves_the_code(self):
        code = pairwise_code(2)
        hamiltonian = pairwise_encoded_hamiltonian([0.3, -0.2], [1.0, 0.5], [[0, 0.7], [0, 0]])
        self.assertLess(code.leakage(hamiltonian), 1e-12)
        model = build_model('pure_dephasing', 4, bath_dim=2, seed=42).with_system_hamiltonian(hamiltonian)
        self.assertFalse(dfs_check_hamiltonian(model, code).ok)
        pair_model = build_model('custom', 4, bath_dim=2, seed=42, labels=['ZZII', 'IIZZ'])
        self.assertTrue(dfs_check_hamiltonian(pair_model.with_system_hamiltonian(hamiltonian), code).ok)

    def test_mismatched_strengths(self):
        with self.assertRaises(DimensionMismatch):
            pairwise_encoded_hamiltonian([1.0], [1.0, 2.0])


class TestEvenWeightCode(unittest.TestCase):

    def test_two_qubits(self):
        code = even_weight_stabilized_code(2)
        np.testing.assert_allclose(code.isometry[:, 0], (ket('00') + ket('11')) / math.sqrt(2), atol=1e-12)

    def test_four_qubits(self):
        code = even_weight_stabilized_code(4)
        self.assertEqual(code.dimension, 4)
        np.testing.assert_allclose(code.isometry[:, 2], (ket('1100') + ket('0011')) / math.sqrt(2), atol=1e-12)
        for label in ('XXXX', 'YYYY', 'ZZZZ'):
            np.testing.assert_allclose(code.restrict(pauli_string(label)), np.eye(4), atol=1e-12)

    def test_logical_operators(self):
        code = even_weight_stabilized_code(4)
        operators = even_weight_logical_ops(4)
        expected = [(np.kron(SIGMA_X, np.eye(2)), np.kron(SIGMA_Z, np.eye(2))),
                    (np.kron(np.eye(2), SIGMA_X), np.kron(np.eye(2), SIGMA_Z))]
        for (logical_x, logical_z), (want_x, want_z) in zip(operators, expected):
            self.assertLess(code.leakage(logical_x), 1e-12)
            np.testing.assert_allclose(code.restrict(logical_x), want_x, atol=1e-12)
            np.testing.assert_allclose(code.restrict(logical_z), want_z, atol=1e-12)

    def test_odd_size(self):
        with self.assertRaises(InvalidParameter):
            even_weight_stabilized_code(3)


class TestDfsChecks(unittest.TestCase):

    def test_collective_dephasing_pair(self):
        model = build_model('collective_dephasing', 2, bath_dim=2, seed=42)
        report = dfs_check_hamiltonian(model, dephasing_dfs_enumerate(2)[1])
        self.assertTrue(report.ok)
        self.assertAlmostEqual(report.eigenvalues[0], 0.0, places=12)

    def test_singlet_and_triplet(self):
        model = build_model('collective_decoherence', 2, bath_dim=2, seed=42)
        singlet = CodeSpace(2, (ket('01') - ket('10')) / math.sqrt(2))
        self.assertTrue(dfs_check_hamiltonian(model, singlet).ok)
        triplet = CodeSpace(2, np.column_stack([ket('00'), (ket('01') + ket('10')) / math.sqrt(2), ket('11')]))
        self.assertFalse(dfs_check_hamiltonian(model, triplet).ok)

    def test_dimension_mismatch(self):
        model = build_model('collective_dephasing', 3, bath_dim=2, seed=42)
        with self.assertRaises(DimensionMismatch):
            dfs_check_hamiltonian(model, pairwise_code(1))

    def test_correlated_dephasing_kraus(self):
        probability = 0.3
        channel = KrausChannel([math.sqrt(1 - probability) * np.eye(8),
                                math.sqrt(probability) * pauli_string('ZZI')])
        code = CodeSpace(3, np.column_stack([ket(label) for label in ('000', '001', '110', '111')]))
        report = dfs_check_kraus(channel, code)
        self.assertTrue(report.ok)
        np.testing.assert_allclose(report.unitary, np.eye(4), atol=1e-12)
        np.testing.assert_allclose(report.coefficients, [math.sqrt(1 - probability), math.sqrt(probability)],
                                   atol=1e-12)

    def test_identity_channel(self):
        self.assertTrue(dfs_check_kraus(KrausChannel([np.eye(4)]), pairwise_code(1)).ok)

    def test_local_dephasing_is_not_decoherence_free(self):
        probability = 0.3
        channel = KrausChannel([math.sqrt(1 - probability) * np.eye(4),
                                math.sqrt(probability) * pauli_string('ZI')])
        code = CodeSpace(2, np.column_stack([ket('00'), ket('10')]))
        report = dfs_check_kraus(channel, code)
        self.assertFalse(report.ok)
        self.assertLess(report.leakage, 1e-12)
        trivial = CodeSpace(2, np.column_stack([ket('00'), ket('01')]))
        self.assertTrue(dfs_check_kraus(channel, trivial).ok)


class TestCodeSpace(unittest.TestCase):

    def test_invariants(self):
        with self.assertRaises(InvalidParameter):
            CodeSpace(1, np.column_stack([ket('0'), ket('0')]))
        with self.assertRaises(DimensionMismatch):
            CodeSpace(2, ket('0'))
        with self.assertRaises(DimensionMismatch):
            CodeSpace(2, np.column_stack([ket('00'), ket('11')]), subsystem_dims=(2, 2))

    def test_encode_and_complement(self):
        code = pairwise_code(1)
        np.testing.assert_allclose(code.encode([1, 0]), ket('01'))
        self.assertEqual(code.complement.shape, (4, 2))
        np.testing.assert_allclose(dagger(code.complement) @ code.isometry, np.zeros((2, 2)), atol=1e-12)
        with self.assertRaises(DimensionMismatch):
            code.encode([1, 0, 0])

    def test_files(self):
        code = four_qubit_dfs()
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory, 'code.txt')
            save_code(path, code)
            loaded = load_code(path)
        self.assertEqual(loaded.name, 'four_qubit_dfs')
        self.assertEqual(loaded.n_qubits, 4)
        np.testing.assert_allclose(loaded.isometry, code.isometry, atol=1e-15)


if __name__ == '__main__':
    unittest.main()
