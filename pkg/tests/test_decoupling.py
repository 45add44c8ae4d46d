#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: test_decoupling.py
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
test_decoupling
----------------------------------
Tests for `decoupling` module.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import math
import unittest

import numpy as np

from decouplinglib.algebra import average_over_group, collective_pauli_group, klein_group
from decouplinglib.codes import pairwise_code
from decouplinglib.decoupling import (PulseEvent,
                                      PulseSequence,
                                      cdd,
                                      cdd_bound_and_optimum,
                                      classify_error,
                                      decoupling_error,
                                      fit_slope,
                                      fixed_time_bound,
                                      format_sequence,
                                      free_evolution,
                                      hybrid_ddfs_two_qubit,
                                      parse_sequence,
                                      pauli_label,
                                      pulse_damage_bound,
                                      pulse_unitary,
                                      real_pulse_error_scan,
                                      simulate,
                                      smallness_ratios,
                                      symmetrize,
                                      xy4)
from decouplinglib.decouplinglibexceptions import (BranchAmbiguity,
                                                   DimensionMismatch,
                                                   GroupNotClosed,
                                                   InvalidParameter,
                                                   SequenceFormatError)
from decouplinglib.models import HamiltonianModel, build_model, total_hamiltonian
from decouplinglib.numericcore import (SIGMA_X,
                                       SIGMA_Z,
                                       TensorLayout,
                                       expm_skew_hermitian,
                                       pauli_string,
                                       phase_aligned_difference,
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

TAUS = [2.0 ** -exponent for exponent in range(10, 4, -1)]


def _error_phases(model, build, taus, code=None):
    phases = []
    for tau in taus:
        sequence = build(tau)
        report = decoupling_error(simulate(sequence, model), sequence.total_duration, model.layout, code)
        phases.append(report.error_phase)
    return phases


def _traceless(matrix):
    return matrix - np.trace(matrix) / matrix.shape[0] * np.eye(matrix.shape[0])


class TestPulses(unittest.TestCase):

    def test_pauli_label(self):
        self.assertEqual(pauli_label(1j * SIGMA_X), 'X')
        self.assertEqual(pauli_label(pauli_string('ZY')), 'ZY')
        self.assertIsNone(pauli_label(np.array([[1, 1], [1, -1]]) / math.sqrt(2)))
        self.assertIsNone(pauli_label(np.eye(3)))

    def test_event_validation(self):
        with self.assertRaises(InvalidParameter):
            PulseEvent.free(-1.0)
        with self.assertRaises(InvalidParameter):
            PulseEvent.ideal(np.array([[1, 1], [0, 1]]))
        with self.assertRaises(InvalidParameter):
            PulseEvent.real(SIGMA_X, 0.1, strength=1.0)
        with self.assertRaises(InvalidParameter):
            PulseEvent.real(SIGMA_X, 0.0)

    def test_real_pulse_area(self):
        event = PulseEvent.real(SIGMA_X, 0.1, name='X')
        self.assertAlmostEqual(event.duration, 0.1)
        np.testing.assert_allclose(event.control, 5 * math.pi * SIGMA_X)
        self.assertEqual(event.token, 'X')

    def test_mixed_dimensions(self):
        with self.assertRaises(DimensionMismatch):
            PulseSequence([PulseEvent.named('X'), PulseEvent.named('ZZ')])

    def test_hybrid_pulses(self):
        logical_x = pulse_unitary('Xbar')
        logical_z = pulse_unitary('Zbar')
        np.testing.assert_allclose(logical_x @ logical_x, pauli_string('ZZ'), atol=1e-12)
        np.testing.assert_allclose(logical_z @ logical_z, pauli_string('ZZ'), atol=1e-12)
        code = pairwise_code(1)
        np.testing.assert_allclose(code.restrict(logical_x), -1j * SIGMA_X, atol=1e-12)
        self.assertLess(code.leakage(logical_z), 1e-12)


class TestSequences(unittest.TestCase):

    def test_xy4_pattern(self):
        sequence = xy4(0.25)
        self.assertEqual(sequence.pattern, 'Z f X f Z f X f')
        self.assertAlmostEqual(sequence.total_duration, 1.0)
        self.assertEqual(sequence.free_segments, 4)

    def test_real_xy4_needs_width(self):
        with self.assertRaises(InvalidParameter):
            xy4(0.25, ideal=False)
        sequence = xy4(0.25, ideal=False, delta=0.01)
        self.assertAlmostEqual(sequence.total_duration, 1.04)

    def test_simulate_order(self):
        model = HamiltonianModel(1, 2)
        sequence = PulseSequence([PulseEvent.named('X'), PulseEvent.free(0.3), PulseEvent.named('Z')])
        np.testing.assert_allclose(simulate(sequence, model), tensor(SIGMA_X @ SIGMA_Z, np.eye(2)), atol=1e-12)

    def test_simulate_dimension_mismatch(self):
        with self.assertRaises(DimensionMismatch):
            simulate(PulseSequence([PulseEvent.named('ZZ')]), HamiltonianModel(1, 2))

    def test_symmetrize_klein(self):
        sequence = symmetrize(klein_group(), 0.1)
        self.assertEqual(sequence.free_segments, 4)
        self.assertEqual(sequence.pattern, 'Z f X f Z f X f')
        self.assertAlmostEqual(sequence.total_duration, 0.4)

    def test_symmetrize_not_closed(self):
        with self.assertRaises(GroupNotClosed):
            symmetrize([np.eye(2), SIGMA_X, SIGMA_Z], 0.1)

    def test_cdd_sizes(self):
        for level in (1, 2, 3):
            sequence = cdd(klein_group(), level, 0.01)
            self.assertEqual(sequence.free_segments, 4 ** level)
            self.assertAlmostEqual(sequence.total_duration, 4 ** level * 0.01)
            self.assertEqual(sequence.level, level)
        self.assertEqual(cdd(klein_group(), 1, 0.01).pattern, 'Z f X f Z f X f')

    def test_cdd_level_two_pattern(self):
        self.assertEqual(cdd(klein_group(), 2, 0.01).pattern,
                         'f X f Z f X f Y f X f Z f X f f X f Z f X f Y f X f Z f X f')

    def test_cdd_recursion(self):
        model = build_model('general', 1, bath_dim=4, seed=42)
        tau = 0.05
        previous = simulate(free_evolution(tau), model)
        for level in (1, 2, 3):
            expected = np.eye(model.dimension, dtype=complex)
            for element in reversed(klein_group()):
                lifted = tensor(element, np.eye(model.bath_dim))
                expected = expected @ lifted.conj().T @ previous @ lifted
            current = simulate(cdd(klein_group(), level, tau), model)
            self.assertLess(phase_aligned_difference(current, expected), 1e-10)
            previous = current

    def test_cdd_rejects(self):
        with self.assertRaises(InvalidParameter):
            cdd(klein_group(), 0, 0.01)
        with self.assertRaises(GroupNotClosed):
            cdd([np.eye(2), SIGMA_X, SIGMA_Z], 1, 0.01)
        group = klein_group()
        with self.assertRaises(InvalidParameter):
            cdd(group[1:] + group[:1], 1, 0.01)


class TestDecouplingError(unittest.TestCase):

    def setUp(self):
        self.layout = TensorLayout.qubits(1, 3)
        self.bath = random_hermitian(np.random.default_rng(7), 3)
        self.bath = self.bath / np.linalg.norm(self.bath, 2)

    def test_pure_bath_evolution(self):
        unitary = tensor(np.eye(2), expm_skew_hermitian(self.bath, 0.3))
        report = decoupling_error(unitary, 0.3, self.layout)
        self.assertLess(report.system_error, 1e-10)
        self.assertLess(report.bath_distance, 1e-10)

    def test_single_pauli_term(self):
        unitary = expm_skew_hermitian(tensor(SIGMA_Z, self.bath), 0.1)
        report = decoupling_error(unitary, 0.1, self.layout)
        self.assertAlmostEqual(report.system_error, 1.0, places=8)
        self.assertAlmostEqual(report.error_phase, 0.1, places=8)
        self.assertLess(report.components['X'], 1e-10)

    def test_invalid_arguments(self):
        unitary = np.eye(6)
        with self.assertRaises(InvalidParameter):
            decoupling_error(unitary, 0.0, self.layout)
        with self.assertRaises(DimensionMismatch):
            decoupling_error(unitary, 1.0, self.layout, pairwise_code(1))

    def test_branch_cut(self):
        with self.assertRaises(BranchAmbiguity):
            decoupling_error(tensor(pauli_string('ZZ'), np.eye(2)), 1.0, TensorLayout.qubits(2, 2))

    def test_code_compression(self):
        layout = TensorLayout.qubits(2, 2)
        unitary = tensor(pauli_string('ZZ'), np.eye(2))
        report = decoupling_error(unitary, 1.0, layout, pairwise_code(1))
        self.assertLess(report.system_error, 1e-10)
        self.assertLess(report.bath_distance, 1e-10)

    def test_fit_slope(self):
        self.assertAlmostEqual(fit_slope([1, 2, 4], [3, 12, 48]), 2.0)
        with self.assertRaises(InvalidParameter):
            fit_slope([1, 2], [1e-20, 1e-20])


class TestScaling(unittest.TestCase):

    def setUp(self):
        self.model = build_model('general', 1, bath_dim=4, coupling_norm=1.0, bath_norm=1.0, seed=42)

    def test_free_evolution(self):
        phases = _error_phases(self.model, free_evolution, TAUS)
        self.assertAlmostEqual(fit_slope(TAUS, phases), 1.0, delta=0.1)

    def test_xy4(self):
        phases = _error_phases(self.model, xy4, TAUS)
        self.assertAlmostEqual(fit_slope(TAUS, phases), 2.0, delta=0.15)

    def test_cdd_level_two(self):
        phases = _error_phases(self.model, lambda tau: cdd(klein_group(), 2, tau), TAUS)
        self.assertAlmostEqual(fit_slope(TAUS, phases), 3.0, delta=0.2)

    def test_cdd_level_three(self):
        taus = TAUS[:4]
        phases = _error_phases(self.model, lambda tau: cdd(klein_group(), 3, tau), taus)
        self.assertAlmostEqual(fit_slope(taus, phases), 4.0, delta=0.3)

    def test_xy4_beats_free_evolution(self):
        tau = TAUS[0]
        free, = _error_phases(self.model, free_evolution, [4 * tau])
        decoupled, = _error_phases(self.model, xy4, [tau])
        self.assertLess(decoupled, free)

    def test_real_pulse_width(self):
        model = build_model('pure_dephasing', 1, bath_dim=4, seed=42).with_bath_hamiltonian(None)
        deltas = [1e-5, 1e-4, 1e-3]
        rows = real_pulse_error_scan(model, 0.1, deltas)
        self.assertEqual([row.delta for row in rows], deltas)
        self.assertAlmostEqual(rows[0].strength, math.pi / 2e-5)
        slope = fit_slope(deltas, [row.system_error for row in rows])
        self.assertAlmostEqual(slope, 1.0, delta=0.15)

    def test_cdd_level_one(self):
        phases = _error_phases(self.model, lambda tau: cdd(klein_group(), 1, tau), TAUS)
        self.assertAlmostEqual(fit_slope(TAUS, phases), 2.0, delta=0.15)

    def test_symmetrize_collective_group(self):
        model = build_model('linear_independent_baths', 4, bath_dim=2, seed=42)
        taus = TAUS[:4]
        phases = _error_phases(model, lambda tau: symmetrize(collective_pauli_group(4), tau), taus)
        self.assertAlmostEqual(fit_slope(taus, phases), 2.0, delta=0.2)

    def test_symmetrize_averages_to_first_order(self):
        group = klein_group()
        target = _traceless(average_over_group(total_hamiltonian(self.model), group))

        def effective(tau):
            sequence = symmetrize(group, tau)
            report = decoupling_error(simulate(sequence, self.model), sequence.total_duration, self.model.layout)
            return _traceless(report.effective_hamiltonian)

        tau = 1e-3
        first = effective(tau)
        extrapolated = 2 * effective(tau / 2) - first
        self.assertLess(np.max(np.abs(extrapolated - target)), 1e-4)
        self.assertLess(np.max(np.abs(extrapolated - target)), np.max(np.abs(first - target)))

    def test_real_pulse_converges_to_ideal(self):
        ideal = tensor(-1j * SIGMA_X, np.eye(self.model.bath_dim))
        distances = []
        for delta in (1e-4, 1e-6, 1e-8, 1e-10):
            sequence = PulseSequence([PulseEvent.real(SIGMA_X, delta)])
            distances.append(phase_aligned_difference(simulate(sequence, self.model), ideal))
        self.assertEqual(distances, sorted(distances, reverse=True))
        self.assertLess(distances[-1], 1e-8)


class TestPureBath(unittest.TestCase):

    def setUp(self):
        """
        Test set up

        Models with H_SB = 0, so pulses never couple the system to the bath.
        """
        bath = random_hermitian(np.random.default_rng(7), 3)
        self.bath = bath / np.linalg.norm(bath, 2)
        self.model = HamiltonianModel(1, 3, bath_hamiltonian=self.bath)

    def test_bath_distance_vanishes(self):
        sequences = [free_evolution(0.2), xy4(0.2), xy4(0.2, ideal=False, delta=0.01),
                     symmetrize(klein_group(), 0.2), cdd(klein_group(), 2, 0.05)]
        for sequence in sequences:
            report = decoupling_error(simulate(sequence, self.model), sequence.total_duration, self.model.layout)
            self.assertLess(report.bath_distance, 1e-11, sequence.name)
            self.assertLess(report.system_error, 1e-9, sequence.name)

    def test_hybrid_bath_distance_vanishes(self):
        model = HamiltonianModel(2, 3, bath_hamiltonian=self.bath)
        hybrid = hybrid_ddfs_two_qubit(0.1)
        report = decoupling_error(simulate(hybrid.u3, model), hybrid.u3.total_duration, model.layout, hybrid.code)
        self.assertLess(report.bath_distance, 1e-11)

    def test_xy4_is_bath_evolution(self):
        tau = 0.2
        expected = tensor(np.eye(2), expm_skew_hermitian(self.bath, 4 * tau))
        self.assertLess(phase_aligned_difference(simulate(xy4(tau), self.model), expected), 1e-11)


class TestHybrid(unittest.TestCase):

    def setUp(self):
        self.result = hybrid_ddfs_two_qubit(0.1)

    def test_sequences(self):
        self.assertEqual(self.result.u1.pattern, 'Xbar f Xbar f')
        self.assertEqual(self.result.u3.free_segments, 8)
        self.assertAlmostEqual(self.result.u3.total_duration, 0.8)

    def test_classification(self):
        classes = dict(self.result.classification)
        self.assertEqual(classes['ZZ'], 'unchanged')
        self.assertEqual(classes['Z1+Z2'], 'unchanged')
        self.assertEqual(classes['sz_bar'], 'logical')
        self.assertEqual(classes['sx_bar'], 'logical')
        self.assertEqual(classes['XI'], 'leakage')
        self.assertEqual(classify_error(pauli_string('II'), self.result.code), 'unchanged')

    def test_parity_anticommutes_with_leakage(self):
        leakage = [label for label, kind in self.result.classification if kind == 'leakage' and len(label) == 2
                   and set(label) <= set('IXYZ')]
        self.assertEqual(len(leakage), 8)
        parity = pauli_string('ZZ')
        for label in leakage:
            operator_ = pauli_string(label)
            np.testing.assert_allclose(parity @ operator_ @ parity, -operator_, atol=1e-12)

    def test_code_projected_scaling(self):
        model = build_model('general', 2, bath_dim=4, coupling_norm=1.0, bath_norm=1.0, seed=42)
        phases = _error_phases(model, lambda tau: hybrid_ddfs_two_qubit(tau).u3, TAUS, self.result.code)
        self.assertAlmostEqual(fit_slope(TAUS, phases), 2.0, delta=0.2)

    def test_swapped_logical_pulses(self):
        model = build_model('general', 2, bath_dim=4, coupling_norm=1.0, bath_norm=1.0, seed=42)

        def swapped(tau):
            free = PulseEvent.free(tau)
            logical_z, parity, logical_x = (PulseEvent.named(name) for name in ('Zbar', 'ZZ', 'Xbar'))
            inner = (logical_z, free, logical_z, free)
            middle = (parity,) + inner + (parity,) + inner
            return PulseSequence((logical_x,) + middle + (logical_x,) + middle)

        phases = _error_phases(model, swapped, TAUS, self.result.code)
        self.assertAlmostEqual(fit_slope(TAUS, phases), 2.0, delta=0.2)


class TestBounds(unittest.TestCase):

    def test_optimal_level(self):
        table = cdd_bound_and_optimum(0.5, 1.0, 1 / 64, 4)
        self.assertAlmostEqual(table.optimal_level, 2.0)
        self.assertEqual(table.optimal_level_floor, 2)
        self.assertEqual(table.verdict, 'concatenate to level 2')
        self.assertAlmostEqual(table.rows[0].duration, 4 / 64)
        self.assertAlmostEqual(table.rows[0].bound, 4 / 64 * 2 * (1 / 64) * 0.5)
        self.assertEqual([row.level for row in table.rows], [1, 2, 3, 4])

    def test_no_concatenation(self):
        table = cdd_bound_and_optimum(0.5, 1.0, 0.5, 3)
        self.assertFalse(table.concatenate)
        self.assertEqual(table.verdict, 'do not concatenate')

    def test_bound_assumptions(self):
        with self.assertRaises(InvalidParameter):
            cdd_bound_and_optimum(2.0, 1.0, 0.01, 3)
        with self.assertRaises(InvalidParameter):
            cdd_bound_and_optimum(0.5, 1.0, 0.0, 3)

    def test_fixed_time(self):
        rows = fixed_time_bound(0.5, 1.0, 5.0, 4)
        self.assertEqual([row.decreasing for row in rows], [False, False, True, True])
        self.assertAlmostEqual(rows[0].bound, 0.5 * 5.0 * 2.5)
        with self.assertRaises(InvalidParameter):
            fixed_time_bound(0.5, 1.0, 0.0, 4)

    def test_pulse_width_figures(self):
        self.assertAlmostEqual(pulse_damage_bound(0.01, 2.0), math.pi * 0.01)
        ratio, product = smallness_ratios(0.01, 0.1, 1.0, 1.0)
        self.assertAlmostEqual(ratio, 0.1)
        self.assertAlmostEqual(product, 0.2)


class TestSequenceText(unittest.TestCase):

    def test_parse(self):
        sequence = parse_sequence('free 0.1\npulse X\n\n# comment\nrealpulse Z 0.01\n')
        self.assertEqual(len(sequence), 3)
        self.assertEqual(sequence.pattern, 'f X Z')
        self.assertAlmostEqual(sequence.total_duration, 0.11)

    def test_parse_errors(self):
        with self.assertRaisesRegex(SequenceFormatError, 'Line 2'):
            parse_sequence('free 0.1\nwobble\n')
        with self.assertRaisesRegex(SequenceFormatError, 'Line 1'):
            parse_sequence('pulse Q\n')
        with self.assertRaisesRegex(SequenceFormatError, 'Line 3'):
            parse_sequence('free 0.1\n\nfree -1\n')
        with self.assertRaises(SequenceFormatError):
            parse_sequence('pulse X\npulse ZZ\n')

    def test_format(self):
        text = format_sequence(xy4(0.5))
        self.assertEqual(text.splitlines()[:2], ['pulse Z', 'free 0.5'])
        self.assertEqual(parse_sequence(text).pattern, xy4(0.5).pattern)
        with self.assertRaises(SequenceFormatError):
            format_sequence(PulseSequence([PulseEvent.ideal(np.array([[1, 1], [1, -1]]) / math.sqrt(2))]))
