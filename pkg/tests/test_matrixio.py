#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: test_matrixio.py
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
test_matrixio
----------------------------------
Tests for `matrixio` module.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import tempfile
import unittest
from pathlib import Path

import numpy as np

from decouplinglib.decouplinglibexceptions import MatrixFormatError
from decouplinglib.matrixio import dumps, format_number, load_matrices, loads, save_matrices

__author__ = '''Costas Tyfoxylos <costas.tyf@gmail.com>'''
__docformat__ = '''google'''
__date__ = '''18-10-2026'''
__copyright__ = '''Copyright 2026, Costas Tyfoxylos'''
__credits__ = ["Costas Tyfoxylos"]
__license__ = '''MIT'''
__maintainer__ = '''Costas Tyfoxylos'''
__email__ = '''<costas.tyf@gmail.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".


class TestMatrixText(unittest.TestCase):

    def test_numbers_keep_seventeen_digits(self):
        self.assertEqual(format_number(0.1), '0.10000000000000001')
        self.assertEqual(format_number(-0.0), '0')
        self.assertEqual(float(format_number(1 / 3)), 1 / 3)

    def test_blocks_with_comments_and_names(self):
        hadamard = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
        text = dumps([('h', hadamard), (None, 1j * np.eye(2))], comments=['two gates'])
        self.assertTrue(text.startswith('# two gates\nmatrix 2 2 h\n'))
        (first_name, first), (second_name, second) = loads(text)
        self.assertEqual(first_name, 'h')
        self.assertIsNone(second_name)
        np.testing.assert_array_equal(first, hadamard)
        np.testing.assert_array_equal(second, 1j * np.eye(2))

    def test_rectangular_isometry(self):
        _, matrix = loads('matrix 2 1 column\n1 0\n0 -1\n')[0]
        np.testing.assert_array_equal(matrix, np.array([[1], [-1j]]))

    def test_errors_name_the_line(self):
        with self.assertRaisesRegex(MatrixFormatError, 'Line 1'):
            loads('matrx 2 2\n')
        with self.assertRaisesRegex(MatrixFormatError, 'Line 3'):
            loads('# header\nmatrix 1 2\n1 0 0\n')
        with self.assertRaisesRegex(MatrixFormatError, 'Line 2'):
            loads('matrix 1 1\n1 zero\n')
        with self.assertRaisesRegex(MatrixFormatError, 'expected 2 rows'):
            loads('matrix 2 1\n1 0\n')

    def test_files(self):
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory, 'generators.txt')
            save_matrices(path, [('z', np.diag([1, -1]))])
            self.assertEqual(load_matrices(path)[0][0], 'z')
            with self.assertRaises(MatrixFormatError):
                load_matrices(Path(directory, 'missing.txt'))


if __name__ == '__main__':
    unittest.main()
