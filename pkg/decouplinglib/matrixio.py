#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: matrixio.py
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
Text matrix format shared by codes, generator sets, groups and decomposition transforms.

A file holds one or more blocks. Each block starts with a header line ``matrix <rows> <cols> [name]`` followed
by ``rows`` lines of ``2 * cols`` numbers, the real and imaginary part of every entry. Lines starting with
``#`` are comments and blank lines are ignored.

"""

import logging
from pathlib import Path

import numpy as np

from .configuration import MATRIX_SIGNIFICANT_DIGITS
from .decouplinglibexceptions import MatrixFormatError

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
LOGGER_BASENAME = 'decouplinglib.matrixio'
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())


def format_number(value, digits=MATRIX_SIGNIFICANT_DIGITS):
    """Formats a real number with a fixed count of significant digits, locale independent."""
    value = float(value)
    if value == 0:
        value = 0.0
    return f'{value:.{digits}g}'


def format_matrix(matrix, name=None, digits=MATRIX_SIGNIFICANT_DIGITS):
    """Renders one matrix block.

    Args:
        matrix: The complex matrix.
        name (str): An optional single word name stored on the header line.
        digits (int): Significant digits per real number.

    Returns:
        text (str): The block including its header, newline terminated.

    """
    matrix = np.atleast_2d(np.asarray(matrix, dtype=complex))
    rows, columns = matrix.shape
    header = f'matrix {rows} {columns}' + (f' {name}' if name else '')
    lines = [header]
    for row in matrix:
        lines.append(' '.join(f'{format_number(entry.real, digits)} {format_number(entry.imag, digits)}'
                              for entry in row))
    return '\n'.join(lines) + '\n'


def dumps(matrices, comments=None, digits=MATRIX_SIGNIFICANT_DIGITS):
    """Renders a sequence of ``(name, matrix)`` pairs, optionally preceded by comment lines."""
    lines = [f'# {comment}\n' for comment in (comments or [])]
    return ''.join(lines) + ''.join(format_matrix(matrix, name, digits) for name, matrix in matrices)


def loads(text):
    """Parses every matrix block of a text.

    Args:
        text (str): The file contents.

    Returns:
        matrices (list): ``(name, matrix)`` pairs in file order, name None when absent.

    Raises:
        MatrixFormatError: On malformed headers, short rows or non numeric entries, naming the line.

    """
    lines = [(number, line.strip()) for number, line in enumerate(text.splitlines(), start=1)]
    lines = [(number, line) for number, line in lines if line and not line.startswith('#')]
    matrices = []
    position = 0
    while position < len(lines):
        number, header = lines[position]
        fields = header.split()
        if len(fields) not in (3, 4) or fields[0] != 'matrix':
            raise MatrixFormatError(f'Line {number}: expected "matrix <rows> <cols> [name]", got "{header}"')
        try:
            rows, columns = int(fields[1]), int(fields[2])
        except ValueError:
            raise MatrixFormatError(f'Line {number}: invalid dimensions in "{header}"') from None
        if rows < 1 or columns < 1:
            raise MatrixFormatError(f'Line {number}: dimensions must be positive')
        body = lines[position + 1:position + 1 + rows]
        if len(body) != rows:
            raise MatrixFormatError(f'Line {number}: expected {rows} rows, found {len(body)}')
        matrix = np.empty((rows, columns), dtype=complex)
        for row_index, (row_number, row) in enumerate(body):
            try:
                values = [float(value) for value in row.split()]
            except ValueError:
                raise MatrixFormatError(f'Line {row_number}: non numeric entry') from None
            if len(values) != 2 * columns:
                raise MatrixFormatError(f'Line {row_number}: expected {2 * columns} numbers, found {len(values)}')
            matrix[row_index] = np.array(values[0::2]) + 1j * np.array(values[1::2])
        matrices.append((fields[3] if len(fields) == 4 else None, matrix))
        position += 1 + rows
    LOGGER.debug('Parsed %s matrices', len(matrices))
    return matrices


def save_matrices(path, matrices, comments=None):
    """Writes ``(name, matrix)`` pairs to a file."""
    Path(path).write_text(dumps(matrices, comments), encoding='utf-8')


def load_matrices(path):
    """Reads every ``(name, matrix)`` pair of a file.

    Raises:
        MatrixFormatError: If the file is missing or malformed.

    """
    try:
        text = Path(path).read_text(encoding='utf-8')
    except OSError as error:
        raise MatrixFormatError(f'Unable to read matrix file {path}: {error}') from None
    return loads(text)
