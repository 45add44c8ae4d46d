#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: decouplinglibexceptions.py
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
Custom exception code for decouplinglib.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

__author__ = '''Costas Tyfoxylos <costas.tyf@gmail.com>'''
__docformat__ = '''google'''
__date__ = '''18-10-2026'''
__copyright__ = '''Copyright 2026, Costas Tyfoxylos'''
__credits__ = ["Costas Tyfoxylos"]
__license__ = '''MIT'''
__maintainer__ = '''Costas Tyfoxylos'''
__email__ = '''<costas.tyf@gmail.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".


class DecouplingLibError(Exception):
    """Base class for every error raised by decouplinglib."""


class DimensionMismatch(DecouplingLibError, ValueError):
    """Operands do not share the dimensions the operation requires."""


class NotHermitian(DecouplingLibError, ValueError):
    """A matrix expected to be Hermitian is not, within tolerance."""


class NotUnitary(DecouplingLibError, ValueError):
    """A matrix expected to be unitary is not, within tolerance."""


class BranchAmbiguity(DecouplingLibError, ValueError):
    """A unitary has an eigenphase too close to the principal branch cut to take its logarithm."""


class InvalidIndex(DecouplingLibError, IndexError):
    """A tensor factor or qubit index is out of range."""


class InvalidParameter(DecouplingLibError, ValueError):
    """A scalar parameter is outside of its allowed range."""


class GroupNotClosed(DecouplingLibError, ValueError):
    """A list of unitaries is not closed under multiplication up to a global phase."""


class ValidationFailed(DecouplingLibError):
    """A constructed object failed its structural self check."""


class MatrixFormatError(DecouplingLibError, ValueError):
    """A text matrix file could not be parsed."""


class SequenceFormatError(DecouplingLibError, ValueError):
    """A pulse sequence description could not be parsed."""


class ConfigurationError(DecouplingLibError, ValueError):
    """An experiment or model description is invalid.

    Args:
        message (str): The description of the problem.
        field (str): The dotted name of the offending field if known.
        line (int): The line in the source file if known.
        path (str): The file the configuration was read from if known.

    """

    def __init__(self, message, field=None, line=None, path=None):
        self.message = message
        self.field = field
        self.line = line
        self.path = path
        location = ', '.join(part for part in (f'file {path}' if path else '',
                                               f'line {line}' if line else '',
                                               f'field "{field}"' if field else '') if part)
        super().__init__(f'{message} ({location})' if location else message)
