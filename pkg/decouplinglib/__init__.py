#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: __init__.py
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
decouplinglib package.

Import all parts from decouplinglib here

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html
"""
from .algebra import (AlgebraDecomposition,
                      OperatorSpace,
                      algebra_closure,
                      average_over_group,
                      check_group_closure,
                      collective_pauli_group,
                      commutant,
                      decompose)
from .codes import (CodeSpace,
                    bratteli_paths,
                    decoherence_dfs_dimension,
                    dephasing_dfs_enumerate,
                    dfs_check_hamiltonian,
                    dfs_check_kraus,
                    exchange_op,
                    four_qubit_dfs,
                    multiplicity_formula,
                    spin_tower,
                    three_qubit_ns_code)
from .decoupling import (PulseEvent,
                         PulseSequence,
                         cdd,
                         cdd_bound_and_optimum,
                         decoupling_error,
                         hybrid_ddfs_two_qubit,
                         real_pulse_error_scan,
                         simulate,
                         symmetrize,
                         xy4)
from .harness import ExperimentConfig, SweepResult, deutsch_demo, rate_table, run_sweep
from .models import (HamiltonianModel,
                     KrausChannel,
                     build_model,
                     collective_dephasing_channel,
                     evolution_operator)
from .numericcore import DensityMatrix, StateVector, TensorLayout, partial_trace
from ._version import __version__

__author__ = '''Costas Tyfoxylos <costas.tyf@gmail.com>'''
__docformat__ = '''google'''
__date__ = '''18-10-2026'''
__copyright__ = '''Copyright 2026, Costas Tyfoxylos'''
__credits__ = ["Costas Tyfoxylos"]
__license__ = '''MIT'''
__maintainer__ = '''Costas Tyfoxylos'''
__email__ = '''<costas.tyf@gmail.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".

# This is to 'use' the module(s), so lint doesn't complain
assert __version__

assert AlgebraDecomposition
assert OperatorSpace
assert algebra_closure
assert average_over_group
assert check_group_closure
assert collective_pauli_group
assert commutant
assert decompose
assert CodeSpace
assert bratteli_paths
assert decoherence_dfs_dimension
assert dephasing_dfs_enumerate
assert dfs_check_hamiltonian
assert dfs_check_kraus
assert exchange_op
assert four_qubit_dfs
assert multiplicity_formula
assert spin_tower
assert three_qubit_ns_code
assert PulseEvent
assert PulseSequence
assert cdd
assert cdd_bound_and_optimum
assert decoupling_error
assert hybrid_ddfs_two_qubit
assert real_pulse_error_scan
assert simulate
assert symmetrize
assert xy4
assert ExperimentConfig
assert SweepResult
assert deutsch_demo
assert rate_table
assert run_sweep
assert HamiltonianModel
assert KrausChannel
assert build_model
assert collective_dephasing_channel
assert evolution_operator
assert DensityMatrix
assert StateVector
assert TensorLayout
assert partial_trace
