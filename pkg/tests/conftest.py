# -*- coding: utf-8 -*-
#
#         ToricGB: Groebner Bases of Simplicial Toric Ideals
#   ---------------------------------------------------------------
#     [  Documentation: README.md and docs/ in the source tree    ]
#
# Copyright (C) 2021 The ToricGB Developers.
#
# ToricGB is licensed under the BSD 3-Clause License; see the included
# LICENSE file for details.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT.  IN NO EVENT SHALL THE
# AUTHORS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY, WHETHER IN AN
# ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM, OUT OF OR IN CONNECTION
# WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE SOFTWARE.
#

""" ToricGB Test Configuration

This file includes all pytest configuration for running ToricGB's tests,
mainly fixtures for the small configurations that the tests share.
"""

# Standard Library Imports
import os

# Third-Party Library Imports
import pytest
from hypothesis import settings

# ToricGB Library Imports
from toricgb.lattice import configuration_from_deleted
from toricgb.lattice import validate_configuration


#
# Hypothesis Profiles
#

# The thorough profile runs the property suite on a corpus of 500 configurations;
# select it with TORICGB_HYPOTHESIS_PROFILE=thorough.
settings.register_profile('fast', max_examples=30, deadline=None)
settings.register_profile('thorough', max_examples=500, deadline=None)
settings.load_profile(os.environ.get('TORICGB_HYPOTHESIS_PROFILE', 'fast'))


#
# PyTest Fixtures
#

@pytest.fixture
def four_point_config():
    """ A = {(4,0),(3,1),(1,3),(0,4)}: the smallest configuration whose lex and
    revlex bases differ in degree. """
    return validate_configuration(4, 2, [(4, 0), (3, 1), (1, 3), (0, 4)])


@pytest.fixture
def twisted_cubic_config():
    """ A = {(3,0),(2,1),(1,2),(0,3)}, the full simplex M_{3,2}. """
    return validate_configuration(3, 2, [(3, 0), (2, 1), (1, 2), (0, 3)])


@pytest.fixture
def missing_edge_point_config():
    """ M_{3,3} minus (2,1,0). """
    return configuration_from_deleted(3, 3, [(2, 1, 0)])
