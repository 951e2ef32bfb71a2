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


""" ``toricgb`` Module

This is the main ToricGB module, containing imports of the commonly used
classes and functions so they can be directly accessed from the toricgb module
in addition to being directly imported (e.g. `from toricgb import bound_report`
is the same as `from toricgb.pipeline import bound_report`).

This file also contains the ToricGB version string (displayed when calling
'toricgb version'), the about string for license/copyright information
(when calling 'toricgb about').
"""

# Commonly used classes and functions for easier use directly from the toricgb
# namespace (e.g. toricgb.Configuration instead of toricgb.lattice.Configuration).
from toricgb.lattice import Configuration
from toricgb.lattice import validate_configuration
from toricgb.lattice import configuration_from_deleted
from toricgb.lattice import full_configuration
from toricgb.semigroup import SemigroupEngine
from toricgb.pipeline import BoundReport
from toricgb.pipeline import bound_report
from toricgb.pipeline import toric_groebner
from toricgb.sweep import SweepManager
from toricgb.sweep import SweepSpec
from toricgb.result_store import ResultStore


# Used for module identification and when printing version & about info
# (e.g. calling `toricgb version` or `toricgb about`).
__version__ = 'v0.3.0'

# About & copyright message string shown for the 'about' CLI command (toricgb about).

ABOUT_STRING = """
Documentation: README.md and docs/ in the source tree

Copyright (C) 2021 The ToricGB Developers. All rights reserved.

ToricGB is released under the BSD 3-Clause license. See the
included LICENSE file for details.
This software uses the following third-party components:

  > NumPy [Copyright (C) 2005-2021, NumPy Developers]
  > SymPy [Copyright (C) 2006-2021, SymPy Development Team]
  > click [Copyright (C) 2014, Pallets / Armin Ronacher]
  > tqdm [Copyright (C) 2013-2021, tqdm developers]

THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT.
"""
