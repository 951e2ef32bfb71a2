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

""" ``toricgb.gb`` Module

The binomial Groebner basis engine: term orders, pure-difference binomials,
Buchberger's algorithm, reduced bases and initial ideals, and the Hilbert series
oracle for monomial ideals.

The commonly used names are imported here for easy access from other modules
(i.e. ``from toricgb.gb import buchberger``).
"""

# ToricGB Groebner Engine Imports
from toricgb.gb.term_order import GREVLEX, LEX, ELIMINATION
from toricgb.gb.term_order import LESS, EQUAL, GREATER
from toricgb.gb.term_order import TermOrder, VariableUniverse, UniverseMismatch, compare
from toricgb.gb.binomial import Binomial, Reducer, s_binomial, normal_form
from toricgb.gb.buchberger import GroebnerBasis, BuchbergerStats, NotWeightHomogeneous
from toricgb.gb.buchberger import buchberger, reduce_basis, initial_ideal, is_groebner_basis
from toricgb.gb.hilbert import hilbert_numerator, hilbert_data
