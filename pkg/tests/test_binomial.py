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

""" ToricGB toricgb.gb.binomial Tests

This file includes unit tests for pure-difference binomials, S-binomials and
normal forms.
"""

# Standard project pylint disables for unit tests using pytest.
# pylint: disable=no-self-use, protected-access, multiple-statements, invalid-name

# Third-Party Library Imports
import pytest

# ToricGB Library Imports
from toricgb.gb import GREVLEX
from toricgb.gb import Binomial
from toricgb.gb import Reducer
from toricgb.gb import TermOrder
from toricgb.gb import UniverseMismatch
from toricgb.gb import normal_form
from toricgb.gb import s_binomial
from toricgb.platform import ExponentOverflow


ORDER = TermOrder(GREVLEX)

# Reduced revlex basis of the toric ideal of {(4,0),(3,1),(1,3),(0,4)}.
FOUR_POINT_BASIS = [
    Binomial((1, 1, 0, 0), (0, 0, 1, 1)),
    Binomial((3, 0, 0, 0), (0, 1, 2, 0)),
    Binomial((0, 3, 0, 0), (1, 0, 0, 2)),
    Binomial((0, 2, 1, 0), (2, 0, 0, 1)),
]


def test_from_terms():
    """ The larger term becomes the lead; equal terms give the zero binomial. """
    binomial = Binomial.from_terms((0, 0, 1, 1), (1, 1, 0, 0), ORDER)
    assert binomial.lead == (1, 1, 0, 0)
    assert binomial.tail == (0, 0, 1, 1)
    assert binomial.degree() == 2
    assert Binomial.from_terms((1, 0), (1, 0), ORDER) is None
    with pytest.raises(UniverseMismatch):
        Binomial((1, 0), (1, 0, 0))


def test_homogeneity():
    binomial = Binomial((2, 0, 0), (0, 1, 0))
    assert not binomial.is_homogeneous()
    assert binomial.is_homogeneous(weights=(1, 2, 1))
    assert binomial.weighted_degrees((1, 2, 1)) == (2, 2)


def test_cancel_common_factor():
    binomial = Binomial((2, 1, 0), (1, 0, 1))
    assert binomial.cancel_common_factor() == Binomial((1, 1, 0), (0, 0, 1))
    coprime = Binomial((1, 1, 0), (0, 0, 1))
    assert coprime.cancel_common_factor() is coprime


def test_multiply():
    assert Binomial((1, 0), (0, 1)).multiply((1, 1)) == Binomial((2, 1), (1, 2))
    with pytest.raises(ExponentOverflow):
        Binomial((1, 0), (0, 1)).multiply((65535, 0))


def test_s_binomial():
    """ S(x^2 - y, xy - z) = xz - y^2, normalized so y^2 leads. """
    f = Binomial((2, 0, 0), (0, 1, 0))
    g = Binomial((1, 1, 0), (0, 0, 1))
    assert s_binomial(f, g, ORDER) == Binomial((0, 2, 0), (1, 0, 1))
    assert s_binomial(f, f, ORDER) is None
    with pytest.raises(UniverseMismatch):
        s_binomial(f, Binomial((1, 0), (0, 1)), ORDER)


def test_normal_form():
    """ x2^2*y1^2 - x1^2*y1*y2 reduces to zero in one step. """
    relation = Binomial.from_terms((0, 2, 2, 0), (2, 0, 1, 1), ORDER)
    assert normal_form(relation, FOUR_POINT_BASIS, ORDER) is None
    # A multiple of a basis element.
    multiple = FOUR_POINT_BASIS[0].multiply((1, 0, 0, 0))
    assert normal_form(multiple, FOUR_POINT_BASIS[:1], ORDER) is None
    # y1 - y2 is in normal form.
    irreducible = Binomial.from_terms((0, 0, 1, 0), (0, 0, 0, 1), ORDER)
    assert normal_form(irreducible, FOUR_POINT_BASIS, ORDER) == irreducible
    assert normal_form(None, FOUR_POINT_BASIS, ORDER) is None


def test_reducer():
    reducer = Reducer(FOUR_POINT_BASIS, ORDER)
    assert len(reducer) == 4
    assert reducer.find_divisor((1, 1, 1, 0)) == 0
    assert reducer.find_divisor((0, 0, 5, 5)) is None
    # x1^4 -> x1*x2*y1^2 -> y1^3*y2.
    assert reducer.reduce_monomial((4, 0, 0, 0)) == (0, 0, 3, 1)
