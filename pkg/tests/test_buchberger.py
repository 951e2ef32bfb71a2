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

""" ToricGB toricgb.gb.buchberger Tests

This file includes unit tests for Buchberger's algorithm, its pair selection
and criteria options, reduced bases and initial ideals.
"""

# Standard project pylint disables for unit tests using pytest.
# pylint: disable=no-self-use, protected-access, multiple-statements, invalid-name
# pylint: disable=redefined-outer-name

# Third-Party Library Imports
import pytest

# ToricGB Library Imports
from toricgb.gb import GREVLEX
from toricgb.gb import Binomial
from toricgb.gb import BuchbergerStats
from toricgb.gb import GroebnerBasis
from toricgb.gb import NotWeightHomogeneous
from toricgb.gb import TermOrder
from toricgb.gb import UniverseMismatch
from toricgb.gb import VariableUniverse
from toricgb.gb import buchberger
from toricgb.gb import initial_ideal
from toricgb.gb import is_groebner_basis
from toricgb.gb import reduce_basis
from toricgb.pipeline import build_elimination_system
from toricgb.pipeline import elimination_order
from toricgb.pipeline import elimination_weights


ORDER = TermOrder(GREVLEX)
UNIVERSE = VariableUniverse.for_toric(2, 2)

# The three quadrics of the twisted cubic over x1, x2, y1, y2.
TWISTED_CUBIC = [
    Binomial.from_terms((2, 0, 0, 0), (0, 1, 1, 0), ORDER),
    Binomial.from_terms((1, 1, 0, 0), (0, 0, 1, 1), ORDER),
    Binomial.from_terms((0, 2, 0, 0), (1, 0, 0, 1), ORDER),
]


def _strings(basis):
    return set(UNIVERSE.format_binomial(element) for element in basis)


def test_twisted_cubic():
    """ The quadrics are already a Groebner basis. """
    stats = BuchbergerStats()
    basis = buchberger(TWISTED_CUBIC, ORDER, stats=stats)
    assert is_groebner_basis(basis)
    reduced = reduce_basis(basis)
    assert reduced.reduced
    assert _strings(reduced) == {'x1^2 - x2*y1', 'x1*x2 - y1*y2', 'x2^2 - x1*y2'}
    assert stats.basis_size == len(basis)
    assert stats.pairs_reduced <= stats.pairs_created
    # Leads sorted ascending in the order.
    assert reduced.leads() == [(0, 2, 0, 0), (1, 1, 0, 0), (2, 0, 0, 0)]


def test_is_groebner_basis():
    """ Dropping x2^2*y1 - x1^2*y2 from the four point basis breaks it. """
    partial = GroebnerBasis(ORDER, [
        Binomial((1, 1, 0, 0), (0, 0, 1, 1)),
        Binomial((3, 0, 0, 0), (0, 1, 2, 0)),
        Binomial((0, 3, 0, 0), (1, 0, 0, 2)),
    ])
    assert not is_groebner_basis(partial)
    completed = reduce_basis(buchberger(partial.elements, ORDER))
    assert is_groebner_basis(completed)
    assert len(completed) > len(partial)


@pytest.mark.parametrize('selection', ['normal', 'fifo', 'degree'])
@pytest.mark.parametrize('elimination', ['gebauermoeller', 'lcm', 'none'])
def test_strategies_agree(four_point_config, selection, elimination):
    """ Every strategy gives the same reduced basis of J_A. """
    cfg = four_point_config
    order = elimination_order(cfg)
    gens = build_elimination_system(cfg, order)
    weights = elimination_weights(cfg)
    expected = reduce_basis(buchberger(gens, order, weights=weights))
    computed = reduce_basis(buchberger(gens, order, weights=weights, selection=selection,
                                       elimination=elimination))
    assert computed == expected
    assert is_groebner_basis(computed)


def test_without_cancellation(four_point_config):
    cfg = four_point_config
    order = elimination_order(cfg)
    gens = build_elimination_system(cfg, order)
    assert reduce_basis(buchberger(gens, order, cancel_common_factors=False)) == \
        reduce_basis(buchberger(gens, order))


def test_truncation_requires_homogeneity():
    with pytest.raises(NotWeightHomogeneous):
        buchberger([Binomial((2, 0), (0, 1))], TermOrder(GREVLEX), truncation=4)


def test_buchberger_errors():
    with pytest.raises(UniverseMismatch):
        buchberger([Binomial((2, 0), (0, 1)), Binomial((1, 1, 0), (0, 0, 1))], ORDER)
    with pytest.raises(ValueError):
        buchberger(TWISTED_CUBIC, ORDER, selection='sugar')
    with pytest.raises(ValueError):
        buchberger(TWISTED_CUBIC, ORDER, elimination='chain')


def test_initial_ideal():
    basis = buchberger(TWISTED_CUBIC, ORDER)
    assert initial_ideal(basis) == frozenset([(2, 0, 0, 0), (1, 1, 0, 0), (0, 2, 0, 0)])


def test_groebner_basis_dict():
    basis = reduce_basis(buchberger(TWISTED_CUBIC, ORDER))
    data = basis.to_dict(UNIVERSE)
    assert data['variables'] == ['x1', 'x2', 'y1', 'y2']
    assert data['binomials'][0] == 'x2^2 - x1*y2'
    assert data['order'] == {'kind': GREVLEX, 'split': 0, 'tail_kind': GREVLEX}
    assert GroebnerBasis.from_dict(data) == basis
    assert basis.max_degree() == 2
