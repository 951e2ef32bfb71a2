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

""" ToricGB Property-Based Tests

This file includes hypothesis tests checking the proved bounds and the
internal cross-checks on random small configurations, together with the
algebraic laws the term orders must satisfy.
"""

# Standard project pylint disables for unit tests using pytest.
# pylint: disable=no-self-use, protected-access, multiple-statements, invalid-name

# Third-Party Library Imports
import numpy
from hypothesis import given
from hypothesis import strategies as st

# ToricGB Library Imports
from toricgb.gb import GREATER
from toricgb.gb import GREVLEX
from toricgb.gb import LEX
from toricgb.gb import TermOrder
from toricgb.gb import compare
from toricgb.gb import is_groebner_basis
from toricgb.lattice import configuration_from_deleted
from toricgb.lattice import enumerate_simplex_points
from toricgb.lattice import is_corner_point
from toricgb.pipeline import bound_report
from toricgb.pipeline import toric_groebner
from toricgb.pipeline import truncated_toric_groebner
from toricgb.pipeline import verify_membership
from toricgb.sweep import canonical_form


# Every M_{alpha,d} with alpha, d <= 4; configurations keep at most MAX_CODIM points.
SMALL_SIMPLICES = [(alpha, d) for alpha in range(2, 5) for d in range(2, 5)]
MAX_CODIM = 12


@st.composite
def configurations(draw):
    """ M_{alpha,d} minus a random proper subset of its non-corner points, with
    at most MAX_CODIM points left. """
    alpha, d = draw(st.sampled_from(SMALL_SIMPLICES))
    non_corner = [p for p in enumerate_simplex_points(alpha, d) if not is_corner_point(p, alpha)]
    deleted = draw(st.lists(st.sampled_from(non_corner), unique=True,
                            min_size=max(0, len(non_corner) - MAX_CODIM),
                            max_size=len(non_corner) - 1))
    return configuration_from_deleted(alpha, d, deleted)


monomials = st.lists(st.integers(min_value=0, max_value=5), min_size=4, max_size=4).map(tuple)


@given(configurations())
def test_bounds_hold(cfg):
    """ bound_report runs every proved check and raises on any failure. """
    report = bound_report(cfg, compute_JA_maxdeg=True)
    assert report.r <= report.deg - report.c
    assert report.maxdeg_revlex <= report.bound_thmA1
    assert report.hilbert_multiplicity == report.deg
    assert report.hilbert_dimension == cfg.d
    assert report.maxdeg_JA <= report.bound_propA6


@given(configurations(), st.integers(min_value=0, max_value=2**32 - 1))
def test_random_relations_reduce_to_zero(cfg, seed):
    verify_membership(cfg, toric_groebner(cfg), count=20, rng=numpy.random.default_rng(seed))


@given(configurations())
def test_groebner_basis_is_sound(cfg):
    """ The reduced basis passes the S-pair check, and neither pair selection
    nor truncation at the proved cap changes it. """
    basis = toric_groebner(cfg)
    assert cfg.c <= MAX_CODIM
    assert is_groebner_basis(basis)
    assert toric_groebner(cfg, selection='fifo').elements == basis.elements
    assert truncated_toric_groebner(cfg).elements == basis.elements

@given(configurations(), st.permutations([0, 1, 2, 3]))
def test_canonical_form_permutation_invariant(cfg, perm):
    perm = [i for i in perm if i < cfg.d]
    permuted = [tuple(p[i] for i in perm) for p in cfg.a_points]
    assert canonical_form(permuted, cfg.d) == canonical_form(cfg.a_points, cfg.d)


@given(st.sampled_from([TermOrder(GREVLEX), TermOrder(LEX), TermOrder.elimination(2)]),
       monomials, monomials, monomials)
def test_term_order_laws(order, u, v, w):
    """ Antisymmetry, and compatibility with multiplication. """
    assert compare(order, u, v) == -compare(order, v, u)
    assert (compare(order, u, v) == 0) == (u == v)
    if compare(order, u, v) == GREATER:
        uw = tuple(a + b for a, b in zip(u, w))
        vw = tuple(a + b for a, b in zip(v, w))
        assert compare(order, uw, vw) == GREATER
