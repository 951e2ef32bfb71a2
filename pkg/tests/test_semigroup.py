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

""" ToricGB toricgb.semigroup Tests

This file includes unit tests for the toricgb.semigroup module (the
SemigroupEngine and its module level wrappers): graded pieces, membership,
reduction numbers, faces, normality and fibers.
"""

# Standard project pylint disables for unit tests using pytest.
# pylint: disable=no-self-use, protected-access, multiple-statements, invalid-name
# pylint: disable=redefined-outer-name

# Third-Party Library Imports
import pytest

# ToricGB Library Imports
from toricgb.lattice import enumerate_simplex_points
from toricgb.lattice import full_configuration
from toricgb.semigroup import ReductionNumberBoundExceeded
from toricgb.semigroup import SemigroupEngine
from toricgb.semigroup import contains
from toricgb.semigroup import faces
from toricgb.semigroup import full_face_bound
from toricgb.semigroup import graded_piece
from toricgb.semigroup import is_normal
from toricgb.semigroup import known_bound_cases
from toricgb.semigroup import reduction_number


def test_graded_piece(four_point_config):
    """ 2A is all of M_{8,2} although A misses (2,2). """
    assert len(graded_piece(four_point_config, 0)) == 1
    assert set(graded_piece(four_point_config, 1)) == {(4, 0), (3, 1), (1, 3), (0, 4)}
    assert set(graded_piece(four_point_config, 2)) == set(enumerate_simplex_points(8, 2))
    with pytest.raises(ValueError):
        graded_piece(four_point_config, -1)


def test_contains(four_point_config):
    assert contains(four_point_config, (6, 2))
    assert contains(four_point_config, (0, 0))
    assert not contains(four_point_config, (2, 2))
    assert not contains(four_point_config, (1, 1))
    assert not contains(four_point_config, (9, -1))
    assert not contains(four_point_config, (4, 0, 0))


def test_reduction_number(four_point_config, twisted_cubic_config,
                          missing_edge_point_config):
    assert reduction_number(four_point_config) == 2
    assert reduction_number(twisted_cubic_config) == 1
    assert reduction_number(missing_edge_point_config) == 2
    engine = SemigroupEngine(four_point_config)
    r = engine.reduction_number()
    engine.check_reduction_stability(r, extra=3)


def test_full_simplex_reduction_number():
    """ The full simplex has r = d - ceil(d / alpha). """
    assert reduction_number(full_configuration(2, 3)) == 1
    assert reduction_number(full_configuration(2, 4)) == 2
    assert reduction_number(full_configuration(3, 3)) == 2


def test_reduction_number_cap(four_point_config, monkeypatch):
    """ The search stops at deg - codim + 1 and reports the cap. """
    tried = []

    def never_reduces(engine, r):
        tried.append(r)
        return False

    monkeypatch.setattr(SemigroupEngine, '_reduces_at', never_reduces)
    with pytest.raises(ReductionNumberBoundExceeded) as excinfo:
        SemigroupEngine(four_point_config).reduction_number()
    # deg = 4, codim = 2.
    assert excinfo.value.cap == 3
    assert tried == [1, 2, 3]
    assert excinfo.value.diagnostics['degree'] == 4


def test_faces(four_point_config, twisted_cubic_config):
    records = faces(four_point_config)
    # The whole segment, then its two vertices.
    assert [record.zero_set for record in records] == [(), (0,), (1,)]
    assert [record.dimension for record in records] == [1, 0, 0]
    assert [record.is_full for record in records] == [False, True, True]
    assert records[1].members == ((0, 4),)
    assert full_face_bound(four_point_config) == 3
    assert full_face_bound(twisted_cubic_config) == 1


def test_is_normal(four_point_config, twisted_cubic_config):
    """ (2,2) lies in ZS but not in S, so the four point configuration is not normal. """
    assert not is_normal(four_point_config)
    assert is_normal(twisted_cubic_config)
    assert is_normal(full_configuration(3, 3))


def test_fiber(twisted_cubic_config):
    engine = SemigroupEngine(twisted_cubic_config)
    # x1 * x2 and y1 * y2 both map to (3, 3).
    assert engine.fiber((3, 3)) == [(1, 1, 0, 0), (0, 0, 1, 1)]
    assert engine.fiber((4, 2)) == [(2, 0, 0, 0), (0, 1, 1, 0)]
    assert engine.fiber((1, 0)) == []


def test_edge_point_counts(missing_edge_point_config):
    counts = SemigroupEngine(missing_edge_point_config).edge_point_counts()
    assert counts == {(0, 1): 3, (0, 2): 4, (1, 2): 4}


def test_known_bound_cases(four_point_config, missing_edge_point_config):
    assert known_bound_cases(four_point_config) == ['dimension-two', 'isolated-singularity']
    # deg = alpha^2 and the edges (0,2), (1,2) are full.
    assert known_bound_cases(missing_edge_point_config) == ['rich-edge']
