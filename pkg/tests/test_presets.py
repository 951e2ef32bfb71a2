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

""" ToricGB toricgb.presets Tests

This file includes tests running every reproduction preset end to end, and
unit tests for the expectation bookkeeping.
"""

# Standard project pylint disables for unit tests using pytest.
# pylint: disable=no-self-use, protected-access, multiple-statements, invalid-name

# Third-Party Library Imports
import pytest

# ToricGB Library Imports
from toricgb.presets import PRESETS
from toricgb.presets import Expectation
from toricgb.presets import PresetResult
from toricgb.presets import run_preset


def test_expectation():
    assert Expectation('r', 2, 2).ok
    assert Expectation('r', 2, 2).diff() == ''
    assert Expectation('r', 2, 3).diff() == 'r: expected 2, computed 3'
    diff = Expectation('basis', {'a', 'b'}, {'b', 'c'}).diff()
    assert diff == "basis: missing ['a'], extra ['c']"
    assert Expectation('basis', {'b', 'a'}, {'a'}).to_dict() == {
        'label': 'basis', 'expected': ['a', 'b'], 'computed': ['a'], 'ok': False}


def test_preset_result():
    result = PresetResult('demo')
    assert result.passed
    result.expect('r', 2, 2)
    result.expect('deg', 4, 5)
    assert not result.passed
    assert [e.label for e in result.failures()] == ['deg']
    assert result.to_dict()['passed'] is False
    result.note('not checked')
    assert result.notes == ['not checked']
    assert result.to_dict()['notes'] == ['not checked']


def test_unknown_preset():
    with pytest.raises(KeyError):
        run_preset('example-Z9')


def test_preset_names():
    assert sorted(PRESETS) == [
        'example-A1A3', 'example-A1b', 'propB2-2a', 'propB2-2b', 'propB2-fig34',
        'propB3-small', 'remark-C1b', 'sturmfels-normal-spotcheck']


# sturmfels-normal-spotcheck has its own test below.
@pytest.mark.parametrize('name', [name for name in sorted(PRESETS)
                                  if name != 'sturmfels-normal-spotcheck'])
def test_presets_pass(name):
    result = run_preset(name)
    assert result.expectations
    assert result.passed, [e.diff() for e in result.failures()]


def test_two_deleted_edges_class():
    """ Deleting both inner points of two disjoint edges of M_{3,4} leaves one
    class with reduction number 2. """
    result = run_preset('propB2-fig34')
    expectations = {e.label: e for e in result.expectations}
    assert expectations['classes with two deleted edges'].computed == 1
    assert expectations['r with two deleted edges'].computed == [2]


def test_spotcheck_covers_largest_simplex():
    result = run_preset('sturmfels-normal-spotcheck')
    assert result.passed, [e.diff() for e in result.failures()]
    labels = [e.label for e in result.expectations]
    assert 'maxdeg_revlex <= d M_{4,4}' in labels
    assert len([label for label in labels if label.startswith('maxdeg_revlex')]) == 9


def test_unchecked_claims_are_noted():
    assert any('zero-divisor' in text for text in run_preset('remark-C1b').notes)
    result = run_preset('propB3-small')
    assert all('are not checked' in text for text in result.notes)
