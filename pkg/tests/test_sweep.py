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

""" ToricGB toricgb.sweep Tests

This file includes unit tests for the SweepManager and its helpers: check
expressions, canonical forms up to coordinate permutation, the enumeration cap
and the records of a small sweep.
"""

# Standard project pylint disables for unit tests using pytest.
# pylint: disable=no-self-use, protected-access, multiple-statements, invalid-name
# pylint: disable=redefined-outer-name

# Standard Library Imports
import pickle
import time

# Third-Party Library Imports
import pytest

# ToricGB Library Imports
from toricgb.deletion_predicate import InvalidPredicate
from toricgb.gb.buchberger import NotWeightHomogeneous
from toricgb.invariants import InvariantViolation
from toricgb.lattice import InvalidConfiguration
from toricgb.pipeline import bound_report
from toricgb.platform import ExponentOverflow
from toricgb.platform import IntegerOverflow
from toricgb.result_store import ResultStore
from toricgb.semigroup import ReductionNumberBoundExceeded
from toricgb import sweep as sweep_module
from toricgb.sweep import InvalidCheck
from toricgb.sweep import SweepManager
from toricgb.sweep import SweepSpec
from toricgb.sweep import SweepTooLarge
from toricgb.sweep import canonical_form
from toricgb.sweep import incidence_signature
from toricgb.sweep import parse_check
from toricgb.sweep import report_options


def test_canonical_form():
    assert canonical_form([(3, 1)], 2) == ((1, 3),)
    assert canonical_form([(2, 1, 0), (1, 1, 1)], 3) == canonical_form([(0, 1, 2), (1, 1, 1)], 3)
    assert canonical_form([(2, 1, 0)], 3) != canonical_form([(1, 1, 1)], 3)


def test_incidence_signature():
    assert incidence_signature([(2, 1, 0)], 3) == ((0, 1),)
    assert incidence_signature([(0, 1, 2)], 3) == ((0, 1),)
    assert incidence_signature([(2, 1, 0), (1, 1, 1)], 3) == ((0, 1), (0, 1, 2))
    assert incidence_signature([], 3) == ()


def test_parse_check(twisted_cubic_config):
    report = bound_report(twisted_cubic_config, compute_groebner=False)
    assert parse_check('r <= 1').evaluate(report)
    assert parse_check(' r==1 ').evaluate(report)
    assert not parse_check('r > 1').evaluate(report)
    assert parse_check('deg-codim').evaluate(report)
    assert parse_check('lemmaA2').evaluate(report)
    # Fields which were not computed fail their checks.
    assert not parse_check('maxdeg_revlex <= 3').evaluate(report)
    assert not parse_check('conjecture').evaluate(report)


def test_check_needs():
    assert parse_check('r <= 8').needs == frozenset()
    assert parse_check('maxdeg_lex <= 4').needs == frozenset(['groebner', 'lex'])
    assert parse_check('propA6').needs == frozenset(['groebner', 'ja'])
    options = report_options([parse_check('r <= 8'), parse_check('maxdeg_JA < 20')])
    assert options == {'compute_groebner': True, 'compute_lex': False,
                       'compute_JA_maxdeg': True, 'compute_normality': True}


@pytest.mark.parametrize('text', ['', 'thm', 'maxdeg <= 3', 'r << 3', 'r <= x', 'r'])
def test_invalid_checks(text):
    with pytest.raises(InvalidCheck):
        parse_check(text)


def test_sweep_spec_errors():
    with pytest.raises(InvalidConfiguration):
        SweepSpec(1, 3, 1)
    with pytest.raises(InvalidConfiguration):
        SweepSpec(3, 1, 1)
    with pytest.raises(InvalidConfiguration):
        SweepSpec(3, 3, 7)
    with pytest.raises(InvalidConfiguration):
        SweepSpec(3, 3, -1)
    with pytest.raises(InvalidPredicate):
        SweepSpec(3, 3, 1, predicates=['facet-min=x'])
    with pytest.raises(InvalidCheck):
        SweepSpec(3, 3, 1, checks=['r =< 2'])
    assert SweepSpec(3, 3, 6).k == 6


def test_count_raw():
    assert SweepManager(SweepSpec(3, 3, 3)).count_raw() == 35
    assert SweepManager(SweepSpec(3, 3, 3, ['must-delete=2,1,0'])).count_raw() == 15
    # A point both required and forbidden leaves nothing to enumerate.
    assert SweepManager(SweepSpec(3, 3, 3, ['must-delete=2,1,0', 'edge-full=1,2'])
                       ).count_raw() == 0


def test_sweep_too_large():
    manager = SweepManager(SweepSpec(3, 3, 3), cap=10)
    with pytest.raises(SweepTooLarge) as excinfo:
        manager.run_sweep()
    assert (excinfo.value.count, excinfo.value.cap) == (35, 10)


def test_single_deletion_sweep():
    """ Deleting one point of M_{3,3}: an edge point (6 ways) or the center. """
    store = ResultStore()
    manager = SweepManager(SweepSpec(3, 3, 1, checks=['deg-codim']), store, threads=1)
    records = manager.run_sweep()
    assert len(records) == 2
    assert manager.get_records() == records
    assert sorted(record.class_size for record in records) == [1, 6]
    assert [record.key for record in records] == sorted(record.key for record in records)
    assert len(store) == 2
    assert store.get_record(records[0].key) is records[0]
    assert manager.all_checks_passed()
    summary = manager.summary()
    assert summary == {'raw': 7, 'accepted': 7, 'classes': 2, 'incidence_situations': 2,
                       'failed': 0, 'candidates': 0}
    centre = [record for record in records if record.deleted == [(1, 1, 1)]]
    assert len(centre) == 1 and centre[0].incidence == [(0, 1, 2)]
    manifest = manager.manifest(time.time(), 'v0.3.0')
    assert manifest['spec']['k'] == 1
    assert manifest['summary'] == summary


def test_sweep_without_symmetry():
    manager = SweepManager(SweepSpec(3, 3, 1, symmetry=False), threads=1)
    records = manager.run_sweep()
    assert len(records) == 7
    assert all(record.class_size == 1 for record in records)
    assert manager.num_incidence_situations() == 2


def test_sweep_predicates():
    spec = SweepSpec(3, 3, 3, ['edge-one-each', 'must-delete=2,1,0'], symmetry=False)
    manager = SweepManager(spec, threads=1)
    records = manager.run_sweep()
    assert len(records) == 4
    assert all((2, 1, 0) in record.deleted for record in records)
    assert manager.summary()['raw'] == 15


def test_sweep_worker_pool():
    """ The records do not depend on the number of worker processes. """
    spec = SweepSpec(3, 3, 1, checks=['r <= 2'])
    inline = SweepManager(spec, threads=1).run_sweep()
    pooled = SweepManager(spec, threads=2).run_sweep()
    assert [record.to_dict() for record in pooled] == [record.to_dict() for record in inline]


##
## Worker failures. The raising functions live at module level so that spawned
## worker processes can import them by name.
##

def _raise_reduction_cap(task):
    raise ReductionNumberBoundExceeded(4, {'alpha': task[0]})


def _raise_integer_overflow(task):
    raise IntegerOverflow(2**70, 'alpha^d')


def _raise_exponent_overflow(task):
    raise ExponentOverflow((70000, 0))


def _raise_invariant(task):
    raise InvariantViolation('hilbert-degree', 'degrees differ', {'deg': 9, 'hilbert': 8})


@pytest.mark.parametrize('error', [
    ReductionNumberBoundExceeded(4, {'degree': 9, 'c': 3}),
    IntegerOverflow(2**70, 'alpha^d'),
    ExponentOverflow((70000, 1)),
    InvariantViolation('symmetry', 'class members disagree on r', {'field': 'r'}),
    NotWeightHomogeneous('x1 - y1'),
    SweepTooLarge(35, 10),
    InvalidCheck('r <<= 2'),
    InvalidPredicate('facet-min=x'),
])
def test_errors_survive_pickling(error):
    restored = pickle.loads(pickle.dumps(error))
    assert type(restored) is type(error)
    assert str(restored) == str(error)
    assert vars(restored) == vars(error)


@pytest.mark.parametrize('worker, error_type', [
    (_raise_reduction_cap, ReductionNumberBoundExceeded),
    (_raise_integer_overflow, IntegerOverflow),
    (_raise_exponent_overflow, ExponentOverflow),
    (_raise_invariant, InvariantViolation),
])
def test_worker_pool_reraises(monkeypatch, worker, error_type):
    """ An error raised in a worker process reaches the caller with its type
    and attributes intact instead of stalling the pool. """
    monkeypatch.setattr(sweep_module, '_evaluate_class_safely', worker)
    manager = SweepManager(SweepSpec(3, 3, 1, checks=['r == 2']), threads=2)
    with pytest.raises(error_type) as excinfo:
        manager.run_sweep()
    if error_type is ReductionNumberBoundExceeded:
        assert excinfo.value.cap == 4
        assert excinfo.value.diagnostics == {'alpha': 3}
    if error_type is IntegerOverflow:
        assert excinfo.value.value == 2**70


def test_unpicklable_worker_error(monkeypatch):
    class LocalError(Exception):
        pass

    def raise_local(task):
        raise LocalError('lost on the way back')

    monkeypatch.setattr(sweep_module, '_evaluate_class', raise_local)
    with pytest.raises(RuntimeError, match='LocalError: lost on the way back'):
        sweep_module._evaluate_class_safely(None)
