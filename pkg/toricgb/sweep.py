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


""" ``toricgb.sweep`` Module

This module implements the :py:class:`SweepManager` object, which enumerates
every configuration obtained from M_{alpha,d} by deleting k non-corner points,
keeps those accepted by the sweep predicates, groups them into classes up to
permutation of the coordinates, and evaluates a
:py:class:`BoundReport <toricgb.pipeline.BoundReport>` and the requested checks
for one representative of each class.

Classes are independent, so they may be evaluated by a pool of worker
processes; records are always stored and returned in canonical order, which
makes the output of a sweep independent of the number of workers.

Check expressions are either the name of a proved bound (``thmA1``,
``conjecture``, ...) or a comparison ``FIELD OP INTEGER`` on an integer field
of the report, e.g. ``r <= 8``.
"""

# Standard Library Imports
from __future__ import print_function

import itertools
import logging
import math
import multiprocessing as mp
import operator
import pickle
import re
import time

# Third-Party Library Imports
import numpy

# ToricGB Library Imports
from toricgb.invariants import require
from toricgb.lattice import InvalidConfiguration
from toricgb.lattice import enumerate_simplex_points
from toricgb.lattice import is_corner_point
from toricgb.lattice import validate_configuration
from toricgb.pipeline import INTEGER_FIELDS
from toricgb.pipeline import bound_report
from toricgb.pipeline import counterexample_candidate
from toricgb.platform import get_enumeration_cap
from toricgb.platform import get_thread_count
from toricgb.platform import tqdm
from toricgb.predicates import parse_predicate
from toricgb.result_store import ResultRecord

logger = logging.getLogger('toricgb')


##
## Sweep Exceptions
##

class SweepTooLarge(Exception):
    """ Raised when a sweep would enumerate more raw configurations than the cap. """
    def __init__(self, count, cap, message="Sweep exceeds the enumeration cap."):
        # type: (int, int, str)
        super(SweepTooLarge, self).__init__(
            '%s (%d configurations > cap %d; raise --cap / TORICGB_CAP, or add'
            ' predicates which fix or forbid points)' % (message, count, cap))
        self.count = count
        self.cap = cap
        self.message = message

    def __reduce__(self):
        return (SweepTooLarge, (self.count, self.cap, self.message))


class InvalidCheck(Exception):
    """ Raised when a check expression cannot be parsed. """
    def __init__(self, text, message="Invalid check expression."):
        # type: (str, str)
        super(InvalidCheck, self).__init__('%s (%s)' % (message, text))
        self.text = text
        self.message = message

    def __reduce__(self):
        return (InvalidCheck, (self.text, self.message))


##
## Check Expressions
##

GROEBNER = 'groebner'
LEX_BASIS = 'lex'
JA_BASIS = 'ja'

_NAMED_CHECKS = {
    'conjecture': (lambda rep: rep.conjecture_holds, {GROEBNER}),
    'thmA1': (lambda rep: rep.maxdeg_revlex <= rep.bound_thmA1, {GROEBNER}),
    'thmA4': (lambda rep: rep.maxdeg_revlex <= rep.bound_thmA4, {GROEBNER}),
    'propA6': (lambda rep: rep.maxdeg_JA <= rep.bound_propA6, {GROEBNER, JA_BASIS}),
    'sturmfels': (lambda rep: rep.maxdeg_revlex <= rep.bound_sturmfels, {GROEBNER}),
    'lemmaA2': (lambda rep: rep.full_face_bound is None or rep.r <= rep.full_face_bound,
                set()),
    'normal-degree': (lambda rep: not rep.is_normal or rep.maxdeg_revlex <= rep.d,
                      {GROEBNER}),
    'deg-codim': (lambda rep: rep.r <= rep.deg - rep.c, set()),
}

_FIELD_NEEDS = {
    'maxdeg_revlex': {GROEBNER},
    'eg_gap': {GROEBNER},
    'hilbert_dimension': {GROEBNER},
    'hilbert_multiplicity': {GROEBNER},
    'maxdeg_lex': {GROEBNER, LEX_BASIS},
    'maxdeg_JA': {GROEBNER, JA_BASIS},
}

_OPERATORS = {
    '<=': operator.le, '<': operator.lt, '==': operator.eq,
    '!=': operator.ne, '>=': operator.ge, '>': operator.gt,
}

_COMPARISON_RE = re.compile(r'^\s*([A-Za-z_][A-Za-z0-9_]*)\s*(<=|>=|==|!=|<|>)\s*(-?\d+)\s*$')


class SweepCheck(object):
    """ A parsed check expression.

    Attributes:
        text: The expression as written.
        needs: Which bases the check requires ('groebner', 'lex', 'ja').
    """

    def __init__(self, text, function, needs):
        # type: (str, Callable[[BoundReport], bool], Set[str])
        self.text = text
        self.needs = frozenset(needs)
        self._function = function

    def evaluate(self, report):
        # type: (BoundReport) -> bool
        """ Evaluate: The check outcome for report; a check on a field that was
        not computed fails. """
        try:
            return bool(self._function(report))
        except TypeError:
            return False

    def __repr__(self):
        return 'SweepCheck(%r)' % self.text


def parse_check(text):
    # type: (str) -> SweepCheck
    """ Parse Check: Parses a named check or a ``FIELD OP INTEGER`` comparison.

    Raises:
        InvalidCheck: Unknown name or field, or malformed comparison.
    """
    stripped = text.strip()
    if stripped in _NAMED_CHECKS:
        function, needs = _NAMED_CHECKS[stripped]
        return SweepCheck(stripped, function, needs)
    match = _COMPARISON_RE.match(stripped)
    if match is None:
        raise InvalidCheck(text, 'Expected a check name (%s) or FIELD OP INTEGER.' % (
            ', '.join(sorted(_NAMED_CHECKS))))
    field, op, value = match.group(1), match.group(2), int(match.group(3))
    if field not in INTEGER_FIELDS:
        raise InvalidCheck(text, 'Unknown report field %r.' % field)
    compare = _OPERATORS[op]
    return SweepCheck(stripped, lambda rep: compare(getattr(rep, field), value),
                      _FIELD_NEEDS.get(field, set()))


def report_options(checks):
    # type: (Iterable[SweepCheck]) -> Dict[str, bool]
    """ bound_report keyword options covering what the checks need. """
    needs = set()
    for check in checks:
        needs |= check.needs
    return {
        'compute_groebner': GROEBNER in needs,
        'compute_lex': LEX_BASIS in needs,
        'compute_JA_maxdeg': JA_BASIS in needs,
        'compute_normality': True,
    }


##
## Canonical Forms
##

def canonical_form(points, d):
    # type: (Iterable[Sequence[int]], int) -> Tuple[Tuple[int, ...], ...]
    """ Canonical Form: The lexicographic minimum, over all d! permutations of the
    coordinates, of the (descending) sorted point list. """
    points = [tuple(p) for p in points]
    best = None
    for perm in itertools.permutations(range(d)):
        image = tuple(sorted((tuple(p[i] for i in perm) for p in points), reverse=True))
        if best is None or image < best:
            best = image
    return best


def incidence_signature(deleted, d):
    # type: (Iterable[Sequence[int]], int) -> Tuple[Tuple[int, ...], ...]
    """ Incidence Signature: The multiset of supports (0-based coordinate sets)
    of the deleted points, minimized over coordinate permutations. Two deleted
    sets with the same signature meet the faces of the simplex in the same way. """
    deleted = [tuple(p) for p in deleted]
    best = None
    for perm in itertools.permutations(range(d)):
        image = tuple(sorted(
            tuple(i for i in range(d) if p[perm[i]]) for p in deleted))
        if best is None or image < best:
            best = image
    return best


##
## SweepSpec
##

class SweepSpec(object):
    """ What to enumerate and what to check.

    Arguments:
        alpha, d: The simplex M_{alpha,d} (alpha >= 2, d >= 2).
        k: Number of non-corner points to delete (k < |M_{alpha,d}| - d).
        predicates: Predicate strings (NAME or NAME=ARGS), combined with AND.
        checks: Check expressions.
        symmetry: Deduplicate configurations up to coordinate permutation.

    Raises:
        InvalidConfiguration: Bad alpha, d or k.
        InvalidPredicate: A predicate cannot be parsed.
        InvalidCheck: A check cannot be parsed.
    """

    def __init__(self, alpha, d, k, predicates=None, checks=None, symmetry=True):
        # type: (int, int, int, Optional[List[str]], Optional[List[str]], bool)
        if alpha < 2 or d < 2:
            raise InvalidConfiguration('Sweeps need alpha >= 2 and d >= 2.')
        non_corner = len(enumerate_simplex_points(alpha, d)) - d
        if k < 0 or k >= non_corner:
            raise InvalidConfiguration(
                'Deletion count k must satisfy 0 <= k < %d for M_{%d,%d}.' % (
                    non_corner, alpha, d))
        self.alpha = alpha
        self.d = d
        self.k = k
        self.predicates = [parse_predicate(text, alpha, d) for text in (predicates or [])]
        self.checks = [parse_check(text) for text in (checks or [])]
        self.symmetry = symmetry

    def to_dict(self):
        # type: () -> Dict[str, Any]
        return {
            'alpha': self.alpha,
            'd': self.d,
            'k': self.k,
            'predicates': [predicate.describe() for predicate in self.predicates],
            'checks': [check.text for check in self.checks],
            'symmetry': self.symmetry,
        }


##
## Class Evaluation (runs in worker processes)
##

def _evaluate_class(task):
    # type: (Tuple) -> ResultRecord
    alpha, d, a_points, deleted, incidence, class_size, options, check_texts = task
    start_time = time.time()
    cfg = validate_configuration(alpha, d, a_points)
    report = bound_report(cfg, **options)
    checks = {text: parse_check(text).evaluate(report) for text in check_texts}
    candidate = counterexample_candidate(report)
    return ResultRecord(
        cfg.a_points, deleted, incidence, class_size, report.to_dict(), checks,
        candidate.to_dict() if candidate is not None else None,
        time.time() - start_time)


def _evaluate_class_safely(task):
    # type: (Tuple) -> ResultRecord
    """ Pool entry point. Exceptions which would not survive the trip back to the
    parent process are re-raised as RuntimeError carrying their text. """
    try:
        return _evaluate_class(task)
    except Exception as ex:
        try:
            pickle.loads(pickle.dumps(ex))
        except Exception:
            raise RuntimeError('%s: %s' % (type(ex).__name__, ex))
        raise


##
## SweepManager Class Implementation
##

class SweepManager(object):
    """ The SweepManager enumerates and evaluates a :py:class:`SweepSpec` via
    :py:meth:`run_sweep`, storing one :py:class:`ResultRecord` per class in an
    optional :py:class:`ResultStore <toricgb.result_store.ResultStore>`.
    """

    def __init__(self, spec, result_store=None, threads=None, cap=None):
        # type: (SweepSpec, Optional[ResultStore], Optional[int], Optional[int])
        self._spec = spec
        self._result_store = result_store
        self._threads = max(1, int(threads if threads is not None else get_thread_count()))
        self._cap = cap if cap is not None else get_enumeration_cap()
        self._records = []
        self._num_raw = 0
        self._num_accepted = 0

    @property
    def spec(self):
        # type: () -> SweepSpec
        return self._spec

    def count_raw(self):
        # type: () -> int
        """ Count Raw: Number of deleted sets the sweep will test, after the points
        fixed or forbidden by the predicates are taken out of the pool. """
        required, pool = self._pool()
        free = self._spec.k - len(required)
        if free < 0 or free > len(pool):
            return 0
        return math.comb(len(pool), free)

    def _pool(self):
        # type: () -> Tuple[FrozenSet[Tuple[int, ...]], List[Tuple[int, ...]]]
        spec = self._spec
        required = frozenset().union(*[p.required_points() for p in spec.predicates])
        forbidden = frozenset().union(*[p.forbidden_points() for p in spec.predicates])
        pool = [point for point in enumerate_simplex_points(spec.alpha, spec.d)
                if not is_corner_point(point, spec.alpha)
                and point not in required and point not in forbidden]
        if required & forbidden:
            pool = []
        return required, pool

    def enumerate_classes(self):
        # type: () -> Dict[Tuple[Tuple[int, ...], ...], Dict[str, Any]]
        """ Enumerate Classes: Groups every accepted deleted set by canonical form.

        Returns:
            Dict of canonical a-point tuple -> {'deleted', 'size', 'members'}.
            'members' (all deleted sets of the class) is only kept at DEBUG
            verbosity, for the symmetry spot-check.

        Raises:
            SweepTooLarge: More raw configurations than the cap.
        """
        spec = self._spec
        count = self.count_raw()
        if count > self._cap:
            raise SweepTooLarge(count, self._cap)
        required, pool = self._pool()
        free = spec.k - len(required)
        all_points = [p for p in enumerate_simplex_points(spec.alpha, spec.d)
                      if not is_corner_point(p, spec.alpha)]
        keep_members = logger.isEnabledFor(logging.DEBUG)
        classes = {}
        self._num_raw = 0
        self._num_accepted = 0
        combinations = itertools.combinations(pool, free) if 0 <= free <= len(pool) else []
        for combination in combinations:
            self._num_raw += 1
            deleted = tuple(sorted(required.union(combination), reverse=True))
            if not all(predicate.accepts(deleted) for predicate in spec.predicates):
                continue
            self._num_accepted += 1
            a_points = [p for p in all_points if p not in deleted]
            if spec.symmetry:
                key = canonical_form(a_points, spec.d)
            else:
                key = tuple(a_points)
            if key not in classes:
                present = set(key)
                classes[key] = {
                    'deleted': [p for p in all_points if p not in present],
                    'size': 0,
                    'members': [],
                }
            classes[key]['size'] += 1
            if keep_members:
                classes[key]['members'].append(a_points)
        logger.info('Enumerated %d deleted sets, %d accepted, %d classes.',
                    self._num_raw, self._num_accepted, len(classes))
        return classes

    def run_sweep(self, show_progress=False):
        # type: (bool) -> List[ResultRecord]
        """ Run Sweep: Enumerates and evaluates all classes. Classes already held
        by the ResultStore are taken from it instead of being evaluated again.

        Arguments:
            show_progress: If True, and the ``tqdm`` module is available, displays
                a progress bar over the classes.

        Returns:
            List of ResultRecord in canonical order.

        Raises:
            SweepTooLarge: More raw configurations than the cap.
            InvariantViolation: A proved bound failed for some class.
        """
        spec = self._spec
        classes = self.enumerate_classes()
        options = report_options(spec.checks)
        check_texts = [check.text for check in spec.checks]
        stored = []
        tasks = []
        for key in sorted(classes):
            if self._result_store is not None and self._result_store.has_record(key):
                stored.append(self._result_store.get_record(key))
                continue
            entry = classes[key]
            tasks.append((spec.alpha, spec.d, list(key), entry['deleted'],
                          incidence_signature(entry['deleted'], spec.d), entry['size'],
                          options, check_texts))

        if stored:
            logger.info('Reusing %d stored class(es), evaluating %d.', len(stored), len(tasks))
        progress_bar = None
        if tqdm and show_progress:
            progress_bar = tqdm(total=len(tasks), unit='classes', dynamic_ncols=True)
        records = []
        try:
            if self._threads == 1 or len(tasks) <= 1:
                for task in tasks:
                    records.append(_evaluate_class(task))
                    if progress_bar:
                        progress_bar.update(1)
            else:
                mp_context = mp.get_context('spawn')
                with mp_context.Pool(processes=self._threads) as pool:
                    for record in pool.imap(_evaluate_class_safely, tasks):
                        records.append(record)
                        if progress_bar:
                            progress_bar.update(1)
        finally:
            if progress_bar is not None:
                progress_bar.close()

        if spec.symmetry and logger.isEnabledFor(logging.DEBUG):
            self._check_symmetry(classes, records, options)

        if self._result_store is not None:
            for record in records:
                self._result_store.add_record(record)
        records = sorted(records + stored, key=lambda record: record.key)
        self._records = records
        logger.info('Sweep finished: %d classes, %d incidence situations.',
                    len(records), self.num_incidence_situations())
        return records

    def _check_symmetry(self, classes, records, options):
        # type: (Dict, List[ResultRecord], Dict[str, bool]) -> None
        """ Evaluates up to 3 random members of every class and asserts that they
        agree with the representative on r, deg, c and maxdeg_revlex. """
        rng = numpy.random.default_rng(0)
        spec = self._spec
        for record in records:
            members = classes[record.key]['members']
            if not members:
                continue
            chosen = rng.choice(len(members), size=min(3, len(members)), replace=False)
            for index in sorted(int(i) for i in chosen):
                cfg = validate_configuration(spec.alpha, spec.d, members[index])
                member = bound_report(cfg, compute_groebner=options['compute_groebner'],
                                      compute_normality=False)
                for field in ('r', 'deg', 'c', 'maxdeg_revlex'):
                    require(getattr(member, field) == record.report[field], 'symmetry',
                            'class members disagree on %s' % field,
                            representative=record.canonical, member=members[index],
                            field=field)

    def get_records(self):
        # type: () -> List[ResultRecord]
        return list(self._records)

    def num_incidence_situations(self):
        # type: () -> int
        return len(set(tuple(record.incidence) for record in self._records))

    def all_checks_passed(self):
        # type: () -> bool
        return all(record.passed() for record in self._records)

    def candidates(self):
        # type: () -> List[Dict[str, Any]]
        return [record.candidate for record in self._records if record.candidate]

    def summary(self):
        # type: () -> Dict[str, Any]
        """ Summary: Counts for the last run (raw and accepted deleted sets,
        classes, incidence situations, failed checks, candidates). """
        return {
            'raw': self._num_raw,
            'accepted': self._num_accepted,
            'classes': len(self._records),
            'incidence_situations': self.num_incidence_situations(),
            'failed': sum(1 for record in self._records if not record.passed()),
            'candidates': len(self.candidates()),
        }

    def manifest(self, start_time, version):
        # type: (float, str) -> Dict[str, Any]
        """ Manifest: Header object for the JSONL result file. """
        return {
            'spec': self._spec.to_dict(),
            'version': version,
            'start_time': time.strftime('%Y-%m-%dT%H:%M:%SZ', time.gmtime(start_time)),
            'summary': self.summary(),
        }
