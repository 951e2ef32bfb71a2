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


""" ``toricgb.presets`` Module

Fixed expectation suites which re-run the published small computations: exact
Groebner bases, initial ideals, reduction numbers of families, and the finite
case analyses done by enumeration.  Each preset returns a :py:class:`PresetResult`
listing every expectation with its expected and computed value, so a mismatch
can be reported as a diff.

Presets are looked up by name in :py:data:`PRESETS`.
"""

# Standard Library Imports
import logging
import math

# ToricGB Library Imports
from toricgb.gb import GREVLEX
from toricgb.gb import LEX
from toricgb.gb import Binomial
from toricgb.gb import VariableUniverse
from toricgb.gb import initial_ideal
from toricgb.lattice import configuration_from_deleted
from toricgb.lattice import full_configuration
from toricgb.lattice import validate_configuration
from toricgb.pipeline import bound_report
from toricgb.pipeline import toric_groebner
from toricgb.platform import tqdm
from toricgb.semigroup import SemigroupEngine
from toricgb.sweep import SweepManager
from toricgb.sweep import SweepSpec
from toricgb.sweep import incidence_signature

logger = logging.getLogger('toricgb')


class Expectation(object):
    """ One expected value of a preset, compared with ``==``. """

    def __init__(self, label, expected, computed):
        # type: (str, Any, Any)
        self.label = label
        self.expected = expected
        self.computed = computed

    @property
    def ok(self):
        # type: () -> bool
        return self.expected == self.computed

    def diff(self):
        # type: () -> str
        """ Diff: Expected vs computed; sets are shown as missing/extra members. """
        if self.ok:
            return ''
        if isinstance(self.expected, (set, frozenset)) and isinstance(
                self.computed, (set, frozenset)):
            return '%s: missing %s, extra %s' % (
                self.label, sorted(self.expected - self.computed),
                sorted(self.computed - self.expected))
        return '%s: expected %r, computed %r' % (self.label, self.expected, self.computed)

    def to_dict(self):
        # type: () -> Dict[str, Any]
        def _plain(value):
            if isinstance(value, (set, frozenset)):
                return sorted(value)
            return value
        return {'label': self.label, 'expected': _plain(self.expected),
                'computed': _plain(self.computed), 'ok': self.ok}


class PresetResult(object):
    """ Outcome of one preset run. """

    def __init__(self, name):
        # type: (str)
        self.name = name
        self.expectations = []   # type: List[Expectation]
        self.notes = []          # type: List[str]

    def expect(self, label, expected, computed):
        # type: (str, Any, Any) -> Expectation
        expectation = Expectation(label, expected, computed)
        self.expectations.append(expectation)
        if not expectation.ok:
            logger.error('[%s] %s', self.name, expectation.diff())
        else:
            logger.debug('[%s] %s: ok', self.name, label)
        return expectation

    def note(self, text):
        # type: (str) -> None
        """ Note: Records something the preset did not check, shown with the result. """
        self.notes.append(text)
        logger.info('[%s] %s', self.name, text)

    @property
    def passed(self):
        # type: () -> bool
        return all(expectation.ok for expectation in self.expectations)

    def failures(self):
        # type: () -> List[Expectation]
        return [expectation for expectation in self.expectations if not expectation.ok]

    def to_dict(self):
        # type: () -> Dict[str, Any]
        return {'preset': self.name, 'passed': self.passed,
                'expectations': [e.to_dict() for e in self.expectations],
                'notes': list(self.notes)}


def _formatted(cfg, basis):
    # type: (Configuration, GroebnerBasis) -> Set[str]
    universe = VariableUniverse.for_toric(cfg.c, cfg.d)
    return set(universe.format_binomial(element) for element in basis)


##
## Presets
##

def example_a1a3(show_progress=False):
    # type: (bool) -> PresetResult
    """ A = {(4,0),(3,1),(1,3),(0,4)}: both reduced bases exactly, r = 2, and
    both degree bounds equal to 3. """
    result = PresetResult('example-A1A3')
    cfg = validate_configuration(4, 2, [(4, 0), (3, 1), (1, 3), (0, 4)])
    report = bound_report(cfg, compute_lex=True)
    result.expect('revlex basis', {
        'x1*x2 - y1*y2', 'x1^3 - x2*y1^2', 'x2^3 - x1*y2^2', 'x2^2*y1 - x1^2*y2',
    }, _formatted(cfg, toric_groebner(cfg, GREVLEX)))
    result.expect('lex basis', {
        'x1*x2 - y1*y2', 'x1^3 - x2*y1^2', 'x1*y2^2 - x2^3', 'x1^2*y2 - x2^2*y1',
        'x2^4 - y1*y2^3',
    }, _formatted(cfg, toric_groebner(cfg, LEX)))
    result.expect('r', 2, report.r)
    result.expect('bound_thmA1', 3, report.bound_thmA1)
    result.expect('bound_EG', 3, report.bound_EG)
    result.expect('maxdeg_revlex', 3, report.maxdeg_revlex)
    result.expect('maxdeg_lex', 4, report.maxdeg_lex)
    result.expect('conjecture_holds', True, report.conjecture_holds)
    return result


EXAMPLE_A1B_GRID = [(2, 4), (2, 5), (2, 6), (3, 4), (3, 5)]


def example_a1b(show_progress=False):
    # type: (bool) -> PresetResult
    """ M_{alpha,d} minus the edge points (b, alpha-b, 0, ...), 2 <= b <= alpha-2:
    r = alpha - 2, and the revlex basis contains x_i^(alpha-1) - x_j*y_1^(alpha-2)
    where x_i, x_j are the points (alpha-1, 1, 0, ...) and (1, alpha-1, 0, ...). """
    result = PresetResult('example-A1b')
    for d, alpha in _progress(EXAMPLE_A1B_GRID, show_progress):
        pad = (0,) * (d - 2)
        deleted = [(b, alpha - b) + pad for b in range(2, alpha - 1)]
        cfg = configuration_from_deleted(alpha, d, deleted)
        label = '(d=%d, alpha=%d)' % (d, alpha)
        result.expect('r %s' % label, alpha - 2, bound_report(cfg, compute_groebner=False).r)
        i = cfg.a_points.index((alpha - 1, 1) + pad)
        j = cfg.a_points.index((1, alpha - 1) + pad)
        lead = [0] * (cfg.c + d)
        tail = [0] * (cfg.c + d)
        lead[i] = alpha - 1
        tail[j] = 1
        tail[cfg.c] = alpha - 2
        basis = toric_groebner(cfg, GREVLEX)
        result.expect('family binomial %s' % label, True,
                      Binomial(tuple(lead), tuple(tail)) in basis.elements)
    return result


REMARK_C1B_INITIAL_IDEAL = [
    'x1*x2', 'x2*x3', 'x2*x5', 'x1^2', 'x1*x3', 'x3^2', 'x2*x4', 'x2*x6', 'x3*x5',
    'x5^2', 'x1*x4', 'x3*x4', 'x4*x5', 'x4^2', 'x3*x6', 'x5*x6', 'x4*x6', 'x6^2',
    'x2^3', 'x1*x6*y2',
]


def remark_c1b(show_progress=False):
    # type: (bool) -> PresetResult
    """ M_{3,3} minus (2,1,0): the 20 minimal generators of the revlex initial
    ideal, deg = 9, basis degree 3 against the bound 4. """
    result = PresetResult('remark-C1b')
    cfg = configuration_from_deleted(3, 3, [(2, 1, 0)])
    result.expect('a points', [(2, 0, 1), (1, 2, 0), (1, 1, 1), (1, 0, 2), (0, 2, 1), (0, 1, 2)],
                  list(cfg.a_points))
    universe = VariableUniverse.for_toric(cfg.c, cfg.d)
    report = bound_report(cfg)
    leads = initial_ideal(toric_groebner(cfg, GREVLEX))
    result.expect('in(I_A) generators',
                  set(REMARK_C1B_INITIAL_IDEAL),
                  set(universe.format_monomial(m) for m in leads))
    result.expect('deg', 9, report.deg)
    result.expect('maxdeg_revlex', 3, report.maxdeg_revlex)
    result.expect('bound_EG', 4, report.bound_EG)
    result.note('The zero-divisor statement about the quotient ring is not checked.')
    return result


def _sweep(result, spec, show_progress):
    # type: (PresetResult, SweepSpec, bool) -> Tuple[SweepManager, List[ResultRecord]]
    manager = SweepManager(spec)
    records = manager.run_sweep(show_progress=show_progress)
    for record in records:
        for text, outcome in sorted(record.checks.items()):
            result.expect('%s for %s' % (text, record.canonical), True, outcome)
    return manager, records


def prop_b2_2a(show_progress=False):
    # type: (bool) -> PresetResult
    """ alpha = d = 3, one deleted point per edge with (2,1,0) fixed: all four
    completions have r <= 3. """
    result = PresetResult('propB2-2a')
    spec = SweepSpec(3, 3, 3, predicates=['edge-one-each', 'must-delete=2,1,0'],
                     checks=['r <= 3'], symmetry=False)
    _, records = _sweep(result, spec, show_progress)
    result.expect('configurations', 4, len(records))
    return result


def prop_b2_2b(show_progress=False):
    # type: (bool) -> PresetResult
    """ alpha = d = 3 with one deleted point: two classes (edge point, center),
    both with r = 2. """
    result = PresetResult('propB2-2b')
    _, records = _sweep(result, SweepSpec(3, 3, 1, checks=['r == 2']), show_progress)
    result.expect('classes', 2, len(records))
    return result


FIG34_TWO_EDGES = [(2, 1, 0, 0), (1, 2, 0, 0), (0, 0, 2, 1), (0, 0, 1, 2)]


def prop_b2_fig34(show_progress=False):
    # type: (bool) -> PresetResult
    """ alpha = 3, d = 4, four deleted points with at least two on every facet:
    every class has r <= 8, and the deleted points meet the facets in exactly
    two ways. In the situation where both inner points of two disjoint edges
    are deleted there is a single class, with r = 2. """
    result = PresetResult('propB2-fig34')
    spec = SweepSpec(3, 4, 4, predicates=['facet-min=2'], checks=['r <= 8'])
    manager, records = _sweep(result, spec, show_progress)
    result.expect('incidence situations', 2, manager.num_incidence_situations())
    result.expect('nonempty', True, len(records) > 0)
    two_edges = incidence_signature(FIG34_TWO_EDGES, 4)
    matching = [record for record in records if tuple(record.incidence) == two_edges]
    result.expect('classes with two deleted edges', 1, len(matching))
    result.expect('r with two deleted edges', [2], [record.report['r'] for record in matching])
    return result


PROP_B3_CASES = [(3, 1), (3, 2), (4, 1), (4, 2), (5, 1)]


def prop_b3_small(show_progress=False):
    # type: (bool) -> PresetResult
    """ d = 3, deg = alpha^2, (alpha-1, 1, 0) deleted: r = 2 for alpha = 3, 5 and
    r <= 3 for alpha = 4 over every configuration with at most two deletions. """
    result = PresetResult('propB3-small')
    for alpha, k in PROP_B3_CASES:
        spec = SweepSpec(alpha, 3, k, predicates=['must-delete=%d,1,0' % (alpha - 1)])
        records = SweepManager(spec).run_sweep(show_progress=show_progress)
        skipped = 0
        for record in records:
            if record.report['deg'] != alpha ** 2:
                skipped += 1
                continue
            label = 'r for alpha=%d %s' % (alpha, record.canonical)
            if alpha == 4:
                result.expect(label + ' <= 3', True, record.report['r'] <= 3)
            else:
                result.expect(label, 2, record.report['r'])
        if skipped:
            result.note('alpha=%d, k=%d: %d of %d class(es) have deg != %d and are not checked.'
                        % (alpha, k, skipped, len(records), alpha ** 2))
        result.expect('classes for alpha=%d, k=%d' % (alpha, k), True,
                      len(records) > skipped)
    return result


def sturmfels_normal_spotcheck(show_progress=False):
    # type: (bool) -> PresetResult
    """ Full simplices M_{alpha,d}, 2 <= alpha, d <= 4: normal, reduction number
    d - ceil(d / alpha), and a revlex basis of degree at most d. """
    result = PresetResult('sturmfels-normal-spotcheck')
    grid = [(alpha, d) for alpha in range(2, 5) for d in range(2, 5)]
    for alpha, d in _progress(grid, show_progress):
        cfg = full_configuration(alpha, d)
        label = 'M_{%d,%d}' % (alpha, d)
        engine = SemigroupEngine(cfg)
        result.expect('normal %s' % label, True, engine.is_normal())
        result.expect('r %s' % label, d - int(math.ceil(d / float(alpha))),
                      engine.reduction_number())
        basis = toric_groebner(cfg, GREVLEX)
        result.expect('maxdeg_revlex <= d %s' % label, True, basis.max_degree() <= d)
    return result


def _progress(items, show_progress):
    if tqdm and show_progress:
        return tqdm(items, dynamic_ncols=True)
    return items


PRESETS = {
    'example-A1A3': example_a1a3,
    'example-A1b': example_a1b,
    'remark-C1b': remark_c1b,
    'propB2-2a': prop_b2_2a,
    'propB2-2b': prop_b2_2b,
    'propB2-fig34': prop_b2_fig34,
    'propB3-small': prop_b3_small,
    'sturmfels-normal-spotcheck': sturmfels_normal_spotcheck,
}


def run_preset(name, show_progress=False):
    # type: (str, bool) -> PresetResult
    """ Run Preset: Runs the named preset.

    Raises:
        KeyError: Unknown preset name.
    """
    if name not in PRESETS:
        raise KeyError('Unknown preset %r (expected one of: %s).' % (
            name, ', '.join(sorted(PRESETS))))
    logger.info('Running preset %s.', name)
    return PRESETS[name](show_progress=show_progress)
