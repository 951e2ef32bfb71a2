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

""" ``toricgb.pipeline`` Module

The end-to-end computation for one configuration A:

  1. Form J_A = (x_i - t^{a_i}, y_j - t_j^alpha) in K[t, x, y].
  2. Compute a Groebner basis of J_A under a block order in which the t
     variables dominate, restricted to grevlex (or lex) on K[x, y].
  3. Keep the t-free elements; they form the reduced basis of the toric ideal I_A.

:py:func:`bound_report` combines this with the semigroup invariants into a
:py:class:`BoundReport` and compares every degree against the known upper
bounds.  A failed bound is a bug and raises
:py:class:`InvariantViolation <toricgb.invariants.InvariantViolation>`; a
revlex degree above deg - codim + 1 is an open question and produces a
:py:class:`CounterexampleCandidate` instead.
"""

# Standard Library Imports
from __future__ import print_function

import logging

# Third-Party Library Imports
import numpy

# ToricGB Library Imports
from toricgb.gb.binomial import Binomial
from toricgb.gb.binomial import Reducer
from toricgb.gb.buchberger import GroebnerBasis
from toricgb.gb.buchberger import buchberger
from toricgb.gb.buchberger import initial_ideal
from toricgb.gb.buchberger import reduce_basis
from toricgb.gb.hilbert import hilbert_data
from toricgb.gb.term_order import GREVLEX
from toricgb.gb.term_order import LEX
from toricgb.gb.term_order import TermOrder
from toricgb.gb.term_order import VariableUniverse
from toricgb.invariants import require
from toricgb.lattice import Configuration
from toricgb.lattice import lattice_index
from toricgb.semigroup import SemigroupEngine

logger = logging.getLogger('toricgb')


##
## BoundReport
##

# Integer fields usable in check expressions such as "r <= 8".
INTEGER_FIELDS = [
    'r', 'deg', 'c', 'alpha', 'd', 'lattice_index',
    'maxdeg_revlex', 'maxdeg_lex', 'maxdeg_JA',
    'bound_thmA1', 'bound_thmA1_deg', 'bound_thmA4', 'bound_sturmfels',
    'bound_propA6', 'bound_EG', 'full_face_bound', 'eg_gap',
    'hilbert_dimension', 'hilbert_multiplicity',
]

REPORT_FIELDS = ['configuration'] + INTEGER_FIELDS + [
    'is_normal', 'conjecture_holds', 'known_bound_cases', 'truncation_identical']


class BoundReport(object):
    """ Every computed invariant and bound comparison for one configuration.

    Fields which were not computed (e.g. maxdeg_lex without compute_lex, or all
    Groebner fields when compute_groebner is off) are None.
    """

    def __init__(self, **fields):
        unknown = set(fields) - set(REPORT_FIELDS)
        if unknown:
            raise TypeError('Unknown BoundReport field(s): %s' % ', '.join(sorted(unknown)))
        for name in REPORT_FIELDS:
            setattr(self, name, fields.get(name))
        if self.known_bound_cases is None:
            self.known_bound_cases = []

    def to_dict(self):
        # type: () -> Dict[str, Any]
        data = {name: getattr(self, name) for name in REPORT_FIELDS}
        data['known_bound_cases'] = list(self.known_bound_cases)
        return data

    @classmethod
    def from_dict(cls, data):
        # type: (Dict[str, Any]) -> BoundReport
        return cls(**{name: data.get(name) for name in REPORT_FIELDS})

    def get_field(self, name):
        # type: (str) -> Any
        if name not in REPORT_FIELDS:
            raise KeyError(name)
        return getattr(self, name)

    def __eq__(self, other):
        return isinstance(other, BoundReport) and self.to_dict() == other.to_dict()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return 'BoundReport(r=%r, deg=%r, c=%r, maxdeg_revlex=%r, conjecture_holds=%r)' % (
            self.r, self.deg, self.c, self.maxdeg_revlex, self.conjecture_holds)


class CounterexampleCandidate(object):
    """ A configuration whose revlex Groebner degree exceeds deg - codim + 1
    outside every known case; recorded for human review, never raised. """

    def __init__(self, configuration, maxdeg_revlex, bound_EG, witnesses):
        # type: (Dict[str, Any], int, int, List[str])
        self.configuration = configuration
        self.maxdeg_revlex = maxdeg_revlex
        self.bound_EG = bound_EG
        self.witnesses = list(witnesses)

    def to_dict(self):
        # type: () -> Dict[str, Any]
        return {
            'kind': 'counterexample-candidate',
            'configuration': self.configuration,
            'maxdeg_revlex': self.maxdeg_revlex,
            'bound_EG': self.bound_EG,
            'witnesses': self.witnesses,
        }

    def __repr__(self):
        return 'CounterexampleCandidate(maxdeg_revlex=%d, bound_EG=%d)' % (
            self.maxdeg_revlex, self.bound_EG)


##
## Elimination
##

def elimination_order(cfg, xy_order=GREVLEX):
    # type: (Configuration, str) -> TermOrder
    """ Block order on K[t, x, y]: the d t-variables first (grevlex), then
    xy_order on the remaining block. """
    return TermOrder.elimination(cfg.d, xy_order)


def elimination_weights(cfg):
    # type: (Configuration) -> Tuple[int, ...]
    """ Weights making J_A homogeneous: 1 on each t_j, alpha on each x_i and y_j. """
    return (1,) * cfg.d + (cfg.alpha,) * (cfg.c + cfg.d)


def truncation_cap(cfg, r):
    # type: (Configuration, int) -> int
    """ Weighted-degree cap alpha * (d(alpha-1) + min{2r, c(alpha-1)}), enough to
    keep every element of the reduced basis of J_A. """
    alpha = cfg.alpha
    return alpha * (cfg.d * (alpha - 1) + min(2 * r, cfg.c * (alpha - 1)))


def build_elimination_system(cfg, order=None):
    # type: (Configuration, Optional[TermOrder]) -> List[Binomial]
    """ Build Elimination System: The c + d generators of J_A over the universe
    t_1..t_d, x_1..x_c, y_1..y_d, in the order x_1..x_c then y_1..y_d. The t-term
    is always the lead. """
    order = order if order is not None else elimination_order(cfg)
    c, d = cfg.c, cfg.d
    nvars = d + c + d
    gens = []
    for k, point in enumerate(cfg.generators()):
        variable = [0] * nvars
        variable[d + k] = 1
        t_term = tuple(point) + (0,) * (c + d)
        gens.append(Binomial.from_terms(t_term, tuple(variable), order))
    return gens


def _project(basis, cfg, xy_order):
    # type: (GroebnerBasis, Configuration, str) -> GroebnerBasis
    """ Elements of basis free of t-variables, restricted to K[x, y]. """
    d = cfg.d
    elements = [Binomial(b.lead[d:], b.tail[d:]) for b in basis
                if not any(b.lead[:d]) and not any(b.tail[:d])]
    return GroebnerBasis(TermOrder(xy_order), elements)


def eliminate(cfg, xy_order=GREVLEX, truncation=None, **kwargs):
    # type: (Configuration, str, Optional[int], **Any) -> Tuple[GroebnerBasis, GroebnerBasis]
    """ Eliminate: Runs the three elimination steps.

    Arguments:
        cfg: The configuration.
        xy_order: GREVLEX or LEX, the order induced on K[x, y].
        truncation: Optional weighted-degree cap (see :py:func:`truncation_cap`).
        kwargs: Passed on to :py:func:`buchberger <toricgb.gb.buchberger.buchberger>`.

    Returns:
        (reduced basis of J_A, reduced basis of I_A).
    """
    order = elimination_order(cfg, xy_order)
    logger.info('Computing Groebner basis of J_A (%s, c=%d, d=%d)...',
                order.name, cfg.c, cfg.d)
    full = reduce_basis(buchberger(
        build_elimination_system(cfg, order), order, truncation=truncation,
        weights=elimination_weights(cfg), **kwargs))
    toric = reduce_basis(_project(full, cfg, xy_order))
    verify_substitution(cfg, toric)
    logger.debug('J_A basis: %d elements, I_A basis: %d elements.', len(full), len(toric))
    return full, toric


def toric_groebner(cfg, xy_order=GREVLEX, **kwargs):
    # type: (Configuration, str, **Any) -> GroebnerBasis
    """ Toric Groebner: The reduced Groebner basis of I_A under xy_order. """
    return eliminate(cfg, xy_order, **kwargs)[1]


def truncated_toric_groebner(cfg, r=None, xy_order=GREVLEX):
    # type: (Configuration, Optional[int], str) -> GroebnerBasis
    """ Truncated Toric Groebner: As :py:func:`toric_groebner`, discarding all
    pairs above the weighted cap computed from r = r(S). """
    if r is None:
        r = SemigroupEngine(cfg).reduction_number()
    return eliminate(cfg, xy_order, truncation=truncation_cap(cfg, r))[1]


##
## Substitution & Membership
##

def substitution_image(cfg, monomial):
    # type: (Configuration, Sequence[int]) -> Tuple[int, ...]
    """ Substitution Image: The t-exponent of the image of x^m y^n under
    x_i -> t^{a_i}, y_j -> t_j^alpha. """
    generators = cfg.generators()
    if len(monomial) != len(generators):
        raise ValueError('Monomial has %d exponents, expected c + d = %d.' % (
            len(monomial), len(generators)))
    image = [0] * cfg.d
    for exponent, point in zip(monomial, generators):
        if exponent:
            for j, value in enumerate(point):
                image[j] += exponent * value
    return tuple(image)


def verify_substitution(cfg, basis):
    # type: (Configuration, GroebnerBasis) -> None
    """ Verify Substitution: Asserts that every element u - v of basis has
    both terms mapping to the same t-monomial.

    Raises:
        InvariantViolation: Some element does not lie in I_A.
    """
    for element in basis:
        require(substitution_image(cfg, element.lead) == substitution_image(cfg, element.tail),
                'substitution', 'basis element does not vanish under the toric map',
                configuration=repr(cfg), element=repr(element))


def random_relations(cfg, count, rng=None, max_degree=3, engine=None):
    # type: (Configuration, int, Optional[numpy.random.Generator], int, Optional[SemigroupEngine]) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]
    """ Random Relations: count random pairs (u, v) of exponent vectors over
    (x, y) with the same image, so that u - v lies in I_A.

    u is a random walk of 1..max_degree generator additions; v is drawn from
    the fiber of the image of u (and may equal u).
    """
    rng = rng if rng is not None else numpy.random.default_rng()
    engine = engine if engine is not None else SemigroupEngine(cfg)
    nvars = cfg.c + cfg.d
    fibers = {}
    relations = []
    for _ in range(count):
        u = [0] * nvars
        for _ in range(int(rng.integers(1, max_degree + 1))):
            u[int(rng.integers(nvars))] += 1
        u = tuple(u)
        image = substitution_image(cfg, u)
        if image not in fibers:
            fibers[image] = engine.fiber(image)
        fiber = fibers[image]
        relations.append((u, fiber[int(rng.integers(len(fiber)))]))
    return relations


def verify_membership(cfg, basis, count=100, rng=None, max_degree=3):
    # type: (Configuration, GroebnerBasis, int, Optional[numpy.random.Generator], int) -> None
    """ Verify Membership: Asserts that count random lattice relations have
    normal form zero modulo basis.

    Raises:
        InvariantViolation: A relation does not reduce to zero.
    """
    reducer = Reducer(basis.elements, basis.order)
    for u, v in random_relations(cfg, count, rng, max_degree):
        remainder = reducer.normal_form(Binomial.from_terms(u, v, basis.order))
        require(remainder is None, 'membership',
                'lattice relation does not reduce to zero',
                configuration=repr(cfg), u=u, v=v, remainder=repr(remainder))


##
## Bound Report
##

def bound_report(cfg, compute_lex=False, compute_JA_maxdeg=False, compute_normality=True,
                 compute_groebner=True, compute_truncated=False, check=True):
    # type: (Configuration, bool, bool, bool, bool, bool, bool) -> BoundReport
    """ Bound Report: Computes the invariants of cfg and all bounds.

    Arguments:
        cfg: The configuration.
        compute_lex: Also compute the lex basis (maxdeg_lex).
        compute_JA_maxdeg: Record the degree of the reduced basis of J_A.
        compute_normality: Decide normality (is_normal).
        compute_groebner: Compute the revlex basis. When False only the
            semigroup and lattice fields are filled.
        compute_truncated: Also run the truncated elimination and record whether
            it produced the same reduced basis (truncation_identical).
        check: Run :py:func:`check_theorems` on the result.

    Returns:
        BoundReport

    Raises:
        InvariantViolation: A proved bound or an internal cross-check failed.
    """
    engine = SemigroupEngine(cfg)
    c, d, alpha = cfg.c, cfg.d, cfg.alpha
    deg = engine.degree
    r = engine.reduction_number()
    engine.check_reduction_stability(r)
    report = BoundReport(
        configuration=cfg.to_dict(), r=r, deg=deg, c=c, alpha=alpha, d=d,
        lattice_index=lattice_index(cfg),
        bound_thmA1=max(r + 1, 2 * r - 1),
        bound_thmA1_deg=max(2, 2 * (deg - c) - 1),
        bound_thmA4=max(c, alpha, c * (alpha - 1) - 1),
        bound_sturmfels=c * deg,
        bound_propA6=d * (alpha - 1) + min(2 * r, c * (alpha - 1)),
        bound_EG=deg - c + 1,
        full_face_bound=engine.full_face_bound(),
        known_bound_cases=engine.known_bound_cases())
    if compute_normality:
        report.is_normal = engine.is_normal()

    if compute_groebner:
        full, toric = eliminate(cfg, GREVLEX)
        report.maxdeg_revlex = toric.max_degree()
        report.conjecture_holds = report.maxdeg_revlex <= report.bound_EG
        report.eg_gap = report.bound_EG - report.maxdeg_revlex
        leads = initial_ideal(toric)
        require(max([sum(m) for m in leads] or [0]) == report.maxdeg_revlex,
                'initial-ideal-degree',
                'initial ideal generator degree differs from the basis degree',
                configuration=repr(cfg))
        report.hilbert_dimension, report.hilbert_multiplicity = hilbert_data(leads, c + d)
        require(report.hilbert_dimension == d and report.hilbert_multiplicity == deg,
                'hilbert-degree',
                'Hilbert series of in(I_A) disagrees with the lattice degree',
                configuration=repr(cfg), lattice_degree=deg,
                hilbert_dimension=report.hilbert_dimension,
                hilbert_multiplicity=report.hilbert_multiplicity)
        if compute_JA_maxdeg:
            report.maxdeg_JA = full.max_degree()
        if compute_lex:
            report.maxdeg_lex = toric_groebner(cfg, LEX).max_degree()
        if compute_truncated:
            report.truncation_identical = (
                truncated_toric_groebner(cfg, r).elements == toric.elements)

    if check:
        check_theorems(report)
    return report


def check_theorems(report):
    # type: (BoundReport) -> None
    """ Check Theorems: Compares every computed degree against its proved bound.

    Raises:
        InvariantViolation: Named 'bounds', with the failing bound names in its
            diagnostics under 'failed'.
    """
    failed = []
    if report.r > report.deg - report.c:
        failed.append('deg-codim')
    if report.bound_thmA1 > report.bound_thmA1_deg:
        failed.append('thmA1-deg')
    if report.full_face_bound is not None and report.r > report.full_face_bound:
        failed.append('lemmaA2')
    if report.maxdeg_revlex is not None:
        if report.maxdeg_revlex > report.bound_thmA1:
            failed.append('thmA1')
        if report.maxdeg_revlex > report.bound_thmA4:
            failed.append('thmA4')
        if report.maxdeg_revlex > report.bound_sturmfels:
            failed.append('sturmfels')
        if report.is_normal and report.maxdeg_revlex > report.d:
            failed.append('normal-degree')
        if not report.conjecture_holds and report.known_bound_cases:
            failed.append('known-case')
    if report.maxdeg_lex is not None and report.maxdeg_lex > report.bound_sturmfels:
        failed.append('sturmfels-lex')
    if report.maxdeg_JA is not None and report.maxdeg_JA > report.bound_propA6:
        failed.append('propA6')
    if report.truncation_identical is False:
        failed.append('truncation')
    if failed:
        require(False, 'bounds', 'proved bound(s) failed: %s' % ', '.join(failed),
                failed=failed, report=report.to_dict())


def counterexample_candidate(report, basis=None):
    # type: (BoundReport, Optional[GroebnerBasis]) -> Optional[CounterexampleCandidate]
    """ Counterexample Candidate: A record when the revlex degree exceeds
    deg - codim + 1, else None. Witnesses are the basis elements of too high
    degree, when basis is given. """
    if report.conjecture_holds is None or report.conjecture_holds:
        return None
    witnesses = []
    if basis is not None:
        universe = VariableUniverse.for_toric(report.c, report.d)
        witnesses = [universe.format_binomial(b) for b in basis
                     if b.degree() > report.bound_EG]
    logger.warning('Counterexample candidate: maxdeg_revlex = %d > %d for %s',
                   report.maxdeg_revlex, report.bound_EG, report.configuration)
    return CounterexampleCandidate(report.configuration, report.maxdeg_revlex,
                                   report.bound_EG, witnesses)
