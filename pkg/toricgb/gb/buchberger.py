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

""" ``toricgb.gb.buchberger`` Module

Buchberger's algorithm for ideals generated by pure-difference binomials,
together with the :py:class:`GroebnerBasis` value type, reduction to the unique
reduced basis, and the initial ideal.

Pairs are selected with the normal strategy by default (smallest lcm first,
by weighted degree and then by the term order), and pruned with the
Gebauer-Moeller criteria, which combine Buchberger's coprime-lead criterion with
the chain criterion.  When a truncation cap W is given, the generators must be
homogeneous for the supplied weight vector, and pairs whose lcm has weighted
degree above W are dropped; the result then contains every element of a
Groebner basis up to weighted degree W.
"""

# Standard Library Imports
from __future__ import print_function

import heapq
import itertools
import logging

# Third-Party Library Imports
from sympy.polys.monomials import monomial_divides
from sympy.polys.monomials import monomial_lcm
from sympy.polys.monomials import monomial_mul

# ToricGB Library Imports
from toricgb.gb.binomial import Binomial
from toricgb.gb.binomial import Reducer
from toricgb.gb.binomial import s_binomial
from toricgb.gb.binomial import weighted_degree
from toricgb.gb.term_order import TermOrder
from toricgb.gb.term_order import UniverseMismatch

logger = logging.getLogger('toricgb')

SELECTION_STRATEGIES = ('normal', 'fifo', 'degree')
ELIMINATION_STRATEGIES = ('gebauermoeller', 'lcm', 'none')


##
## Buchberger Exceptions
##

class NotWeightHomogeneous(Exception):
    """ Raised when truncation is requested for generators which are not
    homogeneous with respect to the given weight vector. """
    def __init__(self, binomial, message="Truncation requires weight-homogeneous generators."):
        # type: (Binomial, str)
        super(NotWeightHomogeneous, self).__init__('%s (%r)' % (message, binomial))
        self.binomial = binomial
        self.message = message

    def __reduce__(self):
        return (NotWeightHomogeneous, (self.binomial, self.message))


##
## GroebnerBasis
##

class GroebnerBasis(object):
    """ A list of binomials forming a Groebner basis under order.

    When reduced is True, the leads are the minimal generators of the initial
    ideal, no term of an element is divisible by another element's lead, and the
    elements are sorted by lead (ascending in order).
    """

    def __init__(self, order, elements, reduced=False):
        # type: (TermOrder, Iterable[Binomial], bool)
        self.order = order
        self.elements = tuple(elements)
        self.reduced = reduced

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def leads(self):
        # type: () -> List[Tuple[int, ...]]
        return [element.lead for element in self.elements]

    def max_degree(self):
        # type: () -> int
        """ Largest standard degree of an element (0 for an empty basis). """
        return max([element.degree() for element in self.elements] or [0])

    def to_dict(self, universe=None):
        # type: (Optional[VariableUniverse]) -> Dict[str, Any]
        """ Machine JSON form: exponent vectors, plus readable strings when a
        universe is supplied. """
        data = {
            'order': {'kind': self.order.kind, 'split': self.order.split,
                      'tail_kind': self.order.tail_kind},
            'reduced': self.reduced,
            'elements': [[list(b.lead), list(b.tail)] for b in self.elements],
        }
        if universe is not None:
            data['variables'] = list(universe.names)
            data['binomials'] = [universe.format_binomial(b) for b in self.elements]
        return data

    @classmethod
    def from_dict(cls, data):
        # type: (Dict[str, Any]) -> GroebnerBasis
        order = TermOrder(data['order']['kind'], data['order']['split'],
                          data['order']['tail_kind'])
        return cls(order, [Binomial(lead, tail) for lead, tail in data['elements']],
                   data['reduced'])

    def __eq__(self, other):
        return isinstance(other, GroebnerBasis) and (
            self.order == other.order and self.elements == other.elements
            and self.reduced == other.reduced)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return 'GroebnerBasis(%s, %d elements%s)' % (
            self.order.name, len(self.elements), ', reduced' if self.reduced else '')


class BuchbergerStats(object):
    """ Counters collected during one run of :py:func:`buchberger`. """

    def __init__(self):
        self.pairs_created = 0
        self.pairs_reduced = 0
        self.zero_reductions = 0
        self.coprime_skipped = 0
        self.chain_skipped = 0
        self.truncated = 0
        self.basis_size = 0

    def as_dict(self):
        # type: () -> Dict[str, int]
        return dict(self.__dict__)


##
## Pair Queue
##

class _PairQueue(object):
    """ Pending pairs (i, j), i < j, ordered by the selection strategy. Removed
    pairs stay in the heap and are skipped lazily. """

    def __init__(self, strategy, order, weights):
        # type: (str, TermOrder, Optional[Sequence[int]])
        if strategy not in SELECTION_STRATEGIES:
            raise ValueError('Unknown selection strategy: %r' % strategy)
        self._strategy = strategy
        self._order = order
        self._weights = weights
        self._heap = []
        self._counter = itertools.count()
        self.pairs = set()

    def _priority(self, lcm, sequence):
        if self._strategy == 'fifo':
            return (sequence,)
        if self._strategy == 'degree':
            return (sum(lcm), sequence)
        degree = weighted_degree(lcm, self._weights) if self._weights else sum(lcm)
        return (degree, self._order.key(lcm), sequence)

    def push(self, pair, lcm):
        # type: (Tuple[int, int], Tuple[int, ...]) -> None
        self.pairs.add(pair)
        heapq.heappush(self._heap, (self._priority(lcm, next(self._counter)), pair))

    def pop(self):
        # type: () -> Optional[Tuple[int, int]]
        while self._heap:
            _, pair = heapq.heappop(self._heap)
            if pair in self.pairs:
                self.pairs.remove(pair)
                return pair
        return None

    def __len__(self):
        return len(self.pairs)


def _update(leads, queue, new_lead, strategy, stats):
    # type: (List[Tuple[int, ...]], _PairQueue, Tuple[int, ...], str, BuchbergerStats) -> List
    """ Update: Prunes the pending pairs for a new basis element with lead
    new_lead (about to get index len(leads)), and returns the new pairs to
    add as (pair, lcm) tuples.

    With 'gebauermoeller', an old pair (i, j) is dropped when new_lead divides
    its lcm and that lcm differs from both lcm(lead_i, new_lead) and
    lcm(lead_j, new_lead). Among the new pairs only one per minimal lcm is
    kept, and none from an lcm class containing a coprime pair.
    """
    new_index = len(leads)
    if strategy == 'none':
        return [((i, new_index), monomial_lcm(lead, new_lead)) for i, lead in enumerate(leads)]
    if strategy == 'lcm':
        result = []
        for i, lead in enumerate(leads):
            lcm = monomial_lcm(lead, new_lead)
            if lcm == monomial_mul(lead, new_lead):
                stats.coprime_skipped += 1
            else:
                result.append(((i, new_index), lcm))
        return result
    if strategy != 'gebauermoeller':
        raise ValueError('Unknown elimination strategy: %r' % strategy)

    for pair in list(queue.pairs):
        i, j = pair
        lcm_ij = monomial_lcm(leads[i], leads[j])
        if (monomial_divides(new_lead, lcm_ij)
                and lcm_ij != monomial_lcm(leads[i], new_lead)
                and lcm_ij != monomial_lcm(leads[j], new_lead)):
            queue.pairs.discard(pair)
            stats.chain_skipped += 1

    lcm_classes = {}
    for i, lead in enumerate(leads):
        lcm_classes.setdefault(monomial_lcm(lead, new_lead), []).append(i)
    minimal_lcms = []
    for lcm in sorted(lcm_classes, key=queue._order.key):
        if all(not monomial_divides(other, lcm) for other in minimal_lcms):
            minimal_lcms.append(lcm)
        else:
            stats.chain_skipped += len(lcm_classes[lcm])
    result = []
    for lcm in minimal_lcms:
        members = lcm_classes[lcm]
        if any(lcm == monomial_mul(leads[i], new_lead) for i in members):
            stats.coprime_skipped += len(members)
        else:
            result.append(((min(members), new_index), lcm))
    return result


##
## Buchberger's Algorithm
##

def buchberger(gens, order, truncation=None, weights=None, selection='normal',
               elimination='gebauermoeller', cancel_common_factors=True, stats=None):
    # type: (Sequence[Binomial], TermOrder, Optional[int], Optional[Sequence[int]], str, str, bool, Optional[BuchbergerStats]) -> GroebnerBasis
    """ Buchberger: Computes a Groebner basis of the ideal generated by gens.

    Arguments:
        gens: Nonzero binomials normalized under order.
        order: The term order.
        truncation: Optional weighted-degree cap W; pairs whose lcm has weighted
            degree above W are discarded.
        weights: Weight vector for the normal strategy and for truncation
            (standard degree when None).
        selection: 'normal', 'fifo' or 'degree'.
        elimination: 'gebauermoeller', 'lcm' or 'none'.
        cancel_common_factors: Store each new element u - v with the gcd of u and v
            divided out. This is valid only for ideals which are prime and
            contain no monomial, such as toric ideals and their elimination ideals.
        stats: Optional BuchbergerStats to fill in.

    Returns:
        GroebnerBasis (not reduced; see :py:func:`reduce_basis`).

    Raises:
        NotWeightHomogeneous: truncation given but a generator is not homogeneous.
        UniverseMismatch: generators have different lengths.
    """
    stats = stats if stats is not None else BuchbergerStats()
    gens = [g for g in gens if g is not None]
    if gens:
        nvars = gens[0].nvars
        if any(g.nvars != nvars for g in gens):
            raise UniverseMismatch('Generators have different numbers of variables.')
        if weights is not None and len(weights) != nvars:
            raise UniverseMismatch('Weight vector length does not match the generators.')
    if truncation is not None:
        if weights is None:
            weights = (1,) * (gens[0].nvars if gens else 0)
        for g in gens:
            if not g.is_homogeneous(weights):
                raise NotWeightHomogeneous(g)

    queue = _PairQueue(selection, order, weights)
    reducer = Reducer([], order)
    leads = []

    def _add(element):
        for pair, lcm in _update(leads, queue, element.lead, elimination, stats):
            if truncation is not None and weighted_degree(lcm, weights) > truncation:
                stats.truncated += 1
                continue
            stats.pairs_created += 1
            queue.push(pair, lcm)
        reducer.add(element)
        leads.append(element.lead)

    for g in gens:
        _add(g)

    while len(queue):
        pair = queue.pop()
        if pair is None:
            break
        i, j = pair
        stats.pairs_reduced += 1
        remainder = reducer.normal_form(
            s_binomial(reducer.elements[i], reducer.elements[j], order))
        if remainder is None:
            stats.zero_reductions += 1
            continue
        if cancel_common_factors:
            remainder = remainder.cancel_common_factor()
        _add(remainder)

    stats.basis_size = len(reducer.elements)
    logger.debug('Buchberger (%s, %s, %s): %s', order.name, selection, elimination,
                 stats.as_dict())
    return GroebnerBasis(order, reducer.elements, reduced=False)


def reduce_basis(basis):
    # type: (GroebnerBasis) -> GroebnerBasis
    """ Reduce Basis: Returns the unique reduced Groebner basis for the ideal and
    order of basis (which must be a Groebner basis).

    Elements whose lead is divisible by an earlier (smaller or equal) lead are
    dropped, then each tail is replaced by its normal form, and the result is
    sorted by lead.
    """
    order = basis.order
    minimal = []
    for element in sorted(basis.elements, key=lambda b: order.key(b.lead)):
        if all(not monomial_divides(kept.lead, element.lead) for kept in minimal):
            minimal.append(element)
    reducer = Reducer(minimal, order)
    reduced = [Binomial(element.lead, reducer.reduce_monomial(element.tail))
               for element in minimal]
    return GroebnerBasis(order, reduced, reduced=True)


def initial_ideal(basis):
    # type: (GroebnerBasis) -> FrozenSet[Tuple[int, ...]]
    """ Initial Ideal: Minimal monomial generators of in(I), i.e. the leads of the
    reduced basis (the basis is reduced first if necessary). """
    if not basis.reduced:
        basis = reduce_basis(basis)
    return frozenset(basis.leads())


def is_groebner_basis(basis):
    # type: (GroebnerBasis) -> bool
    """ Is Groebner Basis: True if every S-binomial of every pair of elements
    reduces to zero modulo basis. """
    reducer = Reducer(basis.elements, basis.order)
    for f, g in itertools.combinations(basis.elements, 2):
        if reducer.normal_form(s_binomial(f, g, basis.order)) is not None:
            return False
    return True
