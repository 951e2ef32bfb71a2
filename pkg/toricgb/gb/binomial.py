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

""" ``toricgb.gb.binomial`` Module

Pure-difference binomials u - v (coefficients fixed at +1 and -1) and the two
operations Buchberger's algorithm needs on them: the S-binomial of a pair and
the normal form with respect to a list of binomials.  Both are closed on pure
differences: the S-polynomial of u - v and w - z is again a pure difference,
and replacing a divisible term m*w by m*z keeps one.  The zero binomial is
represented by None.
"""

# Third-Party Library Imports
from sympy.polys.monomials import monomial_divides
from sympy.polys.monomials import monomial_gcd
from sympy.polys.monomials import monomial_lcm
from sympy.polys.monomials import monomial_ldiv
from sympy.polys.monomials import monomial_mul

# ToricGB Library Imports
from toricgb.gb.term_order import UniverseMismatch
from toricgb.platform import check_exponents


def support_mask(monomial):
    # type: (Tuple[int, ...]) -> int
    """ Bit i is set iff variable i occurs in monomial. """
    mask = 0
    for i, exponent in enumerate(monomial):
        if exponent:
            mask |= 1 << i
    return mask


def weighted_degree(monomial, weights):
    # type: (Tuple[int, ...], Sequence[int]) -> int
    return sum(e * w for e, w in zip(monomial, weights))


##
## Binomial
##

class Binomial(object):
    """ The binomial lead - tail, with lead strictly greater than tail in the
    order it was normalized under. Build instances with :py:meth:`from_terms`. """

    __slots__ = ('lead', 'tail')

    def __init__(self, lead, tail):
        # type: (Tuple[int, ...], Tuple[int, ...])
        if len(lead) != len(tail):
            raise UniverseMismatch('Binomial terms %r and %r differ in length.' % (lead, tail))
        self.lead = tuple(lead)
        self.tail = tuple(tail)

    @classmethod
    def from_terms(cls, u, v, order):
        # type: (Tuple[int, ...], Tuple[int, ...], TermOrder) -> Optional[Binomial]
        """ From Terms: u - v normalized so the larger term leads, or None when
        u == v. (The sign of the binomial is irrelevant for ideal membership.) """
        u, v = tuple(u), tuple(v)
        if u == v:
            return None
        if order.key(u) < order.key(v):
            u, v = v, u
        return cls(u, v)

    @property
    def nvars(self):
        # type: () -> int
        return len(self.lead)

    def degree(self):
        # type: () -> int
        """ Standard degree: the larger total degree of the two terms. """
        return max(sum(self.lead), sum(self.tail))

    def weighted_degrees(self, weights):
        # type: (Sequence[int]) -> Tuple[int, int]
        return weighted_degree(self.lead, weights), weighted_degree(self.tail, weights)

    def is_homogeneous(self, weights=None):
        # type: (Optional[Sequence[int]]) -> bool
        """ True if both terms have the same (weighted) degree. """
        if weights is None:
            return sum(self.lead) == sum(self.tail)
        lead_degree, tail_degree = self.weighted_degrees(weights)
        return lead_degree == tail_degree

    def cancel_common_factor(self):
        # type: () -> Binomial
        """ Divides both terms by their gcd. Term orders are multiplicative, so
        the lead stays the lead. """
        common = monomial_gcd(self.lead, self.tail)
        if not any(common):
            return self
        return Binomial(monomial_ldiv(self.lead, common), monomial_ldiv(self.tail, common))

    def multiply(self, monomial):
        # type: (Tuple[int, ...]) -> Binomial
        return Binomial(check_exponents(monomial_mul(self.lead, monomial)),
                        check_exponents(monomial_mul(self.tail, monomial)))

    def __eq__(self, other):
        return isinstance(other, Binomial) and (
            self.lead == other.lead and self.tail == other.tail)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.lead, self.tail))

    def __repr__(self):
        return 'Binomial(%r - %r)' % (self.lead, self.tail)


def s_binomial(f, g, order):
    # type: (Binomial, Binomial, TermOrder) -> Optional[Binomial]
    """ S-Binomial: (L/lead(g))*tail(g) - (L/lead(f))*tail(f), L = lcm of the
    leads, normalized under order; None when the two terms coincide.

    Raises:
        UniverseMismatch: f and g have different numbers of variables.
    """
    if f.nvars != g.nvars:
        raise UniverseMismatch()
    lcm = monomial_lcm(f.lead, g.lead)
    u = check_exponents(monomial_mul(monomial_ldiv(lcm, g.lead), g.tail))
    v = check_exponents(monomial_mul(monomial_ldiv(lcm, f.lead), f.tail))
    return Binomial.from_terms(u, v, order)


##
## Reduction
##

class Reducer(object):
    """ An ordered list of binomials used as reducers. Divisors are looked up in
    list order (the canonical index), with a support bitmask to skip leads which
    cannot divide. """

    def __init__(self, basis, order):
        # type: (Iterable[Binomial], TermOrder)
        self.order = order
        self.elements = []
        self._leads = []
        self._masks = []
        for element in basis:
            self.add(element)

    def add(self, element):
        # type: (Binomial) -> int
        """ Appends element, returning its index. """
        self.elements.append(element)
        self._leads.append(element.lead)
        self._masks.append(support_mask(element.lead))
        return len(self.elements) - 1

    def __len__(self):
        return len(self.elements)

    def find_divisor(self, monomial):
        # type: (Tuple[int, ...]) -> Optional[int]
        """ Index of the first element whose lead divides monomial, or None. """
        mask = support_mask(monomial)
        for i, lead_mask in enumerate(self._masks):
            if lead_mask & ~mask == 0 and monomial_divides(self._leads[i], monomial):
                return i
        return None

    def _step(self, monomial, index):
        # type: (Tuple[int, ...], int) -> Tuple[int, ...]
        element = self.elements[index]
        return check_exponents(monomial_mul(monomial_ldiv(monomial, element.lead), element.tail))

    def reduce_monomial(self, monomial):
        # type: (Tuple[int, ...]) -> Tuple[int, ...]
        """ Reduce Monomial: Repeatedly replaces m = q*lead(g) by q*tail(g) until no
        lead divides it. Each step strictly decreases the monomial. """
        while True:
            index = self.find_divisor(monomial)
            if index is None:
                return monomial
            monomial = self._step(monomial, index)

    def normal_form(self, binomial):
        # type: (Optional[Binomial]) -> Optional[Binomial]
        """ Normal Form: Reduces binomial until neither term is divisible by a
        lead, always reducing the currently greater term first. """
        if binomial is None:
            return None
        key = self.order.key
        u, v = binomial.lead, binomial.tail
        while True:
            index = self.find_divisor(u)
            if index is not None:
                u = self._step(u, index)
            else:
                index = self.find_divisor(v)
                if index is None:
                    return Binomial(u, v)
                v = self._step(v, index)
            if u == v:
                return None
            if key(u) < key(v):
                u, v = v, u


def normal_form(binomial, basis, order):
    # type: (Optional[Binomial], Sequence[Binomial], TermOrder) -> Optional[Binomial]
    """ Normal Form: The fully reduced form of binomial modulo basis (None for zero).

    Among several divisors the element of smallest index in basis is used, so
    the result is deterministic for a given basis order.
    """
    return Reducer(basis, order).normal_form(binomial)
