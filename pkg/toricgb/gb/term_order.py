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

""" ``toricgb.gb.term_order`` Module

Monomials are tuples of non-negative exponents over an ordered
:py:class:`VariableUniverse`, where the first variable is the most significant.
The toric ideal I_A lives over x_1..x_c, y_1..y_d and the elimination ideal J_A
over t_1..t_d, x_1..x_c, y_1..y_d.

:py:class:`TermOrder` wraps the SymPy ordering keys (``grevlex``, ``lex``, and a
``ProductOrder`` for the elimination block order). Graded reverse lexicographic
order compares total degree first, then the last nonzero entry of the exponent
difference decides, a negative entry meaning greater.
"""

# Standard Library Imports
import re
from operator import itemgetter

# Third-Party Library Imports
from sympy.polys.orderings import ProductOrder
from sympy.polys.orderings import grevlex
from sympy.polys.orderings import lex


GREVLEX = 'grevlex'
LEX = 'lex'
ELIMINATION = 'elimination'

LESS = -1
EQUAL = 0
GREATER = 1

_BASE_ORDERS = {GREVLEX: grevlex, LEX: lex}


##
## Term Order Exceptions
##

class UniverseMismatch(Exception):
    """ Raised when monomials from different variable universes are combined. """
    def __init__(self, message="Monomials belong to different variable universes."):
        # type: (str)
        super(UniverseMismatch, self).__init__(message)


##
## VariableUniverse
##

class VariableUniverse(object):
    """ Ordered variable names; position 0 is the most significant variable. """

    def __init__(self, names):
        # type: (Iterable[str])
        self.names = tuple(names)
        self._index = {name: i for i, name in enumerate(self.names)}

    @classmethod
    def for_toric(cls, c, d):
        # type: (int, int) -> VariableUniverse
        """ x_1 > ... > x_c > y_1 > ... > y_d """
        return cls(['x%d' % (i + 1) for i in range(c)] + ['y%d' % (j + 1) for j in range(d)])

    @classmethod
    def for_elimination(cls, c, d):
        # type: (int, int) -> VariableUniverse
        """ t_1 > ... > t_d > x_1 > ... > x_c > y_1 > ... > y_d """
        return cls(['t%d' % (j + 1) for j in range(d)] + list(cls.for_toric(c, d).names))

    def __len__(self):
        return len(self.names)

    def __eq__(self, other):
        return isinstance(other, VariableUniverse) and self.names == other.names

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.names)

    def index(self, name):
        # type: (str) -> int
        return self._index[name]

    def check(self, monomial):
        # type: (Tuple[int, ...]) -> Tuple[int, ...]
        """ Returns monomial unchanged, raising UniverseMismatch on a length mismatch. """
        if len(monomial) != len(self.names):
            raise UniverseMismatch('Monomial %r has %d exponents, universe has %d variables.' % (
                monomial, len(monomial), len(self.names)))
        return monomial

    def format_monomial(self, monomial):
        # type: (Tuple[int, ...]) -> str
        """ Format Monomial: e.g. (1, 1, 0, 0) -> 'x1*x2', (0, 2, 1, 0) -> 'x2^2*y1'. """
        self.check(monomial)
        factors = []
        for name, exponent in zip(self.names, monomial):
            if exponent == 1:
                factors.append(name)
            elif exponent > 1:
                factors.append('%s^%d' % (name, exponent))
        return '*'.join(factors) if factors else '1'

    def format_binomial(self, binomial):
        # type: (Binomial) -> str
        """ Format Binomial: e.g. 'x1*x2 - y1*y2' (lead first). """
        return '%s - %s' % (self.format_monomial(binomial.lead),
                            self.format_monomial(binomial.tail))

    def parse_monomial(self, text):
        # type: (str) -> Tuple[int, ...]
        """ Parse Monomial: Inverse of format_monomial ('x2^2*y1', '1').

        Raises:
            ValueError: Unknown variable name or malformed factor.
        """
        exponents = [0] * len(self.names)
        text = text.strip()
        if text == '1':
            return tuple(exponents)
        for factor in text.split('*'):
            match = re.match(r'^\s*([A-Za-z]\w*?)(?:\^(\d+))?\s*$', factor)
            if match is None or match.group(1) not in self._index:
                raise ValueError('Cannot parse monomial factor %r.' % factor)
            exponents[self._index[match.group(1)]] += int(match.group(2) or 1)
        return tuple(exponents)

    def parse_binomial(self, text):
        # type: (str) -> Tuple[Tuple[int, ...], Tuple[int, ...]]
        """ Parse Binomial: 'u - v' -> (u, v) as exponent tuples. """
        left, sep, right = text.partition(' - ')
        if not sep:
            raise ValueError('Cannot parse binomial %r (expected "u - v").' % text)
        return self.parse_monomial(left), self.parse_monomial(right)

    def __repr__(self):
        return 'VariableUniverse(%s)' % ', '.join(self.names)


##
## TermOrder
##

class TermOrder(object):
    """ A term order on exponent tuples.

    Arguments:
        kind: GREVLEX, LEX or ELIMINATION.
        split: For ELIMINATION, the number of leading (t-block) variables.
        tail_kind: For ELIMINATION, the order on the trailing block (GREVLEX or LEX).
            The t-block is always compared first, by grevlex, so any monomial
            involving a t-variable beats every t-free monomial.
    """

    def __init__(self, kind=GREVLEX, split=0, tail_kind=GREVLEX):
        # type: (str, int, str)
        if kind not in (GREVLEX, LEX, ELIMINATION):
            raise ValueError('Unknown term order kind: %r' % kind)
        if tail_kind not in _BASE_ORDERS:
            raise ValueError('Unknown block order kind: %r' % tail_kind)
        if kind == ELIMINATION and split < 1:
            raise ValueError('Elimination order needs a positive block split.')
        self.kind = kind
        self.split = split if kind == ELIMINATION else 0
        self.tail_kind = tail_kind if kind == ELIMINATION else kind
        if kind == ELIMINATION:
            self._key = ProductOrder(
                (grevlex, itemgetter(slice(None, split))),
                (_BASE_ORDERS[tail_kind], itemgetter(slice(split, None))))
        else:
            self._key = _BASE_ORDERS[kind]

    @classmethod
    def elimination(cls, split, tail_kind=GREVLEX):
        # type: (int, str) -> TermOrder
        return cls(ELIMINATION, split, tail_kind)

    def key(self, monomial):
        # type: (Tuple[int, ...]) -> Tuple
        """ Sort key; u > v in this order iff key(u) > key(v). """
        return self._key(monomial)

    def restriction(self):
        # type: () -> TermOrder
        """ The order induced on the trailing (t-free) block. """
        return TermOrder(self.tail_kind)

    @property
    def name(self):
        # type: () -> str
        if self.kind == ELIMINATION:
            return 'elimination(%d,%s)' % (self.split, self.tail_kind)
        return self.kind

    def __eq__(self, other):
        return isinstance(other, TermOrder) and (
            self.kind, self.split, self.tail_kind) == (other.kind, other.split, other.tail_kind)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.kind, self.split, self.tail_kind))

    def __repr__(self):
        return 'TermOrder(%s)' % self.name


def compare(order, u, v):
    # type: (TermOrder, Tuple[int, ...], Tuple[int, ...]) -> int
    """ Compare: Returns LESS, EQUAL or GREATER comparing u to v under order.

    Raises:
        UniverseMismatch: u and v have different lengths, or the elimination
            block does not fit inside them.
    """
    if len(u) != len(v) or len(u) < order.split:
        raise UniverseMismatch('Cannot compare %r and %r under %s.' % (u, v, order.name))
    key_u, key_v = order.key(u), order.key(v)
    if key_u > key_v:
        return GREATER
    if key_u < key_v:
        return LESS
    return EQUAL
