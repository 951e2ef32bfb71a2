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


""" ``toricgb.predicates.facet_predicates`` Module

Predicates on how the deleted points meet the facets {x_i = 0} of the simplex.
"""

# ToricGB Library Imports
from toricgb.deletion_predicate import DeletionPredicate
from toricgb.deletion_predicate import InvalidPredicate


##
## FacetMinPredicate Class Implementation
##

class FacetMinPredicate(DeletionPredicate):
    """ Every facet contains at least ``minimum`` deleted points. """

    name = 'facet-min'

    def __init__(self, alpha, d, minimum):
        # type: (int, int, int)
        super(FacetMinPredicate, self).__init__(alpha, d)
        self.minimum = minimum

    @classmethod
    def from_args(cls, args, alpha, d):
        try:
            minimum = int(args)
        except (TypeError, ValueError):
            raise InvalidPredicate(args, 'facet-min expects an integer, e.g. facet-min=2.')
        if minimum < 0:
            raise InvalidPredicate(args, 'facet-min must be non-negative.')
        return cls(alpha, d, minimum)

    def accepts(self, deleted):
        for facet in range(self.d):
            if sum(1 for point in deleted if point[facet] == 0) < self.minimum:
                return False
        return True

    def describe(self):
        return '%s=%d' % (self.name, self.minimum)
