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


""" ``toricgb.predicates.point_predicates`` Module

The trivial predicate and predicates naming individual points.
"""

# ToricGB Library Imports
from toricgb.deletion_predicate import DeletionPredicate
from toricgb.deletion_predicate import InvalidPredicate
from toricgb.lattice import is_corner_point


class NonePredicate(DeletionPredicate):
    """ Accepts every deleted set. """

    name = 'none'


##
## MustDeletePredicate Class Implementation
##

class MustDeletePredicate(DeletionPredicate):
    """ The given non-corner point is among the deleted points. """

    name = 'must-delete'

    def __init__(self, alpha, d, point):
        # type: (int, int, Tuple[int, ...])
        super(MustDeletePredicate, self).__init__(alpha, d)
        self.point = tuple(point)

    @classmethod
    def from_args(cls, args, alpha, d):
        try:
            point = tuple(int(x) for x in (args or '').split(','))
        except ValueError:
            raise InvalidPredicate(args, 'must-delete expects a point, e.g. must-delete=2,1,0.')
        if len(point) != d or any(x < 0 for x in point) or sum(point) != alpha:
            raise InvalidPredicate(
                args, 'must-delete point must have %d non-negative entries summing to %d.' % (
                    d, alpha))
        if is_corner_point(point, alpha):
            raise InvalidPredicate(args, 'The corner points e_j cannot be deleted.')
        return cls(alpha, d, point)

    def required_points(self):
        return frozenset([self.point])

    def accepts(self, deleted):
        return self.point in deleted

    def describe(self):
        return '%s=%s' % (self.name, ','.join(str(x) for x in self.point))
