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


""" ``toricgb.predicates.edge_predicates`` Module

Predicates on how the deleted points meet the edges of the simplex.  The edge
between corners i and j holds the points whose support lies in {i, j}; with
1-based indices on the command line, ``edge-full=1,2`` names the edge between
e_1 and e_2.
"""

# Standard Library Imports
import itertools

# ToricGB Library Imports
from toricgb.deletion_predicate import DeletionPredicate
from toricgb.deletion_predicate import InvalidPredicate
from toricgb.lattice import enumerate_simplex_points
from toricgb.lattice import is_corner_point


def on_edge(point, edge):
    # type: (Tuple[int, ...], Tuple[int, int]) -> bool
    """ True if point lies on the edge between corners edge[0] and edge[1]. """
    i, j = edge
    return point[i] + point[j] == sum(point)


def edges(d):
    # type: (int) -> List[Tuple[int, int]]
    """ All edges (i, j), 0-based with i < j. """
    return list(itertools.combinations(range(d), 2))


##
## EdgeOneEachPredicate Class Implementation
##

class EdgeOneEachPredicate(DeletionPredicate):
    """ Every edge of the simplex contains exactly one deleted point. """

    name = 'edge-one-each'

    def accepts(self, deleted):
        for edge in edges(self.d):
            if sum(1 for point in deleted if on_edge(point, edge)) != 1:
                return False
        return True


##
## EdgeFullPredicate Class Implementation
##

class EdgeFullPredicate(DeletionPredicate):
    """ The given edge keeps all of its alpha + 1 points (none is deleted).

    Attributes:
        edge: 0-based corner indices (i, j), i < j.
    """

    name = 'edge-full'

    def __init__(self, alpha, d, edge):
        # type: (int, int, Tuple[int, int])
        super(EdgeFullPredicate, self).__init__(alpha, d)
        self.edge = tuple(sorted(edge))
        self._points = frozenset(
            point for point in enumerate_simplex_points(alpha, d)
            if on_edge(point, self.edge) and not is_corner_point(point, alpha))

    @classmethod
    def from_args(cls, args, alpha, d):
        try:
            indices = [int(x) for x in (args or '').split(',')]
        except ValueError:
            raise InvalidPredicate(args, 'edge-full expects two corner indices, e.g. edge-full=1,2.')
        if len(indices) != 2 or indices[0] == indices[1] or not all(
                1 <= index <= d for index in indices):
            raise InvalidPredicate(
                args, 'edge-full expects two distinct corner indices in 1..%d.' % d)
        return cls(alpha, d, (indices[0] - 1, indices[1] - 1))

    def forbidden_points(self):
        return self._points

    def accepts(self, deleted):
        return not any(point in self._points for point in deleted)

    def describe(self):
        return '%s=%d,%d' % (self.name, self.edge[0] + 1, self.edge[1] + 1)
