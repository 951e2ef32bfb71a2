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


""" ``toricgb.predicates`` Module

This module contains the predicates a sweep can filter deleted point sets with,
implemented by inheriting from the base DeletionPredicate class (in
toricgb.deletion_predicate).

Individual predicates are imported in this file for easy access from other
modules (i.e. from toricgb.predicates import FacetMinPredicate), and are
looked up by their command-line name with :py:func:`parse_predicate`.
"""

# ToricGB Predicate Imports
from toricgb.deletion_predicate import InvalidPredicate
from toricgb.predicates.edge_predicates import EdgeFullPredicate
from toricgb.predicates.edge_predicates import EdgeOneEachPredicate
from toricgb.predicates.facet_predicates import FacetMinPredicate
from toricgb.predicates.point_predicates import MustDeletePredicate
from toricgb.predicates.point_predicates import NonePredicate


PREDICATES = {
    predicate.name: predicate for predicate in (
        NonePredicate, EdgeOneEachPredicate, FacetMinPredicate,
        MustDeletePredicate, EdgeFullPredicate)
}


def parse_predicate(text, alpha, d):
    # type: (str, int, int) -> DeletionPredicate
    """ Parse Predicate: Builds a predicate from ``NAME`` or ``NAME=ARGS``.

    Raises:
        InvalidPredicate: Unknown name or malformed arguments.
    """
    name, _, args = text.strip().partition('=')
    if name not in PREDICATES:
        raise InvalidPredicate(text, 'Unknown predicate %r (expected one of: %s).' % (
            name, ', '.join(sorted(PREDICATES))))
    return PREDICATES[name].from_args(args or None, alpha, d)
