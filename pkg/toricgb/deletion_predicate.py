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

""" ``toricgb.deletion_predicate`` Module

This module implements the base DeletionPredicate class, from which all sweep
predicates in the toricgb.predicates module are derived.

A sweep enumerates configurations M_{alpha,d} minus a set of k deleted
non-corner points; a DeletionPredicate decides which deleted sets are kept.
Predicates can also declare points which must (or must not) be deleted, which
the sweep uses to shrink the enumeration before testing anything.
"""

# pylint: disable=unused-argument, no-self-use


class InvalidPredicate(Exception):
    """ Raised when a predicate name is unknown or its arguments are malformed. """
    def __init__(self, text, message="Invalid predicate."):
        # type: (str, str)
        super(InvalidPredicate, self).__init__('%s (%s)' % (message, text))
        self.text = text
        self.message = message

    def __reduce__(self):
        return (InvalidPredicate, (self.text, self.message))


class DeletionPredicate(object):
    """ Base class to inherit from when implementing a sweep predicate.

    Subclasses set ``name`` (the CLI spelling) and override :py:meth:`accepts`.
    ``alpha`` and ``d`` are fixed when the predicate is constructed.
    """

    name = None
    """ Name used on the command line, e.g. ``facet-min``. """

    def __init__(self, alpha, d):
        # type: (int, int)
        self.alpha = alpha
        self.d = d

    @classmethod
    def from_args(cls, args, alpha, d):
        # type: (str, int, int) -> DeletionPredicate
        """ From Args: Builds the predicate from its CLI argument string (the text
        after ``=``, or None when absent).

        Raises:
            InvalidPredicate: The arguments are malformed.
        """
        if args:
            raise InvalidPredicate(args, 'Predicate %s takes no arguments.' % cls.name)
        return cls(alpha, d)

    def required_points(self):
        # type: () -> FrozenSet[Tuple[int, ...]]
        """ Required Points: Points every accepted deleted set contains. """
        return frozenset()

    def forbidden_points(self):
        # type: () -> FrozenSet[Tuple[int, ...]]
        """ Forbidden Points: Points no accepted deleted set contains. """
        return frozenset()

    def accepts(self, deleted):
        # type: (Tuple[Tuple[int, ...], ...]) -> bool
        """ Accepts: True if the deleted point set satisfies the predicate.

        Prototype method, accepts everything.
        """
        return True

    def describe(self):
        # type: () -> str
        """ Describe: The predicate as it would be written on the command line. """
        return self.name

    def __repr__(self):
        return '%s(%s)' % (type(self).__name__, self.describe())
