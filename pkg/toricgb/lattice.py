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
# This software uses Numpy, SymPy, click, tqdm, pytest, and hypothesis.
# See the included LICENSE file for more information.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT.  IN NO EVENT SHALL THE
# AUTHORS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY, WHETHER IN AN
# ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM, OUT OF OR IN CONNECTION
# WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE SOFTWARE.
#

""" ``toricgb.lattice`` Module

This module contains the :py:class:`Configuration` class, the validated generator
set A = {e_1, ..., e_d, a_1, ..., a_c} of a simplicial affine semigroup S, where
every generator lies on the dilated simplex M_{alpha,d} (non-negative integer
vectors of length d with coordinate sum alpha) and e_j = alpha * u_j.

Lattice vectors are plain tuples of non-negative ints.  A Configuration always
stores its a-points in descending lexicographic order, so that a_1 (and hence
the variable x_1) is the lexicographically largest point; with this convention
the configuration {(4,0),(3,1),(1,3),(0,4)} has a_1 = (3,1) and a_2 = (1,3).

The lattice invariants (index of ZS in Z^d, multiplicity deg K[S] = alpha^d
divided by that index, codimension c and the Eisenbud-Goto bound) are computed
here, with the lattice index taken from the Smith normal form of the generator
matrix via SymPy.  Configurations can be saved to and loaded from JSON files of
the form ``{"alpha": 4, "d": 2, "generators": [[3, 1], [1, 3]]}``, where the
e_j may be included or omitted.
"""

# Standard Library Imports
from __future__ import print_function

import json
import logging
import numbers
from functools import reduce
from math import gcd

# Third-Party Library Imports
import numpy
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors

# ToricGB Library Imports
from toricgb.invariants import require
from toricgb.platform import check_int64

logger = logging.getLogger('toricgb')


##
## Configuration Exceptions
##

class InvalidConfiguration(Exception):
    """ Raised when a generator set violates the Configuration invariants (wrong
    coordinate sum, wrong length, negative entries, or no non-corner points). """
    def __init__(self, message="Invalid configuration."):
        # type: (str)
        super(InvalidConfiguration, self).__init__(message)


class ConfigurationFileCorrupt(Exception):
    """ Raised when a configuration could not be loaded from a JSON file. """
    def __init__(self, message="Could not load configuration from passed JSON file."):
        # type: (str)
        super(ConfigurationFileCorrupt, self).__init__(message)


##
## Simplex Points
##

def enumerate_simplex_points(alpha, d):
    # type: (int, int) -> List[Tuple[int, ...]]
    """ Enumerate Simplex Points: Returns every point of M_{alpha,d}, i.e. every
    non-negative integer vector of length d summing to alpha, in descending
    lexicographic order. There are C(alpha+d-1, d-1) of them.
    """
    if d == 1:
        return [(alpha,)]
    points = []
    for first in range(alpha, -1, -1):
        for rest in enumerate_simplex_points(alpha - first, d - 1):
            points.append((first,) + rest)
    return points


def corner_points(alpha, d):
    # type: (int, int) -> List[Tuple[int, ...]]
    """ Returns e_1, ..., e_d, where e_j = alpha * u_j. """
    return [tuple(alpha if i == j else 0 for i in range(d)) for j in range(d)]


def is_corner_point(point, alpha):
    # type: (Tuple[int, ...], int) -> bool
    """ True if point is one of the e_j (all of its mass sits in one coordinate). """
    return alpha in point


def _is_integer(value):
    # type: (Any) -> bool
    return isinstance(value, numbers.Integral) and not isinstance(value, bool)


##
## Configuration Class Implementation
##

class Configuration(object):
    """ A validated simplicial configuration A = {e_1..e_d, a_1..a_c}.

    Instances should be created via :py:func:`validate_configuration` (or one of
    the helpers built on it) and are immutable once constructed.
    """

    def __init__(self, alpha, d, a_points, warnings=None):
        # type: (int, int, Iterable[Tuple[int, ...]], Optional[Iterable[str]])
        self._alpha = int(alpha)
        self._d = int(d)
        self._a_points = tuple(sorted(set(tuple(int(x) for x in p) for p in a_points),
                                      reverse=True))
        self._e_points = tuple(corner_points(self._alpha, self._d))
        self._warnings = tuple(warnings) if warnings else ()

    @property
    def alpha(self):
        # type: () -> int
        """ Common coordinate sum of every generator. """
        return self._alpha

    @property
    def d(self):
        # type: () -> int
        """ Ambient dimension (also the Krull dimension of K[S]). """
        return self._d

    @property
    def c(self):
        # type: () -> int
        """ Number of non-corner generators (the codimension of K[S]). """
        return len(self._a_points)

    @property
    def a_points(self):
        # type: () -> Tuple[Tuple[int, ...], ...]
        return self._a_points

    @property
    def e_points(self):
        # type: () -> Tuple[Tuple[int, ...], ...]
        return self._e_points

    @property
    def warnings(self):
        # type: () -> Tuple[str, ...]
        """ Non-fatal validation warnings (e.g. c == 1, or gcd(a_ij) > 1). """
        return self._warnings

    def generators(self):
        # type: () -> Tuple[Tuple[int, ...], ...]
        """ Generators: a_1..a_c followed by e_1..e_d, matching the variable
        order x_1..x_c, y_1..y_d of the toric ideal. """
        return self._a_points + self._e_points

    def key(self):
        # type: () -> Tuple[int, int, Tuple[Tuple[int, ...], ...]]
        """ Hashable canonical key (alpha, d, a_points). """
        return (self._alpha, self._d, self._a_points)

    def deleted_points(self):
        # type: () -> List[Tuple[int, ...]]
        """ Deleted Points: Non-corner points of M_{alpha,d} missing from A,
        in descending lexicographic order. """
        present = set(self._a_points)
        return [point for point in enumerate_simplex_points(self._alpha, self._d)
                if not is_corner_point(point, self._alpha) and point not in present]

    def to_dict(self):
        # type: () -> Dict[str, Any]
        """ JSON-compatible dictionary (generators include the e_j). """
        return {
            'alpha': self._alpha,
            'd': self._d,
            'generators': [list(p) for p in self._e_points + self._a_points],
        }

    @classmethod
    def from_dict(cls, data):
        # type: (Dict[str, Any]) -> Configuration
        """ From Dict: Builds a Configuration from the JSON schema.

        Raises:
            ConfigurationFileCorrupt: data does not follow the schema.
            InvalidConfiguration: the generators fail validation.
        """
        if not isinstance(data, dict):
            raise ConfigurationFileCorrupt('Configuration must be a JSON object.')
        missing = [key for key in ('alpha', 'd', 'generators') if key not in data]
        if missing:
            raise ConfigurationFileCorrupt(
                'Configuration is missing required key(s): %s' % ', '.join(missing))
        generators = data['generators']
        if not isinstance(generators, list) or not all(
                isinstance(point, list) for point in generators):
            raise ConfigurationFileCorrupt('"generators" must be a list of integer lists.')
        return validate_configuration(data['alpha'], data['d'], generators)

    def __eq__(self, other):
        return isinstance(other, Configuration) and self.key() == other.key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return 'Configuration(alpha=%d, d=%d, a_points=%r)' % (
            self._alpha, self._d, list(self._a_points))


##
## Configuration Construction
##

def validate_configuration(alpha, d, points):
    # type: (int, int, Iterable[Sequence[int]]) -> Configuration
    """ Validate Configuration: Checks a raw generator list and builds a Configuration.

    Any e_j present in points are stripped (they are always adjoined implicitly)
    and duplicates are removed.

    Arguments:
        alpha (int): Coordinate sum of every generator (>= 2).
        d (int): Length of every generator (>= 1).
        points: Generators, with or without the e_j.

    Returns:
        Configuration with its a-points in canonical (descending lexicographic) order.
        Its warnings record a codimension of one and a gcd(a_ij) > 1.

    Raises:
        InvalidConfiguration: A point has the wrong length, a negative or
            non-integer entry, or a coordinate sum other than alpha; or no
            non-corner point remains.
    """
    if not _is_integer(alpha) or alpha < 2:
        raise InvalidConfiguration('alpha must be an integer >= 2 (got %r).' % (alpha,))
    if not _is_integer(d) or d < 1:
        raise InvalidConfiguration('d must be an integer >= 1 (got %r).' % (d,))
    a_points = set()
    for point in points:
        point = tuple(point)
        if len(point) != d:
            raise InvalidConfiguration(
                'Point %r has length %d, expected d = %d.' % (point, len(point), d))
        if not all(_is_integer(x) for x in point):
            raise InvalidConfiguration('Point %r has non-integer entries.' % (point,))
        if any(x < 0 for x in point):
            raise InvalidConfiguration('Point %r has negative entries.' % (point,))
        if sum(point) != alpha:
            raise InvalidConfiguration(
                'Point %r has coordinate sum %d, expected alpha = %d.' % (
                    point, sum(point), alpha))
        point = tuple(int(x) for x in point)
        if not is_corner_point(point, alpha):
            a_points.add(point)
    if not a_points:
        raise InvalidConfiguration('Configuration needs at least one non-corner point.')
    warnings = []
    if len(a_points) == 1:
        warnings.append('codimension is 1; most bounds assume c >= 2')
    common = reduce(gcd, (x for point in a_points for x in point), 0)
    if common > 1:
        warnings.append('gcd of all a_ij is %d (not relatively prime)' % common)
    for warning in warnings:
        logger.warning('Configuration warning: %s', warning)
    return Configuration(alpha, d, a_points, warnings)


def full_configuration(alpha, d):
    # type: (int, int) -> Configuration
    """ Full Configuration: A = M_{alpha,d}. """
    return validate_configuration(alpha, d, enumerate_simplex_points(alpha, d))


def configuration_from_deleted(alpha, d, deleted):
    # type: (int, int, Iterable[Sequence[int]]) -> Configuration
    """ Configuration From Deleted: A = M_{alpha,d} minus the given non-corner points.

    Raises:
        InvalidConfiguration: A deleted point is a corner or not in M_{alpha,d}.
    """
    all_points = enumerate_simplex_points(alpha, d)
    deleted = set(tuple(p) for p in deleted)
    unknown = deleted.difference(all_points)
    if unknown:
        raise InvalidConfiguration('Deleted point(s) not in M_{%d,%d}: %s' % (
            alpha, d, sorted(unknown)))
    if any(is_corner_point(p, alpha) for p in deleted):
        raise InvalidConfiguration('The corner points e_j cannot be deleted.')
    return validate_configuration(alpha, d, [p for p in all_points if p not in deleted])


##
## Lattice Invariants
##

def generator_matrix(cfg):
    # type: (Configuration) -> numpy.ndarray
    """ Generator Matrix: The (c+d) x d int64 matrix whose rows are the generators. """
    return numpy.array(cfg.generators(), dtype=numpy.int64)


def lattice_index(cfg):
    # type: (Configuration) -> int
    """ Lattice Index: Returns [Z^d : ZS], the product of the invariant factors
    (Smith normal form diagonal) of the generator matrix. The e_j guarantee full
    rank. Intermediate values are arbitrary precision; the result is checked to
    fit in 64 bits.

    Raises:
        IntegerOverflow: The index exceeds the int64 range.
    """
    factors = invariant_factors(Matrix(generator_matrix(cfg).tolist()), domain=ZZ)
    index = 1
    for factor in factors:
        if factor != 0:
            index *= abs(int(factor))
    return check_int64(index, 'lattice index')


def degree_of_ring(cfg):
    # type: (Configuration) -> int
    """ Degree Of Ring: The multiplicity deg K[S] = alpha^d / [Z^d : ZS]. """
    volume = check_int64(cfg.alpha ** cfg.d, 'alpha^d')
    index = lattice_index(cfg)
    require(volume % index == 0, 'lattice-index',
            'alpha^d is not divisible by the lattice index',
            alpha=cfg.alpha, d=cfg.d, index=index)
    return volume // index


def codimension(cfg):
    # type: (Configuration) -> int
    """ Codimension: codim K[S] = c. """
    return cfg.c


def eisenbud_goto_bound(cfg):
    # type: (Configuration) -> int
    """ Eisenbud-Goto Bound: deg K[S] - codim K[S] + 1. """
    return degree_of_ring(cfg) - codimension(cfg) + 1


def relatively_prime(cfg):
    # type: (Configuration) -> bool
    """ True if the gcd of all a_ij is 1 (the usual normalization). """
    return reduce(gcd, (x for point in cfg.a_points for x in point), 0) == 1


def lattice_residue_group(cfg):
    # type: (Configuration) -> FrozenSet[Tuple[int, ...]]
    """ Lattice Residue Group: The image of ZS in (Z/alpha)^d, as box vectors with
    entries in [0, alpha-1].

    Since alpha*Z^d is contained in ZS (the e_j are generators), a vector b lies
    in ZS exactly when its residue modulo alpha lies in this group, and the group
    has alpha^d / [Z^d : ZS] elements.
    """
    alpha = cfg.alpha
    residues = [tuple(x % alpha for x in point) for point in cfg.a_points]
    zero = (0,) * cfg.d
    group = {zero}
    frontier = [zero]
    while frontier:
        current = frontier.pop()
        for residue in residues:
            candidate = tuple((x + y) % alpha for x, y in zip(current, residue))
            if candidate not in group:
                group.add(candidate)
                frontier.append(candidate)
    return frozenset(group)


def in_lattice(cfg, b, residue_group=None):
    # type: (Configuration, Sequence[int], Optional[FrozenSet[Tuple[int, ...]]]) -> bool
    """ In Lattice: True if the integer vector b lies in ZS. """
    if residue_group is None:
        residue_group = lattice_residue_group(cfg)
    return tuple(x % cfg.alpha for x in b) in residue_group


##
## Configuration Files
##

def load_configuration(config_file):
    # type: (File [r]) -> Configuration
    """ Load Configuration: Reads a Configuration from a JSON file handle.

    Raises:
        ConfigurationFileCorrupt: The file is not valid JSON or not a configuration.
        InvalidConfiguration: The generators fail validation.
    """
    try:
        data = json.load(config_file)
    except ValueError as ex:
        raise ConfigurationFileCorrupt('Could not parse configuration JSON: %s' % ex)
    return Configuration.from_dict(data)


def save_configuration(cfg, config_file):
    # type: (Configuration, File [w]) -> None
    """ Save Configuration: Writes cfg to a JSON file handle. """
    json.dump(cfg.to_dict(), config_file, indent=2)
    config_file.write('\n')
