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

""" ``toricgb.semigroup`` Module

This module contains the :py:class:`SemigroupEngine` class, which provides the
degree-graded arithmetic of the semigroup S generated by a
:py:class:`Configuration <toricgb.lattice.Configuration>`: the graded pieces nA
(all sums of n generators), membership in S, the reduction number r(S), the
faces of the simplex and the full-face bound on r(S), and normality.

Graded pieces are memoized per engine, since the reduction number, membership
and normality all walk through consecutive pieces.  An engine belongs to one
configuration and should not be shared between worker processes.

The module level functions (:py:func:`graded_piece`, :py:func:`reduction_number`,
etc.) are conveniences which construct a fresh engine for each call.
"""

# Standard Library Imports
from __future__ import print_function

import itertools
import logging

# ToricGB Library Imports
from toricgb.invariants import InvariantViolation
from toricgb.invariants import require
from toricgb.lattice import degree_of_ring
from toricgb.lattice import enumerate_simplex_points
from toricgb.lattice import lattice_index
from toricgb.lattice import lattice_residue_group

logger = logging.getLogger('toricgb')


##
## SemigroupEngine Exceptions
##

class ReductionNumberBoundExceeded(InvariantViolation):
    """ Raised when no r <= deg K[S] - codim K[S] + 1 satisfies (r+1)A = {e}+rA.
    The known bound is r(S) <= deg K[S] - codim K[S]. """
    def __init__(self, cap, diagnostics=None):
        # type: (int, Optional[Dict[str, Any]])
        super(ReductionNumberBoundExceeded, self).__init__(
            'reduction-number-cap',
            'reduction number exceeds deg - codim + 1 = %d' % cap, diagnostics)
        self.cap = cap

    def __reduce__(self):
        return (ReductionNumberBoundExceeded, (self.cap, self.diagnostics))


##
## Value Types
##

class GradedPiece(object):
    """ The set nA of all sums of n generators (with repetition). Every element
    has coordinate sum n * alpha. """

    def __init__(self, n, elements):
        # type: (int, Iterable[Tuple[int, ...]])
        self.n = n
        self.elements = frozenset(elements)

    def sorted_elements(self):
        # type: () -> List[Tuple[int, ...]]
        return sorted(self.elements)

    def __contains__(self, point):
        return tuple(point) in self.elements

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.sorted_elements())

    def __repr__(self):
        return 'GradedPiece(n=%d, size=%d)' % (self.n, len(self.elements))


class FaceRecord(object):
    """ A face P_I of the simplex, given by the coordinates I that vanish on it.

    Attributes:
        zero_set: The 0-based coordinate indices I.
        dimension: d - 1 - |I|.
        is_full: True if A contains every point of M_{alpha,d} on the face.
        members: A_I, the generators lying on the face.
    """

    def __init__(self, zero_set, dimension, is_full, members):
        # type: (Tuple[int, ...], int, bool, Tuple[Tuple[int, ...], ...])
        self.zero_set = tuple(zero_set)
        self.dimension = dimension
        self.is_full = is_full
        self.members = tuple(members)

    def __repr__(self):
        return 'FaceRecord(I=%s, dim=%d, full=%s, |A_I|=%d)' % (
            '{%s}' % ','.join(str(i + 1) for i in self.zero_set),
            self.dimension, self.is_full, len(self.members))


##
## SemigroupEngine Class Implementation
##

class SemigroupEngine(object):
    """ Graded semigroup arithmetic for one configuration, with a memo of the
    graded pieces 0A, 1A, 2A, ... computed so far. """

    def __init__(self, cfg):
        # type: (Configuration)
        self._cfg = cfg
        self._generators = cfg.generators()
        self._pieces = [frozenset([(0,) * cfg.d]), frozenset(self._generators)]
        self._degree = None

    @property
    def configuration(self):
        # type: () -> Configuration
        return self._cfg

    @property
    def degree(self):
        # type: () -> int
        """ deg K[S] (computed once per engine). """
        if self._degree is None:
            self._degree = degree_of_ring(self._cfg)
        return self._degree

    def _piece(self, n):
        # type: (int) -> FrozenSet[Tuple[int, ...]]
        while len(self._pieces) <= n:
            previous = self._pieces[-1]
            self._pieces.append(frozenset(
                tuple(x + y for x, y in zip(point, generator))
                for point in previous for generator in self._generators))
            logger.debug('Graded piece %d has %d elements.',
                         len(self._pieces) - 1, len(self._pieces[-1]))
        return self._pieces[n]

    def graded_piece(self, n):
        # type: (int) -> GradedPiece
        """ Graded Piece: Returns nA, computed incrementally as (n-1)A + A.

        Raises:
            ValueError: n is negative.
        """
        if n < 0:
            raise ValueError('Graded piece index must be non-negative (got %d).' % n)
        return GradedPiece(n, self._piece(n))

    def contains(self, b):
        # type: (Sequence[int]) -> bool
        """ Contains: True if b is in S, i.e. b lies in the graded piece of degree
        sum(b) / alpha. Vectors whose coordinate sum is not a multiple of alpha
        are never in S. """
        b = tuple(b)
        if len(b) != self._cfg.d or any(x < 0 for x in b):
            return False
        total = sum(b)
        if total % self._cfg.alpha != 0:
            return False
        return b in self._piece(total // self._cfg.alpha)

    def _reduces_at(self, r):
        # type: (int) -> bool
        """ True if (r+1)A is contained in {e_1..e_d} + rA. """
        alpha = self._cfg.alpha
        lower = self._piece(r)
        for point in self._piece(r + 1):
            found = False
            for j, value in enumerate(point):
                if value >= alpha and (
                        point[:j] + (value - alpha,) + point[j + 1:]) in lower:
                    found = True
                    break
            if not found:
                return False
        return True

    def reduction_number(self):
        # type: () -> int
        """ Reduction Number: The least r >= 1 with (r+1)A = {e_1..e_d} + rA.

        Only the inclusion (r+1)A in {e}+rA is tested; the reverse inclusion
        holds because every e_j is in A (checked once at DEBUG verbosity).

        Raises:
            ReductionNumberBoundExceeded: No r <= deg - codim + 1 works.
        """
        # An r of exactly deg - codim + 1 is returned and rejected by check_theorems.
        cap = self.degree - self._cfg.c + 1
        for r in range(1, cap + 1):
            if self._reduces_at(r):
                if logger.isEnabledFor(logging.DEBUG):
                    upper = self._piece(r + 1)
                    require(all(
                        tuple(x + y for x, y in zip(point, e)) in upper
                        for point in self._piece(r) for e in self._cfg.e_points),
                            'reduction-reverse-inclusion',
                            '{e} + rA is not contained in (r+1)A', r=r)
                logger.debug('Reduction number r(S) = %d.', r)
                return r
        raise ReductionNumberBoundExceeded(cap, {
            'configuration': repr(self._cfg), 'degree': self.degree, 'c': self._cfg.c})

    def check_reduction_stability(self, r, extra=2):
        # type: (int, int) -> None
        """ Check Reduction Stability: Asserts (s+1)A = {e}+sA for s = r..r+extra.

        Raises:
            InvariantViolation: The equality fails for some s.
        """
        for s in range(r, r + extra + 1):
            require(self._reduces_at(s), 'reduction-stability',
                    '(s+1)A = {e}+sA failed above the reduction number',
                    r=r, s=s, configuration=repr(self._cfg))

    def faces(self):
        # type: () -> List[FaceRecord]
        """ Faces: One FaceRecord per zero set I with |I| <= d-1 (I = () is the
        whole simplex, |I| = d-1 are the vertices), ordered by |I|. """
        cfg = self._cfg
        all_points = enumerate_simplex_points(cfg.alpha, cfg.d)
        generators = sorted(self._generators, reverse=True)
        records = []
        for size in range(cfg.d):
            for zero_set in itertools.combinations(range(cfg.d), size):
                members = tuple(p for p in generators if all(p[i] == 0 for i in zero_set))
                face_points = [p for p in all_points if all(p[i] == 0 for i in zero_set)]
                records.append(FaceRecord(
                    zero_set, cfg.d - 1 - size, len(members) == len(face_points), members))
        return records

    def full_face_bound(self):
        # type: () -> Optional[int]
        """ Full Face Bound: The minimum of alpha^(d-1-i) + i - 1 over all full
        faces of dimension i, or None if no face is full. """
        bounds = [self._cfg.alpha ** (self._cfg.d - 1 - face.dimension) + face.dimension - 1
                  for face in self.faces() if face.is_full]
        return min(bounds) if bounds else None

    def is_normal(self):
        # type: () -> bool
        """ Is Normal: True if S = ZS intersected with N^d.

        Any b in ZS with non-negative entries reduces to a vector in the box
        [0, alpha-1]^d by subtracting e_j's, and S is closed under adding them
        back, so it is enough to test the box representatives of ZS. These are
        exactly the residues modulo alpha of ZS, and each has degree <= d-1.
        """
        cfg = self._cfg
        residues = lattice_residue_group(cfg)
        require(len(residues) * lattice_index(cfg) == cfg.alpha ** cfg.d,
                'lattice-residue-group',
                'residue group order disagrees with the Smith normal form index',
                configuration=repr(cfg), residues=len(residues))
        return all(self.contains(b) for b in sorted(residues))

    def fiber(self, b):
        # type: (Sequence[int]) -> List[Tuple[int, ...]]
        """ Fiber: Every exponent vector (m_1..m_c, n_1..n_d) with
        sum m_i a_i + sum n_j e_j = b, in descending lexicographic order. """
        generators = self._generators
        results = []

        def _search(k, remaining, exponents):
            if k == len(generators):
                if not any(remaining):
                    results.append(tuple(exponents))
                return
            generator = generators[k]
            bound = min(remaining[i] // generator[i]
                        for i in range(len(generator)) if generator[i] > 0)
            for count in range(bound, -1, -1):
                exponents.append(count)
                _search(k + 1, tuple(x - count * y for x, y in zip(remaining, generator)),
                        exponents)
                exponents.pop()

        if not any(x < 0 for x in b):
            _search(0, tuple(b), [])
        return results

    def edge_point_counts(self):
        # type: () -> Dict[Tuple[int, int], int]
        """ Edge Point Counts: Number of generators on each edge (i, j) of the
        simplex (0-based, i < j), corners included. A full edge has alpha + 1. """
        counts = {}
        for i, j in itertools.combinations(range(self._cfg.d), 2):
            counts[(i, j)] = sum(1 for p in self._generators if p[i] + p[j] == self._cfg.alpha)
        return counts

    def known_bound_cases(self):
        # type: () -> List[str]
        """ Known Bound Cases: Names of the proved situations in which the revlex
        Groebner degree is known to be at most deg - codim + 1:

          dimension-two         d = 2.
          isolated-singularity  A holds every point with alpha-1 in one
                                coordinate and 1 in another.
          small-alpha           deg = alpha^(d-1) and alpha <= d-1.
          rich-edge             deg = alpha^(d-1) and some edge is full or holds
                                at least (3/4 + 1/(4d)) alpha + 2 points of A.
        """
        cfg = self._cfg
        alpha, d = cfg.alpha, cfg.d
        cases = []
        if d == 2:
            cases.append('dimension-two')
        if d >= 2:
            present = set(self._generators)
            isolated = True
            for i, j in itertools.permutations(range(d), 2):
                point = [0] * d
                point[i] = alpha - 1
                point[j] += 1
                if tuple(point) not in present:
                    isolated = False
                    break
            if isolated:
                cases.append('isolated-singularity')
        if d >= 2 and self.degree == alpha ** (d - 1):
            if alpha <= d - 1:
                cases.append('small-alpha')
            # 4d * count >= (3d + 1) * alpha + 8d avoids fractions.
            if any(count == alpha + 1 or 4 * d * count >= (3 * d + 1) * alpha + 8 * d
                   for count in self.edge_point_counts().values()):
                cases.append('rich-edge')
        return cases


##
## Convenience Functions
##

def graded_piece(cfg, n):
    # type: (Configuration, int) -> GradedPiece
    """ Returns nA for cfg. """
    return SemigroupEngine(cfg).graded_piece(n)


def contains(cfg, b):
    # type: (Configuration, Sequence[int]) -> bool
    """ True if b lies in the semigroup generated by cfg. """
    return SemigroupEngine(cfg).contains(b)


def reduction_number(cfg):
    # type: (Configuration) -> int
    """ Returns r(S) for cfg. """
    return SemigroupEngine(cfg).reduction_number()


def faces(cfg):
    # type: (Configuration) -> List[FaceRecord]
    return SemigroupEngine(cfg).faces()


def full_face_bound(cfg):
    # type: (Configuration) -> Optional[int]
    return SemigroupEngine(cfg).full_face_bound()


def is_normal(cfg):
    # type: (Configuration) -> bool
    """ True if the semigroup generated by cfg is normal. """
    return SemigroupEngine(cfg).is_normal()


def known_bound_cases(cfg):
    # type: (Configuration) -> List[str]
    return SemigroupEngine(cfg).known_bound_cases()
