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

""" ``toricgb.gb.hilbert`` Module

Hilbert series of monomial quotients K[x_1..x_n]/I, used as an oracle for the
degree of the semigroup ring that is independent of the lattice computation.

The series is K(t) / (1-t)^n, and the numerator K is computed with the pivot
recursion K(I) = K(I + (x)) + t * K(I : x), where x is a variable occurring in
the most generators.  Ideals whose generators are pairwise coprime are handled
directly as a product of (1 - t^deg m).
"""

# Standard Library Imports
import logging

# Third-Party Library Imports
from sympy import Poly
from sympy import Symbol
from sympy import ZZ
from sympy.polys.monomials import monomial_div
from sympy.polys.monomials import monomial_divides

logger = logging.getLogger('toricgb')

_T = Symbol('t')


def _poly(coefficients):
    # type: (Dict[int, int]) -> Poly
    return Poly.from_dict({(power,): value for power, value in coefficients.items()},
                          _T, domain=ZZ)


def minimalize_monomials(monomials):
    # type: (Iterable[Tuple[int, ...]]) -> FrozenSet[Tuple[int, ...]]
    """ Minimal generators of the ideal spanned by monomials. """
    result = []
    for monomial in sorted(set(monomials), key=sum):
        if all(not monomial_divides(kept, monomial) for kept in result):
            result.append(monomial)
    return frozenset(result)


def _pairwise_coprime(gens):
    seen = set()
    for monomial in gens:
        support = set(i for i, e in enumerate(monomial) if e)
        if support & seen:
            return False
        seen |= support
    return True


def _numerator(gens, nvars, memo):
    # type: (FrozenSet[Tuple[int, ...]], int, Dict) -> Poly
    if gens in memo:
        return memo[gens]
    if not gens:
        result = _poly({0: 1})
    elif (0,) * nvars in gens:
        result = _poly({})
    elif _pairwise_coprime(gens):
        result = _poly({0: 1})
        for monomial in gens:
            result = result * _poly({0: 1, sum(monomial): -1})
    else:
        counts = [0] * nvars
        for monomial in gens:
            for i, exponent in enumerate(monomial):
                if exponent:
                    counts[i] += 1
        pivot = counts.index(max(counts))
        variable = tuple(1 if i == pivot else 0 for i in range(nvars))
        added = minimalize_monomials(
            [m for m in gens if not m[pivot]] + [variable])
        quotient = minimalize_monomials(
            [monomial_div(m, variable) if m[pivot] else m for m in gens])
        result = (_numerator(added, nvars, memo)
                  + _poly({1: 1}) * _numerator(quotient, nvars, memo))
    memo[gens] = result
    return result


def hilbert_numerator(mingens, nvars):
    # type: (Iterable[Tuple[int, ...]], int) -> Poly
    """ Hilbert Numerator: The polynomial K(t) with Hilbert series of
    K[x_1..x_nvars]/(mingens) equal to K(t) / (1-t)^nvars.

    Arguments:
        mingens: Monomial generators (need not be minimal) as exponent tuples.
        nvars: Number of variables.

    Returns:
        sympy Poly in t over ZZ.
    """
    gens = minimalize_monomials(tuple(m) for m in mingens)
    if any(len(m) != nvars for m in gens):
        raise ValueError('Monomial length does not match nvars = %d.' % nvars)
    return _numerator(gens, nvars, {})


def hilbert_data(mingens, nvars):
    # type: (Iterable[Tuple[int, ...]], int) -> Tuple[int, int]
    """ Hilbert Data: Krull dimension and multiplicity of K[x_1..x_nvars]/(mingens).

    Factors of (1 - t) are divided out of the numerator while it vanishes at
    t = 1; each one lowers the dimension by one, and the multiplicity is the
    remaining numerator at t = 1. The zero ring (unit ideal) gives (0, 0).
    """
    numerator = hilbert_numerator(mingens, nvars)
    if numerator.is_zero:
        return 0, 0
    one_minus_t = _poly({0: 1, 1: -1})
    dimension = nvars
    while numerator.eval(1) == 0:
        numerator = numerator.exquo(one_minus_t)
        dimension -= 1
    logger.debug('Hilbert numerator %s: dimension %d.', numerator.as_expr(), dimension)
    return dimension, int(numerator.eval(1))
