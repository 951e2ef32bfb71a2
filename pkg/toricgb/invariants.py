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

""" ``toricgb.invariants`` Module

Every bound the package checks is a proved statement, so a failed check can
only mean a bug in one of the engines. Such failures are raised as an
:py:class:`InvariantViolation` carrying a diagnostics dictionary, which the CLI
dumps before exiting with status 3.
"""

# Standard Library Imports
import logging

logger = logging.getLogger('toricgb')


class InvariantViolation(Exception):
    """ Raised when a proved bound or an internal consistency check fails. """
    def __init__(self, name, message="Invariant violated.", diagnostics=None):
        # type: (str, str, Optional[Dict[str, Any]])
        super(InvariantViolation, self).__init__('%s: %s' % (name, message))
        self.name = name
        self.diagnostics = dict(diagnostics) if diagnostics else {}
        self.message = message

    def __reduce__(self):
        # Subclasses with another signature override this.
        return (InvariantViolation, (self.name, self.message, self.diagnostics))


def require(condition, name, message, **diagnostics):
    # type: (bool, str, str, **Any) -> None
    """ Require: Raises InvariantViolation(name, message, diagnostics) unless
    condition holds. The diagnostics are also logged at ERROR level. """
    if condition:
        return
    logger.error('Invariant %s violated: %s', name, message)
    for key in sorted(diagnostics):
        logger.error('  %s = %r', key, diagnostics[key])
    raise InvariantViolation(name, message, diagnostics)
