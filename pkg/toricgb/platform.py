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

""" ``toricgb.platform`` Module

This file contains the environment-facing helpers shared by the rest of the
package: the optional tqdm import, checked fixed-width integer arithmetic
(int64 for lattice quantities, uint16 for monomial exponents), reading the
TORICGB_* environment variables, canonical JSON encoding for the result
files, output path creation, and the logger setup used by the CLI.
"""

# Standard Library Imports
from __future__ import print_function

import json
import logging
import os
import os.path
import sys

# Third-Party Library Imports
import numpy


##
## Optional Progress Bars
##

# None when tqdm is not installed; sweeps and presets then run without a bar.
try:
    from tqdm import tqdm
except ImportError:
    tqdm = None


##
## Checked Integer Arithmetic
##

INT64_MAX = int(numpy.iinfo(numpy.int64).max)
UINT16_MAX = int(numpy.iinfo(numpy.uint16).max)


class IntegerOverflow(Exception):
    """ Raised when a lattice quantity no longer fits in a signed 64-bit integer. """
    def __init__(self, value, what="value",
                 message="Integer result exceeds the 64-bit range."):
        # type: (int, str, str)
        super(IntegerOverflow, self).__init__('%s (%s = %d)' % (message, what, value))
        self.value = value
        self.what = what
        self.message = message

    def __reduce__(self):
        return (IntegerOverflow, (self.value, self.what, self.message))


class ExponentOverflow(Exception):
    """ Raised when a monomial exponent no longer fits in 16 bits. """
    def __init__(self, exponents, message="Monomial exponent exceeds the 16-bit range."):
        # type: (Tuple[int, ...], str)
        super(ExponentOverflow, self).__init__(message)
        self.exponents = exponents
        self.message = message

    def __reduce__(self):
        return (ExponentOverflow, (self.exponents, self.message))


def check_int64(value, what="value"):
    # type: (int, str) -> int
    """ Check Int64: Returns value as a Python int, raising IntegerOverflow if it
    lies outside the signed 64-bit range instead of silently wrapping. """
    value = int(value)
    if value > INT64_MAX or value < -INT64_MAX - 1:
        raise IntegerOverflow(value, what)
    return value


def check_exponents(exponents):
    # type: (Tuple[int, ...]) -> Tuple[int, ...]
    """ Check Exponents: Returns exponents unchanged, raising ExponentOverflow
    if any entry exceeds the uint16 range. """
    if exponents and max(exponents) > UINT16_MAX:
        raise ExponentOverflow(exponents)
    return exponents


##
## Environment Configuration
##

DEFAULT_THREADS = 1
DEFAULT_ENUMERATION_CAP = 10**6


def _get_positive_int_env(name, default):
    # type: (str, int) -> int
    value = os.environ.get(name)
    if value is None or not value.strip():
        return default
    try:
        parsed = int(value)
    except ValueError:
        raise ValueError('%s must be a positive integer (got %r).' % (name, value))
    if parsed < 1:
        raise ValueError('%s must be a positive integer (got %r).' % (name, value))
    return parsed


def get_thread_count():
    # type: () -> int
    """ Get Thread Count: Number of sweep worker processes, from TORICGB_THREADS
    (default 1, meaning all work runs in the calling process). """
    return _get_positive_int_env('TORICGB_THREADS', DEFAULT_THREADS)


def get_enumeration_cap():
    # type: () -> int
    """ Get Enumeration Cap: Maximum number of raw configurations a sweep may
    enumerate, from TORICGB_CAP (default 10^6). """
    return _get_positive_int_env('TORICGB_CAP', DEFAULT_ENUMERATION_CAP)


##
## JSON Encoding (for ResultStore and the CLI --emit json output)
##

def to_canonical_json(obj):
    # type: (Any) -> str
    """ Returns obj encoded as a single-line JSON string with sorted keys, so that
    equal objects always produce byte-identical output. """
    return json.dumps(obj, sort_keys=True, separators=(',', ':'))


##
## Output Paths
##

def get_and_create_path(file_path, output_directory=None):
    # type: (Optional[str], Optional[str]) -> Optional[str]
    """ Get & Create Path: Resolves file_path against output_directory (relative
    paths only) and makes sure the parent directory exists. None passes through. """
    if file_path is None:
        return None
    if output_directory is not None and not os.path.isabs(file_path):
        file_path = os.path.join(output_directory, file_path)
    parent = os.path.dirname(os.path.abspath(file_path))
    if not os.path.isdir(parent):
        os.makedirs(parent)
    return file_path


##
## Logging
##

LOG_FORMAT = '[ToricGB] %(message)s'
DEBUG_LOG_FORMAT = '%(levelname)s: %(module)s.%(funcName)s(): %(message)s'


def init_logger(log_level=logging.INFO, show_stdout=False, log_file=None):
    # type: (int, bool, Optional[str]) -> logging.Logger
    """ Init Logger: (Re)configures the 'toricgb' logger and returns it.

    Handlers from a previous call are dropped. Messages go to stdout when
    show_stdout is set, and to log_file when one is given; debug level
    switches to a format that names the emitting function.
    """
    formatter = logging.Formatter(
        fmt=DEBUG_LOG_FORMAT if log_level == logging.DEBUG else LOG_FORMAT)
    targets = []
    if show_stdout:
        targets.append(logging.StreamHandler(stream=sys.stdout))
    if log_file:
        targets.append(logging.FileHandler(get_and_create_path(log_file)))
    toricgb_logger = logging.getLogger('toricgb')
    toricgb_logger.handlers = []
    toricgb_logger.setLevel(log_level)
    for target in targets:
        target.setLevel(log_level)
        target.setFormatter(formatter)
        toricgb_logger.addHandler(target)
    return toricgb_logger


def set_log_stream(stream):
    # type: (IO[str]) -> None
    """ Set Log Stream: Points the console handler of the 'toricgb' logger (if any)
    at stream. File handlers are left alone. """
    for handler in logging.getLogger('toricgb').handlers:
        if not isinstance(handler, logging.FileHandler):
            handler.setStream(stream)


# Silent until the CLI (or a library user) configures output.
logger = init_logger()
