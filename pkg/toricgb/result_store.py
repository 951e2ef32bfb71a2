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


""" ``toricgb.result_store`` Module

This module contains the :py:class:`ResultStore` class, an in-memory key-value
store of :py:class:`ResultRecord` objects keyed by canonical configuration,
which a :py:class:`SweepManager <toricgb.sweep.SweepManager>` fills in while
it evaluates a sweep.

The entire :py:class:`ResultStore` can be :py:meth:`saved to <ResultStore.save_to_jsonl>`
and :py:meth:`loaded from <ResultStore.load_from_jsonl>` a JSON Lines file.  The
first line is a manifest (the sweep parameters, the package version and the
start time); every further line is one record, written with sorted keys and in
canonical order, so two runs of the same sweep differ only in the manifest.
"""

# Standard Library Imports
from __future__ import print_function

import json
import logging

# ToricGB Library Imports
from toricgb.platform import to_canonical_json

logger = logging.getLogger('toricgb')

##
## ResultStore JSONL Manifest Keys
##

MANIFEST_KIND = 'toricgb-sweep-manifest'
RESULT_FORMAT = 1


##
## ResultStore Exceptions
##

class ResultStoreCorrupt(Exception):
    """ Raised when records could not be loaded from a provided JSONL file. """
    def __init__(self, message="Could not load sweep results from passed JSONL file."):
        # type: (str)
        super(ResultStoreCorrupt, self).__init__(message)


##
## ResultRecord
##

class ResultRecord(object):
    """ The outcome of evaluating one symmetry class (or one configuration, with
    symmetry reduction off) in a sweep.

    Attributes:
        canonical: Canonical a-point list (a list of tuples).
        deleted: The deleted points of the canonical configuration.
        incidence: Canonical multiset of the supports of the deleted points.
        class_size: Number of enumerated configurations in the class.
        report: BoundReport as a dict.
        checks: Check expression -> bool.
        candidate: Counterexample candidate as a dict, or None.
        timing: Evaluation time in seconds (only written when requested).
    """

    def __init__(self, canonical, deleted, incidence, class_size, report, checks,
                 candidate=None, timing=None):
        self.canonical = [tuple(p) for p in canonical]
        self.deleted = [tuple(p) for p in deleted]
        self.incidence = [tuple(s) for s in incidence]
        self.class_size = class_size
        self.report = report
        self.checks = dict(checks)
        self.candidate = candidate
        self.timing = timing

    @property
    def key(self):
        # type: () -> Tuple[Tuple[int, ...], ...]
        return tuple(self.canonical)

    def passed(self):
        # type: () -> bool
        return all(self.checks.values())

    def to_dict(self, include_timing=False):
        # type: (bool) -> Dict[str, Any]
        data = {
            'canonical': [list(p) for p in self.canonical],
            'deleted': [list(p) for p in self.deleted],
            'incidence': [list(s) for s in self.incidence],
            'class_size': self.class_size,
            'report': self.report,
            'checks': self.checks,
            'candidate': self.candidate,
        }
        if include_timing:
            data['timing'] = self.timing
        return data

    @classmethod
    def from_dict(cls, data):
        # type: (Dict[str, Any]) -> ResultRecord
        return cls(data['canonical'], data['deleted'], data['incidence'],
                   data['class_size'], data['report'], data['checks'],
                   data.get('candidate'), data.get('timing'))

    def __repr__(self):
        return 'ResultRecord(%r, checks=%r)' % (self.canonical, self.checks)


##
## ResultStore Class Implementation
##

class ResultStore(object):
    """ Provides a key-value store of sweep results, which can be saved to a
    JSONL file and loaded from disk for comparison with a later run. """

    def __init__(self):
        # type: ()
        self._records = dict()      # Dict[Tuple[Tuple[int, ...], ...], ResultRecord]
        self._records_updated = False
        self.manifest = None        # Manifest read by load_from_jsonl, if any.

    def add_record(self, record):
        # type: (ResultRecord) -> None
        """ Add Record: Stores record, replacing any record with the same key. """
        self._records[record.key] = record
        self._records_updated = True

    def get_record(self, key):
        # type: (Sequence[Sequence[int]]) -> Optional[ResultRecord]
        return self._records.get(tuple(tuple(p) for p in key))

    def has_record(self, key):
        # type: (Sequence[Sequence[int]]) -> bool
        return self.get_record(key) is not None

    def records(self):
        # type: () -> List[ResultRecord]
        """ All records in canonical order. """
        return [self._records[key] for key in sorted(self._records)]

    def __len__(self):
        return len(self._records)

    def is_save_required(self):
        # type: () -> bool
        """ Is Save Required: True if records were added since the last save or load. """
        return self._records_updated

    def save_to_jsonl(self, jsonl_file, manifest, include_timing=False):
        # type: (File [w], Dict[str, Any], bool) -> None
        """ Save To JSONL: Writes the manifest line, then all records in canonical order.

        Arguments:
            jsonl_file: A file handle opened in write mode (e.g. open('...', 'w')).
            manifest: Sweep parameters, version and start time for the header line.
            include_timing: Also write each record's timing (makes the output
                differ between runs).
        """
        header = dict(manifest)
        header['kind'] = MANIFEST_KIND
        header['format'] = RESULT_FORMAT
        jsonl_file.write(to_canonical_json(header) + '\n')
        records = self.records()
        logger.info('Writing %d records to JSONL...', len(records))
        for record in records:
            jsonl_file.write(to_canonical_json(record.to_dict(include_timing)) + '\n')
        self._records_updated = False

    @staticmethod
    def valid_header(obj):
        # type: (Any) -> bool
        """ Validates if the given decoded JSON object is a valid manifest line.

        Returns:
            True if a valid manifest, False otherwise.
        """
        return (isinstance(obj, dict) and obj.get('kind') == MANIFEST_KIND
                and obj.get('format') == RESULT_FORMAT)

    def load_from_jsonl(self, jsonl_file, reset_save_required=True):
        # type: (File [r], bool) -> Optional[int]
        """ Load From JSONL: Loads all records from a JSONL file into the store.

        Returns:
            Number of records read, or None if the input file was blank.

        Raises:
            ResultStoreCorrupt: The manifest is missing or invalid, or a record
                line cannot be decoded.
        """
        lines = [line for line in jsonl_file if line.strip()]
        if not lines:
            return None
        try:
            header = json.loads(lines[0])
        except ValueError:
            raise ResultStoreCorrupt('First line is not valid JSON.')
        if not self.valid_header(header):
            raise ResultStoreCorrupt('Missing or invalid sweep manifest header.')
        self.manifest = header
        num_records = 0
        for line_number, line in enumerate(lines[1:], start=2):
            try:
                record = ResultRecord.from_dict(json.loads(line))
            except (ValueError, KeyError, TypeError) as ex:
                raise ResultStoreCorrupt('Corrupted record on line %d: %s' % (line_number, ex))
            self.add_record(record)
            num_records += 1
        logger.info('Loaded %d records.', num_records)
        if reset_save_required:
            self._records_updated = False
        return num_records
