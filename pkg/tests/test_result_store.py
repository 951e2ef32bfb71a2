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

""" ToricGB toricgb.result_store Tests

This file includes unit tests for the toricgb.result_store module, which
saves sweep records to and loads them from JSON Lines files.
"""

# Standard project pylint disables for unit tests using pytest.
# pylint: disable=no-self-use, protected-access, multiple-statements, invalid-name

# Standard Library Imports
import json
from io import StringIO

# Third-Party Library Imports
import pytest

# ToricGB Library Imports
from toricgb.result_store import ResultRecord
from toricgb.result_store import ResultStore
from toricgb.result_store import ResultStoreCorrupt


MANIFEST = {'spec': {'alpha': 3, 'd': 3, 'k': 1}, 'version': 'v0.3.0',
            'start_time': '2021-01-01T00:00:00Z'}


def _record(canonical, r, passed=True, timing=None):
    return ResultRecord(canonical, [(1, 1, 1)], [(0, 1, 2)], 1, {'r': r},
                        {'r <= 2': passed}, None, timing)


def test_add_and_get():
    store = ResultStore()
    assert not store.is_save_required()
    store.add_record(_record([(2, 1, 0)], 2))
    store.add_record(_record([(1, 2, 0)], 2))
    assert len(store) == 2
    assert store.is_save_required()
    assert store.has_record([[2, 1, 0]])
    assert not store.has_record([(0, 1, 2)])
    # Replacing a record keeps one entry per key.
    store.add_record(_record([(2, 1, 0)], 3, passed=False))
    assert len(store) == 2
    assert store.get_record([(2, 1, 0)]).report == {'r': 3}
    assert [record.key for record in store.records()] == [((1, 2, 0),), ((2, 1, 0),)]


def test_save_load():
    store = ResultStore()
    store.add_record(_record([(2, 1, 0)], 2, timing=0.5))
    store.add_record(_record([(1, 2, 0)], 3, passed=False))
    out = StringIO()
    store.save_to_jsonl(out, MANIFEST)
    assert not store.is_save_required()
    lines = out.getvalue().splitlines()
    assert len(lines) == 3
    header = json.loads(lines[0])
    assert ResultStore.valid_header(header)
    assert 'timing' not in json.loads(lines[1])

    loaded = ResultStore()
    assert loaded.load_from_jsonl(StringIO(out.getvalue())) == 2
    assert loaded.manifest['spec'] == MANIFEST['spec']
    assert not loaded.is_save_required()
    assert [r.to_dict() for r in loaded.records()] == [r.to_dict() for r in store.records()]
    assert not loaded.get_record([(1, 2, 0)]).passed()


def test_save_deterministic():
    """ Records are written in canonical order, whatever order they were added in. """
    first, second = ResultStore(), ResultStore()
    records = [_record([(2, 1, 0)], 2), _record([(1, 2, 0)], 2), _record([(1, 1, 1)], 2)]
    for record in records:
        first.add_record(record)
    for record in reversed(records):
        second.add_record(record)
    out_first, out_second = StringIO(), StringIO()
    first.save_to_jsonl(out_first, MANIFEST)
    second.save_to_jsonl(out_second, MANIFEST)
    assert out_first.getvalue() == out_second.getvalue()


def test_save_timing():
    store = ResultStore()
    store.add_record(_record([(2, 1, 0)], 2, timing=0.5))
    out = StringIO()
    store.save_to_jsonl(out, MANIFEST, include_timing=True)
    assert json.loads(out.getvalue().splitlines()[1])['timing'] == 0.5


def test_load_blank():
    assert ResultStore().load_from_jsonl(StringIO('\n\n')) is None


@pytest.mark.parametrize('contents', [
    'not json\n',
    '{"kind": "something-else", "format": 1}\n',
    '{"kind": "toricgb-sweep-manifest", "format": 99}\n',
    '{"kind": "toricgb-sweep-manifest", "format": 1}\n{"canonical": [[2, 1, 0]]}\n',
    '{"kind": "toricgb-sweep-manifest", "format": 1}\n{truncated\n',
])
def test_load_corrupt(contents):
    with pytest.raises(ResultStoreCorrupt):
        ResultStore().load_from_jsonl(StringIO(contents))
