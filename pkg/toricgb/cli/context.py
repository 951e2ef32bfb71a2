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


""" ``toricgb.cli.context`` Module

This file contains the implementation of the ToricGB command-line interface
(CLI) context class CliContext, used for the main application state/context
and logic to run the ToricGB CLI.

Commands only record what to do; the work happens in
:py:meth:`CliContext.process_input`, which runs after the whole command line
has been parsed and sets :py:attr:`CliContext.exit_code`.
"""

# Standard Library Imports
from __future__ import print_function
import json
import logging
import os
import sys
import time

# Third-Party Library Imports
import click

# ToricGB Library Imports
import toricgb

from toricgb.deletion_predicate import InvalidPredicate
from toricgb.gb import GREVLEX
from toricgb.gb import VariableUniverse
from toricgb.invariants import InvariantViolation
from toricgb.lattice import ConfigurationFileCorrupt
from toricgb.lattice import InvalidConfiguration
from toricgb.lattice import load_configuration
from toricgb.pipeline import bound_report
from toricgb.pipeline import counterexample_candidate
from toricgb.pipeline import toric_groebner
from toricgb.platform import ExponentOverflow
from toricgb.platform import IntegerOverflow
from toricgb.platform import get_and_create_path
from toricgb.platform import set_log_stream
from toricgb.platform import to_canonical_json
from toricgb.presets import PRESETS
from toricgb.presets import run_preset
from toricgb.result_store import ResultStore
from toricgb.result_store import ResultStoreCorrupt
from toricgb.sweep import InvalidCheck
from toricgb.sweep import SweepManager
from toricgb.sweep import SweepSpec
from toricgb.sweep import SweepTooLarge


EXIT_SUCCESS = 0
EXIT_FINDING = 1
EXIT_INPUT_ERROR = 2
EXIT_INTERNAL_ERROR = 3

INPUT_ERRORS = (InvalidConfiguration, ConfigurationFileCorrupt, SweepTooLarge,
                InvalidPredicate, InvalidCheck, IntegerOverflow, ExponentOverflow,
                ResultStoreCorrupt)


def format_table(rows):
    # type: (List[Tuple[str, Any]]) -> str
    """ Format Table: Two aligned columns, the names padded to the widest one. """
    width = max([len(name) for name, _ in rows] or [0])
    return '\n'.join('%s  %s' % (name.ljust(width), '-' if value is None else value)
                     for name, value in rows)


class CliContext(object):
    """ Context of the command-line interface passed between the various sub-commands.

    Pools all options, processing the main program options as they come in,
    followed by the options of the sub-command, preparing the action to be
    executed in the process_input() method, which is called after the whole
    command line has been processed (successfully or not).
    """

    def __init__(self):
        # Properties for main toricgb command options (-o, -q, etc...) and CliContext logic.
        self.options_processed = False          # True when CLI option parsing is complete.
        self.command = None                     # run, sweep or reproduce
        self.output_directory = None            # -o/--output
        self.quiet_mode = False                 # -q/--quiet or -v/--verbosity none
        self.exit_code = EXIT_SUCCESS           # Set by process_input().

        # Properties for run command.
        self.configuration = None               # run -c/--config
        self.orders = ('grevlex',)              # run -O/--order
        self.ja_maxdeg = False                  # run --ja-maxdeg
        self.normality = True                   # run --normality/--no-normality
        self.truncate = False                   # run --truncate
        self.emit = 'table'                     # run --emit
        self.show_basis = False                 # run --show-basis

        # Properties for sweep command.
        self.sweep_spec = None                  # sweep -a, -d, -k, -p, -c, --no-symmetry
        self.sweep_output = None                # sweep -o/--out
        self.resume = False                     # sweep --resume
        self.threads = None                     # sweep --threads
        self.cap = None                         # sweep --cap
        self.timing = False                     # sweep --timing

        # Properties for reproduce command.
        self.presets = []                       # reproduce PRESET|all

        # Logger for CLI output.
        self.logger = logging.getLogger('toricgb')

    def process_input(self):
        # type: () -> None
        """ Process Input: Runs the parsed command and sets exit_code.

        Run after all command line options/sub-commands have been parsed.
        """
        self.logger.debug('Processing input...')
        if not self.options_processed:
            self.logger.debug('Skipping processing, CLI options were not parsed successfully.')
            return
        try:
            if self.command == 'run':
                self.exit_code = self._process_run()
            elif self.command == 'sweep':
                self.exit_code = self._process_sweep()
            elif self.command == 'reproduce':
                self.exit_code = self._process_reproduce()
            else:
                self.logger.error('No command specified (run, sweep or reproduce).')
                self.exit_code = EXIT_INPUT_ERROR
        except INPUT_ERRORS as ex:
            self.logger.error('%s', ex)
            self.exit_code = EXIT_INPUT_ERROR
        except InvariantViolation as ex:
            self.logger.error('Internal invariant violated (%s). Please report this as a bug.',
                              ex)
            self.logger.debug('Traceback:', exc_info=True)
            self.exit_code = EXIT_INTERNAL_ERROR
        except Exception as ex:     # pylint: disable=broad-except
            self.logger.error('Unexpected error: %s: %s', type(ex).__name__, ex)
            self.logger.debug('Traceback:', exc_info=True)
            self.exit_code = EXIT_INTERNAL_ERROR

    def _process_run(self):
        # type: () -> int
        cfg = self.configuration
        start_time = time.time()
        self.logger.info('Computing bound report for c = %d, d = %d, alpha = %d...',
                         cfg.c, cfg.d, cfg.alpha)
        report = bound_report(
            cfg, compute_lex='lex' in self.orders, compute_JA_maxdeg=self.ja_maxdeg,
            compute_normality=self.normality, compute_truncated=self.truncate)
        basis = toric_groebner(cfg, GREVLEX) if self.show_basis else None
        candidate = counterexample_candidate(report, basis)
        self.logger.info('Finished in %.2f seconds.', time.time() - start_time)

        if self.emit == 'json':
            data = report.to_dict()
            if basis is not None:
                data['basis'] = basis.to_dict(VariableUniverse.for_toric(cfg.c, cfg.d))
            if candidate is not None:
                data['candidate'] = candidate.to_dict()
            click.echo(to_canonical_json(data))
        else:
            rows = [(name, value) for name, value in sorted(report.to_dict().items())
                    if name != 'configuration']
            click.echo(format_table(rows))
            if basis is not None:
                universe = VariableUniverse.for_toric(cfg.c, cfg.d)
                click.echo('')
                for element in basis:
                    click.echo('  %s' % universe.format_binomial(element))
        return EXIT_FINDING if candidate is not None else EXIT_SUCCESS

    def _process_sweep(self):
        # type: () -> int
        start_time = time.time()
        path = get_and_create_path(self.sweep_output, self.output_directory)
        result_store = ResultStore()
        if self.resume:
            self._load_previous_results(result_store, path)
        manager = SweepManager(self.sweep_spec, result_store, threads=self.threads,
                               cap=self.cap)
        manager.run_sweep(show_progress=not self.quiet_mode)
        summary = manager.summary()
        self.logger.info(
            '%d deleted sets, %d accepted, %d classes, %d incidence situations.',
            summary['raw'], summary['accepted'], summary['classes'],
            summary['incidence_situations'])

        if not self.resume or result_store.is_save_required():
            self.logger.info('Writing sweep results to: %s', os.path.basename(path))
            with open(path, 'wt') as jsonl_file:
                result_store.save_to_jsonl(
                    jsonl_file, manager.manifest(start_time, toricgb.__version__),
                    include_timing=self.timing)

        for record in result_store.records():
            failed = sorted(text for text, outcome in record.checks.items() if not outcome)
            if failed:
                self.logger.error('Check(s) failed for %s: %s',
                                  record.canonical, ', '.join(failed))
        if summary['failed'] or summary['candidates']:
            self.logger.error('%d class(es) failed a check, %d counterexample candidate(s).',
                              summary['failed'], summary['candidates'])
            return EXIT_FINDING
        self.logger.info('All checks passed.')
        return EXIT_SUCCESS

    def _load_previous_results(self, result_store, path):
        # type: (ResultStore, str) -> None
        """ Loads the records of an earlier run of the same sweep from path, if it exists.

        Raises:
            ResultStoreCorrupt: The file is not a sweep result file, or was written
                by a sweep with other options.
        """
        if not os.path.exists(path):
            self.logger.info('No previous results in %s, starting a new sweep.',
                             os.path.basename(path))
            return
        with open(path, 'rt') as jsonl_file:
            num_records = result_store.load_from_jsonl(jsonl_file)
        if num_records is None:
            return
        previous = json.loads(to_canonical_json(result_store.manifest.get('spec')))
        current = json.loads(to_canonical_json(self.sweep_spec.to_dict()))
        if previous != current:
            raise ResultStoreCorrupt(
                '%s was written by a different sweep (%s).' % (path, previous))
        self.logger.info('Loaded %d stored class(es) from %s.',
                         num_records, os.path.basename(path))

    def _process_reproduce(self):
        # type: () -> int
        failed = []
        for name in self.presets:
            result = run_preset(name, show_progress=not self.quiet_mode)
            status = 'PASS' if result.passed else 'FAIL'
            click.echo('%-28s %s (%d expectations)' % (name, status, len(result.expectations)))
            for expectation in result.failures():
                click.echo('    %s' % expectation.diff())
            for text in result.notes:
                click.echo('    note: %s' % text)
            if not result.passed:
                failed.append(name)
        if failed:
            self.logger.error('Preset(s) with mismatches: %s', ', '.join(failed))
            return EXIT_FINDING
        return EXIT_SUCCESS

    def run_command(self, config, orders, ja_maxdeg, normality, truncate, emit, show_basis):
        # type: (str, Tuple[str, ...], bool, bool, bool, str, bool) -> None
        """ Run Command: Loads the configuration file and stores the run options.

        Raises:
            click.BadParameter
        """
        try:
            with open(config, 'rt') as config_file:
                self.configuration = load_configuration(config_file)
        except (IOError, OSError) as ex:
            self.options_processed = False
            raise click.BadParameter('\n  Could not open configuration: %s' % ex,
                                     param_hint='-c/--config')
        except (InvalidConfiguration, ConfigurationFileCorrupt) as ex:
            self.options_processed = False
            self.logger.error('Could not load configuration: %s', ex)
            raise click.BadParameter('\n  %s' % ex, param_hint='-c/--config')
        self.command = 'run'
        self.options_processed = True
        self.orders = tuple(orders) if orders else ('grevlex',)
        self.ja_maxdeg = ja_maxdeg
        self.normality = normality
        self.truncate = truncate
        self.emit = emit
        if emit == 'json':
            # stdout carries the report.
            set_log_stream(sys.stderr)
        self.show_basis = show_basis

    def sweep_command(self, alpha, dim, delete, predicates, checks, no_symmetry, out,
                      resume, threads, cap, timing):
        # type: (int, int, int, Tuple[str, ...], Tuple[str, ...], bool, str, bool, int, int, bool) -> None
        """ Sweep Command: Parses the sweep options into a SweepSpec.

        Raises:
            click.BadParameter
        """
        try:
            self.sweep_spec = SweepSpec(alpha, dim, delete, predicates=list(predicates),
                                        checks=list(checks), symmetry=not no_symmetry)
        except (InvalidConfiguration, InvalidPredicate, InvalidCheck) as ex:
            self.options_processed = False
            self.logger.error('Invalid sweep: %s', ex)
            raise click.BadParameter('\n  %s' % ex, param_hint='sweep')
        self.command = 'sweep'
        self.options_processed = True
        self.sweep_output = out
        self.resume = resume
        self.threads = threads
        self.cap = cap
        self.timing = timing

    def reproduce_command(self, preset_names):
        # type: (Tuple[str, ...]) -> None
        """ Reproduce Command: Validates the preset names ('all' selects every preset). """
        if not preset_names:
            self.options_processed = False
            raise click.BadParameter('\n  Give a preset name, or all (see reproduce --list).',
                                     param_hint='PRESET')
        names = []
        for name in preset_names:
            if name == 'all':
                names.extend(sorted(PRESETS))
            elif name in PRESETS:
                names.append(name)
            else:
                self.options_processed = False
                raise click.BadParameter('\n  Unknown preset %r. Valid presets: %s' % (
                    name, ', '.join(sorted(PRESETS))), param_hint='PRESET')
        self.command = 'reproduce'
        self.options_processed = True
        self.presets = list(dict.fromkeys(names))

    def describe_presets(self):
        # type: () -> str
        return '\n'.join('  %-28s %s' % (name, (PRESETS[name].__doc__ or '').strip().split('\n')[0])
                         for name in sorted(PRESETS))
