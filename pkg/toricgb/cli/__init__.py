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


""" ``toricgb.cli`` Module

This file contains the implementation of the ToricGB command-line interface
(CLI) parser logic, which uses the click library. The main CLI entry-point
function is toricgb_cli, a command group with one command per action.

The toricgb.cli module first parses all options and their validity, storing
them in the CliContext; the computation itself only starts once the whole
command line has been parsed (see CliContext.process_input).
"""

# Standard Library Imports
import logging

# Third-Party Library Imports
import click

# ToricGB Library Imports
import toricgb

from toricgb.platform import init_logger


HELP_PREFACE = """
Usage: {prog} [global options] COMMAND [command options]

Global options (-v, -l, -q, -o) must come before the command. Examples:

 > {prog} run -c config.json --order lex
 > {prog} sweep -a 3 -d 3 -k 1 --check "r == 2" -o sweep.jsonl
 > {prog} reproduce all

'{prog} help COMMAND' prints the options of one command, and
'{prog} help all' those of every command.

Exit codes: 0 success, 1 finding (failed check, counterexample candidate
or preset mismatch), 2 invalid input, 3 internal error.
"""

CLICK_CONTEXT_SETTINGS = dict(help_option_names=['-h', '--help'])

RULE = '-' * 52


def _banner(title, color):
    # type: (str, str) -> None
    click.secho(RULE, fg=color)
    click.secho(' %s' % title, fg='yellow')
    click.secho(RULE, fg=color)


def _command_help(ctx, command):
    # type: (click.Context, click.Command) -> str
    """ Help text of command, rendered as if invoked as `toricgb COMMAND`. """
    with click.Context(command, parent=ctx.parent, info_name=command.name) as sub_ctx:
        return command.get_help(sub_ctx)



@click.group(context_settings=CLICK_CONTEXT_SETTINGS)
@click.option(
    '--output', '-o', metavar='DIR',
    type=click.Path(file_okay=False, writable=True, resolve_path=True), help=
    'Base directory for output files (sweep results, log files). Relative'
    ' paths given to other options are placed in DIR.')
@click.option(
    '--verbosity', '-v', metavar='LEVEL', default='info',
    type=click.Choice(['none', 'debug', 'info', 'warning', 'error']), help=
    'Amount of log output. none prints only command output (e.g. the run report);'
    ' debug also spot-checks that all members of a sweep class agree.')
@click.option(
    '--logfile', '-l', metavar='LOG',
    type=click.Path(dir_okay=False, writable=True), help=
    'Also write log messages to LOG (use with -v debug for bug reports).')
@click.option(
    '--quiet', '-q', is_flag=True, help=
    'No log output on stdout. Command output is still printed, and a logfile'
    ' given with -l is still written.')
@click.pass_context
def toricgb_cli(ctx, output, verbosity, logfile, quiet):
    """ ToricGB: Groebner bases of simplicial toric ideals.

    Type `toricgb help COMMAND` for the options of a COMMAND.
    """
    ctx.call_on_close(ctx.obj.process_input)

    if verbosity == 'none':
        quiet = True
        verbosity = 'error'
    init_logger(log_level=getattr(logging, verbosity.upper()), show_stdout=not quiet,
                log_file=logfile)

    ctx.obj.quiet_mode = bool(quiet)
    ctx.obj.output_directory = output
    ctx.obj.logger.debug('ToricGB %s', toricgb.__version__)
    if output is not None:
        ctx.obj.logger.info('Output directory: %s', output)



@click.command('help', add_help_option=False)
@click.argument('command_name', required=False)
@click.pass_context
def help_command(ctx, command_name):
    """ Print help for command (help [command|all]). """
    group = ctx.parent.command
    prog = ctx.parent.info_name
    if command_name is None or command_name == 'all':
        _banner('ToricGB %s Help' % toricgb.__version__, 'yellow')
        click.echo(HELP_PREFACE.format(prog=prog))
        click.echo(ctx.parent.get_help())
    if command_name == 'all':
        names = group.list_commands(ctx.parent)
    elif command_name is not None:
        if group.get_command(ctx.parent, command_name) is None:
            raise click.BadParameter(
                'unknown command. Valid commands: %s' % ', '.join(
                    group.list_commands(ctx.parent)), param_hint='command name')
        names = [command_name]
    else:
        names = []
    for name in names:
        click.echo('')
        click.secho('%s %s' % (prog, name), fg='cyan')
        click.secho(RULE, fg='cyan')
        click.echo(_command_help(ctx, group.get_command(ctx.parent, name)))
    ctx.exit()



@click.command('about', add_help_option=False)
@click.pass_context
def about_command(ctx):
    """ Print license/copyright info. """
    _banner('About ToricGB %s' % toricgb.__version__, 'cyan')
    click.echo(toricgb.ABOUT_STRING)
    ctx.exit()



@click.command('version', add_help_option=False)
@click.pass_context
def version_command(ctx):
    """ Print version of ToricGB. """
    click.secho('ToricGB %s' % toricgb.__version__, fg='yellow')
    ctx.exit()



@click.command('run')
@click.option(
    '--config', '-c', metavar='FILE', required=True,
    type=click.Path(exists=False, file_okay=True, dir_okay=False, resolve_path=False), help=
    '[Required] Configuration JSON file: {"alpha": A, "d": D, "generators": [[...], ...]}.'
    ' The corner points alpha*e_j are added if missing.')
@click.option(
    '--order', '-O', metavar='ORDER', multiple=True,
    type=click.Choice(['grevlex', 'lex']), help=
    'Term order(s) to compute the toric Groebner basis in. May be specified multiple times.'
    ' The reverse lexicographic basis is always computed. [default: grevlex]')
@click.option(
    '--ja-maxdeg', is_flag=True, flag_value=True, help=
    'Also report the degree of the reduced basis of the elimination ideal J_A.')
@click.option(
    '--normality/--no-normality', default=True, show_default=True, help=
    'Decide whether the semigroup is normal.')
@click.option(
    '--truncate', is_flag=True, flag_value=True, help=
    'Also run the degree-truncated elimination and check that it gives the same basis.')
@click.option(
    '--emit', '-e', metavar='FORMAT',
    type=click.Choice(['table', 'json']), default='table', show_default=True, help=
    'Output format of the report (combine json with -q for machine-readable output).')
@click.option(
    '--show-basis', '-b', is_flag=True, flag_value=True, help=
    'Also print the reduced reverse lexicographic Groebner basis.')
@click.pass_context
def run_command(ctx, config, order, ja_maxdeg, normality, truncate, emit, show_basis):
    """ Compute degrees and bounds of one configuration.

    Prints every field of the bound report, and exits with code 1 if the
    reverse lexicographic basis exceeds deg - codim + 1.
    """
    ctx.obj.run_command(config, order, ja_maxdeg, normality, truncate, emit, show_basis)



@click.command('sweep')
@click.option(
    '--alpha', '-a', metavar='A', required=True, type=click.INT, help=
    '[Required] Coordinate sum alpha of the simplex M_{alpha,d}.')
@click.option(
    '--dim', '-d', metavar='D', required=True, type=click.INT, help=
    '[Required] Dimension d of the simplex M_{alpha,d}.')
@click.option(
    '--delete', '-k', metavar='K', required=True, type=click.INT, help=
    '[Required] Number of non-corner points to delete.')
@click.option(
    '--predicate', '-p', metavar='NAME[=ARGS]', multiple=True, help=
    'Keep only deleted sets satisfying the predicate; may be specified multiple times'
    ' (all must hold). One of: none, edge-one-each, facet-min=M, must-delete=V1,V2,..,'
    ' edge-full=I,J.')
@click.option(
    '--check', '-c', metavar='EXPR', multiple=True, help=
    'Check to evaluate for every class; may be specified multiple times. Either a named'
    ' bound (conjecture, thmA1, thmA4, propA6, sturmfels, lemmaA2, normal-degree, deg-codim)'
    ' or a comparison FIELD OP INTEGER, e.g. "r <= 8".')
@click.option(
    '--no-symmetry', is_flag=True, flag_value=True, help=
    'Evaluate every configuration instead of one per coordinate permutation class.')
@click.option(
    '--out', '-o', metavar='FILE.jsonl', required=True,
    type=click.Path(exists=False, file_okay=True, writable=True, resolve_path=False), help=
    '[Required] Write the results (one manifest line, then one record per class) to a'
    ' JSONL file.')
@click.option(
    '--resume', is_flag=True, flag_value=True, help=
    'If the --out file exists, keep the classes it already holds and only evaluate the'
    ' missing ones. The file must come from a sweep with the same options.')
@click.option(
    '--threads', metavar='N', envvar='TORICGB_THREADS', default=1, show_default=True,
    type=click.IntRange(min=1), help=
    'Number of worker processes [env: TORICGB_THREADS].')
@click.option(
    '--cap', metavar='N', envvar='TORICGB_CAP', default=10**6, show_default=True,
    type=click.IntRange(min=1), help=
    'Refuse to enumerate more than N deleted sets [env: TORICGB_CAP].')
@click.option(
    '--timing', is_flag=True, flag_value=True, help=
    'Include per-class timing in the output file (which then differs between runs).')
@click.pass_context
def sweep_command(ctx, alpha, dim, delete, predicate, check, no_symmetry, out, resume,
                  threads, cap, timing):
    """ Check bounds over configurations obtained by deleting points.

    Enumerates every M_{alpha,d} minus K non-corner points satisfying the
    predicates, one per coordinate permutation class, and evaluates the
    checks on each. Exits with code 1 if any check fails.
    """
    ctx.obj.sweep_command(alpha, dim, delete, predicate, check, no_symmetry, out, resume,
                          threads, cap, timing)



@click.command('reproduce')
@click.argument('preset', nargs=-1, type=click.STRING)
@click.option(
    '--list', 'list_presets', is_flag=True, flag_value=True, help=
    'List the available presets and exit.')
@click.pass_context
def reproduce_command(ctx, preset, list_presets):
    """ Run fixed expectation suites (reproduce PRESET... or reproduce all).

    Exits with code 1 and prints expected vs computed values on any mismatch.
    """
    if list_presets:
        ctx.obj.options_processed = False
        click.echo(ctx.obj.describe_presets())
        ctx.exit()
    ctx.obj.reproduce_command(preset)




for _command in (help_command, version_command, about_command,
                 run_command, sweep_command, reproduce_command):
    toricgb_cli.add_command(_command)
