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


""" ``toricgb.__main__`` Module

Entry point of the `toricgb` command, also reachable as:

  > python -m toricgb

main() wraps the click group in toricgb.cli so that every outcome, including
parse errors, becomes one of the documented exit codes. The toricgb.py script
in the source tree calls the same function for use without installing.
"""

# Standard Library Imports
import sys

# Third-Party Library Imports
import click

# ToricGB Library Imports
from toricgb.cli import toricgb_cli as cli
from toricgb.cli.context import CliContext
from toricgb.cli.context import EXIT_INPUT_ERROR


def main(args=None):
    # type: (Optional[List[str]]) -> int
    """ Main: ToricGB command-line interface (CLI) entry point.

    Parses args with toricgb.cli.toricgb_cli and runs the selected command.

    Returns:
        Exit code: 0 success, 1 finding, 2 invalid input, 3 internal error.
    """
    cli_ctx = CliContext()  # Shared by all commands.
    try:
        # pylint: disable=unexpected-keyword-arg, no-value-for-parameter
        result = cli.main(args=args, obj=cli_ctx, standalone_mode=False)
    except click.ClickException as ex:
        ex.show()
        return EXIT_INPUT_ERROR
    except click.Abort:
        click.echo('Aborted!', err=True)
        return EXIT_INPUT_ERROR
    if isinstance(result, int) and result != 0:
        return result
    return cli_ctx.exit_code


if __name__ == '__main__':
    sys.exit(main())
