"""
seedcorpus.

Seed-corpus selection for translation into new, endangered languages.
Ranks the lines of a line-aligned multilingual corpus so that the first
sentences translators render cover the most of the text, evaluates
translations and plans training schedules.

USAGE:
    For help:
    $ seedcorpus -h
"""
import argparse
import sys

from seedcorpus import log
from seedcorpus.clis import (
    cli_aggregate,
    cli_evaluate,
    cli_inspect,
    cli_mask,
    cli_schedule,
    cli_select,
    )
from seedcorpus.components import SEEDCORPUS_TITLE
from seedcorpus.libs import libcli
from seedcorpus.logger import S


_prog, _description, _usageage = libcli.parse_doc_params(__doc__)

description = f"""
{SEEDCORPUS_TITLE}

{_description}

Core functions:
    * {cli_inspect._name}
    * {cli_select._name}
    * {cli_aggregate._name}
    * {cli_evaluate._name}
    * {cli_schedule._name}
    * {cli_mask._name}
"""

ap = libcli.CustomParser(
    prog='seedcorpus',
    description=libcli.detailed.format(description),
    usage=_usageage,
    formatter_class=argparse.RawDescriptionHelpFormatter,
    )

libcli.add_version(ap)

subparsers = ap.add_subparsers(
    title='seedcorpus routines',
    help='Short description:',
    )

_clients = (
    cli_inspect,
    cli_select,
    cli_aggregate,
    cli_evaluate,
    cli_schedule,
    cli_mask,
    )
_subparsers = {
    client.main: libcli.add_subparser(subparsers, client)
    for client in _clients
    }


def load_args(argv=None):
    """Load user input arguments."""
    return ap.parse_args(argv)


def maincli(argv=None):
    """
    Execute subroutine.

    Arguments are read from user command line input. Module errors exit
    with code 1, argument errors with code 2.
    """
    # prints help if not arguments are passed
    argv = sys.argv[1:] if argv is None else list(argv)
    if not argv:
        ap.print_help()
        ap.exit()

    cmd = load_args(argv)
    kwargs = vars(cmd)
    libcli.run_main(cmd.func, ap=_subparsers[cmd.func], **kwargs)
    log.info(S('finished properly'))


if __name__ == '__main__':
    maincli()
