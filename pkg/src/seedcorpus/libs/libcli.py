"""Operations shared by client interfaces."""
import argparse
import sys
from os import cpu_count

from seedcorpus import __version__, log
from seedcorpus.components import (
    default_pool_k,
    default_seed,
    method_names,
    pool_policies,
    )
from seedcorpus.core.exceptions import (
    InvalidScheduleError,
    SeedCorpusException,
    UnknownMethodError,
    )
from seedcorpus.libs.libparse import values_to_dict


detailed = "detailed instructions:\n\n{}"

# errors that also print the usage of the failing subcommand
usage_errors = (UnknownMethodError, InvalidScheduleError)


def load_args(ap):
    """Load argparse commands."""
    return ap.parse_args()


def run_main(main, ap=None, **kwargs):
    """
    Run a client `main`, turning module errors into exit code 1.

    The error report goes to stderr; usage errors also print the usage
    of `ap`.
    """
    try:
        return main(**kwargs)
    except SeedCorpusException as err:
        log.debug(repr(err))
        sys.stderr.write(f'{err.report()}\n')
        if ap is not None and isinstance(err, usage_errors):
            ap.print_usage(sys.stderr)
        sys.exit(1)


def maincli(ap, main):
    """CLI entry point."""
    cmd = load_args(ap)
    run_main(main, ap=ap, **vars(cmd))


class ParamsToDict(argparse.Action):
    """
    Convert ``key=value`` command-line parameters to a dictionary.

    Example
    -------
        >>> target=fry sources=eng,deu dropout=0.3
        >>> {'target': 'fry', 'sources': ('eng', 'deu'), 'dropout': 0.3}
    """

    def __call__(self, parser, namespace, values, option_string=None):
        """Execute."""
        setattr(namespace, self.dest, values_to_dict(values))


class CustomParser(argparse.ArgumentParser):
    """Custom parser class."""

    def error(self, message):
        """Present error message."""
        self.print_help()
        sys.stderr.write(f'\nerror: {message}\n')
        sys.exit(2)


def parse_doc_params(docstring):
    """
    Parse client docstrings.

    Separates PROG, DESCRIPTION and USAGE from client main docstring.

    Parameters
    ----------
    docstring : str
        The module docstring.

    Returns
    -------
    tuple
        (prog, description, usage)
    """
    doclines = docstring.lstrip().split('\n')
    prog = doclines[0]
    description = '\n'.join(doclines[2:doclines.index('USAGE:')])
    usage = '\n' + '\n'.join(doclines[doclines.index('USAGE:') + 1:])

    return prog, description, usage


def add_subparser(parser, module):
    """
    Add a subcommand to a parser.

    Parameters
    ----------
    parser : `argparse.add_suparsers object <https://docs.python.org/3/library/argparse.html#argparse.ArgumentParser.add_subparsers>`_
        The parser to add the subcommand to.
    module
        A python module containing the characteristics of a seedcorpus
        client interface. Client interface modules require the following
        attributes: ``__doc__`` which feeds the `description argument <https://docs.python.org/3/library/argparse.html#description>`_
        of `add_parser <https://docs.python.org/3/library/argparse.html#other-utilities>`_,
        ``_help`` which feeds `help <https://docs.python.org/3/library/argparse.html#help>`_,
        ``ap`` which is an `ArgumentParser <https://docs.python.org/3/library/argparse.html#argparse.ArgumentParser>`_,
        and a ``main`` function, which executes the main logic of the interface.
    """  # noqa: E501
    new_ap = parser.add_parser(
        module._name,
        usage=module._usage,
        description=module._prog + '\n\n' + module.ap.description,
        help=module._help,
        parents=[module.ap],
        add_help=False,
        formatter_class=argparse.RawDescriptionHelpFormatter,
        )
    new_ap.set_defaults(func=module.main)
    return new_ap


def add_version(parser):
    """
    Add version ``-v`` option to parser.

    Displays a message informing the current version.
    Also accessible via ``--version``.
    """
    parser.add_argument(
        '-v',
        '--version',
        action='version',
        version=__version__,
        )


def add_argument_manifest(parser):
    """Add the corpus manifest argument."""
    parser.add_argument(
        '-c',
        '--corpus',
        help=(
            'Path to the YAML corpus manifest listing one text file per '
            'language and, optionally, line ids, metadata and lexicon.'
            ),
        type=str,
        required=True,
        )


def add_argument_method(parser):
    """Add the selection method argument."""
    parser.add_argument(
        '-m',
        '--method',
        help=(
            'Selection method. One of: '
            f'{", ".join(method_names)}. '
            '`sng` takes its order from `--order`.'
            ),
        type=str,
        required=True,
        )


def add_argument_order(parser):
    """Add the n-gram order argument."""
    parser.add_argument(
        '-J',
        '--order',
        help=(
            'Highest n-gram order of `sng` and of the aggregated methods. '
            'Defaults to 4 for `sng` and 5 for aggregation.'
            ),
        type=int,
        default=None,
        )


def add_argument_budget(parser):
    """Add the word budget arguments, explicit or from a span."""
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument(
        '-b',
        '--budget',
        help='Word budget, counted in the budget language.',
        type=int,
        )
    group.add_argument(
        '-bs',
        '--budget-span',
        help=(
            'Span whose word count in the budget language is the budget: '
            'a named span (`luke`) or a `first..last` id range.'
            ),
        type=str,
        )


def add_argument_ref_langs(parser, required=False):
    """Add the reference languages argument."""
    parser.add_argument(
        '-r',
        '--ref-lang',
        help='Reference language codes whose scores drive the selection.',
        nargs='+',
        default=None,
        required=required,
        )


def add_argument_budget_lang(parser):
    """Add the budget language argument."""
    parser.add_argument(
        '-bl',
        '--budget-lang',
        help=(
            'Language in which budget words are counted. '
            'Defaults to the first reference language.'
            ),
        type=str,
        default=None,
        )


def add_argument_pool(parser):
    """Add language pool arguments."""
    parser.add_argument(
        '-t',
        '--target',
        help='Target language code; never part of its own pool.',
        type=str,
        default=None,
        )
    parser.add_argument(
        '-k',
        '--pool-k',
        help=(
            'Number of families or languages of the per-family and '
            f'per-person pools. Defaults to {default_pool_k}.'
            ),
        type=int,
        default=default_pool_k,
        )


def add_argument_policy(parser):
    """Add the pool policy argument."""
    parser.add_argument(
        '-p',
        '--policy',
        help=f'Pool policy. One of: {", ".join(pool_policies)}.',
        type=str,
        required=True,
        )


def add_argument_random_seed(parser):
    """Add argument to select a random seed number."""
    parser.add_argument(
        '-s',
        '--seed',
        help=(
            'Seed of the random baseline, recorded in the ranking header. '
            f'Defaults to {default_seed}.'
            ),
        default=default_seed,
        type=int,
        )


def add_argument_ncores(parser):
    """Add argument for number of workers to use."""
    ncpus = max((cpu_count() or 2) - 1, 1)
    parser.add_argument(
        '-j',
        '--jobs',
        help=(
            'Number of workers refreshing score rows. If `-j` uses all '
            'available cores except one. Results do not depend on it.'
            ),
        type=int,
        default=1,
        const=ncpus,
        nargs='?',
        )


def add_argument_output(parser, default):
    """Add argument for the output file."""
    parser.add_argument(
        '-o',
        '--output',
        help=(
            'Output file, written atomically. '
            f'Defaults to `{default}`.'
            ),
        type=str,
        default=default,
        )
