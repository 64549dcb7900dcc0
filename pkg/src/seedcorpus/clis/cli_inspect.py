r"""
Inspect a parallel corpus.

Prints the corpus checksum, the number of lines and, per language, its
token count. With `--span`, also the word count of the span in every
language, which is the budget a method gets for that span.

USAGE:
    $ seedcorpus inspect \
        --corpus manifest.yml \
        [--span luke]
"""
import argparse

from seedcorpus import log
from seedcorpus.components.corpus import load_corpus, word_budget
from seedcorpus.libs import libcli
from seedcorpus.logger import S, T


_name = 'inspect'
_help = 'Print languages, sizes, checksum and span budgets of a corpus.'

_prog, _des, _usage = libcli.parse_doc_params(__doc__)

ap = libcli.CustomParser(
    prog=_prog,
    description=libcli.detailed.format(_des),
    usage=_usage,
    formatter_class=argparse.RawDescriptionHelpFormatter,
    )

libcli.add_argument_manifest(ap)

ap.add_argument(
    '--span',
    help='A named span (`luke`) or a `first..last` id range.',
    type=str,
    default=None,
    )


def inspect_corpus(corpus, span=None):
    """
    Report lines for `corpus`.

    Returns
    -------
    list of str
        Tab separated report lines.
    """
    lines = [
        f'checksum\t{corpus.checksum}',
        f'lines\t{len(corpus)}',
        f'metadata\t{len(corpus.metadata)}',
        f'lexicon\t{corpus.lexicon_path or "none"}',
        ]
    for key, value in sorted(corpus.extra.items()):
        lines.append(f'{key}\t{value}')

    header = 'language\ttokens'
    if span is not None:
        header += f'\t{span}'
    lines.append(header)
    for lang in corpus.languages:
        row = f'{lang}\t{sum(corpus.word_counts(lang))}'
        if span is not None:
            row += f'\t{word_budget(corpus, lang, span)}'
        lines.append(row)
    return lines


def main(corpus, span=None, func=None):
    """
    Print the corpus report.

    Parameters
    ----------
    corpus : str or Path
        YAML corpus manifest.
    span : str, optional
        Span whose word count to report.
    """
    log.info(T('inspecting corpus'))
    corpus = load_corpus(corpus)
    report = inspect_corpus(corpus, span=span)
    print('\n'.join(report))
    log.info(S('{} languages', len(corpus.languages)))
    return report


if __name__ == '__main__':
    libcli.maincli(ap, main)
