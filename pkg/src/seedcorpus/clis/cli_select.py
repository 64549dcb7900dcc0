r"""
Rank corpus lines into a seed corpus under a word budget.

Scores every line of the reference languages with the chosen method and
greedily picks the best one until the budget is met. The baselines take
consecutive lines (`luke`) or a seeded random permutation (`rand`).
Aggregated methods (`aggL`, `aggF`, `aggP`, `aggN`) build their pool from
the corpus metadata; see also `seedcorpus aggregate`.

The ranking is written as a tab separated file whose header echoes the
method, budget, corpus checksum and seed.

USAGE:
    $ seedcorpus select \
        --corpus manifest.yml \
        --method sng --order 4 \
        --budget-span luke \
        --ref-lang eng \
        [--budget-lang] \
        [--seed] \
        [--start] \
        [--target] \
        [--pool-k] \
        [--jobs] \
        [--output]
"""
import argparse

from seedcorpus import Path, log
from seedcorpus.components import (
    default_pool_k,
    default_seed,
    method_luke,
    span_luke,
    )
from seedcorpus.components.aggregation import build_pool
from seedcorpus.components.corpus import load_corpus, word_budget
from seedcorpus.components.ranking import write_ranking
from seedcorpus.components.selection import (
    kind_aggregation,
    kind_baseline,
    make_method,
    select,
    )
from seedcorpus.core.exceptions import BudgetError, InsufficientMetadataError
from seedcorpus.libs import libcli
from seedcorpus.libs.libio import make_folder_or_cwd
from seedcorpus.logger import S, T, close_files, init_files


LOGFILESNAME = '.seedcorpus_select'

_name = 'select'
_help = 'Rank a seed corpus with one of the selection methods.'

_prog, _des, _usage = libcli.parse_doc_params(__doc__)

ap = libcli.CustomParser(
    prog=_prog,
    description=libcli.detailed.format(_des),
    usage=_usage,
    formatter_class=argparse.RawDescriptionHelpFormatter,
    )

libcli.add_argument_manifest(ap)
libcli.add_argument_method(ap)
libcli.add_argument_order(ap)
libcli.add_argument_budget(ap)
libcli.add_argument_ref_langs(ap)
libcli.add_argument_budget_lang(ap)
libcli.add_argument_random_seed(ap)

ap.add_argument(
    '--start',
    help=(
        'First line of the excerpt baseline: a line id or a named span. '
        f'Defaults to `{span_luke}`.'
        ),
    type=str,
    default=span_luke,
    )

libcli.add_argument_pool(ap)

ap.add_argument(
    '--no-memo',
    help='Rescan every score at every step instead of memoizing.',
    action='store_true',
    )

libcli.add_argument_ncores(ap)
libcli.add_argument_output(ap, 'ranking.tsv')


def run_selection(
        corpus,
        method,
        budget=None,
        budget_span=None,
        ref_lang=None,
        budget_lang=None,
        order=None,
        seed=default_seed,
        start=span_luke,
        target=None,
        pool_k=default_pool_k,
        jobs=1,
        no_memo=False,
        output='ranking.tsv',
        ):
    """
    Load the corpus, resolve budget and pool, select and write the ranking.

    Shared by the ``select`` and ``aggregate`` clients.

    Returns
    -------
    :class:`~seedcorpus.components.ranking.Ranking`
    """
    method = make_method(method, order=order, k=pool_k)

    log.info(T('reading corpus'))
    corpus = load_corpus(corpus)
    log.info(S('{} lines in {} languages', len(corpus), len(corpus.languages)))  # noqa: E501
    log.info(S('checksum {}', corpus.checksum))

    ref_langs = list(ref_lang or [])
    if method.kind == kind_aggregation:
        if not corpus.metadata:
            raise InsufficientMetadataError(
                'aggregated methods need a metadata file in the manifest'
                )
        ref_langs = build_pool(
            corpus.metadata,
            method.policy,
            target=target,
            k=method.k,
            available=corpus.languages,
            )
        log.info(S('pool: {}', ' '.join(ref_langs.members)))
        budget_lang = budget_lang or (ref_lang or ref_langs.members)[0]
    elif method.kind != kind_baseline and not ref_langs:
        ref_langs = [corpus.languages[0]]
        log.info(S('no reference language given, using {}', ref_langs[0]))

    budget_lang = budget_lang or (ref_langs[0] if ref_langs else corpus.languages[0])  # noqa: E501

    if budget is None and budget_span is None:
        raise BudgetError(budget)
    if budget is None:
        budget = word_budget(corpus, budget_lang, budget_span)
        log.info(S('budget of span {}: {} words of {}', budget_span, budget, budget_lang))  # noqa: E501

    ranking = select(
        corpus,
        method,
        budget,
        ref_langs=ref_langs,
        budget_language=budget_lang,
        seed=seed,
        start_line=start if method.name == method_luke else span_luke,
        ncores=jobs,
        memoize=not no_memo,
        )

    write_ranking(ranking, output)
    log.info(S('ranking saved to {}', output))
    return ranking


def main(
        corpus,
        method,
        budget=None,
        budget_span=None,
        ref_lang=None,
        budget_lang=None,
        order=None,
        seed=default_seed,
        start=span_luke,
        target=None,
        pool_k=default_pool_k,
        jobs=1,
        no_memo=False,
        output='ranking.tsv',
        func=None,
        ):
    """
    Select a seed corpus and write its ranking.

    Parameters
    ----------
    corpus : str or Path
        YAML corpus manifest.
    method : str
        One of the selection method names.
    budget : int, optional
        Word budget. Exclusive with `budget_span`.
    budget_span : str, optional
        Span whose words in the budget language make the budget.
    ref_lang : list of str, optional
        Reference languages. Defaults to the first corpus language.
    budget_lang : str, optional
        Language of the budget words.
    order : int, optional
    seed : int
        Seed of ``rand``.
    start : str
        First line of ``luke``.
    target, pool_k
        Pool of the aggregated methods.
    jobs : int
    no_memo : bool
    output : str or Path
        Ranking file.
    """
    output = Path(output)
    folder = make_folder_or_cwd(output.absparent)
    init_files(log, Path(folder, LOGFILESNAME))
    try:
        ranking = run_selection(
            corpus,
            method,
            budget=budget,
            budget_span=budget_span,
            ref_lang=ref_lang,
            budget_lang=budget_lang,
            order=order,
            seed=seed,
            start=start,
            target=target,
            pool_k=pool_k,
            jobs=jobs,
            no_memo=no_memo,
            output=output,
            )
        flag = '\texhausted' if ranking.exhausted else ''
        print(
            f'{len(ranking)} lines\t{ranking.cum_words} words\t'
            f'{ranking.method}{flag}'
            )
    finally:
        close_files(log)
    return ranking


if __name__ == '__main__':
    libcli.maincli(ap, main)
