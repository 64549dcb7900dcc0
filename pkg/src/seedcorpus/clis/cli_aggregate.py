r"""
Rank a seed corpus by summing scores over a pool of languages.

The pool is built from the corpus metadata for a policy and a target:

    per_language    every language except the target
    per_family      the most-spoken member of the `k` largest families
    per_person      the `k` most-spoken languages
    per_neighbor    the target's declared neighbors

Each pool language keeps its own coverage; the SNG scores of all pool
languages are summed per line.

USAGE:
    $ seedcorpus aggregate \
        --corpus manifest.yml \
        --policy per_neighbor \
        --target fry \
        --budget-span luke \
        [--order] \
        [--pool-k] \
        [--budget-lang] \
        [--jobs] \
        [--output]
"""
import argparse

from seedcorpus import Path, log
from seedcorpus.clis.cli_select import run_selection
from seedcorpus.components import (
    agg_method_policy,
    default_pool_k,
    pool_policies,
    )
from seedcorpus.core.exceptions import UnknownPolicyError
from seedcorpus.libs import libcli
from seedcorpus.libs.libio import make_folder_or_cwd
from seedcorpus.logger import close_files, init_files


LOGFILESNAME = '.seedcorpus_aggregate'

_name = 'aggregate'
_help = 'Rank a seed corpus with aggregated multilingual scores.'

_prog, _des, _usage = libcli.parse_doc_params(__doc__)

ap = libcli.CustomParser(
    prog=_prog,
    description=libcli.detailed.format(_des),
    usage=_usage,
    formatter_class=argparse.RawDescriptionHelpFormatter,
    )

libcli.add_argument_manifest(ap)
libcli.add_argument_policy(ap)
libcli.add_argument_pool(ap)
libcli.add_argument_order(ap)
libcli.add_argument_budget(ap)
libcli.add_argument_budget_lang(ap)

ap.add_argument(
    '--no-memo',
    help='Rescan every score at every step instead of memoizing.',
    action='store_true',
    )

libcli.add_argument_ncores(ap)
libcli.add_argument_output(ap, 'ranking.tsv')

_policy_method = {policy: method for method, policy in agg_method_policy.items()}  # noqa: E501


def main(
        corpus,
        policy,
        target=None,
        pool_k=default_pool_k,
        order=None,
        budget=None,
        budget_span=None,
        budget_lang=None,
        no_memo=False,
        jobs=1,
        output='ranking.tsv',
        func=None,
        ):
    """
    Run aggregated selection for `policy` and write the ranking.

    Parameters
    ----------
    corpus : str or Path
        YAML corpus manifest; must name a metadata file.
    policy : str
    target : str, optional
        Required by ``per_neighbor``.
    pool_k : int
    order : int, optional
    budget, budget_span, budget_lang
        As in ``seedcorpus select``.
    no_memo : bool
    jobs : int
    output : str or Path
    """
    if policy not in _policy_method:
        raise UnknownPolicyError(policy, ', '.join(pool_policies))

    output = Path(output)
    folder = make_folder_or_cwd(output.absparent)
    init_files(log, Path(folder, LOGFILESNAME))
    try:
        ranking = run_selection(
            corpus,
            _policy_method[policy],
            budget=budget,
            budget_span=budget_span,
            budget_lang=budget_lang,
            order=order,
            target=target,
            pool_k=pool_k,
            jobs=jobs,
            no_memo=no_memo,
            output=output,
            )
        flag = '\texhausted' if ranking.exhausted else ''
        print(
            f'{len(ranking)} lines\t{ranking.cum_words} words\t'
            f'{ranking.method}\t{";".join(ranking.pool)}{flag}'
            )
    finally:
        close_files(log)
    return ranking


if __name__ == '__main__':
    libcli.maincli(ap, main)
