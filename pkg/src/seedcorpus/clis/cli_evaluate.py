r"""
Score translations against a reference with chrF and, optionally, BLEU.

Each hypothesis file is scored on its own, one line per metric:

    <hypothesis>  <metric>  <value>  <params>

With `--combine centeredness` the hypothesis files are first combined
line by line, keeping for every line the candidate with the highest
chrF similarity to the others, and the combined stream is scored once.

Rankings given with `--rankings` are carved out of the corpus to write
the shared test set: the corpus lines in no ranking's train or valid
split.

USAGE:
    $ seedcorpus evaluate \
        --reference ref.txt \
        --hypotheses hyp1.txt [hyp2.txt ...] \
        [--combine centeredness] \
        [--bleu] \
        [--per-line] \
        [--chrf-order] \
        [--chrf-beta] \
        [--output]

    $ seedcorpus evaluate \
        --corpus manifest.yml \
        --rankings r1.tsv [r2.tsv ...] \
        --output test_ids.txt
"""
import argparse

from natsort import natsorted

from seedcorpus import Path, log
from seedcorpus.components import chrf_beta, chrf_order, combine_centeredness
from seedcorpus.components.corpus import load_corpus
from seedcorpus.components.evaluation import (
    bleu,
    combine_streams,
    corpus_chrf,
    intersection_test_set,
    sentence_chrfs,
    )
from seedcorpus.components.ranking import read_ranking
from seedcorpus.libs import libcli
from seedcorpus.libs.libio import (
    make_folder_or_cwd,
    read_text_lines,
    write_atomic,
    )
from seedcorpus.logger import S, T, close_files, init_files


LOGFILESNAME = '.seedcorpus_evaluate'

_name = 'evaluate'
_help = 'Score translations (chrF, BLEU) or carve the shared test set.'

_prog, _des, _usage = libcli.parse_doc_params(__doc__)

ap = libcli.CustomParser(
    prog=_prog,
    description=libcli.detailed.format(_des),
    usage=_usage,
    formatter_class=argparse.RawDescriptionHelpFormatter,
    )

ap.add_argument(
    '-ref',
    '--reference',
    help='Reference file, one line per segment.',
    type=str,
    default=None,
    )

ap.add_argument(
    '-hyp',
    '--hypotheses',
    help='Hypothesis files, line-aligned with the reference.',
    nargs='+',
    default=None,
    )

ap.add_argument(
    '--combine',
    help='Combine several hypothesis files before scoring.',
    choices=(combine_centeredness,),
    default=None,
    )

ap.add_argument(
    '--bleu',
    help='Also report corpus BLEU.',
    action='store_true',
    )

ap.add_argument(
    '--per-line',
    help='Also report the chrF of every line.',
    action='store_true',
    )

ap.add_argument(
    '--chrf-order',
    help=f'Character n-gram order of chrF. Defaults to {chrf_order}.',
    type=int,
    default=chrf_order,
    )

ap.add_argument(
    '--chrf-beta',
    help=f'Recall weight of chrF. Defaults to {chrf_beta}.',
    type=float,
    default=chrf_beta,
    )

ap.add_argument(
    '-c',
    '--corpus',
    help='Corpus manifest, to carve the shared test set.',
    type=str,
    default=None,
    )

ap.add_argument(
    '--rankings',
    help='Ranking files carved out of the corpus for the test set.',
    nargs='+',
    default=None,
    )

ap.add_argument(
    '-o',
    '--output',
    help=(
        'Output file, written atomically: the metric report, or the test '
        'set ids with `--rankings`. Defaults to printing only.'
        ),
    type=str,
    default=None,
    )


def score_streams(
        hypotheses,
        reference,
        labels,
        combine=None,
        with_bleu=False,
        per_line=False,
        order=chrf_order,
        beta=chrf_beta,
        ):
    """
    Metric report lines for hypothesis streams against `reference`.

    Returns
    -------
    list of str
    """
    if combine == combine_centeredness and len(hypotheses) > 1:
        log.info(S('combining {} hypotheses by centeredness', len(hypotheses)))  # noqa: E501
        hypotheses = [combine_streams(hypotheses)]
        labels = [combine_centeredness]

    report = []
    for label, hyp in zip(labels, hypotheses):
        scores = [corpus_chrf(hyp, reference, max_n=order, beta=beta)]
        if with_bleu:
            scores.append(bleu(hyp, reference))
        report.extend(f'{label}\t{s.format()}' for s in scores)
        if per_line:
            for i, value in enumerate(sentence_chrfs(hyp, reference, max_n=order, beta=beta)):  # noqa: E501
                report.append(f'{label}\tline {i + 1}\t{value:.4f}')
    return report


def carve_test_set(corpus, rankings, output=None):
    """Intersection test set of `rankings` over `corpus`."""
    corpus = load_corpus(corpus)
    rankings = natsorted(rankings)
    test_set = intersection_test_set(
        corpus,
        [read_ranking(r) for r in rankings],
        labels=[Path(r).name for r in rankings],
        )
    if output is not None:
        test_set.write(output)
        log.info(S('test set saved to {}', output))
    return test_set


def main(
        reference=None,
        hypotheses=None,
        combine=None,
        bleu=False,
        per_line=False,
        chrf_order=chrf_order,
        chrf_beta=chrf_beta,
        corpus=None,
        rankings=None,
        output=None,
        func=None,
        ):
    """
    Evaluate hypotheses or carve the shared test set.

    Parameters
    ----------
    reference : str or Path
    hypotheses : list of str or Path
        Sorted naturally before scoring or combining.
    combine : str, optional
        ``centeredness``.
    bleu : bool
    per_line : bool
    chrf_order : int
    chrf_beta : float
    corpus : str or Path, optional
    rankings : list of str or Path, optional
    output : str or Path, optional
    """
    folder = make_folder_or_cwd(Path(output).absparent if output else None)
    init_files(log, Path(folder, LOGFILESNAME))
    try:
        if rankings:
            log.info(T('carving the shared test set'))
            if corpus is None:
                ap.error('--rankings requires --corpus')
            test_set = carve_test_set(corpus, rankings, output=output)
            print(f'{len(test_set)} test lines')
            return test_set

        if reference is None or not hypotheses:
            ap.error('--reference and --hypotheses are required')

        log.info(T('evaluating'))
        hyp_files = natsorted(hypotheses)
        streams = [read_text_lines(f) for f in hyp_files]
        ref = read_text_lines(reference)
        report = score_streams(
            streams,
            ref,
            [Path(f).name for f in hyp_files],
            combine=combine,
            with_bleu=bleu,
            per_line=per_line,
            order=chrf_order,
            beta=chrf_beta,
            )
        text = '\n'.join(report)
        print(text)
        if output is not None:
            write_atomic(output, text + '\n')
            log.info(S('report saved to {}', output))
        return report
    finally:
        close_files(log)


if __name__ == '__main__':
    libcli.maincli(ap, main)
