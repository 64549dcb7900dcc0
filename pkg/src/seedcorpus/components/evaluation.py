"""
Translation metrics, multi-source combination and shared test sets.

chrF is the character n-gram F-score: whitespace is removed, precision
and recall are averaged over the orders both sides have n-grams for, and
the F_beta of the averages is reported times 100. Both chrF and BLEU come
from ``sacrebleu``.
"""
from collections import Counter
from functools import lru_cache

from sacrebleu.metrics import BLEU, CHRF

from seedcorpus import log
from seedcorpus.components import (
    bleu_order,
    bleu_smooth_method,
    bleu_smooth_value,
    chrf_beta,
    chrf_order,
    )
from seedcorpus.core.exceptions import (
    CorpusMismatchError,
    EmptyCandidateListError,
    InvalidParameterError,
    LengthMismatchError,
    )
from seedcorpus.libs.libio import read_text_lines, write_atomic
from seedcorpus.logger import S


class MetricScore():
    """A metric value with the parameters it was computed with."""

    def __init__(self, name, value, params=None):
        self.name = name
        self.value = value
        self.params = dict(params or {})

    def __float__(self):
        return float(self.value)

    def __repr__(self):
        return f'MetricScore({self.name!r}, {self.value!r}, {self.params})'

    def format(self):
        """One tab separated line: name, value, parameters."""
        params = ';'.join(f'{k}={v}' for k, v in self.params.items())
        return f'{self.name}\t{self.value:.4f}\t{params}'


@lru_cache(maxsize=None)
def _chrf_metric(max_n, beta):
    if max_n < 1:
        raise InvalidParameterError('chrF order', max_n, 'at least 1')
    if beta <= 0:
        raise InvalidParameterError('chrF beta', beta, 'positive')
    return CHRF(
        char_order=max_n,
        word_order=0,
        beta=beta,
        whitespace=False,
        eps_smoothing=False,
        )


def chrf(hypothesis, reference, max_n=chrf_order, beta=chrf_beta):
    """
    Sentence-level chrF in ``[0, 100]``.

    An empty hypothesis against a nonempty reference scores 0.
    """
    metric = _chrf_metric(max_n, beta)
    value = metric.sentence_score(hypothesis, [reference]).score
    return MetricScore('chrF', value, {'order': max_n, 'beta': beta})


def _check_lengths(hypotheses, references):
    if len(hypotheses) != len(references):
        raise LengthMismatchError(len(hypotheses), len(references))


def corpus_chrf(hypotheses, references, max_n=chrf_order, beta=chrf_beta):
    """Corpus-level chrF: statistics are summed over pairs, in order."""
    metric = _chrf_metric(max_n, beta)
    _check_lengths(hypotheses, references)
    value = metric.corpus_score(list(hypotheses), [list(references)]).score
    return MetricScore('chrF', value, {'order': max_n, 'beta': beta})


def sentence_chrfs(hypotheses, references, max_n=chrf_order, beta=chrf_beta):
    """chrF value of every pair."""
    _check_lengths(hypotheses, references)
    return [
        chrf(h, r, max_n=max_n, beta=beta).value
        for h, r in zip(hypotheses, references)
        ]


def bleu(
        hypotheses,
        references,
        smooth_method=bleu_smooth_method,
        smooth_value=bleu_smooth_value,
        ):
    """
    Corpus-level BLEU over orders 1 to 4 with a brevity penalty.

    Add-one smoothing of the higher orders keeps tiny corpora finite;
    ``smooth_method='none'`` turns it off.
    """
    _check_lengths(hypotheses, references)
    metric = BLEU(
        max_ngram_order=bleu_order,
        smooth_method=smooth_method,
        smooth_value=smooth_value if smooth_method == bleu_smooth_method else None,  # noqa: E501
        )
    result = metric.corpus_score(list(hypotheses), [list(references)])
    params = {'order': bleu_order, 'smooth': smooth_method}
    if smooth_method == bleu_smooth_method:
        params['k'] = smooth_value
    return MetricScore('BLEU', result.score, params)


def centeredness_combine(candidates, similarity=None):
    """
    Pick the candidate most similar to all the others.

    Every candidate scores the sum of its similarity to each other
    candidate; the highest sum wins, ties going to the lowest index.

    Parameters
    ----------
    candidates : list of str
    similarity : callable, optional
        ``similarity(hypothesis, reference) -> float``; defaults to
        sentence chrF.

    Returns
    -------
    tuple
        (index, combined score)
    """
    if not candidates:
        raise EmptyCandidateListError()
    if similarity is None:
        def similarity(h, r):
            return chrf(h, r).value

    best = 0
    best_score = None
    for i, cand in enumerate(candidates):
        total = 0.0
        for j, other in enumerate(candidates):
            if i != j:
                total += similarity(cand, other)
        if best_score is None or total > best_score:
            best, best_score = i, total
    return best, best_score


def combine_streams(streams, similarity=None):
    """
    Combine line-aligned hypothesis streams line by line.

    Returns
    -------
    list of str
        The centered candidate of every line.
    """
    if not streams:
        raise EmptyCandidateListError()
    n = len(streams[0])
    for stream in streams[1:]:
        if len(stream) != n:
            raise LengthMismatchError(len(stream), n)

    combined = []
    picked = Counter()
    for candidates in zip(*streams):
        i, _ = centeredness_combine(list(candidates), similarity=similarity)
        combined.append(candidates[i])
        picked[i] += 1
    log.debug(S('centered picks per stream: {}', dict(sorted(picked.items()))))
    return combined


class TestSetSpec():
    """
    Lines left for testing once every seed corpus is carved out.

    Parameters
    ----------
    included : list of str
        Test line ids, in corpus order.
    excluded : dict
        Experiment label to its train and valid line ids.
    corpus_checksum : str
    """

    __test__ = False

    def __init__(self, included, excluded, corpus_checksum):
        self.included = list(included)
        self.excluded = dict(excluded)
        self.corpus_checksum = corpus_checksum

    def __len__(self):
        return len(self.included)

    def format(self):
        """Serialize as a header and one line id per line."""
        out = [
            f'# corpus_checksum: {self.corpus_checksum}',
            f'# experiments: {len(self.excluded)}',
            f'# included: {len(self.included)}',
            ]
        out.extend(self.included)
        return '\n'.join(out) + '\n'

    def write(self, fpath):
        """Write atomically to `fpath`."""
        return write_atomic(fpath, self.format())


def read_test_set(fpath):
    """Read the included ids and checksum written by :meth:`TestSetSpec.write`."""  # noqa: E501
    checksum = None
    included = []
    for line in read_text_lines(fpath):
        if line.startswith('# corpus_checksum: '):
            checksum = line.split(': ', 1)[1]
        elif not line.startswith('# '):
            included.append(line)
    return TestSetSpec(included, {}, checksum)


def intersection_test_set(corpus, rankings, split=None, labels=None):
    """
    Corpus lines outside every ranking's train and valid ids.

    Parameters
    ----------
    corpus : :class:`~seedcorpus.components.corpus.ParallelCorpus`
    rankings : list of :class:`~seedcorpus.components.ranking.Ranking`
    split : tuple, optional
        Train and valid percentages overriding each ranking's own.
    labels : list of str, optional
        Experiment labels; default to ``<index>:<method>``.

    Raises
    ------
    CorpusMismatchError
        If a ranking was built on another corpus.
    """
    labels = labels or [f'{i}:{r.method}' for i, r in enumerate(rankings)]
    excluded = {}
    carved = set()
    for label, ranking in zip(labels, rankings):
        if ranking.corpus_checksum != corpus.checksum:
            raise CorpusMismatchError(
                label,
                ranking.corpus_checksum,
                corpus.checksum,
                )
        train, valid = ranking.train_valid_split(split)
        excluded[label] = train + valid
        carved.update(train)
        carved.update(valid)

    included = [lid for lid in corpus.line_ids if lid not in carved]
    log.info(S(
        '{} test lines after carving {} experiments',
        len(included),
        len(excluded),
        ))
    return TestSetSpec(included, excluded, corpus.checksum)
