"""
Budgeted seed-corpus selection.

Greedy methods score every unselected line, take the best one (ties go to
the line that comes first in the corpus), cover its n-grams and repeat
until the word budget is met. The line that crosses the budget is kept.

Words are counted in the budget language; lines with no words in that
language never enter a ranking.
"""
import numpy as np

from seedcorpus import log
from seedcorpus.components import (
    agg_method_policy,
    aggregation_methods,
    baseline_methods,
    default_agg_order,
    default_discount,
    default_pool_k,
    default_seed,
    default_sng_order,
    entropy_methods,
    entropy_settings,
    max_ngram_order,
    method_luke,
    method_names,
    method_rand,
    method_s,
    method_sn,
    method_sng,
    progress_every,
    rng_name,
    smoothing_absdiscount,
    span_luke,
    warm_start_lines,
    )
from seedcorpus.components.aggregation import LanguagePool, aggregate_scores
from seedcorpus.components.corpus import resolve_span
from seedcorpus.components.lm import NgramLm, train_lm
from seedcorpus.components.memo import ScoreMatrix, encode_languages
from seedcorpus.components.ranking import Ranking
from seedcorpus.components.scoring import make_partition
from seedcorpus.core.exceptions import (
    BudgetError,
    EmptyTrainingSetError,
    InvalidParameterError,
    UnknownMethodError,
    )
from seedcorpus.logger import S, T


kind_baseline = 'baseline'
kind_ngram = 'ngram'
kind_entropy = 'entropy'
kind_aggregation = 'aggregation'


class MethodConfig():
    """
    A selection method and its parameters.

    Build it with :func:`make_method`.
    """

    def __init__(
            self,
            name,
            kind,
            order=1,
            normalize=True,
            policy=None,
            k=None,
            smoothing=None,
            order_c=None,
            order_lr=None,
            discount=default_discount,
            warm_start=warm_start_lines,
            ):
        self.name = name
        self.kind = kind
        self.order = order
        self.normalize = normalize
        self.policy = policy
        self.k = k
        self.smoothing = smoothing
        self.order_c = order_c
        self.order_lr = order_lr
        self.discount = discount
        self.warm_start = warm_start

    @property
    def label(self):
        """Method name as written in ranking headers."""
        if self.name == method_sng:
            return f'{method_sng}{self.order}'
        return self.name

    @property
    def params(self):
        """Parameters echoed in ranking headers."""
        if self.kind == kind_ngram and self.name == method_sng:
            return {'order': self.order}
        if self.kind == kind_aggregation:
            return {'order': self.order, 'policy': self.policy, 'k': self.k}
        if self.kind == kind_entropy:
            params = {
                'smoothing': self.smoothing,
                'order_c': self.order_c,
                'order_lr': self.order_lr,
                'warm_start': self.warm_start,
                }
            if self.smoothing == smoothing_absdiscount:
                params['discount'] = self.discount
            return params
        return {}

    def __repr__(self):
        return f'MethodConfig({self.label!r}, {self.params})'


def _check_order(J):
    if not 1 <= J <= max_ngram_order:
        raise InvalidParameterError(
            'n-gram order', J, f'within 1 and {max_ngram_order}',
            )


def make_method(name, order=None, k=default_pool_k, discount=default_discount):
    """
    Configure a selection method by name.

    Parameters
    ----------
    name : str
        One of ``luke``, ``rand``, ``s``, ``sn``, ``sng2`` to ``sng5``,
        ``entN``, ``entK``, ``aggL``, ``aggF``, ``aggP``, ``aggN``. Plain
        ``sng`` takes its order from `order`.
    order : int, optional
        N-gram order of ``sng`` and the aggregated methods.
    k : int
        Pool size of ``aggF`` and ``aggP``.
    discount : float
        Absolute discount of ``entK``.

    Raises
    ------
    UnknownMethodError
    InvalidParameterError
        If the order or the pool size is out of range.
    """
    if isinstance(name, MethodConfig):
        return name

    if name in baseline_methods:
        return MethodConfig(name, kind_baseline)

    if name == method_s:
        return MethodConfig(name, kind_ngram, order=1, normalize=False)

    if name == method_sn:
        return MethodConfig(name, kind_ngram, order=1, normalize=True)

    if name == method_sng:
        J = default_sng_order if order is None else order
        _check_order(J)
        return MethodConfig(method_sng, kind_ngram, order=J)

    if name.startswith(method_sng):
        suffix = name[len(method_sng):]
        J = int(suffix) if suffix.isdigit() else 0
        if 1 <= J <= max_ngram_order:
            return MethodConfig(method_sng, kind_ngram, order=J)

    if name in entropy_methods:
        smoothing, order_c, order_lr = entropy_settings[name]
        return MethodConfig(
            name,
            kind_entropy,
            smoothing=smoothing,
            order_c=order_c,
            order_lr=order_lr,
            discount=discount,
            )

    if name in aggregation_methods:
        J = default_agg_order if order is None else order
        _check_order(J)
        if k is not None and k < 1:
            raise InvalidParameterError('pool size', k, 'at least 1')
        return MethodConfig(
            name,
            kind_aggregation,
            order=J,
            policy=agg_method_policy[name],
            k=k,
            )

    raise UnknownMethodError(name, ', '.join(method_names))


def _check_budget(budget):
    if budget is None or budget <= 0:
        raise BudgetError(budget)


def _budget_words(corpus, budget_language):
    words = np.asarray(corpus.word_counts(budget_language), dtype=np.int64)
    return words, words > 0


def _set_exhausted(ranking):
    ranking.exhausted = True
    log.warning(S(
        'corpus exhausted before the budget: {} of {} words in {} lines',
        ranking.cum_words,
        ranking.budget,
        len(ranking),
        ))


def _log_progress(ranking, refreshed=None):
    if len(ranking) % progress_every:
        return
    if refreshed is None:
        log.info(S('{} lines, {} words', len(ranking), ranking.cum_words))
    else:
        log.info(S(
            '{} lines, {} words, {} entries refreshed',
            len(ranking),
            ranking.cum_words,
            refreshed,
            ))


def _greedy_loop(matrix, ranking, words, eligible, memoize=True, max_picks=None):  # noqa: E501
    """
    Pick lines from `matrix` into `ranking` until the budget is met.

    Returns the number of picks.
    """
    line_ids = matrix.cols
    picks = 0
    while not ranking.met:
        if max_picks is not None and picks >= max_picks:
            break

        if memoize:
            matrix.refresh()
        else:
            matrix.recompute()

        available = np.flatnonzero(eligible & ~matrix.selected)
        if available.size == 0:
            _set_exhausted(ranking)
            break

        combined = aggregate_scores(matrix, matrix.rows)
        best = int(available[np.argmax(combined[available])])
        ranking.add(line_ids[best], combined[best], words[best])
        matrix.memo_update(line_ids[best])
        picks += 1
        _log_progress(ranking, matrix.refreshed)

    return picks


def _new_ranking(corpus, method, budget, budget_language, pool=()):
    return Ranking(
        method.label,
        budget,
        budget_language,
        corpus.checksum,
        params=method.params,
        pool=sorted(pool),
        )


def select_greedy(
        corpus,
        ref_langs,
        method,
        budget,
        budget_language=None,
        ncores=1,
        memoize=True,
        ):
    """
    Greedy budgeted selection driven by reference-language scores.

    Parameters
    ----------
    corpus : :class:`~seedcorpus.components.corpus.ParallelCorpus`
    ref_langs : list of str or :class:`LanguagePool`
        Reference languages; their scores are summed per line.
    method : str or :class:`MethodConfig`
        Any n-gram, entropy or aggregated method.
    budget : int
        Word budget, counted in `budget_language`.
    budget_language : str, optional
        Defaults to the first reference language.
    ncores : int
        Workers refreshing score-matrix rows. Results do not depend on it.
    memoize : bool
        Refresh only the entries a pick made stale. ``False`` rescans
        every entry at every step.

    Returns
    -------
    :class:`Ranking`

    Raises
    ------
    BudgetError
        If `budget` is not positive.
    UnknownMethodError
        For the baselines, which are not greedy.
    """
    method = make_method(method)
    if method.kind == kind_baseline:
        raise UnknownMethodError(
            method.name,
            ', '.join(m for m in method_names if m not in baseline_methods),
            )

    ref_langs = list(ref_langs)
    if not ref_langs:
        raise InvalidParameterError(
            'reference languages', 'none', 'one or more',
            )
    for lang in ref_langs:
        corpus.check_language(lang)
    _check_budget(budget)
    budget_language = budget_language or ref_langs[0]
    corpus.check_language(budget_language)

    if method.kind == kind_entropy:
        return _select_entropy(
            corpus,
            ref_langs,
            method,
            budget,
            budget_language,
            ncores=ncores,
            )

    log.info(T('greedy selection with {}', method.label))
    log.info(S('reference languages: {}', ' '.join(sorted(ref_langs))))
    log.info(S('budget: {} words of {}', budget, budget_language))

    words, eligible = _budget_words(corpus, budget_language)
    ranking = _new_ranking(corpus, method, budget, budget_language, ref_langs)

    encodings = encode_languages(corpus, ref_langs, method.order, ncores=ncores)  # noqa: E501
    matrix = ScoreMatrix(
        encodings,
        corpus.line_ids,
        normalize=method.normalize,
        ncores=ncores,
        )
    _greedy_loop(matrix, ranking, words, eligible, memoize=memoize)

    log.info(S(
        'selected {} lines, {} words, {} entries refreshed',
        len(ranking),
        ranking.cum_words,
        matrix.refreshed,
        ))
    return ranking


def _fit(lines, order, smoothing, discount):
    try:
        return train_lm(lines, order, smoothing=smoothing, discount=discount)
    except EmptyTrainingSetError:
        # an empty half scores every line as fully predictable
        log.debug(S('empty training set for an order {} model', order))
        return NgramLm(order, smoothing=smoothing, discount=discount)


def _select_entropy(corpus, ref_langs, method, budget, budget_language, ncores=1):  # noqa: E501
    """
    Entropy selection.

    Up to ``warm_start`` lines are picked by SN first. The remaining lines
    are then split in corpus order into a left and a right half; a line
    scores ``H_c - H_r`` if it is left and ``H_c - H_l`` if it is right,
    summed over reference languages. The chosen-set model is updated after
    every pick; the half models and their entropies are computed once.
    """
    log.info(T('entropy selection with {}', method.label))
    words, eligible = _budget_words(corpus, budget_language)
    ranking = _new_ranking(corpus, method, budget, budget_language, ref_langs)
    langs = sorted(set(ref_langs))

    encodings = encode_languages(corpus, langs, 1, ncores=ncores)
    warm = ScoreMatrix(encodings, corpus.line_ids, normalize=True, ncores=ncores)  # noqa: E501
    _greedy_loop(warm, ranking, words, eligible, max_picks=method.warm_start)
    log.info(S('warm start picked {} lines', len(ranking)))
    if ranking.met or ranking.exhausted:
        return ranking

    part = make_partition(corpus.line_ids, ranking.line_ids)
    log.info(S('partition: {} left, {} right', len(part.l), len(part.r)))

    lms_c = {}
    other = {}
    for lang in langs:
        lines = corpus.tokenized(lang)
        fit_args = (method.smoothing, method.discount)
        lm_l = _fit([t for t in lines if t.line_id in part.l], method.order_lr, *fit_args)  # noqa: E501
        lm_r = _fit([t for t in lines if t.line_id in part.r], method.order_lr, *fit_args)  # noqa: E501
        lms_c[lang] = _fit([t for t in lines if t.line_id in part.c], method.order_c, *fit_args)  # noqa: E501

        h_other = np.zeros(len(lines), dtype=np.float64)
        for c, line in enumerate(lines):
            if line.line_id in part.l:
                h_other[c] = lm_r.cross_entropy(line)
            elif line.line_id in part.r:
                h_other[c] = lm_l.cross_entropy(line)
        other[lang] = h_other

    selected = warm.selected.copy()
    while not ranking.met:
        available = np.flatnonzero(eligible & ~selected)
        if available.size == 0:
            _set_exhausted(ranking)
            break

        scores = np.zeros(available.size, dtype=np.float64)
        for lang in langs:
            lines = corpus.tokenized(lang)
            lm_c = lms_c[lang]
            h_c = np.fromiter(
                (lm_c.cross_entropy(lines[c]) for c in available),
                dtype=np.float64,
                count=available.size,
                )
            scores += h_c - other[lang][available]

        k = int(np.argmax(scores))
        best = int(available[k])
        ranking.add(corpus.line_ids[best], scores[k], words[best])
        selected[best] = True
        for lang in langs:
            lms_c[lang].update([corpus.tokenized(lang)[best]])
        _log_progress(ranking)

    log.info(S('selected {} lines, {} words', len(ranking), ranking.cum_words))
    return ranking


def select_random(corpus, budget, rng_seed=default_seed, budget_language=None):  # noqa: E501
    """
    Random baseline: lines in a seeded uniform permutation.

    The permutation comes from ``numpy.random.Generator`` over the
    counter-based ``Philox`` bit generator seeded with `rng_seed`; both
    are recorded in the ranking header.
    """
    _check_budget(budget)
    budget_language = budget_language or corpus.languages[0]
    corpus.check_language(budget_language)
    log.info(T('random selection with seed {}', rng_seed))

    words, eligible = _budget_words(corpus, budget_language)
    ranking = Ranking(
        method_rand,
        budget,
        budget_language,
        corpus.checksum,
        seed=rng_seed,
        rng=rng_name,
        )

    rng = np.random.Generator(np.random.Philox(rng_seed))
    for c in rng.permutation(len(corpus)):
        if ranking.met:
            break
        if eligible[c]:
            ranking.add(corpus.line_ids[c], 0.0, words[c])
    if not ranking.met:
        _set_exhausted(ranking)

    log.info(S('selected {} lines, {} words', len(ranking), ranking.cum_words))
    return ranking


def select_excerpt(corpus, start_line, budget, budget_language=None):
    """
    Excerpt baseline: consecutive lines from `start_line` on.

    Lines without words in `budget_language` are skipped, as in every
    method, so the excerpt is contiguous in corpus order but its line
    ids may have gaps where verses were merged into a neighbour.

    Parameters
    ----------
    start_line : str
        A line id, or a span name whose first line is used (``luke``).
    """
    _check_budget(budget)
    budget_language = budget_language or corpus.languages[0]
    corpus.check_language(budget_language)
    start_line = resolve_span(corpus, start_line)[0]
    start = corpus.position(start_line)
    log.info(T('excerpt selection from {}', start_line))

    words, eligible = _budget_words(corpus, budget_language)
    ranking = Ranking(
        method_luke,
        budget,
        budget_language,
        corpus.checksum,
        params={'start': start_line},
        )

    for c in range(start, len(corpus)):
        if ranking.met:
            break
        if eligible[c]:
            ranking.add(corpus.line_ids[c], 0.0, words[c])
    if not ranking.met:
        _set_exhausted(ranking)

    log.info(S('selected {} lines, {} words', len(ranking), ranking.cum_words))
    return ranking


def select(
        corpus,
        method,
        budget,
        ref_langs=(),
        budget_language=None,
        seed=default_seed,
        start_line=span_luke,
        ncores=1,
        memoize=True,
        ):
    """
    Run any of the selection methods.

    Aggregated methods take their pool as `ref_langs`, usually a
    :class:`LanguagePool` built by
    :func:`~seedcorpus.components.aggregation.build_pool`.
    """
    method = make_method(method)
    if method.name == method_rand:
        return select_random(corpus, budget, seed, budget_language)
    if method.name == method_luke:
        return select_excerpt(corpus, start_line, budget, budget_language)

    ranking = select_greedy(
        corpus,
        ref_langs,
        method,
        budget,
        budget_language=budget_language,
        ncores=ncores,
        memoize=memoize,
        )
    if isinstance(ref_langs, LanguagePool) and ref_langs.target:
        ranking.params['target'] = ref_langs.target
    return ranking
