"""
Per-sentence score functions.

Notation: ``F`` is the frequency table of the reference language over its
full text, ``L`` the number of tokens of the scored line and ``J`` the
highest n-gram order. An n-gram is *unknown* while it is absent from the
covered set of its order.

* ``S``      sum of ``F`` over unknown words
* ``SN``     ``S / L``
* ``SNG_J``  sum of ``F`` over unknown n-grams of orders 1..J, over ``L``
* ``ENT``    ``H_c - I_l H_r - I_r H_l`` with count-based language models

Sums are taken over positions, so a repeated unknown n-gram contributes
once per occurrence. Integer sums are divided once, by ``L``.
"""
from seedcorpus.core.exceptions import (
    LineInChosenSetError,
    OrderExceedsTableError,
    UnknownLineError,
    )


class CoverageState():
    """
    Lines selected so far and the n-grams they cover.

    Parameters
    ----------
    max_order : int
        Selecting a line covers its n-grams of orders 1..max_order.
    """

    def __init__(self, max_order):
        self.max_order = max_order
        self.selected = []
        self.covered = {j: set() for j in range(1, max_order + 1)}
        self.words_used = 0

    def add(self, line, words=None):
        """
        Select `line` and cover its n-grams.

        Parameters
        ----------
        line : TokenizedLine
        words : int, optional
            Budget words charged for the line; defaults to its length.
        """
        self.selected.append(line.line_id)
        for j in range(1, self.max_order + 1):
            self.covered[j].update(line.ngrams(j))
        self.words_used += line.length if words is None else words
        return self

    def is_known(self, gram):
        """Whether `gram` is covered."""
        gram = tuple(gram)
        return gram in self.covered.get(len(gram), ())


def _unknown_sum(line, F, cov, J):
    covered = cov.covered
    total = 0
    for j in range(1, J + 1):
        known = covered.get(j, ())
        for gram in line.ngrams(j):
            if gram not in known:
                total += F(gram)
    return total


def score_s(line, F, cov):
    """Frequency sum of unknown words."""
    return float(_unknown_sum(line, F, cov, 1))


def score_sn(line, F, cov):
    """:func:`score_s` normalized by the line length; 0 for empty lines."""
    if line.length == 0:
        return 0.0
    return _unknown_sum(line, F, cov, 1) / line.length


def score_sng(line, F, cov, J):
    """
    Normalized frequency sum of unknown n-grams of orders 1 to `J`.

    Raises
    ------
    OrderExceedsTableError
        If `J` is above the order of `F`.
    """
    if J > F.max_order:
        raise OrderExceedsTableError(J, F.max_order)
    if line.length == 0:
        return 0.0
    return _unknown_sum(line, F, cov, J) / line.length


def cross_entropy(lm, line):
    """Cross entropy of `line` under `lm` in bits per token."""
    return lm.cross_entropy(line)


class EntPartition():
    """
    Chosen, left and right line sets of the entropy scorer.

    Parameters
    ----------
    chosen, left, right : iterable of line ids
    """

    def __init__(self, chosen, left, right):
        self.c = frozenset(chosen)
        self.l = frozenset(left)  # noqa: E741
        self.r = frozenset(right)


def make_partition(line_ids, chosen):
    """
    Split the lines not in `chosen` into two halves, in corpus order.

    The first half (one longer when the count is odd) is the left set.
    """
    chosen = set(chosen)
    remaining = [lid for lid in line_ids if lid not in chosen]
    half = (len(remaining) + 1) // 2
    return EntPartition(chosen, remaining[:half], remaining[half:])


def score_ent(line, part, lm_c, lm_l, lm_r):
    """
    Entropy score of a line.

    ``H_c - H_r`` for left lines and ``H_c - H_l`` for right lines: the
    line is scored against the half it was not trained on.
    """
    if line.line_id in part.c:
        raise LineInChosenSetError(line.line_id)
    h_c = lm_c.cross_entropy(line)
    if line.line_id in part.l:
        return h_c - lm_r.cross_entropy(line)
    if line.line_id in part.r:
        return h_c - lm_l.cross_entropy(line)
    raise UnknownLineError(line.line_id)
