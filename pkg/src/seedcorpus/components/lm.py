"""
Count-based n-gram language models for the entropy scorers.

Three smoothings are available:

* ``mle``: raw relative frequencies, backing off to shorter contexts
  only when a context was never observed. Unseen words get zero mass.
* ``laplace``: add-one over the vocabulary (plus ``<unk>``).
* ``absdiscount``: interpolated absolute discounting down to a uniform
  distribution over the vocabulary (plus ``<unk>``).

Contexts are padded with ``<s>`` at the start of a line; ``<s>`` is never
predicted and there is no end-of-line event.
"""
import math
from collections import Counter, defaultdict

from seedcorpus.components import (
    bos_token,
    default_discount,
    smoothing_absdiscount,
    smoothing_laplace,
    smoothing_mle,
    smoothings,
    unk_token,
    )
from seedcorpus.core.exceptions import (
    EmptyTrainingSetError,
    InvalidParameterError,
    )


class NgramLm():
    """
    N-gram language model over word tokens.

    Parameters
    ----------
    order : int
        Highest n-gram order, at least 1.
    smoothing : str
        One of ``mle``, ``laplace`` or ``absdiscount``.
    discount : float
        Absolute discount ``D`` in ``(0, 1)``; only for ``absdiscount``.
    """

    def __init__(self, order, smoothing=smoothing_absdiscount, discount=default_discount):  # noqa: E501
        if order < 1:
            raise InvalidParameterError('model order', order, 'at least 1')
        if smoothing not in smoothings:
            raise InvalidParameterError('smoothing', smoothing, 'a known one')
        if not 0 < discount < 1:
            raise InvalidParameterError('discount', discount, 'in (0, 1)')

        self.order = order
        self.smoothing = smoothing
        self.discount = discount

        # counts[k][context] -> Counter of next tokens, len(context) == k - 1
        self.counts = {k: defaultdict(Counter) for k in range(1, order + 1)}
        self.context_totals = {k: Counter() for k in range(1, order + 1)}
        self.vocab = set()
        self.ntokens = 0

    def update(self, lines):
        """Add the n-gram counts of `lines` (token sequences)."""
        pad = (bos_token,) * (self.order - 1)
        for line in lines:
            tokens = getattr(line, 'tokens', line)
            if not tokens:
                continue
            self.vocab.update(tokens)
            self.ntokens += len(tokens)
            padded = pad + tuple(tokens)
            for i in range(len(pad), len(padded)):
                w = padded[i]
                for k in range(1, self.order + 1):
                    ctx = padded[i - k + 1:i]
                    self.counts[k][ctx][w] += 1
                    self.context_totals[k][ctx] += 1
        return self

    @property
    def vocab_size(self):
        """Size of the predicted vocabulary, ``<unk>`` included."""
        return len(self.vocab) + 1

    def _map(self, token):
        return token if token in self.vocab or token == bos_token else unk_token

    def prob(self, word, context=()):
        """
        Return ``P(word | context)``.

        Only the last ``order - 1`` context tokens are used; out of
        vocabulary tokens map to ``<unk>``.
        """
        word = self._map(word)
        context = tuple(self._map(t) for t in context)
        if self.order > 1:
            context = context[-(self.order - 1):]
        else:
            context = ()

        if self.smoothing == smoothing_mle:
            return self._prob_mle(word, context)
        if self.smoothing == smoothing_laplace:
            return self._prob_laplace(word, context)
        return self._prob_absdiscount(word, context)

    def _prob_mle(self, word, context):
        while True:
            k = len(context) + 1
            total = self.context_totals[k].get(context, 0)
            if total > 0 or not context:
                break
            context = context[1:]
        if total == 0:
            return 0.0
        return self.counts[k][context].get(word, 0) / total

    def _prob_laplace(self, word, context):
        k = len(context) + 1
        total = self.context_totals[k].get(context, 0)
        c = self.counts[k][context].get(word, 0) if total else 0
        return (c + 1) / (total + self.vocab_size)

    def _prob_absdiscount(self, word, context):
        d = self.discount
        p = 1.0 / self.vocab_size
        # from the empty context up to the full one
        for start in range(len(context), -1, -1):
            ctx = context[start:]
            k = len(ctx) + 1
            total = self.context_totals[k].get(ctx, 0)
            if total == 0:
                continue
            followers = self.counts[k][ctx]
            c = followers.get(word, 0)
            p = max(c - d, 0.0) / total + d * len(followers) / total * p
        return p

    def cross_entropy(self, line):
        """Cross entropy of `line` in bits per token; 0 for empty lines."""
        tokens = getattr(line, 'tokens', line)
        if not tokens:
            return 0.0
        pad = (bos_token,) * (self.order - 1)
        padded = pad + tuple(tokens)
        logsum = 0.0
        for i in range(len(pad), len(padded)):
            p = self.prob(padded[i], padded[max(0, i - self.order + 1):i])
            if p <= 0.0:
                return math.inf
            logsum += math.log2(p)
        return -logsum / len(tokens)

    def perplexity(self, lines):
        """Token-weighted perplexity over `lines`."""
        bits = 0.0
        n = 0
        for line in lines:
            tokens = getattr(line, 'tokens', line)
            if not tokens:
                continue
            bits += self.cross_entropy(tokens) * len(tokens)
            n += len(tokens)
        if n == 0:
            return 1.0
        return 2.0 ** (bits / n)

    def contexts(self, k=None):
        """Observed contexts, optionally only those of n-gram order `k`."""
        orders = [k] if k is not None else range(1, self.order + 1)
        for j in orders:
            yield from (c for c, t in self.context_totals[j].items() if t > 0)

    def predicted_vocab(self):
        """Every token the model assigns mass to, ``<unk>`` included."""
        return sorted(self.vocab) + [unk_token]


def train_lm(lines, order, smoothing=smoothing_absdiscount, discount=default_discount):  # noqa: E501
    """
    Train an :class:`NgramLm` on `lines`.

    Raises
    ------
    EmptyTrainingSetError
        If `lines` hold no tokens and the smoothing is not ``mle``.
    """
    lm = NgramLm(order, smoothing=smoothing, discount=discount).update(lines)
    if lm.ntokens == 0 and smoothing != smoothing_mle:
        raise EmptyTrainingSetError(smoothing)
    return lm
