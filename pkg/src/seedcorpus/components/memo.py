"""
Relaxed memoization of the languages x sentences score matrix.

Each reference language is encoded once: every n-gram up to the method
order gets an integer id, lines become runs of ids (CSR layout) and an
inverted index maps every id to the lines that contain it. Scores of the
n-gram methods are integer sums of ``F`` over uncovered ids, divided once
by the line length.

After a pick only the lines sharing a newly covered n-gram with the
picked line go stale; every other entry is reused. Fresh and stale
entries are computed by the same kernel, so a memoized run and a full
rescan produce identical floats.
"""
import numpy as np
from numba import njit

from seedcorpus import log
from seedcorpus.components.corpus import build_frequency_table
from seedcorpus.core.exceptions import UnknownLineError
from seedcorpus.libs.libmulticore import pool_function
from seedcorpus.logger import S, report_on_crash


@njit(nogil=True)
def score_columns(offsets, grams, freq, covered, lengths, cols, normalize, out):  # noqa: E501
    """Write the score of every line in `cols` into `out`."""
    for k in range(cols.shape[0]):
        c = cols[k]
        total = 0
        for p in range(offsets[c], offsets[c + 1]):
            g = grams[p]
            if not covered[g]:
                total += freq[g]
        if normalize:
            if lengths[c] > 0:
                out[c] = total / lengths[c]
            else:
                out[c] = 0.0
        else:
            out[c] = float(total)


class EncodedLanguage():
    """
    Integer encoding of one language's n-grams up to `order`.

    Attributes
    ----------
    gram_ids : dict
        N-gram tuple to integer id.
    freq : np.ndarray
        ``F`` per id, taken from the frequency table.
    offsets, grams : np.ndarray
        CSR layout: the ids of line ``c`` are
        ``grams[offsets[c]:offsets[c + 1]]``, by order then position.
    lengths : np.ndarray
        Token count per line.
    post_offsets, post_lines : np.ndarray
        Inverted index: the lines containing id ``g`` are
        ``post_lines[post_offsets[g]:post_offsets[g + 1]]``.
    """

    def __init__(self, corpus, lang, order, table=None):
        self.lang = lang
        self.order = order
        self.table = table or build_frequency_table(corpus, lang, order)

        gram_ids = {}
        line_grams = []
        lengths = []
        for line in corpus.tokenized(lang):
            ids = []
            for j in range(1, order + 1):
                for gram in line.ngrams(j):
                    gid = gram_ids.get(gram)
                    if gid is None:
                        gid = gram_ids[gram] = len(gram_ids)
                    ids.append(gid)
            line_grams.append(ids)
            lengths.append(line.length)

        self.gram_ids = gram_ids
        self.ngrams_total = len(gram_ids)
        self.nlines = len(line_grams)
        self.lengths = np.asarray(lengths, dtype=np.int64)

        sizes = np.fromiter((len(i) for i in line_grams), dtype=np.int64, count=self.nlines)  # noqa: E501
        self.offsets = np.zeros(self.nlines + 1, dtype=np.int64)
        np.cumsum(sizes, out=self.offsets[1:])
        self.grams = np.fromiter(
            (g for ids in line_grams for g in ids),
            dtype=np.int64,
            count=int(self.offsets[-1]),
            )

        self.freq = np.zeros(self.ngrams_total, dtype=np.int64)
        for gram, gid in gram_ids.items():
            self.freq[gid] = self.table(gram)

        self._build_inverted_index(sizes)

    def _build_inverted_index(self, sizes):
        line_of = np.repeat(np.arange(self.nlines, dtype=np.int64), sizes)
        pairs = np.unique(self.grams * max(self.nlines, 1) + line_of)
        post_grams = pairs // max(self.nlines, 1)
        self.post_lines = pairs % max(self.nlines, 1)
        self.post_offsets = np.searchsorted(
            post_grams,
            np.arange(self.ngrams_total + 1, dtype=np.int64),
            )

    def line_grams(self, c):
        """Ids of line position `c`."""
        return self.grams[self.offsets[c]:self.offsets[c + 1]]

    def lines_with(self, gram_ids):
        """Sorted unique positions of the lines containing any of `gram_ids`."""  # noqa: E501
        if len(gram_ids) == 0:
            return np.empty(0, dtype=np.int64)
        chunks = [
            self.post_lines[self.post_offsets[g]:self.post_offsets[g + 1]]
            for g in gram_ids
            ]
        return np.unique(np.concatenate(chunks))


class ScoreMatrix():
    """
    Memoized scores of every reference language for every line.

    Parameters
    ----------
    encodings : dict
        Language code to :class:`EncodedLanguage`, all over one corpus.
    line_ids : list
        Corpus line ids, in corpus order.
    normalize : bool
        Divide by the line length (SN, SNG) or not (S).
    ncores : int
        Workers for row refreshes; results do not depend on it.
    """

    def __init__(self, encodings, line_ids, normalize=True, ncores=1):
        self.rows = sorted(encodings)
        self.cols = list(line_ids)
        self.encodings = encodings
        self.normalize = normalize
        self.ncores = ncores
        self._col_pos = {lid: i for i, lid in enumerate(self.cols)}

        ncols = len(self.cols)
        self.values = np.zeros((len(self.rows), ncols), dtype=np.float64)
        self.selected = np.zeros(ncols, dtype=np.bool_)
        self.covered = {
            lang: np.zeros(encodings[lang].ngrams_total, dtype=np.bool_)
            for lang in self.rows
            }
        # every entry starts stale
        self.dirty = {lang: np.ones(ncols, dtype=np.bool_) for lang in self.rows}  # noqa: E501
        self.refreshed = 0

    def row_index(self, lang):
        """Row number of `lang`."""
        return self.rows.index(lang)

    def position(self, line_id):
        """Column of `line_id`."""
        try:
            return self._col_pos[line_id]
        except KeyError:
            raise UnknownLineError(line_id)

    def _refresh_row(self, r):
        lang = self.rows[r]
        enc = self.encodings[lang]
        cols = np.flatnonzero(self.dirty[lang] & ~self.selected)
        if cols.size:
            score_columns(
                enc.offsets,
                enc.grams,
                enc.freq,
                self.covered[lang],
                enc.lengths,
                cols,
                self.normalize,
                self.values[r],
                )
        self.dirty[lang][:] = False
        return int(cols.size)

    def refresh(self):
        """
        Recompute the stale entries of every row.

        Rows are independent: they are refreshed concurrently and the
        result does not depend on the number of workers.
        """
        execute = _RowRefresher(self)
        counts = pool_function(execute, range(len(self.rows)), ncores=self.ncores)  # noqa: E501
        n = sum(counts)
        self.refreshed += n
        return n

    def recompute(self):
        """Mark every entry stale and refresh: the naive full rescan."""
        for lang in self.rows:
            self.dirty[lang][:] = True
        return self.refresh()

    def memo_update(self, picked):
        """
        Select `picked`, cover its n-grams and mark affected lines stale.

        A line goes stale in a row when it shares at least one n-gram
        with `picked` that was not covered before in that row's language.

        Returns
        -------
        dict
            Language code to the sorted positions marked stale.
        """
        c = self.position(picked)
        self.selected[c] = True
        self.values[:, c] = 0.0

        stale = {}
        for lang in self.rows:
            enc = self.encodings[lang]
            covered = self.covered[lang]
            grams = np.unique(enc.line_grams(c))
            new = grams[~covered[grams]]
            covered[new] = True
            lines = enc.lines_with(new)
            lines = lines[~self.selected[lines]]
            self.dirty[lang][lines] = True
            stale[lang] = lines
        log.debug(S(
            'picked {}: {} stale entries',
            picked,
            sum(v.size for v in stale.values()),
            ))
        return stale

    def row(self, lang):
        """Current scores of `lang`."""
        return self.values[self.row_index(lang)]


class _RowRefresher():
    """Picklable row refresh task, crash reports enabled."""

    def __init__(self, matrix):
        self.matrix = matrix

    def __call__(self, r):
        return report_on_crash(self.matrix._refresh_row, r)


def encode_languages(corpus, langs, order, ncores=1):
    """Encode `langs` of `corpus` up to `order`, concurrently per language."""
    langs = sorted(set(langs))
    for lang in langs:
        corpus.check_language(lang)
        corpus.tokenized(lang)

    def encode(lang):
        return EncodedLanguage(corpus, lang, order)

    return dict(zip(langs, pool_function(encode, langs, ncores=ncores)))
