"""
Rankings emitted to translators.

File format, tab separated, UTF-8, ``\\n`` line ends::

    # method: sng
    # params: order=4
    # budget: 25695
    # budget_language: eng
    # corpus_checksum: 3f5a...
    # seed: none
    # rng: none
    # pool: eng
    # split: 3.0/0.2
    # exhausted: false
    rank	line_id	score	cum_words
    1	LUK 1:1	12.5	23

Scores are written with ``repr`` so that reading them back gives the
same floats on every platform.
"""
from collections import namedtuple

import pandas as pd

from seedcorpus.components import train_split
from seedcorpus.libs.libio import check_file_exists, write_atomic


RankEntry = namedtuple('RankEntry', ['rank', 'line_id', 'score', 'cum_words'])

columns = ('rank', 'line_id', 'score', 'cum_words')
header_keys = (
    'method',
    'params',
    'budget',
    'budget_language',
    'corpus_checksum',
    'seed',
    'rng',
    'pool',
    'split',
    'exhausted',
    )


class Ranking():
    """
    Ordered selection of lines under a word budget.

    Parameters
    ----------
    method : str
    params : dict
        Method parameters echoed in the header.
    budget : int
    budget_language : str
    corpus_checksum : str
    seed : int, optional
    rng : str, optional
        Name of the generator used, for random rankings.
    pool : list of str
        Reference languages whose scores drove the ranking.
    split : tuple
        Train and valid percentages used to split the ranking.
    """

    def __init__(
            self,
            method,
            budget,
            budget_language,
            corpus_checksum,
            params=None,
            seed=None,
            rng=None,
            pool=(),
            split=train_split[:2],
            ):
        self.method = method
        self.params = dict(params or {})
        self.budget = budget
        self.budget_language = budget_language
        self.corpus_checksum = corpus_checksum
        self.seed = seed
        self.rng = rng
        self.pool = list(pool)
        self.split = tuple(float(s) for s in split)
        self.entries = []
        self.exhausted = False

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def cum_words(self):
        """Words used so far."""
        return self.entries[-1].cum_words if self.entries else 0

    @property
    def line_ids(self):
        """Selected line ids in rank order."""
        return [e.line_id for e in self.entries]

    @property
    def met(self):
        """Whether the budget is reached."""
        return self.cum_words >= self.budget

    def add(self, line_id, score, words):
        """Append a line charged `words` budget words."""
        entry = RankEntry(
            len(self.entries) + 1,
            line_id,
            float(score),
            self.cum_words + int(words),
            )
        self.entries.append(entry)
        return entry

    def check(self):
        """
        Assert the ranking invariants.

        Ranks are contiguous, cumulative words strictly increase and only
        the last entry reaches the budget (unless the corpus ran out).
        """
        for i, e in enumerate(self.entries):
            assert e.rank == i + 1, f'rank gap at {e.rank}'
            if i:
                assert e.cum_words > self.entries[i - 1].cum_words, \
                    f'cumulative words not increasing at rank {e.rank}'
        if len(self.entries) > 1:
            assert self.entries[-2].cum_words < self.budget
        if not self.exhausted and self.entries:
            assert self.entries[-1].cum_words >= self.budget
        return True

    def header(self):
        """Header fields, in file order."""
        params = ';'.join(f'{k}={v}' for k, v in sorted(self.params.items()))
        return {
            'method': self.method,
            'params': params or 'none',
            'budget': str(self.budget),
            'budget_language': self.budget_language,
            'corpus_checksum': self.corpus_checksum,
            'seed': 'none' if self.seed is None else str(self.seed),
            'rng': self.rng or 'none',
            'pool': ';'.join(self.pool) or 'none',
            'split': '/'.join(str(s) for s in self.split),
            'exhausted': 'true' if self.exhausted else 'false',
            }

    def train_valid_split(self, split=None):
        """
        Split the ranked lines into train and valid ids.

        The valid share of the seed corpus is ``valid / (train + valid)``
        of its lines, rounded, at least one line when the ranking has two
        or more; valid lines are taken from the end of the ranking.
        """
        ids = self.line_ids
        train_pct, valid_pct = split or self.split
        if len(ids) < 2 or valid_pct <= 0:
            return ids, []
        nvalid = round(len(ids) * valid_pct / (train_pct + valid_pct))
        nvalid = min(max(nvalid, 1), len(ids) - 1)
        return ids[:-nvalid], ids[-nvalid:]


def format_ranking(ranking):
    """Render `ranking` in the ranking file format."""
    out = [f'# {k}: {v}' for k, v in ranking.header().items()]
    out.append('\t'.join(columns))
    for e in ranking.entries:
        out.append(f'{e.rank}\t{e.line_id}\t{e.score!r}\t{e.cum_words}')
    return '\n'.join(out) + '\n'


def write_ranking(ranking, fpath):
    """Write `ranking` to `fpath` atomically."""
    return write_atomic(fpath, format_ranking(ranking))


def read_ranking(fpath):
    """Read a ranking file written by :func:`write_ranking`."""
    fpath = check_file_exists(fpath)
    header = {}
    nheader = 0
    with open(fpath, encoding='utf-8') as fin:
        for line in fin:
            if not line.startswith('# '):
                break
            key, _, value = line[2:].rstrip('\n').partition(': ')
            header[key] = value
            nheader += 1

    df = pd.read_csv(
        fpath,
        sep='\t',
        skiprows=nheader,
        dtype={'line_id': str},
        keep_default_na=False,
        )

    params = {}
    if header.get('params', 'none') != 'none':
        for kv in header['params'].split(';'):
            k, _, v = kv.partition('=')
            params[k] = v

    seed = header.get('seed', 'none')
    pool = header.get('pool', 'none')
    ranking = Ranking(
        header.get('method'),
        int(header.get('budget', 0)),
        header.get('budget_language'),
        header.get('corpus_checksum'),
        params=params,
        seed=None if seed == 'none' else int(seed),
        rng=None if header.get('rng', 'none') == 'none' else header['rng'],
        pool=[] if pool == 'none' else pool.split(';'),
        split=tuple(float(s) for s in header.get('split', '3.0/0.2').split('/')),  # noqa: E501
        )
    ranking.exhausted = header.get('exhausted') == 'true'
    for row in df.itertuples(index=False):
        ranking.entries.append(RankEntry(
            int(row.rank),
            str(row.line_id),
            float(row.score),
            int(row.cum_words),
            ))
    return ranking
