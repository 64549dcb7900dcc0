"""Test per-sentence score functions."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from seedcorpus.components.corpus import (
    ParallelCorpus,
    build_frequency_table,
    tokenize,
    )
from seedcorpus.components.scoring import (
    CoverageState,
    make_partition,
    score_ent,
    score_s,
    score_sn,
    score_sng,
    )
from seedcorpus.core.exceptions import (
    LineInChosenSetError,
    OrderExceedsTableError,
    UnknownLineError,
    )

from tests.conftest import make_corpus


class FixedLm():
    """Language model stand-in with a fixed cross entropy."""

    def __init__(self, h):
        self.h = h

    def cross_entropy(self, line):
        return self.h


def test_s_and_sn(toy):
    """Test S and SN on `a b`, `c`, `a`."""
    F = build_frequency_table(toy, 'xx', 1)
    cov = CoverageState(1)
    ab, c, a = toy.tokenized('xx')
    assert score_s(ab, F, cov) == 3.0
    assert score_sn(ab, F, cov) == 1.5
    assert score_sn(c, F, cov) == 1.0
    assert score_sn(a, F, cov) == 2.0

    cov.add(ab)
    assert score_s(a, F, cov) == 0.0
    assert score_sn(c, F, cov) == 1.0


def test_sng2():
    """Test unknown unigrams and bigrams of `a b a`."""
    corpus = ParallelCorpus({'xx': ['a b a']})
    F = build_frequency_table(corpus, 'xx', 2)
    line = corpus.tokenized('xx')[0]
    assert score_sng(line, F, CoverageState(2), 2) == pytest.approx(7 / 3)


def test_repeated_ngram_counts_per_position():
    """Test a repeated unknown word contributes once per occurrence."""
    corpus = ParallelCorpus({'xx': ['a a', 'b']})
    F = build_frequency_table(corpus, 'xx', 1)
    assert score_s(corpus.tokenized('xx')[0], F, CoverageState(1)) == 4.0


@settings(max_examples=20, deadline=None)
@given(
    st.integers(min_value=0, max_value=2**16),
    st.floats(min_value=0.0, max_value=0.5),
    )
def test_sng1_equals_sn(seed, covered):
    """Test SNG of order 1 is SN on every line of a large corpus."""
    corpus = make_corpus(nlines=1500, nlangs=1, vocab=300, seed=seed, empty=0.05)  # noqa: E501
    F = build_frequency_table(corpus, 'l0', 1)
    lines = corpus.tokenized('l0')
    cov = CoverageState(1)
    for line in lines[:int(covered * len(lines))]:
        cov.add(line)
    for line in lines:
        assert score_sng(line, F, cov, 1) == score_sn(line, F, cov)


def test_scores_never_increase(synthetic):
    """Test covering more lines never raises a score."""
    F = build_frequency_table(synthetic, 'l1', 3)
    lines = synthetic.tokenized('l1')
    cov = CoverageState(3)
    previous = [score_sng(line, F, cov, 3) for line in lines]
    for picked in lines[:20]:
        cov.add(picked)
        current = [score_sng(line, F, cov, 3) for line in lines]
        assert all(c <= p for c, p in zip(current, previous))
        assert score_sng(picked, F, cov, 3) == 0.0
        previous = current


def test_empty_line_scores_zero():
    """Test a line without tokens."""
    corpus = ParallelCorpus({'xx': ['a', '']})
    F = build_frequency_table(corpus, 'xx', 2)
    empty = corpus.tokenized('xx')[1]
    cov = CoverageState(2)
    assert score_s(empty, F, cov) == 0.0
    assert score_sn(empty, F, cov) == 0.0
    assert score_sng(empty, F, cov, 2) == 0.0


def test_order_exceeds_table():
    """Test asking for an order above the table."""
    corpus = make_corpus(nlines=5, nlangs=1)
    F = build_frequency_table(corpus, 'l0', 2)
    with pytest.raises(OrderExceedsTableError):
        score_sng(corpus.tokenized('l0')[0], F, CoverageState(3), 3)


def test_coverage_state():
    """Test covering a line covers its n-grams of every order."""
    cov = CoverageState(2).add(tokenize('a b', 'x'))
    assert cov.selected == ['x']
    assert cov.words_used == 2
    assert cov.is_known(('a',))
    assert cov.is_known(('a', 'b'))
    assert not cov.is_known(('b', 'a'))
    assert not cov.is_known(('a', 'b', 'c'))


def test_partition_halves():
    """Test the remaining lines split in corpus order."""
    ids = [str(i) for i in range(1, 8)]
    part = make_partition(ids, ['2'])
    assert part.c == {'2'}
    assert part.l == {'1', '3', '4'}
    assert part.r == {'5', '6', '7'}

    part = make_partition(ids, ['2', '3'])
    assert part.l == {'1', '4', '5'}
    assert part.r == {'6', '7'}


def test_score_ent():
    """Test left lines use the right model and the other way round."""
    part = make_partition(['1', '2', '3'], ['1'])
    lm_c, lm_l, lm_r = FixedLm(4.0), FixedLm(3.0), FixedLm(1.5)
    assert score_ent(tokenize('a', '2'), part, lm_c, lm_l, lm_r) == 2.5
    assert score_ent(tokenize('a', '3'), part, lm_c, lm_l, lm_r) == 1.0
    with pytest.raises(LineInChosenSetError):
        score_ent(tokenize('a', '1'), part, lm_c, lm_l, lm_r)
    with pytest.raises(UnknownLineError):
        score_ent(tokenize('a', '9'), part, lm_c, lm_l, lm_r)
