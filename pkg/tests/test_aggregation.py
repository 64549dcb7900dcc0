"""Test language pools and score aggregation."""
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from seedcorpus.components.aggregation import (
    LanguagePool,
    aggregate_scores,
    build_pool,
    )
from seedcorpus.components.corpus import Language, read_metadata
from seedcorpus.core.exceptions import (
    InsufficientMetadataError,
    InvalidParameterError,
    MissingRowError,
    UnknownLanguageError,
    UnknownPolicyError,
    )

from tests.conftest import data_folder


class RowMatrix():
    """Score matrix stand-in holding fixed rows."""

    def __init__(self, rows):
        self._rows = {k: np.asarray(v, dtype=np.float64) for k, v in rows.items()}  # noqa: E501
        self.rows = sorted(rows)

    def row(self, lang):
        return self._rows[lang]


@pytest.fixture(name='neighbors_metadata')
def neighbors_metadata_():
    """Eleven languages around Frisian."""
    return read_metadata(data_folder / 'langs_neighbors.csv')


def test_sum_two_rows():
    """Test rows add up per line."""
    matrix = RowMatrix({'a': [1, 2], 'b': [3, 0]})
    assert aggregate_scores(matrix, ['a', 'b']).tolist() == [4.0, 2.0]


def test_singleton_pool_is_its_row():
    """Test a one-language pool returns a copy of that row."""
    matrix = RowMatrix({'a': [1.5, 2.5], 'b': [3, 0]})
    combined = aggregate_scores(matrix, ['a'])
    assert combined.tolist() == [1.5, 2.5]
    combined[0] = 9.0
    assert matrix.row('a')[0] == 1.5


def test_missing_row():
    """Test a pool member without a row."""
    with pytest.raises(MissingRowError):
        aggregate_scores(RowMatrix({'a': [1]}), ['a', 'z'])


def test_empty_pool():
    """Test aggregating over nothing."""
    with pytest.raises(InvalidParameterError):
        aggregate_scores(RowMatrix({'a': [1]}), [])


@given(st.permutations(['a', 'b', 'c', 'd', 'e']))
def test_member_order_does_not_matter(order):
    """Test the sum is bitwise identical for any member order."""
    rng = np.random.default_rng(11)
    matrix = RowMatrix({k: rng.random(20) * 10 ** i for i, k in enumerate('abcde')})  # noqa: E501
    reference = aggregate_scores(matrix, sorted(order))
    assert np.array_equal(aggregate_scores(matrix, order), reference)


def test_per_language(neighbors_metadata):
    """Test every language but the target."""
    pool = build_pool(neighbors_metadata, 'per_language', target='fry')
    assert len(pool) == 10
    assert 'fry' not in pool


@pytest.mark.parametrize(
    'k,expected',
    [
        (1, ('eng',)),
        (3, ('deu', 'eng', 'por')),
        ],
    )
def test_per_person(neighbors_metadata, k, expected):
    """Test the most-spoken languages."""
    pool = build_pool(neighbors_metadata, 'per_person', target='fry', k=k)
    assert pool.members == expected


def test_per_person_excludes_target(neighbors_metadata):
    """Test the target never votes for itself."""
    pool = build_pool(neighbors_metadata, 'per_person', target='eng', k=1)
    assert pool.members == ('por',)


@pytest.mark.parametrize(
    'k,expected',
    [
        (1, ('eng',)),
        (10, ('eng', 'por')),
        ],
    )
def test_per_family(neighbors_metadata, k, expected):
    """Test the top language of the largest families."""
    pool = build_pool(neighbors_metadata, 'per_family', target='fry', k=k)
    assert pool.members == expected


def test_per_family_single_family(fixture_corpus):
    """Test a corpus of one family collapses to one language."""
    pool = build_pool(fixture_corpus.metadata, 'per_family', target='fry')
    assert pool.members == ('eng',)


def test_per_neighbor(neighbors_metadata):
    """Test the declared neighbors of Frisian."""
    pool = build_pool(neighbors_metadata, 'per_neighbor', target='fry')
    assert pool.members == (
        'afr', 'deu', 'eng', 'fra', 'ita', 'nld', 'nor', 'por', 'ron', 'swe',
        )
    assert pool.target == 'fry'


def test_available_restricts_pool(neighbors_metadata, fixture_corpus):
    """Test pools keep only languages the corpus holds."""
    pool = build_pool(
        neighbors_metadata,
        'per_neighbor',
        target='fry',
        available=fixture_corpus.languages,
        )
    assert pool.members == ('afr', 'deu', 'eng', 'nld')


def test_unknown_policy(neighbors_metadata):
    """Test a policy outside the four."""
    with pytest.raises(UnknownPolicyError):
        build_pool(neighbors_metadata, 'per_continent', target='fry')


@pytest.mark.parametrize('target', ['xyz', None])
def test_per_neighbor_unknown_target(neighbors_metadata, target):
    """Test neighbors of a language without metadata."""
    with pytest.raises(UnknownLanguageError):
        build_pool(neighbors_metadata, 'per_neighbor', target=target)


def test_insufficient_metadata():
    """Test missing speakers, missing family, empty pools."""
    metadata = {
        'a': Language('a', family='X'),
        'b': Language('b', speakers=10),
        }
    with pytest.raises(InsufficientMetadataError):
        build_pool(metadata, 'per_person')
    with pytest.raises(InsufficientMetadataError):
        build_pool(metadata, 'per_family')
    with pytest.raises(InsufficientMetadataError):
        build_pool(metadata, 'per_neighbor', target='a')
    with pytest.raises(InsufficientMetadataError):
        build_pool({}, 'per_language')


def test_pool_size_positive(neighbors_metadata):
    """Test k below one."""
    with pytest.raises(InvalidParameterError):
        build_pool(neighbors_metadata, 'per_person', k=0)


def test_language_pool():
    """Test members are sorted and compared as a set."""
    pool = LanguagePool('per_person', ['por', 'eng', 'eng'], k=2)
    assert pool.members == ('eng', 'por')
    assert pool == LanguagePool('per_person', ['eng', 'por'])
    assert pool != LanguagePool('per_language', ['eng', 'por'])
    assert pool.describe() == 'per_person:eng;por'
